"""HTTP/JSON service over the linkage library.

Stateless endpoints under /api; identical requests produce byte-identical
responses.  Malformed input is a 400, structurally valid input that fails
domain validation (non-quadrilateral lengths, bad branch id, parameter out
of range) is a 422.  CORS is wide open: the explorer UI is the intended
client and nothing here carries secrets.
"""

from __future__ import annotations

from fastapi import FastAPI, Query
from fastapi.exceptions import RequestValidationError
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse
from pydantic import AliasChoices, BaseModel, Field

from .branches import enumerate_branches, trace_branch
from .errors import LinkageError
from .lengths import BarLengths, validate_lengths
from .projective import ProjReal
from .records import (
    branch_record,
    classify_record,
    config_record,
    infinity_record,
    report_record,
)
from .solve import solutions_at_infinity, solve_at_x

MAX_SAMPLES = 100_000


class ProjValue(BaseModel):
    num: float
    den: float = 1.0


class TraceRequest(BaseModel):
    lengths: list[float] = Field(min_length=4, max_length=4)
    branch: int = Field(default=1, validation_alias=AliasChoices("branch", "branch_id"))
    samples: int = Field(default=64, ge=2, le=MAX_SAMPLES)
    coordinate: str = "normalized"

    model_config = {"populate_by_name": True}


class SolveRequest(BaseModel):
    lengths: list[float] = Field(min_length=4, max_length=4)
    x: ProjValue


def _parse_lengths_query(raw: str) -> BarLengths:
    parts = raw.split(",")
    if len(parts) != 4:
        raise ValueError(f"expected 4 comma-separated lengths, got {len(parts)}")
    vals = [float(p) for p in parts]
    return validate_lengths(*vals)


def create_app() -> FastAPI:
    app = FastAPI(title="fourbar", version="0.1.0")
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["*"],
        allow_headers=["*"],
    )

    @app.exception_handler(RequestValidationError)
    async def _validation_handler(request, exc):
        return JSONResponse(
            status_code=400, content={"error": "validation", "detail": str(exc)}
        )

    @app.exception_handler(ValueError)
    async def _value_handler(request, exc):
        return JSONResponse(status_code=400, content={"error": "bad_value", "detail": str(exc)})

    @app.exception_handler(LinkageError)
    async def _domain_handler(request, exc):
        return JSONResponse(
            status_code=422, content={"error": type(exc).__name__, "detail": str(exc)}
        )

    @app.get("/api/classify")
    def classify_endpoint(lengths: str = Query(...), tol: float = Query(default=1e-9, ge=0.0)):
        return classify_record(_parse_lengths_query(lengths), tol)

    @app.post("/api/trace")
    def trace_endpoint(req: TraceRequest):
        bars = validate_lengths(*req.lengths)
        branches = enumerate_branches(bars)
        by_id = {d.branch_id: d for d in branches}
        if req.branch not in by_id:
            raise LinkageError(
                f"branch {req.branch} does not exist; this class has {len(branches)}"
            )
        desc = by_id[req.branch]
        samples = trace_branch(bars, desc, req.samples, req.coordinate)
        return {
            "branch": branch_record(desc),
            "records": [config_record(cfg, s) for s, cfg in samples],
        }

    @app.post("/api/solve")
    def solve_endpoint(req: SolveRequest):
        bars = validate_lengths(*req.lengths)
        x = ProjReal(req.x.num, req.x.den)
        return {"records": [config_record(cfg) for cfg in solve_at_x(bars, x)]}

    @app.get("/api/infinity")
    def infinity_endpoint(lengths: str = Query(...)):
        bars = _parse_lengths_query(lengths)
        return {
            "lengths": list(bars.as_tuple()),
            "solutions": [infinity_record(sol) for sol in solutions_at_infinity(bars)],
        }

    @app.get("/api/report")
    def report_endpoint(lengths: str = Query(...)):
        return report_record(_parse_lengths_query(lengths))

    @app.get("/api/branches")
    def branches_endpoint(lengths: str = Query(...)):
        bars = _parse_lengths_query(lengths)
        return {"branches": [branch_record(d) for d in enumerate_branches(bars)]}

    return app


app = create_app()
