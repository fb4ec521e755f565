"""Command-line interface: classification, tracing, solving, reports, service.

Data goes to stdout as JSON (or CSV for trace --format csv); diagnostics go
to stderr.  Exit codes: 0 success, 1 domain error (invalid lengths and the
like), 2 argument errors.
"""

from __future__ import annotations

import argparse
import json
import math
import sys

from .branches import enumerate_branches, trace_branch
from .errors import LinkageError
from .lengths import BarLengths, validate_lengths
from .projective import ProjReal
from .records import (
    branch_record,
    classify_record,
    config_record,
    csv_rows,
    identities_record,
    infinity_record,
    report_record,
)
from .solve import solutions_at_infinity, solve_at_x


def _lengths_arg(raw: str) -> tuple[float, ...]:
    parts = raw.split(",")
    if len(parts) != 4:
        raise argparse.ArgumentTypeError("expected 4 comma-separated lengths, e.g. 1,2,3,4")
    try:
        return tuple(float(p) for p in parts)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _x_arg(raw: str) -> ProjReal:
    if raw.strip().lower() in ("inf", "infinity", "oo"):
        return ProjReal.infinity()
    try:
        return ProjReal(float(raw))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fourbar", description="planar 4-bar linkage configuration spaces"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_lengths(p):
        p.add_argument("--lengths", type=_lengths_arg, required=True, metavar="a,b,c,d")

    p = sub.add_parser("classify", help="linkage class and orthodiagonal flag")
    add_lengths(p)
    p.add_argument("--tol", type=float, default=1e-9)

    p = sub.add_parser("trace", help="sample one branch of the configuration space")
    add_lengths(p)
    p.add_argument("--branch", type=int, default=1)
    p.add_argument("--samples", type=int, default=64)
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("--coordinate", choices=("normalized", "rho_x", "s"), default="normalized")

    p = sub.add_parser("solve", help="configurations at a given first tangent")
    add_lengths(p)
    p.add_argument("--x", type=_x_arg, required=True, metavar="NUM|inf")

    p = sub.add_parser("infinity", help="solutions at infinity with reachability")
    add_lengths(p)

    p = sub.add_parser("report", help="topology report, Grashof flag, identity residuals")
    add_lengths(p)

    p = sub.add_parser("identities", help="residual table of the length identities")
    add_lengths(p)

    p = sub.add_parser("branches", help="list branch descriptors")
    add_lengths(p)

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--port", type=int, default=8080)
    p.add_argument("--host", default="127.0.0.1")
    return parser


def _emit(data) -> None:
    # allow_nan=False keeps the output strict JSON; nothing non-finite may leak
    json.dump(data, sys.stdout, indent=2, allow_nan=False)
    sys.stdout.write("\n")


def _run(args) -> int:
    if args.command == "serve":
        import uvicorn

        from .service import app

        uvicorn.run(app, host=args.host, port=args.port)
        return 0

    bars = validate_lengths(*args.lengths)
    if args.command == "classify":
        _emit(classify_record(bars, args.tol))
    elif args.command == "trace":
        descs = {d.branch_id: d for d in enumerate_branches(bars)}
        if args.branch not in descs:
            raise LinkageError(f"branch {args.branch} does not exist; class has {len(descs)}")
        if not 2 <= args.samples <= 100_000:
            raise LinkageError("samples must be between 2 and 100000")
        samples = trace_branch(bars, descs[args.branch], args.samples, args.coordinate)
        if args.format == "csv":
            sys.stdout.write(csv_rows(samples))
        else:
            _emit(
                {
                    "branch": branch_record(descs[args.branch]),
                    "records": [config_record(cfg, s) for s, cfg in samples],
                }
            )
    elif args.command == "solve":
        _emit({"records": [config_record(c) for c in solve_at_x(bars, args.x)]})
    elif args.command == "infinity":
        _emit(
            {
                "lengths": list(bars.as_tuple()),
                "solutions": [infinity_record(s) for s in solutions_at_infinity(bars)],
            }
        )
    elif args.command == "report":
        _emit(report_record(bars))
    elif args.command == "identities":
        _emit(identities_record(bars))
    elif args.command == "branches":
        _emit({"branches": [branch_record(d) for d in enumerate_branches(bars)]})
    return 0


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return _run(args)
    except LinkageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


cli_main = main


if __name__ == "__main__":
    sys.exit(main())
