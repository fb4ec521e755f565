"""Wire-format records shared by the CLI and the HTTP service.

Tangents are always serialized projectively as {num, den} pairs so the
point at infinity survives JSON; angles are radians.  Floats pass through
Python's shortest-round-trip repr, which preserves 17 significant digits in
both the JSON and CSV encodings.
"""

from __future__ import annotations

import io
import math
from typing import Any

from .analysis import self_intersected_flag, topology_report
from .branches import BranchDescriptor
from .geometry import Configuration
from .identities import identity_residuals
from .lengths import BarLengths, classify
from .projective import ProjReal
from .solve import InfinitySolution

CSV_COLUMNS = (
    "s",
    "x_num", "x_den", "y_num", "y_den", "z_num", "z_den", "w_num", "w_den",
    "rho_x", "rho_y", "rho_z", "rho_w",
    "Ax", "Ay", "Bx", "By", "Cx", "Cy", "Dx", "Dy",
    "u", "v", "self_intersected",
)


def proj_record(p: ProjReal) -> dict[str, float]:
    return {"num": p.num, "den": p.den}


def config_record(cfg: Configuration, s: float | None = None) -> dict[str, Any]:
    rec: dict[str, Any] = {}
    if s is not None:
        rec["s"] = s
    rec.update(
        x=proj_record(cfg.x),
        y=proj_record(cfg.y),
        z=proj_record(cfg.z),
        w=proj_record(cfg.w),
        rho_x=cfg.rho_x,
        rho_y=cfg.rho_y,
        rho_z=cfg.rho_z,
        rho_w=cfg.rho_w,
        vertices=[[v[0], v[1]] for v in cfg.vertices],
        u=cfg.u,
        v=cfg.v,
        self_intersected=self_intersected_flag(cfg),
    )
    return rec


def csv_rows(samples: list[tuple[float, Configuration]]) -> str:
    buf = io.StringIO()
    buf.write(",".join(CSV_COLUMNS) + "\n")
    for s, cfg in samples:
        av, bv, cv, dv = cfg.vertices
        cells = [
            s,
            cfg.x.num, cfg.x.den, cfg.y.num, cfg.y.den,
            cfg.z.num, cfg.z.den, cfg.w.num, cfg.w.den,
            cfg.rho_x, cfg.rho_y, cfg.rho_z, cfg.rho_w,
            av[0], av[1], bv[0], bv[1], cv[0], cv[1], dv[0], dv[1],
            cfg.u, cfg.v,
        ]
        row = ",".join(repr(v) for v in cells)
        buf.write(f"{row},{'true' if self_intersected_flag(cfg) else 'false'}\n")
    return buf.getvalue()


def _finite_or_none(v: float) -> float | None:
    return v if math.isfinite(v) else None


def branch_record(desc: BranchDescriptor) -> dict[str, Any]:
    # unbounded line domains serialize as nulls; Infinity is not valid JSON
    return {
        "branch": desc.branch_id,
        "kind": desc.param_kind.value,
        "class": desc.linkage_class.name,
        "t_offset_quarters": desc.t_offset_quarters,
        "quarter": desc.quarter,
        "s_domain": [_finite_or_none(desc.s_domain[0]), _finite_or_none(desc.s_domain[1])],
        "period": desc.period,
        "compact": desc.compact,
        "snap_points": list(desc.snap_points),
        "infinity_pattern": desc.infinity_pattern,
    }


def infinity_record(sol: InfinitySolution) -> dict[str, Any]:
    rec: dict[str, Any] = {
        "isolated": sol.isolated,
        "reachable": sol.reachable,
        "condition": sol.condition,
    }
    if sol.tangents is not None:
        x, y, z, w = sol.tangents
        rec.update(x=proj_record(x), y=proj_record(y), z=proj_record(z), w=proj_record(w))
    if sol.branch_id is not None:
        rec["branch"] = sol.branch_id
    return rec


def classify_record(lengths: BarLengths, rel_tol: float = 1e-9) -> dict[str, Any]:
    cls = classify(lengths, rel_tol)
    return {"class": cls.name, "orthodiagonal": cls.orthodiagonal}


def report_record(lengths: BarLengths) -> dict[str, Any]:
    rep = topology_report(lengths)
    idents = identity_residuals(lengths)
    return {
        "lengths": list(lengths.as_tuple()),
        "sigma": lengths.sigma,
        "class": rep.linkage_class.name,
        "orthodiagonal": rep.linkage_class.orthodiagonal,
        "finite_branches": rep.finite_branches,
        "finite_kinds": list(rep.finite_kinds),
        "infinity_circles": rep.infinity_circles,
        "infinity_isolated": rep.infinity_isolated,
        "grashof": rep.grashof,
        "grashof_margin": rep.grashof_margin,
        "fully_rotating": list(rep.fully_rotating),
        "identity_residuals": dict(idents.residuals),
        "max_identity_residual": idents.max_residual,
    }


def identities_record(lengths: BarLengths) -> dict[str, Any]:
    rep = identity_residuals(lengths)
    return {
        "lengths": list(lengths.as_tuple()),
        "residuals": dict(rep.residuals),
        "max_residual": rep.max_residual,
        "orthodiagonal_checked": rep.orthodiagonal_checked,
    }
