"""Branch descriptors and samplers for every linkage class.

The real configuration space splits into connected branches:

* rhombus / isogram / deltoid I: rational circles in the angle rho_x,
  plus folded-flat circles where two tangents sit at infinity;
* deltoid II and the conic classes: two lines traced by t = offset + i s
  with cosine/exponential coordinate curves;
* elliptic: two closed curves traced the same way with cn (M > 1) or
  sn (M < 1) coordinate curves, s-periodic with period 4K' resp. 2K'.

A branch is sampled at a real parameter s (an angle for the circle kinds).
Every sample is validated against the geometric closure oracle before it is
returned; a failure raises ResidualTooLarge and indicates a phase-table
defect, not a caller error.  Snap points are the parameters where x passes
through 0 or infinity; sampling exactly on one raises SnapPoint so chart-
aware callers can take one-sided limits instead.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache

from .coeffs import g_coeffs
from .elliptic import cn_quarter_shift, sn_quarter_shift
from .errors import OutOfDomain, ResidualTooLarge, SnapPoint
from .geometry import Configuration, configuration_from_tangents
from .lengths import BarLengths, LinkageClass, LinkageKind, classify
from .params import Amplitudes, EllipticForm, PhaseShifts, amplitudes, base_row, elliptic_data, phase_shifts
from .projective import ProjReal
from .signed import signed_sqrt

_TRIG_WARP = 1.5  # tanh-warp scale mapping the unit interval onto a line branch
_MAX_TRIG_S = 700.0  # beyond this cosh/exp overflow double precision


class BranchKind(Enum):
    RATIONAL_CIRCLE = "rational_circle"
    HYPERBOLIC_LINE = "hyperbolic_line"  # reserved: real chart of the trig lines
    TRIG_LINE = "trig_line"
    ELLIPTIC_CN = "elliptic_cn"
    ELLIPTIC_SN = "elliptic_sn"
    INFINITY_CIRCLE = "infinity_circle"


@dataclass(frozen=True, slots=True)
class BranchDescriptor:
    linkage_class: LinkageClass
    branch_id: int
    param_kind: BranchKind
    t_offset_quarters: int
    quarter: float
    s_domain: tuple[float, float]
    period: float | None
    compact: bool
    snap_points: tuple[float, ...]
    # for folded-flat circles: which tangent pair sits at infinity
    infinity_pattern: str | None = None

    @property
    def t_offset(self) -> float:
        return self.t_offset_quarters * self.quarter

    def is_finite_branch(self) -> bool:
        return self.param_kind is not BranchKind.INFINITY_CIRCLE


# ---------------------------------------------------------------------------
# plans: per-lengths parametrization bookkeeping, cached on the frozen input


@dataclass(frozen=True)
class _CurvePlan:
    kind: LinkageKind
    amps: Amplitudes
    phases: PhaseShifts | None
    sign_y: float
    sign_w: float
    orient: float  # +1 when p_x is real, -1 otherwise
    t1: int  # chart offset of branch 1, in quarter periods
    form: EllipticForm | None = None
    modulus_k: float = 0.0
    s_period: float | None = None


@lru_cache(maxsize=256)
def _plan(lengths: BarLengths) -> _CurvePlan:
    cls = classify(lengths)
    kind = cls.kind
    amps = amplitudes(lengths, cls)
    orient = 1.0 if amps.p_x.is_real else -1.0
    a, b, c, d = lengths.as_tuple()
    if kind is LinkageKind.DELTOID_II:
        return _CurvePlan(kind, amps, None, 1.0, 1.0, orient, 0 if amps.p_x.is_real else 3)
    phases = phase_shifts(lengths, cls)
    _, _, sy, sw = base_row(amps.axes_pattern())
    if kind is LinkageKind.CONIC_II:
        sgn = 1.0 if (a + b - c - d) > 0 else -1.0
        sy, sw = sgn * sy, sgn * sw
    elif kind is LinkageKind.CONIC_III:
        sgn = 1.0 if (-a + b + c - d) > 0 else -1.0
        sy, sw = -sgn * sy, sgn * sw
    if kind is LinkageKind.ELLIPTIC:
        data = elliptic_data(lengths, cls)
        if data.form is EllipticForm.CN_FORM:
            t1 = 0 if amps.p_x.is_real else 3
            period = 4.0 * data.modulus.K_prime
        else:
            t1 = 1 if amps.p_x.is_real else 0
            period = 2.0 * data.modulus.K_prime
        return _CurvePlan(
            kind, amps, phases, sy, sw, orient, t1,
            form=data.form, modulus_k=data.modulus.k, s_period=period,
        )
    return _CurvePlan(kind, amps, phases, sy, sw, orient, 0 if amps.p_x.is_real else 3)


# ---------------------------------------------------------------------------
# complex -> projective with the imaginary-residue policy


def _to_proj(value: complex, den: float = 1.0) -> ProjReal:
    if abs(value.imag) > 1e-9 * (1.0 + abs(value.real)):
        raise ResidualTooLarge(abs(value.imag), 1e-9 * (1.0 + abs(value.real)))
    return ProjReal(value.real, den)


def _to_proj_inv(value: complex) -> ProjReal:
    if abs(value.imag) > 1e-9 * (1.0 + abs(value.real)):
        raise ResidualTooLarge(abs(value.imag), 1e-9 * (1.0 + abs(value.real)))
    return ProjReal(1.0, value.real)


def _cos_quarter(m: int, v: float) -> complex:
    """cos(m pi/2 + i v)."""
    return {
        0: complex(math.cosh(v), 0.0),
        1: complex(0.0, -math.sinh(v)),
        2: complex(-math.cosh(v), 0.0),
        3: complex(0.0, math.sinh(v)),
    }[m % 4]


_I_POWER = {0: complex(1, 0), 1: complex(0, 1), 2: complex(-1, 0), 3: complex(0, -1)}


# ---------------------------------------------------------------------------
# per-class tangent evaluation


def _rational_tangents(lengths: BarLengths, kind: LinkageKind, branch_id: int, theta: float):
    a, b, _, _ = lengths.as_tuple()
    x = ProjReal.from_angle(theta)
    x1, x2 = x.num, x.den
    if kind is LinkageKind.RHOMBUS or (kind is LinkageKind.ISOGRAM and branch_id == 1):
        return x, x.reciprocal(), x, x.reciprocal()
    if kind is LinkageKind.ISOGRAM:
        coef = (a + b) / (a - b)
        y = ProjReal(coef * x2, x1)
        return x, y, -x, -y
    # deltoid I
    y = ProjReal((b - a) * x1 * x1 + (b + a) * x2 * x2, 2.0 * a * x1 * x2)
    w = ProjReal((a - b) * x1 * x1 + (a + b) * x2 * x2, 2.0 * b * x1 * x2)
    return x, y, x, w


def _infinity_tangents(pattern: str, theta: float):
    free = ProjReal.from_angle(theta)
    inf = ProjReal.infinity()
    if pattern == "y_w_infinite":
        return free, inf, -free, inf
    return inf, free, inf, -free  # x_z_infinite


def _trig_tangents(lengths: BarLengths, plan: _CurvePlan, branch_id: int, s: float):
    t = plan.t1 + (0 if branch_id == 1 else 2)
    px, py, pz, pw = plan.amps.p_x, plan.amps.p_y, plan.amps.p_z, plan.amps.p_w
    x_val = px.as_complex() * _cos_quarter(t, s)
    if plan.kind is LinkageKind.DELTOID_II:
        b, c = lengths.beta, lengths.gamma
        q = signed_sqrt((b + c) / (b - c))
        y_val = q.as_complex() * _I_POWER[t % 4] * math.exp(-plan.orient * s)
        z_val = pz.as_complex() * _cos_quarter(t + 1, s)
        y = _to_proj(y_val)
        return _to_proj(x_val), y, _to_proj(z_val), y
    ph = plan.phases
    v = s - ph.imag
    y_val = plan.sign_y * py.as_complex() * _cos_quarter(t - ph.re1_quarters, v)
    w_val = plan.sign_w * pw.as_complex() * _cos_quarter(t - ph.re2_quarters, v)
    if plan.kind is LinkageKind.CONIC_I:
        z_val = pz.as_complex() * _cos_quarter(t + 1, s)
        return _to_proj(x_val), _to_proj(y_val), _to_proj(z_val), _to_proj(w_val)
    z_val = pz.as_complex() * _cos_quarter(t - 1, s)
    if plan.kind is LinkageKind.CONIC_II:
        return _to_proj(x_val), _to_proj_inv(y_val), _to_proj(z_val), _to_proj_inv(w_val)
    # conic III: reciprocal x and z charts
    return _to_proj_inv(-x_val), _to_proj(y_val), _to_proj_inv(z_val), _to_proj(w_val)


def _elliptic_tangents(plan: _CurvePlan, branch_id: int, s: float):
    t = plan.t1 + (0 if branch_id == 1 else 2)
    shift = cn_quarter_shift if plan.form is EllipticForm.CN_FORM else sn_quarter_shift
    k = plan.modulus_k
    ph = plan.phases
    v = s - ph.imag
    nx, dx = shift(t, s, k)
    ny, dy = shift(t - ph.re1_quarters, v, k)
    nz, dz = shift(t + 1, s, k)
    nw, dw = shift(t - ph.re2_quarters, v, k)
    return (
        _to_proj(plan.amps.p_x.as_complex() * nx, dx),
        _to_proj(plan.sign_y * plan.amps.p_y.as_complex() * ny, dy),
        _to_proj(plan.amps.p_z.as_complex() * nz, dz),
        _to_proj(plan.sign_w * plan.amps.p_w.as_complex() * nw, dw),
    )


# ---------------------------------------------------------------------------
# enumeration


def _snap_points_trig(plan: _CurvePlan) -> tuple[float, ...]:
    # x (conic III: 1/x) crosses zero at s = 0 exactly when p_x is imaginary
    return (0.0,) if not plan.amps.p_x.is_real else ()


def _snap_points_elliptic(plan: _CurvePlan, kp_quarter: float) -> tuple[float, ...]:
    if plan.form is EllipticForm.CN_FORM:
        if plan.t1 % 2 == 0:  # x = +-p_x / cn(s; k'): poles at K', 3K'
            return (kp_quarter, 3.0 * kp_quarter)
        return (0.0, 2.0 * kp_quarter)  # x ~ sd(s; k'): zeros
    if plan.t1 % 2 == 1:  # x = +-p_x / dn: never 0 or infinite
        return ()
    return (0.0, kp_quarter)  # x ~ sc(s; k'): zero at 0, pole at K'


def enumerate_branches(lengths: BarLengths, rel_tol: float = 1e-9) -> list[BranchDescriptor]:
    """All connected branches of the configuration space, finite ones first."""
    cls = classify(lengths, rel_tol)
    kind = cls.kind
    circle = dict(
        quarter=0.0, s_domain=(-math.pi, math.pi), period=2.0 * math.pi,
        compact=True, snap_points=(0.0, math.pi), t_offset_quarters=0,
    )
    out: list[BranchDescriptor] = []

    def add(branch_kind: BranchKind, **kw):
        out.append(BranchDescriptor(cls, len(out) + 1, branch_kind, **kw))

    if kind in (LinkageKind.RHOMBUS, LinkageKind.ISOGRAM, LinkageKind.DELTOID_I):
        add(BranchKind.RATIONAL_CIRCLE, **circle)
        if kind is LinkageKind.ISOGRAM:
            add(BranchKind.RATIONAL_CIRCLE, **circle)
        if kind is LinkageKind.RHOMBUS:
            add(BranchKind.INFINITY_CIRCLE, **circle, infinity_pattern="y_w_infinite")
            add(BranchKind.INFINITY_CIRCLE, **dict(circle, snap_points=()), infinity_pattern="x_z_infinite")
        elif kind is LinkageKind.DELTOID_I:
            add(BranchKind.INFINITY_CIRCLE, **circle, infinity_pattern="y_w_infinite")
        return out

    plan = _plan(lengths)
    if kind is LinkageKind.ELLIPTIC:
        data = elliptic_data(lengths, cls)
        branch_kind = (
            BranchKind.ELLIPTIC_CN if data.form is EllipticForm.CN_FORM else BranchKind.ELLIPTIC_SN
        )
        snaps = _snap_points_elliptic(plan, data.modulus.K_prime)
        for t1 in (plan.t1, plan.t1 + 2):
            add(
                branch_kind,
                t_offset_quarters=t1,
                quarter=data.modulus.K,
                s_domain=(0.0, plan.s_period),
                period=plan.s_period,
                compact=True,
                snap_points=snaps,
            )
        return out

    # deltoid II and the conics: two noncompact lines
    quarter = 0.5 * math.pi
    snaps = _snap_points_trig(plan)
    for t1 in (plan.t1, plan.t1 + 2):
        add(
            BranchKind.TRIG_LINE,
            t_offset_quarters=t1,
            quarter=quarter,
            s_domain=(-math.inf, math.inf),
            period=None,
            compact=False,
            snap_points=snaps,
        )
    if kind is LinkageKind.DELTOID_II:
        add(BranchKind.INFINITY_CIRCLE, **dict(circle, snap_points=()), infinity_pattern="x_z_infinite")
    return out


# ---------------------------------------------------------------------------
# sampling


def _reduce_periodic(s: float, period: float) -> float:
    r = math.fmod(s, period)
    return r + period if r < 0.0 else r


def _check_snap(desc: BranchDescriptor, s: float) -> None:
    scale = desc.period if desc.period else max(1.0, abs(s))
    for snap in desc.snap_points:
        delta = s - snap
        if desc.period:
            delta = _reduce_periodic(delta + 0.5 * desc.period, desc.period) - 0.5 * desc.period
        if abs(delta) <= 1e-12 * scale:
            raise SnapPoint(f"parameter {s!r} sits on the snap point {snap!r}")


def sample_branch(
    lengths: BarLengths,
    desc: BranchDescriptor,
    s: float,
    closure_tol: float | None = None,
) -> Configuration:
    """Evaluate the branch at parameter s and validate it geometrically."""
    if not math.isfinite(s):
        raise OutOfDomain(f"parameter must be finite, got {s!r}")
    kind = desc.linkage_class.kind
    if desc.param_kind in (BranchKind.RATIONAL_CIRCLE, BranchKind.INFINITY_CIRCLE):
        theta = _reduce_periodic(s + math.pi, 2.0 * math.pi) - math.pi
        _check_snap(desc, theta)
        if desc.param_kind is BranchKind.INFINITY_CIRCLE:
            x, y, z, w = _infinity_tangents(desc.infinity_pattern, theta)
        else:
            x, y, z, w = _rational_tangents(lengths, kind, desc.branch_id, theta)
    elif desc.param_kind is BranchKind.TRIG_LINE:
        if abs(s) > _MAX_TRIG_S:
            raise OutOfDomain(f"|s| > {_MAX_TRIG_S} overflows the hyperbolic chart")
        _check_snap(desc, s)
        x, y, z, w = _trig_tangents(lengths, _plan(lengths), desc.branch_id, s)
    else:
        s_red = _reduce_periodic(s, desc.period)
        _check_snap(desc, s_red)
        x, y, z, w = _elliptic_tangents(_plan(lengths), desc.branch_id, s_red)
    return configuration_from_tangents(lengths, x, y, z, w, tol=closure_tol)


def normalized_to_param(desc: BranchDescriptor, u: float) -> float:
    """Map the uniform coordinate u in [0, 1) onto the branch parameter.

    Compact branches wrap around their period; noncompact lines use a
    tanh-style warp so the unit interval covers the whole line.
    """
    if not 0.0 <= u < 1.0:
        raise OutOfDomain(f"normalized coordinate must lie in [0, 1), got {u!r}")
    if desc.param_kind in (BranchKind.RATIONAL_CIRCLE, BranchKind.INFINITY_CIRCLE):
        return -math.pi + 2.0 * math.pi * u
    if desc.compact:
        return desc.period * u
    if u == 0.0:
        raise OutOfDomain("normalized coordinate 0 maps to s = -infinity on a line branch")
    return _TRIG_WARP * math.atanh(2.0 * u - 1.0)


def trace_branch(
    lengths: BarLengths,
    desc: BranchDescriptor,
    samples: int,
    coordinate: str = "normalized",
) -> list[tuple[float, Configuration]]:
    """Sample a branch on a regular grid of its coordinate.

    coordinate 'normalized' spaces samples uniformly over [0, 1) (offset by
    half a step on noncompact branches to avoid both warp endpoints);
    'rho_x' and 's' expose the raw branch parameter directly.
    """
    if samples < 2:
        raise OutOfDomain("samples must be >= 2")
    if coordinate not in ("normalized", "rho_x", "s"):
        raise OutOfDomain(f"unknown coordinate {coordinate!r}")
    if coordinate == "rho_x" and desc.param_kind not in (
        BranchKind.RATIONAL_CIRCLE,
        BranchKind.INFINITY_CIRCLE,
    ):
        raise OutOfDomain("rho_x coordinate applies only to the circle-kind branches")
    out: list[tuple[float, Configuration]] = []
    for i in range(samples):
        if coordinate == "normalized":
            u = (i + 0.5) / samples if not desc.compact else i / samples
            s = normalized_to_param(desc, u)
        else:
            if desc.compact:
                lo, hi = desc.s_domain
                s = lo + (hi - lo) * i / samples
            else:
                s = -3.0 + 6.0 * i / (samples - 1)
        try:
            cfg = sample_branch(lengths, desc, s)
        except SnapPoint:
            nudge = 1e-9 * (desc.period if desc.period else 1.0)
            s += nudge
            cfg = sample_branch(lengths, desc, s)
        out.append((s, cfg))
    return out
