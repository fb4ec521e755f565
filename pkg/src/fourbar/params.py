"""Per-class parametrization data: amplitudes, moduli, phase shifts.

Away from the fully rational classes, each coordinate moves along a cosine,
exponential, or Jacobi-elliptic curve in a complex parameter t; a branch of
real configurations is a vertical line t = offset + i*s.  The data needed
to evaluate those curves:

* amplitudes p_x..p_w, real or positive-imaginary per the square-root
  convention, with p_x^2 = -g00/g20 and p_z^2 = -g00/g02 (the cyclic
  relabeling (beta, gamma, delta, alpha) gives p_y, p_w);
* for the elliptic class the invariant M = alpha beta gamma delta /
  ((sigma-alpha)...(sigma-delta)), whose position relative to 1 selects the
  cn-form (M > 1) or sn-form (M < 1) modulus;
* phase shifts theta_1, theta_2 = real multiples of the quarter period
  plus an imaginary log/inverse-dc part shared by both.

The real-offset and sign bookkeeping per amplitude pattern was validated
numerically against the geometric closure oracle over every pattern and
both M-regimes (see test suite); the imaginary part of the phase enters
with the opposite orientation whenever p_x is imaginary.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .coeffs import g_coeffs
from .elliptic import Modulus, inverse_dc
from .errors import WrongClass
from .lengths import BarLengths, LinkageClass, LinkageKind, classify
from .signed import Axis, SignedValue, signed_sqrt

_NO_AMPLITUDE = {LinkageKind.RHOMBUS, LinkageKind.ISOGRAM, LinkageKind.DELTOID_I}
_PHASED = {
    LinkageKind.CONIC_I,
    LinkageKind.CONIC_II,
    LinkageKind.CONIC_III,
    LinkageKind.ELLIPTIC,
}


class EllipticForm(Enum):
    CN_FORM = "cn"  # M > 1
    SN_FORM = "sn"  # M < 1


@dataclass(frozen=True, slots=True)
class EllipticData:
    M: float
    form: EllipticForm
    modulus: Modulus


@dataclass(frozen=True, slots=True)
class Amplitudes:
    p_x: SignedValue
    p_y: SignedValue
    p_z: SignedValue
    p_w: SignedValue
    # conic III parametrizes 1/x and 1/z, conic II 1/y and 1/w; the flagged
    # amplitudes amplify those reciprocal coordinates
    reciprocal_xz: bool = False
    reciprocal_yw: bool = False

    def axes_pattern(self) -> str:
        return "".join(
            "R" if p.is_real else "I" for p in (self.p_x, self.p_y, self.p_z, self.p_w)
        )


@dataclass(frozen=True, slots=True)
class PhaseShifts:
    """theta_1/theta_2 as integer quarter-period offsets plus a shared imaginary part.

    quarter is pi/2 for the conic classes and K for the elliptic class; the
    integer bookkeeping keeps the lattice arithmetic exact inside samplers.
    """

    re1_quarters: int
    re2_quarters: int
    imag: float
    quarter: float

    @property
    def theta1(self) -> complex:
        return complex(self.re1_quarters * self.quarter, self.imag)

    @property
    def theta2(self) -> complex:
        return complex(self.re2_quarters * self.quarter, self.imag)


def _require(kind_ok: bool, op: str, cls: LinkageClass) -> None:
    if not kind_ok:
        raise WrongClass(f"{op} is not defined for class {cls.name}")


def elliptic_data(lengths: BarLengths, cls: LinkageClass | None = None) -> EllipticData:
    """M, the selected form and its modulus data; elliptic class only."""
    cls = cls or classify(lengths)
    _require(cls.kind is LinkageKind.ELLIPTIC, "elliptic_data", cls)
    a, b, c, d = lengths.as_tuple()
    s = lengths.sigma
    prod = (s - a) * (s - b) * (s - c) * (s - d)
    M = a * b * c * d / prod
    g = g_coeffs(lengths)
    # cross-check: normalizing g by the amplitudes turns its x^2 z^2
    # coefficient into exactly M - 1, i.e. M - 1 = -g22 g00 / (g20 g02)
    tie = -g.g22 * g.g00 / (g.g20 * g.g02)
    if abs(tie - (M - 1.0)) > 1e-12 * max(abs(M - 1.0), 1.0):
        raise AssertionError(f"modulus invariant violated: {tie} vs {M - 1.0}")
    if M > 1.0:
        return EllipticData(M, EllipticForm.CN_FORM, Modulus.from_k(math.sqrt(1.0 - 1.0 / M)))
    return EllipticData(M, EllipticForm.SN_FORM, Modulus.from_k(math.sqrt(1.0 - M)))


def amplitudes(lengths: BarLengths, cls: LinkageClass | None = None) -> Amplitudes:
    """The four coordinate amplitudes; undefined for the rational classes.

    The base formulas are p_x^2 = -g00/g20, p_z^2 = -g00/g02 with p_y, p_w
    from the cyclic relabeling.  Where a coordinate enters its class
    parametrization reciprocally (y, w for conic II; x, z for conic III)
    the base formula collapses to zero and the returned amplitude is the
    product-ratio form amplifying the reciprocal coordinate instead, with
    the corresponding flag set.
    """
    cls = cls or classify(lengths)
    _require(cls.kind not in _NO_AMPLITUDE, "amplitudes", cls)
    a, b, c, d = lengths.as_tuple()
    if cls.kind is LinkageKind.CONIC_III:
        return Amplitudes(
            p_x=signed_sqrt(a * b / (c * d) - 1.0),
            p_y=signed_sqrt(b * c / (d * a) - 1.0),
            p_z=signed_sqrt(c * d / (a * b) - 1.0),
            p_w=signed_sqrt(d * a / (b * c) - 1.0),
            reciprocal_xz=True,
        )
    g = g_coeffs(lengths)
    p_x = signed_sqrt(-g.g00 / g.g20)
    p_z = signed_sqrt(-g.g00 / g.g02)
    if cls.kind is LinkageKind.CONIC_II:
        return Amplitudes(
            p_x=p_x,
            p_y=signed_sqrt(b * c / (d * a) - 1.0),
            p_z=p_z,
            p_w=signed_sqrt(d * a / (b * c) - 1.0),
            reciprocal_yw=True,
        )
    gc = g_coeffs(lengths.cycled())
    return Amplitudes(
        p_x=p_x,
        p_y=signed_sqrt(-gc.g00 / gc.g20),
        p_z=p_z,
        p_w=signed_sqrt(-gc.g00 / gc.g02),
    )


# Validated real-offset and sign table, keyed by the amplitude axes pattern.
# Entries are (re1, re2, sign_y, sign_w); offsets are in quarter periods.
_BASE_ROWS = {
    "RRII": (0, 1, 1.0, 1.0),
    "RIIR": (1, 0, 1.0, 1.0),
    "IRRI": (-1, 0, 1.0, -1.0),
    "IIRR": (0, -1, -1.0, 1.0),
}


def base_row(pattern: str) -> tuple[int, int, float, float]:
    try:
        return _BASE_ROWS[pattern]
    except KeyError:
        raise WrongClass(f"no phase row for amplitude pattern {pattern}") from None


def phase_shifts(lengths: BarLengths, cls: LinkageClass | None = None) -> PhaseShifts:
    """Phase shifts for the conic and elliptic classes.

    Conic: imaginary part (1/2) ln |(sqrt(ac) + sqrt(bd)) / (sqrt(ac) - sqrt(bd))|,
    real parts 0 or +-pi/2 per amplitude pattern.  Elliptic: imaginary part
    inverse_dc of the dn-target selected by the alpha+gamma vs sigma
    dichotomy, real parts 0 or +-K.  The imaginary orientation follows the
    axis of p_x.
    """
    cls = cls or classify(lengths)
    _require(cls.kind in _PHASED, "phase_shifts", cls)
    amps = amplitudes(lengths, cls)
    re1, re2, _, _ = base_row(amps.axes_pattern())
    orient = 1.0 if amps.p_x.is_real else -1.0
    a, b, c, d = lengths.as_tuple()
    if cls.kind is LinkageKind.ELLIPTIC:
        data = elliptic_data(lengths, cls)
        s = lengths.sigma
        if data.form is EllipticForm.CN_FORM:
            t_ac = (s - a) * (s - c) / (a * c)
            t_bd = (s - b) * (s - d) / (b * d)
        else:
            t_ac = a * c / ((s - a) * (s - c))
            t_bd = b * d / ((s - b) * (s - d))
        target = math.sqrt(t_ac) if t_ac >= 1.0 else math.sqrt(t_bd)
        imag = inverse_dc(target, data.modulus.k_prime)
        return PhaseShifts(re1, re2, orient * imag, data.modulus.K)
    rac, rbd = math.sqrt(a * c), math.sqrt(b * d)
    imag = 0.5 * math.log(abs((rac + rbd) / (rac - rbd)))
    return PhaseShifts(re1, re2, orient * imag, 0.5 * math.pi)
