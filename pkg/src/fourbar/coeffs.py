"""Coupling polynomials between joint tangents and between diagonals.

Three polynomial relations tie a linkage's coordinates together:

* adjacent tangents x, y:  f22 x^2 y^2 + f20 x^2 + 2 f11 x y + f02 y^2 + f00 = 0
* opposite tangents x, z:  g22 x^2 z^2 + g20 x^2 + g02 z^2 + g00 = 0
* diagonal lengths u, v:   u^4 v^2 + u^2 v^4 + h11 u^2 v^2 + h10 u^2 + h01 v^2 + h00 = 0

The relation between x and w is f with the bars relabeled (beta, alpha,
delta, gamma).  All coefficients are kept in raw length^2 (length^4/^6 for h)
units; tolerance comparisons normalize by sigma powers.

Evaluation is bihomogeneous on normalized projective representatives, so
points at infinity are handled without special cases.  Note the x^2 y^2,
x^2, y^2, 1 monomials bihomogenize to x1^2 y1^2, x1^2 y2^2, x2^2 y1^2,
x2^2 y2^2 respectively.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

from .errors import DegenerateIdentically
from .lengths import BarLengths
from .projective import ProjReal

_COEFF_RTOL = 1e-12


@dataclass(frozen=True, slots=True)
class AdjCoeffs:
    f22: float
    f20: float
    f11: float
    f02: float
    f00: float


@dataclass(frozen=True, slots=True)
class OppCoeffs:
    g22: float
    g20: float
    g02: float
    g00: float


@dataclass(frozen=True, slots=True)
class DiagCoeffs:
    h11: float
    h10: float
    h01: float
    h00: float


def _check_forms(factored: float, product: float, scale: float, what: str) -> None:
    if abs(factored - product) > _COEFF_RTOL * max(abs(factored), abs(product), scale):
        raise AssertionError(
            f"{what}: factored form {factored!r} and product form {product!r} disagree"
        )


def f_coeffs(lengths: BarLengths) -> AdjCoeffs:
    """Coefficients of the adjacent-tangent relation in (x, y)."""
    a, b, c, d = lengths.as_tuple()
    s = lengths.sigma
    s2 = s * s
    f22 = (s - b) * (s - b - d)
    f20 = (s - a) * (s - a - d)
    f11 = -a * c
    f02 = (s - c) * (s - c - d)
    f00 = s * (s - d)
    _check_forms(f22, 0.25 * (a - b + c + d) * (a - b + c - d), s2, "f22")
    _check_forms(f20, 0.25 * (-a + b + c + d) * (-a + b + c - d), s2, "f20")
    _check_forms(f02, 0.25 * (a + b - c - d) * (a + b - c + d), s2, "f02")
    _check_forms(f00, 0.25 * (a + b + c + d) * (a + b + c - d), s2, "f00")
    return AdjCoeffs(f22, f20, f11, f02, f00)


def f_coeffs_xw(lengths: BarLengths) -> AdjCoeffs:
    """Coefficients of the adjacent-tangent relation in (x, w)."""
    return f_coeffs(_relabel(lengths, "badc"))


def g_coeffs(lengths: BarLengths) -> OppCoeffs:
    """Coefficients of the opposite-tangent relation in (x, z)."""
    a, b, c, d = lengths.as_tuple()
    s = lengths.sigma
    s2 = s * s
    g22 = (s - a - c) * (s - b - c)
    g20 = (s - a) * (s - b)
    g02 = -(s - c) * (s - d)
    g00 = s * (s - a - b)
    _check_forms(g22, 0.25 * (a - b + c - d) * (-a + b + c - d), s2, "g22")
    _check_forms(g20, 0.25 * (-a + b + c + d) * (a - b + c + d), s2, "g20")
    _check_forms(g02, 0.25 * (-a - b + c - d) * (a + b + c - d), s2, "g02")
    _check_forms(g00, 0.25 * (a + b + c + d) * (-a - b + c + d), s2, "g00")
    return OppCoeffs(g22, g20, g02, g00)


def h_coeffs(lengths: BarLengths) -> DiagCoeffs:
    """Coefficients of the diagonal-length relation in (u, v).

    Derived from the Cayley-Menger determinant of the four joints; invariant
    under the conjugate map (sigma - alpha, ..., sigma - delta).
    """
    a2, b2, c2, d2 = (v * v for v in lengths.as_tuple())
    return DiagCoeffs(
        h11=-(a2 + b2 + c2 + d2),
        h10=-(b2 - c2) * (d2 - a2),
        h01=-(a2 - b2) * (c2 - d2),
        h00=(a2 * c2 - b2 * d2) * (a2 - b2 + c2 - d2),
    )


def _relabel(lengths: BarLengths, order: str) -> BarLengths:
    named = dict(zip("abcd", lengths.as_tuple()))
    a, b, c, d = (named[ch] for ch in order)
    return BarLengths(a, b, c, d, 0.5 * (a + b + c + d))


def eval_f(c: AdjCoeffs, x: ProjReal, y: ProjReal) -> float:
    x1, x2, y1, y2 = x.num, x.den, y.num, y.den
    return (
        c.f22 * x1 * x1 * y1 * y1
        + c.f20 * x1 * x1 * y2 * y2
        + 2.0 * c.f11 * x1 * y1 * x2 * y2
        + c.f02 * x2 * x2 * y1 * y1
        + c.f00 * x2 * x2 * y2 * y2
    )


def eval_g(c: OppCoeffs, x: ProjReal, z: ProjReal) -> float:
    x1, x2, z1, z2 = x.num, x.den, z.num, z.den
    return (
        c.g22 * x1 * x1 * z1 * z1
        + c.g20 * x1 * x1 * z2 * z2
        + c.g02 * x2 * x2 * z1 * z1
        + c.g00 * x2 * x2 * z2 * z2
    )


def eval_h(c: DiagCoeffs, u: float, v: float) -> float:
    u2, v2 = u * u, v * v
    return u2 * v2 * (u2 + v2) + c.h11 * u2 * v2 + c.h10 * u2 + c.h01 * v2 + c.h00


class QuadraticRoots(NamedTuple):
    """Projective roots of a real binary quadratic; no_real marks a complex pair."""

    roots: tuple[ProjReal, ...]
    no_real: bool


def solve_projective_quadratic(qa: float, qb: float, qc: float) -> QuadraticRoots:
    """Roots of qa*t1^2 + 2*qb*t1*t2 + qc*t2^2 = 0 on the projective line.

    Roots at infinity appear when the leading coefficient vanishes; a strictly
    negative discriminant yields an empty root list flagged no_real.
    """
    scale = max(abs(qa), abs(qb), abs(qc))
    if scale == 0.0:
        raise DegenerateIdentically("all three quadratic coefficients vanish")
    tiny = 1e-13 * scale
    a_zero = abs(qa) <= tiny
    b_zero = abs(qb) <= tiny
    c_zero = abs(qc) <= tiny
    inf = ProjReal.infinity()
    if a_zero and b_zero:
        # qc t2^2 = 0 with qc != 0: double root at infinity
        return QuadraticRoots((inf,), False)
    if a_zero:
        if c_zero:
            return QuadraticRoots((inf, ProjReal(0.0)), False)
        return QuadraticRoots((inf, ProjReal(-qc, 2.0 * qb)), False)
    disc = qb * qb - qa * qc
    if disc < -1e-12 * scale * scale:
        return QuadraticRoots((), True)
    if disc <= 1e-12 * scale * scale:
        return QuadraticRoots((ProjReal(-qb, qa),), False)
    r = math.sqrt(disc)
    big = -qb - r if qb >= 0.0 else -qb + r
    return QuadraticRoots((ProjReal(big, qa), ProjReal(qc, big)), False)


def solve_f_for_second(c: AdjCoeffs, x: ProjReal) -> QuadraticRoots:
    """Solve the adjacent relation for the second tangent at a given first tangent."""
    x1, x2 = x.num, x.den
    qa = c.f22 * x1 * x1 + c.f02 * x2 * x2
    qb = c.f11 * x1 * x2
    qc = c.f20 * x1 * x1 + c.f00 * x2 * x2
    return solve_projective_quadratic(qa, qb, qc)


def solve_g_for_opposite(c: OppCoeffs, x: ProjReal) -> tuple[ProjReal, ...]:
    """The +- pair of opposite tangents at a given x; empty when complex."""
    x1, x2 = x.num, x.den
    qa = c.g22 * x1 * x1 + c.g02 * x2 * x2
    qc = c.g20 * x1 * x1 + c.g00 * x2 * x2
    scale = max(abs(qa), abs(qc))
    if scale == 0.0:
        raise DegenerateIdentically("opposite-tangent relation vanished identically")
    tiny = 1e-13 * scale
    if abs(qa) <= tiny:
        # z at infinity; +inf and -inf are the same projective point
        return (ProjReal.infinity(),)
    ratio = -qc / qa
    if abs(qc) <= tiny:
        return (ProjReal(0.0),)
    if ratio < 0.0:
        return ()
    s = math.sqrt(ratio)
    return (ProjReal(s), ProjReal(-s))
