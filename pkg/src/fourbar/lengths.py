"""Bar lengths: validation, the eight-class taxonomy, conjugates, strip switching.

A quadruple (alpha, beta, gamma, delta) of positive reals is realizable as a
planar 4-bar linkage iff each bar is strictly shorter than the other three
combined.  The class of the linkage is decided by which of the three signed
combinations

    d1 = alpha - beta + gamma - delta
    d2 = alpha - beta - gamma + delta
    d3 = alpha + beta - gamma - delta

vanish; this is equivalent to the degeneracy pattern of the coupling
polynomial between adjacent half-angle tangents.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .errors import NonPositiveLength, QuadrilateralInequalityViolated
from .projective import ProjReal

_BAR_NAMES = ("alpha", "beta", "gamma", "delta")


@dataclass(frozen=True, slots=True)
class BarLengths:
    """Validated bar lengths with the derived semi-perimeter sigma."""

    alpha: float
    beta: float
    gamma: float
    delta: float
    sigma: float

    def as_tuple(self) -> tuple[float, float, float, float]:
        return (self.alpha, self.beta, self.gamma, self.delta)

    def cycled(self) -> "BarLengths":
        """Relabel starting one joint further around: (beta, gamma, delta, alpha)."""
        return validate_lengths(self.beta, self.gamma, self.delta, self.alpha)

    def d_values(self) -> tuple[float, float, float]:
        a, b, c, d = self.as_tuple()
        return (a - b + c - d, a - b - c + d, a + b - c - d)


class LinkageKind(enum.Enum):
    RHOMBUS = "rhombus"
    ISOGRAM = "isogram"
    DELTOID_I = "deltoid_i"
    DELTOID_II = "deltoid_ii"
    CONIC_I = "conic_i"
    CONIC_II = "conic_ii"
    CONIC_III = "conic_iii"
    ELLIPTIC = "elliptic"


@dataclass(frozen=True, slots=True)
class LinkageClass:
    kind: LinkageKind
    orthodiagonal: bool = False

    @property
    def name(self) -> str:
        return self.kind.value


def validate_lengths(alpha: float, beta: float, gamma: float, delta: float) -> BarLengths:
    """Check positivity and the four strict quadrilateral inequalities."""
    vals = (float(alpha), float(beta), float(gamma), float(delta))
    for name, v in zip(_BAR_NAMES, vals):
        if not math.isfinite(v) or v <= 0.0:
            raise NonPositiveLength(f"bar {name} must be finite and positive, got {v!r}")
    total = sum(vals)
    for name, v in zip(_BAR_NAMES, vals):
        if v >= total - v:
            raise QuadrilateralInequalityViolated(name)
    return BarLengths(*vals, sigma=0.5 * total)


def classify(lengths: BarLengths, rel_tol: float = 1e-9) -> LinkageClass:
    """Classify by the zero pattern of (d1, d2, d3).

    A combination counts as zero iff |d_i| <= rel_tol * sigma.  Classification
    is inherently discontinuous, so the tolerance is an explicit argument.
    """
    if rel_tol < 0.0:
        raise ValueError("rel_tol must be nonnegative")
    d1, d2, d3 = lengths.d_values()
    thr = rel_tol * lengths.sigma
    z = (abs(d1) <= thr, abs(d2) <= thr, abs(d3) <= thr)
    kind = {
        (True, True, True): LinkageKind.RHOMBUS,
        (False, True, True): LinkageKind.ISOGRAM,
        (True, False, True): LinkageKind.DELTOID_I,
        (True, True, False): LinkageKind.DELTOID_II,
        (True, False, False): LinkageKind.CONIC_I,
        (False, True, False): LinkageKind.CONIC_II,
        (False, False, True): LinkageKind.CONIC_III,
        (False, False, False): LinkageKind.ELLIPTIC,
    }[z]
    ortho = False
    if kind is LinkageKind.ELLIPTIC:
        a, b, c, d = lengths.as_tuple()
        ortho = abs(a * a + c * c - b * b - d * d) <= rel_tol * lengths.sigma**2
    return LinkageClass(kind, ortho)


def conjugate(lengths: BarLengths) -> BarLengths:
    """The linkage (sigma-alpha, ..., sigma-delta) sharing the same diagonal relation."""
    s = lengths.sigma
    return validate_lengths(s - lengths.alpha, s - lengths.beta, s - lengths.gamma, s - lengths.delta)


# Each strip-switch variant negates two adjacent bars and applies the matching
# projective transform to the half-angle tangents; the trajectory is unchanged.
_STRIP_SIGNS = {
    1: (1, 1, -1, -1),
    2: (-1, 1, 1, -1),
    3: (-1, -1, 1, 1),
    4: (1, -1, -1, 1),
}


def _strip_maps(variant: int):
    ident = lambda p: p
    neg = lambda p: -p
    ninv = lambda p: p.neg_reciprocal()
    return {
        1: (ident, ninv, neg, ninv),
        2: (ninv, ident, ninv, neg),
        3: (neg, ninv, ident, ninv),
        4: (ninv, neg, ninv, ident),
    }[variant]


def switch_strip(
    lengths: BarLengths,
    config: tuple[ProjReal, ProjReal, ProjReal, ProjReal],
    variant: int,
) -> tuple[tuple[float, float, float, float], tuple[ProjReal, ProjReal, ProjReal, ProjReal]]:
    """Apply one of the four strip-switch symmetries.

    Returns signed bar lengths (two of them negated, so not a BarLengths) and
    the transformed tangent quadruple.  Each variant is an involution.
    """
    if variant not in _STRIP_SIGNS:
        raise ValueError(f"variant must be 1..4, got {variant}")
    signs = _STRIP_SIGNS[variant]
    signed = tuple(s * v for s, v in zip(signs, lengths.as_tuple()))
    maps = _strip_maps(variant)
    return signed, tuple(m(p) for m, p in zip(maps, config))
