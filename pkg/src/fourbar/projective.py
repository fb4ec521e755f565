"""Points of the real projective line R u {inf}.

Half-angle tangents of joint angles live on the one-point compactification
of the real line: tan(rho/2) with rho = pi mapping to the single point at
infinity (-inf and +inf are glued).  Values are stored as a normalized
ratio num/den so that infinity is an ordinary, exactly-representable point
and formulas never have to special-case overflow.
"""

from __future__ import annotations

import math
from dataclasses import dataclass


@dataclass(frozen=True, slots=True)
class ProjReal:
    """A point of R u {inf} as a normalized ratio num/den.

    Normalization: max(|num|, |den|) == 1 and den >= 0; the point at
    infinity is stored as (1, 0).  (0, 0) is rejected.
    """

    num: float
    den: float = 1.0

    def __post_init__(self):
        n, d = float(self.num), float(self.den)
        if math.isnan(n) or math.isnan(d):
            raise ValueError("ProjReal components must not be NaN")
        if math.isinf(n) or math.isinf(d):
            if math.isinf(n) and math.isinf(d):
                raise ValueError("ProjReal (inf, inf) is ambiguous")
            n, d = (1.0, 0.0) if math.isinf(n) else (0.0, 1.0)
        m = max(abs(n), abs(d))
        if m == 0.0:
            raise ValueError("ProjReal (0, 0) is not a projective point")
        n /= m
        d /= m
        if d < 0.0 or (d == 0.0 and n < 0.0):
            n, d = -n, -d
        if d == 0.0:
            n = 1.0
        # collapse -0.0 so equal points serialize identically
        object.__setattr__(self, "num", n + 0.0)
        object.__setattr__(self, "den", d + 0.0)

    @classmethod
    def infinity(cls) -> "ProjReal":
        return cls(1.0, 0.0)

    @classmethod
    def from_angle(cls, rho: float) -> "ProjReal":
        """tan(rho/2) as a projective point; rho = +-pi maps to infinity exactly."""
        if abs(rho) == math.pi:
            return cls(1.0, 0.0)
        return cls(math.sin(0.5 * rho), math.cos(0.5 * rho))

    @property
    def is_infinite(self) -> bool:
        return self.den == 0.0

    @property
    def is_zero(self) -> bool:
        return self.num == 0.0 and self.den != 0.0

    def value(self) -> float:
        return math.inf if self.den == 0.0 else self.num / self.den

    def angle(self) -> float:
        """Joint angle rho in (-pi, pi] with tan(rho/2) equal to this point."""
        return 2.0 * math.atan2(self.num, self.den)

    def sign(self) -> int:
        """Sign of the finite value: -1, 0, +1; +-inf reports 0."""
        if self.is_infinite or self.num == 0.0:
            return 0
        return 1 if self.num > 0.0 else -1

    def distance(self, other: "ProjReal") -> float:
        """Projective (chordal) distance |n1 d2 - d1 n2| / (|p||q|)."""
        cross = abs(self.num * other.den - self.den * other.num)
        return cross / (math.hypot(self.num, self.den) * math.hypot(other.num, other.den))

    def isclose(self, other: "ProjReal", tol: float = 1e-9) -> bool:
        return self.distance(other) <= tol

    def __neg__(self) -> "ProjReal":
        return ProjReal(-self.num, self.den)

    def reciprocal(self) -> "ProjReal":
        return ProjReal(self.den, self.num)

    def neg_reciprocal(self) -> "ProjReal":
        """-1/x, the projective inversion used by strip switching; maps 0 <-> inf."""
        return ProjReal(-self.den, self.num)

    def __repr__(self) -> str:
        if self.is_infinite:
            return "ProjReal(inf)"
        return f"ProjReal({self.value():.17g})"
