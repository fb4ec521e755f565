"""Square roots under the real-or-imaginary sign convention.

Amplitudes and phase data take square roots of quantities whose sign encodes
which variable pair is hyperbolic vs elliptic.  The convention: sqrt(a) for
a >= 0 stays on the positive real axis, sqrt(a) for a < 0 is +i sqrt(-a) on
the positive imaginary axis.  A SignedValue records magnitude and axis so
downstream code can branch on the axis without re-deriving signs.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass


class Axis(enum.Enum):
    REAL = "real"
    IMAGINARY = "imaginary"


@dataclass(frozen=True, slots=True)
class SignedValue:
    magnitude: float
    axis: Axis

    def __post_init__(self):
        if self.magnitude < 0.0:
            raise ValueError("magnitude must be nonnegative")

    @property
    def is_real(self) -> bool:
        return self.axis is Axis.REAL

    def as_complex(self) -> complex:
        return complex(self.magnitude, 0.0) if self.is_real else complex(0.0, self.magnitude)

    def squared(self) -> float:
        m2 = self.magnitude * self.magnitude
        return m2 if self.is_real else -m2


def signed_sqrt(a: float) -> SignedValue:
    if a >= 0.0:
        return SignedValue(math.sqrt(a), Axis.REAL)
    return SignedValue(math.sqrt(-a), Axis.IMAGINARY)
