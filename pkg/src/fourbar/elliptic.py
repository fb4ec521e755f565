"""Complete elliptic integrals and Jacobi elliptic functions.

Everything the branch parametrizations need, implemented from scratch:

* K(k) by the arithmetic-geometric mean (DLMF 19.8.5),
* sn, cn, dn for real arguments by the descending AGM / amplitude
  recursion (Abramowitz & Stegun 16.4),
* complex arguments via the real/imaginary-part addition formulas
  (A&S 16.21), with a guard around the pole lattice,
* dc = dn/cn and its inverse on the monotone interval [0, K).

Convention: k is always the *modulus*, never the parameter m = k^2.
References differ on this; every signature here takes k.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

from .errors import ModulusOutOfRange, NearPole, TargetOutOfRange

_AGM_TOL = 1e-15
_MAX_ITER = 64
POLE_GUARD = 1e-8


def complete_K(k: float) -> float:
    """Quarter period K(k) for 0 <= k < 1.

    AGM of (1, k') converges quadratically; K = pi / (2 agm).  K(1) is
    infinite and therefore rejected.
    """
    if not 0.0 <= k < 1.0:
        raise ModulusOutOfRange(f"modulus k must satisfy 0 <= k < 1, got {k!r}")
    a, b = 1.0, math.sqrt((1.0 - k) * (1.0 + k))
    for _ in range(_MAX_ITER):
        if abs(a - b) <= _AGM_TOL * a:
            break
        a, b = 0.5 * (a + b), math.sqrt(a * b)
    return math.pi / (2.0 * a)


class JacobiTriple(NamedTuple):
    sn: float | complex
    cn: float | complex
    dn: float | complex


def jacobi_real(u: float, k: float) -> JacobiTriple:
    """(sn, cn, dn)(u; k) for real u and modulus k in [0, 1].

    Descending AGM with the amplitude back-recursion; the argument is first
    reduced modulo the real period 4K so accuracy does not degrade with |u|.
    dn is recovered from k^2 sn^2 + dn^2 = 1 (dn > 0 on the real line), so
    both Pythagorean identities hold to rounding by construction.
    """
    if not 0.0 <= k <= 1.0:
        raise ModulusOutOfRange(f"modulus k must satisfy 0 <= k <= 1, got {k!r}")
    if k == 0.0:
        return JacobiTriple(math.sin(u), math.cos(u), 1.0)
    if k == 1.0:
        sech = 1.0 / math.cosh(u)
        return JacobiTriple(math.tanh(u), sech, sech)

    kp = math.sqrt((1.0 - k) * (1.0 + k))
    a, b, c = 1.0, kp, k
    a_list = [a]
    c_list = [c]
    for _ in range(_MAX_ITER):
        if abs(c) <= _AGM_TOL * a:
            break
        a, b, c = 0.5 * (a + b), math.sqrt(a * b), 0.5 * (a - b)
        a_list.append(a)
        c_list.append(c)
    n = len(a_list) - 1
    quarter = math.pi / (2.0 * a)
    period = 4.0 * quarter
    u = u - period * math.floor(u / period + 0.5)

    phi = float(2**n) * a * u
    for i in range(n, 0, -1):
        arg = c_list[i] / a_list[i] * math.sin(phi)
        phi = 0.5 * (phi + math.asin(max(-1.0, min(1.0, arg))))
    sn = math.sin(phi)
    cn = math.cos(phi)
    dn = math.sqrt(max(0.0, 1.0 - (k * sn) * (k * sn)))
    return JacobiTriple(sn, cn, dn)


def _lattice_distance(x: float, offset: float, period: float) -> float:
    r = math.fmod(x - offset, period)
    if r > 0.5 * period:
        r -= period
    elif r < -0.5 * period:
        r += period
    return abs(r)


def jacobi_complex(t: complex, k: float) -> JacobiTriple:
    """(sn, cn, dn)(u + iv; k) by the real/imaginary addition formulas.

    Poles sit at u = 0 (mod 2K), v = K' (mod 2K'); arguments within
    POLE_GUARD of that lattice (in reduced coordinates) are rejected.
    """
    u, v = float(t.real), float(t.imag)
    if v == 0.0:
        return JacobiTriple(*jacobi_real(u, k))
    if not 0.0 <= k < 1.0:
        raise ModulusOutOfRange(f"complex evaluation needs 0 <= k < 1, got {k!r}")
    kp = math.sqrt((1.0 - k) * (1.0 + k))
    bigk = complete_K(k)
    bigkp = complete_K(kp)
    du = _lattice_distance(u, 0.0, 2.0 * bigk)
    dv = _lattice_distance(v, bigkp, 2.0 * bigkp)
    if math.hypot(du, dv) < POLE_GUARD:
        raise NearPole(f"argument {t!r} within {POLE_GUARD} of a pole")

    s1, c1, d1 = jacobi_real(u, k)
    s2, c2, d2 = jacobi_real(v, kp)
    denom = c2 * c2 + (k * s1 * s2) ** 2
    sn = complex(s1 * d2, c1 * d1 * s2 * c2) / denom
    cn = complex(c1 * c2, -s1 * d1 * s2 * d2) / denom
    dn = complex(d1 * c2 * d2, -k * k * s1 * c1 * s2) / denom
    return JacobiTriple(sn, cn, dn)


def sn_quarter_shift(m: int, v: float, k: float) -> tuple[complex, float]:
    """sn(mK + iv; k) as (numerator, real denominator), pole-safe.

    Quarter-period translations reduce the value to Jacobi functions of the
    real number v with the complementary modulus; returning the ratio
    unevaluated lets callers pass through poles projectively.
    """
    kp = math.sqrt((1.0 - k) * (1.0 + k))
    s2, c2, d2 = jacobi_real(v, kp)
    return {
        0: (complex(0.0, s2), c2),
        1: (complex(1.0), d2),
        2: (complex(0.0, -s2), c2),
        3: (complex(-1.0), d2),
    }[m % 4]


def cn_quarter_shift(m: int, v: float, k: float) -> tuple[complex, float]:
    """cn(mK + iv; k) as (numerator, real denominator), pole-safe."""
    kp = math.sqrt((1.0 - k) * (1.0 + k))
    s2, c2, d2 = jacobi_real(v, kp)
    return {
        0: (complex(1.0), c2),
        1: (complex(0.0, -kp * s2), d2),
        2: (complex(-1.0), c2),
        3: (complex(0.0, kp * s2), d2),
    }[m % 4]


def dc(u: float, k: float) -> float:
    """dn(u)/cn(u); on [0, K) it increases monotonically from 1 to +infinity."""
    sn, cn, dn = jacobi_real(u, k)
    return dn / cn


def inverse_dc(v: float, k: float) -> float:
    """The u in [0, K) with dc(u; k) = v, for targets v >= 1, by bisection."""
    if v < 1.0 - 1e-9:
        raise TargetOutOfRange(f"dc on [0, K) attains only values >= 1, got {v!r}")
    if v <= 1.0:
        return 0.0
    bigk = complete_K(k)
    lo, hi = 0.0, bigk * (1.0 - 1e-12)
    if dc(hi, k) <= v:
        return hi
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if dc(mid, k) < v:
            lo = mid
        else:
            hi = mid
        if hi - lo <= 1e-15 * bigk:
            break
    return 0.5 * (lo + hi)


@dataclass(frozen=True, slots=True)
class Modulus:
    """A modulus k with its complement and both quarter periods."""

    k: float
    k_prime: float
    K: float
    K_prime: float

    @classmethod
    def from_k(cls, k: float) -> "Modulus":
        if not 0.0 <= k < 1.0:
            raise ModulusOutOfRange(f"modulus k must satisfy 0 <= k < 1, got {k!r}")
        kp = math.sqrt((1.0 - k) * (1.0 + k))
        big_kp = math.inf if k == 0.0 else complete_K(kp)
        return cls(k=k, k_prime=kp, K=complete_K(k), K_prime=big_kp)
