from __future__ import annotations

import math
import random

import pytest

from fourbar import BarLengths, LinkageKind, classify, validate_lengths

# three representative tuples per class; elliptic covers cn-form, sn-form,
# and the orthodiagonal sub-case
CLASS_TUPLES: dict[LinkageKind, list[tuple[float, float, float, float]]] = {
    LinkageKind.RHOMBUS: [(1, 1, 1, 1), (2.5, 2.5, 2.5, 2.5), (0.7, 0.7, 0.7, 0.7)],
    LinkageKind.ISOGRAM: [(2, 1, 2, 1), (1.3, 2.2, 1.3, 2.2), (3, 0.5, 3, 0.5)],
    LinkageKind.DELTOID_I: [(1, 2, 2, 1), (2.5, 1, 1, 2.5), (1.1, 0.6, 0.6, 1.1)],
    LinkageKind.DELTOID_II: [(2, 2, 1, 1), (1, 1, 2.3, 2.3), (0.8, 0.8, 1.7, 1.7)],
    LinkageKind.CONIC_I: [(2, 3, 2, 1), (1.5, 2, 2.5, 2), (2, 1, 1.5, 2.5)],
    LinkageKind.CONIC_II: [(1, 2, 3, 4), (2, 2.5, 1.5, 2), (1.2, 3, 2, 3.8)],
    LinkageKind.CONIC_III: [(1.5, 2, 1, 2.5), (2.5, 1, 2, 1.5), (1, 2.2, 1.4, 1.8)],
    LinkageKind.ELLIPTIC: [
        (2, 3, 4, 6),
        (1, 2, 3, 3.5),
        (3, math.sqrt(8), math.sqrt(6), math.sqrt(7)),
    ],
}

ALL_TUPLES = [t for tuples in CLASS_TUPLES.values() for t in tuples]


def bars(*vals: float) -> BarLengths:
    return validate_lengths(*vals)


def random_valid_lengths(rng: random.Random, lo: float = 0.3, hi: float = 3.0) -> BarLengths:
    while True:
        vals = [rng.uniform(lo, hi) for _ in range(4)]
        try:
            return validate_lengths(*vals)
        except Exception:
            continue


def random_elliptic_lengths(
    rng: random.Random, min_d: float = 1e-2, boundary_margin: float = 0.0
) -> BarLengths:
    """A random elliptic tuple with |d_i| bounded away from the class boundaries."""
    while True:
        L = random_valid_lengths(rng)
        d1, d2, d3 = L.d_values()
        if min(abs(d1), abs(d2), abs(d3)) < min_d * L.sigma:
            continue
        if classify(L).kind is not LinkageKind.ELLIPTIC:
            continue
        if boundary_margin:
            mx, mn = max(L.as_tuple()), min(L.as_tuple())
            if abs(L.sigma - mx - mn) <= boundary_margin * L.sigma:
                continue
        return L


def random_orthodiagonal_lengths(rng: random.Random) -> BarLengths:
    """Random elliptic tuple with alpha^2 + gamma^2 = beta^2 + delta^2."""
    while True:
        a = rng.uniform(0.5, 2.5)
        b = rng.uniform(0.5, 2.5)
        c = rng.uniform(0.5, 2.5)
        d2 = a * a + c * c - b * b
        if d2 <= 1e-3:
            continue
        try:
            L = validate_lengths(a, b, c, math.sqrt(d2))
        except Exception:
            continue
        d_1, d_2, d_3 = L.d_values()
        if min(abs(d_1), abs(d_2), abs(d_3)) < 1e-3 * L.sigma:
            continue
        if classify(L).kind is LinkageKind.ELLIPTIC:
            return L


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20260809)
