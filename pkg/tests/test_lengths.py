from __future__ import annotations

import math

import pytest

from fourbar import (
    LinkageKind,
    NonPositiveLength,
    ProjReal,
    QuadrilateralInequalityViolated,
    classify,
    conjugate,
    h_coeffs,
    switch_strip,
    validate_lengths,
)
from fourbar.lengths import _strip_maps

from .conftest import CLASS_TUPLES, random_valid_lengths


def test_validate_accepts_and_derives_sigma():
    L = validate_lengths(1, 2, 3, 4)
    assert L.sigma == 5.0
    assert validate_lengths(1, 1, 1, 1).sigma == 2.0


def test_validate_rejects_long_bar_with_its_name():
    with pytest.raises(QuadrilateralInequalityViolated) as exc:
        validate_lengths(5, 1, 1, 1)
    assert exc.value.bar == "alpha"
    with pytest.raises(QuadrilateralInequalityViolated) as exc:
        validate_lengths(1, 1, 7, 1)
    assert exc.value.bar == "gamma"


def test_validate_rejects_nonpositive():
    for bad in [(0, 1, 1, 1), (1, -2, 1, 1), (1, 1, math.inf, 1)]:
        with pytest.raises(NonPositiveLength):
            validate_lengths(*bad)


@pytest.mark.parametrize(
    "lengths,kind",
    [
        ((1, 1, 1, 1), LinkageKind.RHOMBUS),
        ((2, 1, 2, 1), LinkageKind.ISOGRAM),
        ((1, 2, 3, 4), LinkageKind.CONIC_II),
        ((2, 3, 4, 6), LinkageKind.ELLIPTIC),
    ],
)
def test_classify_examples(lengths, kind):
    assert classify(validate_lengths(*lengths)).kind is kind


def test_classify_all_class_tuples():
    for kind, tuples in CLASS_TUPLES.items():
        for t in tuples:
            cls = classify(validate_lengths(*t))
            assert cls.kind is kind, (t, cls.kind)


def test_orthodiagonal_flag():
    L = validate_lengths(3, math.sqrt(8), math.sqrt(6), math.sqrt(7))
    cls = classify(L)
    assert cls.kind is LinkageKind.ELLIPTIC and cls.orthodiagonal
    assert not classify(validate_lengths(2, 3, 4, 6)).orthodiagonal


def test_classification_tolerance_is_steerable():
    # slightly perturbed rhombus: elliptic at fine tolerance, rhombus at coarse
    L = validate_lengths(1, 1 + 1e-6, 1, 1)
    assert classify(L, rel_tol=1e-9).kind is LinkageKind.ELLIPTIC
    assert classify(L, rel_tol=1e-3).kind is LinkageKind.RHOMBUS


def test_conjugate_examples():
    assert conjugate(validate_lengths(1, 2, 3, 4)).as_tuple() == (4.0, 3.0, 2.0, 1.0)
    assert conjugate(validate_lengths(1, 1, 1, 1)).as_tuple() == (1.0, 1.0, 1.0, 1.0)


def test_conjugate_preserves_diagonal_coefficients(rng):
    for _ in range(200):
        L = random_valid_lengths(rng)
        h1, h2 = h_coeffs(L), h_coeffs(conjugate(L))
        for name in ("h11", "h10", "h01", "h00"):
            a, b = getattr(h1, name), getattr(h2, name)
            assert abs(a - b) <= 1e-12 * max(abs(a), abs(b), L.sigma**4)


def test_conjugate_is_involution(rng):
    for _ in range(50):
        L = random_valid_lengths(rng)
        back = conjugate(conjugate(L))
        assert all(
            abs(u - v) <= 1e-12 for u, v in zip(back.as_tuple(), L.as_tuple())
        )


def test_switch_strip_involution():
    L = validate_lengths(1.2, 2.1, 1.7, 2.6)
    config = tuple(ProjReal(v) for v in (0.3, -1.8, 2.5, -0.2))
    for variant in (1, 2, 3, 4):
        maps = _strip_maps(variant)
        twice = tuple(m(m(p)) for m, p in zip(maps, config))
        assert all(t.distance(p) <= 1e-15 for t, p in zip(twice, config))
        signed, moved = switch_strip(L, config, variant)
        assert sorted(abs(v) for v in signed) == sorted(L.as_tuple())
        assert sum(1 for v in signed if v < 0) == 2


def test_switch_strip_variant3_example():
    L = validate_lengths(1, 1, 1, 1)
    config = (ProjReal(2.0), ProjReal(0.5), ProjReal(2.0), ProjReal(0.5))
    signed, moved = switch_strip(L, config, 3)
    assert signed == (-1.0, -1.0, 1.0, 1.0)
    expect = (-2.0, -2.0, 2.0, -2.0)
    assert all(m.value() == pytest.approx(e) for m, e in zip(moved, expect))


def test_switch_strip_variant2_maps_zero_to_infinity():
    L = validate_lengths(1, 1, 1, 1)
    config = (ProjReal(0.0), ProjReal(1.0), ProjReal(0.0), ProjReal(1.0))
    _, moved = switch_strip(L, config, 2)
    assert moved[0].is_infinite
