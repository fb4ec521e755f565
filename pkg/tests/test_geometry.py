from __future__ import annotations

import math

import pytest

from fourbar import ProjReal, ResidualTooLarge, closure_oracle, validate_lengths
from fourbar.geometry import (
    configuration_from_tangents,
    configuration_from_xy,
    quad_self_intersected,
    segments_intersect,
)


def test_unit_square_closes():
    L = validate_lengths(1, 1, 1, 1)
    res = closure_oracle(L, math.pi / 2, math.pi / 2)
    assert res.residual == pytest.approx(0.0, abs=1e-15)
    assert res.rho_z == pytest.approx(math.pi / 2)
    assert res.rho_w == pytest.approx(math.pi / 2)
    av, bv, cv, dv = res.vertices
    assert av == pytest.approx((1.0, 0.0))
    assert bv == pytest.approx((1.0, 1.0))
    assert cv == pytest.approx((0.0, 1.0), abs=1e-15)
    assert dv == (0.0, 0.0)


def test_mirrored_square_gets_negative_angles():
    L = validate_lengths(1, 1, 1, 1)
    res = closure_oracle(L, -math.pi / 2, -math.pi / 2)
    assert res.residual == pytest.approx(0.0, abs=1e-15)
    assert res.rho_z == pytest.approx(-math.pi / 2)
    assert res.rho_w == pytest.approx(-math.pi / 2)


def test_open_pair_reports_residual():
    # rho_x = pi/2, rho_y = 0 on the unit rhombus: |BC| = sqrt(5), off by sqrt(5)-1
    L = validate_lengths(1, 1, 1, 1)
    res = closure_oracle(L, math.pi / 2, 0.0)
    assert res.residual == pytest.approx(math.sqrt(5.0) - 1.0)


def test_configuration_from_xy_square():
    L = validate_lengths(1, 1, 1, 1)
    cfg = configuration_from_xy(L, ProjReal(1.0), ProjReal(1.0))
    assert cfg.u == pytest.approx(math.sqrt(2.0))
    assert cfg.v == pytest.approx(math.sqrt(2.0))
    assert cfg.z.value() == pytest.approx(1.0)
    assert cfg.w.value() == pytest.approx(1.0)


def test_configuration_from_xy_rejects_non_closing():
    L = validate_lengths(1, 1, 1, 1)
    with pytest.raises(ResidualTooLarge):
        configuration_from_xy(L, ProjReal(1.0), ProjReal(0.3))


def test_configuration_from_tangents_checks_zw():
    L = validate_lengths(1, 1, 1, 1)
    good = configuration_from_tangents(L, ProjReal(1.0), ProjReal(1.0), ProjReal(1.0), ProjReal(1.0))
    assert good.rho_z == pytest.approx(math.pi / 2)
    with pytest.raises(ResidualTooLarge):
        configuration_from_tangents(L, ProjReal(1.0), ProjReal(1.0), ProjReal(-1.0), ProjReal(1.0))


def test_folded_flat_vertices_still_resolve():
    # rhombus with the gamma bar folded back: B coincides with D, y at infinity
    L = validate_lengths(1, 1, 1, 1)
    res = closure_oracle(L, 1.0, math.pi)
    assert res.residual == pytest.approx(0.0, abs=1e-15)
    assert res.rho_z == pytest.approx(-1.0)  # z = -x on the folded circle
    assert abs(res.rho_w) == pytest.approx(math.pi)


def test_segment_intersection_primitives():
    assert segments_intersect((0, 0), (1, 1), (0, 1), (1, 0))
    assert not segments_intersect((0, 0), (1, 0), (0, 1), (1, 1))
    assert segments_intersect((0, 0), (2, 0), (1, 0), (3, 0))  # collinear overlap


def test_quad_self_intersection_oracle():
    square = ((1.0, 0.0), (1.0, 1.0), (0.0, 1.0), (0.0, 0.0))
    assert not quad_self_intersected(square)
    butterfly = ((1.0, 0.0), (0.0, 1.0), (1.0, 1.0), (0.0, 0.0))
    assert quad_self_intersected(butterfly)
