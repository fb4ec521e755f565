from __future__ import annotations

import itertools
import math

import pytest

from fourbar import (
    AngleAtInfinityOrZero,
    LinkageKind,
    elliptic_data,
    enumerate_branches,
    grashof,
    is_self_intersected,
    sample_branch,
    topology_report,
    validate_lengths,
)
from fourbar.analysis import self_intersected_flag
from fourbar.branches import BranchKind, normalized_to_param
from fourbar.geometry import quad_self_intersected

from .conftest import CLASS_TUPLES, random_elliptic_lengths, random_valid_lengths


def test_grashof_examples():
    holds, margin = grashof(validate_lengths(1, 2, 3, 3.5))
    assert holds and margin == pytest.approx(0.25)
    holds, margin = grashof(validate_lengths(2, 3, 4, 6))
    assert not holds and margin == pytest.approx(-0.5)
    holds, margin = grashof(validate_lengths(1, 1, 1, 1))
    assert not holds and margin == 0.0


def test_grashof_is_permutation_invariant(rng):
    for _ in range(50):
        L = random_valid_lengths(rng)
        base = grashof(L)
        for perm in itertools.permutations(L.as_tuple()):
            assert grashof(validate_lengths(*perm)) == pytest.approx(base)


def test_grashof_iff_m_below_one(rng):
    for _ in range(200):
        L = random_elliptic_lengths(rng, boundary_margin=1e-6)
        holds, _ = grashof(L)
        assert holds == (elliptic_data(L).M < 1.0)


def test_sign_pattern_examples():
    L = validate_lengths(2, 1, 2, 1)
    desc = enumerate_branches(L)[1]
    butterfly = sample_branch(L, desc, normalized_to_param(desc, 0.13))
    assert is_self_intersected(butterfly)

    square = sample_branch(
        validate_lengths(1, 1, 1, 1),
        enumerate_branches(validate_lengths(1, 1, 1, 1))[0],
        math.pi / 2,
    )
    assert not is_self_intersected(square)


def test_sign_pattern_rejects_degenerate_tangents():
    L = validate_lengths(1, 1, 1, 1)
    folded = [
        b for b in enumerate_branches(L) if b.param_kind is BranchKind.INFINITY_CIRCLE
    ][0]
    cfg = sample_branch(L, folded, 1.0)
    with pytest.raises(AngleAtInfinityOrZero):
        is_self_intersected(cfg)
    assert isinstance(self_intersected_flag(cfg), bool)


def test_sign_pattern_agrees_with_segment_oracle_everywhere():
    disagreements = 0
    checked = 0
    for tuples in CLASS_TUPLES.values():
        for t in tuples:
            L = validate_lengths(*t)
            for desc in enumerate_branches(L):
                if desc.param_kind is BranchKind.INFINITY_CIRCLE:
                    continue
                for i in range(50):
                    u = (i + 0.5) / 50
                    cfg = sample_branch(L, desc, normalized_to_param(desc, u))
                    values = [abs(p.value()) for p in cfg.tangents()]
                    if min(values) < 1e-6 or max(values) > 1e6:
                        continue  # the pattern test's scope excludes near-folded joints
                    checked += 1
                    if is_self_intersected(cfg) != quad_self_intersected(cfg.vertices):
                        disagreements += 1
    assert checked > 1500
    assert disagreements == 0


def test_isogram_branches_intersection_character():
    L = validate_lengths(2, 1, 2, 1)
    wiper, butterfly = enumerate_branches(L)
    for i in range(60):
        u = (i + 0.5) / 60
        cw = sample_branch(L, wiper, normalized_to_param(wiper, u))
        assert not quad_self_intersected(cw.vertices)
        cb = sample_branch(L, butterfly, normalized_to_param(butterfly, u))
        assert quad_self_intersected(cb.vertices)


def test_topology_reports():
    rep = topology_report(validate_lengths(1, 1, 1, 1))
    assert rep.linkage_class.kind is LinkageKind.RHOMBUS
    assert rep.finite_branches == 1
    assert rep.infinity_circles == 2 and rep.infinity_isolated == 0
    assert not rep.grashof
    assert rep.fully_rotating == ("x", "y", "z", "w")

    rep = topology_report(validate_lengths(2, 1, 2, 1))
    assert rep.finite_branches == 2
    assert rep.infinity_isolated == 2 and rep.infinity_circles == 0

    rep = topology_report(validate_lengths(1, 2, 3, 3.5))
    assert rep.linkage_class.kind is LinkageKind.ELLIPTIC
    assert rep.finite_branches == 2
    assert rep.grashof
    assert rep.infinity_isolated == 4
    assert rep.fully_rotating == ("x", "w")

    rep = topology_report(validate_lengths(2, 3, 4, 6))
    assert rep.fully_rotating == ("z", "w")
    assert not rep.grashof
