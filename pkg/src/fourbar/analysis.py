"""Grashof condition, self-intersection, and the per-class topology report."""

from __future__ import annotations

from dataclasses import dataclass

from .branches import BranchKind, enumerate_branches
from .errors import AngleAtInfinityOrZero
from .geometry import Configuration, quad_self_intersected
from .lengths import BarLengths, LinkageClass, LinkageKind, classify
from .params import elliptic_data
from .solve import elliptic_infinity_gates, solutions_at_infinity

# sign patterns of (x, y, z, w) that force the two bar diagonally opposite
# pairs to cross: two cyclically adjacent tangents positive, the other two
# negative
_CROSSING_PATTERNS = {
    (1, 1, -1, -1),
    (-1, 1, 1, -1),
    (-1, -1, 1, 1),
    (1, -1, -1, 1),
}


def grashof(lengths: BarLengths) -> tuple[bool, float]:
    """Strict Grashof test: shortest plus longest under the semi-perimeter.

    Returns (holds, margin) with margin = sigma - max - min; for the
    elliptic class this is equivalent to M < 1.
    """
    vals = lengths.as_tuple()
    margin = lengths.sigma - max(vals) - min(vals)
    return margin > 0.0, margin


def is_self_intersected(config: Configuration) -> bool:
    """Sign-pattern test for crossing bars; tangents must be finite and nonzero."""
    signs = tuple(t.sign() for t in config.tangents())
    if 0 in signs:
        raise AngleAtInfinityOrZero(
            "sign-pattern test undefined at zero/infinite tangents; use the geometric oracle"
        )
    return signs in _CROSSING_PATTERNS


def self_intersected_flag(config: Configuration) -> bool:
    """Self-intersection for serialization: sign pattern, geometry at the edges."""
    try:
        return is_self_intersected(config)
    except AngleAtInfinityOrZero:
        return quad_self_intersected(config.vertices)


@dataclass(frozen=True)
class TopologyReport:
    linkage_class: LinkageClass
    finite_branches: int
    finite_kinds: tuple[str, ...]
    infinity_circles: int
    infinity_isolated: int
    grashof: bool
    grashof_margin: float
    fully_rotating: tuple[str, ...]


def _fully_rotating(lengths: BarLengths, cls: LinkageClass) -> tuple[str, ...]:
    kind = cls.kind
    if kind in (
        LinkageKind.RHOMBUS,
        LinkageKind.ISOGRAM,
        LinkageKind.DELTOID_I,
        LinkageKind.DELTOID_II,
        LinkageKind.CONIC_I,
    ):
        return ("x", "y", "z", "w")
    a, b, c, d = lengths.as_tuple()
    if kind is LinkageKind.CONIC_II:
        return ("x", "z", "y" if d * a > b * c else "w")
    if kind is LinkageKind.CONIC_III:
        return ("y", "w", "x" if c * d > a * b else "z")
    gates = elliptic_infinity_gates(lengths, elliptic_data(lengths, cls).M)
    return tuple(name for name in ("x", "y", "z", "w") if gates[name])


def topology_report(lengths: BarLengths) -> TopologyReport:
    """Branch and infinity counts, the Grashof flag, and which joints fold flat."""
    cls = classify(lengths)
    branches = enumerate_branches(lengths)
    finite = [br for br in branches if br.param_kind is not BranchKind.INFINITY_CIRCLE]
    inf_items = solutions_at_infinity(lengths)
    holds, margin = grashof(lengths)
    if cls.kind is LinkageKind.ELLIPTIC:
        # the Grashof side of the equivalence must agree with M < 1 exactly
        m_small = elliptic_data(lengths, cls).M < 1.0
        if holds != m_small and abs(margin) > 1e-12 * lengths.sigma:
            raise AssertionError("Grashof test and M < 1 disagree away from the boundary")
    return TopologyReport(
        linkage_class=cls,
        finite_branches=len(finite),
        finite_kinds=tuple(br.param_kind.value for br in finite),
        infinity_circles=sum(1 for item in inf_items if not item.isolated),
        infinity_isolated=sum(1 for item in inf_items if item.isolated),
        grashof=holds,
        grashof_margin=margin,
        fully_rotating=_fully_rotating(lengths, cls),
    )
