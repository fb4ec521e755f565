"""Solving at a given tangent value and enumerating solutions at infinity.

solve_at_x builds candidate partners for x from the three coupling
polynomials and keeps the tuples that survive post-examination: the
geometric closure oracle first, then the cross-relations between the other
coordinate pairs obtained by relabeling the bars.

Solutions at infinity are projective configurations with at least one
tangent at infinity (a joint folded flat).  Their structure is class
specific: folded-flat circle branches for the doubly degenerate classes,
isolated points otherwise, with sign-paired radical tuples gated by
reachability inequalities for the conic II/III and elliptic classes.  The
radical magnitudes follow closed forms; the sign pairing within a tuple is
resolved by testing all six pairwise coupling relations, which makes the
emission robust against sign typos in the source tables.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, fields as dataclass_fields
from itertools import product

from .branches import BranchKind, enumerate_branches
from .coeffs import (
    eval_f,
    eval_g,
    f_coeffs,
    f_coeffs_xw,
    g_coeffs,
    solve_f_for_second,
    solve_g_for_opposite,
)
from .errors import ResidualTooLarge
from .geometry import Configuration, configuration_from_xy
from .lengths import BarLengths, LinkageKind, classify
from .params import elliptic_data
from .projective import ProjReal

_MATCH_TOL = 1e-7


def solve_at_x(lengths: BarLengths, x: ProjReal) -> list[Configuration]:
    """All admissible configurations with the given first tangent.

    Generically two (one per assembly side), one at a turning point of x,
    none outside the reachable range.  Raises DegenerateIdentically when a
    whole folded circle passes through x (rhombus or deltoid II at
    x = infinity), since no finite list represents it.
    """
    fc = f_coeffs(lengths)
    y_roots = solve_f_for_second(fc, x)
    z_cands = solve_g_for_opposite(g_coeffs(lengths), x)
    w_cands = solve_f_for_second(f_coeffs_xw(lengths), x).roots
    out: list[Configuration] = []
    for y in y_roots.roots:
        try:
            cfg = configuration_from_xy(lengths, x, y)
        except ResidualTooLarge:
            continue
        if not any(cfg.z.isclose(zc, _MATCH_TOL) for zc in z_cands):
            continue
        if not any(cfg.w.isclose(wc, _MATCH_TOL) for wc in w_cands):
            continue
        if any(cfg.y.isclose(prev.y, 1e-12) for prev in out):
            continue
        out.append(cfg)
    return out


@dataclass(frozen=True)
class InfinitySolution:
    """An isolated folded configuration, or a reference to a folded circle."""

    isolated: bool
    tangents: tuple[ProjReal, ProjReal, ProjReal, ProjReal] | None
    branch_id: int | None
    reachable: bool
    condition: str


def _point(x, y, z, w, condition: str) -> InfinitySolution:
    return InfinitySolution(True, (x, y, z, w), None, True, condition)


def _circle_solutions(lengths: BarLengths) -> list[InfinitySolution]:
    return [
        InfinitySolution(False, None, desc.branch_id, True, "folded-flat circle branch")
        for desc in enumerate_branches(lengths)
        if desc.param_kind is BranchKind.INFINITY_CIRCLE
    ]


def _relabeled(lengths: BarLengths, order: str) -> BarLengths:
    named = dict(zip("abcd", lengths.as_tuple()))
    la, lb, lc, ld = (named[ch] for ch in order)
    return BarLengths(la, lb, lc, ld, 0.5 * (la + lb + lc + ld))


def relation_residual(lengths: BarLengths, tangents) -> float:
    """Worst coefficient-scaled residual of the six pairwise coupling relations."""
    x, y, z, w = tangents
    checks = (
        (f_coeffs(lengths), eval_f, x, y),
        (f_coeffs_xw(lengths), eval_f, x, w),
        (f_coeffs(_relabeled(lengths, "bcda")), eval_f, y, z),
        (f_coeffs(_relabeled(lengths, "cdab")), eval_f, z, w),
        (g_coeffs(lengths), eval_g, x, z),
        (g_coeffs(_relabeled(lengths, "bcda")), eval_g, y, w),
    )
    worst = 0.0
    for coeffs, ev, p, q in checks:
        scale = max(abs(getattr(coeffs, f.name)) for f in dataclass_fields(coeffs))
        worst = max(worst, abs(ev(coeffs, p, q)) / max(scale, 1e-300))
    return worst


def _sqrt_checked(value: float) -> float:
    if value < -1e-12:
        raise AssertionError(f"gated radicand came out negative: {value!r}")
    return math.sqrt(max(value, 0.0))


def _sign_paired(lengths: BarLengths, slots, condition: str) -> list[InfinitySolution]:
    """Emit the antipodal pair of a radical tuple, signs resolved empirically.

    slots has one entry per coordinate: "inf", or (magnitude, inverted).
    Exactly two sign assignments over the finite slots satisfy all six
    coupling relations, and they are each other's negation.
    """
    val_idx = [i for i, slot in enumerate(slots) if slot != "inf"]
    survivors: list[tuple[ProjReal, ProjReal, ProjReal, ProjReal]] = []
    for signs in product((1.0, -1.0), repeat=len(val_idx)):
        coords: list[ProjReal] = []
        k = 0
        for slot in slots:
            if slot == "inf":
                coords.append(ProjReal.infinity())
            else:
                mag, inverted = slot
                v = signs[k] * mag
                k += 1
                coords.append(ProjReal(1.0, v) if inverted else ProjReal(v))
        t = tuple(coords)
        if relation_residual(lengths, t) <= 1e-8:
            survivors.append(t)
    if len(survivors) != 2:
        raise AssertionError(
            f"expected an antipodal pair of folded configurations, found {len(survivors)}"
        )
    return [_point(*t, condition) for t in survivors]


def solutions_at_infinity(lengths: BarLengths) -> list[InfinitySolution]:
    """Class dispatch for every configuration with a tangent at infinity."""
    cls = classify(lengths)
    kind = cls.kind
    a, b, c, d = lengths.as_tuple()
    inf = ProjReal.infinity()
    zero = ProjReal(0.0)
    limit = "limit point of both finite branches"

    if kind in (LinkageKind.RHOMBUS, LinkageKind.DELTOID_I, LinkageKind.DELTOID_II):
        return _circle_solutions(lengths)
    if kind is LinkageKind.ISOGRAM:
        return [_point(inf, zero, inf, zero, limit), _point(zero, inf, zero, inf, limit)]
    if kind is LinkageKind.CONIC_I:
        return [_point(inf, inf, inf, inf, limit)]
    if kind is LinkageKind.CONIC_II:
        out = [_point(inf, zero, inf, zero, limit)]
        if d * a > b * c:
            slots = (
                (_sqrt_checked(a * (b - c) / (c * (b - a)) - 1.0), False),
                "inf",
                (_sqrt_checked(d * (c - b) / (b * (c - d)) - 1.0), False),
                (_sqrt_checked(d * a / (b * c) - 1.0), True),
            )
            out += _sign_paired(lengths, slots, "reachable: delta*alpha > beta*gamma")
        else:
            slots = (
                (_sqrt_checked(b * (a - d) / (d * (a - b)) - 1.0), False),
                (_sqrt_checked(b * c / (d * a) - 1.0), True),
                (_sqrt_checked(c * (d - a) / (a * (d - c)) - 1.0), False),
                "inf",
            )
            out += _sign_paired(lengths, slots, "reachable: delta*alpha < beta*gamma")
        return out
    if kind is LinkageKind.CONIC_III:
        out = [_point(zero, inf, zero, inf, limit)]
        if c * d > a * b:
            slots = (
                "inf",
                (_sqrt_checked(c * (b - a) / (a * (b - c)) - 1.0), False),
                (_sqrt_checked(c * d / (a * b) - 1.0), True),
                (_sqrt_checked(d * (a - b) / (b * (a - d)) - 1.0), False),
            )
            out += _sign_paired(lengths, slots, "reachable: gamma*delta > alpha*beta")
        else:
            slots = (
                (_sqrt_checked(a * b / (c * d) - 1.0), True),
                (_sqrt_checked(b * (c - d) / (d * (c - b)) - 1.0), False),
                "inf",
                (_sqrt_checked(a * (d - c) / (c * (d - a)) - 1.0), False),
            )
            out += _sign_paired(lengths, slots, "reachable: gamma*delta < alpha*beta")
        return out

    # elliptic: four gates; exactly one of each opposite pair is open
    data = elliptic_data(lengths, cls)
    s = lengths.sigma
    out = []
    gates = elliptic_infinity_gates(lengths, data.M)
    if gates["x"]:
        slots = (
            "inf",
            (_sqrt_checked(c * (b - a) / ((s - b) * (s - a - c)) - 1.0), False),
            (_sqrt_checked(c * d / ((s - a) * (s - b)) - 1.0), True),
            (_sqrt_checked(d * (a - b) / ((s - a) * (s - b - d)) - 1.0), False),
        )
        out += _sign_paired(lengths, slots, "(M-1)(sigma-alpha-beta) < 0")
    if gates["y"]:
        slots = (
            (_sqrt_checked(a * (b - c) / ((s - b) * (s - a - c)) - 1.0), False),
            "inf",
            (_sqrt_checked(d * (c - b) / ((s - c) * (s - b - d)) - 1.0), False),
            (_sqrt_checked(d * a / ((s - b) * (s - c)) - 1.0), True),
        )
        out += _sign_paired(lengths, slots, "(M-1)(sigma-beta-gamma) < 0")
    if gates["z"]:
        slots = (
            (_sqrt_checked(a * b / ((s - c) * (s - d)) - 1.0), True),
            (_sqrt_checked(b * (c - d) / ((s - c) * (s - b - d)) - 1.0), False),
            "inf",
            (_sqrt_checked(a * (d - c) / ((s - d) * (s - a - c)) - 1.0), False),
        )
        out += _sign_paired(lengths, slots, "(M-1)(sigma-gamma-delta) < 0")
    if gates["w"]:
        slots = (
            (_sqrt_checked(b * (a - d) / ((s - a) * (s - b - d)) - 1.0), False),
            (_sqrt_checked(b * c / ((s - a) * (s - d)) - 1.0), True),
            (_sqrt_checked(c * (d - a) / ((s - d) * (s - a - c)) - 1.0), False),
            "inf",
        )
        out += _sign_paired(lengths, slots, "(M-1)(sigma-delta-alpha) < 0")
    return out


def elliptic_infinity_gates(lengths: BarLengths, M: float | None = None) -> dict[str, bool]:
    """Which tangents can reach infinity: (M-1)(sigma - pair sum) < 0 per coordinate."""
    if M is None:
        M = elliptic_data(lengths).M
    a, b, c, d = lengths.as_tuple()
    s = lengths.sigma
    return {
        "x": (M - 1.0) * (s - a - b) < 0.0,
        "y": (M - 1.0) * (s - b - c) < 0.0,
        "z": (M - 1.0) * (s - c - d) < 0.0,
        "w": (M - 1.0) * (s - d - a) < 0.0,
    }
