"""Plane geometry of a linkage configuration: vertices, closure, diagonals.

The ground bar beta lies on the x-axis from D = (0, 0) to A = (beta, 0).
Walking counter-clockwise, the bars are DA = beta, AB = gamma, BC = delta,
CD = alpha, and the joint angles sit at

    rho_x at D (between alpha and beta),   rho_y at A (between beta and gamma),
    rho_z at B (between gamma and delta),  rho_w at C (between delta and alpha).

Each rho measures the folding away from the straightened position, so

    B = (beta + gamma cos rho_y, gamma sin rho_y)
    C = (-alpha cos rho_x,       alpha sin rho_x)

and a pair (rho_x, rho_y) closes the linkage iff |BC| = delta.  The
diagonals are u = |CA| and v = |BD|.  This module is the geometric oracle:
any parametrized configuration must reproduce these coordinates.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

from .errors import ResidualTooLarge
from .lengths import BarLengths
from .projective import ProjReal

Vec = tuple[float, float]


def wrap_angle(t: float) -> float:
    """Reduce to (-pi, pi]."""
    r = math.remainder(t, 2.0 * math.pi)
    return r + 2.0 * math.pi if r <= -math.pi else r


def _signed_angle(u: Vec, v: Vec) -> float:
    """Counter-clockwise angle from u to v in (-pi, pi]."""
    return math.atan2(u[0] * v[1] - u[1] * v[0], u[0] * v[0] + u[1] * v[1])


def _folding_angle(p: Vec, nxt: Vec, prv: Vec) -> float:
    """Joint angle at p: pi minus the ccw angle from (p->nxt) to (p->prv)."""
    un = (nxt[0] - p[0], nxt[1] - p[1])
    uv = (prv[0] - p[0], prv[1] - p[1])
    return wrap_angle(math.pi - _signed_angle(un, uv))


def place_vertices(lengths: BarLengths, rho_x: float, rho_y: float) -> tuple[Vec, Vec, Vec, Vec]:
    """Vertices (A, B, C, D) for given joint angles at D and A."""
    a, b, c, _ = lengths.as_tuple()
    av: Vec = (b, 0.0)
    bv: Vec = (b + c * math.cos(rho_y), c * math.sin(rho_y))
    cv: Vec = (-a * math.cos(rho_x), a * math.sin(rho_x))
    dv: Vec = (0.0, 0.0)
    return av, bv, cv, dv


class ClosureResult(NamedTuple):
    residual: float
    rho_z: float
    rho_w: float
    vertices: tuple[Vec, Vec, Vec, Vec]


def closure_oracle(lengths: BarLengths, rho_x: float, rho_y: float) -> ClosureResult:
    """Residual ||BC| - delta| plus the remaining joint angles from coordinates.

    rho_z and rho_w are recovered from the oriented bar directions regardless
    of the residual, so callers can inspect near-misses.
    """
    av, bv, cv, dv = place_vertices(lengths, rho_x, rho_y)
    residual = abs(math.dist(bv, cv) - lengths.delta)
    rho_z = _folding_angle(bv, cv, av)
    rho_w = _folding_angle(cv, dv, bv)
    return ClosureResult(residual, rho_z, rho_w, (av, bv, cv, dv))


@dataclass(frozen=True, slots=True)
class Configuration:
    """One admissible linkage position: tangents, angles, coordinates."""

    x: ProjReal
    y: ProjReal
    z: ProjReal
    w: ProjReal
    rho_x: float
    rho_y: float
    rho_z: float
    rho_w: float
    vertices: tuple[Vec, Vec, Vec, Vec]
    u: float
    v: float

    def tangents(self) -> tuple[ProjReal, ProjReal, ProjReal, ProjReal]:
        return (self.x, self.y, self.z, self.w)


def _diagonals(vertices: tuple[Vec, Vec, Vec, Vec]) -> tuple[float, float]:
    av, bv, cv, dv = vertices
    return math.dist(cv, av), math.dist(bv, dv)


def configuration_from_xy(
    lengths: BarLengths, x: ProjReal, y: ProjReal, tol: float | None = None
) -> Configuration:
    """Build the full configuration determined by tangents x and y.

    Raises ResidualTooLarge when (x, y) does not close the linkage within
    tol (default 1e-7 * sigma).
    """
    if tol is None:
        tol = 1e-7 * lengths.sigma
    rho_x, rho_y = x.angle(), y.angle()
    res = closure_oracle(lengths, rho_x, rho_y)
    if res.residual > tol:
        raise ResidualTooLarge(res.residual, tol)
    u, v = _diagonals(res.vertices)
    return Configuration(
        x=x,
        y=y,
        z=ProjReal.from_angle(res.rho_z),
        w=ProjReal.from_angle(res.rho_w),
        rho_x=rho_x,
        rho_y=rho_y,
        rho_z=res.rho_z,
        rho_w=res.rho_w,
        vertices=res.vertices,
        u=u,
        v=v,
    )


def configuration_from_tangents(
    lengths: BarLengths,
    x: ProjReal,
    y: ProjReal,
    z: ProjReal,
    w: ProjReal,
    tol: float | None = None,
    tangent_tol: float = 1e-7,
) -> Configuration:
    """Validate a full tangent quadruple against the geometric oracle.

    The quadruple is kept verbatim; closure must hold and the recovered
    rho_z / rho_w must match z and w projectively.
    """
    if tol is None:
        tol = 1e-7 * lengths.sigma
    rho_x, rho_y = x.angle(), y.angle()
    res = closure_oracle(lengths, rho_x, rho_y)
    if res.residual > tol:
        raise ResidualTooLarge(res.residual, tol)
    dz = z.distance(ProjReal.from_angle(res.rho_z))
    dw = w.distance(ProjReal.from_angle(res.rho_w))
    if max(dz, dw) > tangent_tol:
        raise ResidualTooLarge(max(dz, dw), tangent_tol)
    u, v = _diagonals(res.vertices)
    return Configuration(
        x=x, y=y, z=z, w=w,
        rho_x=rho_x, rho_y=rho_y, rho_z=res.rho_z, rho_w=res.rho_w,
        vertices=res.vertices, u=u, v=v,
    )


def _orient(p: Vec, q: Vec, r: Vec) -> float:
    return (q[0] - p[0]) * (r[1] - p[1]) - (q[1] - p[1]) * (r[0] - p[0])


def _on_segment(p: Vec, q: Vec, r: Vec) -> bool:
    return (
        min(p[0], q[0]) - 1e-12 <= r[0] <= max(p[0], q[0]) + 1e-12
        and min(p[1], q[1]) - 1e-12 <= r[1] <= max(p[1], q[1]) + 1e-12
    )


def segments_intersect(p1: Vec, p2: Vec, p3: Vec, p4: Vec) -> bool:
    """Whether closed segments p1p2 and p3p4 share a point."""
    d1 = _orient(p3, p4, p1)
    d2 = _orient(p3, p4, p2)
    d3 = _orient(p1, p2, p3)
    d4 = _orient(p1, p2, p4)
    if ((d1 > 0 and d2 < 0) or (d1 < 0 and d2 > 0)) and (
        (d3 > 0 and d4 < 0) or (d3 < 0 and d4 > 0)
    ):
        return True
    if d1 == 0 and _on_segment(p3, p4, p1):
        return True
    if d2 == 0 and _on_segment(p3, p4, p2):
        return True
    if d3 == 0 and _on_segment(p1, p2, p3):
        return True
    if d4 == 0 and _on_segment(p1, p2, p4):
        return True
    return False


def quad_self_intersected(vertices: tuple[Vec, Vec, Vec, Vec]) -> bool:
    """Geometric self-intersection test on the two non-adjacent bar pairs."""
    av, bv, cv, dv = vertices
    return segments_intersect(dv, av, bv, cv) or segments_intersect(av, bv, cv, dv)
