"""Algebraic identities relating bar lengths to their conjugate complements.

These equalities between expressions in (alpha..delta) and in
(sigma-alpha..sigma-delta) underpin the coefficient symmetries, conjugate
invariance, and the orthodiagonal simplifications.  verify_identities
evaluates both sides of every identity numerically and reports the worst
relative residual; it backs both the test suite and the CLI report.
"""

from __future__ import annotations

from dataclasses import dataclass

from .lengths import BarLengths, classify


@dataclass(frozen=True)
class IdentityReport:
    residuals: dict[str, float]
    max_residual: float
    orthodiagonal_checked: bool


def _rel(lhs: float, rhs: float, floor: float) -> float:
    return abs(lhs - rhs) / max(abs(lhs), abs(rhs), floor)


def _chain(values: list[float], floor: float) -> float:
    return max(_rel(p, q, floor) for p in values for q in values)


def identity_residuals(lengths: BarLengths, include_orthodiagonal: bool | None = None) -> IdentityReport:
    """Residuals of identities [1]-[7], plus [8] when the linkage is orthodiagonal.

    include_orthodiagonal forces or suppresses the orthodiagonal block; by
    default it is included iff classify() reports the orthodiagonal flag.
    """
    a, b, c, d = lengths.as_tuple()
    s = lengths.sigma
    sa, sb, sc, sd = s - a, s - b, s - c, s - d
    # residuals are measured against the larger side or the natural
    # sigma-power scale of the expression, whichever is bigger, so that
    # identities whose sides cancel to ~0 do not blow up the ratio
    f1, f2, f4 = s, s * s, s**4

    res: dict[str, float] = {}
    res["1"] = _rel(s - a - b, -(s - c - d), f1)
    res["2"] = _chain(
        [sa * sb - a * b, s * (s - a - b), -s * (s - c - d), c * d - sc * sd], f2
    )
    res["3"] = _chain(
        [
            sa * sb - c * d,
            (s - a - c) * (s - b - c),
            -(s - c - a) * (s - d - a),
            a * b - sc * sd,
        ],
        f2,
    )
    res["4"] = max(
        _rel(a + b, sc + sd, f1),
        _rel(a - b, sb - sa, f1),
        _rel(a * b + c * d, sa * sb + sc * sd, f2),
    )
    res["5"] = _rel(
        a * b * c * d - sa * sb * sc * sd,
        s * (s - a - b) * (s - a - c) * (s - b - c),
        f4,
    )
    res["6"] = _rel(
        a * a + b * b + c * c + d * d, sa * sa + sb * sb + sc * sc + sd * sd, f2
    )
    res["7"] = _rel(
        a * b - c * d, 0.5 * (-sa * sa - sb * sb + sc * sc + sd * sd), f2
    )

    if include_orthodiagonal is None:
        include_orthodiagonal = classify(lengths).orthodiagonal
    if include_orthodiagonal:
        res["8"] = max(
            _rel(sb * (s - b - d), 0.5 * (b - a) * (b - c), f2),
            _rel(sa * (s - a - d), 0.5 * (b - a) * (b + c), f2),
            _rel(sc * (s - c - d), 0.5 * (b + a) * (b - c), f2),
            _rel(s * sd, 0.5 * (b + a) * (b + c), f2),
            _chain([sa * sc, 0.5 * (a * c + b * d), sb * sd], f2),
        )
    return IdentityReport(res, max(res.values()), include_orthodiagonal)


# contract-facing name for the same report
verify_identities = identity_residuals
