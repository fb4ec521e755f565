"""Exception hierarchy for the fourbar package."""

from __future__ import annotations


class LinkageError(Exception):
    """Base class for all domain errors raised by this package."""


class NonPositiveLength(LinkageError):
    """A bar length was zero, negative, or not finite."""


class QuadrilateralInequalityViolated(LinkageError):
    """One bar is at least as long as the other three combined."""

    def __init__(self, bar: str, message: str | None = None):
        self.bar = bar
        super().__init__(message or f"bar {bar} violates the quadrilateral inequality")


class WrongClass(LinkageError):
    """Operation requested for a linkage class it is not defined on."""


class DegenerateIdentically(LinkageError):
    """A quadratic whose three coefficients all vanish; cannot solve."""


class ModulusOutOfRange(LinkageError):
    """Elliptic modulus k outside the supported range."""


class NearPole(LinkageError):
    """Complex argument too close to a pole of the Jacobi functions."""


class TargetOutOfRange(LinkageError):
    """Inverse special-function target outside the attained range."""


class OutOfDomain(LinkageError):
    """Branch parameter outside the branch's domain."""


class SnapPoint(LinkageError):
    """Branch parameter sits exactly on a snap point (x hits 0 or infinity)."""


class ResidualTooLarge(LinkageError):
    """Parametrized configuration disagrees with plane geometry beyond tolerance."""

    def __init__(self, residual: float, tol: float):
        self.residual = residual
        self.tol = tol
        super().__init__(f"closure residual {residual:.3e} exceeds tolerance {tol:.3e}")


class AngleAtInfinityOrZero(LinkageError):
    """Sign-pattern test undefined: some half-angle tangent is 0 or infinite."""
