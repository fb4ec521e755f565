"""Configuration spaces of planar 4-bar linkages.

Validate bar lengths, classify the linkage, trace every branch of its real
configuration space (including the solutions at infinity), solve for
configurations at a given joint tangent, and analyze Grashof/self-
intersection behavior.  A JSON HTTP service and a CLI wrap the library.
"""

from .analysis import TopologyReport, grashof, is_self_intersected, topology_report
from .branches import BranchDescriptor, BranchKind, enumerate_branches, sample_branch, trace_branch
from .coeffs import (
    AdjCoeffs,
    DiagCoeffs,
    OppCoeffs,
    eval_f,
    eval_g,
    eval_h,
    f_coeffs,
    f_coeffs_xw,
    g_coeffs,
    h_coeffs,
    solve_f_for_second,
    solve_g_for_opposite,
)
from .elliptic import JacobiTriple, Modulus, complete_K, dc, inverse_dc, jacobi_complex, jacobi_real
from .errors import (
    AngleAtInfinityOrZero,
    DegenerateIdentically,
    LinkageError,
    ModulusOutOfRange,
    NearPole,
    NonPositiveLength,
    OutOfDomain,
    QuadrilateralInequalityViolated,
    ResidualTooLarge,
    SnapPoint,
    TargetOutOfRange,
    WrongClass,
)
from .geometry import Configuration, closure_oracle
from .identities import IdentityReport, identity_residuals, verify_identities
from .lengths import BarLengths, LinkageClass, LinkageKind, classify, conjugate, switch_strip, validate_lengths
from .params import Amplitudes, EllipticData, EllipticForm, PhaseShifts, amplitudes, elliptic_data, phase_shifts
from .projective import ProjReal
from .signed import Axis, SignedValue, signed_sqrt
from .solve import InfinitySolution, solutions_at_infinity, solve_at_x

__version__ = "0.1.0"

__all__ = [
    "AdjCoeffs", "Amplitudes", "AngleAtInfinityOrZero", "Axis", "BarLengths",
    "BranchDescriptor", "BranchKind", "Configuration", "DegenerateIdentically",
    "DiagCoeffs", "EllipticData", "EllipticForm", "IdentityReport",
    "InfinitySolution", "LinkageClass", "LinkageError", "LinkageKind",
    "Modulus", "ModulusOutOfRange", "NearPole", "NonPositiveLength",
    "OppCoeffs", "OutOfDomain", "PhaseShifts", "ProjReal",
    "QuadrilateralInequalityViolated", "ResidualTooLarge", "SignedValue",
    "SnapPoint", "TargetOutOfRange", "TopologyReport", "WrongClass",
    "amplitudes", "classify", "closure_oracle", "complete_K", "conjugate",
    "dc", "elliptic_data", "enumerate_branches", "eval_f", "eval_g", "eval_h",
    "f_coeffs", "f_coeffs_xw", "g_coeffs", "grashof", "h_coeffs",
    "identity_residuals", "inverse_dc", "is_self_intersected",
    "jacobi_complex", "jacobi_real", "phase_shifts", "sample_branch",
    "signed_sqrt", "solutions_at_infinity", "solve_at_x", "solve_f_for_second",
    "solve_g_for_opposite", "switch_strip", "topology_report", "trace_branch",
    "validate_lengths", "verify_identities", "JacobiTriple",
]
