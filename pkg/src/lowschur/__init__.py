"""Schur-class rational interpolation with a degree budget."""

from .algebra import (
    ComplexPoly,
    LowerToeplitz,
    RationalFn,
    hankel_matrix,
    hankel_rank,
    poly_eval,
    poly_reflect,
    rational_reduce,
    rational_taylor,
    toeplitz_mul,
    toeplitz_solve_lower,
)
from .config import DEFAULT, Tolerances
from .errors import (
    DimensionError,
    ExtractionError,
    InadmissibleDataError,
    InconsistentThetaError,
    LowSchurError,
    NumericalInstabilityError,
    PoleAtOriginError,
    ReflectionIndexError,
    RejectedParameterError,
    SingularToeplitzError,
    StripError,
)
from .interpolant import SolveResult, Solution, apply_lft, central_solution, mcmillan_degree, solve_rsp
from .params import (
    ParameterSpec,
    alpha0_sufficient,
    beta_from_alpha,
    hankel_constraint,
    make_param_k_above_n,
    make_param_k_below_n,
    make_param_k_equal_n,
    schur_membership,
)
from .schur import (
    ProblemInstance,
    SchurParams,
    backward_schur_step,
    check_admissible,
    forward_schur_step,
    inverse_schur_data,
    pick_matrix,
    schur_parameters,
)
from .transfer import ThetaMatrix, build_AB, build_R, build_theta, det_residual, toeplitz_factors
from .verify import VerificationReport, degree_law_probe, roundtrip_extract, verify_solution

__version__ = "0.1.0"
