"""Exact structure of the integer solutions of a1*X1 + ... + an*Xn = 0.

The coefficient vector must be unimodular (gcd 1).  Public indices are
1-based throughout.
"""

from .basis import BasisMatrix, CertifiedBasis, build_basis, is_basis, verify_basis
from .errors import (
    BasisRejected,
    BudgetExceeded,
    ContainmentViolation,
    InvariantViolation,
    NonIntegralSolution,
    NotUnimodular,
    TooShort,
    UnimodularError,
    Unsolvable,
    VerificationFailed,
)
from .matrix import IntMatrix, HnfResult, SnfResult, det_exact, gcd_minors, hnf, snf, solve_exact, solve_upper_triangular
from .oracle import ModuleSpan, box_restriction, enumerate_box, modules_equal, oracle_basis, quotient_from_generators
from .presentation import Presentation, build_presentation, verify_presentation
from .quotients import (
    QuotientStructure,
    check_C_divisibility,
    compute_C,
    d_chain,
    p_part_permutation_check,
    quotient_S_mod_Si,
    quotient_S_mod_Ui,
    quotient_W_mod_S,
)
from .ring import gcd_prefixes, p_part, solve_linear_congruence, xgcd, xgcd_multi
from .solution import (
    Coefficients,
    choose_M,
    from_w_coords,
    is_solution,
    spanning_set,
    u_vector,
    v_vector,
    validate_coefficients,
    w_coords,
)

__version__ = "0.1.0"
