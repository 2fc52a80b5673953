"""Residue counts of x^2 + a/x modulo a prime.

Closed-form counts keyed on the quadratic partition p = A^2 + 3B^2 and the
cubic class of the parameter, definitional enumeration oracles to check
them against, and a sweep harness that compares the two over every prime
in range.
"""

from .closedform import (
    VpBreakdown,
    a_from_count,
    binom_mod,
    chi3,
    jacobi_check,
    jacobsthal_closed,
    l_from_count,
    von_sterneck_value,
    vp_2a,
    vp_closed,
    vp_closed_via_26,
    vp_cor24,
    vp_half_x2,
)
from .cubicres import (
    CubicClass,
    count_t_preimages,
    cubic_class,
    h_set,
    in_c0,
    is_cubic_residue,
    k_map,
    t_map,
)
from .errors import (
    BadK,
    CubecountError,
    EmptyDomain,
    InternalInconsistency,
    MissingRep,
    NonIntegerResult,
    SingularPoint,
    WrongResidueClass,
    ZeroArgument,
    ZeroInverse,
)
from .modarith import (
    MAX_PRIME,
    Prime,
    as_residue,
    inv_mod,
    is_prime,
    legendre,
    mul_mod,
    pow_mod,
    rational_mod,
    sqrt_mod,
)
from .oracle import (
    CountResult,
    Domain,
    RationalMap,
    discriminant_cubic,
    jacobsthal_brute,
    np_cubic_roots,
    vp_brute,
)
from .quadform import (
    EisRep,
    QuadRep,
    class_value_targets,
    l_from_ab,
    represent_a3b,
    represent_l27m,
    two_class_is_b_mult3,
)
from .sweep import CHECKS, SweepReport, primes_between, run_sweep

__version__ = "0.1.0"

__all__ = [
    "BadK",
    "CHECKS",
    "CountResult",
    "CubecountError",
    "CubicClass",
    "Domain",
    "EisRep",
    "EmptyDomain",
    "InternalInconsistency",
    "MAX_PRIME",
    "MissingRep",
    "NonIntegerResult",
    "Prime",
    "QuadRep",
    "RationalMap",
    "SingularPoint",
    "SweepReport",
    "VpBreakdown",
    "WrongResidueClass",
    "ZeroArgument",
    "ZeroInverse",
    "a_from_count",
    "as_residue",
    "binom_mod",
    "chi3",
    "class_value_targets",
    "count_t_preimages",
    "cubic_class",
    "discriminant_cubic",
    "h_set",
    "in_c0",
    "inv_mod",
    "is_cubic_residue",
    "is_prime",
    "jacobi_check",
    "jacobsthal_brute",
    "jacobsthal_closed",
    "k_map",
    "l_from_ab",
    "l_from_count",
    "legendre",
    "mul_mod",
    "np_cubic_roots",
    "pow_mod",
    "primes_between",
    "rational_mod",
    "represent_a3b",
    "represent_l27m",
    "run_sweep",
    "sqrt_mod",
    "t_map",
    "two_class_is_b_mult3",
    "von_sterneck_value",
    "vp_2a",
    "vp_brute",
    "vp_closed",
    "vp_closed_via_26",
    "vp_cor24",
    "vp_half_x2",
]
