"""Formal series with rational exponents on exact truncation windows."""
from .calculus import D, derivative
from .compose import associativity_defect, comp_inverse, compose, lagrange_coefficient
from .config import get_tolerance, set_tolerance, tolerance
from .errors import *  # noqa: F401,F403
from .power import (
    arg_of,
    branch_quotient,
    pow,
    pow_iterate_branch,
    pow_multiset_oracle,
    pow_product_branch,
)
from .profinite import (
    Pseudointeger,
    embed,
    factorial_sum_element,
    is_integral,
    pi_add,
    pi_mul,
)
from .scalar import binomial, cpow, falling_factorial, iterate_branch, product_branch
from .series import (
    ARTINIAN,
    NOETHERIAN,
    Orientation,
    Series,
    add,
    approx_eq,
    coefficient_at,
    degree,
    dualize,
    invert,
    make,
    mul,
    neg,
    scalar_mul,
    sub,
    truncate,
)
from .symmetric import (
    SymSeries,
    basis_product,
    complete,
    elementary,
    monomial_expand,
    omega,
    powersum,
    sym_invert,
    sym_mul,
    triangularity_check,
)

__version__ = "0.1.0"
