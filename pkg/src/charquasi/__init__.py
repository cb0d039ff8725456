"""Exact characteristic quasi-polynomials of central integral arrangements."""

from .arrangements import (
    COXETER_FAMILIES,
    DeformSpec,
    IntMatrix,
    format_matrix,
    gen_coxeter,
    gen_deform_a,
    gen_deform_d,
    parse_matrix,
)
from .closedforms import chi_coxeter, chi_deform_a, chi_deform_d, chi_deform_d_tm
from .counting import (
    Polynomial,
    QuasiPolynomial,
    brute_force_count,
    check_gcd_property,
    interpolate_quasi,
    snf_count,
    verify_minimum_period,
)
from .errors import (
    BudgetExceeded,
    CharQuasiError,
    EmptyArrangement,
    IndexOutOfRange,
    InvalidChain,
    InvalidParity,
    InvalidResidue,
    NotIntegral,
    NotMonic,
    SpecMismatch,
    TooManyColumns,
)
from .intlinalg import (
    ElementaryDivisors,
    PeriodResult,
    column_submatrix,
    known_period,
    lcm_period,
    smith_divisors,
)

__version__ = "0.1.0"

__all__ = [
    "COXETER_FAMILIES",
    "BudgetExceeded",
    "CharQuasiError",
    "DeformSpec",
    "ElementaryDivisors",
    "EmptyArrangement",
    "IndexOutOfRange",
    "IntMatrix",
    "InvalidChain",
    "InvalidParity",
    "InvalidResidue",
    "NotIntegral",
    "NotMonic",
    "PeriodResult",
    "Polynomial",
    "QuasiPolynomial",
    "SpecMismatch",
    "TooManyColumns",
    "brute_force_count",
    "check_gcd_property",
    "chi_coxeter",
    "chi_deform_a",
    "chi_deform_d",
    "chi_deform_d_tm",
    "column_submatrix",
    "format_matrix",
    "gen_coxeter",
    "gen_deform_a",
    "gen_deform_d",
    "interpolate_quasi",
    "known_period",
    "lcm_period",
    "parse_matrix",
    "smith_divisors",
    "snf_count",
    "verify_minimum_period",
]
