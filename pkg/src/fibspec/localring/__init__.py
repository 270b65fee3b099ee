from .poly import (
    MonomialOrder,
    Polynomial,
    PolynomialError,
    PolynomialSyntaxError,
    parse_polynomial,
)
from .standard import (
    DEFAULT_DEGREE_CAP,
    INFINITE,
    DegreeCapExceeded,
    LocalIdeal,
    local_standard_basis,
    mora_normal_form,
    quotient_dimension,
)
from .invariants import (
    is_weighted_homogeneous,
    jacobian_ideal,
    milnor_number,
    tyurina_number,
)

__all__ = [
    "MonomialOrder",
    "Polynomial",
    "PolynomialError",
    "PolynomialSyntaxError",
    "parse_polynomial",
    "DEFAULT_DEGREE_CAP",
    "INFINITE",
    "DegreeCapExceeded",
    "LocalIdeal",
    "local_standard_basis",
    "mora_normal_form",
    "quotient_dimension",
    "is_weighted_homogeneous",
    "jacobian_ideal",
    "milnor_number",
    "tyurina_number",
]
