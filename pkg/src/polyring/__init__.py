"""多元齐次多项式与表达式解析。"""

from src.polyring.multipoly import (
    DEFAULT_VARS,
    LinearSubstitution,
    MultiPoly,
    QuotientResult,
    coefficient_extract,
    exact_quotient,
    grlex_key,
    monomials_of_degree,
    partial_derivative,
    specialize,
    substitute_linear,
)
from src.polyring.parser import PolynomialParser, parse_polynomial, parse_scalar

__all__ = [
    "DEFAULT_VARS",
    "LinearSubstitution",
    "MultiPoly",
    "PolynomialParser",
    "QuotientResult",
    "coefficient_extract",
    "exact_quotient",
    "grlex_key",
    "monomials_of_degree",
    "parse_polynomial",
    "parse_scalar",
    "partial_derivative",
    "specialize",
    "substitute_linear",
]
