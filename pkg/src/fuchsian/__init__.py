"""有理函数系数线性 ODE 的局部分析：奇点、指数、拉回与 Frobenius 级数。"""

from src.fuchsian.frobenius import (
    FrobeniusSeries,
    check_series,
    frobenius_series,
    series_residual_order,
    taylor_coefficients,
)
from src.fuchsian.ode import LinearODE, parse_ode
from src.fuchsian.singularities import (
    INFINITY,
    HypergeometricParameters,
    LocalExponents,
    Place,
    RiemannScheme,
    hypergeometric_parameters,
    is_hypergeometric,
    local_exponents,
    riemann_scheme,
    singular_points,
    singular_points_in,
)
from src.fuchsian.transforms import (
    at_infinity,
    change_of_variable,
    descend_monomial,
    pullback_monomial,
    recenter,
)

__all__ = [
    "FrobeniusSeries",
    "HypergeometricParameters",
    "INFINITY",
    "LinearODE",
    "LocalExponents",
    "Place",
    "RiemannScheme",
    "at_infinity",
    "change_of_variable",
    "check_series",
    "descend_monomial",
    "frobenius_series",
    "hypergeometric_parameters",
    "is_hypergeometric",
    "local_exponents",
    "parse_ode",
    "pullback_monomial",
    "recenter",
    "riemann_scheme",
    "series_residual_order",
    "singular_points",
    "singular_points_in",
    "taylor_coefficients",
]
