"""Frobenius 级数解。

在正则奇点（或常点）u = 0 处，把 y = u^ρ·Σ c_m u^m 代入 u^r·L(y)，
逐项解出 c_m·I(m+ρ) = −Σ_{i<m} c_i·Σ_j b_{j,m−i}·[i+ρ]_j，
其中 b_j = u^{r−j}·a_j 的 Taylor 系数，I 是指标多项式，[x]_j 是下降阶乘。

Author: QuarticPF Team
Created: 2026-03-06
"""

from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Tuple

from src.fields.base import Field
from src.fields.ratfun import RationalFunction
from src.fields.unipoly import UniPoly
from src.fuchsian.ode import LinearODE
from src.fuchsian.singularities import Point, indicial_data
from src.utils.config import settings
from src.utils.errors import PolynomialError, ResonanceError
from src.utils.logger import get_logger

logger = get_logger(__name__)


@dataclass(frozen=True)
class FrobeniusSeries:
    """截断的 Frobenius 解 u^ρ·(c_0 + c_1 u + … + c_N u^N)，c_0 = 1。

    Attributes:
        point: 展开点
        exponent: ρ
        coefficients: (c_0, …, c_N)
        var: 局部变量名
    """

    point: str
    exponent: Any
    coefficients: Tuple[Any, ...]
    field: Field
    var: str = "u"

    @property
    def terms(self) -> int:
        return len(self.coefficients) - 1

    def truncated(self) -> UniPoly:
        """不含 u^ρ 因子的多项式部分。"""
        return UniPoly(self.field, self.coefficients, self.var)

    def __str__(self) -> str:
        body = str(self.truncated())
        if not self.field.is_zero(self.exponent):
            return f"{self.var}^({self.field.to_str(self.exponent)})*({body})"
        return body

    def to_dict(self) -> Dict[str, Any]:
        return {
            "point": self.point,
            "exponent": self.field.to_str(self.exponent),
            "variable": self.var,
            "coefficients": [self.field.to_str(c) for c in self.coefficients],
        }


def taylor_coefficients(f: RationalFunction, shift: int, count: int) -> List[Any]:
    """u^shift·f 在 u = 0 处的前 count 个 Taylor 系数。

    Raises:
        PolynomialError: u^shift·f 在 0 处有极点
    """
    base = f.field.base
    if f.is_zero():
        return [base.zero] * count
    nv, dv = f.num.valuation(), f.den.valuation()
    lead = shift + nv - dv
    if lead < 0:
        raise PolynomialError(f"{f} times u^{shift} has a pole at 0")
    num = f.num.coeffs[nv:]
    den = f.den.coeffs[dv:]
    inv0 = base.one / den[0]
    out: List[Any] = [base.zero] * count
    series: List[Any] = []
    for m in range(count - lead):
        acc = num[m] if m < len(num) else base.zero
        for k in range(1, min(m, len(den) - 1) + 1):
            acc = acc - den[k] * series[m - k]
        series.append(acc * inv0)
    for m, c in enumerate(series):
        out[m + lead] = c
    return out


def _falling_value(x: Any, j: int, one: Any) -> Any:
    acc = one
    for i in range(j):
        acc = acc * (x - i)
    return acc


def frobenius_series(
    ode: LinearODE, point: Point, rho: Any, terms: Optional[int] = None
) -> FrobeniusSeries:
    """
    计算规范化 Frobenius 解的前 N+1 项

    Args:
        ode: 首一 ODE
        point: 正则奇点或常点（可以是 ``INFINITY``）
        rho: 指数
        terms: 截断阶 N，缺省取配置 FROBENIUS_TERMS

    Returns:
        FrobeniusSeries，系数满足递推并经过回代验证

    Raises:
        IrregularSingularityError: 点不是正则奇点
        PolynomialError: rho 不是该点的指数
        ResonanceError: 某个 m ≥ 1 使 I(m+ρ) = 0，需要对数项

    Examples:
        >>> [str(c) for c in frobenius_series(L1, 0, 0, 1).coefficients]
        ['1', '2/9']
    """
    n_terms = settings.FROBENIUS_TERMS if terms is None else terms
    if n_terms < 0:
        raise PolynomialError(f"truncation order must be non-negative, got {n_terms}")
    centered, _, label = indicial_data(ode, point)
    base = centered.base
    r = centered.order
    rho = base.convert(rho)
    b = [taylor_coefficients(centered.coefficient(j), r - j, n_terms + 1) for j in range(r + 1)]

    def bracket(x: Any, shift: int) -> Any:
        total = base.zero
        for j in range(r + 1):
            if not base.is_zero(b[j][shift]):
                total = total + b[j][shift] * _falling_value(x, j, base.one)
        return total

    if not base.is_zero(bracket(rho, 0)):
        raise PolynomialError(f"{base.to_str(rho)} is not a local exponent at {label}")

    coeffs: List[Any] = [base.one]
    for m in range(1, n_terms + 1):
        indicial = bracket(rho + m, 0)
        if base.is_zero(indicial):
            raise ResonanceError(
                f"exponent {base.to_str(rho)} at {label} is resonant at step {m}",
                {"exponent": base.to_str(rho), "step": m},
            )
        acc = base.zero
        for i in range(m):
            if not base.is_zero(coeffs[i]):
                acc = acc + coeffs[i] * bracket(rho + i, m - i)
        coeffs.append(-acc / indicial)

    series = FrobeniusSeries(label, rho, tuple(coeffs), base, centered.var)
    check_series(ode, point, series)
    logger.debug(f"Frobenius series at {label} with exponent {base.to_str(rho)}: {n_terms} terms")
    return series


def series_residual_order(ode: LinearODE, point: Point, series: FrobeniusSeries) -> Optional[int]:
    """把截断级数代回 u^r·L，返回余项在 u^ρ 之后的首个非零次数（恒为零时返回 None）。

    记 y = u^ρ·P(u)，则 y^(j) = u^{ρ−j}·Q_j，Q_0 = P，Q_{j+1} = (ρ−j)·Q_j + u·Q_j′，
    于是 u^r·L(y) = u^ρ·Σ_j (u^{r−j}·a_j)·Q_j，全程是精确的有理函数运算。
    """
    centered, _, _ = indicial_data(ode, point)
    field = centered.field
    r = centered.order
    u = field.gen
    rho = centered.base.convert(series.exponent)
    q = field.from_polys(field.poly(list(series.coefficients)))
    total = field.zero
    for j in range(r + 1):
        total = total + centered.coefficient(j) * u ** (r - j) * q
        q = field.convert(rho - j) * q + u * q.derivative()
    if total.is_zero():
        return None
    return total.num.valuation() - total.den.valuation()


def check_series(ode: LinearODE, point: Point, series: FrobeniusSeries) -> None:
    """
    回代验证：u^r·L(y) 的余项必须从 u^{ρ+N+1} 起

    Raises:
        PolynomialError: 余项在 u^{ρ+m}（m ≤ N）处非零
    """
    order = series_residual_order(ode, point, series)
    if order is not None and order <= series.terms:
        raise PolynomialError(
            f"Frobenius series at {series.point} fails at order {order}",
            {"order": order, "terms": series.terms},
        )
