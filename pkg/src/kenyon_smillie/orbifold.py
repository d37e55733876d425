"""s = 0 纤维的函数域模型 y⁹ = x²(x − 1)³。

三个微分 y·dx/(x(x−1))、y⁵·dx/(x²(x−1)²)、y⁷·dx/(x²(x−1)³) 的四次单项式
都是 y^r·x^i·(x−1)^j·dx⁴ 的形式；把 y 的指数模 9 约化后按 r 分组，
每组的和是 x 的有理函数，关系成立当且仅当每组都为零。

Author: QuarticPF Team
Created: 2026-03-10
"""

from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Tuple

from src.fields.cyclotomic import orbifold_tower, zeta3
from src.fields.number_field import NumberField
from src.fields.unipoly import UniPoly
from src.kenyon_smillie.reports import CheckReport
from src.kenyon_smillie.resources import load_polynomial
from src.polyring.multipoly import MultiPoly
from src.utils.logger import get_logger

logger = get_logger(__name__)

X_VAR = "x"
# y⁹ = x²·(x − 1)³
Y_DEGREE = 9
RELATION = (2, 3)
# ω_k = y^a·x^{-b}·(x−1)^{-c}·dx
DIFFERENTIALS: Tuple[Tuple[int, int, int], ...] = ((1, 1, 1), (5, 2, 2), (7, 2, 3))


@dataclass(frozen=True)
class SuperellipticMonomial:
    """scalar·y^r·x^i·(x − 1)^j，0 ≤ r < 9。

    Attributes:
        y_exponent: y 的指数（约化后）
        scalar: 塔 Q(ζ9)[u] 中的系数
        x_power: x 的指数，可以为负
        x1_power: x − 1 的指数，可以为负
    """

    y_exponent: int
    scalar: Any
    x_power: int
    x1_power: int

    def reduce(self) -> "SuperellipticMonomial":
        """用 y⁹ = x²(x−1)³ 把 y 的指数约化到 0..8。"""
        q, r = divmod(self.y_exponent, Y_DEGREE)
        return SuperellipticMonomial(
            r, self.scalar, self.x_power + RELATION[0] * q, self.x1_power + RELATION[1] * q
        )

    def __str__(self) -> str:
        return f"({self.scalar})*y^{self.y_exponent}*x^{self.x_power}*(x-1)^{self.x1_power}"


def monomial_of(exponent: Tuple[int, ...], scalar: Any) -> SuperellipticMonomial:
    """ω1^a·ω2^b·ω3^c 乘以 scalar，未约化。"""
    y = sum(e * d[0] for e, d in zip(exponent, DIFFERENTIALS))
    x = -sum(e * d[1] for e, d in zip(exponent, DIFFERENTIALS))
    x1 = -sum(e * d[2] for e, d in zip(exponent, DIFFERENTIALS))
    return SuperellipticMonomial(y, scalar, x, x1)


def _shifted(field: NumberField, power: int) -> UniPoly:
    x = UniPoly.gen(field, X_VAR)
    return (x - field.one) ** power


def group_numerator(field: NumberField, group: List[SuperellipticMonomial]) -> UniPoly:
    """组内求和后乘以 x^{-min i}·(x−1)^{-min j} 得到的多项式分子。"""
    i0 = min(m.x_power for m in group)
    j0 = min(m.x1_power for m in group)
    total = UniPoly.zero(field, X_VAR)
    for m in group:
        term = UniPoly.monomial(field, m.x_power - i0, field.convert(m.scalar), X_VAR)
        total = total + term * _shifted(field, m.x1_power - j0)
    return total


def orbifold_scalars(field: NumberField) -> Tuple[Any, Any, Any]:
    """X = −ζ3·ω1，Y = u·ω2（u³ = ζ3/3），Z = ω3。"""
    return -zeta3(field.base), field.gen, field.one


def substitute(curve: MultiPoly, field: NumberField) -> Dict[int, List[SuperellipticMonomial]]:
    """把 (X, Y, Z) 换成带系数的微分，按约化后的 y 指数分组。"""
    scalars = orbifold_scalars(field)
    groups: Dict[int, List[SuperellipticMonomial]] = {}
    for e, c in curve.sorted_terms():
        scalar = field.convert(c)
        for s, k in zip(scalars, e):
            scalar = scalar * field.convert(s) ** k
        m = monomial_of(e, scalar).reduce()
        groups.setdefault(m.y_exponent, []).append(m)
        logger.debug(f"monomial {e} -> {m}")
    return groups


def verify_orbifold_relation(curve: Optional[MultiPoly] = None) -> CheckReport:
    """
    检验 F_0(−ζ3·ω1, u·ω2, ω3) = 0，u³ = ζ3/3

    Args:
        curve: 待代入的四次型，缺省为 X⁴ + XZ³ + 3Y³Z

    Returns:
        CheckReport，details 中按 y 指数列出各组的分子
    """
    curve = curve if curve is not None else load_polynomial("f0")
    field = orbifold_tower()
    groups = substitute(curve, field)
    numerators = {r: group_numerator(field, ms) for r, ms in sorted(groups.items())}
    passed = all(n.is_zero() for n in numerators.values())
    return CheckReport(
        anchor="orbifold-relation",
        passed=passed,
        summary="F_0 vanishes on the superelliptic differentials" if passed else "orbifold relation fails",
        details={
            "groups": {str(r): [str(m) for m in groups[r]] for r in sorted(groups)},
            "numerators": {str(r): str(n) for r, n in numerators.items()},
        },
    )
