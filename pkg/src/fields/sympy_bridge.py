"""与 sympy 的转换层。

Q 上的多项式 gcd、因式分解与结式交给 sympy 的稠密多项式内核
（dup_* 系列函数），其余域上的运算由本包自行实现。

Author: QuarticPF Team
Created: 2026-03-03
"""

from typing import Any, Dict, List, Sequence, Tuple

import sympy
from sympy.polys.domains import QQ
from sympy.polys.euclidtools import dup_inner_gcd
from sympy.polys.factortools import dup_factor_list

from src.utils.logger import get_logger

logger = get_logger(__name__)


def qq_inner_gcd(
    f_low: Sequence[Any], g_low: Sequence[Any]
) -> Tuple[List[Any], List[Any], List[Any]]:
    """Q 上的 gcd 与两个余因子。

    Args:
        f_low: 低次在前的系数列表
        g_low: 低次在前的系数列表

    Returns:
        (h, cff, cfg)，均为低次在前；h 为 gcd，f = h·cff，g = h·cfg
    """
    h, cff, cfg = dup_inner_gcd(list(reversed(f_low)), list(reversed(g_low)), QQ)
    return list(reversed(h)), list(reversed(cff)), list(reversed(cfg))


def qq_factor_list(f_low: Sequence[Any]) -> Tuple[Any, List[Tuple[List[Any], int]]]:
    """Q 上的不可约分解。

    Returns:
        (首项系数, [(低次在前的因子, 重数), ...])，因子为首一多项式
    """
    coeff, factors = dup_factor_list(list(reversed(f_low)), QQ)
    out: List[Tuple[List[Any], int]] = []
    for factor, mult in factors:
        low = list(reversed(factor))
        lead = low[-1]
        if lead != 1:
            coeff = coeff * lead**mult
            low = [c / lead for c in low]
        out.append((low, mult))
    out.sort(key=lambda item: (len(item[0]), [str(c) for c in item[0]]))
    return coeff, out


def to_sympy_rational(value: Any) -> sympy.Rational:
    return sympy.Rational(int(value.numerator), int(value.denominator))


def bivariate_resultant(
    g_terms: Dict[Tuple[int, int], Any], m_low: Sequence[Any]
) -> List[Any]:
    """计算 Res_z(G(u, z), m(z))，结果为 u 的多项式。

    Args:
        g_terms: {(u 次数, z 次数): 有理系数}
        m_low: z 的首一多项式系数（低次在前）

    Returns:
        低次在前的有理系数列表
    """
    u, z = sympy.symbols("u z")
    g_expr = sympy.Add(
        *[to_sympy_rational(c) * u**i * z**j for (i, j), c in g_terms.items()]
    )
    m_expr = sympy.Add(*[to_sympy_rational(c) * z**j for j, c in enumerate(m_low)])
    res = sympy.resultant(g_expr, m_expr, z)
    coeffs = sympy.Poly(res, u, domain=sympy.QQ).all_coeffs()
    logger.debug(f"norm resultant of degree {len(coeffs) - 1}")
    return [QQ.from_sympy(c) for c in reversed(coeffs)]


def qq_real_roots(f_low: Sequence[Any], digits: int = 12) -> List[float]:
    """Q 上多项式的实根：sympy 精确隔离后按 digits 位有效数字取浮点值。

    Args:
        f_low: 低次在前的有理系数

    Returns:
        升序排列的实根（按重数去重）
    """
    y = sympy.Symbol("y")
    poly = sympy.Poly([to_sympy_rational(c) for c in reversed(f_low)], y, domain=sympy.QQ)
    if poly.degree() < 1:
        return []
    roots = sorted(set(poly.real_roots()), key=lambda r: float(r.evalf(digits)))
    return [float(r.evalf(digits)) for r in roots]
