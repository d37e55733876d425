"""ODE 的变量替换：一般有理代换、单项式拉回与下降。

链式法则把 d/dx 写成 κ·d/du，逐阶展开 y⁽ᵏ⁾ 在新导数上的表达式，
代入后重新首一化。

Author: QuarticPF Team
Created: 2026-03-05
"""

from typing import Callable, List

from src.fields.ratfun import RationalFunction, RationalFunctionField
from src.fields.unipoly import UniPoly
from src.fuchsian.ode import LinearODE
from src.utils.errors import PolynomialError
from src.utils.logger import get_logger

logger = get_logger(__name__)


def _rewrite(
    field: RationalFunctionField,
    coefficients: List[RationalFunction],
    scale: RationalFunction,
    differentiate: Callable[[RationalFunction], RationalFunction],
) -> LinearODE:
    """Σ c_k·(scale·D)^k y 展开成 Σ e_i·D^i y 并首一化。

    differentiate 是新导数 D 作用在系数上的方式。
    """
    order = len(coefficients) - 1
    zero = field.zero
    # expansions[k][i]: y⁽ᵏ⁾（旧变量）中 D^i y 的系数
    current = [field.one]
    total = [coefficients[0] * field.one] + [zero] * order
    for k in range(1, order + 1):
        nxt = [zero] * (len(current) + 1)
        for i, c in enumerate(current):
            if not c.is_zero():
                nxt[i] = nxt[i] + differentiate(c) * scale
                nxt[i + 1] = nxt[i + 1] + c * scale
        current = nxt
        for i, c in enumerate(current):
            if not c.is_zero():
                total[i] = total[i] + coefficients[k] * c
    return LinearODE.from_operator(field, total)


def change_of_variable(ode: LinearODE, phi: RationalFunction) -> LinearODE:
    """
    代换 x = φ(u)

    Args:
        ode: 变量 x 的方程
        phi: 新变量 u 的有理函数

    Returns:
        变量 u 的首一方程

    Raises:
        PolynomialError: φ 为常数
    """
    dphi = phi.derivative()
    if dphi.is_zero():
        raise PolynomialError("change of variable by a constant function")
    field = phi.field
    coeffs = [c.compose(phi) for c in ode.coefficients] + [field.one]
    return _rewrite(field, [field.convert(c) for c in coeffs], dphi.inverse(), lambda c: c.derivative())


def at_infinity(ode: LinearODE, var: str = "u") -> LinearODE:
    """x = 1/u，把 ∞ 移到 u = 0。"""
    field = RationalFunctionField(ode.base, var)
    return change_of_variable(ode, field.gen.inverse())


def recenter(ode: LinearODE, point: object, var: str = "u") -> LinearODE:
    """x = u + a，把 a 移到 u = 0；a 可以在常数域的扩域中。"""
    base = getattr(point, "field", ode.base)
    if not base.is_extension_of(ode.base):
        base = ode.base
    field = RationalFunctionField(base, var)
    return change_of_variable(ode, field.gen + point)


def pullback_monomial(ode: LinearODE, n: int, var: str = "s") -> LinearODE:
    """
    沿 t = sⁿ 拉回

    Raises:
        PolynomialError: n 不是正整数
    """
    if n <= 0:
        raise PolynomialError(f"pullback exponent must be positive, got {n}")
    field = RationalFunctionField(ode.base, var)
    if n == 1:
        return ode.with_var(var)
    return change_of_variable(ode, field.gen**n)


def _power_substitute(c: RationalFunction, n: int, target: RationalFunctionField) -> RationalFunction:
    """把 g(sⁿ) 改写为 g(t)；系数不是 sⁿ 的函数时报错。"""

    def descend(p: UniPoly) -> UniPoly:
        out = []
        for i, a in enumerate(p.coeffs):
            if i % n:
                if not p.field.is_zero(a):
                    raise PolynomialError(
                        f"coefficient {c} is not a function of {c.field.var}^{n}",
                        {"coefficient": str(c)},
                    )
            else:
                out.append(a)
        return UniPoly(target.base, out, target.var)

    return RationalFunction(target, descend(c.num), descend(c.den))


def descend_monomial(ode: LinearODE, n: int, var: str = "t") -> LinearODE:
    """
    拉回的逆：求 L′ 使 pullback_monomial(L′, n) = L

    Raises:
        PolynomialError: n 非正或系数不是 sⁿ 的函数
    """
    if n <= 0:
        raise PolynomialError(f"descent exponent must be positive, got {n}")
    if n == 1:
        return ode.with_var(var)
    field = ode.field
    s = field.gen
    # d/ds = n·s^(n−1)·d/dt，d/dt 作用在 s 的函数上为 (1/(n·s^(n−1)))·d/ds
    scale = s ** (n - 1) * n
    kappa = scale.inverse()
    coeffs = list(ode.coefficients) + [field.one]
    in_s = _rewrite(field, coeffs, scale, lambda c: c.derivative() * kappa)
    target = RationalFunctionField(ode.base, var)
    descended = LinearODE(target, [_power_substitute(c, n, target) for c in in_s.coefficients])
    logger.debug(f"descended order-{ode.order} equation along {var} = {ode.var}^{n}")
    return descended
