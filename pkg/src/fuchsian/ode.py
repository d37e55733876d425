"""首一线性常微分方程。

L(y) = y⁽ʳ⁾ + a_{r−1}·y⁽ʳ⁻¹⁾ + … + a_0·y，系数是单变量有理函数。
文本形式与 CLI 一致：``y'' + ((17/9*t - 8/9)/(t^2 - t))*y' + (16/81/(t^2 - t))*y = 0``；
JSON 形式保存每个系数的分子分母系数数组。

Author: QuarticPF Team
Created: 2026-03-05
"""

import re
from typing import Any, Dict, Optional, Sequence, Tuple

from src.fields.base import Field
from src.fields.printing import is_simple
from src.fields.rational import QQ_FIELD
from src.fields.ratfun import RationalFunction, RationalFunctionField
from src.fields.unipoly import UniPoly
from src.polyring.parser import PolynomialParser, default_symbols, parse_scalar
from src.utils.errors import ParseError, PolynomialError

_DERIVATIVE = re.compile(r"\by('*)(?![A-Za-z_0-9])")


def derivative_name(k: int) -> str:
    return "y" + "'" * k


class LinearODE:
    """首一线性 ODE。

    Attributes:
        field: 系数所在的有理函数域
        coefficients: (a_0, …, a_{r−1})，已约化

    Examples:
        >>> ode = parse_ode("y'' + ((17*t - 8)/(9*t*(t - 1)))*y' + (16/(81*t*(t - 1)))*y = 0")
        >>> ode.order
        2
    """

    __slots__ = ("field", "coefficients")

    def __init__(self, field: RationalFunctionField, coefficients: Sequence[Any]) -> None:
        if not coefficients:
            raise PolynomialError("a differential equation needs order at least 1")
        self.field = field
        self.coefficients: Tuple[RationalFunction, ...] = tuple(field.convert(c) for c in coefficients)

    @classmethod
    def from_operator(cls, field: RationalFunctionField, coefficients: Sequence[Any]) -> "LinearODE":
        """由 (c_0, …, c_r) 构造并除以首项系数 c_r。"""
        coeffs = [field.convert(c) for c in coefficients]
        while coeffs and coeffs[-1].is_zero():
            coeffs.pop()
        if len(coeffs) < 2:
            raise PolynomialError("operator has order 0")
        lead = coeffs[-1]
        return cls(field, [c / lead for c in coeffs[:-1]])

    @property
    def order(self) -> int:
        return len(self.coefficients)

    @property
    def var(self) -> str:
        return self.field.var

    @property
    def base(self) -> Field:
        return self.field.base

    def coefficient(self, j: int) -> RationalFunction:
        """a_j；j = order 时为 1。"""
        if j == self.order:
            return self.field.one
        return self.coefficients[j]

    def apply(self, y: RationalFunction) -> RationalFunction:
        """把有理函数代入方程左端。"""
        total = self.field.zero
        deriv = self.field.convert(y)
        for j in range(self.order + 1):
            total = total + self.coefficient(j) * deriv
            deriv = deriv.derivative()
        return total

    def lift(self, field: RationalFunctionField) -> "LinearODE":
        """把系数提升到更大常数域上的同名变量有理函数域。"""
        return LinearODE(field, [field.convert(c) for c in self.coefficients])

    def with_var(self, var: str) -> "LinearODE":
        target = RationalFunctionField(self.base, var)
        return LinearODE(
            target,
            [
                RationalFunction(target, c.num.with_var(var), c.den.with_var(var), normalized=True)
                for c in self.coefficients
            ],
        )

    # ============ 比较与打印 ============

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LinearODE):
            return NotImplemented
        return (
            self.var == other.var
            and self.order == other.order
            and all(a == b for a, b in zip(self.coefficients, other.coefficients))
        )

    def __hash__(self) -> int:
        return hash((self.var, self.coefficients))

    def __str__(self) -> str:
        parts = [derivative_name(self.order)]
        for j in range(self.order - 1, -1, -1):
            c = self.coefficients[j]
            if c.is_zero():
                continue
            text = str(c)
            name = derivative_name(j)
            if text == "1":
                parts.append(f" + {name}")
            elif text == "-1":
                parts.append(f" - {name}")
            elif is_simple(text) and text.startswith("-"):
                parts.append(f" - {text[1:]}*{name}")
            elif is_simple(text):
                parts.append(f" + {text}*{name}")
            else:
                parts.append(f" + ({text})*{name}")
        return "".join(parts) + " = 0"

    def __repr__(self) -> str:
        return f"LinearODE({self})"

    def to_dict(self) -> Dict[str, Any]:
        base = self.base
        return {
            "variable": self.var,
            "order": self.order,
            "text": str(self),
            "coefficients": [
                {
                    "numerator": [base.to_str(c) for c in a.num.coeffs],
                    "denominator": [base.to_str(c) for c in a.den.coeffs],
                }
                for a in self.coefficients
            ],
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any], base: Field = QQ_FIELD) -> "LinearODE":
        """从 JSON 字典载入（系数数组由低次到高次）。"""
        field = RationalFunctionField(base, data["variable"])
        coeffs = []
        for entry in data["coefficients"]:
            num = UniPoly(base, [parse_scalar(c, base) for c in entry["numerator"]], field.var)
            den = UniPoly(base, [parse_scalar(c, base) for c in entry["denominator"]], field.var)
            coeffs.append(RationalFunction(field, num, den))
        return cls(field, coeffs)


def parse_ode(text: str, base: Field = QQ_FIELD, var: Optional[str] = None) -> LinearODE:
    """
    解析 ODE 文本

    方程写成 Σ c_j·y⁽ʲ⁾ = 0 的形式，导数用撇号表示；右端只能是 0。
    自变量名缺省从文本中除 y 以外的唯一标识符推断。

    Args:
        text: 方程文本，例如 ``y'' + (1/t)*y' = 0``
        base: 常数域
        var: 自变量名

    Returns:
        首一化后的 LinearODE

    Raises:
        ParseError: 语法错误、非线性或右端非零
    """
    lhs, sep, rhs = text.partition("=")
    if sep and rhs.strip() != "0":
        raise ParseError("right-hand side must be 0", 1, len(lhs) + 2, ["0"])
    orders = [len(m.group(1)) for m in _DERIVATIVE.finditer(lhs)]
    if not orders:
        raise ParseError("equation does not mention y", 1, 1, ["y"])
    order = max(orders)
    body = _DERIVATIVE.sub(lambda m: f"D{len(m.group(1))}", lhs)
    if var is None:
        names = set(re.findall(r"[A-Za-z_][A-Za-z_0-9]*", body)) - {f"D{k}" for k in range(order + 1)}
        names -= set(default_symbols(base))
        var = names.pop() if len(names) == 1 else "t"
    field = RationalFunctionField(base, var)
    dvars = tuple(f"D{k}" for k in range(order + 1))
    poly = PolynomialParser(field, dvars).parse(body)
    coeffs = []
    for k in range(order + 1):
        exp = tuple(1 if i == k else 0 for i in range(order + 1))
        coeffs.append(poly.coefficient(exp))
    if any(sum(e) != 1 for e in poly.terms):
        raise ParseError("equation must be linear and homogeneous in y", 1, 1, ["y"])
    return LinearODE.from_operator(field, coeffs)

