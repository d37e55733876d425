"""单变量有理函数域 K(var)。

元素保存为互素的 (分子, 首一分母)。参数族的系数域 Q(s)、ODE 的
系数以及尖点上的稳定微分 Q(ζ9)(z) 都是这个类型。

Author: QuarticPF Team
Created: 2026-03-02
"""

from typing import Any, List, Optional

from src.fields.base import Field
from src.fields.printing import is_simple
from src.fields.unipoly import UniPoly
from src.utils.errors import FieldError


class RationalFunctionField(Field):
    """有理函数域 base(var)。

    Attributes:
        base: 常数域
        var: 变量名
    """

    def __init__(self, base: Field, var: str = "s") -> None:
        self.base = base
        self.var = var
        self.name = f"{base.name}({var})"

    def poly(self, coeffs: Any) -> UniPoly:
        return UniPoly(self.base, coeffs, self.var)

    @property
    def zero(self) -> "RationalFunction":
        return RationalFunction(self, UniPoly.zero(self.base, self.var), normalized=True)

    @property
    def one(self) -> "RationalFunction":
        return RationalFunction(self, UniPoly.one(self.base, self.var), normalized=True)

    @property
    def gen(self) -> "RationalFunction":
        return RationalFunction(self, UniPoly.gen(self.base, self.var), normalized=True)

    def from_polys(self, num: UniPoly, den: Optional[UniPoly] = None) -> "RationalFunction":
        return RationalFunction(self, num, den)

    def convert(self, value: Any) -> "RationalFunction":
        if isinstance(value, RationalFunction):
            if value.field is self or value.field == self:
                return value
            if value.field.var != self.var:
                raise FieldError(
                    f"cannot convert element of {value.field.name} to {self.name}"
                )
            num = UniPoly(self.base, value.num.coeffs, self.var)
            den = UniPoly(self.base, value.den.coeffs, self.var)
            return RationalFunction(self, num, den, normalized=True)
        if isinstance(value, UniPoly):
            if value.var == self.var and value.field == self.base:
                return RationalFunction(self, value, normalized=True)
            if value.is_constant():
                return self.convert(value.coefficient(0))
            raise FieldError(f"cannot convert polynomial in {value.var} to {self.name}")
        c = self.base.convert(value)
        return RationalFunction(self, UniPoly(self.base, [c], self.var), normalized=True)

    def contains(self, value: Any) -> bool:
        return isinstance(value, RationalFunction) and value.field == self

    def to_str(self, value: Any) -> str:
        return str(value)

    def size(self, value: Any) -> int:
        return 8 * (value.num.degree + value.den.degree) + value.num.nnz() + value.den.nnz()

    def derivative(self, value: Any) -> "RationalFunction":
        return value.derivative()

    def base_chain(self) -> List[Field]:
        return [self] + self.base.base_chain()

    def __eq__(self, other: object) -> bool:
        if self is other:
            return True
        return (
            isinstance(other, RationalFunctionField)
            and self.var == other.var
            and self.base == other.base
        )

    def __hash__(self) -> int:
        return hash(("ratfun", self.var, hash(self.base)))


class RationalFunction:
    """K(var) 的元素：num/den，互素且 den 首一。"""

    __slots__ = ("field", "num", "den")

    def __init__(
        self,
        field: RationalFunctionField,
        num: UniPoly,
        den: Optional[UniPoly] = None,
        *,
        normalized: bool = False,
    ) -> None:
        self.field = field
        if den is None:
            den = UniPoly.one(field.base, field.var)
            normalized = True
        if den.is_zero():
            raise FieldError("division by zero in rational function field")
        if not normalized:
            num, den = self._normalize(num, den)
        self.num = num
        self.den = den

    @staticmethod
    def _normalize(num: UniPoly, den: UniPoly) -> "tuple[UniPoly, UniPoly]":
        if num.is_zero():
            return num, UniPoly.one(den.field, den.var)
        if den.degree == 0:
            inv = den.field.one / den.lc
            return num.scale(inv), UniPoly.one(den.field, den.var)
        _, a, b = num.gcd_cofactors(den)
        lc = b.lc
        if lc != den.field.one:
            inv = den.field.one / lc
            a, b = a.scale(inv), b.scale(inv)
        return a, b

    def _make(self, num: UniPoly, den: UniPoly, normalized: bool = False) -> "RationalFunction":
        return RationalFunction(self.field, num, den, normalized=normalized)

    def _coerce(self, other: Any) -> Optional["RationalFunction"]:
        if isinstance(other, RationalFunction) and (
            other.field is self.field or other.field == self.field
        ):
            return other
        try:
            return self.field.convert(other)
        except FieldError:
            return None

    # ============ 算术 ============

    def __add__(self, other: Any) -> "RationalFunction":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.den == o.den:
            if self.den.is_one():
                return self._make(self.num + o.num, self.den, normalized=True)
            return self._make(self.num + o.num, self.den)
        if o.den.is_one():
            return self._make(self.num + o.num * self.den, self.den, normalized=True)
        if self.den.is_one():
            return self._make(self.num * o.den + o.num, o.den, normalized=True)
        g, b1, d1 = self.den.gcd_cofactors(o.den)
        num = self.num * d1 + o.num * b1
        if g.is_one():
            return self._make(num, self.den * o.den, normalized=not num.is_zero())
        return self._make(num, b1 * o.den)

    __radd__ = __add__

    def __neg__(self) -> "RationalFunction":
        return self._make(-self.num, self.den, normalized=True)

    def __sub__(self, other: Any) -> "RationalFunction":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other: Any) -> "RationalFunction":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other: Any) -> "RationalFunction":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.num.is_zero() or o.num.is_zero():
            return self.field.zero
        if self.den.is_one() and o.den.is_one():
            return self._make(self.num * o.num, self.den, normalized=True)
        a, b = self.num, self.den
        c, d = o.num, o.den
        if not d.is_one():
            g1, a, d = a.gcd_cofactors(d)
        if not b.is_one():
            g2, c, b = c.gcd_cofactors(b)
        num, den = a * c, b * d
        lc = den.lc
        if lc != den.field.one:
            inv = den.field.one / lc
            num, den = num.scale(inv), den.scale(inv)
        return self._make(num, den, normalized=True)

    __rmul__ = __mul__

    def inverse(self) -> "RationalFunction":
        if self.num.is_zero():
            raise FieldError("division by zero in rational function field")
        lc = self.num.lc
        inv = self.field.base.one / lc
        return self._make(self.den.scale(inv), self.num.scale(inv), normalized=True)

    def __truediv__(self, other: Any) -> "RationalFunction":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other: Any) -> "RationalFunction":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, n: int) -> "RationalFunction":
        if n < 0:
            return self.inverse() ** (-n)
        return self._make(self.num**n, self.den**n, normalized=True)

    # ============ 微积分与代换 ============

    def derivative(self) -> "RationalFunction":
        """对变量求导。"""
        if self.den.is_one():
            return self._make(self.num.derivative(), self.den, normalized=True)
        num = self.num.derivative() * self.den - self.num * self.den.derivative()
        return self._make(num, self.den * self.den)

    def evaluate(self, x: Any) -> Any:
        """在 x 处求值，x 可以属于常数域的扩域。

        Raises:
            FieldError: x 是极点
        """
        d = self.den.evaluate(x)
        if not d:
            raise FieldError(f"pole of {self} at {x}", {"point": str(x)})
        return self.num.evaluate(x) / d

    __call__ = evaluate

    def compose(self, phi: "RationalFunction") -> "RationalFunction":
        """复合 self(phi)，phi 可以属于另一个有理函数域。"""
        return _poly_at(self.num, phi) / _poly_at(self.den, phi)

    def is_polynomial(self) -> bool:
        return self.den.is_one()

    def is_constant(self) -> bool:
        return self.den.is_one() and self.num.is_constant()

    def constant_value(self) -> Any:
        return self.num.coefficient(0)

    def valuation_at(self, place: UniPoly) -> int:
        """在不可约多项式 place 处的阶（零点为正，极点为负）。"""
        if self.num.is_zero():
            raise FieldError("valuation of zero")
        order = 0
        n = self.num
        while True:
            q, r = n.divmod(place)
            if not r.is_zero():
                break
            n, order = q, order + 1
        d = self.den
        while True:
            q, r = d.divmod(place)
            if not r.is_zero():
                break
            d, order = q, order - 1
        return order

    def valuation_at_infinity(self) -> int:
        return self.den.degree - self.num.degree

    # ============ 比较与打印 ============

    def __bool__(self) -> bool:
        return not self.num.is_zero()

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __eq__(self, other: object) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __hash__(self) -> int:
        if self.den.is_one() and self.num.is_constant():
            return hash(self.num)
        return hash((self.num, self.den))

    def __str__(self) -> str:
        num = str(self.num)
        if self.den.is_one():
            return num
        den = str(self.den)
        if not is_simple(num):
            num = f"({num})"
        if not is_simple(den) or "/" in den:
            den = f"({den})"
        return f"{num}/{den}"

    def __repr__(self) -> str:
        return f"RationalFunction({self}, over {self.field.name})"


def _poly_at(poly: UniPoly, phi: RationalFunction) -> RationalFunction:
    acc = phi.field.zero
    for c in reversed(poly.coeffs):
        acc = acc * phi + c
    return acc

