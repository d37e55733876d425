"""单变量多项式。

稠密系数表示（低次在前），系数取自任意 Field。数域的极小多项式、
有理函数的分子分母、判别式与 ODE 的系数都由它承载。Q 上的 gcd 与
因式分解走 sympy 的快速路径。

Author: QuarticPF Team
Created: 2026-03-02
"""

from typing import Any, Callable, Iterable, List, Optional, Sequence, Tuple

from src.fields.base import Field
from src.fields.printing import format_power, format_sum
from src.fields.rational import QQ_FIELD, RationalField
from src.fields.sympy_bridge import qq_factor_list, qq_inner_gcd
from src.utils.errors import FieldError, PolynomialError


def _strip(field: Field, coeffs: List[Any]) -> List[Any]:
    while coeffs and field.is_zero(coeffs[-1]):
        coeffs.pop()
    return coeffs


class UniPoly:
    """域 K 上的单变量多项式 K[var]。

    Attributes:
        field: 系数域
        coeffs: 系数元组（低次在前，无前导零）
        var: 变量名

    Examples:
        >>> p = UniPoly(QQ_FIELD, [1, 0, 1], "s")
        >>> str(p)
        's^2 + 1'
    """

    __slots__ = ("field", "coeffs", "var")

    def __init__(self, field: Field, coeffs: Iterable[Any] = (), var: str = "x") -> None:
        self.field = field
        self.var = var
        self.coeffs: Tuple[Any, ...] = tuple(
            _strip(field, [field.convert(c) for c in coeffs])
        )

    @classmethod
    def _raw(cls, field: Field, coeffs: List[Any], var: str) -> "UniPoly":
        obj = cls.__new__(cls)
        obj.field = field
        obj.var = var
        obj.coeffs = tuple(_strip(field, coeffs))
        return obj

    # ============ 构造 ============

    @classmethod
    def zero(cls, field: Field, var: str = "x") -> "UniPoly":
        return cls._raw(field, [], var)

    @classmethod
    def one(cls, field: Field, var: str = "x") -> "UniPoly":
        return cls._raw(field, [field.one], var)

    @classmethod
    def gen(cls, field: Field, var: str = "x") -> "UniPoly":
        return cls._raw(field, [field.zero, field.one], var)

    @classmethod
    def constant(cls, field: Field, value: Any, var: str = "x") -> "UniPoly":
        return cls._raw(field, [field.convert(value)], var)

    @classmethod
    def monomial(cls, field: Field, degree: int, coeff: Any = 1, var: str = "x") -> "UniPoly":
        return cls._raw(field, [field.zero] * degree + [field.convert(coeff)], var)

    # ============ 基本属性 ============

    @property
    def degree(self) -> int:
        """次数；零多项式为 -1。"""
        return len(self.coeffs) - 1

    @property
    def lc(self) -> Any:
        return self.coeffs[-1] if self.coeffs else self.field.zero

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_one(self) -> bool:
        return len(self.coeffs) == 1 and self.coeffs[0] == self.field.one

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def coefficient(self, i: int) -> Any:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else self.field.zero

    def valuation(self) -> int:
        """最低非零项的次数；零多项式返回 -1。"""
        for i, c in enumerate(self.coeffs):
            if not self.field.is_zero(c):
                return i
        return -1

    def nnz(self) -> int:
        return sum(1 for c in self.coeffs if not self.field.is_zero(c))

    def size(self) -> int:
        return sum(self.field.size(c) for c in self.coeffs if not self.field.is_zero(c))

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __len__(self) -> int:
        return len(self.coeffs)

    # ============ 算术 ============

    def _coerce(self, other: Any) -> Optional["UniPoly"]:
        if isinstance(other, UniPoly):
            if other.field is not self.field and other.field != self.field:
                return None
            if other.var != self.var and not (other.is_constant() or self.is_constant()):
                raise PolynomialError(
                    f"variable mismatch: {self.var} vs {other.var}",
                    {"left": self.var, "right": other.var},
                )
            return other
        try:
            return UniPoly._raw(self.field, [self.field.convert(other)], self.var)
        except FieldError:
            return None

    def __add__(self, other: Any) -> "UniPoly":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return UniPoly._raw(self.field, out, self.var)

    __radd__ = __add__

    def __neg__(self) -> "UniPoly":
        return UniPoly._raw(self.field, [-c for c in self.coeffs], self.var)

    def __sub__(self, other: Any) -> "UniPoly":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other: Any) -> "UniPoly":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def scale(self, c: Any) -> "UniPoly":
        c = self.field.convert(c)
        if self.field.is_zero(c):
            return UniPoly.zero(self.field, self.var)
        return UniPoly._raw(self.field, [c * a for a in self.coeffs], self.var)

    def __mul__(self, other: Any) -> "UniPoly":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not self.coeffs or not o.coeffs:
            return UniPoly.zero(self.field, self.var)
        if len(o.coeffs) == 1:
            return self.scale(o.coeffs[0])
        if len(self.coeffs) == 1:
            return o.scale(self.coeffs[0])
        zero = self.field.zero
        out = [zero] * (len(self.coeffs) + len(o.coeffs) - 1)
        is_zero = self.field.is_zero
        for i, a in enumerate(self.coeffs):
            if is_zero(a):
                continue
            for j, b in enumerate(o.coeffs):
                if not is_zero(b):
                    out[i + j] = out[i + j] + a * b
        return UniPoly._raw(self.field, out, self.var)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "UniPoly":
        if n < 0:
            raise PolynomialError("negative power of a polynomial")
        result = UniPoly.one(self.field, self.var)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def divmod(self, other: "UniPoly") -> Tuple["UniPoly", "UniPoly"]:
        """带余除法 self = q·other + r，deg r < deg other。

        Raises:
            FieldError: 除数为零多项式
        """
        o = self._coerce(other)
        if o is None or o.is_zero():
            raise FieldError("polynomial division by zero")
        if self.degree < o.degree:
            return UniPoly.zero(self.field, self.var), self
        rem = list(self.coeffs)
        dq = o.degree
        inv_lc = self.field.one / o.lc
        quot = [self.field.zero] * (len(rem) - dq)
        is_zero = self.field.is_zero
        for k in range(len(rem) - 1, dq - 1, -1):
            c = rem[k]
            if is_zero(c):
                continue
            q = c * inv_lc
            quot[k - dq] = q
            for j, b in enumerate(o.coeffs):
                if not is_zero(b):
                    rem[k - dq + j] = rem[k - dq + j] - q * b
        return (
            UniPoly._raw(self.field, quot, self.var),
            UniPoly._raw(self.field, rem[:dq], self.var),
        )

    def __floordiv__(self, other: Any) -> "UniPoly":
        return self.divmod(other)[0]

    def __mod__(self, other: Any) -> "UniPoly":
        return self.divmod(other)[1]

    def exquo(self, other: "UniPoly") -> "UniPoly":
        """精确除法。

        Raises:
            PolynomialError: 不能整除
        """
        q, r = self.divmod(other)
        if not r.is_zero():
            raise PolynomialError(
                "inexact polynomial division",
                {"dividend": str(self), "divisor": str(other), "remainder": str(r)},
            )
        return q

    # ============ 求值与复合 ============

    def evaluate(self, x: Any) -> Any:
        """Horner 求值；x 可以是本域元素或其扩域元素。"""
        acc: Any = self.field.zero
        for c in reversed(self.coeffs):
            acc = x * acc + c
        return acc

    __call__ = evaluate

    def compose(self, g: "UniPoly") -> "UniPoly":
        """复合 self(g)。"""
        acc = UniPoly.zero(g.field, g.var)
        for c in reversed(self.coeffs):
            acc = acc * g + c
        return acc

    def derivative(self) -> "UniPoly":
        return UniPoly._raw(
            self.field, [c * i for i, c in enumerate(self.coeffs) if i > 0], self.var
        )

    def map_coefficients(
        self, fn: Callable[[Any], Any], field: Optional[Field] = None
    ) -> "UniPoly":
        target = field or self.field
        return UniPoly(target, [fn(c) for c in self.coeffs], self.var)

    def with_var(self, var: str) -> "UniPoly":
        return UniPoly._raw(self.field, list(self.coeffs), var)

    def shift(self, n: int) -> "UniPoly":
        """乘以 var^n。"""
        if not self.coeffs:
            return self
        return UniPoly._raw(self.field, [self.field.zero] * n + list(self.coeffs), self.var)

    # ============ gcd 与分解 ============

    def _is_qq(self) -> bool:
        return isinstance(self.field, RationalField)

    def monic(self) -> "UniPoly":
        if not self.coeffs:
            return self
        lc = self.lc
        if lc == self.field.one:
            return self
        inv = self.field.one / lc
        return UniPoly._raw(self.field, [c * inv for c in self.coeffs], self.var)

    def gcd(self, other: "UniPoly") -> "UniPoly":
        """首一 gcd；两者都为零时返回零多项式。"""
        return self.gcd_cofactors(other)[0]

    def gcd_cofactors(self, other: "UniPoly") -> Tuple["UniPoly", "UniPoly", "UniPoly"]:
        """返回 (g, self/g, other/g)，g 首一。"""
        o = self._coerce(other)
        if o is None:
            raise PolynomialError("gcd over different fields")
        if o.is_zero():
            if self.is_zero():
                zero = UniPoly.zero(self.field, self.var)
                return zero, zero, zero
            g = self.monic()
            return g, UniPoly.constant(self.field, self.lc, self.var), o
        if self.is_zero():
            g = o.monic()
            return g, self, UniPoly.constant(self.field, o.lc, self.var)
        if self._is_qq():
            h, cf, cg = qq_inner_gcd(self.coeffs, o.coeffs)
            lead = h[-1]
            if lead != 1:
                h = [c / lead for c in h]
                cf = [c * lead for c in cf]
                cg = [c * lead for c in cg]
            return (
                UniPoly._raw(self.field, h, self.var),
                UniPoly._raw(self.field, cf, self.var),
                UniPoly._raw(self.field, cg, self.var),
            )
        a, b = self, o
        while not b.is_zero():
            a, b = b, a % b
        g = a.monic()
        if g.is_one():
            return g, self, o
        return g, self.exquo(g), o.exquo(g)

    def xgcd(self, other: "UniPoly") -> Tuple["UniPoly", "UniPoly", "UniPoly"]:
        """扩展欧几里得：返回 (g, u, v)，u·self + v·other = g 且 g 首一。"""
        r0, r1 = self, other
        s0, s1 = UniPoly.one(self.field, self.var), UniPoly.zero(self.field, self.var)
        t0, t1 = s1, s0
        while not r1.is_zero():
            q, r = r0.divmod(r1)
            r0, r1 = r1, r
            s0, s1 = s1, s0 - q * s1
            t0, t1 = t1, t0 - q * t1
        if r0.is_zero():
            return r0, s0, t0
        inv = self.field.one / r0.lc
        return r0.scale(inv), s0.scale(inv), t0.scale(inv)

    def lcm(self, other: "UniPoly") -> "UniPoly":
        if self.is_zero() or other.is_zero():
            return UniPoly.zero(self.field, self.var)
        g, a, _ = self.gcd_cofactors(other)
        return (a * other).monic()

    def squarefree_decomposition(self) -> List[Tuple["UniPoly", int]]:
        """Yun 无平方分解，返回 [(首一因子, 重数)]，常数因子省略。

        Examples:
            >>> x = UniPoly.gen(QQ_FIELD)
            >>> [(str(p), m) for p, m in (x**2 * (x + 1)).squarefree_decomposition()]
            [('x + 1', 1), ('x', 2)]
        """
        if self.degree < 1:
            return []
        f = self.monic()
        fp = f.derivative()
        a0 = f.gcd(fp)
        b = f.exquo(a0)
        c = fp.exquo(a0)
        d = c - b.derivative()
        out: List[Tuple[UniPoly, int]] = []
        i = 1
        while b.degree > 0:
            a = b.gcd(d)
            b_next = b.exquo(a)
            c = d.exquo(a)
            if a.degree > 0:
                out.append((a, i))
            d = c - b_next.derivative()
            b = b_next
            i += 1
        return out

    def squarefree_part(self) -> "UniPoly":
        out = UniPoly.one(self.field, self.var)
        for p, _ in self.squarefree_decomposition():
            out = out * p
        return out

    def factor_rational(self) -> List[Tuple["UniPoly", int]]:
        """Q 上的不可约分解（首一因子）。

        Raises:
            FieldError: 系数域不是 Q
        """
        if not self._is_qq():
            raise FieldError(
                "irreducible factorization is only available over Q",
                {"field": self.field.name},
            )
        if self.degree < 1:
            return []
        _, factors = qq_factor_list(self.coeffs)
        return [(UniPoly._raw(QQ_FIELD, low, self.var), m) for low, m in factors]

    def roots_rational(self) -> List[Tuple[Any, int]]:
        """Q 上的有理根及重数。"""
        return [
            (-p.coeffs[0], m) for p, m in self.factor_rational() if p.degree == 1
        ]

    # ============ 比较与打印 ============

    def __eq__(self, other: object) -> bool:
        if isinstance(other, UniPoly):
            return self.coeffs == other.coeffs and (
                self.var == other.var or len(self.coeffs) <= 1
            )
        try:
            c = self.field.convert(other)
        except FieldError:
            return NotImplemented
        return self.coeffs == ((c,) if not self.field.is_zero(c) else ())

    def __hash__(self) -> int:
        if len(self.coeffs) <= 1:
            return hash(self.coeffs[0]) if self.coeffs else hash(0)
        return hash((self.var, self.coeffs))

    def terms(self) -> List[Tuple[str, str]]:
        """打印用的 (系数文本, 单项式文本) 列表，高次在前。"""
        return [
            (self.field.to_str(c), format_power(self.var, i))
            for i, c in reversed(list(enumerate(self.coeffs)))
            if not self.field.is_zero(c)
        ]

    def __str__(self) -> str:
        return format_sum(self.terms())

    def __repr__(self) -> str:
        return f"UniPoly({self}, over {self.field.name})"


def poly_from_roots(field: Field, roots: Sequence[Any], var: str = "x") -> UniPoly:
    """构造 ∏(var − r)。"""
    out = UniPoly.one(field, var)
    x = UniPoly.gen(field, var)
    for r in roots:
        out = out * (x - r)
    return out
