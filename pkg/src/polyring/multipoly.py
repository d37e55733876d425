"""稀疏多元多项式。

{指数元组: 非零系数} 的字典表示，变量缺省为 (X, Y, Z)，也支持任意
个数的变量。系数域可以是 Q、数域或参数的有理函数域 Q(s)。单项式序
固定为 X > Y > Z 的分次字典序，保证打印与序列化的确定性。

Author: QuarticPF Team
Created: 2026-03-03
"""

from dataclasses import dataclass
from typing import Any, Callable, Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

from src.fields.base import Field
from src.fields.printing import format_monomial, format_sum
from src.fields.ratfun import RationalFunction, RationalFunctionField
from src.fields.unipoly import UniPoly
from src.utils.errors import FieldError, PolynomialError

Exponent = Tuple[int, ...]
DEFAULT_VARS: Tuple[str, ...] = ("X", "Y", "Z")


def grlex_key(exponent: Exponent) -> Tuple[int, Exponent]:
    """分次字典序的排序键（降序排序即得最高项在前）。"""
    return (sum(exponent), exponent)


def monomials_of_degree(degree: int, nvars: int = 3) -> List[Exponent]:
    """给定总次数的全部单项式，按分次字典序降序排列。

    Examples:
        >>> monomials_of_degree(1)
        [(1, 0, 0), (0, 1, 0), (0, 0, 1)]
    """
    if degree < 0:
        return []
    if nvars == 1:
        return [(degree,)]
    out: List[Exponent] = []
    for first in range(degree, -1, -1):
        for rest in monomials_of_degree(degree - first, nvars - 1):
            out.append((first,) + rest)
    return out


class MultiPoly:
    """域 K 上的多元多项式。

    Attributes:
        field: 系数域
        vars: 变量名元组
        terms: {指数元组: 非零系数}

    Examples:
        >>> X, Y, Z = MultiPoly.variables(QQ_FIELD)
        >>> str(X**4 + X * Z**3 + Y**3 * Z * 3)
        'X^4 + X*Z^3 + 3*Y^3*Z'
    """

    __slots__ = ("field", "vars", "terms")

    def __init__(
        self,
        field: Field,
        terms: Optional[Mapping[Exponent, Any]] = None,
        vars: Sequence[str] = DEFAULT_VARS,
    ) -> None:
        self.field = field
        self.vars = tuple(vars)
        clean: Dict[Exponent, Any] = {}
        for exp, coeff in (terms or {}).items():
            exp = tuple(exp)
            if len(exp) != len(self.vars):
                raise PolynomialError(
                    f"exponent {exp} does not match {len(self.vars)} variables",
                    {"exponent": list(exp), "vars": list(self.vars)},
                )
            c = field.convert(coeff)
            if not field.is_zero(c):
                clean[exp] = c
        self.terms = clean

    @classmethod
    def _raw(cls, field: Field, terms: Dict[Exponent, Any], vars: Tuple[str, ...]) -> "MultiPoly":
        obj = cls.__new__(cls)
        obj.field = field
        obj.vars = vars
        obj.terms = terms
        return obj

    # ============ 构造 ============

    @classmethod
    def zero(cls, field: Field, vars: Sequence[str] = DEFAULT_VARS) -> "MultiPoly":
        return cls._raw(field, {}, tuple(vars))

    @classmethod
    def constant(cls, field: Field, value: Any, vars: Sequence[str] = DEFAULT_VARS) -> "MultiPoly":
        return cls(field, {(0,) * len(vars): value}, vars)

    @classmethod
    def monomial(
        cls, field: Field, exponent: Exponent, coeff: Any = 1, vars: Sequence[str] = DEFAULT_VARS
    ) -> "MultiPoly":
        return cls(field, {tuple(exponent): coeff}, vars)

    @classmethod
    def variable(cls, field: Field, name: str, vars: Sequence[str] = DEFAULT_VARS) -> "MultiPoly":
        vars = tuple(vars)
        if name not in vars:
            raise PolynomialError(f"unknown variable {name}", {"vars": list(vars)})
        exp = tuple(1 if v == name else 0 for v in vars)
        return cls._raw(field, {exp: field.one}, vars)

    @classmethod
    def variables(cls, field: Field, vars: Sequence[str] = DEFAULT_VARS) -> Tuple["MultiPoly", ...]:
        return tuple(cls.variable(field, v, vars) for v in vars)

    # ============ 基本属性 ============

    @property
    def nvars(self) -> int:
        return len(self.vars)

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    @property
    def total_degree(self) -> int:
        """最高总次数；零多项式为 -1。"""
        return max((sum(e) for e in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self.terms}) <= 1

    def is_constant(self) -> bool:
        return all(sum(e) == 0 for e in self.terms)

    def constant_value(self) -> Any:
        return self.terms.get((0,) * self.nvars, self.field.zero)

    def coefficient(self, exponent: Exponent) -> Any:
        return self.terms.get(tuple(exponent), self.field.zero)

    def sorted_terms(self) -> List[Tuple[Exponent, Any]]:
        """按分次字典序降序排列的项。"""
        return sorted(self.terms.items(), key=lambda t: grlex_key(t[0]), reverse=True)

    def leading_term(self) -> Tuple[Exponent, Any]:
        if not self.terms:
            raise PolynomialError("leading term of the zero polynomial")
        exp = max(self.terms, key=grlex_key)
        return exp, self.terms[exp]

    def var_index(self, var: Union[str, int]) -> int:
        if isinstance(var, int):
            if 0 <= var < self.nvars:
                return var
        elif var in self.vars:
            return self.vars.index(var)
        raise PolynomialError(f"unknown variable {var}", {"vars": list(self.vars)})

    # ============ 算术 ============

    def _coerce(self, other: Any) -> Optional["MultiPoly"]:
        if isinstance(other, MultiPoly):
            if other.vars != self.vars:
                raise PolynomialError(
                    "variable lists differ", {"left": list(self.vars), "right": list(other.vars)}
                )
            if other.field is self.field or other.field == self.field:
                return other
            try:
                return other.change_field(self.field)
            except FieldError:
                return None
        try:
            c = self.field.convert(other)
        except FieldError:
            return None
        if self.field.is_zero(c):
            return MultiPoly._raw(self.field, {}, self.vars)
        return MultiPoly._raw(self.field, {(0,) * self.nvars: c}, self.vars)

    def __add__(self, other: Any) -> "MultiPoly":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out = dict(self.terms)
        is_zero = self.field.is_zero
        for e, c in o.terms.items():
            if e in out:
                s = out[e] + c
                if is_zero(s):
                    del out[e]
                else:
                    out[e] = s
            else:
                out[e] = c
        return MultiPoly._raw(self.field, out, self.vars)

    __radd__ = __add__

    def __neg__(self) -> "MultiPoly":
        return MultiPoly._raw(self.field, {e: -c for e, c in self.terms.items()}, self.vars)

    def __sub__(self, other: Any) -> "MultiPoly":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other: Any) -> "MultiPoly":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def scale(self, c: Any) -> "MultiPoly":
        c = self.field.convert(c)
        if self.field.is_zero(c):
            return MultiPoly.zero(self.field, self.vars)
        return MultiPoly._raw(self.field, {e: a * c for e, a in self.terms.items()}, self.vars)

    def __mul__(self, other: Any) -> "MultiPoly":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if len(o.terms) == 1 and o.is_constant():
            return self.scale(o.constant_value())
        out: Dict[Exponent, Any] = {}
        is_zero = self.field.is_zero
        for e1, c1 in self.terms.items():
            for e2, c2 in o.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                if e in out:
                    out[e] = out[e] + c1 * c2
                else:
                    out[e] = c1 * c2
        return MultiPoly._raw(
            self.field, {e: c for e, c in out.items() if not is_zero(c)}, self.vars
        )

    __rmul__ = __mul__

    def __truediv__(self, other: Any) -> "MultiPoly":
        if isinstance(other, MultiPoly):
            if not other.is_constant() or other.is_zero():
                raise PolynomialError("division by a non-constant polynomial", {"divisor": str(other)})
            other = other.constant_value()
        try:
            c = self.field.convert(other)
        except FieldError:
            return NotImplemented
        if self.field.is_zero(c):
            raise PolynomialError("division by zero")
        return self.scale(self.field.one / c)

    def __pow__(self, n: int) -> "MultiPoly":
        if n < 0:
            raise PolynomialError("negative power of a polynomial")
        result = MultiPoly.constant(self.field, 1, self.vars)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # ============ 微分 ============

    def partial(self, var: Union[str, int]) -> "MultiPoly":
        """对变量的形式偏导数。

        Raises:
            PolynomialError: 未知变量
        """
        i = self.var_index(var)
        out: Dict[Exponent, Any] = {}
        for e, c in self.terms.items():
            if e[i]:
                ne = e[:i] + (e[i] - 1,) + e[i + 1 :]
                out[ne] = c * e[i]
        return MultiPoly._raw(self.field, out, self.vars)

    def gradient(self) -> Tuple["MultiPoly", ...]:
        return tuple(self.partial(i) for i in range(self.nvars))

    def parameter_derivative(self) -> "MultiPoly":
        """对系数中的参数求导（常数域上为零）。"""
        return self.map_coefficients(self.field.derivative)

    # ============ 系数与代换 ============

    def map_coefficients(self, fn: Callable[[Any], Any], field: Optional[Field] = None) -> "MultiPoly":
        target = field or self.field
        return MultiPoly(target, {e: fn(c) for e, c in self.terms.items()}, self.vars)

    def change_field(self, field: Field) -> "MultiPoly":
        """把系数转换到更大的域。"""
        return MultiPoly(field, {e: field.convert(c) for e, c in self.terms.items()}, self.vars)

    def evaluate(self, point: Sequence[Any]) -> Any:
        """在一点求值；点的坐标可以在系数域的扩域中。"""
        if len(point) != self.nvars:
            raise PolynomialError(
                f"point has {len(point)} coordinates, expected {self.nvars}",
                {"point": [str(p) for p in point]},
            )
        powers: List[Dict[int, Any]] = [{} for _ in point]
        total: Any = self.field.zero
        for e, c in self.terms.items():
            term: Any = c
            for i, k in enumerate(e):
                if k == 0:
                    continue
                cache = powers[i]
                if k not in cache:
                    cache[k] = point[i] ** k
                term = cache[k] * term
            total = term + total
        return total

    def compose(self, images: Sequence["MultiPoly"]) -> "MultiPoly":
        """把第 i 个变量替换为 images[i]。"""
        if len(images) != self.nvars:
            raise PolynomialError(
                f"compose needs {self.nvars} images, got {len(images)}",
            )
        target = images[0]
        result = MultiPoly.zero(target.field, target.vars)
        powers: List[Dict[int, MultiPoly]] = [{} for _ in images]
        for e, c in self.terms.items():
            term = MultiPoly.constant(target.field, c, target.vars)
            for i, k in enumerate(e):
                if k == 0:
                    continue
                if k not in powers[i]:
                    powers[i][k] = images[i] ** k
                term = term * powers[i][k]
            result = result + term
        return result

    def substitute_linear(self, subst: "LinearSubstitution") -> "MultiPoly":
        """x_i ↦ Σ_j A[i][j]·x_j。

        Raises:
            PolynomialError: 维数不符
        """
        if subst.dimension != self.nvars:
            raise PolynomialError(
                f"substitution of dimension {subst.dimension} on {self.nvars} variables",
                {"dimension": subst.dimension, "vars": list(self.vars)},
            )
        field = subst.field
        gens = MultiPoly.variables(field, self.vars)
        images = []
        for row in subst.matrix:
            img = MultiPoly.zero(field, self.vars)
            for a, g in zip(row, gens):
                if not field.is_zero(a):
                    img = img + g.scale(a)
            images.append(img)
        lifted = self if self.field == field else self.change_field(field)
        return lifted.compose(images)

    def divide(self, divisor: "MultiPoly") -> Tuple["MultiPoly", "MultiPoly"]:
        """以单个除式做多元除法，返回 (商, 余式)。

        Raises:
            PolynomialError: 除式为零
        """
        d = self._coerce(divisor)
        if d is None or d.is_zero():
            raise PolynomialError("division by the zero polynomial")
        lt_exp, lt_coeff = d.leading_term()
        inv = self.field.one / lt_coeff
        quotient = MultiPoly.zero(self.field, self.vars)
        remainder = MultiPoly.zero(self.field, self.vars)
        p = self
        while not p.is_zero():
            exp, coeff = p.leading_term()
            if all(a >= b for a, b in zip(exp, lt_exp)):
                q_exp = tuple(a - b for a, b in zip(exp, lt_exp))
                q = MultiPoly._raw(self.field, {q_exp: coeff * inv}, self.vars)
                quotient = quotient + q
                p = p - q * d
            else:
                lead = MultiPoly._raw(self.field, {exp: coeff}, self.vars)
                remainder = remainder + lead
                p = p - lead
        return quotient, remainder

    # ============ 比较与打印 ============

    def __eq__(self, other: object) -> bool:
        if isinstance(other, MultiPoly):
            if other.vars != self.vars:
                return False
            if other.field is not self.field and other.field != self.field:
                try:
                    other = other.change_field(self.field)
                except FieldError:
                    return NotImplemented
            return self.terms == other.terms
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.terms == o.terms

    def __hash__(self) -> int:
        return hash((self.vars, frozenset(self.terms.items())))

    def __str__(self) -> str:
        return format_sum(
            [
                (self.field.to_str(c), format_monomial(self.vars, e))
                for e, c in self.sorted_terms()
            ]
        )

    def __repr__(self) -> str:
        return f"MultiPoly({self}, over {self.field.name})"


@dataclass(frozen=True)
class LinearSubstitution:
    """作用在变量向量上的方阵。

    Attributes:
        field: 矩阵元素所在的域
        matrix: 方阵（行元组）
    """

    field: Field
    matrix: Tuple[Tuple[Any, ...], ...]

    def __post_init__(self) -> None:
        n = len(self.matrix)
        if any(len(row) != n for row in self.matrix):
            raise PolynomialError("linear substitution matrix must be square")
        converted = tuple(tuple(self.field.convert(a) for a in row) for row in self.matrix)
        object.__setattr__(self, "matrix", converted)

    @classmethod
    def diagonal(cls, field: Field, entries: Iterable[Any]) -> "LinearSubstitution":
        entries = list(entries)
        n = len(entries)
        return cls(
            field,
            tuple(
                tuple(entries[i] if i == j else field.zero for j in range(n)) for i in range(n)
            ),
        )

    @classmethod
    def identity(cls, field: Field, n: int = 3) -> "LinearSubstitution":
        return cls.diagonal(field, [field.one] * n)

    @property
    def dimension(self) -> int:
        return len(self.matrix)

    def is_invertible(self) -> bool:
        from src.fields.linalg import RowEchelon

        rows = [{j: a for j, a in enumerate(row)} for row in self.matrix]
        return RowEchelon(self.field, rows, range(self.dimension)).rank == self.dimension


# ============ 模块级操作 ============


@dataclass
class QuotientResult:
    """exact_quotient 的结果：整除时给出商，否则给出非零余式作为见证。"""

    divisible: bool
    quotient: MultiPoly
    remainder: MultiPoly

    def to_dict(self) -> Dict[str, Any]:
        return {
            "divisible": self.divisible,
            "quotient": str(self.quotient),
            "remainder": str(self.remainder),
        }


def partial_derivative(poly: MultiPoly, var: Union[str, int]) -> MultiPoly:
    return poly.partial(var)


def substitute_linear(poly: MultiPoly, subst: LinearSubstitution) -> MultiPoly:
    return poly.substitute_linear(subst)


def exact_quotient(poly: MultiPoly, divisor: MultiPoly) -> QuotientResult:
    """精确除法。

    Args:
        poly: 被除式
        divisor: 除式（非零）

    Returns:
        QuotientResult；不整除时 remainder 非零

    Raises:
        PolynomialError: 除式为零
    """
    q, r = poly.divide(divisor)
    return QuotientResult(divisible=r.is_zero(), quotient=q, remainder=r)


def coefficient_extract(poly: MultiPoly, exponent: Exponent, var: Optional[str] = None) -> UniPoly:
    """取出参数族中单项式的系数，作为参数的多项式。

    Raises:
        PolynomialError: 系数不是参数的多项式
    """
    c = poly.coefficient(tuple(exponent))
    field = poly.field
    if isinstance(field, RationalFunctionField):
        if not isinstance(c, RationalFunction):
            c = field.convert(c)
        if not c.is_polynomial():
            raise PolynomialError(
                f"coefficient of {exponent} is not a polynomial in {field.var}",
                {"coefficient": str(c)},
            )
        return c.num
    return UniPoly(field, [c], var or "s")


def specialize(poly: MultiPoly, value: Any, field: Field) -> MultiPoly:
    """把参数族在参数取 value 处特化，得到 field 上的多项式。

    Raises:
        FieldError: value 是某个系数的极点
    """
    if not isinstance(poly.field, RationalFunctionField):
        return poly.change_field(field)
    return MultiPoly(
        field, {e: field.convert(c.evaluate(value)) for e, c in poly.terms.items()}, poly.vars
    )
