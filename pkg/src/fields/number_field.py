"""数域塔。

数域由 (基域, 首一不可约极小多项式, 生成元名) 给出，基域可以是 Q
或另一个数域。元素是模极小多项式约化后的系数向量。

Author: QuarticPF Team
Created: 2026-03-02
"""

from typing import Any, Dict, List, Optional, Tuple

from src.fields.base import Field
from src.fields.printing import format_power, format_sum
from src.fields.rational import QQ_FIELD, RationalField
from src.fields.sympy_bridge import bivariate_resultant
from src.fields.unipoly import UniPoly
from src.utils.config import settings
from src.utils.errors import FieldError
from src.utils.logger import get_logger

logger = get_logger(__name__)


class NumberField(Field):
    """K = base[gen]/(minpoly)。

    Attributes:
        base: 基域
        minpoly: 首一极小多项式（变量名即生成元名）
        gen_name: 生成元名
        degree: 相对次数
        irreducibility_verified: 不可约性是否经过检验
    """

    def __init__(
        self, minpoly: UniPoly, gen_name: str, *, irreducibility_verified: bool = True
    ) -> None:
        self.base: Field = minpoly.field
        self.minpoly = minpoly.with_var(gen_name)
        self.gen_name = gen_name
        self.degree = minpoly.degree
        self.irreducibility_verified = irreducibility_verified
        self._modulus = list(self.minpoly.coeffs[:-1])
        self.name = f"{self.base.name}({gen_name})"

    # ============ Field 接口 ============

    @property
    def zero(self) -> "NFElem":
        return NFElem(self, (self.base.zero,) * self.degree)

    @property
    def one(self) -> "NFElem":
        return self.embed(self.base.one)

    @property
    def gen(self) -> "NFElem":
        return self.from_coeffs([self.base.zero, self.base.one])

    def embed(self, value: Any) -> "NFElem":
        """把基域元素嵌入为常数坐标。"""
        coords = [self.base.zero] * self.degree
        coords[0] = value
        return NFElem(self, tuple(coords))

    def from_coeffs(self, coeffs: List[Any]) -> "NFElem":
        """由生成元的多项式系数（任意长度）构造并约化。"""
        work = [self.base.convert(c) for c in coeffs]
        n = self.degree
        is_zero = self.base.is_zero
        for k in range(len(work) - 1, n - 1, -1):
            c = work[k]
            if is_zero(c):
                continue
            for j, m in enumerate(self._modulus):
                if not is_zero(m):
                    work[k - n + j] = work[k - n + j] - c * m
        work = work[:n] + [self.base.zero] * max(0, n - len(work))
        return NFElem(self, tuple(work))

    def from_poly(self, poly: UniPoly) -> "NFElem":
        return self.from_coeffs(list(poly.coeffs))

    def convert(self, value: Any) -> "NFElem":
        if isinstance(value, NFElem) and value.field is self:
            return value
        if isinstance(value, NFElem) and value.field == self:
            return NFElem(self, value.coords)
        if isinstance(value, UniPoly) and value.var == self.gen_name and value.field == self.base:
            return self.from_poly(value)
        return self.embed(self.base.convert(value))

    def contains(self, value: Any) -> bool:
        return isinstance(value, NFElem) and (value.field is self or value.field == self)

    def to_str(self, value: Any) -> str:
        terms = [
            (self.base.to_str(c), format_power(self.gen_name, i))
            for i, c in reversed(list(enumerate(value.coords)))
            if not self.base.is_zero(c)
        ]
        return format_sum(terms)

    def size(self, value: Any) -> int:
        return sum(self.base.size(c) for c in value.coords if not self.base.is_zero(c))

    def base_chain(self) -> List[Field]:
        return [self] + self.base.base_chain()

    @property
    def depth(self) -> int:
        return len(self.base_chain()) - 1

    @property
    def absolute_degree(self) -> int:
        if isinstance(self.base, NumberField):
            return self.degree * self.base.absolute_degree
        return self.degree

    def __eq__(self, other: object) -> bool:
        if self is other:
            return True
        return (
            isinstance(other, NumberField)
            and self.gen_name == other.gen_name
            and self.base == other.base
            and self.minpoly.coeffs == other.minpoly.coeffs
        )

    def __hash__(self) -> int:
        return hash((self.gen_name, self.degree, hash(self.base)))


class NFElem:
    """数域元素：约化后的坐标向量。"""

    __slots__ = ("field", "coords")

    def __init__(self, field: NumberField, coords: Tuple[Any, ...]) -> None:
        self.field = field
        self.coords = coords

    def _coerce(self, other: Any) -> Optional["NFElem"]:
        if isinstance(other, NFElem):
            if other.field is self.field or other.field == self.field:
                return other
            if other.field.is_extension_of(self.field):
                return None
        try:
            return self.field.convert(other)
        except FieldError:
            return None

    def _is_scalar(self) -> bool:
        base = self.field.base
        return all(base.is_zero(c) for c in self.coords[1:])

    def __add__(self, other: Any) -> "NFElem":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return NFElem(self.field, tuple(a + b for a, b in zip(self.coords, o.coords)))

    __radd__ = __add__

    def __neg__(self) -> "NFElem":
        return NFElem(self.field, tuple(-a for a in self.coords))

    def __sub__(self, other: Any) -> "NFElem":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return NFElem(self.field, tuple(a - b for a, b in zip(self.coords, o.coords)))

    def __rsub__(self, other: Any) -> "NFElem":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other: Any) -> "NFElem":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o._is_scalar():
            c = o.coords[0]
            return NFElem(self.field, tuple(a * c for a in self.coords))
        if self._is_scalar():
            c = self.coords[0]
            return NFElem(self.field, tuple(c * b for b in o.coords))
        base = self.field.base
        is_zero = base.is_zero
        prod = [base.zero] * (2 * self.field.degree - 1)
        for i, a in enumerate(self.coords):
            if is_zero(a):
                continue
            for j, b in enumerate(o.coords):
                if not is_zero(b):
                    prod[i + j] = prod[i + j] + a * b
        return self.field.from_coeffs(prod)

    __rmul__ = __mul__

    def inverse(self) -> "NFElem":
        """乘法逆元。

        Raises:
            FieldError: 零元素求逆
        """
        if self.is_zero():
            raise FieldError("division by zero in number field", {"field": self.field.name})
        if self._is_scalar():
            return self.field.embed(self.field.base.one / self.coords[0])
        g, s, _ = self.to_poly().xgcd(self.field.minpoly)
        if g.degree != 0:
            raise FieldError(
                "minimal polynomial is reducible",
                {"field": self.field.name, "factor": str(g)},
            )
        return self.field.from_poly(s)

    def __truediv__(self, other: Any) -> "NFElem":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other: Any) -> "NFElem":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, n: int) -> "NFElem":
        if n < 0:
            return self.inverse() ** (-n)
        result = self.field.one
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def is_zero(self) -> bool:
        base = self.field.base
        return all(base.is_zero(c) for c in self.coords)

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __eq__(self, other: object) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.coords == o.coords

    def __hash__(self) -> int:
        if self._is_scalar():
            return hash(self.coords[0])
        return hash(self.coords)

    # ============ 结构 ============

    def to_poly(self) -> UniPoly:
        """作为生成元的多项式（系数在基域中）。"""
        return UniPoly(self.field.base, self.coords, self.field.gen_name)

    def rational_value(self) -> Optional[Any]:
        """若元素属于 Q 返回该有理数，否则返回 None。"""
        if not self._is_scalar():
            return None
        c = self.coords[0]
        if isinstance(c, NFElem):
            return c.rational_value()
        return c

    def is_rational(self) -> bool:
        return self.rational_value() is not None

    def relative_trace(self) -> Any:
        """相对迹 Tr_{K/base}，等于乘法矩阵的迹。"""
        total = self.field.base.zero
        g = self.field.gen
        power = self.field.one
        for j in range(self.field.degree):
            total = total + (self * power).coords[j]
            power = power * g
        return total

    def trace(self) -> Any:
        """到 Q 的绝对迹。"""
        t = self.relative_trace()
        while isinstance(t, NFElem):
            t = t.relative_trace()
        return t

    def __str__(self) -> str:
        return self.field.to_str(self)

    def __repr__(self) -> str:
        return f"NFElem({self}, in {self.field.name})"


# ============ 构造与不可约性 ============


def _lift_coefficients(poly: UniPoly) -> Dict[Tuple[int, int], Any]:
    """把 K = Q(α) 上的多项式写成 {(u 次数, α 次数): 有理数}。"""
    terms: Dict[Tuple[int, int], Any] = {}
    for i, c in enumerate(poly.coeffs):
        for j, q in enumerate(c.coords):
            if q:
                terms[(i, j)] = q
    return terms


def _find_factor_over_q(minpoly: UniPoly) -> Optional[UniPoly]:
    factors = minpoly.factor_rational()
    if len(factors) == 1 and factors[0][1] == 1:
        return None
    return factors[0][0]


def _find_factor_over_simple(minpoly: UniPoly) -> Optional[UniPoly]:
    """Trager 范数法：在 Q(α) 上寻找真因子。"""
    field = minpoly.field
    assert isinstance(field, NumberField)
    alpha = field.gen
    m_low = list(field.minpoly.coeffs)
    for k in range(12):
        shift = UniPoly(field, [-(alpha * k), field.one], minpoly.var)
        g = minpoly.compose(shift)
        norm = UniPoly(QQ_FIELD, bivariate_resultant(_lift_coefficients(g), m_low), "u")
        if norm.gcd(norm.derivative()).degree > 0:
            continue
        factors = norm.factor_rational()
        logger.debug(f"norm of shift {k} splits into {len(factors)} factor(s) over Q")
        if len(factors) == 1:
            return None
        h = factors[0][0].map_coefficients(field.convert, field).with_var(minpoly.var)
        w = h.gcd(g)
        back = UniPoly(field, [alpha * k, field.one], minpoly.var)
        return w.compose(back)
    raise FieldError(
        "no squarefree norm found while checking irreducibility",
        {"minpoly": str(minpoly)},
    )


def nf_create(
    minpoly: UniPoly, gen_name: Optional[str] = None, degree_limit: Optional[int] = None
) -> Field:
    """构造数域 base[gen]/(minpoly)。

    次数不超过上限时检验不可约性（Q 上用 sympy 分解，单层数域上用
    范数分解），更深的塔或更高次数则信任输入并记录警告。

    Args:
        minpoly: 首一极小多项式，系数域即基域
        gen_name: 生成元名，缺省使用多项式的变量名
        degree_limit: 不可约性检验的次数上限

    Returns:
        数域；一次多项式直接返回基域

    Raises:
        FieldError: 非首一、次数为零或可约（附带因子）

    Examples:
        >>> v = UniPoly.gen(QQ_FIELD, "v")
        >>> nf_create(v**3 - 3*v + 1).degree
        3
    """
    name = gen_name or minpoly.var
    base = minpoly.field
    if minpoly.degree < 1:
        raise FieldError("minimal polynomial must have degree at least 1")
    if minpoly.lc != base.one:
        raise FieldError("minimal polynomial must be monic", {"minpoly": str(minpoly)})
    if minpoly.degree == 1:
        logger.debug(f"degree-1 extension by {name} collapses to {base.name}")
        return base

    limit = settings.IRREDUCIBILITY_DEGREE_LIMIT if degree_limit is None else degree_limit
    verified = False
    if minpoly.degree <= limit:
        witness: Optional[UniPoly] = None
        if isinstance(base, RationalField):
            witness = _find_factor_over_q(minpoly)
            verified = True
        elif isinstance(base, NumberField) and isinstance(base.base, RationalField):
            witness = _find_factor_over_simple(minpoly)
            verified = True
        if witness is not None:
            raise FieldError(
                "minimal polynomial is reducible",
                {"minpoly": str(minpoly), "factor": str(witness)},
            )
    if not verified:
        logger.warning(f"irreducibility of {minpoly} over {base.name} is trusted, not checked")
    return NumberField(minpoly, name, irreducibility_verified=verified)


def factor_over(poly: UniPoly) -> List[UniPoly]:
    """把无平方因子的多项式分解为首一不可约因子。

    系数域可以是 Q 或 Q 上的单层数域。

    Raises:
        FieldError: 系数域不受支持
    """
    field = poly.field
    if poly.degree <= 1:
        return [poly.monic()] if poly.degree == 1 else []
    if isinstance(field, RationalField):
        return [f for f, _ in poly.factor_rational()]
    if not (isinstance(field, NumberField) and isinstance(field.base, RationalField)):
        raise FieldError(f"factorization over {field.name} is not supported")
    factor = _find_factor_over_simple(poly)
    if factor is None or factor.degree in (0, poly.degree):
        return [poly.monic()]
    factor = factor.monic()
    return factor_over(factor) + factor_over(poly.exquo(factor))


def roots_in_field(poly: UniPoly) -> List[Any]:
    """多项式在其系数域中的全部根（无平方因子输入）。"""
    return [-f.coefficient(0) for f in factor_over(poly) if f.degree == 1]
