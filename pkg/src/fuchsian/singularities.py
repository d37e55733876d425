"""奇点、局部指数、Riemann 表与超几何形状。

有限奇点按常数域上的不可约位（系数分母的不可约因子）列出，
∞ 通过 x = 1/u 变换后判断。次数大于 1 的位在其剩余域 K[x]/(f)
中取一个根计算指数；共轭根的指数互为共轭。

Author: QuarticPF Team
Created: 2026-03-05
"""

from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Sequence, Tuple, Union

from src.fields.base import Field
from src.fields.number_field import NFElem, factor_over, nf_create, roots_in_field
from src.fields.rational import QQ_FIELD, RationalField, is_rational
from src.fields.ratfun import RationalFunction
from src.fields.unipoly import UniPoly
from src.fuchsian.ode import LinearODE
from src.fuchsian.transforms import at_infinity, recenter
from src.utils.errors import FieldError, IrregularSingularityError, PolynomialError
from src.utils.logger import get_logger

logger = get_logger(__name__)

INFINITY = "∞"
ROOT_NAME = "r"


@dataclass(frozen=True)
class Place:
    """有限不可约位或 ∞。

    Attributes:
        factor: 首一不可约多项式；None 表示 ∞
    """

    factor: Optional[UniPoly] = None

    @property
    def is_infinity(self) -> bool:
        return self.factor is None

    @property
    def degree(self) -> int:
        return 1 if self.factor is None else self.factor.degree

    def root(self) -> Any:
        """位上的一个点：一次位是常数域元素，高次位是剩余域的生成元。"""
        if self.factor is None:
            return INFINITY
        if self.factor.degree == 1:
            return -self.factor.coefficient(0)
        residue = nf_create(self.factor.with_var(ROOT_NAME), ROOT_NAME)
        return residue.gen

    def label(self) -> str:
        if self.factor is None:
            return INFINITY
        if self.factor.degree == 1:
            return str(-self.factor.coefficient(0))
        return f"roots of {self.factor}"

    def __str__(self) -> str:
        return self.label()


Point = Union[Place, str, Any]


@dataclass(frozen=True)
class LocalExponents:
    """一点处的指标多项式与指数。

    Attributes:
        point: 点的文本
        indicial: 指标多项式（变量 rho）
        exponents: 全部根（含重数）；不能在系数域中精确求出时为 None
        singular: 该点是否为奇点
    """

    point: str
    indicial: UniPoly
    exponents: Optional[Tuple[Any, ...]]
    singular: bool = True

    def exponent_sum(self) -> Any:
        """指数之和，由指标多项式的次高项系数读出。"""
        r = self.indicial.degree
        return -self.indicial.coefficient(r - 1)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "point": self.point,
            "indicial": str(self.indicial),
            "exponents": None if self.exponents is None else [str(e) for e in self.exponents],
        }


@dataclass(frozen=True)
class SchemeColumn:
    place: Place
    exponents: LocalExponents

    @property
    def multiplicity(self) -> int:
        return self.place.degree


@dataclass(frozen=True)
class RiemannScheme:
    """Riemann 表：每个奇位一列，高次位代表其全部共轭点。"""

    columns: Tuple[SchemeColumn, ...]
    order: int
    var: str = "x"

    @property
    def point_count(self) -> int:
        return sum(c.multiplicity for c in self.columns)

    def fuchs_sum(self) -> Any:
        """全部奇点上全部指数之和（共轭位取迹）。"""
        total: Any = QQ_FIELD.zero
        for column in self.columns:
            s = column.exponents.exponent_sum()
            if isinstance(s, NFElem):
                total = total + s.trace()
            else:
                total = total + s * column.multiplicity
        return total

    def fuchs_expected(self) -> Any:
        r = self.order
        return QQ_FIELD.convert((self.point_count - 2) * r * (r - 1) // 2)

    def fuchs_relation_holds(self) -> bool:
        return self.fuchs_sum() == self.fuchs_expected()

    def table(self) -> str:
        """表格排版：首行是点，其下每行一个指数。"""
        headers = []
        cells: List[List[str]] = []
        for column in self.columns:
            label = column.place.label()
            if column.multiplicity > 1:
                label = f"{label} (x{column.multiplicity})"
            headers.append(label)
            exps = column.exponents.exponents
            if exps is None:
                cells.append([f"roots of {column.exponents.indicial}"] + [""] * (self.order - 1))
            else:
                cells.append([str(e) for e in exps])
        widths = [max(len(h), *(len(c) for c in col)) for h, col in zip(headers, cells)]
        lines = [" | ".join(h.center(w) for h, w in zip(headers, widths))]
        lines.append("-+-".join("-" * w for w in widths))
        for i in range(self.order):
            lines.append(" | ".join(col[i].center(w) for col, w in zip(cells, widths)))
        return "\n".join(lines)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "variable": self.var,
            "points": self.point_count,
            "columns": [
                {"place": c.place.label(), "multiplicity": c.multiplicity, **c.exponents.to_dict()}
                for c in self.columns
            ],
            "fuchs_relation": {
                "sum": str(self.fuchs_sum()),
                "expected": str(self.fuchs_expected()),
                "holds": self.fuchs_relation_holds(),
            },
        }


# ============ 奇点 ============


def _denominator_lcm(ode: LinearODE) -> UniPoly:
    acc = UniPoly.one(ode.base, ode.var)
    for c in ode.coefficients:
        if not c.is_zero():
            acc = acc.lcm(c.den)
    return acc


def _u_valuation(c: RationalFunction) -> int:
    return c.num.valuation() - c.den.valuation()


def infinity_is_singular(ode: LinearODE) -> bool:
    transformed = at_infinity(ode)
    return any(not c.is_zero() and _u_valuation(c) < 0 for c in transformed.coefficients)


def singular_points(ode: LinearODE) -> List[Place]:
    """
    奇位列表：分母的不可约因子，∞ 在变换后奇异时排在最后

    Returns:
        有限位按 (次数, 文本) 排序，其后可能是 ∞
    """
    den = _denominator_lcm(ode)
    places = [Place(f) for f in factor_over(den.squarefree_part())] if den.degree > 0 else []
    places.sort(key=lambda p: (p.degree, str(p.factor)))
    if infinity_is_singular(ode):
        places.append(Place(None))
    return places


def singular_points_in(ode: LinearODE, target: Field) -> List[Any]:
    """在给定数域中展开的奇点（含 ∞ 记号）。

    Raises:
        FieldError: 某个位在该数域中不分裂
    """
    points: List[Any] = []
    for place in singular_points(ode):
        if place.is_infinity:
            points.append(INFINITY)
            continue
        lifted = place.factor.map_coefficients(target.convert, target)
        roots = roots_in_field(lifted)
        if len(roots) != place.degree:
            raise FieldError(f"{place.factor} does not split over {target.name}")
        points.extend(roots)
    return points


# ============ 局部指数 ============


def _falling(rho: UniPoly, j: int) -> UniPoly:
    acc = UniPoly.one(rho.field, rho.var)
    for i in range(j):
        acc = acc * (rho - i)
    return acc


def _centered(ode: LinearODE, point: Point) -> Tuple[LinearODE, str]:
    if isinstance(point, Place):
        point = point.root()
    if isinstance(point, str):
        if point != INFINITY:
            raise PolynomialError(f"unknown point {point!r}")
        return at_infinity(ode), INFINITY
    return recenter(ode, point), str(point)


def indicial_data(ode: LinearODE, point: Point) -> Tuple[LinearODE, List[Any], str]:
    """在 u = 0 处的首项系数 c_j = (u^{r−j}·a_j)(0)。

    Raises:
        IrregularSingularityError: 某个系数的极点阶超过 Fuchs 界
    """
    centered, label = _centered(ode, point)
    r = centered.order
    base = centered.base
    leading: List[Any] = []
    for j, c in enumerate(centered.coefficients):
        if c.is_zero():
            leading.append(base.zero)
            continue
        val = _u_valuation(c)
        bound = -(r - j)
        if val < bound:
            raise IrregularSingularityError(
                f"pole of order {-val} in coefficient a_{j} at {label} exceeds {r - j}", -val, j
            )
        if val > bound:
            leading.append(base.zero)
        else:
            num = c.num.coefficient(c.num.valuation())
            den = c.den.coefficient(c.den.valuation())
            leading.append(num / den)
    leading.append(base.one)
    return centered, leading, label


def _exact_roots(poly: UniPoly) -> Optional[Tuple[Any, ...]]:
    roots: List[Any] = []
    try:
        for part, mult in poly.squarefree_decomposition():
            if part.degree < 1:
                continue
            found = roots_in_field(part)
            if len(found) != part.degree:
                return None
            roots.extend(r for r in found for _ in range(mult))
    except FieldError:
        return None
    if all(is_rational(r) for r in roots):
        roots.sort()
    return tuple(roots)


def local_exponents(ode: LinearODE, point: Point) -> LocalExponents:
    """
    局部指数：指标多项式 Σ c_j·ρ(ρ−1)…(ρ−j+1) 的根

    Args:
        ode: 首一 ODE
        point: 常数域（或其扩域）中的点、``INFINITY`` 或 Place

    Returns:
        LocalExponents；根不在系数域中时 exponents 为 None

    Raises:
        IrregularSingularityError: 非正则奇点

    Examples:
        >>> [str(e) for e in local_exponents(L1, 0).exponents]
        ['0', '1/9']
    """
    centered, leading, label = indicial_data(ode, point)
    base = centered.base
    rho = UniPoly.gen(base, "rho")
    indicial = UniPoly.zero(base, "rho")
    for j, c in enumerate(leading):
        if not base.is_zero(c):
            indicial = indicial + _falling(rho, j).scale(c)
    singular = any(
        not c.is_zero() and _u_valuation(c) < 0 for c in centered.coefficients
    )
    exponents = _exact_roots(indicial)
    logger.debug(f"indicial polynomial at {label}: {indicial}")
    return LocalExponents(label, indicial, exponents, singular)


def riemann_scheme(ode: LinearODE) -> RiemannScheme:
    columns = tuple(SchemeColumn(place, local_exponents(ode, place)) for place in singular_points(ode))
    return RiemannScheme(columns, ode.order, ode.var)


# ============ 超几何形状 ============


def _is_zero_one_infinity(places: Sequence[Place]) -> bool:
    finite = sorted(str(-p.factor.coefficient(0)) for p in places if p.factor is not None and p.degree == 1)
    return (
        len(places) == 3
        and all(p.degree == 1 for p in places)
        and any(p.is_infinity for p in places)
        and finite == ["0", "1"]
    )


def is_hypergeometric(ode: LinearODE) -> bool:
    """二阶、全部奇点正则且奇点集恰为 {0, 1, ∞}。"""
    if ode.order != 2:
        return False
    places = singular_points(ode)
    logger.debug(f"singular places: {[p.label() for p in places]}")
    try:
        for place in places:
            indicial_data(ode, place)
    except IrregularSingularityError:
        return False
    return _is_zero_one_infinity(places)


@dataclass(frozen=True)
class HypergeometricParameters:
    """t(1−t)y″ + (c − (a+b+1)t)y′ − ab·y = 0 的参数。"""

    a: Any
    b: Any
    c: Any

    def to_dict(self) -> Dict[str, Any]:
        return {"a": str(self.a), "b": str(self.b), "c": str(self.c)}


def hypergeometric_parameters(ode: LinearODE) -> HypergeometricParameters:
    """
    读出超几何参数 (a, b, c)

    Raises:
        PolynomialError: 方程不是超几何形状，或 a、b 不在系数域中
    """
    if not is_hypergeometric(ode):
        raise PolynomialError("equation is not of hypergeometric shape", {"equation": str(ode)})
    t = ode.field.gen
    w = t * (1 - t)
    p = ode.coefficient(1) * w
    q = ode.coefficient(0) * w
    if not p.is_polynomial() or p.num.degree > 1 or not q.is_constant():
        raise PolynomialError("equation is not of hypergeometric shape", {"equation": str(ode)})
    base = ode.base
    c = p.num.coefficient(0)
    a_plus_b = -p.num.coefficient(1) - 1
    ab = -q.constant_value()
    if not isinstance(base, RationalField):
        raise PolynomialError("hypergeometric parameters need rational coefficients")
    x = UniPoly.gen(base, "x")
    roots = _exact_roots(x * x - x.scale(a_plus_b) + ab)
    if roots is None:
        raise PolynomialError(
            "parameters a, b are not rational", {"sum": str(a_plus_b), "product": str(ab)}
        )
    a, b = roots
    return HypergeometricParameters(a, b, c)

