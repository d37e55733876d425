"""平面曲线与直线的相交、切线与拐点分类。

把直线参数化为 p + λ·q，F 在直线上的限制是 λ 的多项式 g(λ)；
p 处的相交重数就是 g 在 λ = 0 处的零点阶。g 恒为零时直线是
曲线的分支。

Author: QuarticPF Team
Created: 2026-03-07
"""

from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Tuple, Union

from src.fields.number_field import factor_over
from src.fields.unipoly import UniPoly
from src.geometry.projective import ProjLine, ProjPoint, is_zero_value, point_off
from src.polyring.multipoly import MultiPoly
from src.utils.errors import PolynomialError, SingularPointError
from src.utils.logger import get_logger

logger = get_logger(__name__)

COMPONENT = "component"
LAMBDA = "lam"

Multiplicity = Union[int, str]

FLEX_KINDS = {2: "ordinary", 3: "flex"}


def restrict_to_line(curve: MultiPoly, p: Tuple[Any, ...], q: Tuple[Any, ...]) -> UniPoly:
    """F(p + λ·q) 作为 λ 的多项式，系数在点坐标所在的域中。"""
    field = _coordinate_field(curve, p, q)
    images = [UniPoly(field, [a, b], LAMBDA) for a, b in zip(p, q)]
    value = curve.evaluate(images)
    if not isinstance(value, UniPoly):
        value = UniPoly.constant(field, value, LAMBDA)
    return value


def _coordinate_field(curve: MultiPoly, *vectors: Tuple[Any, ...]) -> Any:
    for v in vectors:
        for c in v:
            f = getattr(c, "field", None)
            if f is not None and f.is_extension_of(curve.field) and f != curve.field:
                return f
    return curve.field


def _require_on_line(line: ProjLine, point: ProjPoint) -> None:
    if not line.contains(point):
        raise PolynomialError(f"point {point} is not on the line {line.to_poly()}")


def intersection_multiplicity(curve: MultiPoly, line: ProjLine, point: ProjPoint) -> Multiplicity:
    """
    直线与曲线在一点的相交重数

    Args:
        curve: 三元齐次多项式
        line: 过 point 的直线
        point: 交点

    Returns:
        非负整数（点不在曲线上时为 0），或直线是分支时的 ``"component"``

    Raises:
        PolynomialError: 点不在直线上

    Examples:
        >>> intersection_multiplicity(F_t, ProjLine.of(QQ_FIELD, 1, 0, 0), P_t)
        3
    """
    _require_on_line(line, point)
    q = point_off(line, point)
    g = restrict_to_line(curve, point.coords, q)
    if g.is_zero():
        return COMPONENT
    return g.valuation()


# ============ 直线截出的除子 ============


@dataclass(frozen=True)
class IntersectionPoint:
    """直线截出的一个位：有理点，或一组共轭点（由不可约因子描述）。

    Attributes:
        point: 有理点；共轭点组时为 None
        multiplicity: 每个点的相交重数
        degree: 共轭点的个数
        factor: 共轭点组的极小多项式（λ 参数）
    """

    point: Optional[ProjPoint]
    multiplicity: int
    degree: int = 1
    factor: Optional[UniPoly] = None

    def to_dict(self) -> Dict[str, Any]:
        return {
            "point": None if self.point is None else str(self.point),
            "factor": None if self.factor is None else str(self.factor),
            "degree": self.degree,
            "multiplicity": self.multiplicity,
        }


@dataclass(frozen=True)
class LineSection:
    line: ProjLine
    points: Tuple[IntersectionPoint, ...]
    degree: int

    @property
    def total(self) -> int:
        return sum(p.multiplicity * p.degree for p in self.points)

    def multiplicity_at(self, point: ProjPoint) -> int:
        for p in self.points:
            if p.point is not None and p.point == point:
                return p.multiplicity
        return 0

    def to_dict(self) -> Dict[str, Any]:
        return {
            "line": str(self.line.to_poly()),
            "points": [p.to_dict() for p in self.points],
            "total": self.total,
            "degree": self.degree,
        }


def line_intersections(curve: MultiPoly, line: ProjLine) -> LineSection:
    """
    直线截出的除子，总重数等于曲线次数（Bézout）

    直线取两点 p0、p1 参数化为 p0 + λ·p1，λ = ∞ 对应 p1，其重数为
    d − deg g。

    Raises:
        PolynomialError: 直线是曲线的分支
        FieldError: 系数域上无法分解
    """
    field = line.field
    p0 = point_off(line, ProjPoint(field, (field.one, field.one, field.one)))
    p1 = point_off(line, ProjPoint(field, p0))
    g = restrict_to_line(curve, p0, p1)
    if g.is_zero():
        raise PolynomialError(f"line {line.to_poly()} is a component of the curve")
    points: List[IntersectionPoint] = []
    for part, m in g.squarefree_decomposition():
        for f in factor_over(part):
            if f.degree == 1:
                r = -f.coefficient(0)
                coords = tuple(a + r * b for a, b in zip(p0, p1))
                points.append(IntersectionPoint(ProjPoint(g.field, coords), m))
            else:
                points.append(IntersectionPoint(None, m, f.degree, f))
    at_infinity = curve.total_degree - g.degree
    if at_infinity > 0:
        points.append(IntersectionPoint(ProjPoint(field, p1), at_infinity))
    section = LineSection(line, tuple(points), curve.total_degree)
    logger.debug(f"line {line.to_poly()} cuts {len(points)} place(s), total {section.total}")
    return section


# ============ 切线与拐点 ============


def tangent_line(curve: MultiPoly, point: ProjPoint) -> ProjLine:
    """
    光滑点处的切线 Σ ∂F/∂x_i(p)·x_i = 0

    Raises:
        PolynomialError: 点不在曲线上
        SingularPointError: 梯度为零
    """
    if not point.lies_on(curve):
        raise PolynomialError(f"point {point} is not on the curve", {"point": str(point)})
    grad = [point.evaluate(g) for g in curve.gradient()]
    if all(is_zero_value(c) for c in grad):
        raise SingularPointError(f"curve is singular at {point}", {"point": str(point)})
    field = _coordinate_field(curve, point.coords)
    return ProjLine(field, tuple(grad))


def verify_singular(curve: MultiPoly, point: ProjPoint) -> bool:
    """F(p) = 0 且全部偏导数在 p 处为零。"""
    if not point.lies_on(curve):
        return False
    return all(is_zero_value(point.evaluate(g)) for g in curve.gradient())


@dataclass(frozen=True)
class FlexClassification:
    """切线在切点处的相交重数与分类。

    Attributes:
        kind: ``ordinary``、``flex`` 或 ``hyperflex``
        multiplicity: 相交重数
        tangent: 切线
    """

    point: ProjPoint
    kind: str
    multiplicity: int
    tangent: ProjLine

    def to_dict(self) -> Dict[str, Any]:
        return {
            "point": str(self.point),
            "kind": self.kind,
            "multiplicity": self.multiplicity,
            "tangent": str(self.tangent.to_poly()),
        }


def classify_flex(curve: MultiPoly, point: ProjPoint) -> FlexClassification:
    """
    按切线相交重数分类：2 普通点，3 拐点，至少 4 为超拐点

    Raises:
        PolynomialError: 点不在曲线上，或切线是曲线的分支
        SingularPointError: 点是奇点

    Examples:
        >>> classify_flex(F_t, parse_point("(0:1:-1)", QQ_FIELD)).kind
        'hyperflex'
    """
    tangent = tangent_line(curve, point)
    m = intersection_multiplicity(curve, tangent, point)
    if m == COMPONENT:
        raise PolynomialError(
            f"tangent {tangent.to_poly()} is a component of the curve", {"point": str(point)}
        )
    assert isinstance(m, int)
    kind = FLEX_KINDS.get(m, "hyperflex")
    logger.debug(f"point {point}: tangent {tangent.to_poly()} meets with multiplicity {m}")
    return FlexClassification(point, kind, m, tangent)
