"""平面四次曲线从自身一点出发的中心投影与分歧。

取中心 c 与两个在 c 处为零的线性型 ℓ0、ℓ1，投影为
P ↦ (ℓ0(P) : ℓ1(P))，次数为 3。在 (M, A, B) 坐标下写
P = M·c + A·e0 + B·e1（ℓ_i(e_j) = δ_ij），则
F(P) = h3·M³ + h2·M² + h1·M + h0，其中 h_k 是 (A, B) 的 4 − k 次型。
纤维 x = A/B 的点是三次式 H_x(M) 的根，M = ∞ 的根就是中心本身，
其重数为 3 − deg H_x。分歧只可能出现在 H_x 判别式或首项的零点上。

Author: QuarticPF Team
Created: 2026-03-08
"""

from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Sequence, Tuple

from src.fields.base import Field
from src.fields.number_field import factor_over, nf_create
from src.fields.unipoly import UniPoly
from src.geometry.intersection import _coordinate_field, tangent_line
from src.geometry.projective import (
    ProjLine,
    ProjPoint,
    cross,
    is_zero_value,
    point_off,
    unit_vectors,
)
from src.polyring.multipoly import MultiPoly
from src.utils.errors import PolynomialError
from src.utils.logger import get_logger

logger = get_logger(__name__)

PROJECTION_VARS = ("M", "A", "B")
FIBER_VAR = "x"
ROOT_NAME = "w"
INFINITY = "∞"


def cubic_discriminant(a: UniPoly, b: UniPoly, c: UniPoly, d: UniPoly) -> UniPoly:
    """a·M³ + b·M² + c·M + d 的判别式。"""
    return (
        b * b * c * c
        - a * c * c * c * 4
        - b * b * b * d * 4
        - a * a * d * d * 27
        + a * b * c * d * 18
    )


def genus(degree: int) -> int:
    return (degree - 1) * (degree - 2) // 2


# ============ 结果 ============


@dataclass(frozen=True)
class RamifiedFiber:
    """一个分歧纤维（或一组共轭纤维）。

    Attributes:
        place: x 的首一不可约多项式；∞ 处为 None
        image: 像点 (x : 1) 或 (1 : 0)，共轭组时为 None
        partition: 纤维的重数分拆，和为投影次数
        center_multiplicity: 中心在纤维中的重数
    """

    place: Optional[UniPoly]
    image: Optional[ProjPoint]
    partition: Tuple[int, ...]
    center_multiplicity: int = 0

    @property
    def degree(self) -> int:
        return 1 if self.place is None else self.place.degree

    @property
    def contribution(self) -> int:
        """Σ (e − 1)，按共轭纤维个数加权。"""
        return self.degree * sum(e - 1 for e in self.partition)

    @property
    def label(self) -> str:
        if self.place is None:
            return INFINITY
        if self.image is not None:
            return str(self.image)
        return f"roots of {self.place}"

    def to_dict(self) -> Dict[str, Any]:
        return {
            "fiber": self.label,
            "degree": self.degree,
            "partition": list(self.partition),
            "center_multiplicity": self.center_multiplicity,
            "contribution": self.contribution,
        }


@dataclass(frozen=True)
class ProjectionMap:
    """中心投影及其分歧数据。

    Attributes:
        curve: 四次曲线
        center: 投影中心
        forms: (ℓ0, ℓ1)
        frame: (c, e0, e1)
        fibers: 分歧纤维，按 x 的有理像、共轭组、∞ 排列
    """

    curve: MultiPoly
    center: ProjPoint
    forms: Tuple[ProjLine, ProjLine]
    frame: Tuple[Tuple[Any, ...], ...]
    fibers: Tuple[RamifiedFiber, ...]

    @property
    def degree(self) -> int:
        return self.curve.total_degree - 1

    @property
    def total_ramification(self) -> int:
        return sum(f.contribution for f in self.fibers)

    @property
    def expected_ramification(self) -> int:
        """Riemann-Hurwitz：2g − 2 + 2n。"""
        return 2 * genus(self.curve.total_degree) - 2 + 2 * self.degree

    def riemann_hurwitz_holds(self) -> bool:
        return self.total_ramification == self.expected_ramification

    def image(self, point: ProjPoint) -> ProjPoint:
        """点在投影下的像；中心的像是切线方向。

        Raises:
            PolynomialError: 点不在曲线上
        """
        if not point.lies_on(self.curve):
            raise PolynomialError(f"point {point} is not on the curve")
        l0, l1 = self.forms
        coords = point.coords
        if point == self.center:
            coords = point_off(tangent_line(self.curve, point), point)
        field = _coordinate_field(self.curve, coords)
        return ProjPoint(field, (l0.value(coords), l1.value(coords)))

    def fiber_over(self, image: ProjPoint) -> Optional[RamifiedFiber]:
        for f in self.fibers:
            if f.image is not None and f.image == image:
                return f
        return None

    def fibers_away_from(self, images: Sequence[ProjPoint]) -> List[RamifiedFiber]:
        """像不在 images 中的分歧纤维（共轭组的像为 None，总被保留）。"""
        return [f for f in self.fibers if f.image is None or f.image not in images]

    def profile(self) -> List[Tuple[int, ...]]:
        """全部分歧纤维的分拆（共轭组按个数重复）。"""
        out: List[Tuple[int, ...]] = []
        for f in self.fibers:
            out.extend([f.partition] * f.degree)
        return out

    def to_dict(self) -> Dict[str, Any]:
        return {
            "curve": str(self.curve),
            "center": str(self.center),
            "forms": [str(l.to_poly()) for l in self.forms],
            "degree": self.degree,
            "fibers": [f.to_dict() for f in self.fibers],
            "total_ramification": self.total_ramification,
            "expected_ramification": self.expected_ramification,
            "riemann_hurwitz": self.riemann_hurwitz_holds(),
        }


# ============ 构造 ============


def _default_forms(center: ProjPoint) -> Tuple[ProjLine, ProjLine]:
    candidates = []
    for e in unit_vectors(center.field):
        v = cross(center.coords, e)
        if any(not is_zero_value(c) for c in v):
            candidates.append(ProjLine(center.field, v))
    first = candidates[0]
    for other in candidates[1:]:
        if other != first:
            return first, other
    raise PolynomialError("could not choose two independent forms through the center")


def _dual_point(along: ProjLine, normalize_by: ProjLine, center: ProjPoint) -> Tuple[Any, ...]:
    """along 上满足 normalize_by = 1 的点（along 是另一个型的零点直线）。"""
    for e in unit_vectors(along.field):
        w = cross(along.coeffs, e)
        value = normalize_by.value(w)
        if not is_zero_value(value):
            inv = along.field.one / value
            return tuple(c * inv for c in w)
    raise PolynomialError("linear forms are dependent", {"center": str(center)})


def _check_forms(forms: Sequence[ProjLine], center: ProjPoint) -> Tuple[ProjLine, ProjLine]:
    if len(forms) != 2:
        raise PolynomialError(f"a projection needs two linear forms, got {len(forms)}")
    l0, l1 = forms
    for l in (l0, l1):
        if not l.contains(center):
            raise PolynomialError(f"form {l.to_poly()} does not vanish at the center {center}")
    if l0 == l1:
        raise PolynomialError("linear forms are proportional", {"form": str(l0.to_poly())})
    return l0, l1


def _coefficient_polys(
    curve: MultiPoly, frame: Tuple[Tuple[Any, ...], ...], field: Field
) -> Tuple[List[UniPoly], List[Any]]:
    """(h_0, …, h_3) 作为 x = A/B 的多项式，以及 B = 0 处的首项系数。"""
    gens = MultiPoly.variables(field, PROJECTION_VARS)
    images = []
    for i in range(3):
        img = MultiPoly.zero(field, PROJECTION_VARS)
        for g, vec in zip(gens, frame):
            if not is_zero_value(vec[i]):
                img = img + g.scale(vec[i])
        images.append(img)
    lifted = curve if curve.field == field else curve.change_field(field)
    g_poly = lifted.compose(images)
    d = curve.total_degree
    h_coeffs: List[List[Any]] = [[field.zero] * (d + 1) for _ in range(d)]
    at_infinity: List[Any] = [field.zero] * d
    for (m, a, b), c in g_poly.terms.items():
        if m >= d:
            raise PolynomialError("the center is not on the curve")
        h_coeffs[m][a] = c
        if b == 0:
            at_infinity[m] = c
    return [UniPoly(field, cs, FIBER_VAR) for cs in h_coeffs], at_infinity


def _partition(h_values: Sequence[Any], field: Field, degree: int) -> Tuple[Tuple[int, ...], int]:
    h = UniPoly(field, h_values, "M")
    if h.is_zero():
        raise PolynomialError("a line through the center is a component of the curve")
    parts: List[int] = []
    for part, m in h.squarefree_decomposition():
        parts.extend([m] * part.degree)
    center = degree - h.degree
    if center > 0:
        parts.append(center)
    return tuple(sorted(parts, reverse=True)), center


def central_projection(
    curve: MultiPoly, center: ProjPoint, forms: Optional[Sequence[ProjLine]] = None
) -> ProjectionMap:
    """
    从曲线上一个光滑点出发的中心投影

    Args:
        curve: 光滑平面四次曲线
        center: 曲线上的光滑点
        forms: 在中心为零的两个线性型，缺省由 c × e_i 选取

    Returns:
        ProjectionMap；光滑四次曲线的分歧总数是 10

    Raises:
        PolynomialError: 不是四次曲线、中心不在曲线上、型不合规或曲线含过中心的直线
        SingularPointError: 中心是奇点
        FieldError: 判别式无法在系数域上分解

    Examples:
        >>> tor = central_projection(F_t, Q_t, [ProjLine.of(QQ, 1, 0, 0), ProjLine.of(QQ, 0, 1, 1)])
        >>> tor.total_ramification
        10
    """
    if curve.nvars != 3 or not curve.is_homogeneous() or curve.total_degree != 4:
        raise PolynomialError("central projection is implemented for plane quartics", {"curve": str(curve)})
    tangent_line(curve, center)
    l0, l1 = _check_forms(forms, center) if forms is not None else _default_forms(center)
    e0 = _dual_point(l1, l0, center)
    e1 = _dual_point(l0, l1, center)
    frame = (center.coords, e0, e1)
    field = _coordinate_field(curve, *frame)
    h, at_infinity = _coefficient_polys(curve, frame, field)
    degree = curve.total_degree - 1

    a, b, c, d = h[3], h[2], h[1], h[0]
    critical = cubic_discriminant(a, b, c, d) * a
    if critical.is_zero():
        raise PolynomialError("every fiber of the projection is ramified", {"curve": str(curve)})

    fibers: List[RamifiedFiber] = []
    rest: List[RamifiedFiber] = []
    for place in factor_over(critical.squarefree_part()):
        if place.degree == 1:
            residue_field, x0 = field, -place.coefficient(0)
        else:
            residue_field = nf_create(place.with_var(ROOT_NAME), ROOT_NAME)
            x0 = residue_field.gen
        values = [residue_field.convert(hk.evaluate(x0)) if hk else residue_field.zero for hk in h]
        partition, at_center = _partition(values, residue_field, degree)
        if max(partition) < 2:
            continue
        image = ProjPoint(field, (x0, field.one)) if place.degree == 1 else None
        fiber = RamifiedFiber(place, image, partition, at_center)
        (fibers if place.degree == 1 else rest).append(fiber)
        logger.debug(f"ramified fiber over {fiber.label}: {partition}")

    partition, at_center = _partition(at_infinity, field, degree)
    if max(partition) > 1:
        rest.append(RamifiedFiber(None, ProjPoint(field, (field.one, field.zero)), partition, at_center))

    result = ProjectionMap(curve, center, (l0, l1), frame, tuple(fibers + rest))
    logger.info(
        f"projection from {center}: {len(result.fibers)} ramified fiber(s), "
        f"total {result.total_ramification}"
    )
    return result
