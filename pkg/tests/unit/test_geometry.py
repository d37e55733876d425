"""射影平面几何单元测试。"""

from typing import Callable

import pytest

from src.fields import QQ_FIELD, rational
from src.geometry import (
    COMPONENT,
    ProjLine,
    ProjPoint,
    central_projection,
    classify_flex,
    intersection_multiplicity,
    line_intersections,
    parse_line,
    parse_point,
    tangent_line,
    verify_singular,
)
from src.polyring import MultiPoly, parse_polynomial, parse_scalar
from src.utils.config import get_settings
from src.utils.errors import ParseError, PolynomialError, SingularPointError

FINF_TEXT = (
    "X^4 - 3*X^3*Y + 6*X^3*Z - 3*X^2*Y^2 - 6*X^2*Y*Z + 6*X^2*Z^2"
    " + 4*X*Y^3 - 6*X*Y^2*Z - 6*X*Y*Z^2 + X*Z^3 + 3*Y^4 + 3*Y^3*Z"
)
F0_TEXT = "X^4 + X*Z^3 + 3*Y^3*Z"


def _point(*coords: int) -> ProjPoint:
    return ProjPoint.of(QQ_FIELD, *coords)


def _line(*coeffs: int) -> ProjLine:
    return ProjLine.of(QQ_FIELD, *coeffs)


P_T = _point(0, 0, 1)
Q_T = _point(0, 1, -1)


@pytest.fixture
def f_inf() -> MultiPoly:
    return parse_polynomial(FINF_TEXT, QQ_FIELD)


@pytest.fixture
def fiber(f_inf: MultiPoly) -> Callable[[str], MultiPoly]:
    """t ↦ X⁴ + t·F_∞。"""

    def build(t: str) -> MultiPoly:
        x4 = parse_polynomial("X^4", QQ_FIELD)
        return x4 + f_inf.scale(parse_scalar(t, QQ_FIELD))

    return build


# ============ 点与直线 ============


class TestProjective:
    """射影点与直线测试类。"""

    def test_normalization(self) -> None:
        """第一个非零坐标规范化为 1。"""
        assert str(_point(0, 2, -2)) == "(0:1:-1)"
        assert _point(0, 2, -2) == Q_T
        assert _point(-2, 2) == _point(1, -1)

    def test_zero_point(self) -> None:
        """零向量不是射影点。"""
        with pytest.raises(PolynomialError):
            _point(0, 0, 0)

    def test_parse_point(self) -> None:
        """打印形式可以读回。"""
        assert parse_point("(0:1:-1)", QQ_FIELD) == Q_T
        assert parse_point(" (1/2 : 1 : 0) ", QQ_FIELD) == _point(1, 2, 0)
        assert parse_point(str(Q_T), QQ_FIELD) == Q_T

    def test_parse_point_errors(self) -> None:
        """括号缺失与坐标错误给出列号。"""
        with pytest.raises(ParseError) as exc_info:
            parse_point("0:1:-1", QQ_FIELD)
        assert exc_info.value.column == 1
        with pytest.raises(ParseError) as exc_info:
            parse_point("(0:1:x)", QQ_FIELD)
        assert exc_info.value.column == 6
        with pytest.raises(ParseError):
            parse_point("(0)", QQ_FIELD)

    def test_line_operations(self) -> None:
        """两点连线与两线交点。"""
        line = ProjLine.through(P_T, Q_T)
        assert line == _line(1, 0, 0)
        assert line.contains(P_T) and line.contains(Q_T)
        assert _line(1, 0, 0).meet(_line(1, 1, 1)) == Q_T
        assert parse_line("X + Y + Z", QQ_FIELD) == _line(2, 2, 2)

    def test_line_errors(self) -> None:
        """重合的点或直线以及非线性型被拒绝。"""
        with pytest.raises(PolynomialError):
            ProjLine.through(P_T, _point(0, 0, 5))
        with pytest.raises(PolynomialError):
            _line(1, 1, 1).meet(_line(2, 2, 2))
        with pytest.raises(PolynomialError):
            parse_line("X*Y", QQ_FIELD)


# ============ 相交重数 ============


class TestIntersection:
    """相交重数与 Bézout 测试类。"""

    def test_x_equals_zero_at_t3(self, fiber: Callable[[str], MultiPoly]) -> None:
        """t = 3 时 X = 0 截出 3·P_t + Q_t。"""
        f = fiber("3")
        x0 = _line(1, 0, 0)
        assert intersection_multiplicity(f, x0, P_T) == 3
        assert intersection_multiplicity(f, x0, Q_T) == 1
        assert intersection_multiplicity(f, x0, _point(0, 1, 0)) == 0

    def test_component(self, f_inf: MultiPoly) -> None:
        """X + Y + Z = 0 是 F_∞ 的分支。"""
        assert intersection_multiplicity(f_inf, _line(1, 1, 1), Q_T) == COMPONENT
        with pytest.raises(PolynomialError):
            line_intersections(f_inf, _line(1, 1, 1))

    def test_point_off_line(self, fiber: Callable[[str], MultiPoly]) -> None:
        """点不在直线上时报错。"""
        with pytest.raises(PolynomialError):
            intersection_multiplicity(fiber("3"), _line(0, 1, 0), Q_T)

    def test_line_section(self, fiber: Callable[[str], MultiPoly]) -> None:
        """直线截出的除子。"""
        section = line_intersections(fiber("3"), _line(1, 0, 0))
        assert section.total == 4
        assert section.multiplicity_at(P_T) == 3
        assert section.multiplicity_at(Q_T) == 1

    @pytest.mark.parametrize("coeffs", [(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 1), (1, -2, 3), (0, 1, 1)])
    def test_bezout(self, fiber: Callable[[str], MultiPoly], coeffs: tuple) -> None:
        """任意直线截出的总重数为 4（含共轭点组与参数 ∞ 处的点）。"""
        assert line_intersections(fiber("2"), _line(*coeffs)).total == 4


# ============ 切线与拐点 ============


class TestFlex:
    """切线与拐点分类测试类。"""

    @pytest.mark.parametrize("t", get_settings().T_SAMPLES)
    def test_hyperflex_at_q(self, fiber: Callable[[str], MultiPoly], t: str) -> None:
        """Q_t 是超拐点，切线 X + Y + Z = 0。"""
        result = classify_flex(fiber(t), Q_T)
        assert result.kind == "hyperflex"
        assert result.multiplicity == 4
        assert result.tangent == _line(1, 1, 1)

    def test_flex_at_p(self, fiber: Callable[[str], MultiPoly]) -> None:
        """P_t 是拐点，切线 X = 0 过 Q_t。"""
        result = classify_flex(fiber("3"), P_T)
        assert result.kind == "flex"
        assert result.multiplicity == 3
        assert result.tangent == _line(1, 0, 0)
        assert result.tangent.contains(Q_T)

    def test_f0_tangent(self) -> None:
        """F_0 在 (0:1:0) 处的切线是 Z = 0，也是超拐点。"""
        f0 = parse_polynomial(F0_TEXT, QQ_FIELD)
        assert tangent_line(f0, _point(0, 1, 0)) == _line(0, 0, 1)
        assert classify_flex(f0, _point(0, 1, 0)).multiplicity == 4

    def test_ordinary_point(self) -> None:
        """圆锥曲线上的点都是普通点。"""
        conic = parse_polynomial("X^2 + Y^2 - Z^2", QQ_FIELD)
        result = classify_flex(conic, _point(1, 0, 1))
        assert result.kind == "ordinary"
        assert result.tangent == _line(1, 0, -1)

    def test_tangent_component(self, f_inf: MultiPoly) -> None:
        """切线是分支时无法分类。"""
        with pytest.raises(PolynomialError):
            classify_flex(f_inf, Q_T)

    def test_point_not_on_curve(self, fiber: Callable[[str], MultiPoly]) -> None:
        """点不在曲线上。"""
        with pytest.raises(PolynomialError):
            tangent_line(fiber("3"), _point(1, 0, 0))


class TestSingular:
    """奇点判定测试类。"""

    def test_node(self) -> None:
        """结点三次曲线在原点奇异，切线无定义。"""
        cubic = parse_polynomial("Y^2*Z - X^3 - X^2*Z", QQ_FIELD)
        origin = _point(0, 0, 1)
        assert verify_singular(cubic, origin)
        with pytest.raises(SingularPointError):
            tangent_line(cubic, origin)

    def test_smooth_points(self, fiber: Callable[[str], MultiPoly]) -> None:
        """光滑点与曲线外的点都不是奇点。"""
        f = fiber("3")
        assert not verify_singular(f, P_T)
        assert not verify_singular(f, _point(1, 0, 0))


# ============ 中心投影 ============


class TestCentralProjection:
    """从超拐点出发的中心投影测试类。"""

    @staticmethod
    def _torsion_forms() -> list:
        return [_line(1, 0, 0), _line(0, 1, 1)]

    def test_torsion_map_at_t3(self, fiber: Callable[[str], MultiPoly]) -> None:
        """(X : Y+Z) 在 P_t、Q_t 的像上完全分歧。"""
        tor = central_projection(fiber("3"), Q_T, self._torsion_forms())
        assert tor.degree == 3
        assert tor.image(P_T) == _point(0, 1)
        assert tor.image(Q_T) == _point(-1, 1)
        over_p = tor.fiber_over(_point(0, 1))
        over_q = tor.fiber_over(_point(-1, 1))
        assert over_p is not None and over_p.partition == (3,)
        assert over_q is not None and over_q.partition == (3,)
        assert over_q.center_multiplicity == 3
        assert over_p.center_multiplicity == 0

    @pytest.mark.parametrize("t", get_settings().T_SAMPLES)
    def test_riemann_hurwitz(self, fiber: Callable[[str], MultiPoly], t: str) -> None:
        """Σ(e − 1) = 2·3 − 2 + 2·3 = 10：两个三重点加六个二重点。"""
        tor = central_projection(fiber(t), Q_T, self._torsion_forms())
        assert tor.expected_ramification == 10
        assert tor.total_ramification == 10
        assert tor.riemann_hurwitz_holds()
        assert tor.profile().count((3,)) == 2
        others = tor.fibers_away_from([_point(0, 1), _point(-1, 1)])
        assert all(f.partition == (2, 1) for f in others)
        assert sum(f.degree for f in others) == 6
        assert tor.to_dict()["riemann_hurwitz"]

    def test_default_forms(self, fiber: Callable[[str], MultiPoly]) -> None:
        """缺省线性型给出同一个分歧总数。"""
        proj = central_projection(fiber("5"), Q_T)
        assert proj.total_ramification == 10

    def test_rational_parameter(self, fiber: Callable[[str], MultiPoly]) -> None:
        """有理参数的像点仍是精确有理点。"""
        tor = central_projection(fiber("1/2"), Q_T, self._torsion_forms())
        assert tor.image(_point(0, 0, 1)).coords == (rational(0), rational(1))

    def test_invalid_input(self, fiber: Callable[[str], MultiPoly]) -> None:
        """非四次曲线、中心不在曲线上、型不过中心。"""
        conic = parse_polynomial("X^2 + Y^2 - Z^2", QQ_FIELD)
        with pytest.raises(PolynomialError):
            central_projection(conic, _point(1, 0, 1))
        with pytest.raises(PolynomialError):
            central_projection(fiber("3"), _point(1, 0, 0))
        with pytest.raises(PolynomialError):
            central_projection(fiber("3"), Q_T, [_line(1, 0, 0), _line(0, 1, 0)])

    def test_singular_center(self) -> None:
        """奇点不能作为投影中心。"""
        nodal = parse_polynomial("X^4 + Y^2*Z^2 - X^2*Z^2", QQ_FIELD)
        with pytest.raises(SingularPointError):
            central_projection(nodal, _point(0, 0, 1))
