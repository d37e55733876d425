"""线性 ODE 局部分析单元测试。"""

from dataclasses import replace

import pytest

from src.fields import QQ_FIELD, RationalFunctionField, cyclotomic_field, rational
from src.fuchsian import (
    INFINITY,
    LinearODE,
    at_infinity,
    change_of_variable,
    check_series,
    descend_monomial,
    frobenius_series,
    hypergeometric_parameters,
    is_hypergeometric,
    local_exponents,
    parse_ode,
    pullback_monomial,
    riemann_scheme,
    series_residual_order,
    singular_points,
    singular_points_in,
)
from src.utils.errors import (
    IrregularSingularityError,
    ParseError,
    PolynomialError,
    ResonanceError,
)

L1_TEXT = "y'' + ((17*t - 8)/(9*t*(t - 1)))*y' + (16/(81*t*(t - 1)))*y = 0"
L2_TEXT = "y'' + ((13*t - 4)/(9*t*(t - 1)))*y' + (4/(81*t*(t - 1)))*y = 0"
L3_TEXT = "y'' + ((11*t - 2)/(9*t*(t - 1)))*y' + (1/(81*t*(t - 1)))*y = 0"
SPAR_X_TEXT = "y'' + (9*s^8/(s^9 - 1))*y' + (16*s^7/(s^9 - 1))*y = 0"


@pytest.fixture
def l1() -> LinearODE:
    return parse_ode(L1_TEXT)


@pytest.fixture
def spar_x() -> LinearODE:
    return parse_ode(SPAR_X_TEXT)


def _labels(ode: LinearODE) -> list:
    return [p.label() for p in singular_points(ode)]


# ============ 解析与打印 ============


class TestParseOde:
    """ODE 文本解析测试类。"""

    def test_monic_normalization(self) -> None:
        """非首一输入除以首项系数。"""
        ode = parse_ode("t*y'' + y' = 0")
        t = ode.field.gen
        assert ode.order == 2
        assert ode.coefficient(1) == 1 / t
        assert ode.coefficient(0).is_zero()

    def test_variable_inferred(self, spar_x: LinearODE) -> None:
        """自变量名从文本推断。"""
        assert spar_x.var == "s"
        assert parse_ode("y' = 0").var == "t"

    def test_print_parse(self, l1: LinearODE) -> None:
        """打印形式可以读回。"""
        assert parse_ode(str(l1)) == l1
        assert LinearODE.from_dict(l1.to_dict()) == l1

    @pytest.mark.parametrize("text", ["y'' + y = 1", "y*y' = 0", "t + 1 = 0", "y'' + y^2 = 0"])
    def test_invalid(self, text: str) -> None:
        """右端非零、非线性或不含 y 都是解析错误。"""
        with pytest.raises(ParseError):
            parse_ode(text)

    def test_apply(self) -> None:
        """y = t 满足 t²y″ − t·y′ + y = 0。"""
        ode = parse_ode("t^2*y'' - t*y' + y = 0")
        t = ode.field.gen
        assert ode.apply(t).is_zero()
        assert not ode.apply(t * t).is_zero()


# ============ 变量替换 ============


class TestTransforms:
    """拉回、下降与一般代换测试类。"""

    def test_pullback_gives_spar_equation(self, l1: LinearODE, spar_x: LinearODE) -> None:
        """L1 沿 t = s⁹ 的拉回正是 KS 族的 Picard-Fuchs 方程。"""
        assert pullback_monomial(l1, 9) == spar_x

    def test_pullback_identity(self, l1: LinearODE) -> None:
        """n = 1 的拉回只改变量名。"""
        assert pullback_monomial(l1, 1, var="t") == l1

    def test_pullback_composes(self, l1: LinearODE) -> None:
        """先 3 后 3 等于一次 9。"""
        twice = pullback_monomial(pullback_monomial(l1, 3), 3)
        assert twice == pullback_monomial(l1, 9)

    def test_pullback_rejects_zero(self, l1: LinearODE) -> None:
        """指数必须为正。"""
        with pytest.raises(PolynomialError):
            pullback_monomial(l1, 0)

    def test_descend(self, l1: LinearODE, spar_x: LinearODE) -> None:
        """下降是拉回的逆。"""
        assert descend_monomial(spar_x, 9) == l1
        assert descend_monomial(spar_x, 1, var="s") == spar_x

    def test_descend_not_invariant(self) -> None:
        """系数不是 s² 的函数时不能下降。"""
        with pytest.raises(PolynomialError):
            descend_monomial(parse_ode("y'' + y' = 0", var="s"), 2)

    def test_constant_substitution(self, l1: LinearODE) -> None:
        """常数代换无意义。"""
        qu = RationalFunctionField(QQ_FIELD, "u")
        with pytest.raises(PolynomialError):
            change_of_variable(l1, qu.convert(2))

    def test_infinity_of_free_particle(self) -> None:
        """y″ = 0 在 u = 1/x 下变为 y″ + (2/u)y′ = 0。"""
        ode = at_infinity(parse_ode("y'' = 0"))
        u = ode.field.gen
        assert ode.coefficient(1) == 2 / u
        assert ode.coefficient(0).is_zero()


# ============ 奇点与指数 ============


class TestSingularities:
    """奇点与局部指数测试类。"""

    def test_l1_singular_points(self, l1: LinearODE) -> None:
        """L1 恰有三个正则奇点。"""
        assert _labels(l1) == ["0", "1", INFINITY]

    def test_spar_x_places(self, spar_x: LinearODE) -> None:
        """九次单位根分成三个不可约位，加上 ∞。"""
        places = singular_points(spar_x)
        assert [p.degree for p in places] == [1, 2, 6, 1]
        assert places[-1].is_infinity
        assert sum(p.degree for p in places) == 10

    @pytest.mark.slow
    def test_spar_x_points_over_cyclotomic(self, spar_x: LinearODE) -> None:
        """在 Q(ζ9) 上展开为全部九次单位根与 ∞。"""
        k = cyclotomic_field()
        points = singular_points_in(spar_x, k)
        assert len(points) == 10
        assert points[-1] == INFINITY
        for p in points[:-1]:
            assert p**9 == k.one

    def test_free_particle(self) -> None:
        """y″ = 0 没有有限奇点，∞ 是指数 {−1, 0} 的正则奇点。"""
        ode = parse_ode("y'' = 0")
        assert _labels(ode) == [INFINITY]
        assert local_exponents(ode, INFINITY).exponents == (rational(-1), rational(0))

    def test_l1_exponents(self, l1: LinearODE) -> None:
        """L1 在 0、1、∞ 处的指数。"""
        assert local_exponents(l1, 0).exponents == (rational(0), rational(1, 9))
        assert local_exponents(l1, 1).exponents == (rational(0), rational(0))
        assert local_exponents(l1, INFINITY).exponents == (rational(4, 9), rational(4, 9))

    def test_spar_x_exponents(self, spar_x: LinearODE) -> None:
        """单位根处指数 {0, 0}，∞ 处 {4, 4}。"""
        assert local_exponents(spar_x, 1).exponents == (rational(0), rational(0))
        assert local_exponents(spar_x, INFINITY).exponents == (rational(4), rational(4))
        for place in singular_points(spar_x)[1:-1]:
            exps = local_exponents(spar_x, place).exponents
            assert exps is not None and all(e == 0 for e in exps)

    def test_exponents_scale_under_pullback(self, l1: LinearODE, spar_x: LinearODE) -> None:
        """s = 0 处的指数是 t = 0 处指数的 9 倍。"""
        at_t = local_exponents(l1, 0).exponents
        at_s = local_exponents(spar_x, 0)
        assert not at_s.singular
        assert at_s.exponents == tuple(e * 9 for e in at_t)

    def test_irregular(self) -> None:
        """y″ + y = 0 在 ∞ 处非正则，报告极点阶。"""
        with pytest.raises(IrregularSingularityError) as exc_info:
            local_exponents(parse_ode("y'' + y = 0"), INFINITY)
        assert exc_info.value.pole_order == 4
        assert exc_info.value.coefficient == 0

    def test_irrational_exponents(self) -> None:
        """判别式不是平方时返回指标多项式本身。"""
        result = local_exponents(parse_ode("t^2*y'' + t*y' - 2*y = 0"), 0)
        assert result.exponents is None
        assert str(result.indicial) == "rho^2 - 2"


class TestRiemannScheme:
    """Riemann 表与 Fuchs 关系测试类。"""

    def test_spar_x_scheme(self, spar_x: LinearODE) -> None:
        """十个奇点，指数总和 0·18 + 4 + 4 = 8 = 10 − 2。"""
        scheme = riemann_scheme(spar_x)
        assert scheme.point_count == 10
        assert scheme.fuchs_sum() == 8
        assert scheme.fuchs_relation_holds()
        data = scheme.to_dict()
        assert data["points"] == 10
        assert data["fuchs_relation"]["holds"]

    def test_l1_scheme(self, l1: LinearODE) -> None:
        """L1：0 + 1/9 + 0 + 0 + 4/9 + 4/9 = 1 = 3 − 2。"""
        scheme = riemann_scheme(l1)
        assert scheme.point_count == 3
        assert scheme.fuchs_relation_holds()
        table = scheme.table()
        assert "1/9" in table and "4/9" in table


class TestHypergeometric:
    """超几何形状测试类。"""

    @pytest.mark.parametrize(
        "text,expected",
        [
            (L1_TEXT, (rational(4, 9), rational(4, 9), rational(8, 9))),
            (L2_TEXT, (rational(2, 9), rational(2, 9), rational(4, 9))),
            (L3_TEXT, (rational(1, 9), rational(1, 9), rational(2, 9))),
        ],
    )
    def test_parameters(self, text: str, expected: tuple) -> None:
        """三个下降方程的 (a, b, c)。"""
        ode = parse_ode(text)
        assert is_hypergeometric(ode)
        params = hypergeometric_parameters(ode)
        assert (params.a, params.b, params.c) == expected

    def test_not_hypergeometric(self, spar_x: LinearODE) -> None:
        """十个奇点的方程与非正则方程都不是超几何形状。"""
        assert not is_hypergeometric(spar_x)
        assert not is_hypergeometric(parse_ode("y'' + y = 0"))
        with pytest.raises(PolynomialError):
            hypergeometric_parameters(spar_x)


# ============ Frobenius 级数 ============


class TestFrobenius:
    """Frobenius 级数测试类。"""

    def test_constant_solution(self) -> None:
        """y′ = 0 的解是常数。"""
        series = frobenius_series(parse_ode("y' = 0"), 0, 0, 5)
        assert series.coefficients == (rational(1),) + (rational(0),) * 5

    def test_l1_hypergeometric_recursion(self, l1: LinearODE) -> None:
        """L1 在 0 处的全纯解是 ₂F₁(4/9, 4/9; 8/9; t)。"""
        a, b, c = rational(4, 9), rational(4, 9), rational(8, 9)
        expected = [rational(1)]
        for m in range(8):
            expected.append(expected[-1] * (a + m) * (b + m) / ((c + m) * (m + 1)))
        series = frobenius_series(l1, 0, 0, 8)
        assert list(series.coefficients) == expected
        assert series.coefficients[1] == rational(2, 9)

    def test_second_exponent(self, l1: LinearODE) -> None:
        """指数 1/9 的解首项系数为 (5/9)²/(10/9) = 5/18。"""
        series = frobenius_series(l1, 0, rational(1, 9), 3)
        assert series.coefficients[1] == rational(5, 18)

    def test_not_an_exponent(self, l1: LinearODE) -> None:
        """非指数被拒绝。"""
        with pytest.raises(PolynomialError):
            frobenius_series(l1, 0, rational(1, 2), 3)

    def test_resonance(self, l1: LinearODE) -> None:
        """常点处指数 0 与 1 相差整数，ρ = 0 共振。"""
        with pytest.raises(ResonanceError):
            frobenius_series(l1, 2, 0, 3)

    def test_default_terms(self, l1: LinearODE) -> None:
        """缺省截断阶来自配置。"""
        assert frobenius_series(l1, 0, 0).terms == 10

    def test_leading_term_only(self, l1: LinearODE) -> None:
        """terms = 0 只给出首项。"""
        series = frobenius_series(l1, 0, 0, 0)
        assert series.coefficients == (rational(1),)

    def test_negative_terms(self, l1: LinearODE) -> None:
        with pytest.raises(PolynomialError):
            frobenius_series(l1, 0, 0, -1)

    def test_residual_starts_after_truncation(self, l1: LinearODE) -> None:
        """代回方程后余项从 u^{ρ+N+1} 起。"""
        series = frobenius_series(l1, 0, rational(1, 9), 4)
        order = series_residual_order(l1, 0, series)
        assert order is not None and order > 4

    def test_exact_solution_has_no_residual(self) -> None:
        ode = parse_ode("y' = 0")
        series = frobenius_series(ode, 0, 0, 3)
        assert series_residual_order(ode, 0, series) is None

    def test_residual_at_infinity(self, l1: LinearODE) -> None:
        """∞ 处的双重指数 4/9。"""
        series = frobenius_series(l1, INFINITY, rational(4, 9), 4)
        check_series(l1, INFINITY, series)
        assert series_residual_order(l1, INFINITY, series) > 4

    def test_corrupted_coefficient_rejected(self, l1: LinearODE) -> None:
        """改动一个系数后回代在该阶失败。"""
        series = frobenius_series(l1, 0, 0, 4)
        coeffs = list(series.coefficients)
        coeffs[2] = coeffs[2] + 1
        broken = replace(series, coefficients=tuple(coeffs))
        assert series_residual_order(l1, 0, broken) == 2
        with pytest.raises(PolynomialError):
            check_series(l1, 0, broken)
