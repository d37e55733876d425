"""多元多项式与表达式解析器单元测试。"""

import random

import pytest

from src.fields import QQ_FIELD, RationalFunctionField, UniPoly, cyclotomic_field, rational, zeta9
from src.polyring import (
    LinearSubstitution,
    MultiPoly,
    coefficient_extract,
    exact_quotient,
    monomials_of_degree,
    parse_polynomial,
    parse_scalar,
    partial_derivative,
    specialize,
    substitute_linear,
)
from src.utils.errors import FieldError, ParseError, PolynomialError

SPAR_TEXT = (
    "(s^9 + 1)*X^4 - 3*s^7*X^3*Y + 6*s^6*X^3*Z - 3*s^5*X^2*Y^2 - 6*s^4*X^2*Y*Z"
    " + s^3*(6*X^2*Z^2 + 4*X*Y^3) - 6*s^2*X*Y^2*Z + s*(-6*X*Y*Z^2 + 3*Y^4)"
    " + X*Z^3 + 3*Y^3*Z"
)
F0_TEXT = "X^4 + X*Z^3 + 3*Y^3*Z"
FINF_TEXT = (
    "X^4 - 3*X^3*Y + 6*X^3*Z - 3*X^2*Y^2 - 6*X^2*Y*Z + 6*X^2*Z^2"
    " + 4*X*Y^3 - 6*X*Y^2*Z - 6*X*Y*Z^2 + X*Z^3 + 3*Y^4 + 3*Y^3*Z"
)


@pytest.fixture
def qs() -> RationalFunctionField:
    return RationalFunctionField(QQ_FIELD, "s")


@pytest.fixture
def spar(qs: RationalFunctionField) -> MultiPoly:
    return parse_polynomial(SPAR_TEXT, qs)


def _random_poly(rng: random.Random, degree: int) -> MultiPoly:
    terms = {
        e: rational(rng.randint(-5, 5), rng.randint(1, 3))
        for e in rng.sample(monomials_of_degree(degree), 4)
    }
    return MultiPoly(QQ_FIELD, terms)


# ============ 基本运算 ============


class TestMultiPoly:
    """MultiPoly 基本运算测试类。"""

    def test_printing_order(self) -> None:
        """分次字典序打印。"""
        X, Y, Z = MultiPoly.variables(QQ_FIELD)
        f0 = Z * Y**3 * 3 + X * Z**3 + X**4
        assert str(f0) == F0_TEXT

    def test_zero_terms_dropped(self) -> None:
        """不保存零系数。"""
        X, Y, _ = MultiPoly.variables(QQ_FIELD)
        p = (X + Y) - Y
        assert p == X
        assert len(p) == 1
        assert str(X - X) == "0"

    def test_ring_axioms(self) -> None:
        """随机样本上的环公理与双线性。"""
        rng = random.Random(7)
        for _ in range(5):
            a, b, c = (_random_poly(rng, rng.randint(1, 3)) for _ in range(3))
            assert a * (b + c) == a * b + a * c
            assert (a * b) * c == a * (b * c)
            assert a * b == b * a
            assert a - a == 0
            assert (a * 3) * b == (a * b) * 3

    def test_homogeneity(self) -> None:
        """齐次性判断与总次数。"""
        f0 = parse_polynomial(F0_TEXT, QQ_FIELD)
        assert f0.is_homogeneous()
        assert f0.total_degree == 4
        assert not (f0 + 1).is_homogeneous()
        assert MultiPoly.zero(QQ_FIELD).total_degree == -1

    def test_arity_mismatch(self) -> None:
        """指数长度必须与变量数一致。"""
        with pytest.raises(PolynomialError):
            MultiPoly(QQ_FIELD, {(1, 0): 1})

    def test_scalar_division(self) -> None:
        """除以常数；除以非常数报错。"""
        X, Y, _ = MultiPoly.variables(QQ_FIELD)
        assert (X * 4) / 2 == X * 2
        with pytest.raises(PolynomialError):
            X / Y
        with pytest.raises(PolynomialError):
            X / 0

    def test_evaluate_in_extension(self) -> None:
        """在扩域的点上求值。"""
        f0 = parse_polynomial(F0_TEXT, QQ_FIELD)
        z = zeta9()
        value = f0.evaluate([z, 1, 0])
        assert value == z**4

    def test_mixed_field_arithmetic(self, qs: RationalFunctionField) -> None:
        """Q 上的多项式与 Q(s) 上的多项式相乘时提升到 Q(s)。"""
        X, _, _ = MultiPoly.variables(QQ_FIELD)
        sX = MultiPoly.constant(qs, qs.gen) * MultiPoly.variable(qs, "X")
        product = X * sX
        assert product.field == qs
        assert product.coefficient((2, 0, 0)) == qs.gen


# ============ 偏导数与代换 ============


class TestPartialDerivative:
    """偏导数测试类。"""

    def test_f0(self) -> None:
        """∂(X⁴+XZ³+3Y³Z)/∂X = 4X³ + Z³。"""
        f0 = parse_polynomial(F0_TEXT, QQ_FIELD)
        assert str(partial_derivative(f0, "X")) == "4*X^3 + Z^3"

    def test_constant(self) -> None:
        """常数的导数为零。"""
        assert partial_derivative(MultiPoly.constant(QQ_FIELD, 7), "X").is_zero()

    def test_unknown_variable(self) -> None:
        """未知变量报错。"""
        with pytest.raises(PolynomialError):
            partial_derivative(MultiPoly.constant(QQ_FIELD, 1), "W")

    def test_euler_identity(self, spar: MultiPoly) -> None:
        """X·F_X + Y·F_Y + Z·F_Z = 4F。"""
        X, Y, Z = MultiPoly.variables(spar.field)
        fx, fy, fz = spar.gradient()
        assert X * fx + Y * fy + Z * fz == spar * 4

    def test_parameter_derivative(self, spar: MultiPoly) -> None:
        """对参数求导：X⁴ 的系数 s⁹+1 变为 9s⁸。"""
        d = spar.parameter_derivative()
        s = spar.field.gen
        assert d.coefficient((4, 0, 0)) == s**8 * 9
        assert d.coefficient((1, 0, 3)) == 0


class TestSubstituteLinear:
    """线性代换测试类。"""

    def test_identity(self) -> None:
        """恒等代换不改变多项式。"""
        f0 = parse_polynomial(F0_TEXT, QQ_FIELD)
        assert substitute_linear(f0, LinearSubstitution.identity(QQ_FIELD)) == f0

    def test_descent_to_t(self, qs: RationalFunctionField, spar: MultiPoly) -> None:
        """F_spar ∘ diag(1, s², s³) 恰为 t = s⁹ 的 F_t。"""
        s = qs.gen
        image = substitute_linear(spar, LinearSubstitution.diagonal(qs, [1, s**2, s**3]))
        qt = RationalFunctionField(QQ_FIELD, "t")
        f_t = parse_polynomial(f"X^4 + t*({FINF_TEXT})", qt)
        pulled = f_t.map_coefficients(
            lambda c: qs.convert(c.num.with_var("s")).compose(s**9), field=qs
        )
        assert image == pulled

    def test_orbifold_symmetry(self) -> None:
        """F 在 ζ9²s 处 ∘ diag(ζ9, ζ9⁵, ζ9⁷) = ζ9⁴·F_s。"""
        k = cyclotomic_field()
        ks = RationalFunctionField(k, "s")
        z = zeta9(k)
        f = parse_polynomial(SPAR_TEXT, ks)
        rotated = f.map_coefficients(lambda c: c.compose(ks.gen * z**2))
        image = substitute_linear(rotated, LinearSubstitution.diagonal(ks, [z, z**5, z**7]))
        assert image == f.scale(z**4)

    def test_dimension_mismatch(self) -> None:
        """维数不符报错。"""
        f0 = parse_polynomial(F0_TEXT, QQ_FIELD)
        with pytest.raises(PolynomialError):
            substitute_linear(f0, LinearSubstitution.identity(QQ_FIELD, 2))

    def test_invertibility(self) -> None:
        """奇异矩阵不可逆。"""
        assert LinearSubstitution.diagonal(QQ_FIELD, [1, 2, 3]).is_invertible()
        assert not LinearSubstitution.diagonal(QQ_FIELD, [1, 0, 3]).is_invertible()


# ============ 除法与系数 ============


class TestExactQuotient:
    """精确除法测试类。"""

    def test_cusp_factorization(self) -> None:
        """F_∞ = (X+Y+Z)·三次式。"""
        f_inf = parse_polynomial(FINF_TEXT, QQ_FIELD)
        line = parse_polynomial("X + Y + Z", QQ_FIELD)
        result = exact_quotient(f_inf, line)
        assert result.divisible
        assert str(result.quotient) == "X^3 - 4*X^2*Y + 5*X^2*Z + X*Y^2 - 7*X*Y*Z + X*Z^2 + 3*Y^3"
        assert result.quotient * line == f_inf

    def test_divide_by_one(self) -> None:
        """除以 1 得到自身。"""
        f0 = parse_polynomial(F0_TEXT, QQ_FIELD)
        result = exact_quotient(f0, MultiPoly.constant(QQ_FIELD, 1))
        assert result.divisible
        assert result.quotient == f0

    def test_not_divisible(self) -> None:
        """F_0 不被 X+Y+Z 整除，余式非零。"""
        f0 = parse_polynomial(F0_TEXT, QQ_FIELD)
        result = exact_quotient(f0, parse_polynomial("X + Y + Z", QQ_FIELD))
        assert not result.divisible
        assert not result.remainder.is_zero()
        assert result.to_dict()["divisible"] is False

    def test_zero_divisor(self) -> None:
        """除以零多项式报错。"""
        with pytest.raises(PolynomialError):
            exact_quotient(MultiPoly.constant(QQ_FIELD, 1), MultiPoly.zero(QQ_FIELD))


class TestCoefficients:
    """参数族系数测试类。"""

    def test_extract(self, spar: MultiPoly) -> None:
        """系数提取为参数的多项式。"""
        assert coefficient_extract(spar, (4, 0, 0)) == UniPoly(QQ_FIELD, [1] + [0] * 8 + [1], "s")
        assert coefficient_extract(spar, (0, 0, 4)).is_zero()
        assert coefficient_extract(spar, (3, 1, 0)) == UniPoly.monomial(QQ_FIELD, 7, -3, "s")

    def test_extract_non_polynomial(self, qs: RationalFunctionField) -> None:
        """系数不是多项式时报错。"""
        p = MultiPoly.monomial(qs, (1, 0, 0), qs.gen.inverse())
        with pytest.raises(PolynomialError):
            coefficient_extract(p, (1, 0, 0))

    def test_specialize(self, spar: MultiPoly) -> None:
        """s = 0 处特化得到 F_0。"""
        assert specialize(spar, 0, QQ_FIELD) == parse_polynomial(F0_TEXT, QQ_FIELD)

    def test_specialize_at_pole(self, qs: RationalFunctionField) -> None:
        """极点处特化报错。"""
        p = MultiPoly.monomial(qs, (1, 0, 0), qs.gen.inverse())
        with pytest.raises(FieldError):
            specialize(p, 0, QQ_FIELD)


# ============ 解析器 ============


class TestParser:
    """表达式解析测试类。"""

    def test_round_trip(self, spar: MultiPoly) -> None:
        """打印结果可以读回。"""
        assert parse_polynomial(str(spar), spar.field) == spar

    def test_round_trip_rational_coefficients(self, qs: RationalFunctionField) -> None:
        """带分母的系数加括号后可读回。"""
        s = qs.gen
        p = MultiPoly.monomial(qs, (5, 0, 0), s**7 * 16 / (s**9 - 1)) + MultiPoly.monomial(
            qs, (0, 1, 4), rational(-3, 2)
        )
        assert parse_polynomial(str(p), qs) == p

    def test_number_field_generators(self) -> None:
        """数域生成元作为常数。"""
        k = cyclotomic_field()
        p = parse_polynomial("zeta9^9*X - X", k)
        assert p.is_zero()

    def test_precedence(self) -> None:
        """优先级与右结合幂。"""
        assert parse_polynomial("-X^2", QQ_FIELD) == -(parse_polynomial("X", QQ_FIELD) ** 2)
        assert parse_scalar("2^3^2", QQ_FIELD) == 512
        assert parse_scalar("1 - 2 - 3", QQ_FIELD) == -4
        assert parse_scalar("12/4/3", QQ_FIELD) == 1
        assert parse_scalar("2^-1", QQ_FIELD) == rational(1, 2)
        assert parse_polynomial("X**2", QQ_FIELD) == parse_polynomial("X*X", QQ_FIELD)

    def test_unknown_name(self) -> None:
        """未知名称报错并列出可用名称。"""
        with pytest.raises(ParseError) as exc_info:
            parse_polynomial("X + w", QQ_FIELD)
        assert exc_info.value.column == 5
        assert "X" in exc_info.value.expected

    def test_position_on_second_line(self) -> None:
        """错误位置包含行列号。"""
        with pytest.raises(ParseError) as exc_info:
            parse_polynomial("X +\n  $", QQ_FIELD)
        assert (exc_info.value.line, exc_info.value.column) == (2, 3)

    @pytest.mark.parametrize("text", ["X^", "X^(1/2)", "X/Y", "(X + Y", "X Y", "", "X/0"])
    def test_invalid(self, text: str) -> None:
        """语法错误、非整数指数与非常数除数。"""
        with pytest.raises(ParseError):
            parse_polynomial(text, QQ_FIELD)
