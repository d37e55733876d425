"""Griffiths-Dwork 约化与 Picard-Fuchs 推导单元测试。"""

import random
from math import factorial

import pytest

from src.fields import QQ_FIELD, RationalFunctionField, rational
from src.fuchsian import INFINITY, frobenius_series, local_exponents, parse_ode, pullback_monomial
from src.griffiths_dwork import (
    CohomClass,
    PicardFuchsResult,
    block_orders,
    gauss_manin_derivative,
    get_connection,
    normal_form,
    picard_fuchs,
    reduce_pole_order,
)
from src.jacobian import get_ring
from src.polyring import MultiPoly, monomials_of_degree, parse_polynomial
from src.utils.errors import (
    CertificateError,
    DegreeBookkeepingError,
    NoRelationError,
    NotInJacobianIdealError,
    PolynomialError,
)

SPAR_TEXT = (
    "(s^9 + 1)*X^4 - 3*s^7*X^3*Y + 6*s^6*X^3*Z - 3*s^5*X^2*Y^2 - 6*s^4*X^2*Y*Z"
    " + s^3*(6*X^2*Z^2 + 4*X*Y^3) - 6*s^2*X*Y^2*Z + s*(-6*X*Y*Z^2 + 3*Y^4)"
    " + X*Z^3 + 3*Y^3*Z"
)
HESSE_TEXT = "X^3 + Y^3 + Z^3 - 3*s*X*Y*Z"
L2_TEXT = "y'' + ((13*t - 4)/(9*t*(t - 1)))*y' + (4/(81*t*(t - 1)))*y = 0"
L3_TEXT = "y'' + ((11*t - 2)/(9*t*(t - 1)))*y' + (1/(81*t*(t - 1)))*y = 0"


@pytest.fixture
def qs() -> RationalFunctionField:
    return RationalFunctionField(QQ_FIELD, "s")


@pytest.fixture
def spar(qs: RationalFunctionField) -> MultiPoly:
    return parse_polynomial(SPAR_TEXT, qs)


@pytest.fixture
def fermat() -> MultiPoly:
    return parse_polynomial("X^4 + Y^4 + Z^4", QQ_FIELD)


def _var(field: object, name: str) -> MultiPoly:
    return MultiPoly.variable(field, name)


def _random_class(rng: random.Random, spar: MultiPoly) -> CohomClass:
    """极点阶 1 或 2、系数为 c·s^j 的随机上同调类。"""
    qs = spar.field
    s = qs.gen
    k = rng.choice([1, 2])
    monomials = monomials_of_degree(4 * k - 3)
    terms = {
        e: rational(rng.choice([-1, 1]) * rng.randint(1, 5), rng.randint(1, 3)) * s ** rng.randint(0, 2)
        for e in rng.sample(monomials, min(3, len(monomials)))
    }
    return CohomClass(spar, MultiPoly(qs, terms), k)


# ============ 上同调类 ============


class TestCohomClass:
    """上同调类构造测试类。"""

    def test_degree_bookkeeping(self, fermat: MultiPoly) -> None:
        """分子次数必须是 k·d − 3。"""
        with pytest.raises(DegreeBookkeepingError):
            CohomClass(fermat, parse_polynomial("X^2", QQ_FIELD), 1)
        with pytest.raises(DegreeBookkeepingError):
            CohomClass(fermat, parse_polynomial("X^4 + Y", QQ_FIELD), 2)
        assert CohomClass(fermat, parse_polynomial("X^5", QQ_FIELD), 2).pole_order == 2

    def test_zero_numerator_allowed(self, fermat: MultiPoly) -> None:
        """零分子在任意极点阶都合法。"""
        assert CohomClass(fermat, MultiPoly.zero(QQ_FIELD), 3).is_zero()

    def test_cubic_numerators(self, qs: RationalFunctionField) -> None:
        """三次曲线的极点阶 1 分子是常数。"""
        hesse = parse_polynomial(HESSE_TEXT, qs)
        omega = CohomClass(hesse, MultiPoly.constant(qs, 1))
        assert omega.expected_degree(2) == 3


class TestGaussManin:
    """Gauss-Manin 导数测试类。"""

    def test_constant_family(self, fermat: MultiPoly) -> None:
        """常数族上导数为零。"""
        derived = gauss_manin_derivative(CohomClass(fermat, _var(QQ_FIELD, "X")))
        assert derived.is_zero()
        assert derived.pole_order == 2

    def test_first_derivative(self, spar: MultiPoly) -> None:
        """D(X·Ω0/F) = −X·F′·Ω0/F²。"""
        x = _var(spar.field, "X")
        derived = gauss_manin_derivative(CohomClass(spar, x))
        assert derived.pole_order == 2
        assert derived.numerator == -(x * spar.parameter_derivative())

    def test_second_order_pole(self, spar: MultiPoly) -> None:
        """D(X⁵·Ω0/F²) = −2X⁵·F′·Ω0/F³。"""
        x5 = _var(spar.field, "X") ** 5
        derived = gauss_manin_derivative(CohomClass(spar, x5, 2))
        assert derived.pole_order == 3
        assert derived.numerator == -(x5 * spar.parameter_derivative()) * 2

    def test_parametric_numerator(self, spar: MultiPoly) -> None:
        """分子含参数时加上 F·P′ 项。"""
        qs = spar.field
        s = qs.gen
        x = _var(qs, "X")
        derived = gauss_manin_derivative(CohomClass(spar, x.scale(s)))
        assert derived.numerator == spar * x - (x.scale(s) * spar.parameter_derivative())


class TestReducePoleOrder:
    """降阶测试类。"""

    def test_zero(self, fermat: MultiPoly) -> None:
        """零分子降阶仍为零。"""
        reduced, certificate = reduce_pole_order(CohomClass(fermat, MultiPoly.zero(QQ_FIELD), 2))
        assert reduced.is_zero()
        assert reduced.pole_order == 1
        assert certificate.verify()

    def test_key_equality(self, fermat: MultiPoly) -> None:
        """X⁵ = (X²/4)·4X³，散度 X/2。"""
        reduced, certificate = reduce_pole_order(CohomClass(fermat, parse_polynomial("X^5", QQ_FIELD), 2))
        assert reduced.numerator == parse_polynomial("1/2*X", QQ_FIELD)
        assert certificate.expand() == parse_polynomial("X^5", QQ_FIELD)

    def test_pole_one(self, fermat: MultiPoly) -> None:
        """极点阶 1 不能再降。"""
        with pytest.raises(PolynomialError):
            reduce_pole_order(CohomClass(fermat, _var(QQ_FIELD, "X")))

    def test_not_member(self, fermat: MultiPoly) -> None:
        """分子不在理想中时携带余项。"""
        omega = CohomClass(fermat, parse_polynomial("X^2*Y^2*Z", QQ_FIELD), 2)
        with pytest.raises(NotInJacobianIdealError) as exc_info:
            reduce_pole_order(omega)
        assert exc_info.value.residue == {"X^2*Y^2*Z": "1"}

    @pytest.mark.slow
    def test_parametric_square(self, spar: MultiPoly) -> None:
        """2(F′)²X·Ω0/F³ 降到极点阶 2，证书复原分子。"""
        d = spar.parameter_derivative()
        numerator = d * d * _var(spar.field, "X") * 2
        reduced, certificate = reduce_pole_order(CohomClass(spar, numerator, 3))
        assert reduced.pole_order == 2
        assert certificate.expand() == numerator
        assert reduced.numerator == certificate.divergence() / 2


# ============ 规范形 ============


class TestNormalForm:
    """规范形测试类。"""

    def test_block_orders(self, fermat: MultiPoly, qs: RationalFunctionField) -> None:
        """四次与三次曲线都有两个块。"""
        assert block_orders(get_ring(fermat)) == [1, 2]
        assert block_orders(get_ring(parse_polynomial(HESSE_TEXT, qs))) == [1, 2]

    def test_basis_element(self, fermat: MultiPoly) -> None:
        """基元素的坐标是单位向量。"""
        nf = normal_form(CohomClass(fermat, _var(QQ_FIELD, "X")))
        assert nf.coordinates == (1, 0, 0, 0, 0, 0)
        assert nf.labels()[0] == "X/F^1"

    def test_reduces_to_lower_block(self, fermat: MultiPoly) -> None:
        """X⁵·Ω0/F² ≡ (1/2)X·Ω0/F。"""
        nf = normal_form(CohomClass(fermat, parse_polynomial("X^5", QQ_FIELD), 2))
        assert nf.coordinates == (rational(1, 2), 0, 0, 0, 0, 0)
        assert all(c.verify() for c in nf.certificates)

    def test_above_top_block(self, fermat: MultiPoly) -> None:
        """X⁹·Ω0/F³ ≡ (3/8)X·Ω0/F。"""
        nf = normal_form(CohomClass(fermat, parse_polynomial("X^9", QQ_FIELD), 3))
        assert nf.coordinates == (rational(3, 8), 0, 0, 0, 0, 0)

    def test_linearity(self, fermat: MultiPoly) -> None:
        """规范形对类线性。"""
        a = CohomClass(fermat, parse_polynomial("X^5 + 2*X^2*Y^2*Z", QQ_FIELD), 2)
        b = CohomClass(fermat, parse_polynomial("Y^3*Z^2 - X*Y*Z^3", QQ_FIELD), 2)
        na, nb = normal_form(a), normal_form(b)
        nsum = normal_form(a + b.scale(rational(3)))
        assert nsum.coordinates == tuple(x + 3 * y for x, y in zip(na.coordinates, nb.coordinates))

    @pytest.mark.slow
    def test_first_derivative(self, spar: MultiPoly) -> None:
        """−X·F′ ≡ (9/s)·X⁵，D(X·Ω0/F) 的坐标为 (0, 0, 0, 9/s, 0, 0)。"""
        qs = spar.field
        s = qs.gen
        nf = normal_form(gauss_manin_derivative(CohomClass(spar, _var(qs, "X"))))
        assert nf.coordinates == (0, 0, 0, 9 / s, 0, 0)

    @pytest.mark.slow
    def test_second_derivative_block(self, spar: MultiPoly) -> None:
        """D²(X·Ω0/F) 的极点阶 2 块为 (−81s⁷/(s⁹−1), 0, 0)。"""
        qs = spar.field
        s = qs.gen
        omega = CohomClass(spar, _var(qs, "X"))
        nf = normal_form(gauss_manin_derivative(gauss_manin_derivative(omega)))
        assert nf.block(2) == (-81 * s**7 / (s**9 - 1), 0, 0)

    @pytest.mark.slow
    def test_path_independence(self, spar: MultiPoly) -> None:
        """直接约化 D(ω) 与 v′ + M·v 一致。"""
        qs = spar.field
        s = qs.gen
        omega = CohomClass(spar, _var(qs, "X").scale(s) + _var(qs, "Y"))
        connection = get_connection(spar)
        v = normal_form(omega).coordinates
        once = gauss_manin_derivative(omega)
        assert normal_form(once).coordinates == connection.apply(v)
        twice = gauss_manin_derivative(once)
        assert normal_form(twice).coordinates == connection.apply(connection.apply(v))

    @pytest.mark.slow
    def test_path_independence_random(self, spar: MultiPoly) -> None:
        """50 个随机类上 nf(D ω) = v′ + M·v。"""
        rng = random.Random(20260206)
        connection = get_connection(spar)
        for _ in range(50):
            omega = _random_class(rng, spar)
            v = normal_form(omega).coordinates
            assert normal_form(gauss_manin_derivative(omega)).coordinates == connection.apply(v)


# ============ Picard-Fuchs ============


class TestPicardFuchs:
    """Picard-Fuchs 方程推导测试类。"""

    def test_constant_family(self, fermat: MultiPoly) -> None:
        """常数族上 Dω0 = 0，方程为 y′ = 0。"""
        result = picard_fuchs(fermat, _var(QQ_FIELD, "X"))
        assert result.order == 1
        assert result.ode.coefficient(0).is_zero()
        assert str(result.ode) == "y' = 0"
        assert result.rank_profile == (1, 1)
        assert result.verify()

    def test_zero_section(self, fermat: MultiPoly) -> None:
        """零截面没有方程。"""
        with pytest.raises(PolynomialError):
            picard_fuchs(fermat, MultiPoly.zero(QQ_FIELD))

    def test_serialization(self, fermat: MultiPoly) -> None:
        """JSON 载入时重新验证证书与关系。"""
        result = picard_fuchs(fermat, _var(QQ_FIELD, "Y"))
        loaded = PicardFuchsResult.from_dict(result.to_dict(), QQ_FIELD)
        assert loaded.ode == result.ode
        assert loaded.verify()

    def test_tampered_relation(self, fermat: MultiPoly) -> None:
        """篡改规范形后载入失败。"""
        data = picard_fuchs(fermat, _var(QQ_FIELD, "Z")).to_dict()
        data["normal_forms"][1][0] = "1"
        with pytest.raises(CertificateError):
            PicardFuchsResult.from_dict(data, QQ_FIELD)

    @pytest.mark.slow
    def test_spar_section_x(self, spar: MultiPoly) -> None:
        """a_1 = 9s⁸/(s⁹−1)，a_0 = 16s⁷/(s⁹−1)，二阶且没有一阶关系。"""
        qs = spar.field
        s = qs.gen
        result = picard_fuchs(spar, _var(qs, "X"))
        assert result.order == 2
        assert result.ode.coefficient(1) == 9 * s**8 / (s**9 - 1)
        assert result.ode.coefficient(0) == 16 * s**7 / (s**9 - 1)
        assert result.rank_profile == (1, 2, 2)
        assert result.verify()

    @pytest.mark.slow
    @pytest.mark.parametrize("name,text", [("Y", L2_TEXT), ("Z", L3_TEXT)])
    def test_spar_sections_yz(self, spar: MultiPoly, name: str, text: str) -> None:
        """Y、Z 截面的方程是 L2、L3 沿 t = s⁹ 的拉回。"""
        result = picard_fuchs(spar, _var(spar.field, name))
        assert result.ode == pullback_monomial(parse_ode(text), 9)

    @pytest.mark.slow
    def test_order_limit(self, spar: MultiPoly) -> None:
        """阶数上限 1 时报告秩序列。"""
        with pytest.raises(NoRelationError) as exc_info:
            picard_fuchs(spar, _var(spar.field, "X"), max_order=1)
        assert exc_info.value.rank_profile == [1, 2]

    @pytest.mark.slow
    def test_hesse_period(self, qs: RationalFunctionField) -> None:
        """Hesse 族在 ∞ 处的 Frobenius 解与周期级数 Σ (3k)!/(k!³·27^k)·u^{3k} 一致。"""
        hesse = parse_polynomial(HESSE_TEXT, qs)
        result = picard_fuchs(hesse, MultiPoly.constant(qs, 1))
        assert result.order == 2
        assert local_exponents(result.ode, INFINITY).exponents == (rational(1), rational(1))
        series = frobenius_series(result.ode, INFINITY, 1, 9)
        expected = [rational(0)] * 10
        for k in range(4):
            expected[3 * k] = rational(factorial(3 * k), factorial(k) ** 3 * 27**k)
        assert list(series.coefficients) == expected
