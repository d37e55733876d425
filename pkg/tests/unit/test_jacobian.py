"""Jacobian 环单元测试。"""

import random
from typing import List

import pytest

from src.fields import QQ_FIELD, RationalFunctionField, rational, trace_field
from src.jacobian import (
    CofactorCertificate,
    JacobianRing,
    graded_membership,
    is_smooth,
    quotient_basis,
    reduce_mod_jacobian,
)
from src.polyring import MultiPoly, monomials_of_degree, parse_polynomial
from src.utils.errors import (
    CertificateError,
    NotInJacobianIdealError,
    PolynomialError,
    SingularCurveError,
)

SPAR_TEXT = (
    "(s^9 + 1)*X^4 - 3*s^7*X^3*Y + 6*s^6*X^3*Z - 3*s^5*X^2*Y^2 - 6*s^4*X^2*Y*Z"
    " + s^3*(6*X^2*Z^2 + 4*X*Y^3) - 6*s^2*X*Y^2*Z + s*(-6*X*Y*Z^2 + 3*Y^4)"
    " + X*Z^3 + 3*Y^3*Z"
)
FINF_TEXT = (
    "X^4 - 3*X^3*Y + 6*X^3*Z - 3*X^2*Y^2 - 6*X^2*Y*Z + 6*X^2*Z^2"
    " + 4*X*Y^3 - 6*X*Y^2*Z - 6*X*Y*Z^2 + X*Z^3 + 3*Y^4 + 3*Y^3*Z"
)


@pytest.fixture
def fermat() -> MultiPoly:
    return parse_polynomial("X^4 + Y^4 + Z^4", QQ_FIELD)


@pytest.fixture
def qs() -> RationalFunctionField:
    return RationalFunctionField(QQ_FIELD, "s")


@pytest.fixture
def spar(qs: RationalFunctionField) -> MultiPoly:
    return parse_polynomial(SPAR_TEXT, qs)


# ============ 成员判定 ============


class TestMembership:
    """理想成员判定测试类。"""

    def test_fermat_certificate(self, fermat: MultiPoly) -> None:
        """X³Y² = (Y²/4)·4X³。"""
        result = graded_membership(parse_polynomial("X^3*Y^2", QQ_FIELD), fermat)
        assert result.member
        gx, gy, gz = result.certificate.cofactors
        assert gx == parse_polynomial("1/4*Y^2", QQ_FIELD)
        assert gy.is_zero() and gz.is_zero()
        assert result.certificate.verify()

    def test_low_degree_not_member(self, fermat: MultiPoly) -> None:
        """次数低于 d−1 的非零多项式不是成员，余项即自身。"""
        result = graded_membership(parse_polynomial("X", QQ_FIELD), fermat)
        assert not result.member
        assert result.residue == {"X": "1"}

    def test_zero_is_member(self, fermat: MultiPoly) -> None:
        """零多项式平凡属于理想。"""
        result = graded_membership(MultiPoly.zero(QQ_FIELD), fermat)
        assert result.member
        assert all(g.is_zero() for g in result.certificate.cofactors)

    def test_socle_not_member(self, fermat: MultiPoly) -> None:
        """X²Y²Z² 生成 Fermat 四次的 6 次商空间。"""
        ring = JacobianRing(fermat)
        result = ring.membership(parse_polynomial("X^2*Y^2*Z^2", QQ_FIELD))
        assert not result.member
        with pytest.raises(NotInJacobianIdealError) as exc_info:
            ring.require_member(parse_polynomial("X^2*Y^2*Z^2", QQ_FIELD))
        assert exc_info.value.residue

    def test_inhomogeneous_rejected(self, fermat: MultiPoly) -> None:
        """非齐次输入报错。"""
        with pytest.raises(PolynomialError):
            graded_membership(parse_polynomial("X^3 + 1", QQ_FIELD), fermat)

    def test_above_top_degree(self, fermat: MultiPoly) -> None:
        """超过顶次的多项式按单项式拆分，证书仍然成立。"""
        p = parse_polynomial("X^5*Y^2*Z^2 + 3*Y^9 - 1/2*X*Y*Z^7", QQ_FIELD)
        result = JacobianRing(fermat).membership(p)
        assert result.member
        assert result.certificate.verify()

    @pytest.mark.slow
    def test_parametric_member(self, spar: MultiPoly) -> None:
        """2(F′_s)²·X 属于 J(F_s)。"""
        d = spar.parameter_derivative()
        x = MultiPoly.variable(spar.field, "X")
        result = graded_membership(d * d * x * 2, spar)
        assert result.member
        assert result.certificate.verify()


class TestCertificate:
    """证书序列化测试类。"""

    def test_round_trip(self, fermat: MultiPoly) -> None:
        """JSON 字典载入时重新验证。"""
        cert = graded_membership(parse_polynomial("X^3*Y^2 - 2*Z^5", QQ_FIELD), fermat).certificate
        loaded = CofactorCertificate.from_dict(cert.to_dict(), QQ_FIELD)
        assert loaded.target == cert.target
        assert loaded.cofactors == cert.cofactors

    def test_tampered(self, fermat: MultiPoly) -> None:
        """篡改后的证书载入失败。"""
        data = graded_membership(parse_polynomial("X^3*Y^2", QQ_FIELD), fermat).certificate.to_dict()
        data["cofactors"][0] = "1/2*Y^2"
        with pytest.raises(CertificateError):
            CofactorCertificate.from_dict(data, QQ_FIELD)


# ============ 商空间 ============


class TestQuotientBasis:
    """商空间基测试类。"""

    def test_hilbert_function(self, fermat: MultiPoly) -> None:
        """光滑四次曲线的 Hilbert 函数为 (1+t+t²)³ 的系数。"""
        assert JacobianRing(fermat).hilbert_function(8) == [1, 3, 6, 7, 6, 3, 1, 0, 0]

    def test_f0_hilbert_function(self) -> None:
        """F_0 的 Hilbert 函数同样如此。"""
        f0 = parse_polynomial("X^4 + X*Z^3 + 3*Y^3*Z", QQ_FIELD)
        assert JacobianRing(f0).hilbert_function(7) == [1, 3, 6, 7, 6, 3, 1, 0]

    def test_preferred_bases(self, fermat: MultiPoly) -> None:
        """次数 1 使用纯幂基；Fermat 曲线的 X⁵ 在理想中，5 次基由消元挑选。"""
        b1 = quotient_basis(fermat, 1)
        b5 = quotient_basis(fermat, 5)
        assert b1.names() == ["X", "Y", "Z"]
        assert not b1.fallback
        assert b5.names() == ["X^2*Y^2*Z", "X^2*Y*Z^2", "X*Y^2*Z^2"]
        assert b5.fallback
        assert quotient_basis(fermat, 7).dimension == 0

    def test_fallback_flagged(self, fermat: MultiPoly) -> None:
        """次数 6 的商空间不含纯幂，基由消元挑选并标记。"""
        b6 = quotient_basis(fermat, 6)
        assert b6.dimension == 1
        assert b6.fallback
        assert b6.names() == ["X^2*Y^2*Z^2"]

    def test_singular_curve(self) -> None:
        """奇异曲线没有商空间基。"""
        f_inf = parse_polynomial(FINF_TEXT, QQ_FIELD)
        with pytest.raises(SingularCurveError):
            quotient_basis(f_inf, 1)

    @pytest.mark.slow
    def test_parametric_bases(self, spar: MultiPoly) -> None:
        """F_s 在 Q(s) 上的 1 次、5 次与 7 次基。"""
        assert quotient_basis(spar, 1).names() == ["X", "Y", "Z"]
        assert quotient_basis(spar, 5).names() == ["X^5", "Y^5", "Z^5"]
        assert quotient_basis(spar, 7).dimension == 0


class TestReduction:
    """模 Jacobian 约化测试类。"""

    def test_ideal_element(self, fermat: MultiPoly) -> None:
        """理想中的元素坐标为零。"""
        fx = fermat.partial("X")
        p = fx * parse_polynomial("X^2 - Y*Z", QQ_FIELD)
        reduction = reduce_mod_jacobian(p, fermat)
        assert all(c == 0 for c in reduction.coordinates)
        assert reduction.certificate.verify()

    def test_idempotent(self, fermat: MultiPoly) -> None:
        """纯基组合约化后不变。"""
        p = parse_polynomial("2*X^2*Y^2*Z - 1/3*X*Y^2*Z^2", QQ_FIELD)
        reduction = reduce_mod_jacobian(p, fermat, quotient_basis(fermat, 5))
        assert reduction.coordinates == (rational(2), rational(0), rational(-1, 3))
        assert reduction.basis_part() == p

    def test_linearity(self, fermat: MultiPoly) -> None:
        """约化对 P 线性。"""
        p = parse_polynomial("X^3*Y*Z + 2*X*Y^2*Z^2", QQ_FIELD)
        q = parse_polynomial("X^4*Y - Y^5", QQ_FIELD)
        rp, rq = reduce_mod_jacobian(p, fermat), reduce_mod_jacobian(q, fermat)
        rsum = reduce_mod_jacobian(p * 3 + q, fermat)
        assert rsum.coordinates == tuple(a * 3 + b for a, b in zip(rp.coordinates, rq.coordinates))

    def test_degree_mismatch(self, fermat: MultiPoly) -> None:
        """次数与基不符时报错。"""
        with pytest.raises(PolynomialError):
            reduce_mod_jacobian(parse_polynomial("X^5", QQ_FIELD), fermat, quotient_basis(fermat, 1))

    @pytest.mark.slow
    def test_parametric_reduction(self, spar: MultiPoly) -> None:
        """−X·F′_s ≡ (9/s)·X⁵ (mod J)。"""
        qs = spar.field
        s = qs.gen
        p = -(MultiPoly.variable(qs, "X") * spar.parameter_derivative())
        reduction = reduce_mod_jacobian(p, spar, quotient_basis(spar, 5))
        assert reduction.coordinates == (9 / s, qs.zero, qs.zero)


# ============ 光滑性 ============


class TestSmoothness:
    """光滑性测试类。"""

    def test_smooth_curves(self, fermat: MultiPoly) -> None:
        """Fermat 四次与 F_0 光滑。"""
        assert is_smooth(fermat).smooth
        assert is_smooth(parse_polynomial("X^4 + X*Z^3 + 3*Y^3*Z", QQ_FIELD)).smooth

    def test_irreducible_cusp_singular(self) -> None:
        """t = 1 的纤维 F_1 奇异。"""
        f1 = parse_polynomial(f"X^4 + {FINF_TEXT}", QQ_FIELD)
        result = is_smooth(f1)
        assert not result.smooth
        assert result.top_quotient_dim > 0

    def test_rational_witness(self) -> None:
        """有理奇点被网格搜索找到。"""
        nodal = parse_polynomial("Y^2*Z - X^3 - X^2*Z", QQ_FIELD)
        result = is_smooth(nodal)
        assert not result.smooth
        assert result.witness == (0, 0, 1)

    def test_candidate_witness(self) -> None:
        """F_∞ 的奇点在 Q(v) 上，由候选点给出。"""
        f_inf = parse_polynomial(FINF_TEXT, QQ_FIELD)
        k = trace_field()
        v = k.gen
        point = (-v, k.one, v - 1)
        ring = JacobianRing(f_inf)
        assert not ring.smoothness().smooth
        assert ring.find_singular_point([point]) == point

    def test_generic_by_specialization(self, spar: MultiPoly) -> None:
        """一般纤维光滑由一个光滑特化纤维判定。"""
        result = is_smooth(spar)
        assert result.smooth
        assert result.method == "specialization"


# ============ 随机成员 ============


def _random_form(rng: random.Random, degree: int, count: int) -> MultiPoly:
    monomials = monomials_of_degree(degree)
    terms = {
        e: rational(rng.randint(-5, 5), rng.randint(1, 3))
        for e in rng.sample(monomials, min(count, len(monomials)))
    }
    return MultiPoly(QQ_FIELD, terms)


def _random_smooth_quartics(rng: random.Random, count: int) -> List[MultiPoly]:
    """Fermat 四次曲线加随机扰动，只保留光滑的。"""
    fermat = parse_polynomial("X^4 + Y^4 + Z^4", QQ_FIELD)
    curves: List[MultiPoly] = []
    while len(curves) < count:
        curve = fermat + _random_form(rng, 4, 4)
        if curve.total_degree == 4 and is_smooth(curve).smooth:
            curves.append(curve)
    return curves


class TestRandomMemberships:
    """随机光滑四次曲线上 Σ G_i·∂F/∂x_i 的证书自验证测试类。"""

    @pytest.mark.slow
    def test_certificates_verify(self) -> None:
        """5 条曲线各 20 个随机成员，共 100 个证书。"""
        rng = random.Random(20260206)
        checked = 0
        for curve in _random_smooth_quartics(rng, 5):
            partials = curve.gradient()
            members = 0
            while members < 20:
                degree = rng.randint(0, 3)
                member = sum(
                    (_random_form(rng, degree, 3) * d for d in partials), MultiPoly.zero(QQ_FIELD)
                )
                if member.is_zero():
                    continue
                result = graded_membership(member, curve)
                assert result.member
                assert result.certificate is not None
                assert result.certificate.verify()
                assert result.certificate.target == member
                members += 1
            checked += members
        assert checked == 100
