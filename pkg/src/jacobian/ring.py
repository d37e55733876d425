"""平面曲线的 Jacobian 环 K[X,Y,Z]/J(F) 的分次线性代数。

对每个次数 m 建立一个线性系统：未知量是余因子 G_i 的单项式系数
(i, ν)，方程是次数 m 单项式 μ 的系数。在余因子列上做一次 Gauss-Jordan
消元后：

- 没有主元的方程行张成商空间 (R/J)_m，其维数就是零行个数；
- 任意多项式的残差（零行上的重放值）为零当且仅当它属于 J_m；
- 主元列上的解给出余因子，证书总是展开验证。

光滑 d 次曲线的商空间在 3d − 5 次消失（"顶次"）。超过顶次的单项式
拆成一个顶次因子与余下部分，顶次因子的证书只计算一次。

Author: QuarticPF Team
Created: 2026-03-04
"""

from dataclasses import dataclass, field
from itertools import product
from typing import Any, Dict, Iterable, List, Optional, Sequence, Tuple

from src.fields.base import Field
from src.fields.linalg import RowEchelon
from src.fields.printing import format_monomial
from src.fields.rational import QQ_FIELD, rational
from src.fields.ratfun import RationalFunctionField
from src.jacobian.certificate import CofactorCertificate
from src.polyring.multipoly import Exponent, MultiPoly, monomials_of_degree, specialize
from src.utils.cache import LRUCache
from src.utils.config import get_settings
from src.utils.errors import (
    CertificateError,
    FieldError,
    NotInJacobianIdealError,
    PolynomialError,
    SingularCurveError,
)
from src.utils.logger import get_logger

logger = get_logger(__name__)

# 一般纤维光滑性检验依次尝试的参数值
_SPECIALIZATION_VALUES = (rational(2), rational(3), rational(-1), rational(1, 2), rational(5), rational(7, 3))


# ============ 结果类型 ============


@dataclass(frozen=True)
class GradedQuotientBasis:
    """(R/J)_m 的单项式基。

    Attributes:
        degree: 次数 m
        monomials: 基单项式（确定性顺序）
        fallback: 基中含有非纯幂单项式（由消元挑选）
    """

    degree: int
    monomials: Tuple[Exponent, ...]
    fallback: bool = False
    vars: Tuple[str, ...] = ("X", "Y", "Z")

    @property
    def dimension(self) -> int:
        return len(self.monomials)

    def names(self) -> List[str]:
        return [format_monomial(self.vars, e) or "1" for e in self.monomials]

    def to_dict(self) -> Dict[str, Any]:
        return {"degree": self.degree, "basis": self.names(), "fallback": self.fallback}


@dataclass(frozen=True)
class Reduction:
    """P = Σ c_b·b + Σ G_i·∂F/∂x_i 的分解。"""

    coordinates: Tuple[Any, ...]
    basis: GradedQuotientBasis
    certificate: CofactorCertificate

    def basis_part(self) -> MultiPoly:
        target = self.certificate.target
        total = MultiPoly.zero(target.field, target.vars)
        for c, e in zip(self.coordinates, self.basis.monomials):
            total = total + MultiPoly.monomial(target.field, e, c, target.vars)
        return total

    def residue(self) -> Dict[str, str]:
        field = self.certificate.target.field
        return {
            name: field.to_str(c)
            for name, c in zip(self.basis.names(), self.coordinates)
            if not field.is_zero(c)
        }


@dataclass(frozen=True)
class MembershipResult:
    """成员判定：成员时给出证书，否则给出商空间中的余项。"""

    member: bool
    certificate: Optional[CofactorCertificate] = None
    residue: Dict[str, str] = field(default_factory=dict)

    def to_dict(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {"member": self.member}
        if self.certificate is not None:
            data["certificate"] = self.certificate.to_dict()
        else:
            data["residue"] = self.residue
        return data


@dataclass(frozen=True)
class SmoothnessResult:
    """光滑性判定。

    Attributes:
        smooth: 是否光滑（Q(s) 上指一般纤维）
        method: ``direct``、``specialization`` 或 ``generic``
        witness: 奇点（找到时）
        top_quotient_dim: 顶次商空间维数
    """

    smooth: bool
    method: str
    witness: Optional[Tuple[Any, ...]] = None
    top_quotient_dim: int = 0

    def __bool__(self) -> bool:
        return self.smooth

    def to_dict(self) -> Dict[str, Any]:
        return {
            "smooth": self.smooth,
            "method": self.method,
            "witness": None if self.witness is None else [str(c) for c in self.witness],
            "top_quotient_dim": self.top_quotient_dim,
        }


# ============ 单一次数的约化器 ============


class GradedReducer:
    """次数 m 的余因子线性系统。

    Attributes:
        degree: 次数 m
        monomials: 次数 m 的单项式（行）
        columns: 余因子未知量 (i, ν)
        echelon: 余因子列上的消元
        basis: 商空间的单项式基
    """

    def __init__(self, ring: "JacobianRing", degree: int) -> None:
        self.ring = ring
        self.degree = degree
        n = ring.nvars
        self.monomials: List[Exponent] = monomials_of_degree(degree, n)
        self._index = {mu: r for r, mu in enumerate(self.monomials)}
        cof_degree = degree - (ring.degree - 1)
        self.columns = [(i, nu) for i in range(n) for nu in monomials_of_degree(cof_degree, n)]
        rows: List[Dict[Any, Any]] = [{} for _ in self.monomials]
        for i, nu in self.columns:
            for e, c in ring.partials[i].terms.items():
                mu = tuple(a + b for a, b in zip(e, nu))
                rows[self._index[mu]][(i, nu)] = c
        self.echelon = RowEchelon(ring.field, rows, self.columns)
        self._coordinate_solvers: Dict[Tuple[Exponent, ...], RowEchelon] = {}
        self.basis = self._select_basis()
        logger.debug(
            f"reducer degree {degree}: {len(self.monomials)} monomials, "
            f"{len(self.columns)} unknowns, quotient dim {self.quotient_dim}"
        )

    @property
    def quotient_dim(self) -> int:
        return self.echelon.n_rows - self.echelon.rank

    def _vector(self, poly: MultiPoly) -> List[Any]:
        zero = self.ring.field.zero
        v = [zero] * len(self.monomials)
        for e, c in poly.terms.items():
            if e not in self._index:
                raise PolynomialError(
                    f"term of degree {sum(e)} in a degree-{self.degree} reduction",
                    {"polynomial": str(poly)},
                )
            v[self._index[e]] = c
        return v

    def residual(self, poly: MultiPoly) -> List[Any]:
        return self.echelon.residual_vector(self._vector(poly))

    def _unit_residual(self, mu: Exponent) -> List[Any]:
        field = self.ring.field
        v = [field.zero] * len(self.monomials)
        v[self._index[mu]] = field.one
        return self.echelon.residual_vector(v)

    def _solver_for(self, monomials: Sequence[Exponent]) -> RowEchelon:
        key = tuple(monomials)
        if key not in self._coordinate_solvers:
            residuals = [self._unit_residual(mu) for mu in key]
            rows = [
                {mu: residuals[k][j] for k, mu in enumerate(key)}
                for j in range(self.quotient_dim)
            ]
            self._coordinate_solvers[key] = RowEchelon(self.ring.field, rows, key)
        return self._coordinate_solvers[key]

    def _select_basis(self) -> GradedQuotientBasis:
        n, m = self.ring.nvars, self.degree
        vars = self.ring.vars
        if self.quotient_dim == 0:
            return GradedQuotientBasis(m, (), False, vars)
        pure = list(dict.fromkeys(tuple(m if j == i else 0 for j in range(n)) for i in range(n)))
        candidates = pure + [mu for mu in self.monomials if mu not in pure]
        solver = self._solver_for(candidates)
        chosen = tuple(mu for mu in candidates if mu in solver.pivots)
        fallback = any(mu not in pure for mu in chosen)
        if fallback:
            logger.debug(f"degree {m}: pure powers do not span the quotient, using echelon basis")
        return GradedQuotientBasis(m, chosen, fallback, vars)

    def coordinates(self, poly: MultiPoly, basis: Optional[GradedQuotientBasis] = None) -> List[Any]:
        """poly 的余项在基上的坐标。

        Raises:
            PolynomialError: 给定的单项式组不张成商空间
        """
        basis = basis or self.basis
        field = self.ring.field
        if not basis.monomials:
            return []
        solver = self._solver_for(basis.monomials)
        if solver.rank != self.quotient_dim or len(basis.monomials) != self.quotient_dim:
            raise PolynomialError(
                f"monomials {basis.names()} are not a basis in degree {self.degree}",
                {"quotient_dim": self.quotient_dim},
            )
        solution, _ = solver.solve(self.residual(poly))
        return [solution.get(mu, field.zero) for mu in basis.monomials]

    def cofactors(self, poly: MultiPoly) -> Optional[Tuple[MultiPoly, ...]]:
        """poly ∈ J_m 时返回余因子，否则返回 None。"""
        ring = self.ring
        solution, residual = self.echelon.solve(self._vector(poly))
        if residual:
            return None
        terms: List[Dict[Exponent, Any]] = [{} for _ in range(ring.nvars)]
        for (i, nu), value in solution.items():
            terms[i][nu] = value
        return tuple(MultiPoly._raw(ring.field, t, ring.vars) for t in terms)


# ============ Jacobian 环 ============


class JacobianRing:
    """齐次多项式 F 的 Jacobian 环。

    Attributes:
        curve: 曲线 F
        field: 系数域
        degree: F 的次数 d
        partials: 偏导数
        top_degree: 光滑时商空间消失的最低次数 (n+1)(d−2)+1

    Examples:
        >>> ring = JacobianRing(parse_polynomial("X^4 + Y^4 + Z^4", QQ_FIELD))
        >>> [ring.quotient_dim(m) for m in range(8)]
        [1, 3, 6, 7, 6, 3, 1, 0]
    """

    def __init__(self, curve: MultiPoly) -> None:
        if curve.is_zero() or not curve.is_homogeneous():
            raise PolynomialError("curve must be a nonzero homogeneous polynomial", {"curve": str(curve)})
        if curve.total_degree < 2:
            raise PolynomialError("curve degree must be at least 2", {"curve": str(curve)})
        self.curve = curve
        self.field: Field = curve.field
        self.vars = curve.vars
        self.nvars = curve.nvars
        self.degree = curve.total_degree
        self.partials = curve.gradient()
        self.top_degree = self.nvars * (self.degree - 2) + 1
        self._reducers: Dict[int, GradedReducer] = {}
        self._top_certificates: Dict[Exponent, Tuple[MultiPoly, ...]] = {}
        self._smoothness: Optional[SmoothnessResult] = None

    def reducer(self, degree: int) -> GradedReducer:
        if degree not in self._reducers:
            self._reducers[degree] = GradedReducer(self, degree)
        return self._reducers[degree]

    def quotient_dim(self, degree: int) -> int:
        return self.reducer(degree).quotient_dim

    def hilbert_function(self, up_to: int) -> List[int]:
        return [self.quotient_dim(m) for m in range(up_to + 1)]

    def is_artinian(self) -> bool:
        """顶次商空间是否为零（等价于 F 光滑）。"""
        return self.quotient_dim(self.top_degree) == 0

    # ============ 光滑性 ============

    def smoothness(self, candidates: Optional[Iterable[Sequence[Any]]] = None) -> SmoothnessResult:
        if self._smoothness is not None and candidates is None:
            return self._smoothness
        result = self._decide_smoothness(candidates)
        if candidates is None:
            self._smoothness = result
        return result

    def _decide_smoothness(self, candidates: Optional[Iterable[Sequence[Any]]]) -> SmoothnessResult:
        if isinstance(self.field, RationalFunctionField):
            for value in _SPECIALIZATION_VALUES:
                try:
                    special = specialize(self.curve, value, self.field.base)
                except FieldError:
                    continue
                if special.total_degree != self.degree or not special.is_homogeneous():
                    continue
                if JacobianRing(special).is_artinian():
                    logger.info(f"generic fiber smooth: fiber at {self.field.var} = {value} is smooth")
                    return SmoothnessResult(True, "specialization")
            top = self.quotient_dim(self.top_degree)
            return SmoothnessResult(top == 0, "generic", None, top)

        top = self.quotient_dim(self.top_degree)
        if top == 0:
            return SmoothnessResult(True, "direct")
        witness = self.find_singular_point(candidates)
        logger.info(f"curve is singular, quotient dim {top} in degree {self.top_degree}")
        return SmoothnessResult(False, "direct", witness, top)

    def find_singular_point(
        self, candidates: Optional[Iterable[Sequence[Any]]] = None, bound: int = 3
    ) -> Optional[Tuple[Any, ...]]:
        """在给定候选点或小整数坐标点中寻找偏导数的公共零点。"""
        points: Iterable[Sequence[Any]]
        if candidates is not None:
            points = candidates
        else:
            points = _small_projective_points(self.nvars, bound)
        for point in points:
            if all(not p.evaluate(point) for p in self.partials):
                return tuple(point)
        return None

    def require_smooth(self) -> None:
        result = self.smoothness()
        if not result.smooth:
            witness = None if result.witness is None else "(" + " : ".join(map(str, result.witness)) + ")"
            raise SingularCurveError(f"curve {self.curve} is singular", witness)

    # ============ 成员判定与约化 ============

    def _check_homogeneous(self, poly: MultiPoly) -> int:
        if poly.vars != self.vars:
            raise PolynomialError("variable lists differ", {"poly": list(poly.vars), "curve": list(self.vars)})
        if not poly.is_homogeneous():
            raise PolynomialError("polynomial must be homogeneous", {"polynomial": str(poly)})
        return poly.total_degree

    def _zero_cofactors(self) -> Tuple[MultiPoly, ...]:
        return tuple(MultiPoly.zero(self.field, self.vars) for _ in range(self.nvars))

    def _top_cofactors(self, mu: Exponent) -> Tuple[MultiPoly, ...]:
        if mu not in self._top_certificates:
            unit = MultiPoly.monomial(self.field, mu, 1, self.vars)
            cof = self.reducer(self.top_degree).cofactors(unit)
            if cof is None:
                raise CertificateError(f"top-degree monomial {mu} is not in the Jacobian ideal")
            self._top_certificates[mu] = cof
        return self._top_certificates[mu]

    def _split_cofactors(self, poly: MultiPoly) -> Tuple[MultiPoly, ...]:
        """超过顶次时逐项拆分：μ = μ_top·ρ。"""
        acc: List[Dict[Exponent, Any]] = [{} for _ in range(self.nvars)]
        top = self.top_degree
        for e, c in poly.terms.items():
            head, need = [], top
            for k in e:
                take = min(k, need)
                head.append(take)
                need -= take
            head_t = tuple(head)
            rest = tuple(a - b for a, b in zip(e, head_t))
            for i, g in enumerate(self._top_cofactors(head_t)):
                target = acc[i]
                for ge, gc in g.terms.items():
                    key = tuple(a + b for a, b in zip(ge, rest))
                    target[key] = target[key] + gc * c if key in target else gc * c
        return tuple(MultiPoly(self.field, t, self.vars) for t in acc)

    def membership(self, poly: MultiPoly) -> MembershipResult:
        """判定 poly ∈ J(F)，成员时给出已验证的证书。"""
        if poly.is_zero():
            return MembershipResult(True, CofactorCertificate(poly, self._zero_cofactors(), self.curve))
        m = self._check_homogeneous(poly)
        if m > self.top_degree and self.is_artinian():
            cof: Optional[Tuple[MultiPoly, ...]] = self._split_cofactors(poly)
        else:
            cof = self.reducer(m).cofactors(poly)
        if cof is None:
            reducer = self.reducer(m)
            coords = reducer.coordinates(poly)
            residue = {
                name: self.field.to_str(c)
                for name, c in zip(reducer.basis.names(), coords)
                if not self.field.is_zero(c)
            }
            return MembershipResult(False, None, residue)
        return MembershipResult(True, CofactorCertificate(poly, cof, self.curve).check())

    def require_member(self, poly: MultiPoly) -> CofactorCertificate:
        """
        返回成员证书

        Raises:
            NotInJacobianIdealError: poly 不在 J(F) 中，携带余项
        """
        result = self.membership(poly)
        if not result.member or result.certificate is None:
            raise NotInJacobianIdealError(
                f"polynomial of degree {poly.total_degree} is not in the Jacobian ideal", result.residue
            )
        return result.certificate

    def basis(self, degree: int) -> GradedQuotientBasis:
        self.require_smooth()
        return self.reducer(degree).basis

    def reduce(self, poly: MultiPoly, basis: Optional[GradedQuotientBasis] = None) -> Reduction:
        """
        把 poly 分解为基部分与理想部分

        Args:
            poly: 齐次多项式
            basis: 商空间基（缺省为本环在该次数的基）

        Returns:
            Reduction，证书针对 poly − 基部分

        Raises:
            PolynomialError: 次数与基不符
            SingularCurveError: 曲线奇异
        """
        m = self._check_homogeneous(poly) if not poly.is_zero() else (basis.degree if basis else 0)
        basis = basis or self.basis(m)
        if basis.degree != m:
            raise PolynomialError(
                f"degree {m} polynomial reduced in a degree {basis.degree} basis",
                {"polynomial": str(poly)},
            )
        self.require_smooth()
        if basis.monomials:
            coords = self.reducer(m).coordinates(poly, basis)
        else:
            coords = []
        basis_part = MultiPoly.zero(self.field, self.vars)
        for c, e in zip(coords, basis.monomials):
            basis_part = basis_part + MultiPoly.monomial(self.field, e, c, self.vars)
        certificate = self.require_member(poly - basis_part)
        return Reduction(tuple(coords), basis, certificate)


def _small_projective_points(nvars: int, bound: int) -> Iterable[Tuple[Any, ...]]:
    """首个非零坐标为 1 的小整数点。"""
    values = range(-bound, bound + 1)
    for point in product(values, repeat=nvars):
        nonzero = [c for c in point if c]
        if nonzero and nonzero[0] == 1:
            yield tuple(QQ_FIELD.convert(c) for c in point)


# ============ 模块级操作 ============

_ring_cache: Optional[LRUCache[JacobianRing]] = None


def get_ring(curve: MultiPoly) -> JacobianRing:
    """取得（缓存的）Jacobian 环。"""
    global _ring_cache
    if _ring_cache is None:
        _ring_cache = LRUCache(max_size=get_settings().REDUCER_CACHE_SIZE, name="jacobian-rings")
    return _ring_cache.get_or_create((curve.field, curve), lambda: JacobianRing(curve))


def graded_membership(poly: MultiPoly, curve: MultiPoly) -> MembershipResult:
    return get_ring(curve).membership(poly)


def quotient_basis(curve: MultiPoly, degree: int) -> GradedQuotientBasis:
    """
    商空间 (R/J(F))_m 的单项式基

    Raises:
        SingularCurveError: F 奇异
    """
    return get_ring(curve).basis(degree)


def reduce_mod_jacobian(
    poly: MultiPoly, curve: MultiPoly, basis: Optional[GradedQuotientBasis] = None
) -> Reduction:
    return get_ring(curve).reduce(poly, basis)


def is_smooth(curve: MultiPoly, candidates: Optional[Iterable[Sequence[Any]]] = None) -> SmoothnessResult:
    """
    光滑性判定

    Args:
        curve: 齐次多项式，次数至少为 2
        candidates: 额外的奇点候选（例如已知的结点）

    Returns:
        SmoothnessResult；奇异时尽量给出见证点
    """
    return get_ring(curve).smoothness(candidates)
