"""Picard-Fuchs 方程的推导。

对截面 ω0 反复作用 Gauss-Manin 导数，规范形向量 v_j = nf(D^j ω0)
由联络矩阵递推 v_{j+1} = v_j′ + M·v_j。在参数的有理函数域上清分母、
无分式消元求秩，第一个线性相关的列给出首一关系
D^r ω0 + a_{r−1}·D^{r−1} ω0 + … + a_0·ω0 = 0。

Author: QuarticPF Team
Created: 2026-03-06
"""

from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Sequence, Tuple

from src.fields.base import Field
from src.fields.linalg import fraction_free_gauss_jordan
from src.fields.ratfun import RationalFunction, RationalFunctionField
from src.fields.unipoly import UniPoly
from src.fuchsian.ode import LinearODE
from src.griffiths_dwork.cohomology import (
    CohomClass,
    ConnectionMatrix,
    connection_matrix,
    normal_form,
)
from src.jacobian.certificate import CofactorCertificate
from src.jacobian.ring import get_ring
from src.polyring.multipoly import MultiPoly
from src.polyring.parser import parse_polynomial, parse_scalar
from src.utils.cache import LRUCache
from src.utils.config import get_settings
from src.utils.errors import CertificateError, NoRelationError, PolynomialError
from src.utils.logger import get_logger

logger = get_logger(__name__)

DEFAULT_PARAMETER = "s"

_connection_cache: Optional[LRUCache[ConnectionMatrix]] = None


def parameter_field(field: Field) -> RationalFunctionField:
    """ODE 系数所在的域：族本身的参数域，常数族时补一个形式参数。"""
    if isinstance(field, RationalFunctionField):
        return field
    return RationalFunctionField(field, DEFAULT_PARAMETER)


def get_connection(family: MultiPoly) -> ConnectionMatrix:
    """取得（缓存的）联络矩阵。"""
    global _connection_cache
    if _connection_cache is None:
        _connection_cache = LRUCache(max_size=get_settings().REDUCER_CACHE_SIZE, name="connections")
    return _connection_cache.get_or_create(
        (family.field, family), lambda: connection_matrix(family, get_ring(family))
    )


# ============ 结果 ============


@dataclass(frozen=True)
class PicardFuchsResult:
    """Picard-Fuchs 方程与其证据。

    Attributes:
        ode: 首一方程，阶数最小
        family: 曲线族
        section: 截面 ω0
        rank_profile: rank_profile[j] 是 {ω0, …, D^j ω0} 的秩
        normal_forms: v_0, …, v_r（参数域元素）
        certificates: ω0 的规范形证书与联络矩阵各列的证书
        labels: 规范形坐标的基
    """

    ode: LinearODE
    family: MultiPoly
    section: CohomClass
    rank_profile: Tuple[int, ...]
    normal_forms: Tuple[Tuple[Any, ...], ...]
    certificates: Tuple[CofactorCertificate, ...]
    labels: Tuple[str, ...] = ()

    @property
    def order(self) -> int:
        return self.ode.order

    def relation_holds(self) -> bool:
        """Σ a_j·v_j + v_r = 0 是否精确成立。"""
        field = self.ode.field
        r = self.order
        for i in range(len(self.normal_forms[0])):
            total = field.convert(self.normal_forms[r][i])
            for j in range(r):
                total = total + self.ode.coefficient(j) * self.normal_forms[j][i]
            if not total.is_zero():
                return False
        return True

    def verify(self) -> bool:
        """重新展开全部证书并检验关系。"""
        return all(c.verify() for c in self.certificates) and self.relation_holds()

    def to_dict(self) -> Dict[str, Any]:
        field = self.ode.field
        return {
            "family": str(self.family),
            "parameter": self.ode.var,
            "section": self.section.to_dict(),
            "order": self.order,
            "coefficients": [str(a) for a in self.ode.coefficients],
            "ode": self.ode.to_dict(),
            "rank_profile": list(self.rank_profile),
            "basis": list(self.labels),
            "normal_forms": [[field.to_str(field.convert(c)) for c in v] for v in self.normal_forms],
            "certificates": [c.to_dict() for c in self.certificates],
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any], field: Field) -> "PicardFuchsResult":
        """
        从 JSON 字典载入并重新验证

        Args:
            data: to_dict 的输出
            field: 族的系数域

        Raises:
            CertificateError: 证书或关系不成立
            ParseError: 文本无法解析
        """
        family = parse_polynomial(data["family"], field)
        section_data = data["section"]
        numerator = parse_polynomial(section_data["numerator"], field)
        section = CohomClass(family, numerator, section_data["pole_order"])
        k_field = parameter_field(field)
        ode = LinearODE.from_dict(data["ode"], k_field.base)
        normal_forms = tuple(tuple(parse_scalar(c, k_field) for c in v) for v in data["normal_forms"])
        certificates = tuple(CofactorCertificate.from_dict(c, field) for c in data["certificates"])
        result = cls(
            ode,
            family,
            section,
            tuple(data["rank_profile"]),
            normal_forms,
            certificates,
            tuple(data.get("basis", ())),
        )
        if not result.relation_holds():
            raise CertificateError("stored normal forms do not satisfy the stored equation")
        return result


# ============ 推导 ============


def _clear_denominators(vector: Sequence[RationalFunction]) -> Tuple[List[UniPoly], RationalFunction]:
    """返回 (λ·v 的多项式分量, λ)，λ 是分母的 lcm。"""
    field = vector[0].field
    lam = UniPoly.one(field.base, field.var)
    for x in vector:
        if not x.is_zero():
            lam = lam.lcm(x.den)
    lam_f = field.from_polys(lam)
    return [(x * lam_f).num for x in vector], lam_f


def derivative_normal_forms(
    omega: CohomClass, count: int, connection: Optional[ConnectionMatrix] = None
) -> Tuple[List[Tuple[Any, ...]], List[CofactorCertificate]]:
    """nf(ω), nf(Dω), …, nf(D^{count−1} ω) 以及 nf(ω) 的证书。"""
    ring = get_ring(omega.family)
    nf = normal_form(omega, ring)
    connection = connection or get_connection(omega.family)
    vectors = [nf.coordinates]
    while len(vectors) < count:
        vectors.append(connection.apply(vectors[-1]))
    return vectors, list(nf.certificates)


def picard_fuchs(
    family: MultiPoly, section: Any, max_order: Optional[int] = None
) -> PicardFuchsResult:
    """
    推导截面的 Picard-Fuchs 方程

    Args:
        family: 一般纤维光滑的曲线族
        section: CohomClass，或极点阶 1 的分子多项式
        max_order: 最大阶数，缺省取配置 MAX_ORDER

    Returns:
        PicardFuchsResult，阶数最小，关系已精确验证

    Raises:
        SingularCurveError: 一般纤维奇异
        PolynomialError: 截面的规范形为零
        NoRelationError: max_order 以内没有关系，携带秩序列

    Examples:
        >>> str(picard_fuchs(F_spar, X).ode.coefficients[1])
        '9*s^8/(s^9 - 1)'
    """
    omega = section if isinstance(section, CohomClass) else CohomClass(family, section, 1)
    limit = max_order or get_settings().MAX_ORDER
    k_field = parameter_field(family.field)
    connection = get_connection(family)
    vectors, certificates = derivative_normal_forms(omega, 1, connection)
    if all(family.field.is_zero(c) for c in vectors[0]):
        raise PolynomialError("section is zero in cohomology", {"section": str(omega)})

    columns: List[List[UniPoly]] = []
    scales: List[RationalFunction] = []
    profile: List[int] = []
    for j in range(limit + 1):
        if j > 0:
            vectors.append(connection.apply(vectors[-1]))
        lifted = [k_field.convert(c) for c in vectors[j]]
        column, lam = _clear_denominators(lifted)
        columns.append(column)
        scales.append(lam)
        rows = [[col[i] for col in columns] for i in range(len(column))]
        elimination = fraction_free_gauss_jordan(rows)
        profile = elimination.rank_profile
        logger.debug(f"rank after D^{j}: {elimination.rank}")
        if elimination.rank == j + 1:
            continue
        kernel = elimination.kernel_vector(j)
        lead = k_field.from_polys(kernel[j]) * scales[j]
        coefficients = [k_field.from_polys(kernel[i]) * scales[i] / lead for i in range(j)]
        ode = LinearODE(k_field, coefficients)
        result = PicardFuchsResult(
            ode,
            family,
            omega,
            tuple(profile),
            tuple(tuple(k_field.convert(c) for c in v) for v in vectors),
            tuple(certificates) + connection.certificates,
            connection.labels,
        )
        if not result.relation_holds():
            raise CertificateError("derived relation does not annihilate the normal forms")
        logger.info(f"Picard-Fuchs equation of order {j} found for section {omega.numerator}")
        return result
    raise NoRelationError(f"no relation up to order {limit}", profile)
