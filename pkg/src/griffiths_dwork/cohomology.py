"""平面曲线补集上的上同调类、Gauss-Manin 导数与降阶。

类 P·Ω0/F^k 由分子 P 与极点阶 k 表示，Ω0 是固定的 Euler 形式。
分子属于 Jacobian 理想 P = Σ G_i·∂F/∂x_i 时，
P·Ω0/F^k ≡ (1/(k−1))·(Σ ∂G_i/∂x_i)·Ω0/F^{k−1}。
反复"基部分 + 理想部分"分解后得到唯一的规范形坐标。

Author: QuarticPF Team
Created: 2026-03-06
"""

from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Tuple

from src.fields.base import Field
from src.jacobian.certificate import CofactorCertificate
from src.jacobian.ring import GradedQuotientBasis, JacobianRing, get_ring
from src.polyring.multipoly import MultiPoly
from src.utils.errors import DegreeBookkeepingError, PolynomialError
from src.utils.logger import get_logger

logger = get_logger(__name__)


# ============ 上同调类 ============


@dataclass(frozen=True)
class CohomClass:
    """P·Ω0/F^k。

    Attributes:
        family: 曲线族 F（系数可以含参数）
        numerator: 分子 P，零或 k·d − n 次齐次
        pole_order: 极点阶 k ≥ 1

    Raises:
        DegreeBookkeepingError: 分子次数不等于 k·d − n
    """

    family: MultiPoly
    numerator: MultiPoly
    pole_order: int = 1

    def __post_init__(self) -> None:
        if self.pole_order < 1:
            raise DegreeBookkeepingError(f"pole order must be at least 1, got {self.pole_order}")
        if self.numerator.is_zero():
            return
        expected = self.expected_degree(self.pole_order)
        if not self.numerator.is_homogeneous() or self.numerator.total_degree != expected:
            raise DegreeBookkeepingError(
                f"numerator of a pole-order {self.pole_order} class must have degree {expected}",
                {
                    "numerator": str(self.numerator),
                    "degree": self.numerator.total_degree,
                    "expected": expected,
                },
            )

    def expected_degree(self, k: int) -> int:
        return k * self.family.total_degree - self.family.nvars

    @property
    def field(self) -> Field:
        return self.family.field

    def is_zero(self) -> bool:
        return self.numerator.is_zero()

    def __add__(self, other: "CohomClass") -> "CohomClass":
        if other.pole_order != self.pole_order:
            raise DegreeBookkeepingError("classes of different pole order cannot be added directly")
        return CohomClass(self.family, self.numerator + other.numerator, self.pole_order)

    def scale(self, c: Any) -> "CohomClass":
        return CohomClass(self.family, self.numerator.scale(c), self.pole_order)

    def __str__(self) -> str:
        return f"({self.numerator})*Omega/F^{self.pole_order}"

    def to_dict(self) -> Dict[str, Any]:
        return {"numerator": str(self.numerator), "pole_order": self.pole_order}


def gauss_manin_derivative(omega: CohomClass) -> CohomClass:
    """
    参数方向的 Gauss-Manin 导数

    D(P·Ω0/F^k) = (−k·P·F′ + F·P′)·Ω0/F^{k+1}，撇号是对参数求导。
    """
    k = omega.pole_order
    f, p = omega.family, omega.numerator
    kk = omega.field.convert(k)
    numerator = f * p.parameter_derivative() - (p * f.parameter_derivative()).scale(kk)
    return CohomClass(f, numerator, k + 1)


def reduce_pole_order(
    omega: CohomClass, ring: Optional[JacobianRing] = None
) -> Tuple[CohomClass, CofactorCertificate]:
    """
    用 Jacobian 理想中的分子把极点阶降低 1

    Args:
        omega: 极点阶 k ≥ 2，分子属于 J(F)
        ring: 复用的 Jacobian 环

    Returns:
        (降阶后的类, 证书)

    Raises:
        PolynomialError: k = 1
        NotInJacobianIdealError: 分子不在 J(F) 中，携带余项
    """
    k = omega.pole_order
    if k < 2:
        raise PolynomialError("pole order 1 classes cannot be reduced further")
    ring = ring or get_ring(omega.family)
    certificate = ring.require_member(omega.numerator)
    numerator = certificate.divergence() / (k - 1)
    return CohomClass(omega.family, numerator, k - 1), certificate


# ============ 规范形 ============


@dataclass(frozen=True)
class NormalFormBlock:
    pole_order: int
    basis: GradedQuotientBasis
    coordinates: Tuple[Any, ...]


@dataclass(frozen=True)
class NormalForm:
    """类在基 {b·Ω0/F^k} 上的坐标，极点阶小的块在前。

    Attributes:
        blocks: 每个极点阶的基与坐标
        certificates: 约化中用到的证书（按使用顺序）
    """

    blocks: Tuple[NormalFormBlock, ...]
    field: Field
    certificates: Tuple[CofactorCertificate, ...] = ()

    @property
    def coordinates(self) -> Tuple[Any, ...]:
        return tuple(c for block in self.blocks for c in block.coordinates)

    @property
    def dimension(self) -> int:
        return len(self.coordinates)

    def block(self, pole_order: int) -> Tuple[Any, ...]:
        for b in self.blocks:
            if b.pole_order == pole_order:
                return b.coordinates
        raise KeyError(pole_order)

    def labels(self) -> List[str]:
        return [f"{name}/F^{b.pole_order}" for b in self.blocks for name in b.basis.names()]

    def is_zero(self) -> bool:
        return all(self.field.is_zero(c) for c in self.coordinates)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "basis": self.labels(),
            "coordinates": [self.field.to_str(c) for c in self.coordinates],
        }


def block_orders(ring: JacobianRing) -> List[int]:
    """商空间非零的极点阶：k·d − n 小于顶次的全部 k ≥ 1。"""
    orders = []
    k = 1
    while k * ring.degree - ring.nvars < ring.top_degree:
        if k * ring.degree - ring.nvars >= 0:
            orders.append(k)
        k += 1
    return orders


def normal_form(omega: CohomClass, ring: Optional[JacobianRing] = None) -> NormalForm:
    """
    计算类的规范形坐标

    先把超过最高块的极点阶整体降下（那些次数的商空间为零），
    再逐块取出基坐标，余下的理想部分降阶进入下一块。

    Args:
        omega: 上同调类
        ring: 复用的 Jacobian 环

    Returns:
        NormalForm，坐标对类是线性的

    Raises:
        SingularCurveError: 一般纤维奇异
    """
    ring = ring or get_ring(omega.family)
    ring.require_smooth()
    orders = block_orders(ring)
    top_block = orders[-1]
    certificates: List[CofactorCertificate] = []

    current = omega
    while current.pole_order > top_block:
        current, cert = reduce_pole_order(current, ring)
        certificates.append(cert)

    blocks: Dict[int, NormalFormBlock] = {}
    numerator = current.numerator
    for k in range(current.pole_order, 0, -1):
        basis = ring.basis(k * ring.degree - ring.nvars)
        reduction = ring.reduce(numerator, basis)
        blocks[k] = NormalFormBlock(k, basis, reduction.coordinates)
        certificates.append(reduction.certificate)
        if k > 1:
            numerator = reduction.certificate.divergence() / (k - 1)

    ordered = tuple(blocks.get(k) or _zero_block(ring, k) for k in orders)
    logger.debug(f"normal form of a pole-order {omega.pole_order} class: {len(certificates)} certificate(s)")
    return NormalForm(ordered, ring.field, tuple(certificates))


def _zero_block(ring: JacobianRing, k: int) -> NormalFormBlock:
    basis = ring.basis(k * ring.degree - ring.nvars)
    return NormalFormBlock(k, basis, (ring.field.zero,) * basis.dimension)


def basis_classes(family: MultiPoly, ring: Optional[JacobianRing] = None) -> List[CohomClass]:
    """规范形坐标对应的基类，顺序与 NormalForm.coordinates 一致。"""
    ring = ring or get_ring(family)
    out = []
    for k in block_orders(ring):
        for e in ring.basis(k * ring.degree - ring.nvars).monomials:
            out.append(CohomClass(family, MultiPoly.monomial(family.field, e, 1, family.vars), k))
    return out


# ============ Gauss-Manin 联络 ============


@dataclass(frozen=True)
class ConnectionMatrix:
    """D 在规范形基上的矩阵：nf(D ω) = v′ + M·v。

    Attributes:
        matrix: 行主序，matrix[i][j] 是 nf(D b_j) 的第 i 个坐标
        certificates: 每列规范形的证书
    """

    matrix: Tuple[Tuple[Any, ...], ...]
    field: Field
    labels: Tuple[str, ...]
    certificates: Tuple[CofactorCertificate, ...] = ()

    @property
    def dimension(self) -> int:
        return len(self.matrix)

    def apply(self, v: Tuple[Any, ...]) -> Tuple[Any, ...]:
        """v ↦ v′ + M·v。"""
        f = self.field
        out = []
        for i, row in enumerate(self.matrix):
            acc = f.derivative(v[i])
            for m, x in zip(row, v):
                if not f.is_zero(m) and not f.is_zero(x):
                    acc = acc + m * x
            out.append(acc)
        return tuple(out)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "basis": list(self.labels),
            "matrix": [[self.field.to_str(c) for c in row] for row in self.matrix],
        }


def connection_matrix(family: MultiPoly, ring: Optional[JacobianRing] = None) -> ConnectionMatrix:
    """
    Gauss-Manin 联络矩阵

    第 j 列是 nf(D b_j)。

    Raises:
        SingularCurveError: 一般纤维奇异
    """
    ring = ring or get_ring(family)
    basis = basis_classes(family, ring)
    columns: List[Tuple[Any, ...]] = []
    certificates: List[CofactorCertificate] = []
    for b in basis:
        nf = normal_form(gauss_manin_derivative(b), ring)
        columns.append(nf.coordinates)
        certificates.extend(nf.certificates)
    n = len(basis)
    labels = normal_form(basis[0], ring).labels() if basis else []
    matrix = tuple(tuple(columns[j][i] for j in range(n)) for i in range(n))
    logger.info(f"connection matrix of size {n} computed for {family}")
    return ConnectionMatrix(matrix, ring.field, tuple(labels), tuple(certificates))
