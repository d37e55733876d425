"""两个尖点纤维上的稳定微分与其 Galois 共轭。

稳定微分在每个有理分支上写成 Σ res_p/(z − p)·dz。共轭只作用在留数上，
极点位置（结点的原像）不动，因此三个共轭微分有公共分母，把分子代入
尖点四次型即可判断关系是否恒为零。

可约尖点 (t = ∞)：分支 T 上 z = ±1 粘成结点 A，T 与 U 在 B、C、D 相交。
不可约尖点 (t = 1)：一条有理曲线，x_i 与 ζ3·x_i 粘成三个结点。

Author: QuarticPF Team
Created: 2026-03-10
"""

from dataclasses import dataclass
from functools import lru_cache
from typing import Any, Dict, List, Sequence, Tuple

from src.fields.cyclotomic import cyclotomic_field, embed_trace_field, galois_conjugates, trace_field, zeta3
from src.fields.number_field import NFElem, NumberField
from src.fields.ratfun import RationalFunction, RationalFunctionField
from src.fields.unipoly import UniPoly
from src.geometry.intersection import verify_singular
from src.geometry.projective import ProjPoint, is_zero_value
from src.kenyon_smillie.reports import CheckReport
from src.kenyon_smillie.resources import load_polynomial
from src.polyring.multipoly import MultiPoly
from src.polyring.parser import parse_scalar
from src.utils.config import get_settings
from src.utils.errors import PolynomialError
from src.utils.logger import get_logger

logger = get_logger(__name__)

Z_VAR = "z"
REDUCIBLE = "reducible"
IRREDUCIBLE = "irreducible"
CUSPS = (REDUCIBLE, IRREDUCIBLE)

# ============ 数据（Q(v) 中的文本，v³ − 3v + 1 = 0） ============

REDUCIBLE_RESIDUES = ("-v^2 - v + 3", "1", "v^2 - 3", "-v^2 + 2")  # r_A, r_B, r_C, r_D
REDUCIBLE_SCALE = "v^2 + 2*v - 2"
NODE_TRIPLES: Dict[str, Tuple[str, str, str]] = {
    "primary": ("(-2*v^2 + 6*v + 5)/17", "(-6*v^2 - 8*v + 13)/17", "(8*v^2 + 2*v - 15)/17"),
    "alternative": ("(6*v^2 + 18*v - 21)/19", "(-18*v^2 - 12*v + 27)/19", "(12*v^2 - 6*v - 33)/19"),
}

IRREDUCIBLE_RESIDUES = ("-v^2 - v", "v + 1", "-2*v^2 - 3*v + 2")
IRREDUCIBLE_SCALE = "-v^2 + 2"
IRREDUCIBLE_POLES = ("1", "2 - v^2", "v^2 - 3")


def _value(text: str) -> NFElem:
    """Q(v) 文本 -> Q(ζ9) 元素。"""
    return embed_trace_field(parse_scalar(text, trace_field()))


# ============ 稳定微分 ============


@dataclass(frozen=True)
class StableDifferential:
    """有理分支上只有单极点的微分 Σ res_p/(z − p)·dz。

    Attributes:
        component: 分支名
        field: 系数域 Q(ζ9)
        poles: 极点（结点原像）
        residues: 对应留数
    """

    component: str
    field: NumberField
    poles: Tuple[Any, ...]
    residues: Tuple[Any, ...]

    def __post_init__(self) -> None:
        if len(self.poles) != len(self.residues):
            raise PolynomialError(
                f"{len(self.poles)} poles but {len(self.residues)} residues on {self.component}"
            )

    def _linear(self, p: Any) -> UniPoly:
        return UniPoly(self.field, [-p, self.field.one], Z_VAR)

    @property
    def denominator(self) -> UniPoly:
        out = UniPoly.one(self.field, Z_VAR)
        for p in self.poles:
            out = out * self._linear(p)
        return out

    @property
    def numerator(self) -> UniPoly:
        """Σ res_i·Π_{j≠i}(z − p_j)。"""
        total = UniPoly.zero(self.field, Z_VAR)
        for i, r in enumerate(self.residues):
            term = UniPoly.constant(self.field, r, Z_VAR)
            for j, p in enumerate(self.poles):
                if j != i:
                    term = term * self._linear(p)
            total = total + term
        return total

    def as_rational_function(self) -> RationalFunction:
        return RationalFunctionField(self.field, Z_VAR).from_polys(self.numerator, self.denominator)

    def residue_at(self, point: Any) -> Any:
        """从有理函数本身提取 z = point 处的留数 num(p)/den′(p)。

        Raises:
            PolynomialError: point 不是单极点
        """
        f = self.as_rational_function()
        den = f.den
        if not is_zero_value(den.evaluate(point)):
            return self.field.zero
        slope = den.derivative().evaluate(point)
        if is_zero_value(slope):
            raise PolynomialError(f"{point} is not a simple pole on {self.component}")
        return f.num.evaluate(point) / slope

    def zero_order_at(self, point: Any) -> int:
        """z = point 处的零点阶（point 不是极点）。"""
        shifted = self.numerator.compose(UniPoly(self.field, [point, self.field.one], Z_VAR))
        return shifted.valuation() if not shifted.is_zero() else -1

    def conjugates(self, convention: str) -> Tuple["StableDifferential", ...]:
        """三个 Galois 共轭：留数逐个共轭，极点不动。"""
        images = [galois_conjugates(r, convention) for r in self.residues]
        return tuple(
            StableDifferential(self.component, self.field, self.poles, tuple(img[i] for img in images))
            for i in range(3)
        )

    def to_dict(self) -> Dict[str, Any]:
        to_str = self.field.to_str
        return {
            "component": self.component,
            "poles": [to_str(p) for p in self.poles],
            "residues": [to_str(r) for r in self.residues],
        }


@dataclass(frozen=True)
class Node:
    """结点：两个分支上的原像 (分支名, z)。"""

    label: str
    first: Tuple[str, Any]
    second: Tuple[str, Any]


@dataclass(frozen=True)
class CuspData:
    """尖点纤维：四次型、各分支上的稳定微分与结点。

    Attributes:
        which: ``reducible`` 或 ``irreducible``
        quartic: Q 上的尖点四次型
        components: 各分支上的 ω
        nodes: 结点及其原像
        signs: 代入 (X, Y, Z) 时三个共轭前的符号
    """

    which: str
    quartic: MultiPoly
    components: Tuple[StableDifferential, ...]
    nodes: Tuple[Node, ...]
    signs: Tuple[int, int, int] = (1, 1, 1)

    def component(self, name: str) -> StableDifferential:
        for c in self.components:
            if c.component == name:
                return c
        raise PolynomialError(f"no component {name} on the {self.which} cusp")

    def canonical_images(self, convention: str) -> Tuple[UniPoly, ...]:
        """每个分支上 F(±ω⁽¹⁾, ω⁽²⁾, ω⁽³⁾) 的分子（公共分母已约去）。"""
        out = []
        for omega in self.components:
            numerators = [sign * c.numerator for sign, c in zip(self.signs, omega.conjugates(convention))]
            value = self.quartic.evaluate(numerators)
            if not isinstance(value, UniPoly):
                value = UniPoly.constant(omega.field, value, Z_VAR)
            out.append(value)
        return tuple(out)

    def node_image(self, node: Node, convention: str) -> ProjPoint:
        """结点的典范像 (±Res ω⁽¹⁾ : Res ω⁽²⁾ : Res ω⁽³⁾)。"""
        name, z = node.first
        residue = self.component(name).residue_at(z)
        field = self.components[0].field
        coords = [sign * r for sign, r in zip(self.signs, galois_conjugates(residue, convention))]
        return ProjPoint(field, tuple(coords))


@lru_cache(maxsize=None)
def reducible_cusp(triple: str = "primary") -> CuspData:
    """
    t = ∞ 的可约尖点：直线 U 与结点三次曲线 T 的并

    Args:
        triple: ``primary`` 或 ``alternative``（另一组满足三重零点条件的 B、C、D）

    Raises:
        PolynomialError: triple 未知
    """
    if triple not in NODE_TRIPLES:
        raise PolynomialError(f"unknown node triple: {triple}", {"allowed": sorted(NODE_TRIPLES)})
    k = cyclotomic_field()
    r_a, r_b, r_c, r_d = (_value(r) for r in REDUCIBLE_RESIDUES)
    mu = _value(REDUCIBLE_SCALE)
    b, c, d = (_value(x) for x in NODE_TRIPLES[triple])
    one = k.one
    t_branch = StableDifferential(
        "T", k, (one, -one, b, c, d), tuple(mu * r for r in (r_a, -r_a, r_b, r_c, r_d))
    )
    u_branch = StableDifferential("U", k, (k.zero, one, -one), tuple(mu * r for r in (-r_b, -r_c, -r_d)))
    nodes = (
        Node("A", ("T", one), ("T", -one)),
        Node("B", ("T", b), ("U", k.zero)),
        Node("C", ("T", c), ("U", one)),
        Node("D", ("T", d), ("U", -one)),
    )
    return CuspData(REDUCIBLE, load_polynomial("finf"), (t_branch, u_branch), nodes)


@lru_cache(maxsize=None)
def irreducible_cusp() -> CuspData:
    """t = 1 的不可约尖点：x_i 与 ζ3·x_i 粘合的有理曲线。"""
    k = cyclotomic_field()
    w = zeta3(k)
    mu = _value(IRREDUCIBLE_SCALE)
    xs = [_value(x) for x in IRREDUCIBLE_POLES]
    rs = [_value(r) for r in IRREDUCIBLE_RESIDUES]
    poles: List[Any] = []
    residues: List[Any] = []
    nodes = []
    for i, (x, r) in enumerate(zip(xs, rs), start=1):
        poles.extend([x, w * x])
        residues.extend([mu * r, -(mu * r)])
        nodes.append(Node(f"N{i}", ("P1", x), ("P1", w * x)))
    omega = StableDifferential("P1", k, tuple(poles), tuple(residues))
    return CuspData(IRREDUCIBLE, load_polynomial("f1"), (omega,), tuple(nodes), (-1, 1, 1))


def cusp_data(which: str) -> CuspData:
    if which == REDUCIBLE:
        return reducible_cusp()
    if which == IRREDUCIBLE:
        return irreducible_cusp()
    raise PolynomialError(f"unknown cusp: {which}", {"allowed": list(CUSPS)})


# ============ 检查 ============


def _residues_reproduced(cusp: CuspData) -> bool:
    return all(
        omega.residue_at(p) == r for omega in cusp.components for p, r in zip(omega.poles, omega.residues)
    )


def _antisymmetric(cusp: CuspData) -> Dict[str, bool]:
    out = {}
    for node in cusp.nodes:
        first = cusp.component(node.first[0]).residue_at(node.first[1])
        second = cusp.component(node.second[0]).residue_at(node.second[1])
        out[node.label] = not is_zero_value(first) and first == -second
    return out


def conjugate_zero_selection(convention: str) -> Dict[str, Dict[str, Any]]:
    """对两组 B、C、D 检验：ω⁽¹⁾|_T 在 z = 0 有三重零点，ω⁽²⁾|_T 在 z = 0 为零。"""
    out = {}
    for triple in sorted(NODE_TRIPLES):
        t_branch = reducible_cusp(triple).component("T")
        first, second, _ = t_branch.conjugates(convention)
        zero = t_branch.field.zero
        triple_zero = first.zero_order_at(zero)
        out[triple] = {
            "triple_zero": triple_zero == 3,
            "conjugate_zero": second.zero_order_at(zero) >= 1,
        }
        logger.debug(f"node triple {triple}: {out[triple]}")
    return out


def verify_cusp_relation(which: str, convention: str = "") -> CheckReport:
    """
    把三个共轭微分代入尖点四次型，检验在每个分支上恒为零

    同时检验留数可由有理函数重新提取、结点两侧留数互为相反数；
    可约尖点还检验 z = 0 处的三重零点，以及只有 primary 一组 B、C、D
    满足共轭微分在 z = 0 为零的选择条件。

    Args:
        which: ``reducible`` 或 ``irreducible``
        convention: Galois 约定，缺省取配置

    Returns:
        CheckReport
    """
    convention = convention or get_settings().CONVENTION
    cusp = cusp_data(which)
    values = cusp.canonical_images(convention)
    vanishing = {omega.component: v.is_zero() for omega, v in zip(cusp.components, values)}
    checks: Dict[str, Any] = {
        "vanishes": vanishing,
        "residues": _residues_reproduced(cusp),
        "antisymmetric": _antisymmetric(cusp),
    }
    passed = all(vanishing.values()) and checks["residues"] and all(checks["antisymmetric"].values())
    if which == REDUCIBLE:
        selection = conjugate_zero_selection(convention)
        survivors = sorted(t for t, c in selection.items() if c["triple_zero"] and c["conjugate_zero"])
        checks["selection"] = selection
        checks["survivors"] = survivors
        passed = passed and survivors == ["primary"]
    logger.info(f"{which} cusp relation ({convention}): {'pass' if passed else 'fail'}")
    return CheckReport(
        anchor=f"cusp-relation[{which}]",
        passed=passed,
        summary=f"F({'-' if cusp.signs[0] < 0 else ''}w1, w2, w3) vanishes on every component"
        if passed
        else "cusp relation fails",
        details={"convention": convention, "checks": checks, "quartic": str(cusp.quartic)},
    )


def verify_cusp_nodes(which: str, convention: str = "") -> CheckReport:
    """结点的典范像是尖点四次型的奇点。"""
    convention = convention or get_settings().CONVENTION
    cusp = cusp_data(which)
    images = {node.label: cusp.node_image(node, convention) for node in cusp.nodes}
    singular = {label: verify_singular(cusp.quartic, p) for label, p in images.items()}
    passed = all(singular.values())
    return CheckReport(
        anchor=f"cusp-nodes[{which}]",
        passed=passed,
        summary="node images are singular points of the cusp quartic" if passed else "a node image is smooth",
        details={"images": {k: str(p) for k, p in images.items()}, "singular": singular},
    )
