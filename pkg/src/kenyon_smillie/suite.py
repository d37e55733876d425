"""整套验证：按锚点注册的独立检查，并发执行，按锚点排序汇总。

Author: QuarticPF Team
Created: 2026-03-11
"""

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from math import factorial
from typing import Any, Callable, Dict, List, Optional, Sequence, Set

from src.fields.rational import QQ_FIELD, rational
from src.fuchsian.frobenius import frobenius_series, series_residual_order
from src.fuchsian.ode import LinearODE
from src.fuchsian.singularities import (
    INFINITY,
    Point,
    hypergeometric_parameters,
    is_hypergeometric,
    local_exponents,
    riemann_scheme,
)
from src.fuchsian.transforms import descend_monomial, pullback_monomial
from src.geometry.projective import is_zero_value
from src.griffiths_dwork.picard_fuchs import picard_fuchs
from src.jacobian.ring import is_smooth
from src.kenyon_smillie.cusps import CUSPS, verify_cusp_nodes, verify_cusp_relation
from src.kenyon_smillie.family import (
    S_FORM,
    T_FORM,
    family,
    symbolic_family,
    t_samples,
    verify_degree_table,
    verify_descent,
    verify_divisor_conditions,
    verify_reconstruction,
    verify_symmetry,
    verify_torsion,
)
from src.kenyon_smillie.orbifold import verify_orbifold_relation
from src.kenyon_smillie.reports import CheckReport, SuiteReport
from src.kenyon_smillie.resources import load_ode, load_polynomial
from src.polyring.multipoly import MultiPoly, exact_quotient
from src.polyring.parser import parse_polynomial
from src.utils.config import get_settings
from src.utils.errors import QuarticPFError
from src.utils.logger import get_logger

logger = get_logger(__name__)

HESSE_TERMS = 9
# 推导出的方程在 s = 0 处代回检验的级数阶数
SERIES_TERMS = 6


@dataclass(frozen=True)
class SuiteContext:
    """一次运行的参数。

    Attributes:
        seed: 随机 t 样本的种子
        convention: Galois 共轭约定
        max_order: Picard-Fuchs 搜索的最大阶数
    """

    seed: int
    convention: str
    max_order: int

    @classmethod
    def from_settings(
        cls, seed: Optional[int] = None, convention: Optional[str] = None, max_order: Optional[int] = None
    ) -> "SuiteContext":
        settings = get_settings()
        return cls(
            seed=settings.SEED if seed is None else seed,
            convention=convention or settings.CONVENTION,
            max_order=max_order or settings.MAX_ORDER,
        )


Check = Callable[[SuiteContext], List[CheckReport]]


def series_substitution(ode: LinearODE, point: Point = 0, terms: int = SERIES_TERMS) -> Dict[str, Any]:
    """取最大指数的 Frobenius 解代回方程，记录余项的首个非零阶。"""
    exponents = local_exponents(ode, point).exponents
    if not exponents:
        return {"point": str(point), "holds": False, "reason": "exponents outside the constant field"}
    rho = max(exponents)
    series = frobenius_series(ode, point, rho, terms)
    order = series_residual_order(ode, point, series)
    return {
        "point": str(point),
        "exponent": ode.base.to_str(rho),
        "terms": terms,
        "residual_order": order,
        "holds": order is None or order > terms,
    }


# ============ Picard-Fuchs 与超几何 ============


def check_picard_fuchs(ctx: SuiteContext) -> List[CheckReport]:
    spar = symbolic_family(S_FORM)
    x = MultiPoly.variable(spar.field, "X")
    result = picard_fuchs(spar, x, ctx.max_order)
    expected = load_ode("eq-spar-x").lift(result.ode.field)
    substitution = series_substitution(result.ode)
    passed = result.order == 2 and result.ode == expected and result.verify() and substitution["holds"]
    return [
        CheckReport(
            anchor="picard-fuchs",
            passed=passed,
            summary=f"section X/F satisfies {result.ode}",
            details={
                "coefficients": [str(a) for a in result.ode.coefficients],
                "rank_profile": list(result.rank_profile),
                "series_substitution": substitution,
            },
        )
    ]


def check_section_equations(ctx: SuiteContext) -> List[CheckReport]:
    spar = symbolic_family(S_FORM)
    reports = []
    for name, ode_name in (("Y", "l2"), ("Z", "l3")):
        result = picard_fuchs(spar, MultiPoly.variable(spar.field, name), ctx.max_order)
        pulled = pullback_monomial(load_ode(ode_name), 9)
        substitution = series_substitution(result.ode)
        reports.append(
            CheckReport(
                anchor=f"section-equation[{name}]",
                passed=result.ode == pulled and substitution["holds"],
                summary=f"section {name}/F satisfies the pullback of {ode_name.upper()} along t = s^9",
                details={"ode": str(result.ode), "series_substitution": substitution},
            )
        )
    return reports


def check_hypergeometric_descent(ctx: SuiteContext) -> List[CheckReport]:
    eq = load_ode("eq-spar-x")
    l1 = load_ode("l1")
    descended = descend_monomial(eq, 9)
    expected = {
        "l1": (rational(4, 9), rational(8, 9)),
        "l2": (rational(2, 9), rational(4, 9)),
        "l3": (rational(1, 9), rational(2, 9)),
    }
    params = {}
    ok = descended == l1 and pullback_monomial(l1, 9) == eq
    for name, (ab, c) in expected.items():
        ode = load_ode(name)
        p = hypergeometric_parameters(ode)
        params[name] = p.to_dict()
        ok = ok and is_hypergeometric(ode) and p.a == ab and p.b == ab and p.c == c
    return [
        CheckReport(
            anchor="hypergeometric-descent",
            passed=ok,
            summary="the s-form equation is the pullback of L1 along t = s^9",
            details={"descended": str(descended), "parameters": params},
        )
    ]


def check_riemann_scheme(ctx: SuiteContext) -> List[CheckReport]:
    scheme = riemann_scheme(load_ode("eq-spar-x"))
    finite_ok = all(
        col.exponents.exponents is not None and all(is_zero_value(e) for e in col.exponents.exponents)
        for col in scheme.columns
        if not col.place.is_infinity
    )
    at_inf = [col for col in scheme.columns if col.place.is_infinity]
    inf_ok = len(at_inf) == 1 and at_inf[0].exponents.exponents == (rational(4), rational(4))
    passed = finite_ok and inf_ok and scheme.point_count == 10 and scheme.fuchs_relation_holds()
    return [
        CheckReport(
            anchor="riemann-scheme",
            passed=passed,
            summary="exponents {0,0} at the ninth roots of unity and {4,4} at infinity, Fuchs sum 8",
            details=scheme.to_dict(),
        )
    ]


def check_hesse_oracle(ctx: SuiteContext) -> List[CheckReport]:
    """Hesse 族在 ∞ 处的 Frobenius 解等于 Σ (3k)!/(k!³·27^k)·u^{3k}。"""
    qs = symbolic_family(S_FORM).field
    hesse = load_polynomial("hesse", qs)
    result = picard_fuchs(hesse, MultiPoly.constant(qs, 1), ctx.max_order)
    exponents = local_exponents(result.ode, INFINITY).exponents
    series = frobenius_series(result.ode, INFINITY, 1, HESSE_TERMS)
    expected = [rational(0)] * (HESSE_TERMS + 1)
    for k in range(HESSE_TERMS // 3 + 1):
        expected[3 * k] = rational(factorial(3 * k), factorial(k) ** 3 * 27**k)
    order = series_residual_order(result.ode, INFINITY, series)
    passed = (
        exponents == (rational(1), rational(1))
        and list(series.coefficients) == expected
        and (order is None or order > HESSE_TERMS)
    )
    return [
        CheckReport(
            anchor="hesse-oracle",
            passed=passed,
            summary="Frobenius series at infinity matches the period expansion",
            details={"ode": str(result.ode), "series": series.to_dict(), "residual_order": order},
        )
    ]


# ============ 族的结构 ============


def check_family_structure(ctx: SuiteContext) -> List[CheckReport]:
    return [verify_descent(), verify_symmetry(), verify_degree_table(), verify_reconstruction()]


def check_fiber_geometry(ctx: SuiteContext) -> List[CheckReport]:
    reports = []
    for t in t_samples(ctx.seed):
        reports.append(verify_divisor_conditions(t))
        reports.append(verify_torsion(t))
    return reports


def check_cusp_equations(ctx: SuiteContext) -> List[CheckReport]:
    """F_∞ = (X+Y+Z)·C，特殊纤维的光滑性与 t 样本的光滑性。"""
    f_inf = load_polynomial("finf")
    line = parse_polynomial("X + Y + Z", QQ_FIELD)
    quotient = exact_quotient(f_inf, line)
    factored = quotient.divisible and quotient.quotient == load_polynomial("cubic")
    smooth = {
        "F_0": bool(is_smooth(family(S_FORM, 0))),
        "F_1": bool(is_smooth(load_polynomial("f1"))),
        "F_inf": bool(is_smooth(f_inf)),
        "s=1": bool(is_smooth(family(S_FORM, 1))),
    }
    samples = {str(t): bool(is_smooth(family(T_FORM, t))) for t in t_samples(ctx.seed)}
    passed = (
        factored
        and smooth["F_0"]
        and not smooth["F_1"]
        and not smooth["F_inf"]
        and not smooth["s=1"]
        and all(samples.values())
    )
    return [
        CheckReport(
            anchor="cusp-equations",
            passed=passed,
            summary="F_inf = (X + Y + Z) * C; F_0 and sampled fibers smooth, F_1 and F_inf singular",
            details={"factored": factored, "smooth": smooth, "samples": samples, "degenerate": "t = 0"},
        )
    ]


def check_cusp_relations(ctx: SuiteContext) -> List[CheckReport]:
    reports = []
    for which in CUSPS:
        reports.append(verify_cusp_relation(which, ctx.convention))
        reports.append(verify_cusp_nodes(which, ctx.convention))
    return reports


def check_orbifold(ctx: SuiteContext) -> List[CheckReport]:
    return [verify_orbifold_relation()]


# 锚点前缀 -> 检查
CHECKS: Dict[str, Check] = {
    "picard-fuchs": check_picard_fuchs,
    "section-equation": check_section_equations,
    "hypergeometric-descent": check_hypergeometric_descent,
    "riemann-scheme": check_riemann_scheme,
    "hesse-oracle": check_hesse_oracle,
    "family-structure": check_family_structure,
    "fiber-geometry": check_fiber_geometry,
    "cusp-equations": check_cusp_equations,
    "cusp-relation": check_cusp_relations,
    "orbifold-relation": check_orbifold,
}

# 报告锚点到注册名的对应（一个检查可以产出多个锚点）
ANCHOR_GROUPS: Dict[str, str] = {
    "descent": "family-structure",
    "symmetry": "family-structure",
    "degree-table": "family-structure",
    "reconstruction": "family-structure",
    "divisor-conditions": "fiber-geometry",
    "torsion": "fiber-geometry",
    "cusp-nodes": "cusp-relation",
}


def known_anchors() -> List[str]:
    return sorted(set(CHECKS) | set(ANCHOR_GROUPS))


def _select(anchors: Optional[Sequence[str]]) -> List[str]:
    if not anchors:
        return list(CHECKS)
    selected = []
    for anchor in anchors:
        group = ANCHOR_GROUPS.get(anchor, anchor)
        if group not in CHECKS:
            raise QuarticPFError(f"unknown check anchor: {anchor}", {"allowed": known_anchors()})
        if group not in selected:
            selected.append(group)
    return selected


def _keep(anchor: str, wanted: Set[str]) -> bool:
    base = anchor.split("[", 1)[0]
    return base in wanted or ANCHOR_GROUPS.get(base, base) in wanted


def _run_one(name: str, ctx: SuiteContext) -> List[CheckReport]:
    try:
        return CHECKS[name](ctx)
    except QuarticPFError as e:
        logger.error(f"check {name} raised {e.code}: {e.message}")
        return [CheckReport(anchor=name, passed=False, summary=e.message, details=e.to_dict())]


def run_suite(
    anchors: Optional[Sequence[str]] = None,
    ctx: Optional[SuiteContext] = None,
    max_workers: int = 4,
) -> SuiteReport:
    """
    并发执行检查并汇总

    Args:
        anchors: 只运行这些锚点（报告锚点或注册名）；None 表示全部
        ctx: 运行参数，缺省取配置
        max_workers: 线程数

    Returns:
        SuiteReport，检查按锚点排序；选中的锚点只过滤到该锚点本身

    Raises:
        QuarticPFError: 锚点未知
    """
    ctx = ctx or SuiteContext.from_settings()
    names = _select(anchors)
    logger.info(f"running {len(names)} check group(s) with seed {ctx.seed} and convention {ctx.convention}")
    with ThreadPoolExecutor(max_workers=max_workers) as pool:
        results = list(pool.map(lambda n: _run_one(n, ctx), names))
    reports = [r for group in results for r in group]
    if anchors:
        wanted = set(anchors)
        reports = [r for r in reports if _keep(r.anchor, wanted)]
    return SuiteReport.collect(reports, ctx.seed, ctx.convention)
