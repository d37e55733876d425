"""子命令实现：把解析好的参数接到计算引擎上。

每个命令返回 CommandResponse；库里的异常原样抛出，由 main 转换为诊断与退出码。

Author: QuarticPF Team
Created: 2026-03-12
"""

from argparse import Namespace
from typing import Callable, Dict

from src.cli.loaders import load_equation, load_family, load_line, load_point, load_section
from src.cli.reports import CommandResponse
from src.fuchsian.singularities import riemann_scheme
from src.fuchsian.transforms import pullback_monomial
from src.geometry.intersection import classify_flex
from src.geometry.projection import central_projection
from src.griffiths_dwork.cohomology import CohomClass
from src.griffiths_dwork.picard_fuchs import picard_fuchs
from src.jacobian.ring import reduce_mod_jacobian
from src.kenyon_smillie.real_points import sample_real_points, to_csv
from src.kenyon_smillie.suite import SuiteContext, run_suite
from src.utils.logger import get_logger

logger = get_logger(__name__)


# ============ 微分方程 ============


def cmd_pf(args: Namespace) -> CommandResponse:
    """截面 P·Ω0/F^k 的 Picard-Fuchs 方程。"""
    curve = load_family(args.family, args.param)
    section = CohomClass(curve, load_section(args.section, curve), args.pole_order)
    result = picard_fuchs(curve, section, args.max_order)
    passed = result.verify()
    summary = [str(result.ode), f"order {result.order}, rank profile {list(result.rank_profile)}"]
    summary += [f"a_{j} = {a}" for j, a in enumerate(result.ode.coefficients)]
    return CommandResponse(command="pf", passed=passed, summary=summary, data=result.to_dict())


def cmd_exponents(args: Namespace) -> CommandResponse:
    """Riemann 表与 Fuchs 关系。"""
    scheme = riemann_scheme(load_equation(args.ode, args.var))
    passed = scheme.fuchs_relation_holds()
    summary = [
        scheme.table(),
        f"{scheme.point_count} singular points, Fuchs sum {scheme.fuchs_sum()} (expected {scheme.fuchs_expected()})",
    ]
    return CommandResponse(command="exponents", passed=passed, summary=summary, data=scheme.to_dict())


def cmd_pullback(args: Namespace) -> CommandResponse:
    ode = load_equation(args.ode)
    var = args.var or (ode.var if args.n == 1 else "s")
    pulled = pullback_monomial(ode, args.n, var)
    return CommandResponse(
        command="pullback",
        summary=[str(pulled)],
        data={"n": args.n, "source": ode.to_dict(), "ode": pulled.to_dict()},
    )


# ============ 平面几何 ============


def cmd_flex(args: Namespace) -> CommandResponse:
    curve = load_family(args.curve, args.param, args.at)
    flex = classify_flex(curve, load_point(args.point, curve))
    tangent = flex.tangent.to_poly()
    summary = [f"{flex.point}: {flex.kind} (tangent {tangent} meets with multiplicity {flex.multiplicity})"]
    return CommandResponse(command="flex", summary=summary, data=flex.to_dict())


def cmd_project(args: Namespace) -> CommandResponse:
    """中心投影与分歧；Riemann-Hurwitz 不成立时以 1 退出。"""
    curve = load_family(args.curve, args.param, args.at)
    forms = [load_line(f, curve) for f in args.forms] if args.forms else None
    projection = central_projection(curve, load_point(args.center, curve), forms)
    summary = [f"degree {projection.degree} projection from {projection.center}"]
    summary += [f"  over {f.label}: partition {list(f.partition)} (x{f.degree})" for f in projection.fibers]
    summary.append(
        f"total ramification {projection.total_ramification}, expected {projection.expected_ramification}"
    )
    return CommandResponse(
        command="project",
        passed=projection.riemann_hurwitz_holds(),
        summary=summary,
        data=projection.to_dict(),
    )


def cmd_reduce(args: Namespace) -> CommandResponse:
    """模 Jacobian 理想的规范形，附带可验证的余因子证书。"""
    curve = load_family(args.curve, args.param, args.at)
    reduction = reduce_mod_jacobian(load_section(args.poly, curve), curve)
    residue = reduction.residue()
    verified = reduction.certificate.verify()
    summary = [f"normal form: {reduction.basis_part()}", f"certificate verified: {verified}"]
    return CommandResponse(
        command="reduce",
        passed=verified,
        summary=summary,
        data={
            "normal_form": str(reduction.basis_part()),
            "coordinates": residue,
            "basis": reduction.basis.names(),
            "certificate": reduction.certificate.to_dict(),
        },
    )


# ============ 验证与采样 ============


def cmd_verify(args: Namespace) -> CommandResponse:
    ctx = SuiteContext.from_settings(args.seed, args.convention, args.max_order)
    report = run_suite(args.check, ctx)
    return CommandResponse(
        command="verify",
        passed=report.passed,
        summary=report.text().splitlines(),
        data={
            "seed": report.seed,
            "convention": report.convention,
            "checks": {c.anchor: c.model_dump() for c in report.checks},
            "failed": report.failed(),
        },
    )


def cmd_sample_points(args: Namespace) -> CommandResponse:
    points = sample_real_points(args.t, (args.x_min, args.x_max), args.steps)
    csv_text = to_csv(points)
    return CommandResponse(
        command="sample-points",
        summary=csv_text.rstrip("\n").splitlines(),
        data={"t": args.t, "points": [list(p.row()) for p in points]},
    )


COMMANDS: Dict[str, Callable[[Namespace], CommandResponse]] = {
    "pf": cmd_pf,
    "exponents": cmd_exponents,
    "pullback": cmd_pullback,
    "flex": cmd_flex,
    "project": cmd_project,
    "reduce": cmd_reduce,
    "verify": cmd_verify,
    "sample-points": cmd_sample_points,
}
