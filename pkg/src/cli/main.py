"""quarticpf 命令行入口。

子命令：pf、exponents、pullback、flex、project、reduce、verify、sample-points。
退出码：0 全部通过，1 数学或验证失败，2 用法或语法错误。

Author: QuarticPF Team
Created: 2026-03-12
"""

import argparse
import sys
from typing import List, Optional

from src.cli.commands import COMMANDS
from src.cli.reports import EXIT_USAGE, Diagnostic, render
from src.kenyon_smillie.suite import known_anchors
from src.utils.config import CONVENTIONS, OUTPUT_FORMATS, get_settings
from src.utils.errors import QuarticPFError
from src.utils.logger import get_logger

logger = get_logger(__name__)

DEFAULT_QUARTIC = "ks-t"
DEFAULT_POINT = "(0:1:-1)"
# 子命令别名 -> 子命令
ALIASES = {"verify-paper": "verify"}


def _common() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=OUTPUT_FORMATS, default=None, help="输出格式（缺省取配置）")
    common.add_argument("--seed", type=int, default=None, help="随机参数样本的种子")
    common.add_argument("--max-order", type=int, default=None, help="Picard-Fuchs 搜索的最大阶数")
    common.add_argument("--convention", choices=CONVENTIONS, default=None, help="Galois 共轭约定")
    return common


def _curve_args(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--curve", default=DEFAULT_QUARTIC, help="内置名、文件或表达式")
    sub.add_argument("--param", default=None, help="参数名，缺省自动识别")
    sub.add_argument("--at", default="3", help="参数的取值")


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = argparse.ArgumentParser(
        prog="quarticpf",
        description="Exact Picard-Fuchs equations and plane-quartic geometry for one-parameter curve families.",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    pf = subs.add_parser("pf", parents=[common], help="Picard-Fuchs equation of a section")
    pf.add_argument("--family", default="ks-spar", help="内置名、文件或表达式")
    pf.add_argument("--section", default="X", help="分子多项式 P")
    pf.add_argument("--pole-order", type=int, default=1, help="极点阶 k")
    pf.add_argument("--param", default=None, help="参数名，缺省自动识别")

    exponents = subs.add_parser("exponents", parents=[common], help="Riemann scheme of an ODE")
    exponents.add_argument("--ode", default="eq-spar-x", help="内置名、文件或方程文本")
    exponents.add_argument("--var", default=None, help="自变量名")

    pullback = subs.add_parser("pullback", parents=[common], help="pull an ODE back along t = s^n")
    pullback.add_argument("--ode", default="l1", help="内置名、文件或方程文本")
    pullback.add_argument("--n", type=int, required=True, help="指数 n")
    pullback.add_argument("--var", default=None, help="新自变量名")

    flex = subs.add_parser("flex", parents=[common], help="classify a point by its tangent contact")
    _curve_args(flex)
    flex.add_argument("--point", default=DEFAULT_POINT, help="射影点，如 (0:1:-1)")

    project = subs.add_parser("project", parents=[common], help="central projection and ramification")
    _curve_args(project)
    project.add_argument("--center", default=DEFAULT_POINT, help="投影中心")
    project.add_argument("--forms", nargs=2, default=None, metavar="LINE", help="两个在中心为零的线性型")

    reduce = subs.add_parser("reduce", parents=[common], help="normal form modulo the Jacobian ideal")
    _curve_args(reduce)
    reduce.add_argument("--poly", required=True, help="待约化的齐次多项式")

    verify = subs.add_parser(
        "verify", aliases=list(ALIASES), parents=[common], help="run the verification suite"
    )
    verify.add_argument(
        "--check", action="append", default=None, choices=known_anchors(), metavar="ANCHOR", help="只运行该锚点"
    )

    points = subs.add_parser("sample-points", parents=[common], help="real points of a t-fiber as CSV")
    points.add_argument("--t", default="3", help="参数 t")
    points.add_argument("--x-min", default="-3", help="x 的下界")
    points.add_argument("--x-max", default="3", help="x 的上界")
    points.add_argument("--steps", type=int, default=60, help="区间等分数")
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    """
    解析参数、执行子命令并输出

    Args:
        argv: 命令行参数，缺省取 sys.argv

    Returns:
        退出码
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else 0
    fmt = args.format or get_settings().OUTPUT_FORMAT
    logger.info(f"running {args.command}")
    try:
        response = COMMANDS[ALIASES.get(args.command, args.command)](args)
    except QuarticPFError as e:
        diagnostic = Diagnostic.from_error(e)
        logger.error(f"{args.command} failed with {e.code}: {e.message}")
        print(render(diagnostic, fmt), file=sys.stdout if fmt == "json" else sys.stderr)
        return diagnostic.exit_code
    print(render(response, fmt))
    return response.exit_code


if __name__ == "__main__":
    sys.exit(main())
