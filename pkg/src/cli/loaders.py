"""命令行输入的读取与解析。

一个输入可以是内置数据名（如 ``ks-spar``）、文件路径或直接写在命令行上的表达式。
文本开头可以有若干行域定义::

    field Qv = Q[v]/(v^3 - 3*v + 1)

之后的表达式系数取在最后定义的域里。被消耗的定义行替换成空行，语法错误的行列号
仍然指向原文。

Author: QuarticPF Team
Created: 2026-03-12
"""

import re
from dataclasses import dataclass, field as dc_field
from pathlib import Path
from typing import Any, Dict, Optional, Sequence

from src.fields.base import Field
from src.fields.cyclotomic import cyclotomic_field
from src.fields.number_field import nf_create
from src.fields.rational import QQ_FIELD
from src.fields.ratfun import RationalFunctionField
from src.fields.unipoly import UniPoly
from src.fuchsian.ode import LinearODE, parse_ode
from src.geometry.projective import ProjLine, ProjPoint, parse_line, parse_point
from src.kenyon_smillie.resources import builtin_names, builtin_text, read_text, strip_comments
from src.polyring.multipoly import DEFAULT_VARS, MultiPoly, specialize
from src.polyring.parser import default_symbols, parse_polynomial, parse_scalar, tokenize
from src.utils.errors import ParseError
from src.utils.logger import get_logger

logger = get_logger(__name__)

GRAMMARS = ("poly", "ratfun", "ode", "point")

_FIELD_DEF = re.compile(
    r"^\s*field\s+(?P<name>[A-Za-z_]\w*)\s*=\s*(?P<base>[A-Za-z_]\w*)"
    r"\[(?P<gen>[A-Za-z_]\w*)\]\s*/\s*\((?P<minpoly>.*)\)\s*$"
)


def _predefined() -> Dict[str, Field]:
    return {"Q": QQ_FIELD, "Qzeta9": cyclotomic_field()}


@dataclass
class InputDocument:
    """去掉域定义后的输入。

    Attributes:
        body: 表达式文本（定义行已换成空行）
        fields: 已定义的域，含预置的 ``Q`` 与 ``Qzeta9``
        current: 表达式的系数域
    """

    body: str
    fields: Dict[str, Field] = dc_field(default_factory=_predefined)
    current: Field = QQ_FIELD


# ============ 域定义 ============


def _univariate(poly: MultiPoly, var: str) -> UniPoly:
    coeffs = [poly.field.zero] * (poly.total_degree + 1)
    for (e,), c in poly.terms.items():
        coeffs[e] = c
    return UniPoly(poly.field, coeffs, var)


def parse_field_definition(line: str, fields: Dict[str, Field], line_no: int = 1) -> Field:
    """
    解析一行 ``field K = B[g]/(minpoly)``，在 fields 中登记 K

    Args:
        line: 定义行
        fields: 已有的域，B 必须在其中
        line_no: 行号，用于诊断

    Returns:
        新的数域

    Raises:
        ParseError: 行不符合语法或基域未定义
        FieldError: 极小多项式可约
    """
    m = _FIELD_DEF.match(line)
    if m is None:
        raise ParseError("malformed field definition", line_no, 1, ["field NAME = BASE[GEN]/(MINPOLY)"])
    base_name = m.group("base")
    if base_name not in fields:
        raise ParseError(f"unknown base field {base_name}", line_no, m.start("base") + 1, sorted(fields))
    base = fields[base_name]
    gen = m.group("gen")
    try:
        minpoly = parse_polynomial(m.group("minpoly"), base, (gen,))
    except ParseError as exc:
        raise ParseError(
            exc.message.rsplit(" at line", 1)[0], line_no, m.start("minpoly") + exc.column, exc.expected
        ) from exc
    new = nf_create(_univariate(minpoly, gen), gen)
    fields[m.group("name")] = new
    logger.debug(f"defined field {m.group('name')} of degree {minpoly.total_degree} over {base_name}")
    return new


def parse_document(text: str) -> InputDocument:
    """拆出开头的域定义行。"""
    doc = InputDocument(body="")
    lines = strip_comments(text).splitlines()
    body = []
    for i, line in enumerate(lines, start=1):
        if line.lstrip().startswith("field "):
            doc.current = parse_field_definition(line, doc.fields, i)
            body.append("")
        else:
            body.append(line)
    doc.body = "\n".join(body)
    return doc


def read_source(arg: str) -> str:
    """内置数据名、文件路径或表达式文本本身。"""
    if arg in builtin_names():
        return builtin_text(arg)
    path = Path(arg)
    if path.suffix in (".poly", ".ode", ".txt") or path.is_file():
        return read_text(path)
    return arg


# ============ 表达式 ============


def free_symbols(text: str, field: Field, vars: Sequence[str] = DEFAULT_VARS) -> set:
    """表达式中除变量与域生成元以外的名字。"""
    names = {t.text for t in tokenize(text) if t.kind == "name"}
    return names - set(vars) - set(default_symbols(field))


def parameter_field(body: str, base: Field, param: Optional[str] = None) -> Field:
    """
    表达式所在的系数域：出现参数时为 base(param)

    Raises:
        ParseError: 不指定参数时出现多于一个自由名字
    """
    names = free_symbols(body, base)
    if param is None:
        if len(names) > 1:
            raise ParseError(f"ambiguous parameters {sorted(names)}", 1, 1, ["--param"])
        param = names.pop() if names else None
    if param is None or param not in names:
        return base
    return RationalFunctionField(base, param)


def parse_expression(text: str, grammar: str, field: Field = QQ_FIELD, var: Optional[str] = None) -> Any:
    """
    按文法解析一个表达式

    Args:
        text: 表达式文本
        grammar: ``poly``、``ratfun``、``ode`` 或 ``point``
        field: 系数域
        var: 有理函数或 ODE 的自变量名

    Returns:
        MultiPoly、RationalFunction、LinearODE 或 ProjPoint

    Raises:
        ParseError: 语法错误，附带行列号与期望的记号

    Examples:
        >>> str(parse_expression("(0:1:-1)", "point"))
        '(0:1:-1)'
    """
    if grammar == "poly":
        return parse_polynomial(text, parameter_field(text, field, var))
    if grammar == "ratfun":
        names = free_symbols(text, field, ())
        name = var or (names.pop() if len(names) == 1 else "t")
        return parse_scalar(text, RationalFunctionField(field, name))
    if grammar == "ode":
        return parse_ode(text, field, var)
    if grammar == "point":
        return parse_point(text, field)
    raise ParseError(f"unknown grammar {grammar}", 1, 1, GRAMMARS)


# ============ 输入 ============


def load_family(arg: str, param: Optional[str] = None, at: Optional[str] = None) -> MultiPoly:
    """
    读取一个平面曲线（族）

    Args:
        arg: 内置名、文件或表达式
        param: 参数名，缺省自动识别
        at: 给定时把参数特殊化为该有理数

    Returns:
        MultiPoly
    """
    doc = parse_document(read_source(arg))
    poly = parse_polynomial(doc.body, parameter_field(doc.body, doc.current, param))
    if at is not None and isinstance(poly.field, RationalFunctionField):
        base = poly.field.base
        poly = specialize(poly, parse_scalar(at, base), base)
    logger.info(f"loaded curve of degree {poly.total_degree} over {poly.field}")
    return poly


def load_section(text: str, curve: MultiPoly) -> MultiPoly:
    return parse_polynomial(text, curve.field, curve.vars)


def load_equation(arg: str, var: Optional[str] = None) -> LinearODE:
    doc = parse_document(read_source(arg))
    return parse_ode(doc.body, doc.current, var)


def load_point(text: str, curve: MultiPoly) -> ProjPoint:
    return parse_point(text, curve.field)


def load_line(text: str, curve: MultiPoly) -> ProjLine:
    return parse_line(text, curve.field)
