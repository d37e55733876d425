"""多项式表达式解析器。

文法：整数与有理字面量、数域生成元、参数符号、多项式变量、
``+ - * / ^`` 与括号。使用 Pratt 算法，优先级自低到高为
``+ -`` < ``* /`` < 一元负号 < ``^``（右结合）。除数必须是常数，
指数必须是非负整数字面量。

打印结果总能被原样读回：parse(str(P)) == P。

Author: QuarticPF Team
Created: 2026-03-03
"""

import re
from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Sequence

from src.fields.base import Field
from src.fields.number_field import NumberField
from src.fields.ratfun import RationalFunctionField
from src.polyring.multipoly import DEFAULT_VARS, MultiPoly
from src.utils.errors import ParseError, PolynomialError
from src.utils.logger import get_logger

logger = get_logger(__name__)

_TOKEN = re.compile(
    r"(?P<ws>[ \t\r]+)|(?P<nl>\n)|(?P<num>\d+)|(?P<name>[A-Za-z_][A-Za-z_0-9]*)|(?P<op>\*\*|[-+*/^()])"
)

_INFIX_BP = {"+": 10, "-": 10, "*": 20, "/": 20, "^": 40}
_PREFIX_BP = 30


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    line: int
    column: int


def tokenize(text: str) -> List[Token]:
    """切分记号；未知字符抛出 ParseError。"""
    tokens: List[Token] = []
    line, line_start, pos = 1, 0, 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise ParseError(
                f"unexpected character {text[pos]!r}",
                line,
                pos - line_start + 1,
                ["number", "name", "operator"],
            )
        kind = m.lastgroup or ""
        if kind == "nl":
            line, line_start = line + 1, m.end()
        elif kind != "ws":
            op = "^" if m.group() == "**" else m.group()
            tokens.append(Token(kind, op, line, m.start() - line_start + 1))
        pos = m.end()
    tokens.append(Token("eof", "", line, pos - line_start + 1))
    return tokens


def default_symbols(field: Field) -> Dict[str, Any]:
    """从域的子域链收集生成元名：数域生成元与有理函数参数。"""
    symbols: Dict[str, Any] = {}
    for sub in field.base_chain():
        if isinstance(sub, NumberField):
            symbols[sub.gen_name] = sub.gen
        elif isinstance(sub, RationalFunctionField):
            symbols[sub.var] = sub.gen
    return symbols


class PolynomialParser:
    """把表达式文本解析为给定域上的 MultiPoly。

    Attributes:
        field: 系数域
        vars: 多项式变量
        symbols: 常数符号表 {名称: 域元素}

    Examples:
        >>> PolynomialParser(QQ_FIELD).parse("X^4 + X*Z^3 + 3*Y^3*Z")
        MultiPoly(X^4 + X*Z^3 + 3*Y^3*Z, over Q)
    """

    def __init__(
        self,
        field: Field,
        vars: Sequence[str] = DEFAULT_VARS,
        symbols: Optional[Dict[str, Any]] = None,
    ) -> None:
        self.field = field
        self.vars = tuple(vars)
        self.symbols = default_symbols(field) if symbols is None else dict(symbols)
        clash = set(self.symbols) & set(self.vars)
        if clash:
            raise PolynomialError(f"symbols shadow variables: {sorted(clash)}")
        self._tokens: List[Token] = []
        self._pos = 0

    # ============ 入口 ============

    def parse(self, text: str) -> MultiPoly:
        """
        解析完整表达式

        Args:
            text: 表达式文本

        Returns:
            MultiPoly

        Raises:
            ParseError: 语法错误、未知名称、非整数指数或除以非常数
        """
        self._tokens = tokenize(text)
        self._pos = 0
        if self._peek().kind == "eof":
            tok = self._peek()
            raise ParseError("empty expression", tok.line, tok.column, ["number", "name", "("])
        result = self._expression(0)
        tok = self._peek()
        if tok.kind != "eof":
            raise ParseError(
                f"unexpected token {tok.text!r}", tok.line, tok.column, ["operator", "end of input"]
            )
        return result

    # ============ Pratt 核心 ============

    def _peek(self) -> Token:
        return self._tokens[self._pos]

    def _advance(self) -> Token:
        tok = self._tokens[self._pos]
        self._pos += 1
        return tok

    def _expect(self, text: str) -> Token:
        tok = self._advance()
        if tok.text != text:
            raise ParseError(
                f"expected {text!r}, found {tok.text or 'end of input'!r}",
                tok.line,
                tok.column,
                [text],
            )
        return tok

    def _expression(self, min_bp: int) -> MultiPoly:
        left = self._prefix()
        while True:
            tok = self._peek()
            if tok.kind != "op" or tok.text not in _INFIX_BP:
                break
            bp = _INFIX_BP[tok.text]
            if bp <= min_bp:
                break
            self._advance()
            if tok.text == "^":
                left = self._power(left, tok)
            else:
                right = self._expression(bp)
                left = self._binary(tok, left, right)
        return left

    def _prefix(self) -> MultiPoly:
        tok = self._advance()
        if tok.kind == "num":
            return MultiPoly.constant(self.field, int(tok.text), self.vars)
        if tok.kind == "name":
            return self._name(tok)
        if tok.text == "-":
            return -self._expression(_PREFIX_BP)
        if tok.text == "+":
            return self._expression(_PREFIX_BP)
        if tok.text == "(":
            inner = self._expression(0)
            self._expect(")")
            return inner
        raise ParseError(
            f"unexpected {tok.text or 'end of input'!r}",
            tok.line,
            tok.column,
            ["number", "name", "(", "-"],
        )

    def _name(self, tok: Token) -> MultiPoly:
        if tok.text in self.vars:
            return MultiPoly.variable(self.field, tok.text, self.vars)
        if tok.text in self.symbols:
            return MultiPoly.constant(self.field, self.symbols[tok.text], self.vars)
        raise ParseError(
            f"unknown name {tok.text!r}",
            tok.line,
            tok.column,
            list(self.vars) + list(self.symbols),
        )

    def _power(self, base: MultiPoly, op: Token) -> MultiPoly:
        # 右结合：a^b^c = a^(b^c)，指数只能是整数字面量（可带括号）
        exponent = self._integer_exponent(op)
        if self._peek().text == "^":
            hat = self._advance()
            exponent = exponent ** self._exponent_chain(hat)
        if exponent < 0:
            if not base.is_constant() or base.is_zero():
                raise ParseError("negative power of a non-constant", op.line, op.column, ["integer"])
            return MultiPoly.constant(
                self.field, (self.field.one / base.constant_value()) ** (-exponent), self.vars
            )
        return base**exponent

    def _exponent_chain(self, op: Token) -> int:
        value = self._integer_exponent(op)
        if self._peek().text == "^":
            hat = self._advance()
            value = value ** self._exponent_chain(hat)
        return value

    def _integer_exponent(self, op: Token) -> int:
        tok = self._advance()
        sign = 1
        if tok.text == "-":
            sign, tok = -1, self._advance()
        if tok.kind == "num":
            return sign * int(tok.text)
        if tok.text == "(":
            inner = self._integer_exponent(op)
            self._expect(")")
            return sign * inner
        raise ParseError("exponent must be an integer literal", tok.line, tok.column, ["integer"])

    def _binary(self, op: Token, left: MultiPoly, right: MultiPoly) -> MultiPoly:
        if op.text == "+":
            return left + right
        if op.text == "-":
            return left - right
        if op.text == "*":
            return left * right
        if right.is_zero():
            raise ParseError("division by zero", op.line, op.column)
        if not right.is_constant():
            raise ParseError("division by a non-constant polynomial", op.line, op.column)
        return left / right


def parse_polynomial(
    text: str,
    field: Field,
    vars: Sequence[str] = DEFAULT_VARS,
    symbols: Optional[Dict[str, Any]] = None,
) -> MultiPoly:
    """解析多项式表达式的便捷函数。"""
    return PolynomialParser(field, vars, symbols).parse(text)


def parse_scalar(text: str, field: Field, symbols: Optional[Dict[str, Any]] = None) -> Any:
    """解析不含多项式变量的表达式，返回域元素。

    Raises:
        ParseError: 表达式含变量或语法错误
    """
    poly = PolynomialParser(field, (), symbols).parse(text)
    return poly.constant_value()
