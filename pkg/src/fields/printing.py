"""项求和的文本格式化。

多项式、数域元素与有理函数共用同一套打印规则，输出可以被
表达式解析器原样读回。
"""

import re
from typing import List, Sequence, Tuple

_RATIONAL_LITERAL = re.compile(r"-?\d+/\d+")


def is_simple(text: str) -> bool:
    """文本是否为单个乘积（作为系数时不需要括号）。"""
    if " " in text:
        return False
    if "/" in text and not _RATIONAL_LITERAL.fullmatch(text):
        return False
    return True


def format_power(name: str, exponent: int) -> str:
    if exponent == 0:
        return ""
    if exponent == 1:
        return name
    return f"{name}^{exponent}"


def format_monomial(names: Sequence[str], exponents: Sequence[int]) -> str:
    parts = [format_power(n, e) for n, e in zip(names, exponents) if e]
    return "*".join(parts)


def format_sum(terms: Sequence[Tuple[str, str]]) -> str:
    """把 (系数文本, 单项式文本) 列表拼成和式。

    Args:
        terms: 按输出顺序排列的项；单项式文本为空表示常数项

    Returns:
        和式文本，空列表返回 ``0``

    Examples:
        >>> format_sum([("-3*s^7", "X^3*Y"), ("1", "Z^4")])
        '-3*s^7*X^3*Y + Z^4'
    """
    pieces: List[Tuple[bool, str]] = []
    for coef, mono in terms:
        negative = False
        if not mono:
            if is_simple(coef):
                if coef.startswith("-"):
                    negative, body = True, coef[1:]
                else:
                    body = coef
            else:
                body = f"({coef})"
        elif coef == "1":
            body = mono
        elif coef == "-1":
            negative, body = True, mono
        elif is_simple(coef):
            if coef.startswith("-"):
                negative, coef = True, coef[1:]
            body = f"{coef}*{mono}"
        else:
            body = f"({coef})*{mono}"
        pieces.append((negative, body))

    if not pieces:
        return "0"
    first_negative, first_body = pieces[0]
    out = [f"-{first_body}" if first_negative else first_body]
    for negative, body in pieces[1:]:
        out.append(f" - {body}" if negative else f" + {body}")
    return "".join(out)
