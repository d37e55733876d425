"""有理数域 Q。

元素直接使用 sympy 的 QQ 数据类型（gmpy2 可用时为 mpq，否则为
PythonMPQ），保证任意精度、分子分母互素且分母为正。

Author: QuarticPF Team
Created: 2026-03-02
"""

from fractions import Fraction
from math import isqrt
from typing import Any, List

from sympy.polys.domains import QQ

from src.fields.base import Field
from src.utils.errors import FieldError

MPQ = QQ.dtype


def rational(numerator: int, denominator: int = 1) -> Any:
    """构造有理数。

    Args:
        numerator: 分子
        denominator: 分母（非零）

    Returns:
        规约后的 QQ 元素

    Raises:
        FieldError: 分母为零

    Examples:
        >>> str(rational(6, -4))
        '-3/2'
    """
    if denominator == 0:
        raise FieldError("division by zero in rational literal")
    return QQ(numerator, denominator)


def is_rational(value: Any) -> bool:
    """判断值是否为有理数（含 Python 整数）。"""
    return isinstance(value, (int, MPQ)) and not isinstance(value, bool)


def format_rational(value: Any) -> str:
    """有理数的文本形式，如 ``-3/2``。"""
    num, den = int(value.numerator), int(value.denominator)
    return str(num) if den == 1 else f"{num}/{den}"


def rational_sqrt(value: Any) -> Any:
    """有理数的精确平方根，不是平方数时返回 None。"""
    if value < 0:
        return None
    num, den = int(value.numerator), int(value.denominator)
    rn, rd = isqrt(num), isqrt(den)
    if rn * rn == num and rd * rd == den:
        return QQ(rn, rd)
    return None


class RationalField(Field):
    """有理数域 Q。"""

    name = "Q"

    @property
    def zero(self) -> Any:
        return QQ(0)

    @property
    def one(self) -> Any:
        return QQ(1)

    def convert(self, value: Any) -> Any:
        if isinstance(value, MPQ):
            return value
        if isinstance(value, int) and not isinstance(value, bool):
            return QQ(value)
        if isinstance(value, Fraction):
            return QQ(value.numerator, value.denominator)
        raise FieldError(f"cannot convert {value!r} to Q")

    def contains(self, value: Any) -> bool:
        return isinstance(value, MPQ)

    def to_str(self, value: Any) -> str:
        return format_rational(value)

    def size(self, value: Any) -> int:
        return int(value.numerator).bit_length() + int(value.denominator).bit_length()

    def base_chain(self) -> List[Field]:
        return [self]

    def __eq__(self, other: object) -> bool:
        return isinstance(other, RationalField)

    def __hash__(self) -> int:
        return hash("Q")


QQ_FIELD = RationalField()
