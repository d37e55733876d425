"""射影平面上的点与直线。

点与直线都以坐标向量表示，规范化为第一个非零坐标等于 1，因此
相等比较就是坐标比较。坐标可以在任何精确域中（Q、数域塔）。

Author: QuarticPF Team
Created: 2026-03-07
"""

from dataclasses import dataclass
from typing import Any, Dict, List, Sequence, Tuple

from src.fields.base import Field
from src.polyring.multipoly import DEFAULT_VARS, MultiPoly
from src.polyring.parser import parse_polynomial, parse_scalar
from src.utils.errors import ParseError, PolynomialError


def is_zero_value(value: Any) -> bool:
    """域元素是否为零，兼容有理数与各种域元素。"""
    check = getattr(value, "is_zero", None)
    if callable(check):
        return bool(check())
    return value == 0


def _normalize(field: Field, coords: Sequence[Any]) -> Tuple[Any, ...]:
    values = [field.convert(c) for c in coords]
    for c in values:
        if not field.is_zero(c):
            inv = field.one / c
            return tuple(x * inv for x in values)
    raise PolynomialError("all coordinates are zero", {"coords": [str(c) for c in values]})


def cross(u: Sequence[Any], v: Sequence[Any]) -> Tuple[Any, ...]:
    """三维向量的叉积：两点的连线，或两直线的交点。"""
    return (
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    )


def dot(u: Sequence[Any], v: Sequence[Any]) -> Any:
    total = u[0] * v[0]
    for a, b in zip(u[1:], v[1:]):
        total = total + a * b
    return total


def _proportional(u: Sequence[Any], v: Sequence[Any]) -> bool:
    n = len(u)
    return all(is_zero_value(u[i] * v[j] - u[j] * v[i]) for i in range(n) for j in range(i + 1, n))


def unit_vectors(field: Field, n: int = 3) -> List[Tuple[Any, ...]]:
    return [tuple(field.one if i == j else field.zero for j in range(n)) for i in range(n)]


# ============ 点 ============


@dataclass(frozen=True, eq=False)
class ProjPoint:
    """射影空间中的点 (x_0 : … : x_n)。

    Attributes:
        field: 坐标所在的域
        coords: 规范化后的坐标

    Raises:
        PolynomialError: 坐标全为零

    Examples:
        >>> str(ProjPoint.of(QQ_FIELD, 0, 2, -2))
        '(0:1:-1)'
    """

    field: Field
    coords: Tuple[Any, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "coords", _normalize(self.field, self.coords))

    @classmethod
    def of(cls, field: Field, *coords: Any) -> "ProjPoint":
        return cls(field, tuple(coords))

    @property
    def dimension(self) -> int:
        return len(self.coords) - 1

    def evaluate(self, poly: MultiPoly) -> Any:
        return poly.evaluate(self.coords)

    def lies_on(self, poly: MultiPoly) -> bool:
        return is_zero_value(self.evaluate(poly))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ProjPoint) or len(other.coords) != len(self.coords):
            return NotImplemented
        return all(is_zero_value(a - b) for a, b in zip(self.coords, other.coords))

    def __hash__(self) -> int:
        return hash(tuple(str(c) for c in self.coords))

    def __str__(self) -> str:
        return "(" + ":".join(self.field.to_str(c) for c in self.coords) + ")"

    def __repr__(self) -> str:
        return f"ProjPoint{self}"

    def to_dict(self) -> Dict[str, Any]:
        return {"point": str(self), "field": self.field.name}


# ============ 直线 ============


@dataclass(frozen=True, eq=False)
class ProjLine:
    """直线 a·X + b·Y + c·Z = 0，系数按点的方式规范化。"""

    field: Field
    coeffs: Tuple[Any, ...]

    def __post_init__(self) -> None:
        if len(self.coeffs) != 3:
            raise PolynomialError(f"a plane line needs 3 coefficients, got {len(self.coeffs)}")
        object.__setattr__(self, "coeffs", _normalize(self.field, self.coeffs))

    @classmethod
    def of(cls, field: Field, *coeffs: Any) -> "ProjLine":
        return cls(field, tuple(coeffs))

    @classmethod
    def from_poly(cls, poly: MultiPoly) -> "ProjLine":
        """由一次齐次多项式构造。

        Raises:
            PolynomialError: 不是三个变量的一次齐次多项式
        """
        if poly.nvars != 3 or poly.is_zero() or not poly.is_homogeneous() or poly.total_degree != 1:
            raise PolynomialError("a line must be a nonzero linear form in three variables", {"poly": str(poly)})
        units = [(1, 0, 0), (0, 1, 0), (0, 0, 1)]
        return cls(poly.field, tuple(poly.coefficient(e) for e in units))

    @classmethod
    def through(cls, p: ProjPoint, q: ProjPoint) -> "ProjLine":
        """两点的连线。

        Raises:
            PolynomialError: 两点重合
        """
        if p == q:
            raise PolynomialError("a line through a single point is not determined", {"point": str(p)})
        return cls(p.field, cross(p.coords, q.coords))

    def to_poly(self, vars: Sequence[str] = DEFAULT_VARS) -> MultiPoly:
        terms = {(1, 0, 0): self.coeffs[0], (0, 1, 0): self.coeffs[1], (0, 0, 1): self.coeffs[2]}
        return MultiPoly(self.field, terms, vars)

    def value(self, point: Sequence[Any]) -> Any:
        return dot(self.coeffs, point)

    def contains(self, point: ProjPoint) -> bool:
        return is_zero_value(self.value(point.coords))

    def meet(self, other: "ProjLine") -> ProjPoint:
        """两直线的交点。

        Raises:
            PolynomialError: 两直线重合
        """
        if self == other:
            raise PolynomialError("coincident lines meet in a line", {"line": str(self)})
        return ProjPoint(self.field, cross(self.coeffs, other.coeffs))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ProjLine):
            return NotImplemented
        return all(is_zero_value(a - b) for a, b in zip(self.coeffs, other.coeffs))

    def __hash__(self) -> int:
        return hash(tuple(str(c) for c in self.coeffs))

    def __str__(self) -> str:
        return f"{self.to_poly()} = 0"

    def to_dict(self) -> Dict[str, Any]:
        return {"line": str(self.to_poly())}


def point_off(line: ProjLine, avoid: ProjPoint) -> Tuple[Any, ...]:
    """直线上一个与 avoid 不成比例的点（取 L × e_i 中的第一个可用者）。"""
    for e in unit_vectors(line.field):
        q = cross(line.coeffs, e)
        if any(not is_zero_value(c) for c in q) and not _proportional(q, avoid.coords):
            return q
    raise PolynomialError("no second point found on the line", {"line": str(line)})


# ============ 解析 ============


def _rebase(exc: ParseError, offset: int) -> ParseError:
    message = exc.message.rsplit(" at line", 1)[0]
    column = exc.column + offset if exc.line == 1 else exc.column
    return ParseError(message, exc.line, column, exc.expected)


def parse_point(text: str, field: Field) -> ProjPoint:
    """
    解析形如 ``(0:1:-1)`` 的射影点

    Args:
        text: 点的文本，坐标之间用冒号分隔
        field: 坐标所在的域

    Returns:
        ProjPoint

    Raises:
        ParseError: 括号或分隔符缺失、坐标无法解析
        PolynomialError: 坐标全为零
    """
    stripped = text.strip()
    lead = len(text) - len(text.lstrip())
    if not stripped.startswith("("):
        raise ParseError("projective point must start with '('", 1, lead + 1, ["("])
    if not stripped.endswith(")"):
        raise ParseError("projective point must end with ')'", 1, lead + len(stripped) + 1, [")"])
    inner = stripped[1:-1]
    parts = inner.split(":")
    if len(parts) < 2:
        raise ParseError("projective point needs at least two coordinates", 1, lead + len(stripped), [":"])
    coords = []
    offset = lead + 1
    for part in parts:
        try:
            coords.append(parse_scalar(part, field))
        except ParseError as exc:
            raise _rebase(exc, offset) from exc
        offset += len(part) + 1
    return ProjPoint(field, tuple(coords))


def parse_line(text: str, field: Field) -> ProjLine:
    """解析一次齐次多项式形式的直线，如 ``X + Y + Z``。

    Raises:
        ParseError: 语法错误
        PolynomialError: 不是一次齐次多项式
    """
    return ProjLine.from_poly(parse_polynomial(text, field))
