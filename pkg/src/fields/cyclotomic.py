"""九次分圆域 Q(ζ9) 与迹域 Q(v)。

Q(ζ9) = Q[ζ9]/(ζ9⁶ + ζ9³ + 1) 同时容纳 ζ9、ζ3 = ζ9³ 以及 v 的三个共轭，
v = ζ9 + ζ9⁸ 满足 v³ − 3v + 1 = 0。Galois 作用 ζ9 ↦ ζ9^k 按共轭约定
排列，使 v 依次映到 (v, 2 − v − v², −2 + v²)。

Author: QuarticPF Team
Created: 2026-03-02
"""

from functools import lru_cache
from typing import Any, Dict, Tuple

from src.fields.number_field import NFElem, NumberField, nf_create
from src.fields.rational import QQ_FIELD, is_rational
from src.fields.unipoly import UniPoly
from src.utils.config import CONVENTIONS
from src.utils.errors import FieldError
from src.utils.logger import get_logger

logger = get_logger(__name__)

ZETA9 = "zeta9"
TRACE_GEN = "v"
ORBIFOLD_GEN = "u"

# 每个约定下 ζ9 ↦ ζ9^k 的指数，按 v 的共轭顺序排列
GALOIS_EXPONENTS: Dict[str, Tuple[int, int, int]] = {
    "full": (1, 4, 2),
    "fix-zeta3": (1, 4, 7),
}


@lru_cache(maxsize=None)
def cyclotomic_field() -> NumberField:
    """Q(ζ9)，极小多项式 Φ9 = z⁶ + z³ + 1。"""
    z = UniPoly.gen(QQ_FIELD, ZETA9)
    field = nf_create(z**6 + z**3 + 1, ZETA9)
    assert isinstance(field, NumberField)
    v = zeta9(field) + zeta9(field) ** 8
    if v**3 - v * 3 + 1 != 0:
        raise FieldError("zeta9 + zeta9^8 does not satisfy v^3 - 3v + 1")
    return field


@lru_cache(maxsize=None)
def trace_field() -> NumberField:
    """Q(v)，极小多项式 v³ − 3v + 1。"""
    v = UniPoly.gen(QQ_FIELD, TRACE_GEN)
    field = nf_create(v**3 - v * 3 + 1, TRACE_GEN)
    assert isinstance(field, NumberField)
    return field


@lru_cache(maxsize=None)
def orbifold_tower() -> NumberField:
    """Q(ζ9)[u]/(u³ − ζ3/3)，容纳 (ζ3/3)^{1/3}。"""
    k = cyclotomic_field()
    u = UniPoly.gen(k, ORBIFOLD_GEN)
    field = nf_create(u**3 - zeta3(k) / 3, ORBIFOLD_GEN)
    assert isinstance(field, NumberField)
    return field


def zeta9(field: NumberField = None) -> NFElem:  # type: ignore[assignment]
    return (field or cyclotomic_field()).gen


def zeta3(field: NumberField = None) -> NFElem:  # type: ignore[assignment]
    return zeta9(field) ** 3


def v_in_cyclotomic() -> NFElem:
    """v = ζ9 + ζ9⁸ 在 Q(ζ9) 中的坐标。"""
    z = zeta9()
    return z + z**8


def embed_trace_field(x: Any) -> NFElem:
    """把 Q(v) 的元素（或有理数）嵌入 Q(ζ9)。

    Raises:
        FieldError: x 不属于 Q(v)
    """
    k = cyclotomic_field()
    if is_rational(x):
        return k.convert(x)
    if isinstance(x, NFElem) and x.field == trace_field():
        return k.convert(x.to_poly().evaluate(v_in_cyclotomic()))
    if isinstance(x, NFElem) and x.field == k:
        return x
    raise FieldError(f"cannot embed {x} into Q(zeta9)")


def apply_zeta_power(x: NFElem, k: int) -> NFElem:
    """Q(ζ9) 的自同构 ζ9 ↦ ζ9^k（k 与 9 互素）。"""
    if k % 3 == 0:
        raise FieldError(f"zeta9 -> zeta9^{k} is not an automorphism")
    return x.field.convert(x.to_poly().evaluate(zeta9(x.field) ** k))


def trace_conjugates_of_v() -> Tuple[NFElem, NFElem, NFElem]:
    f = trace_field()
    v = f.gen
    return v, -v - v**2 + 2, v**2 - 2


def galois_conjugates(x: Any, convention: str = "fix-zeta3") -> Tuple[Any, Any, Any]:
    """返回 (x⁽¹⁾, x⁽²⁾, x⁽³⁾)。

    Args:
        x: Q(v) 或 Q(ζ9) 的元素，或有理数
        convention: ``full``（k = 1, 4, 2）或 ``fix-zeta3``（k = 1, 4, 7）

    Returns:
        三个共轭，顺序使 v ↦ (v, 2 − v − v², −2 + v²)

    Raises:
        FieldError: 元素不在受支持的域中或约定未知

    Examples:
        >>> v = trace_field().gen
        >>> [str(c) for c in galois_conjugates(v)]
        ['v', '-v^2 - v + 2', 'v^2 - 2']
    """
    if convention not in CONVENTIONS:
        raise FieldError(f"unknown Galois convention: {convention}", {"allowed": list(CONVENTIONS)})
    if is_rational(x):
        q = QQ_FIELD.convert(x)
        return q, q, q
    if isinstance(x, NFElem) and x.field == trace_field():
        poly = x.to_poly()
        images = trace_conjugates_of_v()
        return tuple(x.field.convert(poly.evaluate(img)) for img in images)  # type: ignore[return-value]
    if isinstance(x, NFElem) and x.field == cyclotomic_field():
        return tuple(apply_zeta_power(x, k) for k in GALOIS_EXPONENTS[convention])  # type: ignore[return-value]
    raise FieldError(f"galois_conjugates: unsupported element {x!r}")
