"""t 表示纤维在仿射图 Z = 1 上的实点采样。

对网格上的每个有理数 x，F_t(x, y, 1) 是 Q 上关于 y 的多项式，
实根先精确隔离再取浮点值。这是本包中唯一的浮点输出。

Author: QuarticPF Team
Created: 2026-03-11
"""

import csv
import io
from dataclasses import dataclass
from typing import Any, List, Tuple

from src.fields.rational import QQ_FIELD, format_rational
from src.fields.sympy_bridge import qq_real_roots
from src.fields.unipoly import UniPoly
from src.kenyon_smillie.family import T_FORM, family, parameter_value
from src.utils.errors import PolynomialError
from src.utils.logger import get_logger

logger = get_logger(__name__)

CSV_HEADER = ("x", "y")


@dataclass(frozen=True)
class RealPoint:
    x: Any
    y: float

    def row(self) -> Tuple[str, str]:
        return format_rational(self.x), repr(self.y)


def sample_real_points(t: Any = 3, x_range: Tuple[Any, Any] = (-3, 3), steps: int = 60) -> List[RealPoint]:
    """
    采样 F_t(x, y, 1) = 0 的实点

    Args:
        t: 参数值
        x_range: x 的闭区间（有理端点）
        steps: 区间等分数

    Returns:
        按 (x, y) 排序的实点

    Raises:
        PolynomialError: steps 非正或区间为空
    """
    if steps < 1:
        raise PolynomialError(f"steps must be positive, got {steps}")
    lo, hi = (parameter_value(v) for v in x_range)
    if hi < lo:
        raise PolynomialError("empty x-range", {"range": [str(lo), str(hi)]})
    fiber = family(T_FORM, t)
    y = UniPoly.gen(QQ_FIELD, "y")
    points: List[RealPoint] = []
    for i in range(steps + 1):
        x = lo + (hi - lo) * QQ_FIELD.convert(i) / steps
        g = fiber.evaluate([UniPoly.constant(QQ_FIELD, x, "y"), y, UniPoly.one(QQ_FIELD, "y")])
        if not isinstance(g, UniPoly):
            continue
        points.extend(RealPoint(x, r) for r in qq_real_roots(g.coeffs))
    logger.info(f"sampled {len(points)} real points of the t = {t} fiber")
    return points


def to_csv(points: List[RealPoint]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    writer.writerows(p.row() for p in points)
    return buffer.getvalue()
