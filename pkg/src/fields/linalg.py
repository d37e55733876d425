"""精确线性代数。

两套消元：

- ``RowEchelon``：域上的稀疏 Gauss-Jordan 消元，记录可重放的行操作，
  同一系数矩阵可以对任意多个右端向量求解（Jacobian 约化的核心）。
- ``fraction_free_gauss_jordan``：多项式环上的无分式（Bareiss 型）
  Gauss-Jordan 消元，用于在 Q(s) 上清分母后求秩与核向量。

Author: QuarticPF Team
Created: 2026-03-03
"""

from collections import defaultdict
from dataclasses import dataclass, field
from typing import Any, Dict, Hashable, List, Optional, Sequence, Set, Tuple

from src.fields.base import Field
from src.fields.unipoly import UniPoly
from src.utils.logger import get_logger

logger = get_logger(__name__)

Row = Dict[Hashable, Any]


class RowEchelon:
    """域上稀疏矩阵的约化行阶梯形。

    行是 {列键: 非零值} 的字典。主元按列顺序选取，同列候选中优先
    元素规模小、行短的行；所有行操作写入 ``ops`` 以便对右端重放。

    Attributes:
        field: 系数域
        n_rows: 行数
        pivots: {列键: 主元行号}
        ops: 行操作日志，("scale", p, c) 或 ("axpy", i, p, f)

    Examples:
        >>> ech = RowEchelon(QQ_FIELD, [{"a": QQ(2)}, {"a": QQ(1)}], ["a"])
        >>> ech.rank
        1
    """

    def __init__(self, field: Field, rows: Sequence[Row], columns: Sequence[Hashable]) -> None:
        self.field = field
        self.n_rows = len(rows)
        self.columns = list(columns)
        self.pivots: Dict[Hashable, int] = {}
        self.ops: List[Tuple[Any, ...]] = []
        self._rows: List[Row] = [
            {c: v for c, v in r.items() if not field.is_zero(v)} for r in rows
        ]
        self._eliminate()

    def _eliminate(self) -> None:
        field = self.field
        one, zero, is_zero, size = field.one, field.zero, field.is_zero, field.size
        rows = self._rows
        col_rows: Dict[Hashable, Set[int]] = defaultdict(set)
        for i, r in enumerate(rows):
            for c in r:
                col_rows[c].add(i)
        used: Set[int] = set()

        for c in self.columns:
            candidates = [i for i in col_rows[c] if i not in used]
            if not candidates:
                continue
            p = min(candidates, key=lambda i: (size(rows[i][c]), len(rows[i]), i))
            pivot_val = rows[p][c]
            if pivot_val != one:
                inv = one / pivot_val
                rows[p] = {cc: val * inv for cc, val in rows[p].items()}
                self.ops.append(("scale", p, inv))
            used.add(p)
            self.pivots[c] = p
            prow = rows[p]
            for i in list(col_rows[c]):
                if i == p:
                    continue
                f = rows[i][c]
                target = rows[i]
                for cc, val in prow.items():
                    new = target.get(cc, zero) - f * val
                    if is_zero(new):
                        target.pop(cc, None)
                        col_rows[cc].discard(i)
                    else:
                        target[cc] = new
                        col_rows[cc].add(i)
                self.ops.append(("axpy", i, p, f))
        logger.debug(
            f"row echelon: {self.n_rows} rows, {len(self.columns)} columns, "
            f"rank {len(self.pivots)}, {len(self.ops)} ops"
        )

    @property
    def rank(self) -> int:
        return len(self.pivots)

    @property
    def pivot_rows(self) -> Set[int]:
        return set(self.pivots.values())

    @property
    def free_rows(self) -> List[int]:
        """没有主元的行（零行），其重放值就是相容性条件。"""
        used = self.pivot_rows
        return [i for i in range(self.n_rows) if i not in used]

    def replay(self, vector: Sequence[Any]) -> List[Any]:
        """对右端向量重放全部行操作。"""
        v = list(vector)
        for op in self.ops:
            if op[0] == "scale":
                _, p, c = op
                v[p] = v[p] * c
            else:
                _, i, p, f = op
                if not self.field.is_zero(v[p]):
                    v[i] = v[i] - f * v[p]
        return v

    def solve(self, rhs: Sequence[Any]) -> Tuple[Dict[Hashable, Any], Dict[int, Any]]:
        """求解 A·x = rhs（自由变量取零）。

        Returns:
            (解 {列键: 值}, 残差 {零行号: 非零值})；残差为空当且仅当有解
        """
        v = self.replay(rhs)
        solution = {
            c: v[p] for c, p in self.pivots.items() if not self.field.is_zero(v[p])
        }
        residual = {i: v[i] for i in self.free_rows if not self.field.is_zero(v[i])}
        return solution, residual

    def residual_vector(self, rhs: Sequence[Any]) -> List[Any]:
        """右端在零行上的重放值（按 free_rows 顺序）。"""
        v = self.replay(rhs)
        return [v[i] for i in self.free_rows]


def solve_linear_system(
    field: Field, matrix: Sequence[Sequence[Any]], rhs: Sequence[Any]
) -> Optional[List[Any]]:
    """稠密小方程组求解，无解返回 None。"""
    n_cols = len(matrix[0]) if matrix else 0
    rows = [{j: a for j, a in enumerate(row)} for row in matrix]
    ech = RowEchelon(field, rows, range(n_cols))
    solution, residual = ech.solve(rhs)
    if residual:
        return None
    return [solution.get(j, field.zero) for j in range(n_cols)]


# ============ 无分式消元 ============


@dataclass
class FractionFreeResult:
    """无分式 Gauss-Jordan 的结果。

    Attributes:
        matrix: 约化后的矩阵；每个主元位置的值都等于 den
        pivot_cols: 主元列（按行顺序）
        den: 最后一个主元（所有主元的公共值）
    """

    matrix: List[List[UniPoly]]
    pivot_cols: List[int]
    den: UniPoly
    rank_profile: List[int] = field(default_factory=list)

    @property
    def rank(self) -> int:
        return len(self.pivot_cols)

    def kernel_vector(self, free_col: int) -> List[UniPoly]:
        """自由列 free_col 对应的核向量（其余自由列取零）。"""
        n_cols = len(self.matrix[0])
        zero = UniPoly.zero(self.den.field, self.den.var)
        k = [zero] * n_cols
        k[free_col] = self.den
        for i, c in enumerate(self.pivot_cols):
            k[c] = -self.matrix[i][free_col]
        return k


def fraction_free_gauss_jordan(matrix: Sequence[Sequence[UniPoly]]) -> FractionFreeResult:
    """多项式矩阵的无分式 Gauss-Jordan 消元。

    每步用 (a·M[i][j] − b·M[r][j]) / den 更新非主元行，除法总是精确的；
    消元结束后所有主元都等于最后的 den。rank_profile[j] 是前 j+1 列的秩。

    Args:
        matrix: 行列表，元素为同一变量的 UniPoly

    Returns:
        FractionFreeResult
    """
    m = [list(row) for row in matrix]
    if not m:
        raise ValueError("empty matrix")
    n_rows, n_cols = len(m), len(m[0])
    sample = m[0][0]
    den = UniPoly.one(sample.field, sample.var)
    pivot_cols: List[int] = []
    profile: List[int] = []
    r = 0
    for c in range(n_cols):
        candidates = [i for i in range(r, n_rows) if not m[i][c].is_zero()]
        if candidates:
            p = min(candidates, key=lambda i: (m[i][c].degree, m[i][c].size(), i))
            m[r], m[p] = m[p], m[r]
            a = m[r][c]
            for i in range(n_rows):
                if i == r:
                    continue
                b = m[i][c]
                for j in range(n_cols):
                    if j == c:
                        continue
                    val = a * m[i][j]
                    if not b.is_zero():
                        val = val - b * m[r][j]
                    m[i][j] = val.exquo(den) if not den.is_one() else val
                m[i][c] = UniPoly.zero(a.field, a.var)
            den = a
            pivot_cols.append(c)
            r += 1
        profile.append(r)
        if r == n_rows:
            profile.extend([r] * (n_cols - c - 1))
            break
    return FractionFreeResult(matrix=m, pivot_cols=pivot_cols, den=den, rank_profile=profile)
