"""精确有理线性代数: 行最简形, 核, 张成判定

所有结果都是约化有理数; 行最简形唯一, 因此核基和主元列在多次运行间完全一致.
内部消元交给 sympy 的 QQ 上稀疏 DomainMatrix.
"""
import logging
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple, Union

from app.models.matrix import RatMatrix, SparseRatMatrix, Vector

logger = logging.getLogger(__name__)


def rref(m: RatMatrix) -> Tuple[RatMatrix, Tuple[int, ...]]:
    """返回行最简形及严格递增的主元列"""
    if m.rows == 0 or m.cols == 0:
        return m, ()
    reduced, pivots = m.to_domain().rref()
    return RatMatrix.from_domain(reduced), tuple(int(p) for p in pivots)


def rank(m: Union[RatMatrix, SparseRatMatrix]) -> int:
    """矩阵的秩; 稀疏矩阵直接在 DomainMatrix 上消元"""
    if m.rows == 0 or m.cols == 0:
        return 0
    _, pivots = m.to_domain().rref()
    return len(pivots)


def nullity(m: Union[RatMatrix, SparseRatMatrix]) -> int:
    return m.cols - rank(m)


def kernel_basis(m: RatMatrix) -> List[Vector]:
    """零空间的基: 每个自由列对应一个向量"""
    reduced, pivots = rref(m)
    pivot_set = set(pivots)
    basis = []
    for free in range(m.cols):
        if free in pivot_set:
            continue
        v = [Fraction(0)] * m.cols
        v[free] = Fraction(1)
        for k, p in enumerate(pivots):
            v[p] = -reduced[k, free]
        basis.append(tuple(v))
    return basis


def echelon_basis(vectors: Sequence[Sequence[Fraction]], length: int) -> Tuple[List[Vector], Tuple[int, ...]]:
    """向量组张成空间的行最简基 (规范形式) 及主元列"""
    if not vectors:
        return [], ()
    reduced, pivots = rref(RatMatrix.from_rows(vectors, length))
    return [reduced.row(k) for k in range(len(pivots))], pivots


def solve_in_span(v: Sequence[Fraction], basis: Sequence[Sequence[Fraction]]) -> Optional[Vector]:
    """若 v 是 basis 的有理线性组合, 返回一组系数 (自由变量取0), 否则返回 None"""
    length = len(v)
    for b in basis:
        if len(b) != length:
            raise ValueError("所有向量长度必须相同")
    if all(x == 0 for x in v):
        return tuple(Fraction(0) for _ in basis)
    if not basis:
        return None
    k = len(basis)
    augmented = RatMatrix.from_rows(
        [[basis[j][i] for j in range(k)] + [v[i]] for i in range(length)], k + 1
    )
    reduced, pivots = rref(augmented)
    if pivots and pivots[-1] == k:
        return None
    coeffs = [Fraction(0)] * k
    for row, p in enumerate(pivots):
        coeffs[p] = reduced[row, k]
    return tuple(coeffs)


def in_span(v: Sequence[Fraction], basis: Sequence[Sequence[Fraction]]) -> bool:
    """v 是否属于 basis 张成的空间"""
    return solve_in_span(v, basis) is not None


class SparseEchelon:
    """稀疏向量的增量消元, 记录每一行由哪些原始向量组合而成

    键需可比较; 每行的主元为其最小键, 消元按主元递增顺序进行, 因此必然终止.
    """

    def __init__(self):
        self.rows = {}          # 主元 -> (行, 组合)
        self.count = 0

    def _reduce(self, v, combo):
        v = {k: Fraction(c) for k, c in v.items() if c}
        combo = dict(combo)
        while True:
            pivots = [k for k in v if k in self.rows]
            if not pivots:
                return v, combo
            k = min(pivots)
            c = v[k]
            row, row_combo = self.rows[k]
            for key, value in row.items():
                x = v.get(key, Fraction(0)) - c * value
                if x:
                    v[key] = x
                else:
                    v.pop(key, None)
            for tag, value in row_combo.items():
                x = combo.get(tag, Fraction(0)) - c * value
                if x:
                    combo[tag] = x
                else:
                    combo.pop(tag, None)

    def add(self, v, tag) -> bool:
        """加入向量 v (标记为 tag); 线性无关时返回 True"""
        reduced, combo = self._reduce(v, {tag: Fraction(1)})
        if not reduced:
            return False
        pivot = min(reduced)
        c = reduced[pivot]
        self.rows[pivot] = ({k: x / c for k, x in reduced.items()}, {t: x / c for t, x in combo.items()})
        self.count += 1
        return True

    def express(self, v):
        """若 v 在张成空间中, 返回 {tag: 系数} 使 v = Σ 系数·原始向量, 否则返回 None"""
        reduced, combo = self._reduce(v, {})
        if reduced:
            return None
        return {t: -x for t, x in combo.items() if x}

    def __len__(self):
        return self.count
