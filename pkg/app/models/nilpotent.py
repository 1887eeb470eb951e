from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from app.models.lie import Word
from app.models.matrix import RatMatrix, Vector

SparseVector = Dict[int, Fraction]


@dataclass(frozen=True)
class BasisElement:
    """商代数的一个基元: 某个 Lyndon 词标准括号化的像"""
    index: int
    degree: int
    word: Word
    label: str        # 规范标签, 如 "x112"
    tree: str         # 括号树, 如 "[x1,[x1,x2]]"


@dataclass(frozen=True)
class QuotientReducer:
    """某一次数上模去理想的约化数据

    ideal_rows 为理想的行最简基 (列按字典序逆序排列, 因此主元落在较大的词上),
    survivors 为非主元词, 它们的像构成商空间的基.
    """
    degree: int
    words: Tuple[Word, ...]
    ideal_rows: Tuple[Tuple[Word, Tuple[Tuple[Word, Fraction], ...]], ...]
    survivors: Tuple[Word, ...]

    def reduce(self, coords: Mapping[Word, Fraction]) -> Dict[Word, Fraction]:
        """Lyndon 坐标模去理想后在 survivors 上的坐标"""
        out = {w: Fraction(c) for w, c in coords.items() if c}
        for pivot, row in self.ideal_rows:
            c = out.get(pivot)
            if not c:
                continue
            for w, d in row:
                value = out.get(w, Fraction(0)) - c * d
                if value:
                    out[w] = value
                else:
                    out.pop(w, None)
        return out

    @property
    def ideal_dim(self) -> int:
        return len(self.ideal_rows)


@dataclass(frozen=True)
class GradedNilpotentLie:
    """ym(n)/C^l(ym(n)): 分次基与精确结构常数"""
    n: int
    l: int
    basis: Tuple[BasisElement, ...]
    structure: Dict[Tuple[int, int], Tuple[Tuple[int, Fraction], ...]] = field(compare=False, repr=False)
    reducers: Dict[int, QuotientReducer] = field(compare=False, repr=False)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def degree_dims(self) -> List[int]:
        dims = [0] * self.l
        for b in self.basis:
            dims[b.degree - 1] += 1
        return dims

    def index_of_label(self, label: str) -> Optional[int]:
        for b in self.basis:
            if b.label == label:
                return b.index
        return None

    def generator_index(self, i: int) -> int:
        """生成元 x_i 的基下标 (1 <= i <= n)"""
        return i - 1

    def bracket_basis(self, a: int, b: int) -> SparseVector:
        """[e_a, e_b] 的坐标"""
        if a == b:
            return {}
        if a < b:
            return dict(self.structure.get((a, b), ()))
        return {k: -c for k, c in self.structure.get((b, a), ())}

    def bracket(self, u: Sequence[Fraction], v: Sequence[Fraction]) -> Vector:
        """稠密坐标向量的括号"""
        out = [Fraction(0)] * self.dim
        support_u = [(a, c) for a, c in enumerate(u) if c]
        support_v = [(b, d) for b, d in enumerate(v) if d]
        for a, c in support_u:
            for b, d in support_v:
                for k, e in self.bracket_basis(a, b).items():
                    out[k] += c * d * e
        return tuple(out)

    def unit_vector(self, index: int) -> Vector:
        v = [Fraction(0)] * self.dim
        v[index] = Fraction(1)
        return tuple(v)

    def zero_vector(self) -> Vector:
        return (Fraction(0),) * self.dim

    def ad_matrix(self, x: Sequence[Fraction]) -> RatMatrix:
        """ad x 在规范基下的矩阵 (第 b 列为 [x, e_b])"""
        data = []
        for a, c in enumerate(x):
            if not c:
                continue
            for b in range(self.dim):
                for k, e in self.bracket_basis(a, b).items():
                    data.append((k, b, c * e))
        return RatMatrix.from_sparse(self.dim, self.dim, data)


@dataclass(frozen=True)
class LieElementQ:
    """商代数中的元素 (稠密坐标)"""
    algebra: GradedNilpotentLie = field(repr=False)
    coords: Vector

    def __post_init__(self):
        if len(self.coords) != self.algebra.dim:
            raise ValueError("坐标个数与代数维数不符")

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords)

    def by_label(self) -> Dict[str, Fraction]:
        return {self.algebra.basis[k].label: c for k, c in enumerate(self.coords) if c}

    def __add__(self, other: "LieElementQ") -> "LieElementQ":
        return LieElementQ(self.algebra, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> "LieElementQ":
        return LieElementQ(self.algebra, tuple(-a for a in self.coords))

    def __sub__(self, other: "LieElementQ") -> "LieElementQ":
        return self + (-other)

    def scale(self, c) -> "LieElementQ":
        return LieElementQ(self.algebra, tuple(c * a for a in self.coords))


Exponents = Tuple[int, ...]


@dataclass(frozen=True)
class PBWMonomialTable:
    """截断到 D 次的 PBW 有序单项式表 (次数优先的字典序)"""
    D: int
    monomials: Tuple[Exponents, ...]
    degrees: Tuple[int, ...]

    def counts(self) -> List[int]:
        out = [0] * (self.D + 1)
        for d in self.degrees:
            out[d] += 1
        return out

    def in_degree(self, j: int) -> List[Exponents]:
        return [m for m, d in zip(self.monomials, self.degrees) if d == j]


PBWElement = Dict[Exponents, Fraction]
