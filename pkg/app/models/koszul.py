from dataclasses import dataclass, field
from itertools import combinations_with_replacement
from math import comb
from typing import Dict, Tuple

from app.models.matrix import SparseRatMatrix

Monomial = Tuple[int, ...]


@dataclass(frozen=True)
class SymBasis:
    """S^p(V(n)) 的单项式基, 按次数字典序 (x_1^p 在最前) 排列"""
    n: int
    p: int
    monomials: Tuple[Monomial, ...] = field(init=False)
    index: Dict[Monomial, int] = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        monomials = []
        if self.p >= 0:
            for combo in combinations_with_replacement(range(self.n), self.p):
                alpha = [0] * self.n
                for i in combo:
                    alpha[i] += 1
                monomials.append(tuple(alpha))
        object.__setattr__(self, "monomials", tuple(monomials))
        object.__setattr__(self, "index", {m: k for k, m in enumerate(monomials)})
        expected = comb(self.n + self.p - 1, self.p) if self.p >= 0 else 0
        if len(monomials) != expected:
            raise ValueError(f"S^{self.p} 单项式个数 {len(monomials)} != {expected}")

    def __len__(self):
        return len(self.monomials)

    def tensor_index(self, alpha: Monomial, i: int) -> int:
        """S^p ⊗ V 中 x^alpha ⊗ x_{i+1} 的下标"""
        return self.index[alpha] * self.n + i


@dataclass(frozen=True)
class KoszulSlice:
    """第 p 片: d_3^{p-1}: S^{p-1} → S^p⊗V, d_2^p: S^p⊗V → S^{p+2}⊗V, d_1^{p+2}: S^{p+2}⊗V → S^{p+3}"""
    n: int
    p: int
    d3: SparseRatMatrix = field(repr=False)
    d2: SparseRatMatrix = field(repr=False)
    d1: SparseRatMatrix = field(repr=False)


@dataclass(frozen=True)
class HomologyDims:
    p: int
    h0: int
    h1: int
    h2: int
    h3: int

    def as_tuple(self) -> Tuple[int, int, int, int]:
        return self.h0, self.h1, self.h2, self.h3
