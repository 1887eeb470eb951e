from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Sequence, Tuple

from app.models.matrix import Vector
from app.models.nilpotent import GradedNilpotentLie


@dataclass(frozen=True)
class Functional:
    """g* 中的线性泛函, coords[k] = f(e_k)"""
    algebra: GradedNilpotentLie = field(repr=False)
    coords: Vector

    def __post_init__(self):
        if len(self.coords) != self.algebra.dim:
            raise ValueError(f"泛函坐标个数 {len(self.coords)} 与代数维数 {self.algebra.dim} 不符")

    def __call__(self, v: Sequence[Fraction]) -> Fraction:
        return sum((a * b for a, b in zip(self.coords, v) if a and b), Fraction(0))

    def on_bracket(self, a: int, b: int) -> Fraction:
        """f([e_a, e_b])"""
        return sum((c * self.coords[k] for k, c in self.algebra.bracket_basis(a, b).items()), Fraction(0))

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords)

    def by_label(self) -> Dict[str, Fraction]:
        return {self.algebra.basis[k].label: c for k, c in enumerate(self.coords) if c}


@dataclass(frozen=True)
class Subspace:
    """g 的子空间; basis 取行最简形 (规范基坐标), 相等的子空间表示相同"""
    algebra: GradedNilpotentLie = field(repr=False)
    basis: Tuple[Vector, ...]

    @property
    def dim(self) -> int:
        return len(self.basis)

    def labels(self) -> List[Dict[str, Fraction]]:
        """每个基向量按规范标签展开"""
        return [{self.algebra.basis[k].label: c for k, c in enumerate(v) if c} for v in self.basis]


@dataclass(frozen=True)
class PolarizationReport:
    f: Functional
    radical_dim: int
    polarization: Subspace
    weight: int
