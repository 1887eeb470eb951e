from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Tuple, Union

from app.models.enums import SurjectivityStatus
from app.models.matrix import RatMatrix

MultiIndex = Tuple[int, ...]
WeylKey = Tuple[MultiIndex, MultiIndex]
Polynomial = Dict[MultiIndex, Fraction]


def _unit(r: int, i: int) -> MultiIndex:
    return tuple(1 if k == i else 0 for k in range(r))


@dataclass(frozen=True)
class WeylElement:
    """A_r 中的元素, 按正规序 q^alpha p^beta 存储, 约定 [p_i, q_j] = δ_ij"""
    r: int
    terms: Dict[WeylKey, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for (alpha, beta), c in self.terms.items():
            if len(alpha) != self.r or len(beta) != self.r:
                raise ValueError(f"多重指标长度必须为 {self.r}: {(alpha, beta)}")
            if any(a < 0 for a in alpha + beta):
                raise ValueError(f"多重指标不能为负: {(alpha, beta)}")
            if c:
                clean[(tuple(alpha), tuple(beta))] = Fraction(c)
        object.__setattr__(self, "terms", clean)

    @classmethod
    def zero(cls, r: int) -> "WeylElement":
        return cls(r, {})

    @classmethod
    def scalar(cls, r: int, c: Union[int, Fraction]) -> "WeylElement":
        return cls(r, {((0,) * r, (0,) * r): Fraction(c)})

    @classmethod
    def one(cls, r: int) -> "WeylElement":
        return cls.scalar(r, 1)

    @classmethod
    def q(cls, r: int, i: int) -> "WeylElement":
        """q_{i+1} (0 <= i < r)"""
        return cls(r, {(_unit(r, i), (0,) * r): Fraction(1)})

    @classmethod
    def p(cls, r: int, i: int) -> "WeylElement":
        """p_{i+1} = ∂/∂q_{i+1}"""
        return cls(r, {((0,) * r, _unit(r, i)): Fraction(1)})

    def is_zero(self) -> bool:
        return not self.terms

    def _check(self, other: "WeylElement"):
        if self.r != other.r:
            raise ValueError(f"Weyl 代数的秩不一致: {self.r} != {other.r}")

    def __add__(self, other: "WeylElement") -> "WeylElement":
        self._check(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, Fraction(0)) + c
        return WeylElement(self.r, out)

    def __neg__(self) -> "WeylElement":
        return WeylElement(self.r, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other: "WeylElement") -> "WeylElement":
        return self + (-other)

    def scale(self, c: Union[int, Fraction]) -> "WeylElement":
        return WeylElement(self.r, {k: c * v for k, v in self.terms.items()})

    def sorted_terms(self) -> List[Tuple[WeylKey, Fraction]]:
        return sorted(self.terms.items())

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for (alpha, beta), c in self.sorted_terms():
            factors = [f"q{i + 1}^{a}" if a > 1 else f"q{i + 1}" for i, a in enumerate(alpha) if a]
            factors += [f"p{i + 1}^{b}" if b > 1 else f"p{i + 1}" for i, b in enumerate(beta) if b]
            parts.append("*".join([str(c)] + factors) if factors else str(c))
        return " + ".join(parts)


@dataclass(frozen=True)
class InducedModuleBasis:
    """U(g) ⊗_{U(h)} k·v 的截断基 y^alpha ⊗ v

    complement 为补基 y_1..y_r 在规范基中的下标 (按次数再按基顺序递增),
    polarization_pivots 为极化行最简基的主元列.
    """
    complement: Tuple[int, ...]
    polarization_pivots: Tuple[int, ...]
    D: int
    monomials: Tuple[MultiIndex, ...]

    @property
    def r(self) -> int:
        return len(self.complement)

    def monomials_up_to(self, degree: int) -> List[MultiIndex]:
        return [m for m in self.monomials if sum(m) <= degree]


@dataclass(frozen=True)
class InducedAction:
    """每个规范基元在截断诱导模上的作用: images[k][alpha] = {alpha': 系数}"""
    basis: InducedModuleBasis
    images: Dict[int, Dict[MultiIndex, Polynomial]] = field(compare=False)


@dataclass(frozen=True)
class Witness:
    """p_i 或 q_i 由像的乘积线性表示: terms 为 (基元标签序列, 系数)"""
    target: str
    terms: Tuple[Tuple[Tuple[str, ...], Fraction], ...]


@dataclass(frozen=True)
class SurjectivityResult:
    status: SurjectivityStatus
    depth: int
    witnesses: Tuple[Witness, ...]

    @property
    def surjective(self) -> bool:
        return self.status == SurjectivityStatus.SURJECTIVE


@dataclass(frozen=True)
class WeylMapReport:
    """g → A_r 的映射: 生成元的像与各项检查结果"""
    n: int
    l: int
    weight: int
    functional: Dict[str, Fraction]
    images: Dict[str, WeylElement]
    basis_images: Dict[str, WeylElement] = field(repr=False)
    relator_check: bool
    lie_hom_check: bool
    surjectivity: Optional[SurjectivityResult]


@dataclass(frozen=True)
class PullbackModule:
    """生成元的像在 r 元多项式截断空间 (次数 <= D) 上的矩阵"""
    r: int
    D: int
    monomials: Tuple[MultiIndex, ...]
    matrices: Dict[str, RatMatrix] = field(repr=False)
    exact_below: int
    relators_vanish: bool


@dataclass(frozen=True)
class SeparationEntry:
    monomial: Dict[str, int]
    degree: int
    separated_by: Optional[str]


@dataclass(frozen=True)
class SeparationReport:
    n: int
    d: int
    entries: Tuple[SeparationEntry, ...]

    @property
    def all_separated(self) -> bool:
        return all(e.separated_by is not None for e in self.entries)
