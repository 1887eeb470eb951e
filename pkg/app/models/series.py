from dataclasses import dataclass, field
from typing import Dict, Sequence, Tuple


@dataclass(frozen=True)
class TruncatedSeries:
    """整系数截断幂级数, coeffs[i] 为 t^i 的系数"""
    degree: int
    coeffs: Tuple[int, ...]

    def __post_init__(self):
        if self.degree < 0:
            raise ValueError("截断次数不能为负")
        if len(self.coeffs) != self.degree + 1:
            raise ValueError(f"系数个数应为 {self.degree + 1}")
        for c in self.coeffs:
            if not isinstance(c, int) or isinstance(c, bool):
                raise ValueError(f"系数必须为整数: {c!r}")

    @classmethod
    def from_polynomial(cls, coeffs: Sequence[int], degree: int) -> "TruncatedSeries":
        padded = list(coeffs[:degree + 1]) + [0] * max(0, degree + 1 - len(coeffs))
        return cls(degree, tuple(int(c) for c in padded))

    @classmethod
    def one(cls, degree: int) -> "TruncatedSeries":
        return cls.from_polynomial([1], degree)

    def _check(self, other: "TruncatedSeries"):
        if self.degree != other.degree:
            raise ValueError(f"截断次数不一致: {self.degree} != {other.degree}")

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._check(other)
        return TruncatedSeries(self.degree, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._check(other)
        return TruncatedSeries(self.degree, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries(self.degree, tuple(-a for a in self.coeffs))

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._check(other)
        out = [0] * (self.degree + 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j in range(self.degree + 1 - i):
                    out[i + j] += a * other.coeffs[j]
        return TruncatedSeries(self.degree, tuple(out))

    def inverse(self) -> "TruncatedSeries":
        """常数项为 ±1 时的整系数逆"""
        c0 = self.coeffs[0]
        if c0 not in (1, -1):
            raise ArithmeticError(f"常数项 {c0} 不可逆, 逆级数将出现非整数系数")
        inv = [0] * (self.degree + 1)
        inv[0] = c0
        for k in range(1, self.degree + 1):
            s = sum(self.coeffs[i] * inv[k - i] for i in range(1, k + 1))
            inv[k] = -c0 * s
        return TruncatedSeries(self.degree, tuple(inv))

    def __truediv__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return self * other.inverse()

    def __pow__(self, exponent: int) -> "TruncatedSeries":
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = TruncatedSeries.one(self.degree)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def as_list(self):
        return list(self.coeffs)


@dataclass(frozen=True)
class DimTable:
    """李代数各齐次分量的维数表 N(n)_j"""
    n: int
    values: Dict[int, int] = field(default_factory=dict)

    def __post_init__(self):
        for j, v in self.values.items():
            if v < 0:
                raise ValueError(f"维数不能为负: N({self.n})_{j} = {v}")

    def __getitem__(self, j: int) -> int:
        return self.values.get(j, 0)

    def degrees(self):
        return sorted(self.values)

    def as_list(self, max_degree: int):
        return [self[j] for j in range(1, max_degree + 1)]
