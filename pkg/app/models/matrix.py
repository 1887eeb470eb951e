from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, List, Sequence, Tuple

from sympy import QQ
from sympy.polys.matrices import DomainMatrix

Vector = Tuple[Fraction, ...]


@dataclass(frozen=True)
class RatMatrix:
    """有理数稠密矩阵 (行优先存储, 构造后不可变)"""
    rows: int
    cols: int
    entries: Tuple[Fraction, ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ValueError("矩阵维数不能为负")
        if len(self.entries) != self.rows * self.cols:
            raise ValueError(f"元素个数 {len(self.entries)} 与 {self.rows}x{self.cols} 不符")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], cols: int = None) -> "RatMatrix":
        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        for r in rows:
            if len(r) != cols:
                raise ValueError("各行长度必须一致")
        return cls(len(rows), cols, tuple(Fraction(x) for r in rows for x in r))

    @classmethod
    def from_sparse(cls, rows: int, cols: int, data: Iterable[Tuple[int, int, Fraction]]) -> "RatMatrix":
        entries = [Fraction(0)] * (rows * cols)
        for i, j, value in data:
            entries[i * cols + j] += Fraction(value)
        return cls(rows, cols, tuple(entries))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "RatMatrix":
        return cls(rows, cols, (Fraction(0),) * (rows * cols))

    def __getitem__(self, index: Tuple[int, int]) -> Fraction:
        i, j = index
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> Vector:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def column(self, j: int) -> Vector:
        return tuple(self.entries[i * self.cols + j] for i in range(self.rows))

    def to_rows(self) -> List[List[Fraction]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def is_zero(self) -> bool:
        return all(x == 0 for x in self.entries)

    def apply(self, v: Sequence[Fraction]) -> Vector:
        """矩阵作用于列向量"""
        if len(v) != self.cols:
            raise ValueError("向量长度与列数不符")
        return tuple(
            sum((self.entries[i * self.cols + j] * v[j] for j in range(self.cols) if v[j]), Fraction(0))
            for i in range(self.rows)
        )

    def __matmul__(self, other: "RatMatrix") -> "RatMatrix":
        if self.cols != other.rows:
            raise ValueError(f"无法相乘: {self.rows}x{self.cols} 与 {other.rows}x{other.cols}")
        if self.rows == 0 or other.cols == 0 or self.cols == 0:
            return RatMatrix.zeros(self.rows, other.cols)
        return RatMatrix.from_domain(self.to_domain() * other.to_domain())

    def to_domain(self) -> DomainMatrix:
        """转换为 sympy 的 QQ 上稀疏 DomainMatrix"""
        data = {}
        for i in range(self.rows):
            row = {}
            for j in range(self.cols):
                x = self.entries[i * self.cols + j]
                if x:
                    row[j] = QQ(x.numerator, x.denominator)
            if row:
                data[i] = row
        return DomainMatrix(data, (self.rows, self.cols), QQ)

    @classmethod
    def from_domain(cls, dm: DomainMatrix) -> "RatMatrix":
        rows, cols = dm.shape
        entries = [Fraction(0)] * (rows * cols)
        for i, row in dm.to_sparse().rep.items():
            for j, x in row.items():
                entries[i * cols + j] = Fraction(int(x.numerator), int(x.denominator))
        return cls(rows, cols, tuple(entries))


@dataclass(frozen=True)
class SparseRatMatrix:
    """按行存储非零元的有理矩阵, 用于 Koszul 微分等大而稀疏的矩阵"""
    rows: int
    cols: int
    data: Dict[int, Dict[int, Fraction]] = field(compare=False)

    @classmethod
    def from_entries(cls, rows: int, cols: int, entries: Iterable[Tuple[int, int, Fraction]]) -> "SparseRatMatrix":
        data: Dict[int, Dict[int, Fraction]] = {}
        for i, j, value in entries:
            if not (0 <= i < rows and 0 <= j < cols):
                raise ValueError(f"下标 ({i},{j}) 超出 {rows}x{cols}")
            row = data.setdefault(i, {})
            row[j] = row.get(j, Fraction(0)) + Fraction(value)
        clean = {}
        for i, row in data.items():
            row = {j: x for j, x in row.items() if x}
            if row:
                clean[i] = row
        return cls(rows, cols, clean)

    def __getitem__(self, index: Tuple[int, int]) -> Fraction:
        i, j = index
        return self.data.get(i, {}).get(j, Fraction(0))

    def nnz(self) -> int:
        return sum(len(row) for row in self.data.values())

    def is_zero(self) -> bool:
        return not self.data

    def to_domain(self) -> DomainMatrix:
        data = {i: {j: QQ(x.numerator, x.denominator) for j, x in row.items()} for i, row in self.data.items()}
        return DomainMatrix(data, (self.rows, self.cols), QQ)

    def to_dense(self) -> RatMatrix:
        return RatMatrix.from_sparse(
            self.rows, self.cols, ((i, j, x) for i, row in self.data.items() for j, x in row.items())
        )

    def __matmul__(self, other: "SparseRatMatrix") -> "SparseRatMatrix":
        if self.cols != other.rows:
            raise ValueError(f"无法相乘: {self.rows}x{self.cols} 与 {other.rows}x{other.cols}")
        out: Dict[int, Dict[int, Fraction]] = {}
        for i, row in self.data.items():
            acc: Dict[int, Fraction] = {}
            for k, x in row.items():
                for j, y in other.data.get(k, {}).items():
                    acc[j] = acc.get(j, Fraction(0)) + x * y
            acc = {j: v for j, v in acc.items() if v}
            if acc:
                out[i] = acc
        return SparseRatMatrix(self.rows, other.cols, out)
