"""Koszul 复形 C_•(YM(n), S(V(n))) 的逐片构造与精确同调维数

d_•^p 的上标为源空间中 S(V) 的次数:
  d_1^p: S^p⊗V → S^{p+1},      w⊗x_i ↦ x_i w
  d_2^p: S^p⊗V → S^{p+2}⊗V,    w⊗x_i ↦ Σ_j (x_j^2 w⊗x_i - x_i x_j w⊗x_j)
  d_3^p: S^p → S^{p+1}⊗V,      w ↦ Σ_i x_i w⊗x_i
H_1^p = Ker d_1^p / Im d_2^{p-2}, 生成元空间 W(n)_m ≅ H_1^{m-1}.
"""
import logging
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import List

from app.models.koszul import HomologyDims, KoszulSlice, Monomial, SymBasis
from app.models.matrix import SparseRatMatrix
from app.models.series import TruncatedSeries
from app.services import exactalg, series
from app.utils.exceptions import ConsistencyError, InvalidInputError

logger = logging.getLogger(__name__)


def _validate(n: int, p: int):
    if n < 2:
        raise InvalidInputError(f"生成元个数 n 必须不小于2, 收到 {n}")
    if p < 0:
        raise InvalidInputError(f"片下标 p 不能为负, 收到 {p}")


def _shift(alpha: Monomial, *indices: int) -> Monomial:
    out = list(alpha)
    for i in indices:
        out[i] += 1
    return tuple(out)


@lru_cache(maxsize=None)
def sym_basis(n: int, p: int) -> SymBasis:
    return SymBasis(n, p)


@lru_cache(maxsize=None)
def d1(n: int, p: int) -> SparseRatMatrix:
    source, target = sym_basis(n, p), sym_basis(n, p + 1)
    entries = []
    for alpha in source.monomials:
        for i in range(n):
            entries.append((target.index[_shift(alpha, i)], source.tensor_index(alpha, i), Fraction(1)))
    return SparseRatMatrix.from_entries(len(target), len(source) * n, entries)


@lru_cache(maxsize=None)
def d2(n: int, p: int) -> SparseRatMatrix:
    source, target = sym_basis(n, p), sym_basis(n, p + 2)
    entries = []
    for alpha in source.monomials:
        for i in range(n):
            col = source.tensor_index(alpha, i)
            for j in range(n):
                entries.append((target.tensor_index(_shift(alpha, j, j), i), col, Fraction(1)))
                entries.append((target.tensor_index(_shift(alpha, i, j), j), col, Fraction(-1)))
    return SparseRatMatrix.from_entries(len(target) * n, len(source) * n, entries)


@lru_cache(maxsize=None)
def d3(n: int, p: int) -> SparseRatMatrix:
    source, target = sym_basis(n, p), sym_basis(n, p + 1)
    entries = []
    for alpha in source.monomials:
        for i in range(n):
            entries.append((target.tensor_index(_shift(alpha, i), i), source.index[alpha], Fraction(1)))
    return SparseRatMatrix.from_entries(len(target) * n, len(source), entries)


def build_slice(n: int, p: int) -> KoszulSlice:
    """第 p 片的三个微分矩阵, 并验证相邻复合为零"""
    _validate(n, p)
    slice_ = KoszulSlice(n=n, p=p, d3=d3(n, p - 1), d2=d2(n, p), d1=d1(n, p + 2))
    if not (slice_.d1 @ slice_.d2).is_zero():
        raise ConsistencyError("koszul.d1_d2_zero", f"n={n}, p={p}")
    if not (slice_.d2 @ slice_.d3).is_zero():
        raise ConsistencyError("koszul.d2_d3_zero", f"n={n}, p={p}")
    return slice_


@lru_cache(maxsize=None)
def _rank(kind: str, n: int, p: int) -> int:
    if p < 0:
        return 0
    matrix = {"d1": d1, "d2": d2, "d3": d3}[kind](n, p)
    return exactalg.rank(matrix)


def homology_dims(n: int, p: int) -> HomologyDims:
    """H_0^p, H_1^p, H_2^p, H_3^p 的维数"""
    _validate(n, p)
    s_p = len(sym_basis(n, p))
    h0 = s_p - _rank("d1", n, p - 1)
    h1 = s_p * n - _rank("d1", n, p) - _rank("d2", n, p - 2)
    h2 = s_p * n - _rank("d2", n, p) - _rank("d3", n, p - 1)
    h3 = s_p - _rank("d3", n, p)
    dims = HomologyDims(p=p, h0=h0, h1=h1, h2=h2, h3=h3)
    logger.debug(f"Koszul n={n}, p={p}: {dims.as_tuple()}")
    return dims


def closed_form_h1(n: int, p: int) -> int:
    """dim H_1^p 的闭式公式

    p ∈ {0, 1} 时带与不带 p! 因子的写法取值相同.
    """
    _validate(n, p)

    def term(a: int, b: int) -> int:
        # (n+a)! / ((n-1)! b!)
        return factorial(n + a) // (factorial(n - 1) * factorial(b))

    base = n * term(p - 1, p) - term(p, p + 1)
    if p <= 1:
        return base
    if p == 2:
        return base - n
    return base - n * term(p - 3, p - 2) + term(p - 4, p - 3)


def kernel_d1_dim(n: int, p: int) -> int:
    """dim Ker d_1^p = n·C(n+p-1,p) - C(n+p,p+1)"""
    _validate(n, p)
    return len(sym_basis(n, p)) * n - _rank("d1", n, p)


def w_dims(n: int, M: int) -> List[int]:
    """W(n)_m = dim H_1^{m-1}, m = 2..M; 与 series.w_series 逐项比对"""
    if M < 2:
        raise InvalidInputError(f"最高次数 M 必须不小于2, 收到 {M}")
    dims = [homology_dims(n, m - 1).h1 for m in range(2, M + 1)]
    expected = series.w_series(n, M).coeffs[2:]
    if list(expected) != dims:
        raise ConsistencyError("koszul.w_dims_match_series", f"n={n}: Koszul {dims} != 级数 {list(expected)}")
    logger.info(f"W({n}) 各次维数 (m=2..{M}): {dims}")
    return dims


def euler_characteristic(n: int, D: int) -> TruncatedSeries:
    """由同调维数拼出的 Euler 示性级数

    总次数 m 的分量: H_0^m, H_1^{m-1}, H_2^{m-3}, H_3^{m-4}.
    """
    coeffs = []
    for m in range(D + 1):
        value = homology_dims(n, m).h0
        if m >= 1:
            value -= homology_dims(n, m - 1).h1
        if m >= 3:
            value += homology_dims(n, m - 3).h2
        if m >= 4:
            value -= homology_dims(n, m - 4).h3
        coeffs.append(value)
    return TruncatedSeries(D, tuple(coeffs))


def euler_check(n: int, D: int) -> bool:
    return euler_characteristic(n, D) == series.euler_characteristic_series(n, D)
