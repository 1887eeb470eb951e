"""Hilbert 级数, Möbius 维数公式与自由性的级数恒等式"""
import logging
from math import comb
from typing import List

from sympy import divisors
from sympy.functions.combinatorial.numbers import mobius

from app.models.series import DimTable, TruncatedSeries
from app.utils.exceptions import ConsistencyError, InvalidInputError

logger = logging.getLogger(__name__)


def _require_generators(n: int):
    if n < 2:
        raise InvalidInputError(f"生成元个数 n 必须不小于2, 收到 {n}")


def _require_degree(D: int):
    if D < 0:
        raise InvalidInputError(f"截断次数不能为负, 收到 {D}")


def one_minus_t_power(n: int, D: int) -> TruncatedSeries:
    """(1 - t)^n"""
    return TruncatedSeries.from_polynomial([(-1) ** k * comb(n, k) for k in range(n + 1)], D)


def hilbert_ym(n: int, D: int) -> TruncatedSeries:
    """YM(n) 的 Hilbert 级数 1/((1-t^2)(1-nt+t^2)) 截断到 D 次"""
    _require_generators(n)
    _require_degree(D)
    denominator = TruncatedSeries.from_polynomial([1, 0, -1], D) * TruncatedSeries.from_polynomial([1, -n, 1], D)
    return denominator.inverse()


def power_sums(n: int, K: int) -> List[int]:
    """t^2 - n t + 1 两根的幂和 p_0..p_K, 由整数递推 p_k = n p_{k-1} - p_{k-2} 给出"""
    p = [2, n]
    while len(p) <= K:
        p.append(n * p[-1] - p[-2])
    return p[:K + 1]


def lie_dims_moebius(n: int, J: int) -> DimTable:
    """ym(n) 各次齐次分量的维数 N(n)_j, j = 1..J"""
    _require_generators(n)
    values = {}
    if J >= 1:
        values[1] = n
    if J >= 2:
        values[2] = n * (n - 1) // 2
    p = power_sums(n, J)
    for j in range(3, J + 1):
        total = sum(int(mobius(j // k)) * p[k] for k in divisors(j))
        if total % j:
            raise ConsistencyError("series.moebius_exact_division", f"N({n})_{j}: {total} 不能被 {j} 整除")
        values[j] = int(total // j)
        if values[j] < 0:
            raise ConsistencyError("series.moebius_nonnegative", f"N({n})_{j} = {values[j]}")
    return DimTable(n=n, values=values)


def necklace_count(n: int, j: int) -> int:
    """长度为 j 的 Lyndon 词个数 (1/j) Σ_{d|j} μ(d) n^{j/d}"""
    total = sum(int(mobius(d)) * n ** (j // d) for d in divisors(j))
    if total % j:
        raise ConsistencyError("series.necklace_exact_division", f"n={n}, j={j}")
    return int(total // j)


def pbw_product(dims: DimTable, D: int) -> TruncatedSeries:
    """Π_j (1 - t^j)^{-N_j} 截断到 D 次"""
    result = TruncatedSeries.one(D)
    for j in range(1, D + 1):
        N = dims[j]
        if N == 0:
            continue
        # (1 - t^j)^{-N} = Σ_k C(N+k-1, k) t^{jk}
        factor = [0] * (D + 1)
        for k in range(D // j + 1):
            factor[j * k] = comb(N + k - 1, k)
        result = result * TruncatedSeries(D, tuple(factor))
    return result


def pbw_check(n: int, dims: DimTable, D: int) -> bool:
    """PBW 乘积公式是否与 h_YM(n) 逐项一致"""
    return pbw_product(dims, D) == hilbert_ym(n, D)


def w_series(n: int, D: int) -> TruncatedSeries:
    """W(n)(t) = ((1-t)^n - 1 + nt - nt^3 + t^4) / (1-t)^n"""
    _require_generators(n)
    _require_degree(D)
    base = one_minus_t_power(n, D)
    numerator = base + TruncatedSeries.from_polynomial([-1, n, 0, -n, 1], D)
    return numerator / base


def euler_characteristic_series(n: int, D: int) -> TruncatedSeries:
    """Koszul 复形的 Euler 示性级数 (1 - nt + nt^3 - t^4)/(1-t)^n"""
    _require_generators(n)
    return TruncatedSeries.from_polynomial([1, -n, 0, n, -1], D) / one_minus_t_power(n, D)


def freeness_identity(n: int, D: int) -> bool:
    """h_YM(n)(t)·(1-t)^n 是否等于自由代数级数 1/(1 - W(n)(t))"""
    lhs = hilbert_ym(n, D) * one_minus_t_power(n, D)
    rhs = (TruncatedSeries.one(D) - w_series(n, D)).inverse()
    ok = lhs == rhs
    if not ok:
        logger.warning(f"自由性恒等式在 n={n}, D={D} 处不成立")
    return ok


def special_grading(s: TruncatedSeries) -> TruncatedSeries:
    """常规分次换到特殊分次 (次数加倍), 截断次数随之加倍"""
    out = [0] * (2 * s.degree + 1)
    for j, c in enumerate(s.coeffs):
        out[2 * j] = c
    return TruncatedSeries(2 * s.degree, tuple(out))
