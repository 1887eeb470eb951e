"""Yang-Mills 李代数的幂零商 ym(n)/C^l(ym(n))

构造按次数进行: 第 j 次的自由部分取长度为 j 的 Lyndon 词; 理想在 3 次由 n 个关系元
Σ_i [x_i,[x_i,x_j]] 张成, 在 j >= 4 次取 I_j = [V, I_{j-1}].
后者成立是因为 f(n) 由 1 次元生成: 任意元素的 ad 由生成元的 ad 生成,
所以理想 <R> 的 j 次分量恰为 [V, I_{j-1}].
"""
import logging
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Dict, List, Mapping, Sequence, Tuple

from app.config.settings import settings
from app.models.lie import BracketTree, FreeLieElement, Word
from app.models.matrix import RatMatrix, Vector
from app.models.nilpotent import (
    BasisElement, Exponents, GradedNilpotentLie, LieElementQ, PBWElement,
    PBWMonomialTable, QuotientReducer,
)
from app.services import exactalg, freelie, series
from app.services.catalog import REFERENCE_BASES, REFERENCE_IDENTITIES
from app.utils.exceptions import ConsistencyError, InvalidInputError, UnsupportedError

logger = logging.getLogger(__name__)


def _validate(n: int, l: int):
    if not 2 <= n <= settings.max_generators:
        raise InvalidInputError(f"生成元个数 n 必须在 2..{settings.max_generators} 之间, 收到 {n}")
    if not 1 <= l <= settings.degree_cap:
        raise InvalidInputError(f"截断 l 必须在 1..{settings.degree_cap} 之间, 收到 {l}")


@lru_cache(maxsize=None)
def _ad_generator_images(n: int, j: int) -> Dict[Tuple[int, Word], Tuple[Tuple[Word, Fraction], ...]]:
    # [x_i, P_w] 的 Lyndon 坐标, w 取遍 j 次 Lyndon 词
    images = {}
    for i in range(1, n + 1):
        xi = FreeLieElement.basis(n, (i,))
        for w in freelie._lyndon_words(n, j):
            e = freelie.bracket(xi, FreeLieElement.basis(n, w))
            images[(i, w)] = tuple(sorted(e.terms.items()))
    return images


def _relators(n: int) -> List[FreeLieElement]:
    out = []
    for j in range(1, n + 1):
        xj = FreeLieElement.basis(n, (j,))
        r = FreeLieElement.zero(n)
        for i in range(1, n + 1):
            xi = FreeLieElement.basis(n, (i,))
            r = r + freelie.bracket(xi, freelie.bracket(xi, xj))
        out.append(r)
    return out


def _echelon_ideal(words: Tuple[Word, ...], gens: List[Dict[Word, Fraction]], degree: int) -> QuotientReducer:
    order = list(reversed(words))
    column = {w: k for k, w in enumerate(order)}
    rows = []
    for g in gens:
        row = [Fraction(0)] * len(order)
        for w, c in g.items():
            row[column[w]] = c
        rows.append(row)
    echelon, pivots = exactalg.echelon_basis(rows, len(order))
    ideal_rows = []
    for row, p in zip(echelon, pivots):
        entries = tuple((order[k], c) for k, c in enumerate(row) if c)
        ideal_rows.append((order[p], entries))
    pivot_words = {order[p] for p in pivots}
    survivors = tuple(w for w in words if w not in pivot_words)
    return QuotientReducer(degree=degree, words=words, ideal_rows=tuple(ideal_rows), survivors=survivors)


def build(n: int, l: int) -> GradedNilpotentLie:
    """构造 ym(n)/C^l(ym(n)) 并在返回前验证其不变量"""
    _validate(n, l)
    return _build(n, l)


@lru_cache(maxsize=None)
def _build(n: int, l: int) -> GradedNilpotentLie:
    expected = series.lie_dims_moebius(n, l)
    reducers: Dict[int, QuotientReducer] = {}
    ideal_prev: List[Dict[Word, Fraction]] = []
    for j in range(1, l + 1):
        words = freelie._lyndon_words(n, j)
        if j < 3:
            gens = []
        elif j == 3:
            gens = [dict(r.terms) for r in _relators(n)]
        else:
            ad = _ad_generator_images(n, j - 1)
            gens = []
            for i in range(1, n + 1):
                for v in ideal_prev:
                    g: Dict[Word, Fraction] = {}
                    for w, c in v.items():
                        for u, d in ad[(i, w)]:
                            g[u] = g.get(u, Fraction(0)) + c * d
                    gens.append({u: c for u, c in g.items() if c})
        reducer = _echelon_ideal(words, gens, j)
        reducers[j] = reducer
        ideal_prev = [dict(row) for _, row in reducer.ideal_rows]
        if len(reducer.survivors) != expected[j]:
            raise ConsistencyError(
                "ymquotient.dim_matches_moebius",
                f"n={n}, 次数 {j}: 商空间维数 {len(reducer.survivors)} != N({n})_{j} = {expected[j]}",
            )
        logger.info(f"ym({n}) 第 {j} 次: 自由维数 {len(words)}, 理想维数 {reducer.ideal_dim}, 商维数 {len(reducer.survivors)}")

    basis = []
    for j in range(1, l + 1):
        for w in reducers[j].survivors:
            tree = freelie._bracketing(w)
            basis.append(BasisElement(index=len(basis), degree=j, word=w,
                                      label="x" + freelie.word_label(w), tree=str(tree)))
    word_index = {b.word: b.index for b in basis}

    structure: Dict[Tuple[int, int], Tuple[Tuple[int, Fraction], ...]] = {}
    for a, b in combinations(range(len(basis)), 2):
        ea, eb = basis[a], basis[b]
        degree = ea.degree + eb.degree
        if degree > l:
            continue
        if ea.degree == 1:
            terms = dict(_ad_generator_images(n, eb.degree)[(ea.word[0], eb.word)])
        else:
            terms = freelie.bracket(FreeLieElement.basis(n, ea.word), FreeLieElement.basis(n, eb.word)).terms
        reduced = reducers[degree].reduce(terms)
        if reduced:
            structure[(a, b)] = tuple(sorted((word_index[w], c) for w, c in reduced.items()))

    g = GradedNilpotentLie(n=n, l=l, basis=tuple(basis), structure=structure, reducers=reducers)
    _verify(g)
    return g


def _verify(g: GradedNilpotentLie):
    for (a, b), terms in g.structure.items():
        degree = g.basis[a].degree + g.basis[b].degree
        for k, _ in terms:
            if g.basis[k].degree != degree:
                raise ConsistencyError("ymquotient.grading", f"[{g.basis[a].label},{g.basis[b].label}] 落在错误的次数")
    for j in range(1, g.n + 1):
        r = relator_element(g, j)
        if not r.is_zero():
            raise ConsistencyError("ymquotient.relators_vanish", f"关系元 j={j} 未约化为0")
    if g.l <= settings.jacobi_check_max_degree:
        bad = jacobi_violations(g)
        if bad:
            a, b, c = bad[0]
            raise ConsistencyError("ymquotient.jacobi", f"基三元组 ({a},{b},{c}) 不满足 Jacobi 恒等式")
    logger.debug(f"ym({g.n})/C^{g.l} 不变量验证通过, 维数 {g.dim}")


def _bracket_sparse(g: GradedNilpotentLie, u: Mapping[int, Fraction], v: Mapping[int, Fraction]) -> Dict[int, Fraction]:
    out: Dict[int, Fraction] = {}
    for a, c in u.items():
        for b, d in v.items():
            for k, e in g.bracket_basis(a, b).items():
                out[k] = out.get(k, Fraction(0)) + c * d * e
    return {k: c for k, c in out.items() if c}


def jacobi_violations(g: GradedNilpotentLie) -> List[Tuple[int, int, int]]:
    """所有不满足 Jacobi 恒等式的基三元组 a < b < c"""
    bad = []
    for a, b, c in combinations(range(g.dim), 3):
        if g.basis[a].degree + g.basis[b].degree + g.basis[c].degree > g.l:
            continue
        ea, eb, ec = {a: Fraction(1)}, {b: Fraction(1)}, {c: Fraction(1)}
        total: Dict[int, Fraction] = {}
        for x, y, z in ((ea, eb, ec), (eb, ec, ea), (ec, ea, eb)):
            for k, v in _bracket_sparse(g, x, _bracket_sparse(g, y, z)).items():
                total[k] = total.get(k, Fraction(0)) + v
        if any(total.values()):
            bad.append((a, b, c))
    return bad


def reduce(g: GradedNilpotentLie, expr: BracketTree) -> LieElementQ:
    """括号表达式在规范基下的坐标; 次数超过 l 时为零元"""
    for leaf in expr.leaves():
        if not 1 <= leaf <= g.n:
            raise InvalidInputError(f"生成元 x{leaf} 超出范围 1..{g.n}")
    if expr.degree > g.l:
        return LieElementQ(g, g.zero_vector())
    return LieElementQ(g, _reduce_tree(g, expr))


def _reduce_tree(g: GradedNilpotentLie, expr: BracketTree) -> Vector:
    if expr.is_leaf:
        return g.unit_vector(g.generator_index(expr.leaf))
    return g.bracket(_reduce_tree(g, expr.left), _reduce_tree(g, expr.right))


def reduce_free(g: GradedNilpotentLie, e: FreeLieElement) -> LieElementQ:
    """自由李代数元素模去 Yang-Mills 理想"""
    if e.n != g.n:
        raise InvalidInputError(f"字母表大小不一致: {e.n} != {g.n}")
    v = [Fraction(0)] * g.dim
    word_index = {b.word: b.index for b in g.basis}
    for j in e.degrees():
        if j > g.l:
            continue
        part = {w: c for w, c in e.terms.items() if len(w) == j}
        for w, c in g.reducers[j].reduce(part).items():
            v[word_index[w]] += c
    return LieElementQ(g, tuple(v))


def relator_element(g: GradedNilpotentLie, j: int) -> LieElementQ:
    """Σ_i [x_i,[x_i,x_j]] 在商代数中的像"""
    total = LieElementQ(g, g.zero_vector())
    for i in range(1, g.n + 1):
        tree = BracketTree.right_nested((i, i, j))
        total = total + reduce(g, tree)
    return total


def parse_label(label: str) -> Word:
    """右嵌套标签 "x312" 的下标序列"""
    if not label.startswith("x") or not label[1:].isdigit():
        raise InvalidInputError(f"无法解析标签: {label!r}")
    return tuple(int(ch) for ch in label[1:])


def reduce_label(g: GradedNilpotentLie, label: str) -> LieElementQ:
    """按右嵌套约定解释标签并约化"""
    return reduce(g, BracketTree.right_nested(parse_label(label)))


def reference_basis(l: int, n: int = 3) -> List[BracketTree]:
    """ym(3)/C^l 的具名有序基 B_l (l = 1..4)"""
    if n != 3:
        raise UnsupportedError(f"具名基只对 n = 3 定义, 收到 n = {n}")
    if l not in REFERENCE_BASES:
        raise UnsupportedError(f"具名基只对 l = 1..4 定义, 收到 l = {l}")
    return [BracketTree.right_nested(parse_label(label)) for label in REFERENCE_BASES[l]]


def reference_basis_matrix(l: int) -> RatMatrix:
    """B_l 各元素在规范基下的坐标 (按行)"""
    g = build(3, l)
    return RatMatrix.from_rows([reduce(g, t).coords for t in reference_basis(l)], g.dim)


def verify_reference_basis(l: int) -> bool:
    """B_l 线性无关且张成 ym(3)/C^l"""
    g = build(3, l)
    m = reference_basis_matrix(l)
    ok = m.rows == g.dim and exactalg.rank(m) == g.dim
    logger.info(f"B_{l}: {m.rows} 个元素, 商代数维数 {g.dim}, 是否为基: {ok}")
    return ok


def verify_reference_identities() -> Dict[str, bool]:
    """逐条检查具名恒等式, 键为 "左端=右端" 形式"""
    results = {}
    for lhs, rhs, l in REFERENCE_IDENTITIES:
        g = build(3, l)
        left = reduce_label(g, lhs)
        right = LieElementQ(g, g.zero_vector())
        for label, c in rhs.items():
            right = right + reduce_label(g, label).scale(c)
        key = f"{lhs}=" + "+".join(f"({c}){label}" for label, c in rhs.items())
        results[key] = left == right
    return results


class CharacterRep:
    """一维表示: x_i 作用为 λ_i, 所有括号作用为 0"""

    def __init__(self, n: int, values: Sequence[Fraction]):
        if len(values) != n:
            raise InvalidInputError(f"特征需要 {n} 个值, 收到 {len(values)}")
        self.n = n
        self.values = tuple(Fraction(v) for v in values)

    def act_tree(self, expr: BracketTree) -> Fraction:
        """括号表达式在一维模上的作用: 括号按交换子 ab - ba 计算"""
        if expr.is_leaf:
            return self.values[expr.leaf - 1]
        a, b = self.act_tree(expr.left), self.act_tree(expr.right)
        return a * b - b * a

    def relator_images(self) -> List[Fraction]:
        return [
            sum((self.act_tree(BracketTree.right_nested((i, i, j))) for i in range(1, self.n + 1)), Fraction(0))
            for j in range(1, self.n + 1)
        ]


def character_rep(n: int, values: Sequence[Fraction]) -> CharacterRep:
    """由 λ ∈ k^n 给出的一维表示"""
    return CharacterRep(n, values)


def pbw_monomials(g: GradedNilpotentLie, D: int) -> PBWMonomialTable:
    """次数不超过 D 的 PBW 有序单项式"""
    if D < 0 or D > settings.degree_cap:
        raise InvalidInputError(f"D 必须在 0..{settings.degree_cap} 之间, 收到 {D}")
    degrees = [b.degree for b in g.basis]
    # 次数超过 D 的基元指数恒为0
    active = [k for k in range(g.dim) if degrees[k] <= D]
    found: List[Tuple[int, Exponents]] = []
    stack: List[Tuple[int, int, Tuple[int, ...]]] = [(0, D, ())]
    while stack:
        position, remaining, exponents = stack.pop()
        if position == len(active):
            mono = [0] * g.dim
            for k, e in zip(active, exponents):
                mono[k] = e
            found.append((D - remaining, tuple(mono)))
            continue
        step = degrees[active[position]]
        for e in range(remaining // step + 1):
            stack.append((position + 1, remaining - e * step, exponents + (e,)))
    found.sort(key=lambda item: (item[0], tuple(-e for e in item[1])))
    return PBWMonomialTable(D=D, monomials=tuple(m for _, m in found), degrees=tuple(d for d, _ in found))


def derivation_di(g: GradedNilpotentLie, i: int, u: PBWElement) -> PBWElement:
    """d_i(x_j) = δ_ij, 括号基元映为 0, 按 Leibniz 法则延拓"""
    if not 1 <= i <= g.n:
        raise InvalidInputError(f"导子下标 {i} 超出范围 1..{g.n}")
    k = g.generator_index(i)
    out: PBWElement = {}
    for m, c in u.items():
        a = m[k]
        if not a or not c:
            continue
        lowered = m[:k] + (a - 1,) + m[k + 1:]
        out[lowered] = out.get(lowered, Fraction(0)) + c * a
    return {m: c for m, c in out.items() if c}


def kernel_intersection_dims(g: GradedNilpotentLie, D: int) -> List[int]:
    """截断包络代数中 ∩_i Ker(d_i) 的各次维数"""
    if g.l < D:
        raise InvalidInputError(f"需要 l >= D, 收到 l = {g.l}, D = {D}")
    table = pbw_monomials(g, D)
    dims = []
    for j in range(D + 1):
        cols = table.in_degree(j)
        if j == 0:
            dims.append(len(cols))
            continue
        targets = table.in_degree(j - 1)
        row_index = {(i, m): r for r, (i, m) in enumerate((i, m) for i in range(1, g.n + 1) for m in targets)}
        data = []
        for col, m in enumerate(cols):
            for i in range(1, g.n + 1):
                for target, c in derivation_di(g, i, {m: Fraction(1)}).items():
                    data.append((row_index[(i, target)], col, c))
        matrix = RatMatrix.from_sparse(len(row_index), len(cols), data)
        dims.append(len(cols) - exactalg.rank(matrix))
    logger.info(f"∩Ker(d_i) 各次维数 (n={g.n}, D={D}): {dims}")
    return dims


def lower_central_series(g: GradedNilpotentLie) -> List[int]:
    """C^k(g) 的维数 (k = 0..l), 并核对 C^k = ⊕_{j>k} g_j"""
    # C^{k-1} 是理想且 g 由 1 次元生成, 所以 C^k = [V, C^{k-1}]
    dims = [g.dim]
    current = [g.unit_vector(k) for k in range(g.dim)]
    for k in range(1, g.l + 1):
        products = []
        for i in range(1, g.n + 1):
            xi = g.unit_vector(g.generator_index(i))
            for v in current:
                w = g.bracket(xi, v)
                if any(w):
                    products.append(w)
        current, _ = exactalg.echelon_basis(products, g.dim)
        dims.append(len(current))
        graded = sum(1 for b in g.basis if b.degree >= k + 1)
        if len(current) != graded:
            raise ConsistencyError("ymquotient.lower_central_series", f"dim C^{k} = {len(current)} != {graded}")
    return dims
