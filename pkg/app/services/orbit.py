"""轨道方法: 泛函的根, 理想旗, 标准极化与权

标准极化: 取理想旗 0 = g_0 ⊂ g_1 ⊂ ... ⊂ g_d = g, f_i 为 f 在 g_i 上的限制,
h = Σ_i (g_i)^{f_i}. 对幂零代数 h 是 f 的极化, dim h = (dim g + dim g^f)/2.
"""
import logging
import random
from fractions import Fraction
from typing import List, Mapping, Optional, Sequence, Union

from app.models.enums import LabelConvention
from app.models.matrix import RatMatrix, Vector
from app.models.nilpotent import GradedNilpotentLie
from app.models.orbit import Functional, PolarizationReport, Subspace
from app.services import exactalg, ymquotient
from app.services.catalog import REFERENCE_BASES
from app.utils.exceptions import ConsistencyError, InvalidInputError, UnsupportedError
from app.utils.rational import parse_rational

logger = logging.getLogger(__name__)


def subspace(g: GradedNilpotentLie, vectors: Sequence[Sequence[Fraction]]) -> Subspace:
    """向量组张成的子空间 (行最简基)"""
    rows, _ = exactalg.echelon_basis([list(v) for v in vectors], g.dim)
    return Subspace(g, tuple(tuple(r) for r in rows))


def span_of_indices(g: GradedNilpotentLie, indices: Sequence[int]) -> Subspace:
    return subspace(g, [g.unit_vector(k) for k in indices])


def whole(g: GradedNilpotentLie) -> Subspace:
    return span_of_indices(g, range(g.dim))


def contains(h: Subspace, v: Sequence[Fraction]) -> bool:
    return exactalg.in_span(v, h.basis)


def functional(g: GradedNilpotentLie, coords: Mapping[int, Fraction]) -> Functional:
    v = [Fraction(0)] * g.dim
    for k, c in coords.items():
        v[k] = Fraction(c)
    return Functional(g, tuple(v))


def zero_functional(g: GradedNilpotentLie) -> Functional:
    return Functional(g, g.zero_vector())


def _form_matrix(f: Functional, indices: Sequence[int]) -> RatMatrix:
    # B_f(e_a, e_b) = f([e_a, e_b]) 限制在给定基元上
    return RatMatrix.from_rows([[f.on_bracket(a, b) for b in indices] for a in indices], len(indices))


def _even_rank(m: RatMatrix) -> int:
    r = exactalg.rank(m)
    if r % 2:
        raise ConsistencyError("orbit.form_rank_even", f"反对称矩阵的秩为奇数 {r}")
    return r


def form_rank(g: GradedNilpotentLie, f: Functional) -> int:
    """B_f 的秩; 从属于 f 的子空间余维数至少为它的一半"""
    return _even_rank(_form_matrix(f, range(g.dim)))


def radical(g: GradedNilpotentLie, f: Functional) -> Subspace:
    """g^f = {x : f([x, y]) = 0 对所有 y}"""
    m = _form_matrix(f, range(g.dim))
    _even_rank(m)
    return subspace(g, exactalg.kernel_basis(m))


def flag_order(g: GradedNilpotentLie) -> List[int]:
    """旗中基元的加入顺序: 次数递减, 同次数内按规范顺序倒序"""
    return sorted(range(g.dim), key=lambda k: (-g.basis[k].degree, -k))


def _is_ideal_of_indices(g: GradedNilpotentLie, members: Sequence[int]) -> bool:
    member_set = set(members)
    for b in members:
        for a in range(g.dim):
            if any(k not in member_set for k in g.bracket_basis(a, b)):
                return False
    return True


def ideal_flag(g: GradedNilpotentLie) -> List[Subspace]:
    """完全理想旗 g_0 ⊂ g_1 ⊂ ... ⊂ g_d, 每一项都验证为理想"""
    order = flag_order(g)
    flag = []
    for i in range(g.dim + 1):
        members = order[:i]
        if not _is_ideal_of_indices(g, members):
            raise ConsistencyError("orbit.flag_ideal", f"旗的第 {i} 项不是理想")
        flag.append(span_of_indices(g, members))
    return flag


def is_subalgebra(h: Subspace) -> bool:
    g = h.algebra
    for i, u in enumerate(h.basis):
        for v in h.basis[i + 1:]:
            if not contains(h, g.bracket(u, v)):
                return False
    return True


def is_subordinate(h: Subspace, f: Functional) -> bool:
    """f([h, h]) = 0"""
    g = h.algebra
    for i, u in enumerate(h.basis):
        for v in h.basis[i + 1:]:
            if f(g.bracket(u, v)):
                return False
    return True


def is_polarization(g: GradedNilpotentLie, f: Functional, h: Subspace) -> bool:
    """子代数, 从属于 f, 且维数为 (dim g + dim g^f)/2"""
    rad = radical(g, f)
    if 2 * h.dim != g.dim + rad.dim:
        return False
    return is_subalgebra(h) and is_subordinate(h, f)


def standard_polarization(g: GradedNilpotentLie, f: Functional) -> PolarizationReport:
    """由理想旗构造的标准极化"""
    order = flag_order(g)
    vectors = []
    for i in range(1, g.dim + 1):
        members = order[:i]
        m = _form_matrix(f, members)
        for kernel_vector in exactalg.kernel_basis(m):
            v = [Fraction(0)] * g.dim
            for k, c in zip(members, kernel_vector):
                v[k] = c
            vectors.append(v)
    h = subspace(g, vectors)
    rad = radical(g, f)
    if 2 * h.dim != g.dim + rad.dim:
        raise ConsistencyError("orbit.polarization_dimension", f"dim h = {h.dim}, dim g = {g.dim}, dim g^f = {rad.dim}")
    if not is_subalgebra(h):
        raise ConsistencyError("orbit.polarization_subalgebra", "标准极化对括号不封闭")
    if not is_subordinate(h, f):
        raise ConsistencyError("orbit.polarization_subordinate", "f([h,h]) != 0")
    weight = g.dim - h.dim
    logger.info(f"标准极化: dim g = {g.dim}, dim g^f = {rad.dim}, dim h = {h.dim}, 权 = {weight}")
    return PolarizationReport(f=f, radical_dim=rad.dim, polarization=h, weight=weight)


def stabilizer_condition(g: GradedNilpotentLie, ideal: Subspace, f: Functional) -> Subspace:
    """{x ∈ g : f([x, I]) = 0}"""
    rows = []
    for y in ideal.basis:
        rows.append([f(g.bracket(g.unit_vector(a), y)) for a in range(g.dim)])
    if not rows:
        return whole(g)
    return subspace(g, exactalg.kernel_basis(RatMatrix.from_rows(rows, g.dim)))


def stabilizer(g: GradedNilpotentLie, ideal: Subspace) -> Subspace:
    """st(I, g) = {x ∈ g : [x, I] ⊂ I}"""
    if not ideal.basis:
        return whole(g)
    # I 的零化子: z·v = 0 对所有 v ∈ I
    annihilator = exactalg.kernel_basis(RatMatrix.from_rows(ideal.basis, g.dim))
    rows = []
    for y in ideal.basis:
        images = [g.bracket(g.unit_vector(a), y) for a in range(g.dim)]
        for z in annihilator:
            rows.append([sum((zi * wi for zi, wi in zip(z, w) if zi and wi), Fraction(0)) for w in images])
    if not rows:
        return whole(g)
    return subspace(g, exactalg.kernel_basis(RatMatrix.from_rows(rows, g.dim)))


def coadjoint_action(g: GradedNilpotentLie, x: Sequence[Fraction], f: Functional) -> Functional:
    """f ∘ exp(-ad x); ad x 幂零, 级数在有限项后终止"""
    coords = []
    for b in range(g.dim):
        total = Fraction(0)
        v = g.unit_vector(b)
        m = 0
        factorial = 1
        while any(v):
            total += f(v) / factorial
            v = tuple(-c for c in g.bracket(x, v))
            m += 1
            factorial *= m
            if m > g.l + 1:
                raise ConsistencyError("orbit.ad_nilpotent", f"ad x 的 {m} 次幂仍非零")
        coords.append(total)
    return Functional(g, tuple(coords))


def default_convention(g: GradedNilpotentLie) -> LabelConvention:
    if g.n == 3 and g.l in REFERENCE_BASES:
        return LabelConvention.RIGHT_NESTED
    return LabelConvention.LYNDON


def functional_from_labels(
    g: GradedNilpotentLie,
    coords: Mapping[str, Union[str, int, Fraction]],
    convention: Optional[LabelConvention] = None,
) -> Functional:
    """由标签到有理数的映射构造泛函

    RIGHT_NESTED: 值给在具名基 B_l 的元素上, 未列出的基元取 0;
    LYNDON: 值给在规范基元上.
    """
    convention = convention or default_convention(g)
    values = {}
    for label, raw in coords.items():
        try:
            values[label] = parse_rational(raw)
        except ValueError as e:
            raise InvalidInputError(f"标签 {label} 的系数无法解析: {raw!r}") from e

    if convention == LabelConvention.LYNDON:
        out = {}
        for label, c in values.items():
            k = g.index_of_label(label)
            if k is None:
                raise InvalidInputError(f"未知的规范标签: {label}")
            out[k] = c
        return functional(g, out)

    if g.n != 3 or g.l not in REFERENCE_BASES:
        raise UnsupportedError(f"右嵌套标签只对 n = 3, l <= 4 可用, 收到 n = {g.n}, l = {g.l}")
    labels = REFERENCE_BASES[g.l]
    unknown = sorted(set(values) - set(labels))
    if unknown:
        raise InvalidInputError(f"标签不在具名基 B_{g.l} 中: {', '.join(unknown)}")
    target = [values.get(label, Fraction(0)) for label in labels]
    m = ymquotient.reference_basis_matrix(g.l)
    # f(b_k) = Σ_a M[k,a] f_a, 即 f 是 M 的列向量的组合系数
    solution = exactalg.solve_in_span(target, [m.column(a) for a in range(m.cols)])
    if solution is None:
        raise ConsistencyError("orbit.reference_basis_invertible", f"B_{g.l} 的坐标矩阵不可逆")
    return Functional(g, tuple(solution))


def reference_subspace(g: GradedNilpotentLie, labels: Sequence[str]) -> Subspace:
    """右嵌套标签列表张成的子空间"""
    return subspace(g, [ymquotient.reduce_label(g, label).coords for label in labels])


def random_functional(g: GradedNilpotentLie, rng: random.Random, bound: int = 5) -> Functional:
    """系数为 [-bound, bound] 中随机整数除以随机正整数的泛函"""
    return Functional(g, tuple(Fraction(rng.randint(-bound, bound), rng.randint(1, bound)) for _ in range(g.dim)))


def random_element(g: GradedNilpotentLie, rng: random.Random, bound: int = 3) -> Vector:
    return tuple(Fraction(rng.randint(-bound, bound)) for _ in range(g.dim))
