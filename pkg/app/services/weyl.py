"""Weyl 代数 A_r 的正规序运算, 诱导表示与 YM(n) → A_r 的映射

约定 [p_i, q_j] = δ_ij, p_i 在多项式模型 k[q_1..q_r] 上作用为 ∂/∂q_i.
诱导模 U(g) ⊗_{U(h)} k·v 取基 y^alpha ⊗ v 并等同于 q^alpha, g 的每个基元作用为
有限阶多项式系数微分算子, 由插值读出对应的 Weyl 元.
"""
import logging
from fractions import Fraction
from itertools import product
from math import comb, factorial
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from app.config.settings import settings
from app.models.enums import SurjectivityStatus
from app.models.matrix import RatMatrix, Vector
from app.models.nilpotent import GradedNilpotentLie
from app.models.orbit import Functional, Subspace
from app.models.weyl import (
    InducedAction, InducedModuleBasis, MultiIndex, Polynomial, PullbackModule, SeparationEntry,
    SeparationReport, SurjectivityResult, WeylElement, WeylMapReport, Witness,
)
from app.services import exactalg, orbit, ymquotient
from app.services.catalog import REFERENCE_FUNCTIONALS
from app.utils.exceptions import ConsistencyError, InterpolationError, InvalidInputError

logger = logging.getLogger(__name__)


def _falling(c: int, k: int) -> int:
    # c!/(c-k)!
    out = 1
    for t in range(k):
        out *= c - t
    return out


def mul(a: WeylElement, b: WeylElement) -> WeylElement:
    """正规序乘积: p^b q^c = Σ_k C(b,k)·c!/(c-k)!·q^{c-k} p^{b-k}, 各变量独立"""
    if a.r != b.r:
        raise InvalidInputError(f"Weyl 代数的秩不一致: {a.r} != {b.r}")
    r = a.r
    out: Dict[Tuple[MultiIndex, MultiIndex], Fraction] = {}
    for (alpha, beta), c1 in a.terms.items():
        for (gamma, delta), c2 in b.terms.items():
            # 每个变量上 p^beta_i q^gamma_i 的展开
            per_variable = []
            for i in range(r):
                options = []
                for k in range(min(beta[i], gamma[i]) + 1):
                    options.append((k, comb(beta[i], k) * _falling(gamma[i], k)))
                per_variable.append(options)
            for choice in product(*per_variable):
                coeff = c1 * c2
                for _, w in choice:
                    coeff *= w
                q_part = tuple(alpha[i] + gamma[i] - choice[i][0] for i in range(r))
                p_part = tuple(beta[i] - choice[i][0] + delta[i] for i in range(r))
                key = (q_part, p_part)
                out[key] = out.get(key, Fraction(0)) + coeff
    return WeylElement(r, out)


def commutator(a: WeylElement, b: WeylElement) -> WeylElement:
    return mul(a, b) - mul(b, a)


def apply(a: WeylElement, poly: Mapping[MultiIndex, Fraction]) -> Polynomial:
    """Weyl 元在多项式上的作用: 先按 p^beta 求导, 再乘 q^alpha"""
    out: Polynomial = {}
    for (alpha, beta), c in a.terms.items():
        for gamma, d in poly.items():
            if any(g < b for g, b in zip(gamma, beta)):
                continue
            w = 1
            for g, b in zip(gamma, beta):
                w *= _falling(g, b)
            mono = tuple(g - b + x for g, b, x in zip(gamma, beta, alpha))
            out[mono] = out.get(mono, Fraction(0)) + c * d * w
    return {m: c for m, c in out.items() if c}


def monomials_up_to(r: int, D: int) -> Tuple[MultiIndex, ...]:
    """r 元单项式 |alpha| <= D, 按总次数再按字典序倒序"""
    found = []

    def extend(prefix: List[int], remaining: int):
        if len(prefix) == r:
            found.append(tuple(prefix))
            return
        for e in range(remaining, -1, -1):
            prefix.append(e)
            extend(prefix, remaining - e)
            prefix.pop()

    extend([], D)
    return tuple(sorted(found, key=lambda m: (sum(m), tuple(-e for e in m))))


class _Straightener:
    """在 y^alpha ⊗ v 上用 PBW 交换计算 g 的作用

    y_j y_i m' = y_i (y_j m') + [y_j, y_i] m' (j > i); h y_i m' = y_i (h m') + [h, y_i] m'.
    括号提高次数, 由幂零性保证终止.
    """

    def __init__(self, g: GradedNilpotentLie, f: Functional, h: Subspace):
        self.g = g
        self.f = f
        self.h = h
        self.pivots = tuple(next(k for k, c in enumerate(v) if c) for v in h.basis)
        pivot_set = set(self.pivots)
        self.complement = tuple(k for k in range(g.dim) if k not in pivot_set)
        self.position = {k: j for j, k in enumerate(self.complement)}
        self.r = len(self.complement)
        self.h_values = tuple(f(v) for v in h.basis)
        self.steps = 0
        self.cache: Dict[Tuple[str, int, MultiIndex], Polynomial] = {}

    def decompose(self, w: Sequence[Fraction]) -> Tuple[Dict[int, Fraction], Dict[int, Fraction]]:
        """w = Σ a_k h_k + Σ b_j y_j"""
        residual = list(w)
        h_part = {}
        for k, (pivot, v) in enumerate(zip(self.pivots, self.h.basis)):
            c = residual[pivot]
            if c:
                h_part[k] = c
                for idx, x in enumerate(v):
                    if x:
                        residual[idx] -= c * x
        y_part = {self.position[idx]: c for idx, c in enumerate(residual) if c}
        return h_part, y_part

    def _tick(self):
        self.steps += 1
        if self.steps > settings.straightening_step_limit:
            raise ConsistencyError("weyl.straightening_terminates", f"PBW 交换超过 {settings.straightening_step_limit} 步")

    def act_vector(self, w: Sequence[Fraction], alpha: MultiIndex) -> Polynomial:
        h_part, y_part = self.decompose(w)
        out: Polynomial = {}
        for k, c in h_part.items():
            _accumulate(out, self.act("h", k, alpha), c)
        for j, c in y_part.items():
            _accumulate(out, self.act("y", j, alpha), c)
        return out

    def act_poly(self, kind: str, index: int, poly: Polynomial) -> Polynomial:
        out: Polynomial = {}
        for alpha, c in poly.items():
            _accumulate(out, self.act(kind, index, alpha), c)
        return out

    def act(self, kind: str, index: int, alpha: MultiIndex) -> Polynomial:
        key = (kind, index, alpha)
        cached = self.cache.get(key)
        if cached is not None:
            return cached
        self._tick()
        first = next((i for i, a in enumerate(alpha) if a), None)
        if first is None:
            if kind == "h":
                result = {alpha: self.h_values[index]} if self.h_values[index] else {}
            else:
                result = {_bump(alpha, index, 1): Fraction(1)}
        elif kind == "y" and index <= first:
            result = {_bump(alpha, index, 1): Fraction(1)}
        else:
            rest = _bump(alpha, first, -1)
            inner = self.act(kind, index, rest)
            # 对 inner 的每一项, y_first 的下标不大于其中所有下标, 直接前置
            result = {}
            _accumulate(result, self.act_poly("y", first, inner), Fraction(1))
            z = self._element(kind, index)
            y = self.g.unit_vector(self.complement[first])
            _accumulate(result, self.act_vector(self.g.bracket(z, y), rest), Fraction(1))
        self.cache[key] = result
        return result

    def _element(self, kind: str, index: int) -> Vector:
        if kind == "h":
            return self.h.basis[index]
        return self.g.unit_vector(self.complement[index])


def _bump(alpha: MultiIndex, i: int, delta: int) -> MultiIndex:
    return alpha[:i] + (alpha[i] + delta,) + alpha[i + 1:]


def _accumulate(out: Polynomial, poly: Mapping[MultiIndex, Fraction], c: Fraction):
    for m, x in poly.items():
        value = out.get(m, Fraction(0)) + c * x
        if value:
            out[m] = value
        else:
            out.pop(m, None)


def induced_rep(g: GradedNilpotentLie, f: Functional, h: Subspace, D: int) -> InducedAction:
    """g 在截断诱导模 (|alpha| <= D) 上的作用"""
    if D < 0:
        raise InvalidInputError(f"截断次数不能为负, 收到 {D}")
    if not orbit.is_polarization(g, f, h):
        raise InvalidInputError("给定子空间不是 f 的极化")
    s = _Straightener(g, f, h)
    # 幂零代数上 tr(ad x) = 0, 诱导作用不需要迹修正
    for k in range(g.dim):
        trace = g.ad_matrix(g.unit_vector(k))
        if any(trace[i, i] for i in range(g.dim)):
            raise ConsistencyError("weyl.trace_vanishes", f"ad {g.basis[k].label} 的迹非零")
    monomials = monomials_up_to(s.r, D)
    images = {}
    for k in range(g.dim):
        e = g.unit_vector(k)
        images[k] = {alpha: s.act_vector(e, alpha) for alpha in monomials}
    basis = InducedModuleBasis(complement=s.complement, polarization_pivots=s.pivots, D=D, monomials=monomials)
    logger.debug(f"诱导表示: r = {s.r}, 截断 D = {D}, 单项式 {len(monomials)} 个, 交换步数 {s.steps}")
    return InducedAction(basis=basis, images=images)


def extract_weyl(action: InducedAction, labels: Sequence[str], order: int) -> Dict[str, WeylElement]:
    """由截断作用插值出 Weyl 元

    A = Σ_beta a_beta(q) p^beta, 其中 |beta| <= order,
    a_beta = (A(q^beta) - Σ_{beta' < beta} beta!/(beta-beta')! q^{beta-beta'} a_{beta'}) / beta!;
    其余单项式 (|alpha| <= D) 用于验证.
    """
    basis = action.basis
    r = basis.r
    if order > basis.D:
        raise InvalidInputError(f"算子阶 {order} 超过截断次数 {basis.D}")
    result = {}
    for k, label in enumerate(labels):
        image = action.images[k]
        coefficients: Dict[MultiIndex, Polynomial] = {}
        for beta in basis.monomials_up_to(order):
            value = dict(image[beta])
            for lower, a in coefficients.items():
                if lower == beta or any(x > y for x, y in zip(lower, beta)):
                    continue
                w = 1
                for x, y in zip(lower, beta):
                    w *= _falling(y, x)
                shift = tuple(y - x for x, y in zip(lower, beta))
                for m, c in a.items():
                    mono = tuple(s + t for s, t in zip(shift, m))
                    value[mono] = value.get(mono, Fraction(0)) - w * c
            beta_factorial = 1
            for b in beta:
                beta_factorial *= factorial(b)
            a_beta = {m: c / beta_factorial for m, c in value.items() if c}
            if a_beta:
                coefficients[beta] = a_beta
        element = WeylElement(r, {(m, beta): c for beta, a in coefficients.items() for m, c in a.items()})
        for alpha in basis.monomials:
            if apply(element, {alpha: Fraction(1)}) != image[alpha]:
                raise InterpolationError(label, alpha, f"(算子阶 {order}, 截断 {basis.D})")
        result[label] = element
    return result


def minimal_rank_check(g: GradedNilpotentLie, f: Functional, h: Subspace) -> bool:
    """r = dim g - dim h 是能从 f 诱导出的最小 Weyl 代数秩

    从属于 f 的子空间都是 B_f 的迷向子空间, 余维数不小于 rank B_f / 2;
    另外逐个检查 h 加入任一补基元后不再从属于 f, 这样 r - 1 个变量的诱导模无从构造.
    """
    r = g.dim - h.dim
    if 2 * r != orbit.form_rank(g, f):
        return False
    for k in range(g.dim):
        e = g.unit_vector(k)
        if orbit.contains(h, e):
            continue
        if orbit.is_subordinate(orbit.subspace(g, list(h.basis) + [e]), f):
            logger.warning(f"{g.basis[k].label} 可以加入极化, 秩 {r} 不是最小的")
            return False
    return True


def lie_hom_check(g: GradedNilpotentLie, images: Sequence[WeylElement]) -> bool:
    """[X_a, X_b] 等于括号的像, 对所有基元对"""
    for a in range(g.dim):
        for b in range(a + 1, g.dim):
            expected = WeylElement.zero(images[a].r)
            for k, c in g.bracket_basis(a, b).items():
                expected = expected + images[k].scale(c)
            if commutator(images[a], images[b]) != expected:
                logger.warning(f"李同态检查失败: [{g.basis[a].label},{g.basis[b].label}]")
                return False
    return True


def relator_check(generator_images: Sequence[WeylElement]) -> bool:
    """Σ_i [X_i,[X_i,X_j]] = 0 对所有 j"""
    n = len(generator_images)
    for j in range(n):
        total = WeylElement.zero(generator_images[j].r)
        for i in range(n):
            total = total + commutator(generator_images[i], commutator(generator_images[i], generator_images[j]))
        if not total.is_zero():
            return False
    return True


def surjectivity_check(images: Mapping[str, WeylElement], L: int) -> SurjectivityResult:
    """在长度 <= L 的像乘积张成的空间中寻找所有 p_i, q_i

    逐轮扩张: S_k = S_{k-1} + {u·X : u ∈ S_{k-1} 的选定基, X 为像}, 单位元包含在 S_0 中.
    """
    if L < 1:
        raise InvalidInputError(f"词长上限 L 必须不小于1, 收到 {L}")
    if not images:
        return SurjectivityResult(SurjectivityStatus.INCONCLUSIVE, L, ())
    r = next(iter(images.values())).r
    targets = {}
    for i in range(r):
        targets[f"p{i + 1}"] = WeylElement.p(r, i)
        targets[f"q{i + 1}"] = WeylElement.q(r, i)

    # 先去掉线性相关的像
    generators: List[Tuple[str, WeylElement]] = []
    independent = exactalg.SparseEchelon()
    for label, x in images.items():
        if independent.add(x.terms, label):
            generators.append((label, x))

    span = exactalg.SparseEchelon()
    products: Dict[Tuple[str, ...], WeylElement] = {(): WeylElement.one(r)}
    span.add(products[()].terms, ())
    frontier = [()]
    found: Dict[str, Dict] = {}
    for depth in range(1, L + 1):
        next_frontier = []
        for word in frontier:
            for label, x in generators:
                new_word = word + (label,)
                element = mul(products[word], x)
                if span.add(element.terms, new_word):
                    products[new_word] = element
                    next_frontier.append(new_word)
        frontier = next_frontier
        for name, t in targets.items():
            if name not in found:
                combo = span.express(t.terms)
                if combo is not None:
                    found[name] = combo
        logger.debug(f"满射性搜索: 词长 {depth}, 张成维数 {len(span)}, 已找到 {sorted(found)}")
        if len(found) == len(targets):
            witnesses = tuple(
                Witness(target=name, terms=tuple(sorted((w, c) for w, c in found[name].items())))
                for name in sorted(targets)
            )
            return SurjectivityResult(SurjectivityStatus.SURJECTIVE, depth, witnesses)
        if not frontier:
            break
    logger.info(f"在词长 {L} 内未找到全部生成元 (缺 {sorted(set(targets) - set(found))}), 结论待定")
    return SurjectivityResult(SurjectivityStatus.INCONCLUSIVE, L, ())


def ym_weyl_map(
    n: int,
    l: int,
    f: Functional,
    surjectivity_depth: Optional[int] = None,
    check_surjectivity: bool = True,
) -> WeylMapReport:
    """ym(n)/C^l 上的泛函 f 给出的 YM(n) → A_r"""
    g = f.algebra
    if (g.n, g.l) != (n, l):
        raise InvalidInputError(f"泛函定义在 ym({g.n})/C^{g.l} 上, 与请求的 n={n}, l={l} 不符")
    report = orbit.standard_polarization(g, f)
    if not minimal_rank_check(g, f, report.polarization):
        raise ConsistencyError("weyl.weight_minimal", f"权 {report.weight} 不是 f 能给出的最小秩")
    D = l + settings.interpolation_margin
    action = induced_rep(g, f, report.polarization, D)
    labels = [b.label for b in g.basis]
    extracted = extract_weyl(action, labels, order=l)
    basis_images = [extracted[label] for label in labels]
    generator_images = {g.basis[g.generator_index(i)].label: basis_images[g.generator_index(i)] for i in range(1, n + 1)}
    relators = relator_check(list(generator_images.values()))
    hom = lie_hom_check(g, basis_images)
    if not hom:
        raise ConsistencyError("weyl.lie_homomorphism", f"ym({n})/C^{l} 的像不满足李同态性质")
    if not relators:
        raise ConsistencyError("weyl.relators_vanish", f"ym({n})/C^{l} 的像不满足 Yang-Mills 关系")
    surjectivity = None
    if check_surjectivity:
        depth = surjectivity_depth or settings.surjectivity_depth
        surjectivity = surjectivity_check(dict(zip(labels, basis_images)), depth)
    logger.info(f"YM({n}) → A_{report.weight}: 关系检查 {relators}, 满射性 {surjectivity.status.value if surjectivity else '未检查'}")
    return WeylMapReport(
        n=n, l=l, weight=report.weight, functional=f.by_label(), images=generator_images,
        basis_images=dict(zip(labels, basis_images)), relator_check=relators, lie_hom_check=hom,
        surjectivity=surjectivity,
    )


def character_map(g: GradedNilpotentLie, values: Sequence[Fraction]) -> WeylMapReport:
    """特征 x_i ↦ λ_i 视为到 A_0 = k 的映射, 括号基元映为 0"""
    rep = ymquotient.character_rep(g.n, values)
    basis_images = {}
    for b in g.basis:
        value = rep.values[b.word[0] - 1] if b.degree == 1 else Fraction(0)
        basis_images[b.label] = WeylElement.scalar(0, value)
    images = {g.basis[g.generator_index(i)].label: basis_images[g.basis[g.generator_index(i)].label] for i in range(1, g.n + 1)}
    hom = lie_hom_check(g, [basis_images[b.label] for b in g.basis])
    return WeylMapReport(
        n=g.n, l=g.l, weight=0, functional={}, images=images, basis_images=basis_images,
        relator_check=relator_check(list(images.values())), lie_hom_check=hom, surjectivity=None,
    )


def pullback_module(report: WeylMapReport, D: int) -> PullbackModule:
    """生成元的像作用在次数 <= D 的多项式上; 超过 D 的项截去"""
    if not report.relator_check:
        raise InvalidInputError("关系检查未通过, 不能拉回")
    if D < 0:
        raise InvalidInputError(f"截断次数不能为负, 收到 {D}")
    r = report.weight
    monomials = monomials_up_to(r, D)
    row = {m: i for i, m in enumerate(monomials)}
    matrices = {}
    for label, x in report.images.items():
        data = []
        for col, alpha in enumerate(monomials):
            for m, c in apply(x, {alpha: Fraction(1)}).items():
                if m in row:
                    data.append((row[m], col, c))
        matrices[label] = RatMatrix.from_sparse(len(monomials), len(monomials), data)
    # 关系元是三次的, 中间结果不超过 |alpha| + 3s 时截断无影响
    s = max((sum(alpha) - sum(beta) for x in report.images.values() for alpha, beta in x.terms), default=0)
    s = max(s, 0)
    exact_below = D - 3 * s
    if exact_below < 0:
        logger.warning(f"截断 D = {D} 过小, 关系元在 D >= {3 * s} 时才能逐项检查")
    mats = [matrices[label] for label in report.images]
    ok = True
    for j in range(len(mats)):
        total = None
        for i in range(len(mats)):
            xi, xj = mats[i], mats[j]
            inner = _matrix_commutator(xi, xj)
            term = _matrix_commutator(xi, inner)
            total = term if total is None else _matrix_add(total, term)
        for col, alpha in enumerate(monomials):
            if sum(alpha) <= exact_below and any(total.column(col)):
                ok = False
    return PullbackModule(r=r, D=D, monomials=monomials, matrices=matrices, exact_below=exact_below, relators_vanish=ok)


def _matrix_add(a: RatMatrix, b: RatMatrix) -> RatMatrix:
    return RatMatrix(a.rows, a.cols, tuple(x + y for x, y in zip(a.entries, b.entries)))


def _matrix_commutator(a: RatMatrix, b: RatMatrix) -> RatMatrix:
    ab, ba = a @ b, b @ a
    return RatMatrix(ab.rows, ab.cols, tuple(x - y for x, y in zip(ab.entries, ba.entries)))


GENERIC_PROBE_L = 4


def reference_map(name: str) -> WeylMapReport:
    """具名参考泛函给出的映射"""
    ref = next((item for item in REFERENCE_FUNCTIONALS if item.name == name), None)
    if ref is None:
        raise InvalidInputError(f"未知的参考泛函: {name}")
    g = ymquotient.build(3, ref.l)
    f = orbit.functional_from_labels(g, ref.coords)
    return ym_weyl_map(3, ref.l, f, check_surjectivity=False)


def generic_probe_functional() -> Functional:
    """ym(3)/C^4 上坐标全非零的确定性泛函 f(e_k) = k + 1"""
    g = ymquotient.build(3, GENERIC_PROBE_L)
    return Functional(g, tuple(Fraction(k + 1) for k in range(g.dim)))


def default_probe_candidates() -> List[Tuple[str, WeylMapReport]]:
    """四个参考映射, 特征 (1,1,1) 与一个一般泛函给出的映射"""
    candidates = [(ref.name, reference_map(ref.name)) for ref in REFERENCE_FUNCTIONALS]
    candidates.append(("character", character_map(ymquotient.build(3, 1), [Fraction(1)] * 3)))
    f = generic_probe_functional()
    candidates.append(("generic", ym_weyl_map(3, GENERIC_PROBE_L, f, check_surjectivity=False)))
    return candidates


def separation_probe(
    n: int,
    d: int,
    candidates: Optional[Sequence[Tuple[str, WeylMapReport]]] = None,
) -> SeparationReport:
    """对每个次数 <= d 的 PBW 单项式, 找一个把它映为非零元的候选映射

    A_r 是整环, 所以有序乘积非零当且仅当每个因子非零; 选中的候选再实际相乘确认.
    """
    if n != 3:
        raise InvalidInputError(f"分离性探测只对 n = 3 提供, 收到 n = {n}")
    if not 0 <= d <= 4:
        raise InvalidInputError(f"次数 d 必须在 0..4 之间, 收到 {d}")
    candidates = list(candidates) if candidates is not None else default_probe_candidates()
    g = ymquotient.build(n, max(d, 1))
    table = ymquotient.pbw_monomials(g, d)
    entries = []
    for mono, degree in zip(table.monomials, table.degrees):
        factors = [g.basis[k].label for k, e in enumerate(mono) for _ in range(e)]
        chosen = None
        for name, report in candidates:
            images = [report.basis_images.get(label) for label in factors]
            if any(x is None or x.is_zero() for x in images):
                continue
            value = WeylElement.one(report.weight)
            for x in images:
                value = mul(value, x)
            if value.is_zero():
                raise ConsistencyError("weyl.domain", f"{name} 下非零因子之积为零")
            chosen = name
            break
        entries.append(SeparationEntry(
            monomial={g.basis[k].label: e for k, e in enumerate(mono) if e}, degree=degree, separated_by=chosen,
        ))
    report = SeparationReport(n=n, d=d, entries=tuple(entries))
    missing = [e.monomial for e in entries if e.separated_by is None]
    logger.info(f"分离性探测: {len(entries)} 个单项式, 未分离 {len(missing)} 个")
    return report
