"""verify-all: 全部验收标准

每条标准独立运行, 内部一致性异常记为该条失败而不中断后续标准.
随机性质测试全部使用 settings.random_seed 播种, 结果可逐字节复现.
"""
import logging
import random
import time
from fractions import Fraction
from typing import Callable, List, Tuple

from app.config.settings import settings
from app.models.acceptance import CriterionResult, VerificationReport
from app.models.matrix import RatMatrix
from app.models.weyl import WeylElement
from app.services import exactalg, koszul, orbit, series, weyl, ymquotient
from app.services.catalog import REFERENCE_BASES, REFERENCE_FUNCTIONALS
from app.utils.exceptions import YMError

logger = logging.getLogger(__name__)

YM3_DIMS = [3, 3, 5, 10, 24, 50, 120, 270, 640, 1500, 3600, 8610, 20880, 50700, 124024, 304290, 750120]


def _dimension_sequence() -> Tuple[bool, str]:
    dims = series.lie_dims_moebius(3, 17).as_list(17)
    return dims == YM3_DIMS, f"N(3)_1..17 = {dims}"


def _quotient_vs_moebius() -> Tuple[bool, str]:
    l = settings.acceptance_max_l
    g = ymquotient.build(3, l)
    expected = series.lie_dims_moebius(3, l).as_list(l)
    return g.degree_dims() == expected, f"l = {l}: 商代数 {g.degree_dims()}, Möbius {expected}"


def _reference_bases() -> Tuple[bool, str]:
    sizes = [len(REFERENCE_BASES[l]) for l in range(1, 5)]
    bases_ok = all(ymquotient.verify_reference_basis(l) for l in range(1, 5))
    identities = ymquotient.verify_reference_identities()
    failed = [k for k, v in identities.items() if not v]
    ok = sizes == [3, 6, 11, 21] and bases_ok and not failed
    return ok, f"基大小 {sizes}, 均为基: {bases_ok}, 失败的恒等式: {failed}"


def _koszul_homology() -> Tuple[bool, str]:
    problems = []
    for n in range(2, 6):
        total_h0 = 0
        for p in range(9):
            dims = koszul.homology_dims(n, p)
            total_h0 += dims.h0
            if dims.h2 or dims.h3:
                problems.append(f"n={n}, p={p}: h2={dims.h2}, h3={dims.h3}")
            if dims.h1 != koszul.closed_form_h1(n, p):
                problems.append(f"n={n}, p={p}: h1={dims.h1} != 闭式 {koszul.closed_form_h1(n, p)}")
            if n == 3 and dims.h1 != (2 * p + 1 if p else 0):
                problems.append(f"n=3, p={p}: h1={dims.h1} != 2p+1")
        if total_h0 != 1:
            problems.append(f"n={n}: H_0 总维数 {total_h0}")
    return not problems, "; ".join(problems) or "n = 2..5, p <= 8 全部一致"


def _w_cross_check() -> Tuple[bool, str]:
    details = []
    for n in range(2, 6):
        details.append(f"W({n}) = {koszul.w_dims(n, 9)}")
    ok = koszul.w_dims(2, 9) == [1] + [0] * 7
    return ok, "; ".join(details)


def _freeness() -> Tuple[bool, str]:
    bad = []
    for n in range(2, 7):
        if not series.freeness_identity(n, 20):
            bad.append(f"freeness n={n}")
        if not series.pbw_check(n, series.lie_dims_moebius(n, 20), 20):
            bad.append(f"pbw n={n}")
    return not bad, ", ".join(bad) or "n = 2..6 均成立"


def _kernel_characterization() -> Tuple[bool, str]:
    g = ymquotient.build(3, 5)
    dims = ymquotient.kernel_intersection_dims(g, 5)
    expected = list((series.hilbert_ym(3, 5) * series.one_minus_t_power(3, 5)).coeffs)
    return dims == expected, f"∩Ker(d_i): {dims}, 级数预测 {expected}"


def _orbit_method() -> Tuple[bool, str]:
    problems = []
    for ref in REFERENCE_FUNCTIONALS:
        g = ymquotient.build(3, ref.l)
        f = orbit.functional_from_labels(g, ref.coords)
        weight = orbit.standard_polarization(g, f).weight
        if weight != ref.expected_weight:
            problems.append(f"{ref.name}: 权 {weight} != {ref.expected_weight}")
        h = orbit.reference_subspace(g, ref.polarization)
        if not orbit.is_polarization(g, f, h):
            problems.append(f"{ref.name}: 给定的 h_f 不是极化")
    rng = random.Random(settings.random_seed)
    for l in (2, 3, 4):
        g = ymquotient.build(3, l)
        for _ in range(settings.acceptance_random_functionals):
            f = orbit.random_functional(g, rng)
            report = orbit.standard_polarization(g, f)
            if 2 * report.weight != g.dim - report.radical_dim:
                problems.append(f"l={l}: 权 {report.weight}, 根维数 {report.radical_dim}")
                break
    return not problems, "; ".join(problems) or "四个参考泛函与随机泛函全部通过"


def _weyl_maps() -> Tuple[bool, str]:
    problems = []
    for ref in REFERENCE_FUNCTIONALS:
        g = ymquotient.build(3, ref.l)
        f = orbit.functional_from_labels(g, ref.coords)
        depth = 3 if ref.expected_weight <= 3 else 4
        report = weyl.ym_weyl_map(3, ref.l, f, surjectivity_depth=depth)
        if not (report.lie_hom_check and report.relator_check):
            problems.append(f"{ref.name}: 同态或关系检查失败")
        if not report.surjectivity.surjective:
            problems.append(f"{ref.name}: 词长 {depth} 内未证实满射")
    return not problems, "; ".join(problems) or "四个映射均为李同态, 关系消失且满射"


def _separation() -> Tuple[bool, str]:
    report = weyl.separation_probe(3, 4)
    missing = [e.monomial for e in report.entries if e.separated_by is None]
    return report.all_separated, f"{len(report.entries)} 个单项式, 未分离: {missing}"


def _random_weyl(rng: random.Random, r: int) -> WeylElement:
    terms = {}
    for _ in range(rng.randint(1, 3)):
        alpha = tuple(rng.randint(0, 2) for _ in range(r))
        beta = tuple(rng.randint(0, 2) for _ in range(r))
        if sum(alpha) + sum(beta) > 3:
            continue
        terms[(alpha, beta)] = Fraction(rng.randint(-3, 3), rng.randint(1, 3))
    return WeylElement(r, terms)


def _property_suites() -> Tuple[bool, str]:
    problems = []
    g = ymquotient.build(3, min(settings.jacobi_check_max_degree, settings.acceptance_max_l))
    if ymquotient.jacobi_violations(g):
        problems.append("Jacobi")

    rng = random.Random(settings.random_seed)
    for _ in range(settings.acceptance_weyl_triples):
        r = rng.randint(1, 2)
        a, b, c = (_random_weyl(rng, r) for _ in range(3))
        left = weyl.mul(weyl.mul(a, b), c)
        if left != weyl.mul(a, weyl.mul(b, c)):
            problems.append("Weyl 结合律")
            break
        for poly in weyl.monomials_up_to(r, 8):
            oracle = weyl.apply(a, weyl.apply(b, weyl.apply(c, {poly: Fraction(1)})))
            if weyl.apply(left, {poly: Fraction(1)}) != oracle:
                problems.append("Weyl 乘法与多项式作用不一致")
                break

    for _ in range(settings.acceptance_random_matrices):
        rows, cols = rng.randint(1, 6), rng.randint(1, 6)
        m = RatMatrix.from_rows(
            [[Fraction(rng.randint(-2, 2)) for _ in range(cols)] for _ in range(rows)], cols
        )
        kernel = exactalg.kernel_basis(m)
        if exactalg.rank(m) + len(kernel) != cols or any(any(m.apply(v)) for v in kernel):
            problems.append("秩-零化度")
            break

    first = ymquotient._build.__wrapped__(3, 4)
    second = ymquotient._build.__wrapped__(3, 4)
    if first.basis != second.basis or first.structure != second.structure:
        problems.append("构造不确定")
    return not problems, ", ".join(problems) or "全部通过"


CRITERIA: List[Tuple[str, Callable[[], Tuple[bool, str]]]] = [
    ("dimension_sequence", _dimension_sequence),
    ("quotient_vs_moebius", _quotient_vs_moebius),
    ("reference_bases", _reference_bases),
    ("koszul_homology", _koszul_homology),
    ("w_cross_check", _w_cross_check),
    ("freeness_shadow", _freeness),
    ("kernel_characterization", _kernel_characterization),
    ("orbit_method", _orbit_method),
    ("weyl_maps", _weyl_maps),
    ("separation_probe", _separation),
    ("property_suites", _property_suites),
]


def verify_all() -> VerificationReport:
    """依次运行 11 条验收标准"""
    results = []
    for number, (name, check) in enumerate(CRITERIA, start=1):
        start = time.perf_counter()
        try:
            passed, detail = check()
        except YMError as e:
            passed, detail = False, str(e)
        elapsed = time.perf_counter() - start
        logger.info(f"标准 {number} {name}: {'通过' if passed else '失败'} ({elapsed:.1f}s)")
        results.append(CriterionResult(number=number, name=name, passed=passed, detail=detail))
    return VerificationReport(criteria=tuple(results))
