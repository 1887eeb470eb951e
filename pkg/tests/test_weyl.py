from fractions import Fraction

import pytest

from app.models.enums import SurjectivityStatus
from app.models.weyl import InducedAction, InducedModuleBasis, WeylElement, WeylMapReport
from app.services import orbit, weyl, ymquotient
from app.services.catalog import REFERENCE_FUNCTIONALS
from app.utils.exceptions import InterpolationError, InvalidInputError

p = WeylElement.p(1, 0)
q = WeylElement.q(1, 0)
one = WeylElement.one(1)


def test_normal_ordered_products():
    assert weyl.mul(p, q) == weyl.mul(q, p) + one
    qp = weyl.mul(q, p)
    assert weyl.mul(qp, qp) == WeylElement(1, {((2,), (2,)): 1, ((1,), (1,)): 1})
    assert weyl.commutator(p, weyl.mul(q, q)) == q.scale(2)


def test_products_in_different_variables_commute():
    p1, q2 = WeylElement.p(2, 0), WeylElement.q(2, 1)
    assert weyl.commutator(p1, q2).is_zero()
    assert weyl.commutator(WeylElement.p(2, 1), q2) == WeylElement.one(2)


def test_apply_as_differential_operator():
    assert weyl.apply(p, {(2,): Fraction(1)}) == {(1,): Fraction(2)}
    assert weyl.apply(q, {(0,): Fraction(1)}) == {(1,): Fraction(1)}
    assert weyl.apply(p, {(0,): Fraction(1)}) == {}


def test_mul_rejects_mismatched_rank():
    with pytest.raises(InvalidInputError):
        weyl.mul(p, WeylElement.p(2, 0))


def test_monomials_up_to():
    assert weyl.monomials_up_to(1, 2) == ((0,), (1,), (2,))
    assert weyl.monomials_up_to(2, 1) == ((0, 0), (1, 0), (0, 1))


def test_heisenberg_map(heisenberg, heisenberg_functional):
    report = weyl.ym_weyl_map(2, 2, heisenberg_functional)
    assert report.weight == 1
    assert report.basis_images == {"x1": q, "x2": -p, "x12": one}
    assert report.relator_check and report.lie_hom_check
    assert report.surjectivity.status == SurjectivityStatus.SURJECTIVE
    assert report.surjectivity.depth == 1


def test_weight_one_map(ym3_l2, weight1_functional):
    report = weyl.ym_weyl_map(3, 2, weight1_functional)
    assert report.weight == 1
    assert report.lie_hom_check and report.relator_check
    assert report.images == {"x1": q, "x2": q, "x3": -p}
    assert report.basis_images["x12"].is_zero()
    assert report.basis_images["x13"] == one
    assert report.basis_images["x23"] == one


def test_induced_rep_on_named_polarization(ym3_l2, weight1_functional):
    h = orbit.reference_subspace(ym3_l2, ["x1", "x2", "x12", "x13", "x23"])
    action = weyl.induced_rep(ym3_l2, weight1_functional, h, 4)
    assert action.basis.r == 1
    labels = [b.label for b in ym3_l2.basis]
    images = weyl.extract_weyl(action, labels, 2)
    assert {label: images[label] for label in ("x1", "x2", "x3")} == {"x1": p, "x2": p, "x3": q}
    assert images["x13"] == one
    assert images["x23"] == one
    assert images["x12"].is_zero()
    assert weyl.lie_hom_check(ym3_l2, [images[label] for label in labels])


@pytest.mark.parametrize("ref", REFERENCE_FUNCTIONALS, ids=lambda r: r.name)
def test_weight_is_minimal_rank(ref):
    g = ymquotient.build(3, ref.l)
    f = orbit.functional_from_labels(g, ref.coords)
    assert orbit.form_rank(g, f) == 2 * ref.expected_weight
    standard = orbit.standard_polarization(g, f).polarization
    named = orbit.reference_subspace(g, ref.polarization)
    assert weyl.minimal_rank_check(g, f, standard)
    assert weyl.minimal_rank_check(g, f, named)
    # 多一个基元就只剩 weight - 1 个变量, 诱导表示被拒绝
    extra = next(g.unit_vector(k) for k in range(g.dim) if not orbit.contains(named, g.unit_vector(k)))
    larger = orbit.subspace(g, list(named.basis) + [extra])
    assert g.dim - larger.dim == ref.expected_weight - 1
    with pytest.raises(InvalidInputError):
        weyl.induced_rep(g, f, larger, ref.l)


def test_non_maximal_subspace_is_not_minimal(heisenberg, heisenberg_functional):
    center = orbit.span_of_indices(heisenberg, [2])
    assert not weyl.minimal_rank_check(heisenberg, heisenberg_functional, center)


def test_map_rejects_algebra_mismatch(heisenberg_functional):
    with pytest.raises(InvalidInputError):
        weyl.ym_weyl_map(2, 3, heisenberg_functional)


def test_induced_rep_requires_polarization(heisenberg, heisenberg_functional):
    with pytest.raises(InvalidInputError):
        weyl.induced_rep(heisenberg, heisenberg_functional, orbit.whole(heisenberg), 2)


def _constant_action(image_of_square):
    monomials = weyl.monomials_up_to(1, 2)
    basis = InducedModuleBasis(complement=(0,), polarization_pivots=(), D=2, monomials=monomials)
    images = {0: {(0,): {}, (1,): {}, (2,): image_of_square}}
    return InducedAction(basis=basis, images=images)


def test_extract_zero_action():
    assert weyl.extract_weyl(_constant_action({}), ["z"], 1) == {"z": WeylElement.zero(1)}


def test_extract_detects_insufficient_order():
    with pytest.raises(InterpolationError):
        weyl.extract_weyl(_constant_action({(0,): Fraction(1)}), ["z"], 1)
    # 二阶算子 p^2/2 恰好给出该作用
    result = weyl.extract_weyl(_constant_action({(0,): Fraction(1)}), ["z"], 2)
    assert result["z"] == WeylElement(1, {((0,), (2,)): Fraction(1, 2)})


def test_lie_hom_and_relator_checks(heisenberg):
    assert not weyl.lie_hom_check(heisenberg, [q, q, one])
    assert weyl.lie_hom_check(heisenberg, [q, -p, one])
    assert weyl.relator_check([q, p])
    assert not weyl.relator_check([weyl.mul(q, q), p])


def test_surjectivity_inconclusive_for_zero_images():
    result = weyl.surjectivity_check({"x1": WeylElement.zero(1)}, 3)
    assert result.status == SurjectivityStatus.INCONCLUSIVE
    assert not result.surjective
    with pytest.raises(InvalidInputError):
        weyl.surjectivity_check({"x1": q}, 0)


def test_surjectivity_witnesses():
    result = weyl.surjectivity_check({"a": weyl.mul(q, q), "b": p}, 3)
    assert result.surjective
    by_target = {w.target: dict(w.terms) for w in result.witnesses}
    # [p, q^2] = 2q
    assert set(by_target) == {"p1", "q1"}
    assert by_target["p1"] == {("b",): Fraction(1)}


def test_pullback_module(heisenberg_functional):
    report = weyl.ym_weyl_map(2, 2, heisenberg_functional, check_surjectivity=False)
    module = weyl.pullback_module(report, 2)
    assert module.monomials == ((0,), (1,), (2,))
    assert module.matrices["x2"][1, 2] == -2
    assert module.matrices["x1"][2, 1] == 1
    deep = weyl.pullback_module(report, 4)
    assert deep.exact_below == 1
    assert deep.relators_vanish
    assert weyl.pullback_module(report, 0).monomials == ((0,),)
    with pytest.raises(InvalidInputError):
        weyl.pullback_module(report, -1)


def test_pullback_detects_violated_relation():
    # [p, [p, q^2]] = 2, 关系元不为零
    images = {"x1": weyl.mul(q, q), "x2": p}
    report = WeylMapReport(
        n=2, l=2, weight=1, functional={}, images=images, basis_images=images,
        relator_check=True, lie_hom_check=True, surjectivity=None,
    )
    module = weyl.pullback_module(report, 7)
    assert module.exact_below == 1
    assert not module.relators_vanish


def test_character_map():
    report = weyl.character_map(ymquotient.build(3, 1), [Fraction(1), Fraction(2), Fraction(3)])
    assert report.weight == 0
    assert report.images["x2"] == WeylElement.scalar(0, 2)
    assert report.relator_check and report.lie_hom_check


def test_separation_with_single_candidate():
    candidates = [("weight1", weyl.reference_map("weight1"))]
    report = weyl.separation_probe(3, 2, candidates)
    assert not report.all_separated
    missing = [e.monomial for e in report.entries if e.separated_by is None]
    assert {"x12": 1} in missing
    assert report.entries[0].monomial == {}
    assert report.entries[0].separated_by == "weight1"


def test_separation_arguments():
    with pytest.raises(InvalidInputError):
        weyl.separation_probe(2, 2, [])
    with pytest.raises(InvalidInputError):
        weyl.separation_probe(3, 5, [])
    with pytest.raises(InvalidInputError):
        weyl.reference_map("weight9")


@pytest.mark.slow
def test_reference_maps_satisfy_relations():
    for name in ("weight1", "weight2", "weight3", "weight4"):
        report = weyl.reference_map(name)
        assert report.relator_check
        assert report.weight == int(name[-1])


@pytest.mark.slow
def test_default_candidates_separate_low_degrees():
    report = weyl.separation_probe(3, 2)
    assert report.all_separated


@pytest.mark.slow
def test_reference_maps_miss_degree_three_elements():
    candidates = [(name, weyl.reference_map(name)) for name in ("weight1", "weight2", "weight3", "weight4")]
    report = weyl.separation_probe(3, 3, candidates)
    missing = [e.monomial for e in report.entries if e.separated_by is None]
    assert {"x113": 1} in missing
    assert {"x122": 1} in missing
