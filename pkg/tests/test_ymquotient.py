from fractions import Fraction

import pytest

from app.models.lie import BracketTree, FreeLieElement
from app.services import series, ymquotient
from app.services.catalog import REFERENCE_IDENTITIES
from app.utils.exceptions import InvalidInputError, UnsupportedError


def test_two_generator_quotient_is_heisenberg():
    g = ymquotient.build(2, 5)
    assert g.degree_dims() == [2, 1, 0, 0, 0]
    assert [b.label for b in g.basis] == ["x1", "x2", "x12"]
    assert g.bracket_basis(0, 1) == {2: Fraction(1)}
    assert g.bracket_basis(1, 0) == {2: Fraction(-1)}


def test_three_generator_dimensions(ym3_l4):
    assert ym3_l4.degree_dims() == [3, 3, 5, 10]
    assert ym3_l4.dim == 21


def test_labels_are_lyndon_words(ym3_l3):
    assert [b.label for b in ym3_l3.basis][:6] == ["x1", "x2", "x3", "x12", "x13", "x23"]
    assert all(b.tree.startswith("[") for b in ym3_l3.basis if b.degree > 1)


def test_lower_central_series(ym3_l3):
    assert ymquotient.lower_central_series(ym3_l3) == [11, 8, 5, 0]


def test_named_identities_reduce(ym3_l3):
    assert ymquotient.reduce_label(ym3_l3, "x332") == ymquotient.reduce_label(ym3_l3, "x112").scale(-1)
    assert ymquotient.reduce_label(ym3_l3, "x213") == (
        ymquotient.reduce_label(ym3_l3, "x123") + ymquotient.reduce_label(ym3_l3, "x312")
    )


def test_relators_vanish(ym3_l4):
    for j in (1, 2, 3):
        assert ymquotient.relator_element(ym3_l4, j).is_zero()


def test_reduce_above_nilpotency_class_is_zero(ym3_l2):
    assert ymquotient.reduce(ym3_l2, BracketTree.right_nested((1, 1, 2))).is_zero()


def test_reduce_rejects_unknown_generator(ym3_l2):
    with pytest.raises(InvalidInputError):
        ymquotient.reduce(ym3_l2, BracketTree.parse("[x1,x4]"))


def test_reduce_free_matches_reduce(ym3_l3):
    e = FreeLieElement(3, {(1, 1, 2): 1, (2, 2, 3): 2})
    expected = ymquotient.reduce_label(ym3_l3, "x112") + ymquotient.reduce_label(ym3_l3, "x223").scale(2)
    assert ymquotient.reduce_free(ym3_l3, e) == expected


@pytest.mark.parametrize("l", [1, 2, 3, 4])
def test_reference_bases(l):
    assert ymquotient.verify_reference_basis(l)


def test_reference_identities():
    results = ymquotient.verify_reference_identities()
    assert len(results) == len(REFERENCE_IDENTITIES)
    assert all(results.values())
    assert "x332=(-1)x112" in results


def test_reference_basis_only_for_three_generators():
    with pytest.raises(UnsupportedError):
        ymquotient.reference_basis(2, n=2)
    with pytest.raises(UnsupportedError):
        ymquotient.reference_basis(5)


def test_build_validation():
    with pytest.raises(InvalidInputError):
        ymquotient.build(1, 3)
    with pytest.raises(InvalidInputError):
        ymquotient.build(3, 0)
    with pytest.raises(InvalidInputError):
        ymquotient.build(3, 99)


def test_build_is_cached():
    assert ymquotient.build(3, 3) is ymquotient.build(3, 3)


def test_no_jacobi_violations(ym3_l4):
    assert ymquotient.jacobi_violations(ym3_l4) == []


def test_pbw_monomial_counts(ym3_l2, heisenberg):
    assert ymquotient.pbw_monomials(ym3_l2, 2).counts() == [1, 3, 9]
    assert ymquotient.pbw_monomials(heisenberg, 3).counts() == [1, 2, 4, 6]
    table = ymquotient.pbw_monomials(heisenberg, 0)
    assert table.monomials == ((0, 0, 0),)


def test_pbw_monomials_are_ordered_by_degree(heisenberg):
    degrees = ymquotient.pbw_monomials(heisenberg, 3).degrees
    assert list(degrees) == sorted(degrees)


def test_pbw_counts_match_hilbert_series(ym3_l4):
    counts = ymquotient.pbw_monomials(ym3_l4, 4).counts()
    assert counts == series.hilbert_ym(3, 4).as_list()
    table = ymquotient.pbw_monomials(ym3_l4, 1)
    assert table.counts() == [1, 3]
    assert all(len(m) == ym3_l4.dim for m in table.monomials)


def test_derivation(ym3_l2):
    d1 = ymquotient.derivation_di
    assert d1(ym3_l2, 1, {(1, 0, 0, 0, 0, 0): Fraction(1)}) == {(0, 0, 0, 0, 0, 0): Fraction(1)}
    assert d1(ym3_l2, 1, {(0, 0, 0, 1, 0, 0): Fraction(1)}) == {}
    assert d1(ym3_l2, 1, {(2, 1, 0, 0, 0, 0): Fraction(1)}) == {(1, 1, 0, 0, 0, 0): Fraction(2)}
    with pytest.raises(InvalidInputError):
        d1(ym3_l2, 4, {})


def test_kernel_intersection_dims(ym3_l4):
    assert ymquotient.kernel_intersection_dims(ym3_l4, 4) == [1, 0, 3, 5, 16]
    assert ymquotient.kernel_intersection_dims(ymquotient.build(2, 4), 4) == [1, 0, 1, 0, 1]
    assert ymquotient.kernel_intersection_dims(ymquotient.build(3, 1), 1) == [1, 0]


def test_kernel_intersection_needs_enough_degrees(ym3_l2):
    with pytest.raises(InvalidInputError):
        ymquotient.kernel_intersection_dims(ym3_l2, 3)


def test_character_representation():
    rep = ymquotient.character_rep(3, [Fraction(1), Fraction(2), Fraction(-5, 3)])
    assert rep.relator_images() == [0, 0, 0]
    assert rep.act_tree(BracketTree.parse("[x1,x2]")) == 0
    with pytest.raises(InvalidInputError):
        ymquotient.character_rep(3, [1, 2])


@pytest.mark.slow
def test_degree_eight_dimension():
    assert ymquotient.build(3, 8).degree_dims()[-1] == 270


@pytest.mark.slow
def test_pbw_monomials_on_large_algebra():
    g = ymquotient.build(9, 4)
    assert g.dim > 1000
    assert ymquotient.pbw_monomials(g, 1).counts() == [1, 9]
