import random
from fractions import Fraction

import pytest

from app.models.lie import BracketTree, FreeLieElement, is_lyndon
from app.services import freelie, series
from app.utils.exceptions import InvalidInputError, NotLieElementError


def labels(words):
    return [str(w) for w in words]


def test_lyndon_basis_order():
    assert labels(freelie.lyndon_basis(2, 3)) == ["112", "122"]
    assert labels(freelie.lyndon_basis(3, 2)) == ["12", "13", "23"]


@pytest.mark.parametrize("n,j", [(2, 1), (2, 6), (3, 4), (3, 5), (4, 3)])
def test_lyndon_count_matches_necklaces(n, j):
    words = freelie.lyndon_basis(n, j)
    assert len(words) == series.necklace_count(n, j)
    assert all(is_lyndon(w.letters) for w in words)


def test_standard_bracketing():
    w112, w122 = freelie.lyndon_basis(2, 3)
    assert str(freelie.standard_bracketing(w112)) == "[x1,[x1,x2]]"
    assert str(freelie.standard_bracketing(w122)) == "[[x1,x2],x2]"


def test_to_tensor_of_commutator():
    x12 = FreeLieElement.basis(2, (1, 2))
    assert freelie.to_tensor(x12) == {(1, 2): Fraction(1), (2, 1): Fraction(-1)}


def test_from_tensor_rejects_non_lie_elements():
    with pytest.raises(NotLieElementError):
        freelie.from_tensor({(1, 2): Fraction(1)}, 2, 2)


def test_bracket_is_antisymmetric():
    x1 = FreeLieElement.basis(2, (1,))
    x12 = FreeLieElement.basis(2, (1, 2))
    assert freelie.bracket(x1, x12) == FreeLieElement.basis(2, (1, 1, 2))
    assert freelie.bracket(x12, x1) == -FreeLieElement.basis(2, (1, 1, 2))
    assert freelie.bracket(x1, x1).is_zero()


def test_evaluate_tree_reduces_to_lyndon_coordinates():
    # [x2,[x1,x2]] = -[[x1,x2],x2]
    tree = BracketTree.parse("[x2,[x1,x2]]")
    assert freelie.evaluate_tree(tree, 2) == FreeLieElement(2, {(1, 2, 2): -1})


def test_jacobi_in_free_lie_algebra():
    x = [FreeLieElement.basis(3, (i,)) for i in (1, 2, 3)]
    b = freelie.bracket
    total = b(x[0], b(x[1], x[2])) + b(x[1], b(x[2], x[0])) + b(x[2], b(x[0], x[1]))
    assert total.is_zero()


def test_invalid_arguments():
    with pytest.raises(InvalidInputError):
        freelie.lyndon_basis(1, 3)
    with pytest.raises(InvalidInputError):
        freelie.evaluate_tree(BracketTree.generator(4), 3)


def random_element(rng, n, j, terms=3):
    words = freelie.lyndon_basis(n, j)
    chosen = rng.sample(words, min(terms, len(words)))
    return FreeLieElement(n, {w.letters: Fraction(rng.randint(-4, 4)) for w in chosen})


def test_to_tensor_of_degree_three_word():
    w112 = FreeLieElement.basis(2, (1, 1, 2))
    assert freelie.to_tensor(w112) == {(1, 1, 2): 1, (1, 2, 1): -2, (2, 1, 1): 1}


def test_standard_bracketing_of_degree_four_word():
    w1122 = freelie.lyndon_basis(2, 4)[1]
    assert str(w1122) == "1122"
    assert str(freelie.standard_bracketing(w1122)) == "[x1,[[x1,x2],x2]]"


@pytest.mark.parametrize("n", [2, 3])
def test_tensor_round_trip_on_basis(n):
    for j in range(1, 7):
        for w in freelie.lyndon_basis(n, j):
            e = FreeLieElement.basis(n, w.letters)
            assert freelie.from_tensor(freelie.to_tensor(e), j, n) == e


def test_jacobi_on_random_triples():
    rng = random.Random(2024)
    b = freelie.bracket
    for _ in range(12):
        n = rng.choice([2, 3])
        da, db = rng.randint(1, 3), rng.randint(1, 3)
        dc = rng.randint(1, 8 - da - db)
        x, y, z = (random_element(rng, n, d) for d in (da, db, dc))
        total = b(x, b(y, z)) + b(y, b(z, x)) + b(z, b(x, y))
        assert total.is_zero()


def test_antisymmetry_on_random_elements():
    rng = random.Random(5)
    for _ in range(20):
        n = rng.choice([2, 3])
        x = random_element(rng, n, rng.randint(1, 5))
        y = random_element(rng, n, rng.randint(1, 5))
        assert freelie.bracket(x, y) == -freelie.bracket(y, x)
        assert freelie.bracket(x, x).is_zero()
