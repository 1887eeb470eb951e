import random
from fractions import Fraction

from app.models.matrix import RatMatrix, SparseRatMatrix
from app.services import exactalg


def F(*values):
    return tuple(Fraction(v) for v in values)


def test_rref_and_pivots():
    m = RatMatrix.from_rows([[1, 2], [2, 4]])
    reduced, pivots = exactalg.rref(m)
    assert pivots == (0,)
    assert reduced.to_rows() == [[1, 2], [0, 0]]


def test_rref_of_empty_matrix():
    m = RatMatrix.zeros(0, 3)
    assert exactalg.rref(m) == (m, ())
    assert exactalg.rank(m) == 0


def test_kernel_basis_one_vector_per_free_column():
    m = RatMatrix.from_rows([[1, 2, 3], [2, 4, 6]])
    kernel = exactalg.kernel_basis(m)
    assert kernel == [F(-2, 1, 0), F(-3, 0, 1)]
    for v in kernel:
        assert not any(m.apply(v))


def test_rank_nullity_on_random_matrices():
    rng = random.Random(7)
    for _ in range(50):
        rows, cols = rng.randint(1, 5), rng.randint(1, 5)
        m = RatMatrix.from_rows([[rng.randint(-2, 2) for _ in range(cols)] for _ in range(rows)], cols)
        assert exactalg.rank(m) + len(exactalg.kernel_basis(m)) == cols


def test_solve_in_span():
    basis = [F(1, 0, 1), F(0, 1, 1)]
    assert exactalg.solve_in_span(F(2, 3, 5), basis) == F(2, 3)
    assert exactalg.solve_in_span(F(0, 0, 1), basis) is None
    assert exactalg.in_span(F(0, 0, 0), [])


def test_rational_entries_stay_exact():
    m = RatMatrix.from_rows([[Fraction(1, 3), Fraction(1, 2)], [Fraction(2, 3), 1]])
    assert exactalg.rank(m) == 1


def test_sparse_rank_matches_dense():
    sparse = SparseRatMatrix.from_entries(3, 3, [(0, 0, 1), (1, 1, 1), (2, 0, 1), (2, 1, 1)])
    assert exactalg.rank(sparse) == exactalg.rank(sparse.to_dense()) == 2
    assert exactalg.nullity(sparse) == 1


def test_sparse_product_and_zero_entries_dropped():
    a = SparseRatMatrix.from_entries(2, 2, [(0, 0, 1), (0, 0, -1), (1, 0, 2)])
    assert a.nnz() == 1
    b = SparseRatMatrix.from_entries(2, 1, [(0, 0, 3)])
    assert (a @ b)[1, 0] == 6


def test_sparse_echelon_tracks_combinations():
    echelon = exactalg.SparseEchelon()
    assert echelon.add({"a": 1, "b": 1}, "u")
    assert echelon.add({"b": 1}, "v")
    assert not echelon.add({"a": 2, "b": 3}, "w")
    combo = echelon.express({"a": 1})
    assert combo == {"u": 1, "v": -1}
    assert echelon.express({"c": 1}) is None
    assert len(echelon) == 2


def bareiss_rank(rows):
    # 无分数消元, 只用整数运算
    a = [list(r) for r in rows]
    m, n = len(a), len(a[0])
    rank, prev = 0, 1
    for col in range(n):
        pivot = next((i for i in range(rank, m) if a[i][col]), None)
        if pivot is None:
            continue
        a[rank], a[pivot] = a[pivot], a[rank]
        for i in range(rank + 1, m):
            for j in range(col + 1, n):
                a[i][j] = (a[i][j] * a[rank][col] - a[i][col] * a[rank][j]) // prev
            a[i][col] = 0
        prev = a[rank][col]
        rank += 1
    return rank


def test_identity_is_already_reduced():
    m = RatMatrix.from_rows([[1, 0], [0, 1]])
    reduced, pivots = exactalg.rref(m)
    assert pivots == (0, 1)
    assert reduced.to_rows() == [[1, 0], [0, 1]]


def test_rank_matches_fraction_free_elimination():
    rng = random.Random(3)
    for _ in range(30):
        rows = [[rng.randint(-3, 3) for _ in range(5)] for _ in range(5)]
        assert exactalg.rank(RatMatrix.from_rows(rows)) == bareiss_rank(rows)


def test_rref_is_idempotent():
    rng = random.Random(17)
    for _ in range(20):
        rows = [[Fraction(rng.randint(-5, 5), rng.randint(1, 3)) for _ in range(6)] for _ in range(4)]
        reduced, pivots = exactalg.rref(RatMatrix.from_rows(rows))
        again, pivots_again = exactalg.rref(reduced)
        assert again.to_rows() == reduced.to_rows()
        assert pivots_again == pivots
