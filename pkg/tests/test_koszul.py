import pytest

from app.services import exactalg, koszul
from app.utils.exceptions import InvalidInputError


def test_sym_basis_order():
    basis = koszul.sym_basis(3, 2)
    assert len(basis) == 6
    assert basis.monomials[0] == (2, 0, 0)
    assert basis.tensor_index((2, 0, 0), 2) == 2


def test_first_homology_small_slices():
    assert koszul.homology_dims(3, 0).h1 == 0
    assert koszul.homology_dims(3, 1).h1 == 3
    assert koszul.homology_dims(3, 2).h1 == 5


@pytest.mark.parametrize("p", [1, 2, 3, 4, 5])
def test_closed_form_matches_homology(p):
    assert koszul.closed_form_h1(3, p) == koszul.homology_dims(3, p).h1 == 2 * p + 1


@pytest.mark.parametrize("n,p", [(2, 0), (2, 3), (4, 0), (4, 2), (5, 3)])
def test_closed_form_other_generators(n, p):
    assert koszul.closed_form_h1(n, p) == koszul.homology_dims(n, p).h1


@pytest.mark.parametrize("p", [0, 1, 2, 3])
def test_higher_homology_vanishes(p):
    dims = koszul.homology_dims(3, p)
    assert dims.h2 == 0
    assert dims.h3 == 0


def test_h0_is_symmetric_power_modulo_image():
    # d_1^{p-1} 满射, 除 p = 0 外 H_0 为零
    assert koszul.homology_dims(3, 0).h0 == 1
    assert koszul.homology_dims(3, 2).h0 == 0


def test_w_dims():
    assert koszul.w_dims(3, 6) == [3, 5, 7, 9, 11]
    assert koszul.w_dims(2, 5) == [1, 0, 0, 0]
    assert koszul.w_dims(4, 3)[0] == 6


def test_slice_shapes_and_ranks():
    s = koszul.build_slice(3, 0)
    assert (s.d1.rows, s.d1.cols) == (10, 18)
    assert exactalg.rank(s.d1) == 10
    s = koszul.build_slice(2, 2)
    assert (s.d3.rows, s.d3.cols) == (6, 2)
    assert exactalg.rank(s.d3) == 2


def test_kernel_of_first_differential():
    # n·C(n+p-1,p) - C(n+p,p+1)
    assert koszul.kernel_d1_dim(3, 2) == 18 - 10


def test_euler_characteristic():
    assert koszul.euler_check(3, 6)
    assert koszul.euler_check(2, 5)


def test_invalid_arguments():
    with pytest.raises(InvalidInputError):
        koszul.homology_dims(1, 2)
    with pytest.raises(InvalidInputError):
        koszul.build_slice(3, -1)
    with pytest.raises(InvalidInputError):
        koszul.w_dims(3, 1)
