from fractions import Fraction

import pytest

from app.services import orbit, ymquotient


@pytest.fixture(scope="session")
def heisenberg():
    """ym(2)/C^2, 即 Heisenberg 李代数"""
    return ymquotient.build(2, 2)


@pytest.fixture(scope="session")
def ym3_l2():
    return ymquotient.build(3, 2)


@pytest.fixture(scope="session")
def ym3_l3():
    return ymquotient.build(3, 3)


@pytest.fixture(scope="session")
def ym3_l4():
    return ymquotient.build(3, 4)


@pytest.fixture(scope="session")
def heisenberg_functional(heisenberg):
    return orbit.functional(heisenberg, {heisenberg.index_of_label("x12"): Fraction(1)})


@pytest.fixture(scope="session")
def weight1_functional(ym3_l2):
    return orbit.functional_from_labels(ym3_l2, {"x13": "1", "x23": "1"})
