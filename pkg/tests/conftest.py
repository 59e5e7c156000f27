import pytest

from yangian2 import RTTAlgebra, Shape


@pytest.fixture(scope="session")
def alg11():
    """Small shop-floor algebra: one-one blocks, cap 4."""
    return RTTAlgebra(Shape(1, 1, 4))


@pytest.fixture(scope="session")
def alg21():
    return RTTAlgebra(Shape(2, 1, 4))
