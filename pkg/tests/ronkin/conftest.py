import pytest

from skth.ronkin import LaurentPoly


@pytest.fixture(scope="module")
def trinomial():
    return LaurentPoly.from_expression("1 + x + y")


@pytest.fixture(scope="module")
def linear_2x_4():
    return LaurentPoly.from_expression("2*x + 4")
