from fractions import Fraction

import pytest

from skth.concave import ConcaveFn


@pytest.fixture(scope="module")
def tent():
    return ConcaveFn([((0,), 0), ((1,), 0), ((Fraction(1, 2),), Fraction(1, 2))])
