import pytest

from skth.heights import MetrizedToricDivisor
from skth.polytope import standard_simplex
from skth.ronkin import QuadratureSpec


@pytest.fixture(scope="module")
def o1_p1():
    return MetrizedToricDivisor.canonical(standard_simplex(1))


@pytest.fixture(scope="module")
def o1_p2():
    return MetrizedToricDivisor.canonical(standard_simplex(2))


@pytest.fixture(scope="module")
def coarse_spec():
    return QuadratureSpec(points_per_axis=32)


@pytest.fixture(scope="module")
def random_divisor(random_concave):
    def get_divisor(rank, prime, hi=2):
        g = random_concave(rank, n_gens=4, hi=hi)
        return MetrizedToricDivisor(g.domain, {prime: g})

    return get_divisor
