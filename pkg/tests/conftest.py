from fractions import Fraction

import pytest
from numpy.random import default_rng

from skth.concave import ConcaveFn
from skth.exactnum import LinLogValue
from skth.polytope import RationalPolytope, standard_simplex


def pytest_addoption(parser):
    parser.addoption(
        "--run_slow",
        action="store_true",
        default=False,
        help="run slow tests",
    )


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: mark test as slow")


def pytest_collection_modifyitems(config, items):
    if not config.getoption("--run_slow"):
        skip_slow = pytest.mark.skip(reason="need --run_slow option to run")
        for item in items:
            if "slow" in item.keywords:
                item.add_marker(skip_slow)


@pytest.fixture(scope="package")
def np_rng():
    # exact batteries are reproducible run to run
    return default_rng(20260417)


@pytest.fixture(scope="module")
def random_rational(np_rng):
    def get_q(lo=-4, hi=4, max_den=4):
        den = int(np_rng.integers(1, max_den + 1))
        num = int(np_rng.integers(lo * den, hi * den + 1))
        return Fraction(num, den)

    return get_q


@pytest.fixture(scope="module")
def random_lattice_polytope(np_rng):
    def get_poly(rank, n_points=None, lo=0, hi=3):
        n_points = rank + 2 if n_points is None else n_points
        pts = np_rng.integers(lo, hi + 1, size=(n_points, rank))
        return RationalPolytope([tuple(int(c) for c in p) for p in pts])

    return get_poly


@pytest.fixture(scope="class")
def simplex2():
    return standard_simplex(2)


@pytest.fixture(scope="module")
def random_concave(np_rng):
    def get_fn(rank, n_gens=5, log_values=False, hi=3):
        pts = np_rng.integers(0, hi + 1, size=(n_gens, rank))
        gens = []
        for p in pts:
            t = Fraction(int(np_rng.integers(-8, 9)), int(np_rng.integers(1, 4)))
            if log_values:
                t = t + LinLogValue(
                    0, {2: int(np_rng.integers(-2, 3)), 3: int(np_rng.integers(-2, 3))}
                )
            gens.append((tuple(int(c) for c in p), t))
        return ConcaveFn(gens, rank=rank)

    return get_fn
