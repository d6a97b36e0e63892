from fractions import Fraction

import pytest

from skth.concave import (
    ConcaveFn,
    MinAffineFn,
    canonicalize,
    evaluate,
    indicator,
    support_fn,
    legendre_dual,
    legendre_dual_back,
    sup_convolve,
    translate,
    add_constant,
    right_scale,
    push_forward,
    sample_concave,
    restrict_to_face,
    recoordinatize,
    fs_roof_oracle,
    max_value,
)
from skth.exactnum import Approx, LinLogValue
from skth.lattice import quotient_by_primitive, perp_sublattice
from skth.polytope import hull, segment, cube, standard_simplex, lattice_points
from skth.utility.exceptions import OutsideDomainError, RankMismatchError
from skth.utility.internal import dot

LOG2 = LinLogValue.log_prime(2)
HALF = Fraction(1, 2)


class TestCanonicalize:
    def test_affine_middle_dropped(self):
        g = ConcaveFn([((0,), 0), ((1,), 0), ((HALF,), 0)])

        assert g.generators == (((0,), 0), ((1,), 0))

    def test_tent_kept(self):
        g = ConcaveFn([((0,), 0), ((1,), 0), ((HALF,), 1)])

        assert len(g.generators) == 3

    def test_below_hull_dropped(self):
        g = ConcaveFn([((0,), 0), ((1,), 0), ((HALF,), -1)])

        assert g.generators == (((0,), 0), ((1,), 0))
        assert g.eval((HALF,)) == 0

    def test_lazy(self):
        g = ConcaveFn([((0,), 0), ((1,), 0), ((HALF,), -1)], canonicalize=False)

        assert len(g.generators) == 3
        assert not g.canonicalized
        assert g.eval((HALF,)) == 0
        assert canonicalize(g).generators == (((0,), 0), ((1,), 0))

    def test_repeated_points(self):
        g = ConcaveFn([((0,), 0), ((0,), 3), ((1,), 1)])

        assert g.generators == (((0,), 3), ((1,), 1))

    def test_face_interior_dropped(self):
        # the center of the square lies on the single affine piece
        gens = [((0, 0), 0), ((2, 0), 2), ((0, 2), 2), ((2, 2), 4), ((1, 1), 2)]
        g = ConcaveFn(gens)

        assert len(g.generators) == 4
        assert len(g.pieces) == 1
        assert g.pieces[0].gradient == (1, 1)

    def test_empty(self):
        with pytest.raises(ValueError):
            ConcaveFn([])

    def test_evaluation_unchanged(self, random_concave):
        for _ in range(10):
            g = random_concave(2, n_gens=6)
            low = [(x, -100) for x in lattice_points(g.domain)]
            raw = ConcaveFn(list(g.generators) + low, canonicalize=False)
            for x in lattice_points(g.domain, 2):
                assert g.eval(x) == raw.eval(x)


class TestEval:
    def test_tent(self, tent):
        assert tent.eval((Fraction(1, 4),)) == Fraction(1, 4)
        assert tent((Fraction(3, 4),)) == Fraction(1, 4)
        assert evaluate(tent, (HALF,)) == HALF

    def test_outside(self, tent):
        assert tent.eval((2,)) is None

        with pytest.raises(OutsideDomainError):
            tent.eval((2,), strict=True)

    def test_rank_mismatch(self, tent):
        with pytest.raises(RankMismatchError):
            tent.eval((0, 0))

    def test_indicator(self, simplex2):
        g = indicator(simplex2)

        assert len(g.generators) == 3
        assert all(t == 0 for t in g.values)
        assert g.eval((Fraction(1, 3), Fraction(1, 3))) == 0

    def test_lower_dimensional_domain(self):
        g = ConcaveFn([((0, 0), 0), ((2, 2), 2), ((1, 1), 3)])

        assert g.dimension == 1
        assert g.eval((HALF, HALF)) == Fraction(3, 2)
        assert g.eval((1, 0)) is None

    def test_point_domain(self):
        g = ConcaveFn([((), LOG2)], rank=0)

        assert g.eval(()) == LOG2

    def test_log_values(self):
        g = ConcaveFn([((0,), 0), ((1,), 0), ((HALF,), LOG2)])

        assert len(g.generators) == 3
        assert g.eval((Fraction(1, 4),)) == LOG2 / 2
        assert g.pieces[0].gradient in ((2 * LOG2,), (-2 * LOG2,))

    def test_concavity(self, random_concave, np_rng):
        for log_values in (False, True):
            for _ in range(5):
                g = random_concave(2, n_gens=5, log_values=log_values)
                pts = lattice_points(g.domain, 3)
                for _ in range(10):
                    i, j = np_rng.integers(0, len(pts), size=2)
                    x1, x2 = pts[i], pts[j]
                    t = Fraction(int(np_rng.integers(0, 5)), 4)
                    x = tuple(t * a + (1 - t) * b for a, b in zip(x1, x2))

                    assert g.eval(x) >= t * g.eval(x1) + (1 - t) * g.eval(x2)


class TestSupport:
    def test_segment(self):
        h = support_fn(segment((0,), (1,)))

        assert h.eval((3,)) == 0
        assert h.eval((-2,)) == -2

    def test_point(self):
        h = support_fn(hull([(2, 3)]))

        assert len(h.pieces) == 1
        assert h.eval((1, -1)) == -1

    def test_log_point(self):
        h = support_fn(cube(2))

        assert h.eval((LOG2, -LOG2)) == -LOG2


class TestDuality:
    def test_indicator_dual(self):
        Q = segment((0,), (1,))

        assert legendre_dual(indicator(Q)) == support_fn(Q)

    def test_tent_dual(self, tent):
        h = legendre_dual(tent)

        assert h == MinAffineFn([((0,), 0), ((HALF,), -HALF), ((1,), 0)])
        assert h.eval((3,)) == 0
        assert h.eval((-1,)) == -1
        assert legendre_dual_back(h) == tent

    def test_constant_shift(self, tent):
        h = legendre_dual(add_constant(tent, 1))

        for v in (-2, 0, Fraction(1, 3), 5):
            assert h.eval((v,)) == legendre_dual(tent).eval((v,)) - 1

    def test_domain_hint(self, tent):
        h = legendre_dual(tent)

        assert legendre_dual_back(h, domain_hint=segment((0,), (1,))) == tent
        with pytest.raises(ValueError):
            legendre_dual_back(h, domain_hint=segment((0,), (2,)))

    def test_involution(self, random_concave):
        for rank in (1, 2, 3):
            for log_values in (False, True):
                g = random_concave(rank, log_values=log_values)

                assert legendre_dual_back(legendre_dual(g)) == g

    def test_exchanges_sum(self, random_concave, random_rational):
        for _ in range(5):
            g, h = random_concave(2), random_concave(2, log_values=True)
            gh = legendre_dual(sup_convolve(g, h))
            for _ in range(5):
                u = (random_rational(), random_rational())

                assert gh.eval(u) == legendre_dual(g).eval(u) + legendre_dual(h).eval(u)

    def test_translate(self, random_concave, random_rational):
        g = random_concave(2)
        x0 = (Fraction(1, 3), -2)
        ht = legendre_dual(translate(g, x0))
        for _ in range(5):
            u = (random_rational(), random_rational())

            assert ht.eval(u) == legendre_dual(g).eval(u) + dot(x0, u)


class TestMinAffineFn:
    def test_duplicate_slopes(self):
        h = MinAffineFn([((1,), 2), ((1,), -1), ((0,), 0)])

        assert h.pieces == (((0,), 0), ((1,), -1))

    def test_add(self):
        a = MinAffineFn([((0,), 0), ((1,), 0)])
        b = MinAffineFn([((0,), 1)])

        assert (a + b).eval((-1,)) == 0
        assert a.add(b).eval((2,)) == 1

    def test_add_constant(self):
        h = MinAffineFn([((0,), 0), ((1,), 0)]).add_constant(LOG2)

        assert h.eval((5,)) == LOG2

    def test_canonicalize(self):
        h = MinAffineFn([((0,), 0), ((HALF,), 1), ((1,), 0)])

        assert h.canonicalize().pieces == (((0,), 0), ((1,), 0))

    def test_json(self):
        h = MinAffineFn([((0, 1), LOG2), ((1, 0), Fraction(-1, 3))])

        assert MinAffineFn.from_json(h.to_json()) == h

    def test_empty(self):
        with pytest.raises(ValueError):
            MinAffineFn([])


class TestConvolution:
    def test_indicators(self):
        A, B = segment((0, 0), (1, 0)), segment((0, 0), (0, 2))

        assert sup_convolve(indicator(A), indicator(B)) == indicator(A + B)

    def test_point_translates(self, tent):
        assert sup_convolve(tent, indicator(hull([(3,)]))) == translate(tent, (3,))

    def test_tent_tent(self, tent):
        g = sup_convolve(tent, tent)

        assert g.domain == segment((0,), (2,))
        assert g.eval((1,)) == 1
        assert max_value(g) == 1

    def test_rank_mismatch(self, tent, simplex2):
        with pytest.raises(RankMismatchError):
            sup_convolve(tent, indicator(simplex2))

    def test_tolerance_adds(self):
        g = ConcaveFn([((0,), Approx(0.1, 1e-12)), ((1,), 0)])
        h = sup_convolve(g, g)

        assert g.tolerance > 0
        assert h.tolerance == 2 * g.tolerance


class TestTransforms:
    def test_translate_indicator(self):
        g = translate(indicator(segment((0,), (1,))), (2,))

        assert g == indicator(segment((2,), (3,)))

    def test_add_constant(self, simplex2):
        g = add_constant(indicator(simplex2), 1)

        assert g.eval((Fraction(1, 3), Fraction(1, 4))) == 1

    def test_right_scale(self, tent):
        g = right_scale(tent, 2)

        assert g.domain == segment((0,), (2,))
        assert g.eval((1,)) == 1

        with pytest.raises(ValueError):
            right_scale(tent, 0)

    def test_push_forward_indicator(self, simplex2):
        pi = quotient_by_primitive((0, 1))

        assert push_forward(indicator(simplex2), pi) == indicator(segment((0,), (1,)))

    def test_push_forward_fiber_max(self):
        g = ConcaveFn([((0, 0), 0), ((1, 0), 0), ((0, 1), 1)])
        f = push_forward(g, quotient_by_primitive((0, 1)))

        assert f.generators == (((0,), 1), ((1,), 0))
        assert f.eval((HALF,)) == HALF

    def test_push_forward_dominates(self, random_concave):
        pi = quotient_by_primitive((1, 1))
        for _ in range(5):
            g = random_concave(2)
            f = push_forward(g, pi)
            for x in lattice_points(g.domain, 2):
                assert f.eval(pi.apply(x)) >= g.eval(x)

    def test_push_forward_of_translate(self, tent):
        g = ConcaveFn([((0, 0), 0), ((2, 0), 1), ((0, 1), 2)])
        pi = quotient_by_primitive((1, 1))
        x0 = (3, -1)

        assert push_forward(translate(g, x0), pi) == translate(push_forward(g, pi), pi.apply(x0))

    def test_push_forward_rank(self, tent):
        with pytest.raises(RankMismatchError):
            push_forward(tent, quotient_by_primitive((0, 1)))

    def test_restrict_to_face(self, simplex2):
        g = ConcaveFn([((0, 0), 0), ((1, 0), 1), ((0, 1), 2), ((Fraction(1, 3), Fraction(1, 3)), 5)])
        r = restrict_to_face(g, (1, 0))

        assert r.generators == (((0, 0), 0), ((0, 1), 2))

    def test_recoordinatize(self):
        g = ConcaveFn([((1, 0), 0), ((0, 1), 2)])
        sub = perp_sublattice((1, 1))
        h = recoordinatize(g, sub, (1, 0))

        assert h.ambient_rank == 1
        assert h.generators == (((-1,), 2), ((0,), 0))


class TestSampling:
    def test_fs_segment(self):
        theta = fs_roof_oracle(1)

        assert theta((0,)) == 0
        assert theta((HALF,)) == LOG2 / 2
        with pytest.raises(OutsideDomainError):
            theta((2,))

    def test_fs_sample(self):
        g = sample_concave(fs_roof_oracle(1), segment((0,), (1,)), 2)

        assert g.generators == (((0,), 0), ((HALF,), LOG2 / 2), ((1,), 0))

    def test_fs_simplex_barycenter(self):
        theta = fs_roof_oracle(2)
        third = Fraction(1, 3)

        assert theta((third, third)) == LinLogValue.log_prime(3) / 2

    def test_constant(self, simplex2):
        g = sample_concave(lambda x: Fraction(2), simplex2, 3)

        assert g == add_constant(indicator(simplex2), 2)

    def test_linear(self):
        g = sample_concave(lambda x: 3 * x[0], segment((0,), (1,)), 4)

        assert len(g.generators) == 2

    def test_vertices_off_grid(self):
        Q = segment((Fraction(1, 3),), (1,))
        g = sample_concave(lambda x: Fraction(0), Q, 2)

        assert g.domain == Q

    def test_below_oracle(self):
        theta = fs_roof_oracle(2)
        g = sample_concave(theta, standard_simplex(2), 2)
        x = (Fraction(1, 3), Fraction(1, 3))

        assert g.eval(x) <= theta(x)


class TestSerialization:
    def test_round_trip(self, random_concave):
        g = random_concave(2, log_values=True)

        assert ConcaveFn.from_json(g.to_json()) == g

    def test_approx_snapped(self):
        g = ConcaveFn([((0,), Approx(0.1, 1e-12)), ((1,), 0)])
        data = g.to_json()

        assert g.is_exact is False
        assert data["tolerance"] != "0"
        assert ConcaveFn.from_json(data) == g

    def test_repr(self, tent):
        assert repr(tent).startswith("ConcaveFn(rank=1")
