from fractions import Fraction

import pytest

from skth.concave import ConcaveFn, indicator, max_value
from skth.exactnum import Approx, LinLogValue, value_from_json
from skth.heights import (
    MetrizedToricDivisor,
    FanRays,
    HypersurfaceCycle,
    HeightReport,
    degree,
    toric_variety_degree,
    orbit_closure_degree,
    weil_divisor_at_rays,
    toric_local_height,
    active_places,
    global_height,
    canonical_height,
    rho_height,
    fs_height,
    binomial_height_via_projection,
    Degree,
    Height,
)
from skth.polytope import dilate, segment, standard_simplex
from skth.ronkin import ARCH, LaurentPoly, PlaceQ, QuadratureSpec
from skth.utility.exceptions import (
    CanonicalMetricError,
    NotPrimitiveError,
    RankMismatchError,
)
from skth.utility.internal import dot

LOG2 = LinLogValue.log_prime(2)
M_TRINOMIAL = 0.3230659472194505


class TestMetrizedToricDivisor:
    def test_canonical(self, o1_p2):
        assert o1_p2.is_canonical
        assert o1_p2.non_canonical_places == []
        assert o1_p2.roof_at(7) == indicator(standard_simplex(2))

    def test_explicit_indicator_is_canonical(self):
        Q = standard_simplex(2)
        D = MetrizedToricDivisor(Q, {3: indicator(Q)})

        assert D.is_canonical

    def test_custom_places(self):
        Q = standard_simplex(1)
        g = ConcaveFn([((0,), 0), ((1,), 1)])
        D = MetrizedToricDivisor(Q, {"5": g, "arch": indicator(Q)})

        assert D.non_canonical_places == [PlaceQ(5)]
        assert D.roof_at(5) is g

    def test_fubini_study(self):
        D = MetrizedToricDivisor.fubini_study(1, resolution=2)

        assert D.fs_flag
        assert D.non_canonical_places == [ARCH]
        assert max_value(D.roof_at("arch")) == LOG2 / 2
        assert D.roof_at(2) == indicator(standard_simplex(1))

    def test_fubini_study_needs_simplex(self):
        with pytest.raises(ValueError):
            MetrizedToricDivisor(dilate(standard_simplex(2), 2), fs_resolution=4)

    def test_roof_domain_checked(self):
        g = ConcaveFn([((0,), 0), ((2,), 1)])

        with pytest.raises(ValueError):
            MetrizedToricDivisor(standard_simplex(1), {2: g})

    def test_sum(self):
        Q = standard_simplex(1)
        g = ConcaveFn([((0,), 0), ((1,), 1)])
        D = MetrizedToricDivisor(Q, {2: g}) + MetrizedToricDivisor.canonical(Q)

        assert D.polytope == segment((0,), (2,))
        assert D.non_canonical_places == [PlaceQ(2)]
        assert D.roof_at(2).eval((2,)) == 1
        assert D.roof_at(2).eval((0,)) == 0

    def test_sum_rank_mismatch(self, o1_p1, o1_p2):
        with pytest.raises(RankMismatchError):
            o1_p1 + o1_p2

    def test_json(self):
        Q = standard_simplex(1)
        D = MetrizedToricDivisor(Q, {3: ConcaveFn([((0,), 0), ((1,), LOG2)])})
        data = D.to_json()

        assert data["metric"] == "custom"
        assert MetrizedToricDivisor.from_json(data) == D
        assert MetrizedToricDivisor.from_json({"polytope": [[0], [1]], "metric": "fs"}).fs_flag

    def test_coerce(self, o1_p1):
        assert MetrizedToricDivisor.coerce([[0], [1]]) == o1_p1
        assert MetrizedToricDivisor.coerce(o1_p1) is o1_p1

    def test_unknown_metric(self):
        with pytest.raises(ValueError):
            MetrizedToricDivisor.from_json({"polytope": [[0], [1]], "metric": "flat"})


class TestFanRays:
    def test_projective_space(self):
        rays = FanRays.projective_space(2)

        assert list(rays) == [(1, 0), (0, 1), (-1, -1)]
        assert len(rays) == 3

    def test_not_primitive(self):
        with pytest.raises(NotPrimitiveError):
            FanRays([(2, 0)])

    def test_repeated(self):
        with pytest.raises(ValueError):
            FanRays([(1, 0), (1, 0)])

    def test_opposite_rays_allowed(self):
        assert len(FanRays([(1, 0), (-1, 0)])) == 2


class TestHypersurfaceCycle:
    def test_from_string(self):
        Z = HypersurfaceCycle("1 + x + y")

        assert Z.rank == 2
        assert not Z.is_zero
        assert Z.newton_polytope == standard_simplex(2)

    def test_monomial_is_zero(self):
        assert HypersurfaceCycle("3*x**2").is_zero


class TestDegree:
    def test_line_in_p2(self, o1_p2):
        assert degree(HypersurfaceCycle("1 + x + y"), [o1_p2]) == 1

    def test_conic(self, o1_p2):
        assert degree(HypersurfaceCycle("(1 + x + y)**2"), [o1_p2]) == 2

    def test_rank_one(self):
        assert degree(HypersurfaceCycle("x - 1"), []) == 1

    def test_polytopes_accepted(self):
        assert degree("1 + x + y", [standard_simplex(2)]) == 1

    def test_wrong_count(self, o1_p2):
        with pytest.raises(RankMismatchError):
            degree(HypersurfaceCycle("1 + x + y"), [o1_p2, o1_p2])

    def test_wrong_rank(self, o1_p1):
        with pytest.raises(RankMismatchError):
            degree(HypersurfaceCycle("1 + x + y"), [o1_p1])

    def test_toric_variety_degree(self, o1_p2):
        assert toric_variety_degree([o1_p2, o1_p2]) == 1
        assert toric_variety_degree([dilate(standard_simplex(2), 2), o1_p2]) == 2

    @pytest.mark.parametrize("ray", [(1, 0), (0, 1), (-1, -1)])
    def test_orbit_closure_degree(self, ray):
        assert orbit_closure_degree(ray, [standard_simplex(2)]) == 1
        assert orbit_closure_degree(ray, [dilate(standard_simplex(2), 3)]) == 3


class TestWeilDivisor:
    def test_line_in_p2(self):
        coefs = weil_divisor_at_rays("1 + x + y", FanRays.projective_space(2))

        assert coefs == {(1, 0): 0, (0, 1): 0, (-1, -1): -1}

    def test_monomial(self):
        rays = FanRays.projective_space(2)
        coefs = weil_divisor_at_rays("x*y**2", rays)

        assert coefs == {v: dot((1, 2), v) for v in rays}

    def test_origin_vertex(self):
        coefs = weil_divisor_at_rays("1 + x + y + x*y", [(1, 0), (0, 1), (1, 1)])

        assert set(coefs.values()) == {0}

    def test_translation_covariant(self):
        f = LaurentPoly.from_expression("1 + 2*x + y**2")
        m0 = (2, -1)
        rays = FanRays.projective_space(2)
        base = weil_divisor_at_rays(f, rays)
        shifted = weil_divisor_at_rays(f.shift(m0), rays)

        for v in rays:
            assert shifted[v] == base[v] + dot(m0, v)


class TestToricLocalHeight:
    @pytest.mark.parametrize("place", ["arch", 2, 3])
    def test_canonical_vanishes_linear(self, o1_p1, place):
        # both terms cancel for canonical roofs
        Z = HypersurfaceCycle("2*x + 4")

        assert toric_local_height(Z, [o1_p1], place) == 0

    def test_canonical_unit_coefficients(self, o1_p2):
        Z = HypersurfaceCycle("1 + x + y")

        assert toric_local_height(Z, [o1_p2, o1_p2], 3) == 0

    def test_fubini_study_point(self):
        D = MetrizedToricDivisor.fubini_study(1, resolution=2)

        assert toric_local_height(HypersurfaceCycle("x - 1"), [D], ARCH) == LOG2 / 2

    def test_zero_cycle(self, o1_p1):
        with pytest.warns(UserWarning):
            assert toric_local_height(HypersurfaceCycle("5*x"), [o1_p1], 5) == 0


class TestGlobalHeight:
    def test_active_places(self, random_divisor):
        D = random_divisor(2, 7)
        f = LaurentPoly.from_expression("6*x + y/5 - 1")

        expected = sorted({ARCH, PlaceQ(2), PlaceQ(3), PlaceQ(5)} | set(D.non_canonical_places))
        assert active_places(f, [D]) == expected

    def test_binomial_canonical(self, o1_p2):
        report = global_height(HypersurfaceCycle("x**2*y - 1"), [o1_p2, o1_p2], check_places=[5, 7])

        assert report.total == 0
        assert report.is_exact
        assert list(report.per_place) == [ARCH]
        assert report.checked == {PlaceQ(5): 0, PlaceQ(7): 0}

    def test_linear_matches_canonical(self, o1_p1):
        Z = HypersurfaceCycle("2*x + 4")
        report = global_height(Z, [o1_p1])

        assert report[ARCH] == 2 * LOG2
        assert report[2] == -LOG2
        assert report.total == LOG2
        assert report.total == canonical_height(Z, [o1_p1]).total

    def test_trinomial_canonical(self, o1_p2):
        # the maximum of the sampled dual sits on the 1/3 grid
        Z = HypersurfaceCycle("1 + x + y")
        report = global_height(Z, [o1_p2, o1_p2], grid=3)

        assert not report.is_exact
        assert report.degree == 1
        assert abs(float(report.total) - M_TRINOMIAL) < 2e-3
        assert abs(float(report.total) - float(canonical_height(Z, [o1_p2, o1_p2]).total)) < 2e-3

    def test_multilinear(self, o1_p2, random_divisor):
        Z = HypersurfaceCycle("2*x - 3*y**2")
        D1 = random_divisor(2, 5)
        D2 = random_divisor(2, 5)

        lhs = global_height(Z, [D1 + D2, o1_p2]).total
        rhs = global_height(Z, [D1, o1_p2]).total + global_height(Z, [D2, o1_p2]).total
        assert lhs == rhs

    def test_threads_deterministic(self, o1_p2, random_divisor):
        Z = HypersurfaceCycle("2*x - 3*y")
        Ds = [random_divisor(2, 5), o1_p2]
        serial = global_height(Z, Ds)
        parallel = global_height(Z, Ds, threads=3)

        assert serial.per_place == parallel.per_place
        assert list(serial.per_place) == list(parallel.per_place)

    def test_fubini_study_point(self):
        D = MetrizedToricDivisor.fubini_study(1)
        report = global_height(HypersurfaceCycle("x - 1"), [D])

        assert report.total == LOG2 / 2
        assert abs(float(report.total) - 0.34657359) < 1e-7

    def test_zero_cycle(self, o1_p1):
        with pytest.warns(UserWarning, match="zero cycle"):
            report = global_height(HypersurfaceCycle("3*x"), [o1_p1])

        assert report.total == 0
        assert report.is_zero_cycle

    def test_rank_mismatch(self, o1_p1):
        with pytest.raises(RankMismatchError):
            global_height(HypersurfaceCycle("1 + x + y"), [o1_p1, o1_p1])

    def test_active_place_not_rechecked(self, o1_p1):
        report = global_height(HypersurfaceCycle("2*x + 4"), [o1_p1], check_places=[2, 3])

        assert report.checked == {PlaceQ(3): 0}


class TestCanonicalHeight:
    def test_linear(self, o1_p1):
        report = canonical_height(HypersurfaceCycle("2*x + 4"), [o1_p1])

        assert report[ARCH] == 2 * LOG2
        assert report[2] == -LOG2
        assert report.total == LOG2
        assert report.metadata["path"] == "places"

    def test_unit_binomial(self, o1_p1):
        assert canonical_height(HypersurfaceCycle("x - 1"), [o1_p1]).total == 0

    def test_trinomial(self, o1_p2):
        report = canonical_height(HypersurfaceCycle("1 + x + y"), [o1_p2, o1_p2])

        assert report.metadata["path"] == "mahler"
        assert list(report.per_place) == [ARCH]
        assert abs(float(report.total) - M_TRINOMIAL) < 1e-3

    def test_integer_coefficients_primes_vanish(self, o1_p2):
        report = canonical_height(HypersurfaceCycle("1 + 2*x + 3*y"), [o1_p2, o1_p2])

        assert report[2] == 0
        assert report[3] == 0

    def test_degree_factor(self, o1_p1):
        D = MetrizedToricDivisor.canonical(dilate(standard_simplex(1), 3))
        report = canonical_height(HypersurfaceCycle("2*x + 4"), [D])

        assert report.degree == 3
        assert report.total == 3 * LOG2

    def test_requires_canonical(self):
        D = MetrizedToricDivisor.fubini_study(1, resolution=2)

        with pytest.raises(CanonicalMetricError, match="requires canonical metrics"):
            canonical_height(HypersurfaceCycle("x - 1"), [D])


class TestRhoHeight:
    def test_linear(self):
        report = rho_height(HypersurfaceCycle("2*x + 4"))

        assert value_from_json(report.metadata["integrals"]["2"]) == -Fraction(3, 2) * LOG2
        assert report[2] == -3 * LOG2
        assert report[ARCH] == 3 * LOG2
        assert report.total == 0

    @pytest.mark.parametrize("f", ["x - 1", "x*y - 1", "x**2*y**3*z - 1"])
    def test_binomials_vanish(self, f):
        report = rho_height(HypersurfaceCycle(f))

        assert report.total == 0
        assert report.is_exact

    def test_unit_invariance(self, coarse_spec):
        spec = coarse_spec
        f = LaurentPoly.from_expression("1 + x + y")
        g = f.shift((1, 2)).scale(-1)

        a = rho_height(HypersurfaceCycle(f), spec, grid=2)
        b = rho_height(HypersurfaceCycle(g), spec, grid=2)
        assert abs(float(a.total) - float(b.total)) < 1e-9

    def test_exact_at_primes(self):
        report = rho_height(HypersurfaceCycle("3*x + 9*y - 1"), QuadratureSpec(32), grid=2)

        assert not isinstance(report[3], Approx)
        assert isinstance(report[ARCH], Approx)


class TestFsHeight:
    def test_point(self):
        report = fs_height(HypersurfaceCycle("x - 1"))

        assert report.total == LOG2 / 2
        assert report.metadata["fs_resolution"] == 16

    def test_product_formula(self):
        # scaling by 2 moves log 2 from the archimedean place to the prime 2
        report = fs_height(HypersurfaceCycle("2*x - 2"), resolution=4)

        assert report[2] == -LOG2
        assert report.total == LOG2 / 2

    def test_integer_coefficients(self):
        report = fs_height(HypersurfaceCycle("x + 2"), resolution=4)

        assert report[2] == 0

    def test_matches_global_height(self):
        Z = HypersurfaceCycle("x + 3")
        D = MetrizedToricDivisor.fubini_study(1, resolution=4)

        assert fs_height(Z, resolution=4).total == global_height(Z, [D]).total

    def test_binomial_two_ways(self):
        D = MetrizedToricDivisor.fubini_study(2, resolution=2)
        main = fs_height(HypersurfaceCycle("y - 1"), resolution=2)
        proj = binomial_height_via_projection((0, 1), [D, D])

        assert main.total == proj.total


class TestBinomialProjection:
    def test_canonical(self, o1_p2):
        assert binomial_height_via_projection((1, 2), [o1_p2, o1_p2]).total == 0

    def test_not_primitive(self, o1_p2):
        with pytest.raises(NotPrimitiveError):
            binomial_height_via_projection((2, 2), [o1_p2, o1_p2])

    def test_matches_global_height(self, o1_p2, random_divisor):
        Ds = [random_divisor(2, 3), o1_p2]
        proj = binomial_height_via_projection((1, 2), Ds)
        main = global_height(HypersurfaceCycle("x*y**2 - 1"), Ds)

        assert proj.total == main.total

    @pytest.mark.slow
    def test_matches_global_height_battery(self, random_divisor):
        for _ in range(20):
            Ds = [random_divisor(2, 3), random_divisor(2, 5)]
            proj = binomial_height_via_projection((1, -1), Ds)
            main = global_height(HypersurfaceCycle("x/y - 1"), Ds)
            assert proj.total == main.total

    @pytest.mark.slow
    def test_fubini_study_rank_two(self):
        D = MetrizedToricDivisor.fubini_study(2, resolution=16)
        main = fs_height(HypersurfaceCycle("y - 1"), resolution=16)
        proj = binomial_height_via_projection((0, 1), [D, D])

        assert abs(float(main.total) - float(proj.total)) < 5e-2


class TestHeightReport:
    def test_total(self):
        report = HeightReport({2: -LOG2, "arch": 2 * LOG2}, 1)

        assert report.total == LOG2
        assert list(report.per_place) == [ARCH, PlaceQ(2)]
        assert report.is_exact
        assert report.error == 0

    def test_approx(self):
        report = HeightReport({ARCH: Approx(0.5, 1e-6), 3: LOG2}, 1)

        assert not report.is_exact
        assert report.error > 0
        assert report.total.contains(Fraction(1, 2) + LOG2)

    def test_frame(self):
        report = HeightReport({2: -LOG2, "arch": 2 * LOG2}, 1, checked={5: 0})
        frame = report.to_frame()

        assert list(frame.columns) == ["place", "value", "exact", "error", "checked"]
        assert list(frame["place"]) == ["arch", "2", "5", "total"]
        assert frame["checked"].tolist() == [False, False, True, False]
        assert frame["value"].iloc[-1] == pytest.approx(float(LOG2))

    def test_json(self):
        report = HeightReport({2: -LOG2, "arch": 2 * LOG2}, Fraction(1, 2), kind="canonical")
        data = report.to_json()
        back = HeightReport.from_json(data)

        assert data["degree"] == "1/2"
        assert back.total == report.total
        assert back.kind == "canonical"
        assert back.per_place == report.per_place


class TestHeightProcesses:
    def test_degree(self):
        res = Degree().predict(polynomial="1 + x + y", divisors=[standard_simplex(2).to_json()])

        assert res == {"degree": 1}

    def test_canonical(self):
        res = Height(kind="canonical").predict(polynomial="2*x + 4", divisors=[[[0], [1]]])

        assert isinstance(res["height"], HeightReport)
        assert res["height"].total == LOG2

    def test_local(self):
        res = Height(kind="local", place=2).predict(polynomial="2*x + 4", divisors=[[[0], [1]]])

        assert res == {"height": 0, "place": "2"}

    def test_projection(self):
        res = Height(kind="projection").predict(
            m=[1, 1], divisors=[[[0, 0], [1, 0], [0, 1]]] * 2
        )

        assert res["height"].total == 0

    def test_fs(self):
        res = Height(kind="fs", fs_resolution=2).predict(polynomial="x - 1")

        assert res["height"].total == LOG2 / 2

    def test_missing_divisors(self):
        with pytest.raises(ValueError):
            Height(kind="global").predict(polynomial="x - 1")

    def test_unknown_kind(self):
        with pytest.raises(ValueError):
            Height(kind="naive")

    def test_repr(self):
        assert repr(Degree()) == "Degree()"
        assert "kind='rho'" in repr(Height(kind="rho"))
