"""
Degrees and heights of hypersurfaces in toric varieties

scikit-toric-heights developers
Copyright (c) 2026. All rights reserved.
"""
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
import logging
from math import factorial
from warnings import warn

from skth.exactnum import value_sign, value_to_json
from skth.lattice import perp_sublattice
from skth.mamixint import integrate, mixed_integral, mi_segment_projection
from skth.polytope import RationalPolytope, face, mixed_volume, support_value
from skth.ronkin import (
    ARCH,
    DEFAULT_GRID,
    LaurentPoly,
    PlaceQ,
    QuadratureSpec,
    mahler_measure,
    max_abs_log_coefficient,
    newton_polytope,
    ronkin_concave_approx,
    ronkin_value,
    support_primes,
)
from skth.heights.divisors import (
    DEFAULT_FS_RESOLUTION,
    FanRays,
    HypersurfaceCycle,
    MetrizedToricDivisor,
)
from skth.heights.report import HeightReport
from skth.utility.exceptions import (
    CanonicalMetricError,
    InvariantBreachError,
    RankMismatchError,
)
from skth.utility.internal import integer_vector, format_rational

__all__ = [
    "degree",
    "toric_variety_degree",
    "orbit_closure_degree",
    "weil_divisor_at_rays",
    "toric_local_height",
    "active_places",
    "global_height",
    "canonical_height",
    "rho_height",
    "fs_height",
    "binomial_height_via_projection",
]

logger = logging.getLogger(__name__)


def _check_divisors(Ds, rank, count):
    Ds = [MetrizedToricDivisor.coerce(D) for D in Ds]
    if len(Ds) != count:
        raise RankMismatchError(f"{count} divisors needed in rank {rank}, got {len(Ds)}")
    for D in Ds:
        if D.rank != rank:
            raise RankMismatchError(f"divisor of rank {D.rank} on a cycle of rank {rank}")
    return Ds


def _spec_metadata(spec, grid, radius):
    return {
        "points_per_axis": spec.points_per_axis,
        "precision_bits": spec.precision_bits,
        "grid": grid,
        "radius": None if radius is None else format_rational(radius),
    }


def _zero_report(Z, Ds, kind):
    warn(
        f"{Z!r} has a monomial defining polynomial and is the zero cycle, its height is 0",
        UserWarning,
    )
    deg = toric_variety_degree(Ds) if Ds is not None else Fraction(0)
    return HeightReport({ARCH: 0}, deg, kind=kind, metadata={"zero_cycle": True})


def _map_places(fn, places, threads):
    """Evaluate `fn` at every place, in place order, possibly in a thread pool."""
    if threads is None or threads <= 1 or len(places) <= 1:
        return {v: fn(v) for v in places}
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return dict(zip(places, pool.map(fn, places)))


# ================
# Degrees
# ================
def toric_variety_degree(Ds):
    """
    Degree of the toric variety with respect to `n` divisors,
    `MV(Delta_0, ..., Delta_{n-1})`.
    """
    return mixed_volume([MetrizedToricDivisor.coerce(D).polytope for D in Ds])


def degree(Z, Ds):
    """
    Degree of a hypersurface cycle with respect to `n - 1` divisors.

    Parameters
    ----------
    Z : HypersurfaceCycle
    Ds : sequence of MetrizedToricDivisor
        `n - 1` divisors of rank `n`. Polytopes are accepted in place of
        divisors.

    Returns
    -------
    deg : fractions.Fraction
        `MV(Delta_1, ..., Delta_{n-1}, NP(f))`.

    Raises
    ------
    RankMismatchError
        If the ranks differ or the number of divisors is not `n - 1`.
    """
    Z = HypersurfaceCycle.coerce(Z)
    Ds = _check_divisors(Ds, Z.rank, Z.rank - 1)
    return mixed_volume([D.polytope for D in Ds] + [Z.newton_polytope])


def orbit_closure_degree(ray, Ds):
    """
    Degree of the orbit closure of a ray with respect to `n - 1` divisors.

    Parameters
    ----------
    ray : tuple of int
        Primitive vector `v` of N.
    Ds : sequence of MetrizedToricDivisor
        `n - 1` divisors of rank `n`.

    Returns
    -------
    deg : fractions.Fraction
        Mixed volume in the lattice `M(v)` of the faces of the polytopes
        minimizing `<., v>`.
    """
    ray = integer_vector(ray)
    n = len(ray)
    Ds = _check_divisors(Ds, n, n - 1)
    sub = perp_sublattice(ray)
    faces = []
    for D in Ds:
        F = face(D.polytope, ray)
        origin = F.vertices[0]
        faces.append(
            RationalPolytope([sub.to_coords(x, origin) for x in F.vertices], rank=sub.rank)
        )
    return mixed_volume(faces)


def weil_divisor_at_rays(f, rays):
    """
    Multiplicities of the boundary divisors in the divisor of `f`.

    Parameters
    ----------
    f : {LaurentPoly, dict, str}
    rays : {FanRays, iterable}

    Returns
    -------
    coefficients : dict
        Mapping from each ray `v` to `Psi_NP(f)(v)`, the coefficient of the
        orbit closure of `v` in `div(f)` minus the closure of `V(f)`.
    """
    f = LaurentPoly.coerce(f)
    rays = rays if isinstance(rays, FanRays) else FanRays(rays)
    Q = newton_polytope(f)
    return {v: support_value(Q, v) for v in rays}


# ================
# Heights
# ================
def _rho_dual(f, place, spec, grid, radius):
    return ronkin_concave_approx(f, place, radius=radius, grid=grid, spec=spec)


def _mi_term(f, Ds, place, spec, grid, radius):
    roofs = [D.roof_at(place) for D in Ds]
    return mixed_integral(roofs + [_rho_dual(f, place, spec, grid, radius)])


def toric_local_height(Z, Ds, place, spec=None, grid=DEFAULT_GRID, radius=None):
    """
    Toric local height of a hypersurface at one place.

    Parameters
    ----------
    Z : HypersurfaceCycle
    Ds : sequence of MetrizedToricDivisor
        `n` divisors of rank `n`.
    place : {PlaceQ, str, int}
    spec : {None, QuadratureSpec}, optional
        Archimedean quadrature resolution.
    grid : int, optional
        Resolution of the archimedean Ronkin dual. Default is 12.
    radius : {None, int, fractions.Fraction}, optional
        Search radius of the archimedean Ronkin dual.

    Returns
    -------
    value : Value
        `MI(theta_0, ..., theta_{n-1}, rho^v) + deg(X) rho(0)` with the
        roofs and the Ronkin function at `place`.
    """
    Z = HypersurfaceCycle.coerce(Z)
    n = Z.rank
    Ds = _check_divisors(Ds, n, n)
    place = PlaceQ.parse(place)
    spec = QuadratureSpec() if spec is None else spec
    if Z.is_zero:
        warn(f"{Z!r} is the zero cycle, its local height is 0", UserWarning)
        return Fraction(0)

    mi = _mi_term(Z.f, Ds, place, spec, grid, radius)
    rho0 = ronkin_value(Z.f, place, tuple(0 for _ in range(n)), spec)
    return mi + toric_variety_degree(Ds) * rho0


def active_places(f, Ds=()):
    """
    Places where a height contribution can be non-zero: the archimedean
    place, the primes dividing a coefficient of `f`, and the places with a
    non-canonical roof.
    """
    places = {ARCH}
    places.update(PlaceQ(p) for p in support_primes(f))
    for D in Ds:
        places.update(D.non_canonical_places)
    return sorted(places)


def global_height(
    Z,
    Ds,
    spec=None,
    grid=DEFAULT_GRID,
    radius=None,
    threads=1,
    check_places=(),
):
    """
    Global height of a hypersurface with respect to adelic metrized toric
    divisors.

    Parameters
    ----------
    Z : HypersurfaceCycle
    Ds : sequence of MetrizedToricDivisor
        `n` divisors of rank `n`.
    spec : {None, QuadratureSpec}, optional
        Archimedean quadrature resolution.
    grid : int, optional
        Resolution of the archimedean Ronkin dual. Default is 12.
    radius : {None, int, fractions.Fraction}, optional
        Search radius of the archimedean Ronkin dual.
    threads : int, optional
        Number of places evaluated concurrently. Default is 1.
    check_places : sequence, optional
        Places outside the active set to evaluate as well. Their
        contributions are recorded in `HeightReport.checked`.

    Returns
    -------
    report : HeightReport
        The sum over the active places of `MI(theta_{0,v}, ..., rho_v^v)`.

    Raises
    ------
    InvariantBreachError
        If a checked place gives a non-zero exact contribution.
    """
    Z = HypersurfaceCycle.coerce(Z)
    n = Z.rank
    Ds = _check_divisors(Ds, n, n)
    spec = QuadratureSpec() if spec is None else spec
    if Z.is_zero:
        return _zero_report(Z, Ds, "global")

    places = active_places(Z.f, Ds)
    logger.info(f"global height of {Z!r} over places {[str(v) for v in places]}")
    per_place = _map_places(
        lambda v: _mi_term(Z.f, Ds, v, spec, grid, radius), places, threads
    )

    extra = [PlaceQ.parse(v) for v in check_places]
    extra = [v for v in extra if v not in per_place]
    checked = _map_places(lambda v: _mi_term(Z.f, Ds, v, spec, grid, radius), extra, threads)
    for v, value in checked.items():
        if value_sign(value) != 0:
            raise InvariantBreachError(f"inactive place {v} contributes {value}")

    return HeightReport(
        per_place,
        toric_variety_degree(Ds),
        kind="global",
        metadata=_spec_metadata(spec, grid, radius),
        checked=checked,
    )


def canonical_height(Z, Ds, spec=None):
    """
    Height with respect to divisors with canonical metrics.

    Parameters
    ----------
    Z : HypersurfaceCycle
    Ds : sequence of MetrizedToricDivisor
        `n` canonically metrized divisors of rank `n`. Polytopes are
        accepted in place of divisors.
    spec : {None, QuadratureSpec}, optional
        Resolution of the Mahler measure in several variables.

    Returns
    -------
    report : HeightReport
        Contributions `-deg(X) rho_{f,v}(0)`: `deg(X) m(f)` at the
        archimedean place and `deg(X) log max|c_m|_p` at the primes. For
        integer coefficients without common divisor the prime contributions
        vanish and the total is `deg(X) m(f)`.

    Raises
    ------
    CanonicalMetricError
        If a divisor has a non-canonical roof.
    """
    Z = HypersurfaceCycle.coerce(Z)
    n = Z.rank
    Ds = _check_divisors(Ds, n, n)
    if not all(D.is_canonical for D in Ds):
        raise CanonicalMetricError("canonical_height requires canonical metrics")
    spec = QuadratureSpec() if spec is None else spec
    if Z.is_zero:
        return _zero_report(Z, Ds, "canonical")

    deg = toric_variety_degree(Ds)
    per_place = {ARCH: deg * mahler_measure(Z.f, spec)}
    for p in support_primes(Z.f):
        per_place[PlaceQ(p)] = deg * max_abs_log_coefficient(Z.f, p)

    content, _ = Z.f.primitive_integer_form()
    integral = all(c.denominator == 1 for _, c in Z.f.terms)
    metadata = {
        "points_per_axis": spec.points_per_axis,
        "precision_bits": spec.precision_bits,
        "path": "mahler" if integral and content == 1 else "places",
    }
    return HeightReport(per_place, deg, kind="canonical", metadata=metadata)


def rho_height(Z, spec=None, grid=DEFAULT_GRID, radius=None):
    """
    Height of a hypersurface with respect to its Ronkin functions,
    `(n + 1)! sum_v integral of rho_v^v over NP(f)`.

    Parameters
    ----------
    Z : HypersurfaceCycle
    spec : {None, QuadratureSpec}, optional
    grid : int, optional
        Resolution of the archimedean Ronkin dual. Default is 12.
    radius : {None, int, fractions.Fraction}, optional

    Returns
    -------
    report : HeightReport
        Per-place values include the factor `(n + 1)!`. The unscaled
        integrals are listed under the "integrals" metadata key.
    """
    Z = HypersurfaceCycle.coerce(Z)
    spec = QuadratureSpec() if spec is None else spec
    if Z.is_zero:
        return _zero_report(Z, None, "rho")

    n = Z.rank
    scale = factorial(n + 1)
    integrals = {v: integrate(_rho_dual(Z.f, v, spec, grid, radius)) for v in active_places(Z.f)}
    metadata = _spec_metadata(spec, grid, radius)
    metadata["integrals"] = {str(v): value_to_json(x) for v, x in integrals.items()}
    return HeightReport(
        {v: scale * x for v, x in integrals.items()},
        Fraction(0),
        kind="rho",
        metadata=metadata,
    )


def fs_height(Z, spec=None, resolution=DEFAULT_FS_RESOLUTION, grid=DEFAULT_GRID, radius=None):
    """
    Height of a hypersurface of a projective space with respect to the
    Fubini-Study metric at the archimedean place and the canonical metric
    at the primes.

    Parameters
    ----------
    Z : HypersurfaceCycle
    spec : {None, QuadratureSpec}, optional
    resolution : int, optional
        Sampling resolution `k` of the Fubini-Study roof. Default is 16.
    grid : int, optional
        Resolution of the archimedean Ronkin dual. Default is 12.
    radius : {None, int, fractions.Fraction}, optional

    Returns
    -------
    report : HeightReport
        `MI(theta_FS, ..., theta_FS, rho_inf^v)` at the archimedean place
        and `-rho_{f,p}(0) = log max|c_m|_p` at the primes.
    """
    Z = HypersurfaceCycle.coerce(Z)
    n = Z.rank
    spec = QuadratureSpec() if spec is None else spec
    D = MetrizedToricDivisor.fubini_study(n, resolution)
    Ds = [D] * n
    if Z.is_zero:
        return _zero_report(Z, Ds, "fs")

    per_place = {ARCH: _mi_term(Z.f, Ds, ARCH, spec, grid, radius)}
    for p in support_primes(Z.f):
        per_place[PlaceQ(p)] = max_abs_log_coefficient(Z.f, p)

    metadata = _spec_metadata(spec, grid, radius)
    metadata["fs_resolution"] = resolution
    return HeightReport(per_place, Fraction(1), kind="fs", metadata=metadata)


def binomial_height_via_projection(m, Ds, spec=None):
    """
    Height of the hypersurface `V(chi^m - 1)`, computed in the quotient
    lattice `M / Zm`.

    Parameters
    ----------
    m : tuple of int
        Primitive lattice vector.
    Ds : sequence of MetrizedToricDivisor
        `n` divisors of rank `n`.
    spec : {None, QuadratureSpec}, optional
        Only recorded in the report, no quadrature is needed.

    Returns
    -------
    report : HeightReport
        `MI(pi_* theta_{0,v}, ..., pi_* theta_{n-1,v})` at every place with
        a non-canonical roof and at the archimedean place.

    Raises
    ------
    NotPrimitiveError
        If `m` is not primitive.
    """
    m = integer_vector(m)
    n = len(m)
    Ds = _check_divisors(Ds, n, n)
    spec = QuadratureSpec() if spec is None else spec

    places = {ARCH}
    for D in Ds:
        places.update(D.non_canonical_places)
    per_place = {
        v: mi_segment_projection(m, [D.roof_at(v) for D in Ds]) for v in sorted(places)
    }
    metadata = {"points_per_axis": spec.points_per_axis, "m": list(m)}
    return HeightReport(per_place, toric_variety_degree(Ds), kind="projection", metadata=metadata)
