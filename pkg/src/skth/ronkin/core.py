"""
Ronkin functions, Mahler measures and Newton polytopes

scikit-toric-heights developers
Copyright (c) 2026. All rights reserved.
"""
from fractions import Fraction
from itertools import product
import logging
from math import ceil

import mpmath
from mpmath.libmp import NoConvergence
import numpy as np
import sympy

from skth.concave import ConcaveFn, MinAffineFn, legendre_dual_back
from skth.exactnum import Approx, LinLogValue, as_value
from skth.exactnum.linlog import PRECISION_LOCK
from skth.polytope import RationalPolytope, lattice_points
from skth.ronkin.places import ARCH, PlaceQ
from skth.ronkin.quadrature import QuadratureSpec, arch_quadrature
from skth.utility.exceptions import PrecisionExhaustedError
from skth.utility.internal import parse_rational, rational_point

__all__ = [
    "newton_polytope",
    "tropical_ronkin",
    "ronkin_function",
    "arch_ronkin",
    "ronkin_value",
    "mahler_measure",
    "ronkin_concave_approx",
    "ronkin_bounds",
    "support_primes",
    "max_abs_log_coefficient",
    "default_radius",
    "DEFAULT_GRID",
]

logger = logging.getLogger(__name__)

DEFAULT_GRID = 12


def newton_polytope(f):
    """Convex hull of the exponents of `f`."""
    return RationalPolytope(f.exponents, rank=f.rank)


def tropical_ronkin(f, p):
    """
    Ronkin function of `f` at a prime place, which is its tropicalization.

    Parameters
    ----------
    f : LaurentPoly
    p : {int, PlaceQ}
        Prime.

    Returns
    -------
    rho : MinAffineFn
        `u -> min_m (<m, u> - log|c_m|_p)`, the constants being exact
        multiples `ord_p(c_m) log p`.
    """
    place = PlaceQ.parse(p)
    if place.is_archimedean:
        raise ValueError("tropical_ronkin needs a prime place")
    return MinAffineFn([(m, -place.log_abs(c)) for m, c in f.terms], rank=f.rank)


def ronkin_function(f, place):
    """
    Closed form of the Ronkin function where one exists.

    Parameters
    ----------
    f : LaurentPoly
    place : {PlaceQ, str, int}

    Returns
    -------
    rho : {MinAffineFn, None}
        The tropicalization at prime places. At the archimedean place the
        Ronkin function of a polynomial with at most two terms is
        `min(<a, u> - log|c_a|, <b, u> - log|c_b|)` by Jensen's formula;
        None for more terms.
    """
    place = PlaceQ.parse(place)
    if place.is_archimedean and f.n_terms > 2:
        return None
    return MinAffineFn([(m, -place.log_abs(c)) for m, c in f.terms], rank=f.rank)


def arch_ronkin(f, u, spec=None):
    """
    Archimedean Ronkin function, the mean of `-log|f|` over the torus
    `{|z_j| = exp(-u_j)}`.

    Parameters
    ----------
    f : LaurentPoly
    u : sequence
        Rational point of N_R.
    spec : {None, QuadratureSpec}, optional
        Quadrature resolution. Default is `QuadratureSpec()`.

    Returns
    -------
    value : Value
        Exact for monomials and binomials, an Approx from torus quadrature
        otherwise.
    """
    u = rational_point(u, f.rank)
    closed = ronkin_function(f, ARCH)
    if closed is not None:
        return closed.eval(u)
    return arch_quadrature(f, u, QuadratureSpec() if spec is None else spec)


def ronkin_value(f, place, u, spec=None):
    """Value of the Ronkin function of `f` at `place` and `u`, exact where possible."""
    place = PlaceQ.parse(place)
    if place.is_archimedean:
        return arch_ronkin(f, u, spec)
    return tropical_ronkin(f, place).eval(rational_point(u, f.rank))


def _mahler_by_roots(coeffs, bits):
    # log|lc| + sum log max(1, |root|) for an integer polynomial, highest degree first
    with PRECISION_LOCK:
        with mpmath.workprec(bits + 32):
            try:
                roots, err = mpmath.polyroots(
                    coeffs, maxsteps=50 + 10 * len(coeffs), extraprec=2 * bits, error=True
                )
            except NoConvergence as e:
                raise PrecisionExhaustedError(
                    f"root isolation of a degree {len(coeffs) - 1} factor did not converge"
                ) from e
            total = mpmath.log(abs(coeffs[0]))
            bound = mpmath.mpf(0)
            for r in roots:
                a = abs(r)
                if a > 1:
                    total += mpmath.log(a)
                bound += err / (a - err) if a - err > 1 else 2 * err
            bound += mpmath.ldexp(1 + abs(total), -bits)
    return Approx(total, bound, bits)


def _jensen(f, bits):
    content, prim = f.primitive_integer_form()
    low = min(e[0] for e in prim.exponents)
    x = sympy.Symbol("x")
    P = sympy.Poly.from_dict({(e[0] - low,): int(c) for e, c in prim.terms}, x, domain="ZZ")
    lead, factors = P.factor_list()

    exact = LinLogValue.log_of_rational(content * abs(int(lead)))
    approx = None
    for F, k in factors:
        coeffs = [int(a) for a in F.all_coeffs()]
        if F.degree() == 1:
            exact = exact + k * LinLogValue.log_of_rational(max(abs(coeffs[0]), abs(coeffs[1])))
        elif F.is_cyclotomic:
            continue
        else:
            part = k * _mahler_by_roots(coeffs, bits)
            approx = part if approx is None else approx + part
    logger.debug(f"Jensen formula over {len(factors)} irreducible factors")

    exact = as_value(exact)
    return exact if approx is None else approx + exact


def mahler_measure(f, spec=None):
    """
    Logarithmic Mahler measure, the mean of `log|f|` over the unit torus.

    Parameters
    ----------
    f : LaurentPoly
    spec : {None, QuadratureSpec}, optional
        Quadrature resolution, also giving the precision of approximate
        results. Default is `QuadratureSpec()`.

    Returns
    -------
    value : Value
        In one variable Jensen's formula over the irreducible factors:
        linear and cyclotomic factors are exact, other factors use
        numerical roots with their error estimate. In more variables minus
        the archimedean Ronkin function at 0.
    """
    spec = QuadratureSpec() if spec is None else spec
    if f.rank == 1:
        return _jensen(f, spec.precision_bits)
    logger.info(f"Mahler measure of {f!r} with {spec!r}")
    return -arch_ronkin(f, tuple(0 for _ in range(f.rank)), spec)


def default_radius(f):
    """
    Half width of the box in N_R searched for the archimedean Ronkin dual,
    `(max |log|c_m|| + 2) * diam(NP(f))` rounded up, where the diameter is the
    largest coordinate extent of the exponents (at least 1).
    """
    logs = [abs(float(ARCH.log_abs(c))) for _, c in f.terms]
    diam = 1
    for j in range(f.rank):
        col = [e[j] for e in f.exponents]
        diam = max(diam, max(col) - min(col))
    return Fraction(ceil((max(logs) + 2) * diam))


def ronkin_concave_approx(f, place=ARCH, radius=None, grid=DEFAULT_GRID, spec=None):
    """
    Legendre-Fenchel dual of the Ronkin function, as a concave function on
    the Newton polytope.

    Parameters
    ----------
    f : LaurentPoly
    place : {PlaceQ, str, int}, optional
        Default is the archimedean place.
    radius : {None, int, fractions.Fraction}, optional
        Half width `R` of the box of N_R searched for the infimum. Default
        is :func:`default_radius`.
    grid : int, optional
        The infimum is taken over `(R / k) Z^n` in the box, and the dual is
        evaluated at `(1 / k) Z^n` in NP(f) and at its vertices. Default is
        12.
    spec : {None, QuadratureSpec}, optional
        Quadrature resolution.

    Returns
    -------
    dual : ConcaveFn
        Exact at prime places and for at most two terms. Otherwise an
        over-approximation of the dual that decreases to it as `R` and `k`
        grow. Its tolerance is the largest quadrature error and the values
        at the vertices `m` are the exact `log|c_m|`.
    """
    place = PlaceQ.parse(place)
    closed = ronkin_function(f, place)
    if closed is not None:
        return legendre_dual_back(closed)

    spec = QuadratureSpec() if spec is None else spec
    R = default_radius(f) if radius is None else parse_rational(radius)
    k = int(grid)
    if R <= 0 or k < 1:
        raise ValueError("radius must be positive and grid at least 1")

    n = f.rank
    steps = [R * j / k for j in range(-k, k + 1)]
    nodes = list(product(steps, repeat=n))
    logger.info(
        f"Ronkin dual of {f!r} on {len(nodes)} nodes (R={R}, k={k}, K={spec.points_per_axis})"
    )
    rho = [arch_quadrature(f, u, spec) for u in nodes]
    err = max(float(v.error) for v in rho)

    Q = newton_polytope(f)
    xs = list(dict.fromkeys(lattice_points(Q, k) + list(Q.vertices)))
    U = np.array([[float(c) for c in u] for u in nodes])
    X = np.array([[float(c) for c in x] for x in xs])
    R_vals = np.array([float(v) for v in rho])
    table = X @ U.T - R_vals[None, :]
    dual = table.min(axis=1)
    err += np.finfo(float).eps * 64 * (1 + np.abs(table).max())

    coefs = f.coefficients
    gens = []
    for x, d in zip(xs, dual):
        m = tuple(int(c) for c in x) if all(c.denominator == 1 for c in x) else None
        if m in coefs and x in Q.vertices:
            gens.append((x, ARCH.log_abs(coefs[m])))
        else:
            gens.append((x, Approx(float(d), err, spec.precision_bits)))
    return ConcaveFn(gens, rank=n)


def ronkin_bounds(f, place):
    """
    Constants bounding the Ronkin function against the support function of
    the Newton polytope.

    Returns
    -------
    lower : Value
        `log(gamma * max|c_m|_v)`, with `gamma` the number of terms at the
        archimedean place and 1 at primes.
    upper : Value
        `log min |c_m|_v` over the vertices `m` of NP(f).

    Notes
    -----
    `Psi_NP(u) - lower <= rho_{f,v}(u) <= Psi_NP(u) - upper` for every `u`.
    """
    place = PlaceQ.parse(place)
    logs = {m: place.log_abs(c) for m, c in f.terms}
    gamma = f.n_terms if place.is_archimedean else 1
    lower = max(logs.values()) + LinLogValue.log_of_rational(gamma)
    verts = newton_polytope(f).vertices
    upper = min(logs[tuple(int(c) for c in v)] for v in verts)
    return as_value(lower), as_value(upper)


def support_primes(f):
    """Primes dividing a numerator or a denominator of a coefficient of `f`."""
    primes = set()
    for _, c in f.terms:
        primes.update(sympy.primefactors(abs(c.numerator)))
        primes.update(sympy.primefactors(c.denominator))
    return sorted(int(p) for p in primes)


def max_abs_log_coefficient(f, place):
    """`log max |c_m|_v`, equal to `-rho_{f,v}(0)` at prime places."""
    place = PlaceQ.parse(place)
    return max(place.log_abs(c) for _, c in f.terms)
