"""
Exact integrals and mixed integrals of piecewise affine concave functions

scikit-toric-heights developers
Copyright (c) 2026. All rights reserved.
"""
from fractions import Fraction
import logging

from skth.concave import (
    indicator,
    legendre_dual,
    push_forward,
    restrict_to_face,
    recoordinatize,
)
from skth.exactnum import as_value, widen
from skth.lattice import perp_sublattice, quotient_by_primitive
from skth.mamixint.measures import mixed_ma_measure, subset_convolutions
from skth.polytope import (
    ExactHull,
    facets,
    hyperplane_normal,
    mixed_volume,
    mixed_volume_of_point_sets,
    segment,
    support_value,
)
from skth.utility.exceptions import RankMismatchError
from skth.utility.internal import check_equal_ranks

__all__ = [
    "integrate",
    "integrate_against",
    "mixed_integral",
    "mixed_integral_recursive",
    "mi_segment_projection",
    "mixed_integral_via_hypographs",
    "mixed_integral_error",
    "segment_indicator",
]

logger = logging.getLogger(__name__)


def _integral_exact(g):
    n = g.ambient_rank
    if n == 0:
        return g.generators[0][1]
    if g.dimension < n:
        return Fraction(0)

    total = Fraction(0)
    for piece in g.pieces:
        gens = [g.generators[i] for i in piece.members]
        region = ExactHull([x for x, _ in gens])
        for simplex in region.simplices():
            mean = sum((gens[i][1] for i in simplex), Fraction(0)) / (n + 1)
            total = total + region.simplex_volume(simplex) * mean
    return as_value(total)


def integrate(g):
    """
    Lebesgue integral of a concave function over its domain.

    Parameters
    ----------
    g : ConcaveFn

    Returns
    -------
    value : Value
        Exact sum over a triangulation of the regions of affinity of
        volume times the mean of the vertex values. Functions with a
        tolerance give an Approx with error `tolerance * vol(dom g)`. In rank
        0 the integral is the value at the point.
    """
    value = _integral_exact(g)
    if g.tolerance:
        vol = g.domain_hull.volume() if g.ambient_rank else Fraction(1)
        return widen(value, g.tolerance * vol)
    return value


def integrate_against(h, measure):
    """
    Integral of a minimum of affine functions against an atomic measure.

    Parameters
    ----------
    h : MinAffineFn
    measure : AtomicMeasure

    Returns
    -------
    value : Value
        `sum(h(point) * mass)` over the atoms.
    """
    check_equal_ranks([h.ambient_rank, measure.ambient_rank], "function and measure")
    total = Fraction(0)
    for point, mass in measure:
        total = total + h.eval(point) * mass
    return as_value(total)


def _check_mi_input(gs):
    gs = list(gs)
    if not gs:
        raise ValueError("mixed integral of an empty list")
    n = check_equal_ranks([g.ambient_rank for g in gs], "functions")
    if len(gs) != n + 1:
        raise RankMismatchError(f"mixed integral in rank {n} needs {n + 1} functions, got {len(gs)}")
    return gs, n


def mixed_integral_error(gs):
    """
    Error bound of a mixed integral inherited from the tolerances of its
    arguments, `sum_i tolerance_i * MV(domains of the others)`.
    """
    err = Fraction(0)
    for i, g in enumerate(gs):
        if g.tolerance:
            others = [h.domain for j, h in enumerate(gs) if j != i]
            err += g.tolerance * mixed_volume(others)
    return err


def _mi_inclusion_exclusion(gs, n):
    total = Fraction(0)
    for subset, g in subset_convolutions(gs).items():
        val = _integral_exact(g)
        total = total + (val if (n + 1 - len(subset)) % 2 == 0 else -val)
    return as_value(total)


def mixed_integral(gs):
    """
    Mixed integral of `n + 1` concave functions of rank `n`.

    Parameters
    ----------
    gs : sequence of ConcaveFn

    Returns
    -------
    value : Value
        Inclusion-exclusion over the integrals of the sup-convolutions of all
        non-empty subsets, with sign `(-1)^(n + 1 - |S|)`. Exact unless an
        argument carries a tolerance.

    Raises
    ------
    RankMismatchError
        If the ranks differ or the number of functions is not the rank plus
        one.
    """
    gs, n = _check_mi_input(gs)
    logger.debug(f"mixed integral in rank {n}: {(1 << (n + 1)) - 1} convolutions")
    return widen(_mi_inclusion_exclusion(gs, n), mixed_integral_error(gs))


def _recursion_directions(Q):
    if Q.is_full_dimensional:
        return [f.normal for f in facets(Q)]
    u = hyperplane_normal(Q)
    if u is None:
        return []
    return [u, tuple(-c for c in u)]


def _mi_recursive(gs):
    n = gs[0].ambient_rank
    if n == 0:
        return gs[0].generators[0][1]

    g0, rest = gs[0], gs[1:]
    Qrest = rest[0].domain
    for g in rest[1:]:
        Qrest = Qrest + g.domain
    Q0 = g0.domain

    total = Fraction(0)
    for u in _recursion_directions(Qrest):
        psi = support_value(Q0, u)
        if psi == 0:
            continue
        sub = perp_sublattice(u)
        faces = []
        for g in rest:
            r = restrict_to_face(g, u)
            faces.append(recoordinatize(r, sub, r.generators[0][0]))
        total = total - psi * _mi_recursive(faces)

    total = total - integrate_against(legendre_dual(g0), mixed_ma_measure(rest))
    return as_value(total)


def mixed_integral_recursive(gs):
    """
    Mixed integral through the recursion over facets.

    The mixed integral of `g_0, ..., g_n` equals
    `-sum_u Psi_{Q_0}(u) MI_{M(u)}(g_1|, ..., g_n|) - int g_0^v dMM(g_1^v, ..., g_n^v)`,
    where `u` runs over the primitive vectors whose face of
    `Q_1 + ... + Q_n` has dimension `n - 1`, the restrictions are to the
    faces `Q_i^u` written in a basis of `M(u)`, and the rank 0 mixed integral
    is the value at the point.

    Parameters
    ----------
    gs : sequence of ConcaveFn

    Returns
    -------
    value : Value
        Equal to :func:`mixed_integral`.
    """
    gs, n = _check_mi_input(gs)
    return widen(_mi_recursive(gs), mixed_integral_error(gs))


def mi_segment_projection(m, gs):
    """
    Mixed integral with the indicator of the segment `[0, m]` as first
    argument, computed in the quotient lattice `M / Zm`.

    Parameters
    ----------
    m : tuple of int
        Primitive lattice vector.
    gs : sequence of ConcaveFn
        `n` functions of rank `n`.

    Returns
    -------
    value : Value
        Mixed integral of the direct images under the quotient map.

    Raises
    ------
    NotPrimitiveError
        If `m` is not primitive.
    """
    pi = quotient_by_primitive(m)
    gs = list(gs)
    if len(gs) != pi.source_rank:
        raise RankMismatchError(f"{len(gs)} functions given for rank {pi.source_rank}")
    return mixed_integral([push_forward(g, pi) for g in gs])


def segment_indicator(m):
    """Indicator function of the segment from the origin to `m`."""
    return indicator(segment(tuple(0 for _ in m), m))


def mixed_integral_via_hypographs(gs):
    """
    Mixed integral from mixed volumes of truncated hypographs.

    With `Q_i = {(x, t) : x in dom g_i, c_i <= t <= g_i(x)}` for constants
    `c_i` below the minimum of `g_i`, the mixed integral is
    `MV(Q_0, ..., Q_n) + sum_i c_i MV(dom g_j : j != i)`, the first mixed
    volume being taken in rank `n + 1`.

    Parameters
    ----------
    gs : sequence of ConcaveFn
        `n + 1` functions of rank `n`. Intended for ranks up to 3.

    Returns
    -------
    value : Value
    """
    gs, n = _check_mi_input(gs)
    sets = []
    floors = []
    for g in gs:
        c = min(g.values)
        floors.append(c)
        sets.append(
            [x + (t,) for x, t in g.generators] + [v + (c,) for v in g.domain.vertices]
        )
    total = mixed_volume_of_point_sets(sets)
    for i, c in enumerate(floors):
        if c != 0:
            others = [h.domain for j, h in enumerate(gs) if j != i]
            total = total + c * mixed_volume(others)
    return widen(as_value(total), mixed_integral_error(gs))
