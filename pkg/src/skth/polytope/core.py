"""
Rational polytopes: hulls, Minkowski sums, faces, volumes and mixed volumes

scikit-toric-heights developers
Copyright (c) 2026. All rights reserved.
"""
from fractions import Fraction
from itertools import product
from math import ceil, floor
import logging

from skth.lattice import integer_kernel, primitive_generator
from skth.polytope.exact_hull import ExactHull, mixed_volume_of_point_sets
from skth.utility.exceptions import DegeneratePolytopeError, RankMismatchError
from skth.utility.internal import (
    rational_point,
    parse_rational,
    format_rational,
    clear_denominators,
    dot,
    add_points,
    sub_points,
    scale_point,
    check_equal_ranks,
)

__all__ = [
    "RationalPolytope",
    "FacetData",
    "hull",
    "minkowski_sum",
    "support_value",
    "face",
    "facets",
    "volume",
    "mixed_volume",
    "project",
    "contains",
    "dimension",
    "translate",
    "dilate",
    "lattice_points",
    "hyperplane_normal",
    "standard_simplex",
    "cube",
    "segment",
    "as_polytope",
]

logger = logging.getLogger(__name__)


class RationalPolytope:
    """
    Convex polytope with rational vertices.

    Parameters
    ----------
    points : iterable
        Non-empty collection of points. Coordinates may be ints, Fractions or
        strings such as "1/2". The polytope is their convex hull.
    rank : {None, int}, optional
        Ambient rank. Required when no coordinates can be inspected (rank 0
        is given as `[()]`). Default infers the rank from the first point.

    Attributes
    ----------
    vertices : tuple of tuple of fractions.Fraction
        Vertices of the hull, sorted lexicographically.
    ambient_rank : int

    Raises
    ------
    DegeneratePolytopeError
        If `points` is empty.
    RankMismatchError
        If points of different lengths are given.
    """

    __slots__ = ("vertices", "ambient_rank", "_hull")

    def __init__(self, points, rank=None):
        points = list(points)
        if not points:
            raise DegeneratePolytopeError("cannot take the convex hull of an empty point set")
        rank = len(points[0]) if rank is None else rank
        pts = [rational_point(p, rank) for p in points]

        h = ExactHull(pts)
        verts = sorted(h.vertices())
        self.vertices = tuple(verts)
        self.ambient_rank = rank
        # the hull of the vertices is cheaper than the input hull for later use
        self._hull = h if len(h.points) == len(verts) else None

    @property
    def hull(self):
        if self._hull is None:
            self._hull = ExactHull(self.vertices)
        return self._hull

    @property
    def dimension(self):
        return self.hull.dim

    @property
    def is_full_dimensional(self):
        return self.dimension == self.ambient_rank

    def __eq__(self, other):
        if not isinstance(other, RationalPolytope):
            return NotImplemented
        return (self.ambient_rank, self.vertices) == (other.ambient_rank, other.vertices)

    def __hash__(self):
        return hash((self.ambient_rank, self.vertices))

    def __add__(self, other):
        return minkowski_sum(self, other)

    def __repr__(self):
        verts = ", ".join("(" + ", ".join(format_rational(c) for c in v) + ")" for v in self.vertices)
        return f"RationalPolytope(rank={self.ambient_rank}, vertices=[{verts}])"

    def to_json(self):
        return {
            "rank": self.ambient_rank,
            "vertices": [[format_rational(c) for c in v] for v in self.vertices],
        }

    @classmethod
    def from_json(cls, data):
        return cls([tuple(v) for v in data["vertices"]], rank=int(data["rank"]))


class FacetData:
    """
    A facet `F` of a full dimensional polytope `Q` with its primitive inward
    normal `v_F`.

    Attributes
    ----------
    normal : tuple of int
        Primitive vector in N with `<x, normal> >= offset` on `Q`.
    offset : fractions.Fraction
        Value of the support function of `Q` at `normal`.
    face : RationalPolytope
        The facet, where equality holds.
    """

    __slots__ = ("normal", "offset", "face")

    def __init__(self, normal, offset, face):
        self.normal = normal
        self.offset = offset
        self.face = face

    def __eq__(self, other):
        if not isinstance(other, FacetData):
            return NotImplemented
        return (self.normal, self.offset, self.face) == (other.normal, other.offset, other.face)

    def __repr__(self):
        return f"FacetData(normal={self.normal}, offset={format_rational(self.offset)})"


def _check_rank(Q, x, what="point"):
    if len(x) != Q.ambient_rank:
        raise RankMismatchError(
            f"{what} of rank {len(x)} does not match polytope rank {Q.ambient_rank}"
        )


def hull(points, rank=None):
    """
    Vertex-canonical convex hull of a non-empty point set.

    Parameters
    ----------
    points : iterable
        Points with rational coordinates.
    rank : {None, int}, optional
        Ambient rank, inferred from the points by default.

    Returns
    -------
    Q : RationalPolytope
    """
    return RationalPolytope(points, rank)


def minkowski_sum(A, B):
    """Minkowski sum, the hull of all pairwise vertex sums."""
    check_equal_ranks([A.ambient_rank, B.ambient_rank], "polytopes")
    return RationalPolytope(
        [add_points(a, b) for a in A.vertices for b in B.vertices], rank=A.ambient_rank
    )


def support_value(Q, u):
    """
    Support function `Psi_Q(u) = min_{x in Q} <x, u>`.

    Parameters
    ----------
    Q : RationalPolytope
    u : tuple
        Point of N_R with rational coordinates.

    Returns
    -------
    value : fractions.Fraction
    """
    u = rational_point(u)
    _check_rank(Q, u, "direction")
    return min(Fraction(dot(v, u)) for v in Q.vertices)


def face(Q, u):
    """Face `Q^u` of points minimizing `<., u>`, as a polytope."""
    u = rational_point(u)
    _check_rank(Q, u, "direction")
    vals = [Fraction(dot(v, u)) for v in Q.vertices]
    low = min(vals)
    return RationalPolytope([v for v, s in zip(Q.vertices, vals) if s == low], rank=Q.ambient_rank)


def facets(Q):
    """
    Facets of a full dimensional polytope with primitive inward normals.

    Returns
    -------
    facets : list of FacetData
        Sorted by normal vector.

    Raises
    ------
    DegeneratePolytopeError
        If `Q` is not full dimensional.
    """
    if not Q.is_full_dimensional:
        raise DegeneratePolytopeError("polytope not full-dimensional")
    if Q.ambient_rank == 0:
        return []

    out = []
    for normal, _, _ in Q.hull.planes:
        inward = primitive_generator(clear_denominators([-c for c in normal]))
        out.append(_facet_for(Q, inward))
    out.sort(key=lambda f: f.normal)
    return out


def _facet_for(Q, normal):
    vals = [Fraction(dot(v, normal)) for v in Q.vertices]
    low = min(vals)
    F = RationalPolytope([v for v, s in zip(Q.vertices, vals) if s == low], rank=Q.ambient_rank)
    return FacetData(normal, low, F)


def volume(Q):
    """
    Normalized volume `vol_M(Q)`, exact. 0 for lower dimensional polytopes;
    the rank 0 point has volume 1.
    """
    return Q.hull.volume()


def mixed_volume(Qs):
    """
    Mixed volume `MV_M(Q_1, ..., Q_n)` of n polytopes of rank n.

    Parameters
    ----------
    Qs : sequence of RationalPolytope
        Exactly `n` polytopes of rank `n`. The empty sequence has mixed
        volume 1.

    Returns
    -------
    mv : fractions.Fraction
        Normalized so that `MV(Q, ..., Q) = n! vol(Q)`.
    """
    Qs = list(Qs)
    for Q in Qs:
        if Q.ambient_rank != len(Qs):
            raise RankMismatchError(
                f"mixed volume needs {Q.ambient_rank} polytopes of rank {Q.ambient_rank}, "
                f"got {len(Qs)}"
            )
    mv = mixed_volume_of_point_sets([Q.vertices for Q in Qs])
    logger.debug(f"mixed volume of {len(Qs)} polytopes: {mv}")
    return mv


def project(Q, projection):
    """Image of `Q` under a lattice projection."""
    if projection.source_rank != Q.ambient_rank:
        raise RankMismatchError(
            f"projection from rank {projection.source_rank} applied to rank {Q.ambient_rank}"
        )
    return RationalPolytope(
        [projection.apply(v) for v in Q.vertices], rank=projection.target_rank
    )


def contains(Q, x):
    """True if the rational point `x` lies in `Q`."""
    x = rational_point(x)
    _check_rank(Q, x)
    return Q.hull.contains(x)


def dimension(Q):
    """Dimension of the affine hull of `Q`."""
    return Q.dimension


def translate(Q, x0):
    """The translate `Q + x0`."""
    x0 = rational_point(x0)
    _check_rank(Q, x0, "translation")
    return RationalPolytope([add_points(v, x0) for v in Q.vertices], rank=Q.ambient_rank)


def dilate(Q, lam):
    """The dilation `lam * Q` for a rational `lam >= 0`."""
    lam = parse_rational(lam)
    if lam < 0:
        raise ValueError("dilation factor must be non-negative")
    return RationalPolytope([scale_point(lam, v) for v in Q.vertices], rank=Q.ambient_rank)


def lattice_points(Q, k=1):
    """
    Points of the refined lattice `(1/k) Z^n` lying in `Q`.

    Parameters
    ----------
    Q : RationalPolytope
    k : int, optional
        Subdivision, at least 1. Default is 1.

    Returns
    -------
    points : list of tuple
        Sorted lexicographically.
    """
    k = int(k)
    if k < 1:
        raise ValueError("subdivision must be at least 1")
    n = Q.ambient_rank
    ranges = []
    for j in range(n):
        lo = min(v[j] for v in Q.vertices)
        hi = max(v[j] for v in Q.vertices)
        ranges.append(range(ceil(lo * k), floor(hi * k) + 1))
    out = []
    for idx in product(*ranges):
        x = tuple(Fraction(i, k) for i in idx)
        if Q.hull.contains(x):
            out.append(x)
    return out


def hyperplane_normal(Q):
    """
    Primitive normal of the affine hull of a polytope of codimension 1.

    Returns
    -------
    u : {None, tuple of int}
        Primitive `u` with `<x, u>` constant on `Q`, and `u` chosen with a
        positive first non-zero entry. None if `Q` is not of codimension 1.
    """
    if Q.dimension != Q.ambient_rank - 1:
        return None
    v0 = Q.vertices[0]
    rows = [clear_denominators(sub_points(v, v0)) for v in Q.vertices[1:]]
    if not rows:
        # rank 1, a point
        return (1,)
    K = integer_kernel(rows)
    return primitive_generator(K[0].tolist())


def standard_simplex(n):
    """The standard simplex with vertices 0, e_1, ..., e_n."""
    verts = [tuple(0 for _ in range(n))]
    for i in range(n):
        verts.append(tuple(1 if j == i else 0 for j in range(n)))
    return RationalPolytope(verts, rank=n)


def cube(n):
    """The unit cube [0, 1]^n."""
    return RationalPolytope(list(product((0, 1), repeat=n)), rank=n)


def segment(a, b):
    """The segment between two points."""
    a, b = rational_point(a), rational_point(b)
    return RationalPolytope([a, b], rank=len(a))


def as_polytope(data):
    """
    Coerce job data into a polytope.

    Parameters
    ----------
    data : {RationalPolytope, dict, list}
        A polytope, its JSON form `{"rank", "vertices"}`, or a list of points.

    Returns
    -------
    Q : RationalPolytope
    """
    if isinstance(data, RationalPolytope):
        return data
    if isinstance(data, dict):
        return RationalPolytope.from_json(data)
    return RationalPolytope([tuple(p) for p in data])
