"""
Exact convex hulls of rational point sets

scikit-toric-heights developers
Copyright (c) 2026. All rights reserved.
"""
from fractions import Fraction
from math import factorial
import logging

from skth.exactnum import LinLogValue
from skth.utility.exceptions import DegeneratePolytopeError, InvariantBreachError
from skth.utility.internal import dot, sub_points, add_points, nonempty_subsets

__all__ = ["ExactHull", "determinant", "solve_linear", "mixed_volume_of_point_sets"]

logger = logging.getLogger(__name__)


def _norm(x):
    if isinstance(x, LinLogValue):
        return x.rational_part if x.is_rational else x
    if isinstance(x, int):
        return Fraction(x)
    return x


def _is_log(x):
    return isinstance(x, LinLogValue)


def _rational_det(rows):
    m = [list(r) for r in rows]
    n = len(m)
    det = Fraction(1)
    for c in range(n):
        piv = next((r for r in range(c, n) if m[r][c] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            det = -det
        det *= m[c][c]
        for r in range(c + 1, n):
            if m[r][c] != 0:
                f = m[r][c] / m[c][c]
                m[r] = [a - f * b for a, b in zip(m[r], m[c])]
    return det


def determinant(rows):
    """
    Exact determinant of a square matrix.

    Parameters
    ----------
    rows : sequence of sequences
        Matrix rows. Entries are rationals, except that the last column may
        hold LinLogValues.

    Returns
    -------
    det : {fractions.Fraction, LinLogValue}
    """
    rows = [[_norm(x) for x in r] for r in rows]
    n = len(rows)
    if n == 0:
        return Fraction(1)
    if not any(_is_log(x) for r in rows for x in r):
        return _rational_det(rows)
    if any(_is_log(x) for r in rows for x in r[:-1]):
        raise InvariantBreachError("logarithmic entries are only supported in the last column")

    # expand along the last column, all minors are rational
    total = Fraction(0)
    for i in range(n):
        a = rows[i][-1]
        if a == 0:
            continue
        minor = [r[:-1] for k, r in enumerate(rows) if k != i]
        sign = 1 if (i + n - 1) % 2 == 0 else -1
        total = total + sign * _rational_det(minor) * a
    return _norm(total)


def solve_linear(rows, rhs):
    """
    Solve the square system `rows @ x = rhs` exactly.

    Parameters
    ----------
    rows : sequence of sequences
        Invertible rational matrix.
    rhs : sequence
        Right hand side, rationals or LinLogValues.

    Returns
    -------
    x : tuple
    """
    n = len(rows)
    m = [[Fraction(a) for a in r] + [_norm(b)] for r, b in zip(rows, rhs)]
    for c in range(n):
        piv = next((r for r in range(c, n) if m[r][c] != 0), None)
        if piv is None:
            raise InvariantBreachError("singular linear system")
        m[c], m[piv] = m[piv], m[c]
        p = m[c][c]
        m[c] = [a / p for a in m[c]]
        for r in range(n):
            if r != c and m[r][c] != 0:
                f = m[r][c]
                m[r] = [a - f * b for a, b in zip(m[r], m[c])]
    return tuple(_norm(m[r][n]) for r in range(n))


class _Facet:
    __slots__ = ("members", "normal", "offset")

    def __init__(self, members, normal, offset):
        self.members = members
        self.normal = normal
        self.offset = offset

    def side(self, p):
        return _norm(dot(self.normal, p) - self.offset)


def _plane_through(pts):
    """Normal vector (by cofactors) and offset of the hyperplane through d points of R^d."""
    d = len(pts)
    q0 = pts[0]
    R = [sub_points(q, q0) for q in pts[1:]]
    normal = []
    for j in range(d):
        minor = [r[:j] + r[j + 1 :] for r in R]
        c = determinant(minor)
        normal.append(_norm(c if (d - 1 + j) % 2 == 0 else -c))
    normal = tuple(normal)
    return normal, _norm(dot(normal, q0))


class ExactHull:
    """
    Convex hull of a finite point set, computed with exact predicates.

    Parameters
    ----------
    points : sequence of tuples
        Points of equal length. Coordinates are rationals, except that the
        last coordinate may be a LinLogValue (lifted hypograph points).

    Notes
    -----
    Duplicate points are removed keeping the first occurrence; all indices
    refer to the deduplicated list `points`. Lower dimensional sets are
    handled through an injective coordinate projection onto the pivot
    columns of their affine hull. Full dimensional hulls are built
    incrementally (beneath-beyond) as a triangulated boundary, and facets
    sharing a hyperplane are grouped into planes.
    """

    def __init__(self, points):
        seen = set()
        pts = []
        for p in points:
            p = tuple(_norm(x) for x in p)
            if p not in seen:
                seen.add(p)
                pts.append(p)
        if not pts:
            raise DegeneratePolytopeError("cannot take the convex hull of an empty point set")
        if len({len(p) for p in pts}) != 1:
            raise ValueError("points have different numbers of coordinates")

        self.points = pts
        self.ambient = len(pts[0])
        self._echelon()

        self._sub = None
        self._facets = None
        self._planes = None
        self._vertices = None
        self._simplices = None

        if self.dim < self.ambient:
            if self.dim > 0:
                self._sub = ExactHull([tuple(p[j] for j in self.pivots) for p in pts])
        elif self.ambient > 0:
            self._build()

    # ================
    # Affine hull
    # ================
    def _reduce(self, v):
        for piv, row in self._basis:
            if v[piv] == 0:
                continue
            if piv == self.ambient - 1:
                # such a row is zero except in its pivot
                v = v[:-1] + (Fraction(0),)
                continue
            f = v[piv] / row[piv]
            v = tuple(_norm(a - f * b) for a, b in zip(v, row))
        return v

    def _echelon(self):
        self._basis = []
        self.initial = [0]
        p0 = self.points[0]
        for i, p in enumerate(self.points[1:], start=1):
            if len(self._basis) == self.ambient:
                break
            v = self._reduce(sub_points(p, p0))
            nz = next((j for j, x in enumerate(v) if x != 0), None)
            if nz is None:
                continue
            self._basis.append((nz, v))
            self._basis.sort(key=lambda t: t[0])
            self.initial.append(i)
        self.dim = len(self._basis)
        self.pivots = tuple(piv for piv, _ in self._basis)

    def in_affine_hull(self, x):
        v = self._reduce(sub_points(tuple(_norm(a) for a in x), self.points[0]))
        return all(a == 0 for a in v)

    # ================
    # Full dimensional construction
    # ================
    def _make_facet(self, members):
        normal, offset = _plane_through([self.points[i] for i in members])
        facet = _Facet(members, normal, offset)
        s = facet.side(self._interior)
        if s == 0:
            raise InvariantBreachError("degenerate facet through an interior point")
        if s > 0:
            facet.normal = tuple(_norm(-a) for a in normal)
            facet.offset = _norm(-offset)
        return facet

    def _build(self):
        d = self.ambient
        simplex = self.initial
        total = self.points[simplex[0]]
        for i in simplex[1:]:
            total = add_points(total, self.points[i])
        self._interior = tuple(_norm(x / (d + 1)) for x in total)

        facets = [
            self._make_facet(tuple(sorted(j for j in simplex if j != k))) for k in simplex
        ]
        in_simplex = set(simplex)
        for idx, p in enumerate(self.points):
            if idx in in_simplex:
                continue
            visible = [f for f in facets if f.side(p) > 0]
            if not visible:
                continue
            counts = {}
            for f in visible:
                for k in range(d):
                    ridge = f.members[:k] + f.members[k + 1 :]
                    counts[ridge] = counts.get(ridge, 0) + 1
            horizon = [r for r, c in counts.items() if c == 1]
            vis_ids = {id(f) for f in visible}
            facets = [f for f in facets if id(f) not in vis_ids]
            facets.extend(self._make_facet(tuple(sorted(r + (idx,)))) for r in horizon)

        self._facets = facets
        logger.debug(f"hull of {len(self.points)} points in rank {d}: {len(facets)} facets")

    # ================
    # Faces
    # ================
    @property
    def planes(self):
        """
        Facet hyperplanes of a full dimensional hull.

        Returns
        -------
        planes : list of tuple
            `(normal, offset, members)` with outward `normal`, such that
            `normal . x <= offset` on the hull, with equality exactly on the
            facet. `members` are indices of the points lying on the facet
            that take part in the boundary triangulation, a superset of the
            facet's vertices.
        """
        if self.dim < self.ambient:
            raise DegeneratePolytopeError("polytope not full-dimensional")
        if self._planes is None:
            groups = []
            for f in self._facets:
                for g in groups:
                    rep = g[0]
                    if all(rep.side(self.points[i]) == 0 for i in f.members):
                        g[1].update(f.members)
                        break
                else:
                    groups.append((f, set(f.members)))
            self._planes = [(g.normal, g.offset, tuple(sorted(m))) for g, m in groups]
        return self._planes

    def face_hull(self, members):
        """Hull of a subset of the points, with a map back to indices of `self`."""
        members = tuple(members)
        return ExactHull([self.points[i] for i in members]), members

    def vertex_indices(self):
        """Sorted indices of the points that are vertices of the hull."""
        if self._vertices is None:
            if self.dim == 0:
                verts = (0,)
            elif self.dim < self.ambient:
                verts = self._sub.vertex_indices()
            elif self.ambient == 1:
                coords = [p[0] for p in self.points]
                lo = min(range(len(coords)), key=lambda i: coords[i])
                hi = max(range(len(coords)), key=lambda i: coords[i])
                verts = tuple(sorted({lo, hi}))
            else:
                found = set()
                for _, _, members in self.planes:
                    sub, back = self.face_hull(members)
                    found.update(back[i] for i in sub.vertex_indices())
                verts = tuple(sorted(found))
            self._vertices = verts
        return self._vertices

    def vertices(self):
        return [self.points[i] for i in self.vertex_indices()]

    def simplices(self):
        """
        Pulling triangulation from the lexicographically least vertex.

        Returns
        -------
        simplices : list of tuple
            Each simplex is a tuple of `dim + 1` point indices, spanning the
            affine hull of the points.
        """
        if self._simplices is None:
            if self.dim == 0:
                simp = [(0,)]
            elif self.dim < self.ambient:
                simp = self._sub.simplices()
            else:
                verts = self.vertex_indices()
                apex = min(verts, key=lambda i: self.points[i])
                p = self.points[apex]
                simp = []
                for normal, offset, members in self.planes:
                    if _norm(dot(normal, p) - offset) == 0:
                        continue
                    sub, back = self.face_hull(members)
                    for s in sub.simplices():
                        simp.append(tuple(back[i] for i in s) + (apex,))
            self._simplices = simp
        return self._simplices

    def simplex_volume(self, simplex):
        """Normalized volume (|det| / d!) of a full dimensional simplex of the hull."""
        p0 = self.points[simplex[0]]
        rows = [sub_points(self.points[i], p0) for i in simplex[1:]]
        det = determinant(rows)
        if det < 0:
            det = -det
        return _norm(det / factorial(len(rows)))

    def volume(self):
        """Lebesgue volume in the ambient coordinates, 0 if lower dimensional."""
        if self.dim < self.ambient:
            return Fraction(0)
        if self.ambient == 0:
            return Fraction(1)
        total = Fraction(0)
        for s in self.simplices():
            total = total + self.simplex_volume(s)
        return _norm(total)

    def contains(self, x):
        """True if `x` is in the hull."""
        x = tuple(_norm(a) for a in x)
        if len(x) != self.ambient:
            raise ValueError("point has the wrong number of coordinates")
        if self.dim == 0:
            return x == self.points[0]
        if self.dim < self.ambient:
            if not self.in_affine_hull(x):
                return False
            return self._sub.contains(tuple(x[j] for j in self.pivots))
        if self.ambient == 1:
            coords = [p[0] for p in self.points]
            return min(coords) <= x[0] <= max(coords)
        return all(_norm(dot(n, x) - off) <= 0 for n, off, _ in self.planes)


def mixed_volume_of_point_sets(sets):
    """
    Mixed volume of the convex hulls of n point sets in rank n.

    Parameters
    ----------
    sets : sequence of sequences of tuples
        `n` non-empty point sets of rank `n`.

    Returns
    -------
    mv : {fractions.Fraction, LinLogValue}
        Inclusion-exclusion over Minkowski sums,
        `sum_S (-1)^(n - |S|) vol(sum_{i in S} P_i)`. 1 for an empty list.
    """
    n = len(sets)
    if n == 0:
        return Fraction(1)
    hulls = [ExactHull(s) for s in sets]
    base = [h.vertices() for h in hulls]

    sums = {}
    total = Fraction(0)
    for subset in nonempty_subsets(n):
        *rest, last = subset
        if rest:
            pts = [add_points(a, b) for a in sums[tuple(rest)] for b in base[last]]
        else:
            pts = base[last]
        hull = ExactHull(pts)
        sums[subset] = hull.vertices()
        vol = hull.volume()
        total = total + (vol if (n - len(subset)) % 2 == 0 else -vol)
    return _norm(total)
