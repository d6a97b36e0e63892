"""
Piecewise affine concave functions on rational polytopes

scikit-toric-heights developers
Copyright (c) 2026. All rights reserved.
"""
from fractions import Fraction
import logging

from skth.exactnum import Approx, LinLogValue, as_value, snap_to_dyadic, value_to_json
from skth.polytope import RationalPolytope, ExactHull, solve_linear, lattice_points
from skth.utility.exceptions import OutsideDomainError, RankMismatchError
from skth.utility.internal import (
    rational_point,
    parse_rational,
    format_rational,
    dot,
    add_points,
    sub_points,
    scale_point,
    check_equal_ranks,
)

__all__ = [
    "ConcaveFn",
    "MinAffineFn",
    "AffinePiece",
    "canonicalize",
    "evaluate",
    "indicator",
    "support_fn",
    "legendre_dual",
    "legendre_dual_back",
    "sup_convolve",
    "translate",
    "add_constant",
    "right_scale",
    "push_forward",
    "sample_concave",
    "restrict_to_face",
    "recoordinatize",
    "fs_roof_oracle",
    "max_value",
]

logger = logging.getLogger(__name__)


def _exact(value):
    """Split a value into an exact part and the error of snapping it."""
    value = as_value(value)
    if isinstance(value, Approx):
        return snap_to_dyadic(value)
    return value, Fraction(0)


class AffinePiece:
    """
    An affine piece `x -> <gradient, x_J> + intercept` of a concave function,
    valid over the projection of an upper face of its hypograph.

    Attributes
    ----------
    gradient : tuple
        Slope in the pivot coordinates `J` of the domain. Entries are
        Fractions, or LinLogValues when generator values are logarithmic.
    intercept : Value
    members : tuple of int
        Indices of the generators that are vertices of the upper face.
    """

    __slots__ = ("gradient", "intercept", "members")

    def __init__(self, gradient, intercept, members):
        self.gradient = tuple(as_value(g) for g in gradient)
        self.intercept = as_value(intercept)
        self.members = tuple(members)

    def __call__(self, xJ):
        return as_value(dot(self.gradient, xJ) + self.intercept)

    def __repr__(self):
        return f"AffinePiece(gradient={self.gradient}, intercept={self.intercept}, members={self.members})"


def _upper_hull(generators, pivots, dim):
    """
    Affine pieces of the upper hull of lifted generators.

    Parameters
    ----------
    generators : list of (tuple, Value)
        Generators with distinct points.
    pivots : tuple of int
        Pivot coordinates `J` of the affine hull of the points.
    dim : int
        Dimension of the affine hull of the points.

    Returns
    -------
    pieces : list of AffinePiece
    """
    if dim == 0:
        return [AffinePiece((), generators[0][1], (0,))]

    lifted = [tuple(x[j] for j in pivots) + (t,) for x, t in generators]
    L = ExactHull(lifted)

    if L.dim == dim:
        # graph of a single affine function
        D = ExactHull([p[:-1] for p in lifted])
        i0, rest = D.initial[0], D.initial[1:]
        x0, t0 = lifted[i0][:-1], lifted[i0][-1]
        rows = [sub_points(lifted[i][:-1], x0) for i in rest]
        grad = solve_linear(rows, [lifted[i][-1] - t0 for i in rest])
        return [AffinePiece(grad, t0 - dot(grad, x0), D.vertex_indices())]

    pieces = []
    for normal, offset, members in L.planes:
        b = normal[-1]
        if b <= 0:
            continue
        grad = tuple(-a / b for a in normal[:-1])
        sub, back = L.face_hull(members)
        pieces.append(AffinePiece(grad, offset / b, (back[i] for i in sub.vertex_indices())))
    logger.debug(f"upper hull of {len(generators)} generators: {len(pieces)} affine pieces")
    return pieces


class ConcaveFn:
    """
    Piecewise affine concave function on a rational polytope, given by
    generators under the upper concave hull.

    The value at `x` is `max{sum(l_i t_i) : sum(l_i x_i) = x, l in the simplex}`
    over the generators `(x_i, t_i)`, and the domain is the hull of the
    generator points.

    Parameters
    ----------
    generators : iterable
        Pairs `(x, t)` of a point with rational coordinates and a Value, or
        dictionaries `{"x": ..., "t": ...}`. Repeated points keep the largest
        value.
    rank : {None, int}, optional
        Ambient rank, inferred from the first point by default.
    tolerance : {int, fractions.Fraction, str}, optional
        Uniform bound on the distance to the function this one stands for.
        Default is 0.
    canonicalize : bool, optional
        Keep only the vertices of the upper faces of the hypograph. Default
        is True.

    Attributes
    ----------
    ambient_rank : int
    generators : tuple of (tuple, Value)
        Sorted by point.
    tolerance : fractions.Fraction
    canonicalized : bool

    Notes
    -----
    Approx values are rounded to dyadic rationals on input and the rounding
    error is added to `tolerance`, so that the hull is always computed on
    exact data.
    """

    __slots__ = (
        "ambient_rank",
        "generators",
        "tolerance",
        "canonicalized",
        "_domain_hull",
        "_pieces",
    )

    def __init__(self, generators, rank=None, tolerance=0, canonicalize=True):
        tol = parse_rational(tolerance)
        if tol < 0:
            raise ValueError("tolerance must be non-negative")

        best = {}
        snap = Fraction(0)
        for gen in generators:
            if isinstance(gen, dict):
                x, t = gen["x"], gen["t"]
            else:
                x, t = gen
            if rank is None:
                rank = len(x)
            x = rational_point(x, rank)
            t, err = _exact(t)
            snap = max(snap, err)
            if x not in best or best[x] < t:
                best[x] = t
        if not best:
            raise ValueError("a concave function needs at least one generator")

        gens = sorted(best.items())
        self.ambient_rank = rank
        self.tolerance = tol + snap
        self._domain_hull = None
        self._pieces = None

        if canonicalize:
            hull = ExactHull([x for x, _ in gens])
            pieces = _upper_hull(gens, hull.pivots, hull.dim)
            keep = sorted({i for p in pieces for i in p.members})
            new_index = {old: new for new, old in enumerate(keep)}
            gens = [gens[i] for i in keep]
            self._pieces = [
                AffinePiece(p.gradient, p.intercept, sorted(new_index[i] for i in p.members))
                for p in pieces
            ]
            if len(keep) == len(hull.points):
                self._domain_hull = hull

        self.generators = tuple(gens)
        self.canonicalized = bool(canonicalize)

    # ================
    # Structure
    # ================
    @property
    def domain_hull(self):
        if self._domain_hull is None:
            self._domain_hull = ExactHull([x for x, _ in self.generators])
        return self._domain_hull

    @property
    def domain(self):
        """The domain as a polytope."""
        return RationalPolytope([x for x, _ in self.generators], rank=self.ambient_rank)

    @property
    def pivots(self):
        """Coordinates on which the domain projects injectively."""
        return self.domain_hull.pivots

    @property
    def dimension(self):
        return self.domain_hull.dim

    @property
    def pieces(self):
        """
        Affine pieces over the upper faces of the hypograph.

        Returns
        -------
        pieces : list of AffinePiece
            Gradients are in the pivot coordinates of the domain, which are
            all coordinates when the domain is full dimensional.
        """
        if self._pieces is None:
            h = self.domain_hull
            self._pieces = _upper_hull(list(self.generators), h.pivots, h.dim)
        return self._pieces

    @property
    def values(self):
        return tuple(t for _, t in self.generators)

    @property
    def is_exact(self):
        return self.tolerance == 0

    # ================
    # Evaluation
    # ================
    def eval(self, x, strict=False):
        """
        Value of the function at a rational point.

        Parameters
        ----------
        x : tuple
            Point of rank `ambient_rank`.
        strict : bool, optional
            Raise an OutsideDomainError outside the domain instead of
            returning None. Default is False.

        Returns
        -------
        value : {None, Value}
        """
        x = rational_point(x)
        if len(x) != self.ambient_rank:
            raise RankMismatchError(
                f"point of rank {len(x)} does not match function rank {self.ambient_rank}"
            )
        if not self.domain_hull.contains(x):
            if strict:
                raise OutsideDomainError(f"point {x} is outside the domain")
            return None
        xJ = tuple(x[j] for j in self.pivots)
        return min(p(xJ) for p in self.pieces)

    __call__ = eval

    # ================
    # Comparison and serialization
    # ================
    def __eq__(self, other):
        if not isinstance(other, ConcaveFn):
            return NotImplemented
        return (self.ambient_rank, self.generators, self.tolerance) == (
            other.ambient_rank,
            other.generators,
            other.tolerance,
        )

    def __hash__(self):
        return hash((self.ambient_rank, self.generators, self.tolerance))

    def __repr__(self):
        gens = ", ".join(
            "((" + ", ".join(format_rational(c) for c in x) + f"), {t})"
            for x, t in self.generators
        )
        tol = f", tolerance={format_rational(self.tolerance)}" if self.tolerance else ""
        return f"ConcaveFn(rank={self.ambient_rank}, generators=[{gens}]{tol})"

    def to_json(self):
        return {
            "rank": self.ambient_rank,
            "generators": [
                {"x": [format_rational(c) for c in x], "t": value_to_json(t)}
                for x, t in self.generators
            ],
            "tolerance": format_rational(self.tolerance),
        }

    @classmethod
    def from_json(cls, data):
        return cls(
            data["generators"],
            rank=int(data["rank"]),
            tolerance=data.get("tolerance", 0),
        )


class MinAffineFn:
    """
    Minimum of finitely many affine functions on N_R,
    `u -> min(<slope, u> + constant)`.

    Parameters
    ----------
    pieces : iterable
        Pairs `(slope, constant)`, or dictionaries `{"slope", "c"}`. Pieces
        with equal slopes keep the smallest constant.
    rank : {None, int}, optional
        Ambient rank, inferred from the first slope by default.

    Attributes
    ----------
    ambient_rank : int
    pieces : tuple of (tuple, Value)
        Sorted by slope.
    """

    __slots__ = ("ambient_rank", "pieces")

    def __init__(self, pieces, rank=None):
        best = {}
        for piece in pieces:
            if isinstance(piece, dict):
                s, c = piece["slope"], piece["c"]
            else:
                s, c = piece
            if rank is None:
                rank = len(s)
            s = rational_point(s, rank)
            c = as_value(c)
            if s not in best or c < best[s]:
                best[s] = c
        if not best:
            raise ValueError("a minimum of affine functions needs at least one piece")
        self.ambient_rank = rank
        self.pieces = tuple(sorted(best.items()))

    def eval(self, u):
        """
        Value at a point of N_R.

        Parameters
        ----------
        u : tuple
            Coordinates, rational or LinLogValue (Monge-Ampere atoms of
            functions with logarithmic values).
        """
        u = tuple(as_value(c) for c in u)
        if len(u) != self.ambient_rank:
            raise RankMismatchError(
                f"point of rank {len(u)} does not match function rank {self.ambient_rank}"
            )
        return as_value(min(dot(s, u) + c for s, c in self.pieces))

    __call__ = eval

    def add(self, other):
        """Pointwise sum, the dual of the sup-convolution."""
        check_equal_ranks([self.ambient_rank, other.ambient_rank], "functions")
        return MinAffineFn(
            [
                (add_points(s1, s2), c1 + c2)
                for s1, c1 in self.pieces
                for s2, c2 in other.pieces
            ],
            rank=self.ambient_rank,
        )

    __add__ = add

    def add_constant(self, c):
        c = as_value(c)
        return MinAffineFn([(s, k + c) for s, k in self.pieces], rank=self.ambient_rank)

    def canonicalize(self):
        """Drop the pieces that never attain the minimum."""
        return legendre_dual(legendre_dual_back(self))

    @property
    def slopes(self):
        return tuple(s for s, _ in self.pieces)

    def __eq__(self, other):
        if not isinstance(other, MinAffineFn):
            return NotImplemented
        return (self.ambient_rank, self.pieces) == (other.ambient_rank, other.pieces)

    def __hash__(self):
        return hash((self.ambient_rank, self.pieces))

    def __repr__(self):
        return f"MinAffineFn(rank={self.ambient_rank}, pieces={len(self.pieces)})"

    def to_json(self):
        return {
            "rank": self.ambient_rank,
            "pieces": [
                {"slope": [format_rational(c) for c in s], "c": value_to_json(c)}
                for s, c in self.pieces
            ],
        }

    @classmethod
    def from_json(cls, data):
        return cls(data["pieces"], rank=int(data["rank"]))


def canonicalize(g):
    """Normal form of `g`: generators are the vertices of the upper faces."""
    if g.canonicalized:
        return g
    return ConcaveFn(g.generators, rank=g.ambient_rank, tolerance=g.tolerance)


def evaluate(g, x, strict=False):
    """Value of `g` at `x`, None outside the domain unless `strict`."""
    return g.eval(x, strict=strict)


def indicator(Q):
    """Indicator function of a polytope, 0 on `Q`."""
    return ConcaveFn([(v, 0) for v in Q.vertices], rank=Q.ambient_rank)


def support_fn(Q):
    """Support function `Psi_Q(u) = min_{x in Q} <x, u>`."""
    return MinAffineFn([(v, 0) for v in Q.vertices], rank=Q.ambient_rank)


def legendre_dual(g):
    """
    Legendre-Fenchel dual `g^v(u) = min_i (<x_i, u> - t_i)`.

    Parameters
    ----------
    g : ConcaveFn

    Returns
    -------
    h : MinAffineFn
    """
    g = canonicalize(g)
    return MinAffineFn([(x, -t) for x, t in g.generators], rank=g.ambient_rank)


def legendre_dual_back(h, domain_hint=None):
    """
    Concave function on the hull of the slopes of `h` whose dual is `h`.

    Parameters
    ----------
    h : MinAffineFn
    domain_hint : {None, RationalPolytope}, optional
        Expected domain. A ValueError is raised if the hull of the slopes
        differs from it.

    Returns
    -------
    g : ConcaveFn
    """
    g = ConcaveFn([(s, -c) for s, c in h.pieces], rank=h.ambient_rank)
    if domain_hint is not None and g.domain != domain_hint:
        raise ValueError("hull of the slopes does not match the expected domain")
    return g


def sup_convolve(g, h):
    """
    Sup-convolution `(g [+] h)(x) = sup_{y + z = x} g(y) + h(z)`.

    Generators are pairwise sums, the domain is the Minkowski sum of the
    domains, and tolerances add.
    """
    check_equal_ranks([g.ambient_rank, h.ambient_rank], "functions")
    return ConcaveFn(
        [
            (add_points(x, y), t + s)
            for x, t in g.generators
            for y, s in h.generators
        ],
        rank=g.ambient_rank,
        tolerance=g.tolerance + h.tolerance,
    )


def translate(g, x0):
    """The translate `x -> g(x - x0)`."""
    x0 = rational_point(x0, g.ambient_rank)
    return ConcaveFn(
        [(add_points(x, x0), t) for x, t in g.generators],
        rank=g.ambient_rank,
        tolerance=g.tolerance,
    )


def add_constant(g, c):
    """The function `g + c`; an approximate constant adds its error to the tolerance."""
    c, err = _exact(c)
    return ConcaveFn(
        [(x, t + c) for x, t in g.generators],
        rank=g.ambient_rank,
        tolerance=g.tolerance + err,
    )


def right_scale(g, lam):
    """
    Right scalar multiplication `x -> lam g(x / lam)`.

    Raises
    ------
    ValueError
        If `lam` is not positive.
    """
    lam = parse_rational(lam)
    if lam <= 0:
        raise ValueError("right scalar multiplication needs a positive factor")
    return ConcaveFn(
        [(scale_point(lam, x), t * lam) for x, t in g.generators],
        rank=g.ambient_rank,
        tolerance=g.tolerance * lam,
    )


def push_forward(g, projection):
    """
    Direct image `x -> max over the fiber of g` under a lattice projection.
    """
    if projection.source_rank != g.ambient_rank:
        raise RankMismatchError(
            f"projection from rank {projection.source_rank} applied to rank {g.ambient_rank}"
        )
    return ConcaveFn(
        [(projection.apply(x), t) for x, t in g.generators],
        rank=projection.target_rank,
        tolerance=g.tolerance,
    )


def sample_concave(oracle, Q, k):
    """
    Piecewise affine lower approximation of a concave function.

    Parameters
    ----------
    oracle : callable
        Concave function of a rational point, returning a Value.
    Q : RationalPolytope
        Domain.
    k : int
        The function is sampled at the points of `(1/k) Z^n` in `Q` and at
        the vertices of `Q`.

    Returns
    -------
    g : ConcaveFn
        Hull of the samples, below the oracle everywhere on `Q`.
    """
    points = dict.fromkeys(lattice_points(Q, k))
    points.update(dict.fromkeys(Q.vertices))
    logger.debug(f"sampling a concave oracle at {len(points)} points (k={k})")
    return ConcaveFn([(x, oracle(x)) for x in points], rank=Q.ambient_rank)


def restrict_to_face(g, u):
    """Restriction of `g` to the face of its domain minimizing `<., u>`."""
    u = rational_point(u, g.ambient_rank)
    vals = [dot(x, u) for x, _ in g.generators]
    low = min(vals)
    return ConcaveFn(
        [gen for gen, s in zip(g.generators, vals) if s == low],
        rank=g.ambient_rank,
        tolerance=g.tolerance,
    )


def recoordinatize(g, sublattice, origin):
    """
    Express a function whose domain lies in `origin + u^perp` in a basis of
    the saturated sublattice `M(u)`.

    Parameters
    ----------
    g : ConcaveFn
    sublattice : PerpSublattice
    origin : tuple
        Point of the affine hyperplane containing the domain.

    Returns
    -------
    h : ConcaveFn
        Function of rank `sublattice.rank`.
    """
    return ConcaveFn(
        [(sublattice.to_coords(x, origin), t) for x, t in g.generators],
        rank=sublattice.rank,
        tolerance=g.tolerance,
    )


def fs_roof_oracle(n):
    """
    Exact Fubini-Study roof function on the standard simplex,
    `x -> -1/2 sum_{i=0}^{n} x_i log x_i` with `x_0 = 1 - sum_{i>0} x_i`.

    Parameters
    ----------
    n : int
        Rank.

    Returns
    -------
    theta : callable
        Returns LinLogValues at rational points of the simplex.
    """

    def theta(x):
        x = rational_point(x, n)
        total = LinLogValue()
        for c in (1 - sum(x, Fraction(0)),) + x:
            if c < 0:
                raise OutsideDomainError(f"point {x} is outside the standard simplex")
            if c != 0:
                total = total + c * LinLogValue.log_of_rational(c)
        return as_value(total * Fraction(-1, 2))

    return theta


def max_value(g):
    """Maximum of `g` on its domain."""
    return max(t for _, t in g.generators)
