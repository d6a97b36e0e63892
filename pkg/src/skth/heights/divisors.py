"""
Metrized toric divisors, fan rays and hypersurface cycles

scikit-toric-heights developers
Copyright (c) 2026. All rights reserved.
"""
from skth.concave import ConcaveFn, indicator, sample_concave, fs_roof_oracle, sup_convolve
from skth.lattice import is_primitive
from skth.polytope import as_polytope, standard_simplex
from skth.ronkin import ARCH, LaurentPoly, PlaceQ, newton_polytope
from skth.utility.exceptions import NotPrimitiveError, RankMismatchError
from skth.utility.internal import integer_vector

__all__ = ["MetrizedToricDivisor", "FanRays", "HypersurfaceCycle", "DEFAULT_FS_RESOLUTION"]

DEFAULT_FS_RESOLUTION = 16


def _is_indicator(g):
    return g.tolerance == 0 and all(t == 0 for _, t in g.generators)


class MetrizedToricDivisor:
    """
    Toric divisor with an adelic semipositive toric metric, given by its
    polytope and one roof function per place.

    Parameters
    ----------
    polytope : RationalPolytope
        Polytope `Delta` of the divisor.
    roofs : {None, dict}, optional
        Mapping from places (PlaceQ, "arch", or a prime) to concave functions
        with domain exactly `Delta`. Places that are not listed carry the
        canonical roof, the indicator of `Delta`.
    fs_resolution : {None, int}, optional
        Marks the archimedean roof as the Fubini-Study roof, sampled on
        `(1/k) Z^n` when it is needed. Requires the standard simplex and no
        explicit archimedean roof.

    Raises
    ------
    ValueError
        If a roof does not have domain `Delta`, or the Fubini-Study roof is
        requested on another polytope.
    """

    __slots__ = ("polytope", "roofs", "fs_resolution", "_fs_roof")

    def __init__(self, polytope, roofs=None, fs_resolution=None):
        roofs = {} if roofs is None else roofs
        self.polytope = polytope
        self.roofs = {}
        for place, g in roofs.items():
            place = PlaceQ.parse(place)
            if g.ambient_rank != polytope.ambient_rank or g.domain != polytope:
                raise ValueError(f"roof at {place} does not have the divisor polytope as domain")
            self.roofs[place] = g

        if fs_resolution is not None:
            fs_resolution = int(fs_resolution)
            if fs_resolution < 1:
                raise ValueError("fs_resolution must be at least 1")
            if polytope != standard_simplex(polytope.ambient_rank):
                raise ValueError("the Fubini-Study roof is defined on the standard simplex")
            if ARCH in self.roofs:
                raise ValueError("explicit archimedean roof given together with the Fubini-Study roof")
        self.fs_resolution = fs_resolution
        self._fs_roof = None

    @classmethod
    def canonical(cls, polytope):
        """Divisor with the canonical metric at every place."""
        return cls(as_polytope(polytope))

    @classmethod
    def fubini_study(cls, n, resolution=DEFAULT_FS_RESOLUTION):
        """
        The divisor O(1) on the projective space of dimension `n` with the
        Fubini-Study metric at the archimedean place and the canonical metric
        elsewhere.
        """
        return cls(standard_simplex(n), fs_resolution=resolution)

    @property
    def rank(self):
        return self.polytope.ambient_rank

    @property
    def fs_flag(self):
        return self.fs_resolution is not None

    def is_canonical_at(self, place):
        place = PlaceQ.parse(place)
        if self.fs_flag and place.is_archimedean:
            return False
        g = self.roofs.get(place)
        return g is None or _is_indicator(g)

    @property
    def non_canonical_places(self):
        """Places whose roof differs from the indicator, sorted."""
        places = {v for v in self.roofs if not self.is_canonical_at(v)}
        if self.fs_flag:
            places.add(ARCH)
        return sorted(places)

    @property
    def is_canonical(self):
        return not self.non_canonical_places

    def roof_at(self, place):
        """Roof function at a place, sampling the Fubini-Study roof if needed."""
        place = PlaceQ.parse(place)
        if self.fs_flag and place.is_archimedean:
            if self._fs_roof is None:
                self._fs_roof = sample_concave(
                    fs_roof_oracle(self.rank), self.polytope, self.fs_resolution
                )
            return self._fs_roof
        g = self.roofs.get(place)
        return indicator(self.polytope) if g is None else g

    def __add__(self, other):
        """
        Sum of metrized divisors: Minkowski sum of the polytopes and
        sup-convolution of the roofs at every place.
        """
        if not isinstance(other, MetrizedToricDivisor):
            return NotImplemented
        if self.rank != other.rank:
            raise RankMismatchError(f"divisors of rank {self.rank} and {other.rank}")
        places = set(self.non_canonical_places) | set(other.non_canonical_places)
        roofs = {v: sup_convolve(self.roof_at(v), other.roof_at(v)) for v in places}
        return MetrizedToricDivisor(self.polytope + other.polytope, roofs)

    def __eq__(self, other):
        if not isinstance(other, MetrizedToricDivisor):
            return NotImplemented
        mine = {v: self.roofs[v] for v in self.non_canonical_places if v in self.roofs}
        theirs = {v: other.roofs[v] for v in other.non_canonical_places if v in other.roofs}
        return (self.polytope, self.fs_resolution, mine) == (
            other.polytope,
            other.fs_resolution,
            theirs,
        )

    __hash__ = None

    def __repr__(self):
        if self.fs_flag:
            metric = f"fubini-study, resolution={self.fs_resolution}"
        elif self.is_canonical:
            metric = "canonical"
        else:
            metric = "custom at " + ", ".join(str(v) for v in self.non_canonical_places)
        return f"MetrizedToricDivisor({self.polytope!r}, {metric})"

    def to_json(self):
        out = {"polytope": self.polytope.to_json()}
        if self.fs_flag:
            out["metric"] = "fs"
            out["resolution"] = self.fs_resolution
        elif self.is_canonical:
            out["metric"] = "canonical"
        else:
            out["metric"] = "custom"
            out["roofs"] = {
                str(v): self.roofs[v].to_json() for v in self.non_canonical_places
            }
        return out

    @classmethod
    def from_json(cls, data):
        """
        Divisor from `{"polytope", "metric", "resolution", "roofs"}`, where
        `metric` is one of "canonical", "fs" or "custom".
        """
        metric = data.get("metric", "canonical")
        polytope = as_polytope(data["polytope"])
        if metric == "canonical":
            return cls(polytope)
        if metric == "fs":
            return cls(polytope, fs_resolution=data.get("resolution", DEFAULT_FS_RESOLUTION))
        if metric == "custom":
            if "roofs" not in data:
                raise ValueError("a custom metric needs explicit roofs")
            return cls(
                polytope, {v: ConcaveFn.from_json(g) for v, g in data["roofs"].items()}
            )
        raise ValueError(f"unknown metric kind {metric!r}")

    @classmethod
    def coerce(cls, data):
        """A divisor from itself, its JSON form, or a polytope (canonical metric)."""
        if isinstance(data, cls):
            return data
        if isinstance(data, dict) and "polytope" in data:
            return cls.from_json(data)
        return cls.canonical(data)


class FanRays:
    """
    Rays of a fan, given by their primitive generators in N.

    Parameters
    ----------
    rays : iterable
        Integer vectors. They must be primitive and distinct.

    Raises
    ------
    NotPrimitiveError
        If a ray is not primitive.
    ValueError
        If a ray is repeated.
    """

    __slots__ = ("rays",)

    def __init__(self, rays):
        out = []
        for v in rays:
            v = integer_vector(v)
            if not is_primitive(v):
                raise NotPrimitiveError(f"ray {v} is not primitive")
            if v in out:
                raise ValueError(f"ray {v} given twice")
            out.append(v)
        if len({len(v) for v in out}) > 1:
            raise RankMismatchError("rays of different ranks")
        self.rays = tuple(out)

    @classmethod
    def projective_space(cls, n):
        """Rays `e_1, ..., e_n, -(e_1 + ... + e_n)` of the fan of projective space."""
        rays = [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
        rays.append(tuple(-1 for _ in range(n)))
        return cls(rays)

    def __iter__(self):
        return iter(self.rays)

    def __len__(self):
        return len(self.rays)

    def __repr__(self):
        return f"FanRays({list(self.rays)})"

    def to_json(self):
        return [list(v) for v in self.rays]


class HypersurfaceCycle:
    """
    The cycle of the closure of `V(f)` in a toric variety, given by a defining
    Laurent polynomial.

    Parameters
    ----------
    f : {LaurentPoly, dict, str}
        Defining polynomial, its JSON form or an expression. A monomial
        defines the zero cycle.
    """

    __slots__ = ("f",)

    def __init__(self, f):
        self.f = LaurentPoly.coerce(f)

    @property
    def rank(self):
        return self.f.rank

    @property
    def is_zero(self):
        return self.f.is_monomial

    @property
    def newton_polytope(self):
        return newton_polytope(self.f)

    def __repr__(self):
        return f"HypersurfaceCycle({self.f.to_sympy()})"

    @classmethod
    def coerce(cls, data):
        if isinstance(data, cls):
            return data
        return cls(data)
