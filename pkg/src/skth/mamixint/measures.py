"""
Real and mixed Monge-Ampere measures of piecewise affine duals

scikit-toric-heights developers
Copyright (c) 2026. All rights reserved.
"""
from fractions import Fraction
import logging

from skth.concave import sup_convolve
from skth.exactnum import LinLogValue, as_value, value_to_json
from skth.polytope import ExactHull
from skth.utility.exceptions import InvariantBreachError, RankMismatchError
from skth.utility.internal import (
    check_equal_ranks,
    parse_rational,
    format_rational,
    nonempty_subsets,
)

__all__ = ["AtomicMeasure", "ma_measure", "mixed_ma_measure", "subset_convolutions"]

logger = logging.getLogger(__name__)


def _point_key(point):
    # deterministic order for points with logarithmic coordinates
    key = []
    for c in point:
        if isinstance(c, LinLogValue):
            key.append((c.rational_part, tuple(sorted(c.log_terms.items()))))
        else:
            key.append((c, ()))
    return tuple(key)


class AtomicMeasure:
    """
    Finite positive combination of Dirac masses on N_R.

    Parameters
    ----------
    atoms : iterable
        Pairs `(point, mass)`. Coordinates are exact Values, masses are
        rationals. Atoms at equal points are merged and zero masses dropped.
    rank : {None, int}, optional
        Ambient rank, inferred from the first atom by default.

    Attributes
    ----------
    ambient_rank : int
    atoms : tuple of (tuple, fractions.Fraction)
    """

    __slots__ = ("ambient_rank", "atoms")

    def __init__(self, atoms=(), rank=None):
        merged = {}
        for point, mass in atoms:
            if rank is None:
                rank = len(point)
            if len(point) != rank:
                raise RankMismatchError(f"atom of rank {len(point)} in a measure of rank {rank}")
            point = tuple(as_value(c) for c in point)
            merged[point] = merged.get(point, Fraction(0)) + parse_rational(mass)
        if rank is None:
            raise ValueError("the rank of an empty measure must be given")
        self.ambient_rank = rank
        self.atoms = tuple(
            sorted(((p, m) for p, m in merged.items() if m != 0), key=lambda a: _point_key(a[0]))
        )

    @property
    def total_mass(self):
        return sum((m for _, m in self.atoms), Fraction(0))

    @property
    def is_positive(self):
        return all(m > 0 for _, m in self.atoms)

    def mass_at(self, point):
        point = tuple(as_value(c) for c in point)
        for p, m in self.atoms:
            if p == point:
                return m
        return Fraction(0)

    def merge(self, other):
        """Sum of two measures."""
        check_equal_ranks([self.ambient_rank, other.ambient_rank], "measures")
        return AtomicMeasure(self.atoms + other.atoms, rank=self.ambient_rank)

    __add__ = merge

    def scale(self, lam):
        """Measure with every mass multiplied by the rational `lam`."""
        lam = parse_rational(lam)
        return AtomicMeasure([(p, lam * m) for p, m in self.atoms], rank=self.ambient_rank)

    def __rmul__(self, lam):
        return self.scale(lam)

    def __len__(self):
        return len(self.atoms)

    def __iter__(self):
        return iter(self.atoms)

    def __eq__(self, other):
        if not isinstance(other, AtomicMeasure):
            return NotImplemented
        return (self.ambient_rank, self.atoms) == (other.ambient_rank, other.atoms)

    def __hash__(self):
        return hash((self.ambient_rank, self.atoms))

    def __repr__(self):
        return f"AtomicMeasure(rank={self.ambient_rank}, atoms={len(self.atoms)}, mass={self.total_mass})"

    def to_json(self):
        return {
            "rank": self.ambient_rank,
            "atoms": [
                {"point": [value_to_json(c) for c in p], "mass": format_rational(m)}
                for p, m in self.atoms
            ],
        }


def ma_measure(g):
    """
    Monge-Ampere measure of the dual of a piecewise affine concave function.

    Parameters
    ----------
    g : ConcaveFn

    Returns
    -------
    measure : AtomicMeasure
        One atom per upper face of the hypograph, at the gradient of the
        corresponding affine piece, with the volume of the projected face as
        mass. The total mass is the volume of the domain, so the measure is
        empty for lower dimensional domains. In rank 0 it is the unit mass
        at the origin.
    """
    n = g.ambient_rank
    if n == 0:
        return AtomicMeasure([((), 1)], rank=0)
    if g.dimension < n:
        return AtomicMeasure(rank=n)

    atoms = []
    for piece in g.pieces:
        region = ExactHull([g.generators[i][0] for i in piece.members])
        atoms.append((piece.gradient, region.volume()))
    return AtomicMeasure(atoms, rank=n)


def subset_convolutions(gs):
    """
    Sup-convolutions of every non-empty subset of the functions.

    Parameters
    ----------
    gs : sequence of ConcaveFn

    Returns
    -------
    convolutions : dict
        Maps each subset, a sorted tuple of indices, to the sup-convolution
        of its members.
    """
    conv = {}
    # subsets come by increasing size, so the prefix is already convolved
    for subset in nonempty_subsets(len(gs)):
        *rest, last = subset
        conv[subset] = sup_convolve(conv[tuple(rest)], gs[last]) if rest else gs[last]
    return conv


def mixed_ma_measure(gs):
    """
    Mixed Monge-Ampere measure of the duals of `n` concave functions of rank `n`.

    Parameters
    ----------
    gs : sequence of ConcaveFn

    Returns
    -------
    measure : AtomicMeasure
        Signed inclusion-exclusion over the sup-convolutions of all subsets.
        The total mass is the mixed volume of the domains.

    Raises
    ------
    RankMismatchError
        If the ranks differ or do not equal the number of functions.
    InvariantBreachError
        If an atom ends up with negative mass.
    """
    gs = list(gs)
    if not gs:
        raise ValueError("mixed Monge-Ampere measure of an empty list")
    n = check_equal_ranks([g.ambient_rank for g in gs], "functions")
    if n != len(gs):
        raise RankMismatchError(f"{len(gs)} functions given for a mixed measure in rank {n}")

    atoms = []
    for subset, g in subset_convolutions(gs).items():
        sign = 1 if (n - len(subset)) % 2 == 0 else -1
        atoms.extend((p, sign * m) for p, m in ma_measure(g))
    logger.debug(f"mixed Monge-Ampere measure from {(1 << n) - 1} convolutions")

    measure = AtomicMeasure(atoms, rank=n)
    if not all(m > 0 for _, m in measure):
        raise InvariantBreachError("mixed Monge-Ampere measure has an atom of negative mass")
    return measure
