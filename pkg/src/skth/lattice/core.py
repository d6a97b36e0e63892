"""
Lattices M and N, quotients and orthogonal sublattices

scikit-toric-heights developers
Copyright (c) 2026. All rights reserved.
"""
import logging

from skth.lattice.normalforms import (
    smith_normal_form,
    hermite_normal_form,
    right_inverse,
)
from skth.utility.exceptions import NotPrimitiveError, RankMismatchError
from skth.utility.internal import integer_vector, vector_gcd, dot, sub_points, add_points

__all__ = [
    "LatticeProjection",
    "PerpSublattice",
    "is_primitive",
    "primitive_generator",
    "pairing",
    "quotient_by_primitive",
    "perp_sublattice",
]

logger = logging.getLogger(__name__)


def _int_rows(matrix):
    return tuple(tuple(int(a) for a in row) for row in matrix)


def _matvec(rows, x):
    return tuple(dot(row, x) for row in rows)


class LatticeProjection:
    """
    Surjective lattice map `Z^source_rank -> Z^target_rank` with an integral
    section.

    Parameters
    ----------
    matrix : array-like
        Integer matrix of shape (target_rank, source_rank).
    section : array-like
        Integer matrix of shape (source_rank, target_rank) with
        `matrix @ section = I`.

    Raises
    ------
    ValueError
        If the shapes disagree or `matrix @ section` is not the identity.
    """

    __slots__ = ("matrix", "section")

    def __init__(self, matrix, section):
        self.matrix = _int_rows(matrix)
        self.section = _int_rows(section)

        if any(len(row) != self.source_rank for row in self.matrix):
            raise ValueError("projection matrix does not match the section shape")
        if any(len(row) != self.target_rank for row in self.section):
            raise ValueError("section does not match the projection matrix shape")
        for i, row in enumerate(self.matrix):
            for j in range(self.target_rank):
                col = tuple(self.section[k][j] for k in range(self.source_rank))
                if dot(row, col) != (1 if i == j else 0):
                    raise ValueError("projection matrix times section is not the identity")

    @property
    def source_rank(self):
        return len(self.section)

    @property
    def target_rank(self):
        return len(self.matrix)

    def apply(self, x):
        """
        Image of a point under the projection. Coordinates may be any exact
        values (Fractions or LinLogValues).
        """
        if len(x) != self.source_rank:
            raise RankMismatchError(
                f"point of rank {len(x)} cannot be projected from rank {self.source_rank}"
            )
        return _matvec(self.matrix, x)

    def lift(self, y):
        """Image of a target point under the integral section."""
        if len(y) != self.target_rank:
            raise RankMismatchError(
                f"point of rank {len(y)} cannot be lifted from rank {self.target_rank}"
            )
        return _matvec(self.section, y)

    def kernel_contains(self, m):
        return all(c == 0 for c in self.apply(m))

    def __eq__(self, other):
        if not isinstance(other, LatticeProjection):
            return NotImplemented
        return self.matrix == other.matrix and self.section == other.section

    def __hash__(self):
        return hash((self.matrix, self.section))

    def __repr__(self):
        return f"LatticeProjection(matrix={self.matrix}, section={self.section})"


class PerpSublattice:
    """
    The sublattice `M(u) = {m in M : <m, u> = 0}` with a fixed basis.

    Parameters
    ----------
    normal : tuple of int
        Primitive vector `u` in N.
    basis : tuple of tuple of int
        Rows form a basis of M(u), in Hermite normal form.
    left : tuple of tuple of int
        Integer matrix of shape (rank, rank - 1) with `basis @ left = I`.
    """

    __slots__ = ("normal", "basis", "left")

    def __init__(self, normal, basis, left):
        self.normal = tuple(normal)
        self.basis = _int_rows(basis)
        self.left = _int_rows(left)

    @property
    def rank(self):
        """Rank of the sublattice, one less than the ambient rank."""
        return len(self.basis)

    @property
    def ambient_rank(self):
        return len(self.normal)

    def to_coords(self, x, origin=None):
        """
        Coordinates in the basis of M(u) of a point on the affine hyperplane
        `origin + u^perp`.

        Parameters
        ----------
        x : tuple
            Point of M_R. Coordinates may be Fractions or LinLogValues.
        origin : {None, tuple}, optional
            Base point of the hyperplane. Default is the origin.

        Returns
        -------
        coords : tuple
            Coordinates `c` with `x = origin + c @ basis`.
        """
        if len(x) != self.ambient_rank:
            raise RankMismatchError(f"point of rank {len(x)} is not in rank {self.ambient_rank}")
        if origin is not None:
            x = sub_points(x, origin)
        cols = tuple(
            tuple(self.left[i][j] for i in range(self.ambient_rank)) for j in range(self.rank)
        )
        return tuple(dot(x, col) for col in cols)

    def from_coords(self, c, origin=None):
        """Inverse of :meth:`to_coords`."""
        if len(c) != self.rank:
            raise RankMismatchError(f"coordinates of rank {len(c)} are not in rank {self.rank}")
        point = tuple(
            dot(c, tuple(row[i] for row in self.basis))
            for i in range(self.ambient_rank)
        )
        if origin is not None:
            point = add_points(point, origin)
        return point

    def __eq__(self, other):
        if not isinstance(other, PerpSublattice):
            return NotImplemented
        return (self.normal, self.basis) == (other.normal, other.basis)

    def __hash__(self):
        return hash((self.normal, self.basis))

    def __repr__(self):
        return f"PerpSublattice(normal={self.normal}, basis={self.basis})"


def is_primitive(v):
    """
    Check if a lattice vector is primitive.

    Parameters
    ----------
    v : array-like
        Integer vector.

    Returns
    -------
    primitive : bool
        True if the gcd of the coordinates is 1. The zero vector is not
        primitive.
    """
    return vector_gcd(integer_vector(v)) == 1


def primitive_generator(v):
    """
    Minimal non-zero integral vector on the ray through `v`.

    Raises
    ------
    NotPrimitiveError
        For the zero vector.
    """
    v = integer_vector(v)
    g = vector_gcd(v)
    if g == 0:
        raise NotPrimitiveError("zero vector has no primitive generator")
    return tuple(c // g for c in v)


def pairing(m, u):
    """Duality pairing <m, u> between M and N."""
    return dot(tuple(m), tuple(u))


def quotient_by_primitive(m):
    """
    Quotient projection `M -> M / Zm` for a primitive vector m.

    Parameters
    ----------
    m : array-like
        Primitive integer vector of rank n >= 1.

    Returns
    -------
    projection : LatticeProjection
        Map `Z^n -> Z^(n - 1)` whose kernel is exactly `Zm`. The matrix is in
        Hermite normal form, which fixes the unimodular choice.

    Raises
    ------
    NotPrimitiveError
        If `m` is zero or not primitive.
    """
    m = integer_vector(m)
    n = len(m)
    if n == 0:
        raise RankMismatchError("cannot take a quotient of the rank 0 lattice")
    if vector_gcd(m) != 1:
        raise NotPrimitiveError(f"{m} is not a primitive vector")
    if n == 1:
        return LatticeProjection((), ((),))

    U, _, _, Uinv, _ = smith_normal_form([[c] for c in m])
    # U @ m = +-e_1, so the remaining rows of U vanish on m
    H, _, Winv = hermite_normal_form(U[1:])
    section = Uinv[:, 1:] @ Winv
    projection = LatticeProjection(H.tolist(), section.tolist())
    logger.debug(f"quotient by {m}: {projection!r}")
    return projection


def perp_sublattice(u):
    """
    Basis and coordinate maps of `M(u) = M intersected with u^perp`.

    Parameters
    ----------
    u : array-like
        Non-zero integer vector in N.

    Returns
    -------
    sublattice : PerpSublattice
        Saturated sublattice of rank n - 1 with its basis in Hermite normal
        form. Volumes computed in `to_coords` coordinates are the normalized
        Haar volumes of M(u).

    Raises
    ------
    NotPrimitiveError
        For the zero vector.
    """
    normal = primitive_generator(u)
    n = len(normal)
    if n == 1:
        return PerpSublattice(normal, (), ((),))

    _, _, V, _, _ = smith_normal_form([normal])
    H, _, _ = hermite_normal_form(V[:, 1:].T)
    basis = H.tolist()
    left = right_inverse(H).tolist()
    return PerpSublattice(normal, basis, left)
