"""
Internal utility functions that don't necessarily need to be exposed in the public API

scikit-toric-heights developers
Copyright (c) 2026. All rights reserved.
"""
from fractions import Fraction
from itertools import combinations
from math import gcd

from skth.utility.exceptions import RankMismatchError


def parse_rational(value):
    """
    Convert an input value to an exact rational number.

    Parameters
    ----------
    value : {int, fractions.Fraction, str}
        Value to convert. Strings may be of the form "a/b", "a", or a finite
        decimal such as "0.25".

    Returns
    -------
    q : fractions.Fraction
        Exact rational value.

    Raises
    ------
    TypeError
        For floats and booleans. A float is already rounded, so exact data
        must be written as a string such as "1/10".
    """
    if isinstance(value, bool):
        raise TypeError("booleans are not rational numbers")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    if isinstance(value, float):
        raise TypeError(f"float {value!r} is not exact, write it as a string such as \"1/10\"")
    # LinLogValue with no logarithmic part, or anything exposing a rational part
    if getattr(value, "is_rational", False):
        return value.rational_part
    raise TypeError(f"cannot interpret {value!r} as a rational number")


def format_rational(q):
    """
    Format a rational number as "a/b", or "a" when the denominator is 1.
    """
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def rational_point(coords, rank=None):
    """
    Convert a sequence of coordinates to a tuple of Fractions.

    Parameters
    ----------
    coords : iterable
        Coordinates, any type accepted by :func:`parse_rational`.
    rank : {None, int}, optional
        Expected length. If provided and different from the actual length,
        a `RankMismatchError` is raised.

    Returns
    -------
    point : tuple of fractions.Fraction
    """
    point = tuple(parse_rational(c) for c in coords)
    if rank is not None and len(point) != rank:
        raise RankMismatchError(
            f"point {point} has {len(point)} coordinates, expected {rank}"
        )
    return point


def integer_vector(coords, rank=None):
    """
    Convert a sequence of coordinates to a tuple of python integers, raising
    a ValueError for non-integral entries.
    """
    out = []
    for c in coords:
        q = parse_rational(c)
        if q.denominator != 1:
            raise ValueError(f"coordinate {c!r} is not an integer")
        out.append(q.numerator)
    if rank is not None and len(out) != rank:
        raise RankMismatchError(
            f"vector {tuple(out)} has {len(out)} coordinates, expected {rank}"
        )
    return tuple(out)


def vector_gcd(vec):
    """Greatest common divisor of the entries of an integer vector (0 for zero)."""
    g = 0
    for v in vec:
        g = gcd(g, int(v))
    return g


def clear_denominators(vec):
    """
    Scale a rational vector by the least common multiple of its denominators.

    Returns
    -------
    scaled : tuple of int
    """
    lcm = 1
    for q in vec:
        d = Fraction(q).denominator
        lcm = lcm * d // gcd(lcm, d)
    return tuple(int(Fraction(q) * lcm) for q in vec)


def dot(a, b):
    """Standard pairing of two coordinate tuples."""
    if len(a) != len(b):
        raise RankMismatchError(f"cannot pair vectors of length {len(a)} and {len(b)}")
    total = 0
    for x, y in zip(a, b):
        if x != 0 and y != 0:
            total = total + x * y
    return total


def add_points(a, b):
    return tuple(x + y for x, y in zip(a, b))


def sub_points(a, b):
    return tuple(x - y for x, y in zip(a, b))


def scale_point(lam, a):
    return tuple(lam * x for x in a)


def nonempty_subsets(n):
    """
    Enumerate the non-empty subsets of range(n), ordered by size and then
    lexicographically.
    """
    for k in range(1, n + 1):
        yield from combinations(range(n), k)


def check_equal_ranks(ranks, what="objects"):
    ranks = list(ranks)
    if len(set(ranks)) > 1:
        raise RankMismatchError(f"{what} have different ambient ranks: {ranks}")
    return ranks[0] if ranks else None
