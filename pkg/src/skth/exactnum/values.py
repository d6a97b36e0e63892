"""
Helpers for the tagged Exact | Approx value union

scikit-toric-heights developers
Copyright (c) 2026. All rights reserved.
"""
from fractions import Fraction

import mpmath

from skth.exactnum.linlog import LinLogValue, exact_sign
from skth.exactnum.approx import Approx, mpf_to_fraction
from skth.utility.internal import parse_rational

__all__ = [
    "as_value",
    "value_sign",
    "value_to_json",
    "value_from_json",
    "snap_to_dyadic",
    "SNAP_BITS",
]

# Approx data entering exact hull code is rounded to multiples of 2**-SNAP_BITS
SNAP_BITS = 40


def as_value(x):
    """
    Normalize an input to a Value: Fractions for rationals, LinLogValue for
    logarithmic values, Approx unchanged.
    """
    if isinstance(x, Approx):
        return x
    if isinstance(x, LinLogValue):
        return x.rational_part if x.is_rational else x
    if isinstance(x, dict):
        return value_from_json(x)
    return parse_rational(x)


def value_sign(x):
    """Sign of an exact or approximate value."""
    if isinstance(x, Approx):
        return x.sign()
    return exact_sign(x)


def value_to_json(x):
    """
    JSON form of a value. Exact values use {"q": "a/b", "logs": {...}},
    approximate values use {"approx": x, "err": e}.
    """
    if isinstance(x, Approx):
        return x.to_json()
    if isinstance(x, LinLogValue):
        return x.to_json()
    return LinLogValue(x).to_json()


def value_from_json(data, precision=None):
    """Inverse of :func:`value_to_json`; bare numbers and strings are rationals."""
    if isinstance(data, dict):
        if "approx" in data:
            return Approx.from_json(data, precision)
        return as_value(LinLogValue.from_json(data))
    return parse_rational(data)


def snap_to_dyadic(x, bits=SNAP_BITS):
    """
    Round an approximate value to a nearby dyadic rational.

    Parameters
    ----------
    x : {Approx, float}
        Value to round.
    bits : int, optional
        The result is a multiple of `2**-bits`.

    Returns
    -------
    q : fractions.Fraction
        Rounded value.
    err : fractions.Fraction
        Bound on the distance from `q` to the real enclosed by `x`.
    """
    if isinstance(x, Approx):
        mid, err = x.value, x.error_fraction()
    else:
        mid, err = mpmath.mpf(x), Fraction(0)
    scaled = int(mpmath.nint(mpmath.ldexp(mid, bits)))
    q = Fraction(scaled, 1 << bits)
    return q, err + abs(q - mpf_to_fraction(mid))
