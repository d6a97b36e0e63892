"""
Approximate values with attached error bounds

scikit-toric-heights developers
Copyright (c) 2026. All rights reserved.
"""
from fractions import Fraction
from os import environ
from warnings import warn

import mpmath

from skth.exactnum.linlog import LinLogValue, PRECISION_LOCK, is_exact
from skth.utility.exceptions import PrecisionExhaustedError

__all__ = ["Approx", "to_approx", "widen", "default_precision", "PRECISION_ENV_VAR"]

PRECISION_ENV_VAR = "TORIC_HEIGHTS_PRECISION"
DEFAULT_PRECISION = 53


def default_precision():
    """
    Default precision in bits for approximate values, read from the
    `TORIC_HEIGHTS_PRECISION` environment variable when set.
    """
    raw = environ.get(PRECISION_ENV_VAR)
    if raw is None:
        return DEFAULT_PRECISION
    try:
        bits = int(raw)
    except ValueError:
        bits = 0
    if bits < 53:
        warn(
            f"Ignoring {PRECISION_ENV_VAR}={raw!r}, precision must be an integer >= 53.",
            UserWarning,
        )
        return DEFAULT_PRECISION
    return bits


def _ulp_bound(x, prec):
    # rounding error of a correctly rounded operation producing x
    return mpmath.ldexp(abs(x), -prec)


def _up(*terms):
    total = mpmath.mpf(0)
    for t in terms:
        total = mpmath.fadd(total, t, prec=64, rounding="u")
    return total


def mpf_to_fraction(x):
    """Exact rational value of an mpmath float."""
    man, exp = mpmath.mpf(x).man_exp
    if exp >= 0:
        return Fraction(int(man) << int(exp))
    return Fraction(int(man), 1 << int(-exp))


class Approx:
    """
    Binary floating point value with an absolute error bound.

    Parameters
    ----------
    value : {float, int, mpmath.mpf, str}
        Midpoint of the approximation.
    error : {float, int, mpmath.mpf}, optional
        Absolute error bound, non-negative. Default is 0.
    precision : {None, int}, optional
        Significand size in bits, at least 53. Default is
        :func:`default_precision`.

    Notes
    -----
    The represented real number is guaranteed to lie in
    `[value - error, value + error]`. Arithmetic propagates first order
    bounds plus one rounding error per operation. Ordering comparisons whose
    intervals overlap raise a `PrecisionExhaustedError`.
    """

    __slots__ = ("value", "error", "precision")

    def __init__(self, value, error=0, precision=None):
        precision = default_precision() if precision is None else int(precision)
        if precision < 53:
            raise ValueError("precision must be at least 53 bits")
        if isinstance(value, Fraction):
            value = mpmath.fdiv(value.numerator, value.denominator, prec=precision)
        elif isinstance(value, str):
            value = _parse(value, precision)
        self.precision = precision
        self.value = mpmath.fadd(value, 0, prec=precision)
        error = mpmath.fadd(error, 0, prec=64, rounding="u")
        if error < 0:
            raise ValueError("error bound must be non-negative")
        self.error = error

    @staticmethod
    def _coerce(other, precision):
        if isinstance(other, Approx):
            return other
        if is_exact(other):
            return to_approx(other, precision)
        return None

    # ================
    # Arithmetic
    # ================
    def __add__(self, other):
        other = self._coerce(other, self.precision)
        if other is None:
            return NotImplemented
        prec = max(self.precision, other.precision)
        value = mpmath.fadd(self.value, other.value, prec=prec)
        return Approx(value, _up(self.error, other.error, _ulp_bound(value, prec)), prec)

    __radd__ = __add__

    def __neg__(self):
        return Approx(mpmath.fneg(self.value, prec=self.precision), self.error, self.precision)

    def __pos__(self):
        return self

    def __sub__(self, other):
        other = self._coerce(other, self.precision)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other, self.precision)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, LinLogValue) and other.is_rational:
            other = other.rational_part
        if not isinstance(other, (int, Fraction)) or isinstance(other, bool):
            return NotImplemented
        lam = Fraction(other)
        factor = mpmath.fdiv(lam.numerator, lam.denominator, prec=self.precision)
        value = mpmath.fmul(self.value, factor, prec=self.precision)
        err = _up(
            mpmath.fmul(abs(factor), self.error, prec=64, rounding="u"),
            _ulp_bound(value, self.precision - 1),
        )
        return Approx(value, err, self.precision)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, LinLogValue) and other.is_rational:
            other = other.rational_part
        if not isinstance(other, (int, Fraction)) or isinstance(other, bool):
            return NotImplemented
        if other == 0:
            raise ZeroDivisionError("Approx division by zero")
        return self * (1 / Fraction(other))

    # ================
    # Comparison
    # ================
    def sign(self):
        """Sign of the enclosed real, raising if the interval contains 0."""
        wide = self.precision + 64
        if mpmath.fsub(self.value, self.error, prec=wide, rounding="d") > 0:
            return 1
        if mpmath.fadd(self.value, self.error, prec=wide, rounding="u") < 0:
            return -1
        if self.value == 0 and self.error == 0:
            return 0
        raise PrecisionExhaustedError(f"sign of {self!r} is undecided")

    def _cmp(self, other):
        other = self._coerce(other, self.precision)
        if other is None:
            return None
        return (self - other).sign()

    def __lt__(self, other):
        s = self._cmp(other)
        return NotImplemented if s is None else s < 0

    def __le__(self, other):
        s = self._cmp(other)
        return NotImplemented if s is None else s <= 0

    def __gt__(self, other):
        s = self._cmp(other)
        return NotImplemented if s is None else s > 0

    def __ge__(self, other):
        s = self._cmp(other)
        return NotImplemented if s is None else s >= 0

    def __eq__(self, other):
        if not isinstance(other, Approx):
            return NotImplemented
        return (self.value, self.error, self.precision) == (
            other.value,
            other.error,
            other.precision,
        )

    def __hash__(self):
        return hash((self.value, self.error, self.precision))

    def overlaps(self, other, slack=0):
        """
        True if the enclosures of `self` and `other` intersect, after widening
        both by `slack`.
        """
        other = self._coerce(other, self.precision)
        diff = self - other
        return abs(diff.value) <= diff.error + mpmath.mpf(slack)

    def contains(self, x):
        """True if the real value `x` lies in the enclosure."""
        if isinstance(x, LinLogValue):
            x = x.to_mpf(self.precision + 32)
        elif isinstance(x, Fraction):
            x = mpmath.fdiv(x.numerator, x.denominator, prec=self.precision + 32)
        return abs(mpmath.fsub(self.value, x, prec=self.precision + 64)) <= self.error

    # ================
    # Conversion
    # ================
    def __float__(self):
        return float(self.value)

    def to_fraction(self):
        """Midpoint as an exact rational."""
        return mpf_to_fraction(self.value)

    def error_fraction(self):
        """Error bound as an exact rational."""
        return mpf_to_fraction(self.error)

    def to_json(self):
        # serializing to a double adds its rounding to the bound
        value = float(self.value)
        err = float(_up(self.error, abs(mpmath.mpf(value) - self.value)))
        return {"approx": value, "err": err}

    @classmethod
    def from_json(cls, data, precision=None):
        return cls(data["approx"], data.get("err", 0), precision)

    def __repr__(self):
        return (
            f"Approx({mpmath.nstr(self.value, 17)} +/- {mpmath.nstr(self.error, 3)}, "
            f"precision={self.precision})"
        )

    __str__ = __repr__


def _parse(text, precision):
    with PRECISION_LOCK:
        with mpmath.workprec(precision):
            return mpmath.mpf(text)


def to_approx(value, precision_bits=None):
    """
    Approximate a value to the requested precision with a sound error bound.

    Parameters
    ----------
    value : {int, fractions.Fraction, LinLogValue, Approx}
        Value to approximate. Approx inputs are returned unchanged.
    precision_bits : {None, int}, optional
        Precision of the result, at least 53. Default is
        :func:`default_precision`.

    Returns
    -------
    approx : Approx
        The error bound is at most `2**(1 - bits) * |value| + 2**(-bits)`.
    """
    if isinstance(value, Approx):
        return value
    bits = default_precision() if precision_bits is None else int(precision_bits)
    if bits < 53:
        raise ValueError("precision_bits must be at least 53")

    if isinstance(value, LinLogValue) and value.is_rational:
        value = value.rational_part
    if isinstance(value, (int, Fraction)):
        q = Fraction(value)
        mid = mpmath.fdiv(q.numerator, q.denominator, prec=bits)
        if mpf_to_fraction(mid) == q:
            return Approx(mid, 0, bits)
        return Approx(mid, _ulp_bound(mid, bits), bits)
    if not isinstance(value, LinLogValue):
        raise TypeError(f"cannot approximate {value!r}")

    work = 2 * bits + 32
    terms = len(value.primes) + 2
    with PRECISION_LOCK:
        with mpmath.workprec(work):
            q = value.rational_part
            total = mpmath.mpf(q.numerator) / q.denominator
            scale = abs(total)
            for p, c in value.log_terms.items():
                term = mpmath.mpf(c.numerator) / c.denominator * mpmath.log(p)
                total += term
                scale += abs(term)
    mid = mpmath.fadd(total, 0, prec=bits)
    slop = mpmath.ldexp(mpmath.fmul(scale, 2 * terms, prec=64, rounding="u"), -work)
    err = _up(abs(mpmath.fsub(mid, total, prec=work)), slop)
    return Approx(mid, err, bits)


def widen(value, error, precision_bits=None):
    """
    Attach an additional absolute error to a value.

    Parameters
    ----------
    value : {int, fractions.Fraction, LinLogValue, Approx}
    error : {int, fractions.Fraction}
        Non-negative rational error bound. Exact values are returned
        unchanged when it is 0.
    precision_bits : {None, int}, optional
        Precision used when `value` is exact.

    Returns
    -------
    value : {Value, Approx}
    """
    error = Fraction(error)
    if error < 0:
        raise ValueError("error bound must be non-negative")
    if error == 0:
        return value
    a = to_approx(value, precision_bits)
    extra = mpmath.fdiv(error.numerator, error.denominator, prec=64, rounding="u")
    return Approx(a.value, _up(a.error, extra), a.precision)
