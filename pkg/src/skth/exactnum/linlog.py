"""
Exact values in the rational span of 1 and the logarithms of primes

scikit-toric-heights developers
Copyright (c) 2026. All rights reserved.
"""
from fractions import Fraction
from functools import lru_cache
import logging
import math
from threading import Lock

import mpmath
from mpmath import iv
from sympy import isprime, factorint

from skth.utility.exceptions import PrecisionExhaustedError
from skth.utility.internal import parse_rational, format_rational

__all__ = [
    "LinLogValue",
    "linlog_add",
    "linlog_neg",
    "linlog_sub",
    "linlog_scale",
    "linlog_compare",
    "exact_sign",
    "is_exact",
    "INTERVAL_START_BITS",
    "INTERVAL_CEILING_BITS",
]

logger = logging.getLogger(__name__)

INTERVAL_START_BITS = 64
INTERVAL_CEILING_BITS = 4096

# mpmath keeps its working precision on shared context objects
PRECISION_LOCK = Lock()


@lru_cache(maxsize=4096)
def _checked_prime(p):
    return bool(isprime(p))


def _merge_logs(a, b, factor=1):
    merged = dict(a)
    for p, c in b:
        merged[p] = merged.get(p, 0) + factor * c
    return tuple(sorted((p, c) for p, c in merged.items() if c != 0))


class LinLogValue:
    r"""
    Exact real number of the form :math:`q + \sum_p q_p \log p` with rational
    :math:`q, q_p` and primes :math:`p`.

    Parameters
    ----------
    rational_part : {int, fractions.Fraction, str}, optional
        Rational part `q`. Default is 0.
    log_terms : {None, dict}, optional
        Mapping of prime -> rational coefficient. Zero coefficients are
        dropped. Keys are checked for primality.

    Notes
    -----
    Equality is decided symbolically on the normalized fields, which is sound
    because 1 and the logarithms of distinct primes are linearly independent
    over the rationals. Ordering falls back to interval evaluation of the
    difference, refining the working precision until the sign is certain.

    A LinLogValue without logarithmic terms compares and hashes equal to its
    rational part.
    """

    __slots__ = ("_q", "_logs")

    def __init__(self, rational_part=0, log_terms=None):
        q = parse_rational(rational_part)
        logs = {}
        for p, c in (log_terms or {}).items():
            p = int(p)
            c = parse_rational(c)
            if c == 0:
                continue
            if p < 2 or not _checked_prime(p):
                raise ValueError(f"logarithm key {p} is not a prime")
            logs[p] = logs.get(p, 0) + c
        self._q = q
        self._logs = tuple(sorted((p, c) for p, c in logs.items() if c != 0))

    @classmethod
    def _make(cls, q, logs):
        obj = object.__new__(cls)
        obj._q = q
        obj._logs = logs
        return obj

    @classmethod
    def log_prime(cls, p, coefficient=1):
        """
        The value `coefficient * log(p)` for a prime `p`.
        """
        return cls(0, {p: coefficient})

    @classmethod
    def log_of_rational(cls, q):
        """
        Exact value of log|q| for a non-zero rational `q`, written as a
        combination of prime logarithms.

        Parameters
        ----------
        q : {int, fractions.Fraction, str}
            Non-zero rational.

        Returns
        -------
        value : LinLogValue
        """
        q = abs(parse_rational(q))
        if q == 0:
            raise ValueError("log of zero is undefined")
        logs = {}
        for p, e in factorint(q.numerator).items():
            logs[int(p)] = logs.get(int(p), 0) + e
        for p, e in factorint(q.denominator).items():
            logs[int(p)] = logs.get(int(p), 0) - e
        return cls._make(
            Fraction(0),
            tuple(sorted((p, Fraction(c)) for p, c in logs.items() if c != 0)),
        )

    @property
    def rational_part(self):
        return self._q

    @property
    def log_terms(self):
        return dict(self._logs)

    @property
    def primes(self):
        return tuple(p for p, _ in self._logs)

    @property
    def is_rational(self):
        return not self._logs

    # ================
    # Arithmetic
    # ================
    @staticmethod
    def _coerce(other):
        if isinstance(other, LinLogValue):
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return LinLogValue._make(Fraction(other), ())
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return LinLogValue._make(self._q + other._q, _merge_logs(self._logs, other._logs))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return LinLogValue._make(
            self._q - other._q, _merge_logs(self._logs, other._logs, factor=-1)
        )

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __neg__(self):
        return LinLogValue._make(-self._q, tuple((p, -c) for p, c in self._logs))

    def __pos__(self):
        return self

    def __abs__(self):
        return -self if self.sign() < 0 else self

    def _scaled(self, lam):
        if lam == 0:
            return LinLogValue._make(Fraction(0), ())
        return LinLogValue._make(self._q * lam, tuple((p, c * lam) for p, c in self._logs))

    def __mul__(self, other):
        if isinstance(other, LinLogValue):
            if other.is_rational:
                return self._scaled(other._q)
            if self.is_rational:
                return other._scaled(self._q)
            raise TypeError("the product of two logarithmic values is not a LinLogValue")
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self._scaled(Fraction(other))
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, LinLogValue):
            if not other.is_rational:
                raise TypeError("cannot divide by a logarithmic value")
            other = other._q
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            if other == 0:
                raise ZeroDivisionError("LinLogValue division by zero")
            return self._scaled(1 / Fraction(other))
        return NotImplemented

    # ================
    # Comparison
    # ================
    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self._q == other._q and self._logs == other._logs

    def __hash__(self):
        if not self._logs:
            return hash(self._q)
        return hash((self._q, self._logs))

    def _cmp(self, other):
        other = self._coerce(other)
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

    def __bool__(self):
        return bool(self._q) or bool(self._logs)

    def _float_estimate(self):
        """Float value and a bound on its rounding error, or None on overflow."""
        try:
            total = float(self._q)
            scale = abs(total)
            for p, c in self._logs:
                term = float(c) * math.log(p)
                total += term
                scale += abs(term)
        except OverflowError:
            return None
        if not math.isfinite(total):
            return None
        return total, scale * 2.0 ** -46 + 1e-300

    def interval(self, bits):
        """
        Interval enclosure of the value at `bits` of working precision.

        Returns
        -------
        x : mpmath.iv.mpf
        """
        with PRECISION_LOCK:
            old = iv.prec
            iv.prec = bits
            try:
                x = iv.mpf(self._q.numerator) / self._q.denominator
                for p, c in self._logs:
                    x += iv.mpf(c.numerator) / c.denominator * iv.log(p)
            finally:
                iv.prec = old
        return x

    def sign(self, ceiling_bits=None):
        """
        Sign of the value: -1, 0, or 1.

        Parameters
        ----------
        ceiling_bits : {None, int}, optional
            Maximum working precision for the interval refinement. Default is
            `INTERVAL_CEILING_BITS`.

        Raises
        ------
        PrecisionExhaustedError
            If the interval still contains 0 at the ceiling precision.
        """
        if not self._logs:
            return (self._q > 0) - (self._q < 0)

        est = self._float_estimate()
        if est is not None and abs(est[0]) > est[1]:
            return 1 if est[0] > 0 else -1

        ceiling = INTERVAL_CEILING_BITS if ceiling_bits is None else ceiling_bits
        bits = INTERVAL_START_BITS
        while bits <= ceiling:
            x = self.interval(bits)
            if (x > 0) is True:
                return 1
            if (x < 0) is True:
                return -1
            logger.debug(f"sign of {self!r} undecided at {bits} bits, refining")
            bits *= 2
        raise PrecisionExhaustedError(
            f"sign of {self!r} undecided at the {ceiling}-bit ceiling"
        )

    # ================
    # Conversion
    # ================
    def __float__(self):
        est = self._float_estimate()
        if est is not None:
            return est[0]
        return float(self.to_mpf(128))

    def to_mpf(self, bits):
        """Value rounded to an mpmath float at `bits` of precision."""
        with PRECISION_LOCK:
            with mpmath.workprec(bits + 16):
                total = mpmath.mpf(self._q.numerator) / self._q.denominator
                for p, c in self._logs:
                    total += mpmath.mpf(c.numerator) / c.denominator * mpmath.log(p)
            return mpmath.fadd(total, 0, prec=bits)

    def to_json(self):
        return {
            "q": format_rational(self._q),
            "logs": {str(p): format_rational(c) for p, c in self._logs},
        }

    @classmethod
    def from_json(cls, data):
        return cls(data.get("q", "0"), {int(p): c for p, c in data.get("logs", {}).items()})

    def __repr__(self):
        return f"LinLogValue({self})"

    def __str__(self):
        parts = []
        if self._q != 0 or not self._logs:
            parts.append(format_rational(self._q))
        for p, c in self._logs:
            if c == 1:
                term = f"log({p})"
            elif c == -1:
                term = f"-log({p})"
            else:
                term = f"{format_rational(c)}*log({p})"
            parts.append(term)
        return " + ".join(parts).replace("+ -", "- ")


def is_exact(value):
    """True for ints, Fractions and LinLogValues."""
    return isinstance(value, (int, Fraction, LinLogValue)) and not isinstance(value, bool)


def exact_sign(value):
    """Sign of an exact value, deciding logarithmic parts by interval refinement."""
    if isinstance(value, LinLogValue):
        return value.sign()
    return (value > 0) - (value < 0)


def _as_linlog(x):
    value = LinLogValue._coerce(x)
    if value is None:
        raise TypeError(f"{x!r} is not an exact value")
    return value


def linlog_add(a, b):
    """
    Sum of two exact values, normalized.

    Parameters
    ----------
    a, b : {int, fractions.Fraction, LinLogValue}

    Returns
    -------
    total : LinLogValue
    """
    return _as_linlog(a) + _as_linlog(b)


def linlog_neg(a):
    return -_as_linlog(a)


def linlog_sub(a, b):
    """Difference `a - b` of two exact values, normalized."""
    return _as_linlog(a) - _as_linlog(b)


def linlog_scale(a, lam):
    """
    Product of an exact value with a rational scalar.

    Parameters
    ----------
    a : {int, fractions.Fraction, LinLogValue}
    lam : {int, fractions.Fraction, str}
        Rational scalar, strings as accepted by `parse_rational`.

    Returns
    -------
    scaled : LinLogValue
    """
    return _as_linlog(a)._scaled(parse_rational(lam))


def linlog_compare(a, b):
    """
    Compare two exact values.

    Returns
    -------
    order : {-1, 0, 1}
        -1 if `a < b`, 0 if equal, 1 if `a > b`.
    """
    diff = _as_linlog(a) - _as_linlog(b)
    if not diff:
        return 0
    return diff.sign()
