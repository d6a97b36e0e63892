"""
Places of the rational numbers

scikit-toric-heights developers
Copyright (c) 2026. All rights reserved.
"""
from fractions import Fraction

from sympy import isprime, multiplicity

from skth.exactnum import LinLogValue, as_value
from skth.utility.internal import parse_rational

__all__ = ["PlaceQ", "ARCH", "p_adic_valuation"]


def p_adic_valuation(q, p):
    """Order of the prime `p` in the non-zero rational `q`."""
    q = parse_rational(q)
    if q == 0:
        raise ValueError("the valuation of zero is infinite")
    return int(multiplicity(p, q.numerator)) - int(multiplicity(p, q.denominator))


class PlaceQ:
    """
    Place of Q: the archimedean place or the place of a prime.

    Parameters
    ----------
    prime : {None, int}, optional
        Prime number, or None for the archimedean place. Default is None.

    Attributes
    ----------
    prime : {None, int}
    weight : int
        Weight in the product formula, 1 for every place of Q.

    Raises
    ------
    ValueError
        If `prime` is not a prime number.
    """

    __slots__ = ("prime",)

    weight = 1

    def __init__(self, prime=None):
        if prime is not None:
            prime = int(prime)
            if not isprime(prime):
                raise ValueError(f"{prime} is not a prime number")
        self.prime = prime

    @classmethod
    def parse(cls, data):
        """
        Place from its JSON form: "arch" (or "inf", "infinity") for the
        archimedean place, a prime as integer or string otherwise.
        """
        if isinstance(data, cls):
            return data
        if data is None:
            return ARCH
        if isinstance(data, str):
            text = data.strip().lower()
            if text in ("arch", "inf", "infinity", "archimedean"):
                return ARCH
            if text.startswith("p="):
                text = text[2:]
            data = text
        try:
            return cls(int(data))
        except (TypeError, ValueError) as e:
            raise ValueError(f"cannot interpret {data!r} as a place of Q") from e

    @property
    def is_archimedean(self):
        return self.prime is None

    def sort_key(self):
        """Archimedean place first, then primes in increasing order."""
        return (0, 0) if self.prime is None else (1, self.prime)

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()

    def __eq__(self, other):
        if not isinstance(other, PlaceQ):
            return NotImplemented
        return self.prime == other.prime

    def __hash__(self):
        return hash(("PlaceQ", self.prime))

    def __repr__(self):
        return "PlaceQ(arch)" if self.prime is None else f"PlaceQ({self.prime})"

    def __str__(self):
        return "arch" if self.prime is None else str(self.prime)

    def to_json(self):
        return "arch" if self.prime is None else self.prime

    def log_abs(self, c):
        """
        Exact `log|c|_v` of a non-zero rational, with `|p|_p = 1/p`.

        Returns
        -------
        value : Value
            `log|c|` at the archimedean place, `-ord_p(c) log p` at `p`.
        """
        c = parse_rational(c)
        if c == 0:
            raise ValueError("log of zero is undefined")
        if self.prime is None:
            return as_value(LinLogValue.log_of_rational(c))
        return as_value(LinLogValue.log_prime(self.prime, Fraction(-p_adic_valuation(c, self.prime))))


ARCH = PlaceQ()
