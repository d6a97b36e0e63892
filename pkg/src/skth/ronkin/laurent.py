"""
Laurent polynomials with rational coefficients

scikit-toric-heights developers
Copyright (c) 2026. All rights reserved.
"""
from fractions import Fraction
from math import gcd, lcm

import numpy as np
import sympy

from skth.utility.exceptions import RankMismatchError
from skth.utility.internal import (
    add_points,
    check_equal_ranks,
    format_rational,
    integer_vector,
    parse_rational,
)

__all__ = ["LaurentPoly"]


def _sympy_rational(q):
    if not getattr(q, "is_Rational", False):
        raise ValueError(f"coefficient {q} is not rational")
    return Fraction(int(q.p), int(q.q))


def default_symbols(rank):
    """Variable names used when none are given: x, y, z or x1, ..., xn."""
    if rank <= 3:
        return sympy.symbols("x y z")[:rank]
    return sympy.symbols(f"x1:{rank + 1}")


class LaurentPoly:
    """
    Laurent polynomial in `rank` variables with rational coefficients.

    Parameters
    ----------
    terms : {dict, iterable}
        Mapping from exponent to coefficient, or pairs `(exponent, coef)`, or
        dictionaries `{"exp": [...], "coef": "a/b"}`. Equal exponents are
        summed and zero coefficients dropped.
    rank : {None, int}, optional
        Number of variables, inferred from the first exponent by default.

    Attributes
    ----------
    rank : int
    terms : tuple of (tuple of int, fractions.Fraction)
        Sorted by exponent, all coefficients non-zero.

    Raises
    ------
    ValueError
        If no term is left, which would make the polynomial zero.
    """

    __slots__ = ("rank", "terms")

    def __init__(self, terms, rank=None):
        if isinstance(terms, dict):
            terms = terms.items()
        merged = {}
        for term in terms:
            if isinstance(term, dict):
                exp, coef = term["exp"], term["coef"]
            else:
                exp, coef = term
            if rank is None:
                rank = len(exp)
            exp = integer_vector(exp, rank)
            merged[exp] = merged.get(exp, Fraction(0)) + parse_rational(coef)

        kept = sorted((e, c) for e, c in merged.items() if c != 0)
        if not kept:
            raise ValueError("the zero polynomial is not a valid Laurent polynomial")
        self.rank = rank
        self.terms = tuple(kept)

    # ================
    # Structure
    # ================
    @property
    def coefficients(self):
        """Dictionary from exponent to coefficient."""
        return dict(self.terms)

    @property
    def exponents(self):
        return tuple(e for e, _ in self.terms)

    @property
    def n_terms(self):
        return len(self.terms)

    @property
    def is_monomial(self):
        return len(self.terms) == 1

    @property
    def is_binomial(self):
        return len(self.terms) == 2

    def coefficient(self, exp):
        """Coefficient of `chi^exp`, 0 if absent."""
        return self.coefficients.get(integer_vector(exp, self.rank), Fraction(0))

    # ================
    # Algebra
    # ================
    def multiply(self, other):
        """Product of two Laurent polynomials of the same rank."""
        check_equal_ranks([self.rank, other.rank], "polynomials")
        return LaurentPoly(
            [(add_points(a, b), c * d) for a, c in self.terms for b, d in other.terms],
            rank=self.rank,
        )

    __mul__ = multiply

    def scale(self, lam):
        """The polynomial `lam * f` for a non-zero rational `lam`."""
        lam = parse_rational(lam)
        if lam == 0:
            raise ValueError("scaling by zero gives the zero polynomial")
        return LaurentPoly([(e, lam * c) for e, c in self.terms], rank=self.rank)

    def shift(self, m):
        """The product `chi^m * f`."""
        m = integer_vector(m, self.rank)
        return LaurentPoly([(add_points(e, m), c) for e, c in self.terms], rank=self.rank)

    def primitive_integer_form(self):
        """
        Split off the content of the polynomial.

        Returns
        -------
        content : fractions.Fraction
            Positive rational.
        primitive : LaurentPoly
            Polynomial with coprime integer coefficients such that
            `f = content * primitive`.
        """
        den = lcm(*(c.denominator for _, c in self.terms))
        num = 0
        for _, c in self.terms:
            num = gcd(num, int(c * den))
        content = Fraction(num, den)
        return content, self.scale(1 / content)

    # ================
    # Evaluation
    # ================
    def eval_log_coords(self, w):
        """
        Values at the points `exp(w)` given by complex log coordinates.

        Parameters
        ----------
        w : numpy.ndarray
            (N, rank) complex array.

        Returns
        -------
        values : numpy.ndarray
            (N,) complex array.
        """
        E = np.array(self.exponents, dtype=float).reshape(len(self.terms), self.rank)
        c = np.array([float(c) for _, c in self.terms])
        return np.exp(np.asarray(w) @ E.T) @ c

    # ================
    # Conversion
    # ================
    def to_sympy(self, variables=None):
        """Sympy expression of the polynomial."""
        variables = default_symbols(self.rank) if variables is None else variables
        if len(variables) != self.rank:
            raise RankMismatchError(f"{len(variables)} variables for a polynomial of rank {self.rank}")
        expr = sympy.Integer(0)
        for e, c in self.terms:
            mono = sympy.Rational(c.numerator, c.denominator)
            for v, k in zip(variables, e):
                mono = mono * v**k
            expr = expr + mono
        return expr

    @classmethod
    def from_expression(cls, expr, variables=None):
        """
        Parse a Laurent polynomial from a sympy expression or a string.

        Parameters
        ----------
        expr : {str, sympy.Expr}
            Expression such as `"1 + x + y"` or `"x**-1 + 2*x"`.
        variables : {None, sequence}, optional
            Variable names or symbols, in coordinate order. Default is the
            free symbols sorted by name.

        Returns
        -------
        f : LaurentPoly

        Raises
        ------
        ValueError
            If the expression is not a Laurent polynomial with rational
            coefficients in the variables.
        """
        if isinstance(expr, str):
            expr = sympy.sympify(expr)
        if variables is None:
            variables = sorted(expr.free_symbols, key=lambda s: s.name)
        else:
            variables = [sympy.Symbol(v) if isinstance(v, str) else v for v in variables]

        if not variables:
            return cls([((), _sympy_rational(sympy.nsimplify(expr)))], rank=0)

        num, den = sympy.fraction(sympy.together(expr))
        try:
            den_terms = sympy.Poly(den, *variables).terms()
            num_terms = sympy.Poly(num, *variables).terms()
        except sympy.PolynomialError as e:
            raise ValueError(f"{expr} is not a Laurent polynomial in {variables}") from e
        if len(den_terms) != 1:
            raise ValueError(f"{expr} has a denominator that is not a monomial")
        (den_exp, den_coef), = den_terms

        terms = []
        for exp, coef in num_terms:
            q = _sympy_rational(sympy.nsimplify(coef / den_coef))
            terms.append((tuple(a - b for a, b in zip(exp, den_exp)), q))
        return cls(terms, rank=len(variables))

    def __eq__(self, other):
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return (self.rank, self.terms) == (other.rank, other.terms)

    def __hash__(self):
        return hash((self.rank, self.terms))

    def __repr__(self):
        return f"LaurentPoly({self.to_sympy()})"

    def to_json(self):
        return {
            "rank": self.rank,
            "terms": [{"exp": list(e), "coef": format_rational(c)} for e, c in self.terms],
        }

    @classmethod
    def from_json(cls, data):
        return cls(data["terms"], rank=int(data["rank"]))

    @classmethod
    def coerce(cls, data):
        """A LaurentPoly from itself, its JSON form or an expression string."""
        if isinstance(data, cls):
            return data
        if isinstance(data, dict):
            return cls.from_json(data)
        return cls.from_expression(data)
