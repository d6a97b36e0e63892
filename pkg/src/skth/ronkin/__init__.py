"""
Ronkin Functions (:mod:`skth.ronkin`)
=====================================

.. currentmodule:: skth.ronkin

Polynomials and places
----------------------

.. autosummary::
    :toctree: generated/

    LaurentPoly
    PlaceQ
    p_adic_valuation
    QuadratureSpec

Ronkin functions
----------------

.. autosummary::
    :toctree: generated/

    newton_polytope
    tropical_ronkin
    ronkin_function
    arch_ronkin
    ronkin_value
    ronkin_concave_approx
    ronkin_bounds
    default_radius
    mahler_measure
    support_primes
    max_abs_log_coefficient
    torus_log_mean
    arch_quadrature

Processes
---------

.. autosummary::
    :toctree: generated/

    MahlerMeasure
    RonkinEvaluation

Background Information
----------------------

The Ronkin function of a Laurent polynomial `f` at a place `v` is the mean
of `-log|f|_v` over the fiber of the tropicalization map above a point `u`.
At a prime place the fiber mean is attained at the Gauss point, and the
Ronkin function is the tropical polynomial
`min_m (<m, u> + ord_p(c_m) log p)`, which is exact in terms of prime
logarithms. At the archimedean place it is an integral over a compact real
torus, computed by equal weight quadrature with half-step nodes, except for
monomials and binomials where Jensen's formula gives the same tropical shape
with `-log|c_m|`.

The Ronkin function is concave and differs from the support function of the
Newton polytope by a bounded amount, so its Legendre-Fenchel dual is a
concave function on the Newton polytope. Its value at 0 is minus the
Mahler measure.
"""
from skth.ronkin.laurent import LaurentPoly
from skth.ronkin.places import *
from skth.ronkin.quadrature import *
from skth.ronkin.core import *
from skth.ronkin.process import MahlerMeasure, RonkinEvaluation
from skth.ronkin import places, quadrature, core

__all__ = (
    ["LaurentPoly"]
    + places.__all__
    + quadrature.__all__
    + core.__all__
    + ["MahlerMeasure", "RonkinEvaluation"]
)
