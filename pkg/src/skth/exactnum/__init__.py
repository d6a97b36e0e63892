"""
Exact and Approximate Numbers (:mod:`skth.exactnum`)
===================================================

.. currentmodule:: skth.exactnum

Exact logarithmic values
------------------------

.. autosummary::
    :toctree: generated/

    LinLogValue
    linlog_add
    linlog_neg
    linlog_sub
    linlog_scale
    linlog_compare

Approximate values
------------------

.. autosummary::
    :toctree: generated/

    Approx
    to_approx
    widen
    default_precision

Value helpers
-------------

.. autosummary::
    :toctree: generated/

    as_value
    value_sign
    value_to_json
    value_from_json
    snap_to_dyadic

Background Information
----------------------

Non-archimedean contributions to heights, tropical constants and all
combinatorial integrals are exact elements of the rational span of 1 and the
logarithms of primes. Their zero test is symbolic; their sign is found by
interval evaluation with :mod:`mpmath` at doubling precision. Archimedean
quadrature results are approximate and always carry an error bound.
"""
from skth.exactnum.linlog import *
from skth.exactnum import linlog
from skth.exactnum.approx import *
from skth.exactnum import approx
from skth.exactnum.values import *
from skth.exactnum import values

__all__ = linlog.__all__ + approx.__all__ + values.__all__
