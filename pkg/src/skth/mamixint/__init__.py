"""
Monge-Ampere Measures and Mixed Integrals (:mod:`skth.mamixint`)
================================================================

.. currentmodule:: skth.mamixint

Measures
--------

.. autosummary::
    :toctree: generated/

    AtomicMeasure
    ma_measure
    mixed_ma_measure
    subset_convolutions

Integrals
---------

.. autosummary::
    :toctree: generated/

    integrate
    integrate_against
    mixed_integral
    mixed_integral_recursive
    mi_segment_projection
    mixed_integral_via_hypographs
    mixed_integral_error
    segment_indicator

Processes
---------

.. autosummary::
    :toctree: generated/

    MixedIntegral

Background Information
----------------------

The mixed integral of `n + 1` concave functions `g_0, ..., g_n` of rank `n`
is the multilinear extension of `(n + 1)! * integral(g)` with respect to
sup-convolution. It is computed as the alternating sum of the integrals of
the sup-convolutions of all non-empty subsets, which is exact for piecewise
affine functions with rational or logarithmic values.

The mixed integral satisfies a recursion that peels off the first function:
boundary terms over the facets of the sum of the other domains, each a mixed
integral in one rank lower, plus the integral of the dual of the first
function against the mixed Monge-Ampere measure of the others. The measure is
atomic, with atoms at the gradients of the affine pieces, and its total mass
is the mixed volume of the domains.
"""
from skth.mamixint.measures import *
from skth.mamixint.integrals import *
from skth.mamixint.process import MixedIntegral
from skth.mamixint import measures, integrals

__all__ = measures.__all__ + integrals.__all__ + ["MixedIntegral"]
