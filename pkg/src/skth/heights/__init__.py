"""
Heights of Toric Hypersurfaces (:mod:`skth.heights`)
====================================================

.. currentmodule:: skth.heights

Divisors and cycles
-------------------

.. autosummary::
    :toctree: generated/

    MetrizedToricDivisor
    FanRays
    HypersurfaceCycle
    HeightReport

Degrees
-------

.. autosummary::
    :toctree: generated/

    degree
    toric_variety_degree
    orbit_closure_degree
    weil_divisor_at_rays

Heights
-------

.. autosummary::
    :toctree: generated/

    toric_local_height
    active_places
    global_height
    canonical_height
    rho_height
    fs_height
    binomial_height_via_projection

Processes
---------

.. autosummary::
    :toctree: generated/

    Degree
    Height

Background Information
----------------------

A toric divisor with an adelic toric metric is described by its polytope
`Delta` and a concave roof function on `Delta` for each place of Q. All but
finitely many roofs are the indicator of `Delta`, the canonical metric. The
Fubini-Study metric on projective space has the roof
`-1/2 sum x_i log x_i` on the standard simplex, which is sampled on a grid
and replaced by the hull of the samples.

For the hypersurface `Z` defined by a Laurent polynomial `f`, the
contribution of a place `v` to the global height is the mixed integral of
the roofs at `v` together with the Legendre-Fenchel dual of the Ronkin
function of `f` at `v`. Only the archimedean place, the primes dividing a
coefficient of `f`, and the places with a non-canonical roof contribute.
Prime contributions are exact combinations of logarithms of primes, the
archimedean contribution is approximate as soon as `f` has three or more
terms.

With canonical metrics the height is `-deg(X) sum_v rho_{f,v}(0)`, which for
integer coefficients without common divisor is the degree times the Mahler
measure of `f`.
"""
from skth.heights.divisors import *
from skth.heights.report import HeightReport
from skth.heights.core import *
from skth.heights.process import Degree, Height
from skth.heights import divisors, core

__all__ = divisors.__all__ + ["HeightReport"] + core.__all__ + ["Degree", "Height"]
