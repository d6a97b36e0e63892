"""
Rational Polytopes (:mod:`skth.polytope`)
=========================================

.. currentmodule:: skth.polytope

Polytopes
---------

.. autosummary::
    :toctree: generated/

    RationalPolytope
    FacetData
    hull
    minkowski_sum
    support_value
    face
    facets
    volume
    mixed_volume
    project
    contains
    dimension
    translate
    dilate
    lattice_points
    hyperplane_normal
    standard_simplex
    cube
    segment
    as_polytope

Pipeline processing
-------------------

.. autosummary::
    :toctree: generated/

    MixedVolume

Exact hull engine
-----------------

.. autosummary::
    :toctree: generated/

    ExactHull
    determinant
    solve_linear
    mixed_volume_of_point_sets

Background Information
----------------------

Polytopes are stored by their vertices, sorted lexicographically, which
makes equality of polytopes a comparison of vertex tuples. Facets are derived
on demand from an exact beneath-beyond hull. Volumes are normalized so that
the unit cube of `Z^n` has volume 1, and mixed volumes so that
`MV(Q, ..., Q) = n! vol(Q)`.
"""
from skth.polytope.core import *
from skth.polytope import core
from skth.polytope.exact_hull import *
from skth.polytope import exact_hull
from skth.polytope.process import MixedVolume
from skth.polytope import process

__all__ = ["MixedVolume"] + core.__all__ + exact_hull.__all__
