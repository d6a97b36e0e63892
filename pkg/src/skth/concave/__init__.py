"""
Concave Functions (:mod:`skth.concave`)
=======================================

.. currentmodule:: skth.concave

Function types
--------------

.. autosummary::
    :toctree: generated/

    ConcaveFn
    MinAffineFn
    AffinePiece

Calculus
--------

.. autosummary::
    :toctree: generated/

    canonicalize
    evaluate
    indicator
    support_fn
    legendre_dual
    legendre_dual_back
    sup_convolve
    translate
    add_constant
    right_scale
    push_forward
    sample_concave
    restrict_to_face
    recoordinatize
    fs_roof_oracle
    max_value

Background Information
----------------------

A piecewise affine concave function on a polytope is stored as a finite set
of generators `(x_i, t_i)`. Its value at `x` is the height of the upper
concave hull of the lifted points `(x_i, t_i)` above `x`, and its domain is
the hull of the `x_i`. In this representation the sup-convolution is a
Minkowski sum of generator sets, the Legendre-Fenchel dual is the minimum of
the affine functions `<x_i, .> - t_i`, and direct images are images of the
generators. The affine pieces are recovered from the upper facets of the
lifted hull.
"""
from skth.concave.core import *
from skth.concave import core

__all__ = core.__all__
