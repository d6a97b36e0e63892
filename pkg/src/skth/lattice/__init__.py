"""
Integer Lattices (:mod:`skth.lattice`)
======================================

.. currentmodule:: skth.lattice

Lattice maps
------------

.. autosummary::
    :toctree: generated/

    LatticeProjection
    PerpSublattice
    quotient_by_primitive
    perp_sublattice

Vectors
-------

.. autosummary::
    :toctree: generated/

    is_primitive
    primitive_generator
    pairing

Normal forms
------------

.. autosummary::
    :toctree: generated/

    smith_normal_form
    hermite_normal_form
    integer_kernel
    right_inverse

Background Information
----------------------

The lattices M and N of a toric variety are always identified with `Z^n`
through a fixed standard basis, with the standard pairing between them.
Non-canonical choices (quotient maps, bases of orthogonal sublattices) are
fixed by Hermite normal form so that results are reproducible.
"""
from skth.lattice.core import *
from skth.lattice import core
from skth.lattice.normalforms import *
from skth.lattice import normalforms

__all__ = core.__all__ + normalforms.__all__
