"""
Utility Functions (:mod:`skth.utility`)
=======================================

.. currentmodule:: skth.utility

Exceptions
----------

.. autosummary::
    :toctree: generated/

    exceptions.RankMismatchError
    exceptions.NotPrimitiveError
    exceptions.DegeneratePolytopeError
    exceptions.OutsideDomainError
    exceptions.PrecisionExhaustedError
    exceptions.CanonicalMetricError
    exceptions.InvariantBreachError
    exceptions.JobSchemaError

Rational Helpers
----------------

.. autosummary::
    :toctree: generated/

    internal.parse_rational
    internal.format_rational
"""
from skth.utility import exceptions
from skth.utility.exceptions import *
from skth.utility import internal
from skth.utility.internal import parse_rational, format_rational

__all__ = [
    "exceptions",
    "internal",
    "parse_rational",
    "format_rational",
    "RankMismatchError",
    "NotPrimitiveError",
    "DegeneratePolytopeError",
    "OutsideDomainError",
    "PrecisionExhaustedError",
    "CanonicalMetricError",
    "InvariantBreachError",
    "JobSchemaError",
]
