"""
Exceptions raised throughout skth

scikit-toric-heights developers
Copyright (c) 2026. All rights reserved.
"""


class RankMismatchError(ValueError):
    pass


class NotPrimitiveError(ValueError):
    pass


class DegeneratePolytopeError(ValueError):
    pass


class OutsideDomainError(ValueError):
    pass


class PrecisionExhaustedError(ArithmeticError):
    pass


class CanonicalMetricError(ValueError):
    pass


class InvariantBreachError(RuntimeError):
    pass


class JobSchemaError(ValueError):
    pass
