"""
Mixed integral pipeline process

scikit-toric-heights developers
Copyright (c) 2026. All rights reserved.
"""
from skth.base import BaseProcess, handle_process_returns
from skth.concave import ConcaveFn
from skth.exactnum import Approx
from skth.mamixint.integrals import (
    mixed_integral,
    mixed_integral_recursive,
    mixed_integral_via_hypographs,
)
from skth.utility.exceptions import InvariantBreachError


__all__ = ["MixedIntegral"]


def as_concave(data):
    """Coerce job data (a ConcaveFn or its JSON form) into a ConcaveFn."""
    if isinstance(data, ConcaveFn):
        return data
    return ConcaveFn.from_json(data)


class MixedIntegral(BaseProcess):
    """
    Mixed integral of `n + 1` piecewise affine concave functions of rank `n`.

    Parameters
    ----------
    method : {"inclusion-exclusion", "recursive", "hypographs"}, optional
        Evaluation path. Default is "inclusion-exclusion".
    cross_check : bool, optional
        Also evaluate the recursive path (or the inclusion-exclusion path when
        `method` is "recursive") and require agreement. Default is False.
    """

    _methods = {
        "inclusion-exclusion": mixed_integral,
        "recursive": mixed_integral_recursive,
        "hypographs": mixed_integral_via_hypographs,
    }

    def __init__(self, method="inclusion-exclusion", cross_check=False):
        if method not in self._methods:
            raise ValueError(
                f"method must be one of {list(self._methods)}, got {method!r}"
            )
        super().__init__(method=method, cross_check=cross_check)

        self.method = method
        self.cross_check = cross_check

    @handle_process_returns(results_to_kwargs=False)
    def predict(self, *, functions, **kwargs):
        """
        predict(*, functions)

        Compute the mixed integral.

        Parameters
        ----------
        functions : list
            ConcaveFn objects or their JSON forms.

        Returns
        -------
        results : dict
            `mixed_integral` and, when cross checking, `cross_check_method`.

        Raises
        ------
        InvariantBreachError
            If the cross check fails.
        """
        super().predict(functions=functions, **kwargs)

        gs = [as_concave(g) for g in functions]
        value = self._methods[self.method](gs)
        res = {"mixed_integral": value}

        if self.cross_check:
            other = "inclusion-exclusion" if self.method == "recursive" else "recursive"
            check = self._methods[other](gs)
            if isinstance(value, Approx) or isinstance(check, Approx):
                agree = value.overlaps(check) if isinstance(value, Approx) else check.overlaps(value)
            else:
                agree = value == check
            if not agree:
                raise InvariantBreachError(
                    f"mixed integral paths disagree: {self.method} gave {value}, {other} gave {check}"
                )
            self.logger.info(f"[{self!s}] {self.method} and {other} paths agree")
            res["cross_check_method"] = other

        return res
