"""
Mahler measure and Ronkin function pipeline processes

scikit-toric-heights developers
Copyright (c) 2026. All rights reserved.
"""
from skth.base import BaseProcess, handle_process_returns
from skth.ronkin.core import mahler_measure, ronkin_value
from skth.ronkin.laurent import LaurentPoly
from skth.ronkin.places import PlaceQ
from skth.ronkin.quadrature import DEFAULT_POINTS_PER_AXIS, QuadratureSpec

__all__ = ["MahlerMeasure", "RonkinEvaluation"]


class MahlerMeasure(BaseProcess):
    """
    Logarithmic Mahler measure of a Laurent polynomial.

    Parameters
    ----------
    points_per_axis : int, optional
        Quadrature nodes per circle for polynomials in several variables.
        Default is 256.
    precision_bits : {None, int}, optional
        Precision of approximate results. Default uses the environment.
    """

    def __init__(self, points_per_axis=DEFAULT_POINTS_PER_AXIS, precision_bits=None):
        super().__init__(points_per_axis=points_per_axis, precision_bits=precision_bits)

        self.spec = QuadratureSpec(points_per_axis, precision_bits)

    @handle_process_returns(results_to_kwargs=False)
    def predict(self, *, polynomial, **kwargs):
        """
        predict(*, polynomial)

        Compute the Mahler measure.

        Parameters
        ----------
        polynomial : {LaurentPoly, dict, str}
            Polynomial, its JSON form, or an expression such as "1 + x + y".

        Returns
        -------
        results : dict
            `mahler_measure`.
        """
        super().predict(polynomial=polynomial, **kwargs)

        f = LaurentPoly.coerce(polynomial)
        value = mahler_measure(f, self.spec)
        self.logger.info(f"[{self!s}] m({f}) = {value}")

        return {"mahler_measure": value}


class RonkinEvaluation(BaseProcess):
    """
    Ronkin function of a Laurent polynomial at a place of Q and a point.

    Parameters
    ----------
    place : {str, int}, optional
        "arch" or a prime. Default is "arch".
    points_per_axis : int, optional
        Quadrature nodes per circle at the archimedean place. Default is 256.
    precision_bits : {None, int}, optional
        Precision of approximate results.
    """

    def __init__(self, place="arch", points_per_axis=DEFAULT_POINTS_PER_AXIS, precision_bits=None):
        super().__init__(place=place, points_per_axis=points_per_axis, precision_bits=precision_bits)

        self.place = PlaceQ.parse(place)
        self.spec = QuadratureSpec(points_per_axis, precision_bits)

    @handle_process_returns(results_to_kwargs=False)
    def predict(self, *, polynomial, point, **kwargs):
        """
        predict(*, polynomial, point)

        Evaluate the Ronkin function.

        Parameters
        ----------
        polynomial : {LaurentPoly, dict, str}
        point : sequence
            Rational coordinates of the point of N_R.

        Returns
        -------
        results : dict
            `ronkin_value` and `place`.
        """
        super().predict(polynomial=polynomial, point=point, **kwargs)

        f = LaurentPoly.coerce(polynomial)
        value = ronkin_value(f, self.place, point, self.spec)

        return {"ronkin_value": value, "place": str(self.place)}
