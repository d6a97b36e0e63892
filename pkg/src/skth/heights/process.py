"""
Degree and height pipeline processes

scikit-toric-heights developers
Copyright (c) 2026. All rights reserved.
"""
from skth.base import BaseProcess, handle_process_returns
from skth.heights.core import (
    degree,
    global_height,
    canonical_height,
    rho_height,
    fs_height,
    toric_local_height,
    binomial_height_via_projection,
)
from skth.heights.divisors import DEFAULT_FS_RESOLUTION, HypersurfaceCycle
from skth.ronkin import DEFAULT_GRID, DEFAULT_POINTS_PER_AXIS, PlaceQ, QuadratureSpec

__all__ = ["Degree", "Height"]


class Degree(BaseProcess):
    """
    Degree of a hypersurface with respect to `n - 1` toric divisors.
    """

    def __init__(self):
        super().__init__()

    @handle_process_returns(results_to_kwargs=False)
    def predict(self, *, polynomial, divisors, **kwargs):
        """
        predict(*, polynomial, divisors)

        Compute the degree.

        Parameters
        ----------
        polynomial : {LaurentPoly, dict, str}
            Defining polynomial of the hypersurface.
        divisors : list
            `n - 1` divisors, their JSON forms, or polytopes.

        Returns
        -------
        results : dict
            `degree`.
        """
        super().predict(polynomial=polynomial, divisors=divisors, **kwargs)

        return {"degree": degree(HypersurfaceCycle(polynomial), divisors)}


class Height(BaseProcess):
    """
    Height of a hypersurface of a toric variety.

    Parameters
    ----------
    kind : {"global", "canonical", "local", "rho", "fs", "projection"}, optional
        Height to compute. "local" is the toric local height at `place`,
        "projection" the height of `V(chi^m - 1)` through the quotient by
        `m`. Default is "global".
    place : {str, int}, optional
        Place of the local height. Default is "arch".
    points_per_axis : int, optional
        Archimedean quadrature nodes per circle. Default is 256.
    precision_bits : {None, int}, optional
        Precision of approximate values.
    grid : int, optional
        Resolution of the archimedean Ronkin dual. Default is 12.
    radius : {None, int, str}, optional
        Search radius of the archimedean Ronkin dual.
    fs_resolution : int, optional
        Sampling resolution of the Fubini-Study roof. Default is 16.
    threads : int, optional
        Places evaluated concurrently by the global height. Default is 1.
    """

    _kinds = ("global", "canonical", "local", "rho", "fs", "projection")

    def __init__(
        self,
        kind="global",
        place="arch",
        points_per_axis=DEFAULT_POINTS_PER_AXIS,
        precision_bits=None,
        grid=DEFAULT_GRID,
        radius=None,
        fs_resolution=DEFAULT_FS_RESOLUTION,
        threads=1,
    ):
        if kind not in self._kinds:
            raise ValueError(f"kind must be one of {list(self._kinds)}, got {kind!r}")
        super().__init__(
            kind=kind,
            place=place,
            points_per_axis=points_per_axis,
            precision_bits=precision_bits,
            grid=grid,
            radius=radius,
            fs_resolution=fs_resolution,
            threads=threads,
        )

        self.kind = kind
        self.place = PlaceQ.parse(place)
        self.spec = QuadratureSpec(points_per_axis, precision_bits)
        self.grid = grid
        self.radius = radius
        self.fs_resolution = fs_resolution
        self.threads = threads

    @handle_process_returns(results_to_kwargs=False)
    def predict(self, *, polynomial=None, divisors=None, m=None, **kwargs):
        """
        predict(*, polynomial=None, divisors=None, m=None)

        Compute the height.

        Parameters
        ----------
        polynomial : {LaurentPoly, dict, str}
            Defining polynomial. Not used by the "projection" kind.
        divisors : list
            `n` divisors, their JSON forms, or polytopes for canonical
            metrics. Not used by the "rho" and "fs" kinds.
        m : sequence of int
            Primitive vector of the "projection" kind.

        Returns
        -------
        results : dict
            `height`, a HeightReport, and for the "local" kind `place`.
        """
        super().predict(polynomial=polynomial, divisors=divisors, m=m, **kwargs)

        if self.kind == "projection":
            if m is None or divisors is None:
                raise ValueError("the projection height needs `m` and `divisors`")
            report = binomial_height_via_projection(m, divisors, self.spec)
            return {"height": report}

        if polynomial is None:
            raise ValueError(f"the {self.kind} height needs a polynomial")
        Z = HypersurfaceCycle(polynomial)
        if self.kind in ("global", "canonical", "local") and divisors is None:
            raise ValueError(f"the {self.kind} height needs divisors")

        if self.kind == "global":
            report = global_height(
                Z, divisors, self.spec, self.grid, self.radius, threads=self.threads
            )
        elif self.kind == "canonical":
            report = canonical_height(Z, divisors, self.spec)
        elif self.kind == "rho":
            report = rho_height(Z, self.spec, self.grid, self.radius)
        elif self.kind == "fs":
            report = fs_height(Z, self.spec, self.fs_resolution, self.grid, self.radius)
        else:
            value = toric_local_height(
                Z, divisors, self.place, self.spec, self.grid, self.radius
            )
            return {"height": value, "place": str(self.place)}

        self.logger.info(f"[{self!s}] {report.kind} height {report.total}")
        return {"height": report}