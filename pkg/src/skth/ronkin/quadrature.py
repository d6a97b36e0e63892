"""
Equal weight quadrature on compact real tori

scikit-toric-heights developers
Copyright (c) 2026. All rights reserved.
"""
import logging
from warnings import warn

import numpy as np

from skth.exactnum import Approx, default_precision

__all__ = ["QuadratureSpec", "torus_log_mean", "arch_quadrature", "DEFAULT_POINTS_PER_AXIS"]

logger = logging.getLogger(__name__)

DEFAULT_POINTS_PER_AXIS = 256


class QuadratureSpec:
    """
    Resolution of the torus quadrature at the archimedean place.

    Parameters
    ----------
    points_per_axis : int, optional
        Number of nodes `K` along each circle, a power of two of at least 4.
        Default is 256.
    precision_bits : {None, int}, optional
        Precision of the returned approximate values. Default is
        :func:`skth.exactnum.default_precision`.
    """

    __slots__ = ("points_per_axis", "precision_bits")

    def __init__(self, points_per_axis=DEFAULT_POINTS_PER_AXIS, precision_bits=None):
        K = int(points_per_axis)
        if K < 4 or K & (K - 1):
            raise ValueError(f"points_per_axis must be a power of two >= 4, got {points_per_axis}")
        self.points_per_axis = K
        self.precision_bits = default_precision() if precision_bits is None else int(precision_bits)

    def __eq__(self, other):
        if not isinstance(other, QuadratureSpec):
            return NotImplemented
        return (self.points_per_axis, self.precision_bits) == (
            other.points_per_axis,
            other.precision_bits,
        )

    def __hash__(self):
        return hash((self.points_per_axis, self.precision_bits))

    def __repr__(self):
        return f"QuadratureSpec(points_per_axis={self.points_per_axis}, precision_bits={self.precision_bits})"


def torus_log_mean(f, u, K):
    """
    Mean of `-log|f|` over the torus `{|z_j| = exp(-u_j)}`.

    Parameters
    ----------
    f : LaurentPoly
    u : sequence
        Point of N_R, converted to floats.
    K : int
        Nodes per axis. The angles are `2 pi (j + 1/2) / K`.

    Returns
    -------
    mean : float
    n_jittered : int
        Nodes at which `f` vanished and that were moved by a quarter cell.

    Notes
    -----
    The nodes are processed in slices along the first axis. Each slice is
    summed pairwise by numpy and the slice sums are summed pairwise again, so
    the result only depends on `K`.
    """
    n = f.rank
    theta = 2 * np.pi * (np.arange(K) + 0.5) / K
    real = -np.asarray([float(c) for c in u], dtype=float)

    if n == 0:
        return float(-np.log(np.abs(f.eval_log_coords(np.zeros((1, 0)))))[0]), 0

    if n > 1:
        grid = np.meshgrid(*([theta] * (n - 1)), indexing="ij")
        rest = np.stack([g.ravel() for g in grid], axis=-1)
    else:
        rest = np.zeros((1, 0))

    slice_sums = np.empty(K)
    n_jittered = 0
    for i, t0 in enumerate(theta):
        ang = np.column_stack((np.full(rest.shape[0], t0), rest))
        with np.errstate(divide="ignore"):
            logs = np.log(np.abs(f.eval_log_coords(real + 1j * ang)))
        bad = ~np.isfinite(logs)
        if bad.any():
            n_jittered += int(bad.sum())
            moved = ang[bad] + np.pi / (2 * K)
            logs[bad] = np.log(np.abs(f.eval_log_coords(real + 1j * moved)))
        slice_sums[i] = -np.sum(logs)

    return float(np.sum(slice_sums) / K**n), n_jittered


def arch_quadrature(f, u, spec):
    """
    Archimedean Ronkin value `rho_f(u)` by torus quadrature.

    Parameters
    ----------
    f : LaurentPoly
    u : sequence
    spec : QuadratureSpec

    Returns
    -------
    value : Approx
        Quadrature with `K` nodes per axis. The error is the difference with
        the quadrature on `K / 2` nodes per axis, plus a floating point floor.
        It is doubled when nodes had to be moved off zeros of `f`.

    Warns
    -----
    UserWarning
        When a node hits a zero of `f`.
    """
    K = spec.points_per_axis
    fine, jit_fine = torus_log_mean(f, u, K)
    coarse, jit_coarse = torus_log_mean(f, u, K // 2)

    err = abs(fine - coarse)
    if jit_fine or jit_coarse:
        warn(
            f"{jit_fine + jit_coarse} quadrature nodes hit zeros of {f!r} and were moved",
            UserWarning,
        )
        err *= 2
    err += np.finfo(float).eps * float(K) ** f.rank * (1 + abs(fine))

    logger.debug(f"torus quadrature at u={tuple(u)} with K={K}: {fine} +- {err}")
    return Approx(fine, err, spec.precision_bits)
