"""
Mixed volume pipeline process

scikit-toric-heights developers
Copyright (c) 2026. All rights reserved.
"""
from skth.base import BaseProcess, handle_process_returns
from skth.polytope.core import as_polytope, mixed_volume


__all__ = ["MixedVolume"]


class MixedVolume(BaseProcess):
    """
    Exact normalized mixed volume of `n` rational polytopes of rank `n`.

    Notes
    -----
    The normalization gives `MV(Q, ..., Q) = n! vol(Q)`, so the standard
    simplex has mixed volume 1 with itself in every rank.
    """

    def __init__(self):
        super().__init__()

    @handle_process_returns(results_to_kwargs=False)
    def predict(self, *, polytopes, **kwargs):
        """
        predict(*, polytopes)

        Compute the mixed volume.

        Parameters
        ----------
        polytopes : list
            `n` polytopes of rank `n`, each a RationalPolytope, its JSON form,
            or a list of points.

        Returns
        -------
        results : dict
            `mixed_volume`, an exact fractions.Fraction.
        """
        super().predict(polytopes=polytopes, **kwargs)

        Qs = [as_polytope(q) for q in polytopes]
        mv = mixed_volume(Qs)
        self.logger.info(f"[{self!s}] mixed volume of {len(Qs)} polytopes: {mv}")

        return {"mixed_volume": mv}
