"""
Scikit Toric Heights (:mod:`skth`)
==================================

.. currentmodule:: skth

Pipeline Processing
-------------------

.. autosummary::
    :toctree: generated/

    Pipeline
"""
import importlib.metadata

__version__ = importlib.metadata.version("scikit-toric-heights")

__minimum_version__ = "0.1.0"

from skth.pipeline import Pipeline
from skth.base import BaseProcess, handle_process_returns

from skth import utility
from skth import exactnum
from skth import lattice
from skth import polytope
from skth import concave
from skth import mamixint
from skth import ronkin
from skth import heights

__skth_version__ = __version__


__all__ = [
    "Pipeline",
    "BaseProcess",
    "handle_process_returns",
    "utility",
    "exactnum",
    "lattice",
    "polytope",
    "concave",
    "mamixint",
    "ronkin",
    "heights",
    "__skth_version__",
]
