import pytest

from skth.base import BaseProcess, handle_process_returns
from skth.polytope import as_polytope, dilate, volume
from skth import __version__ as skth_vers


@pytest.fixture(scope="module")
def dilate_process():
    class DilatePolytopes(BaseProcess):
        def __init__(self, factor=2):
            super().__init__(factor=factor)
            self.factor = factor

        @handle_process_returns(results_to_kwargs=False)
        def predict(self, *, polytopes, **kwargs):
            super().predict(polytopes=polytopes, **kwargs)

            Qs = [dilate(as_polytope(q), self.factor) for q in polytopes]
            return {"factor": self.factor}, {"polytopes": Qs}

    return DilatePolytopes


@pytest.fixture(scope="module")
def volume_process():
    class FirstVolume(BaseProcess):
        def __init__(self, scale=1):
            super().__init__(scale=scale)
            self.scale = scale

        @handle_process_returns(results_to_kwargs=True)
        def predict(self, *, polytopes, **kwargs):
            super().predict(polytopes=polytopes, **kwargs)

            return {"volume": volume(dilate(as_polytope(polytopes[0]), self.scale))}

    return FirstVolume


@pytest.fixture(scope="module")
def dummy_pipeline():
    exp = {
        "Steps": [
            {
                "MixedVolume": {
                    "package": "skth",
                    "module": "polytope.process",
                    "parameters": {},
                    "save_file": "mixed_volume_results.csv",
                }
            },
            {
                "Degree": {
                    "package": "skth",
                    "module": "heights.process",
                    "parameters": {},
                    "save_file": None,
                }
            },
            {
                "LatticeCount": {
                    "package": "skth",
                    "module": "polytope.counting",
                    "parameters": {"k": 3},
                    "save_file": None,
                }
            },
        ],
        "Version": skth_vers,
    }

    return exp
