from fractions import Fraction
from tempfile import TemporaryDirectory
from pathlib import Path
import json

import pytest
import yaml

from skth.pipeline import Pipeline, NotAProcessError, ProcessNotFoundError, VersionError
from skth.heights import Degree
from skth.polytope import MixedVolume
from skth.ronkin import MahlerMeasure
from skth import __version__ as skth_vers


class TestPipeline:
    @staticmethod
    def setup_lgr():
        class Lgr:
            msgs = []

            def info(self, msg):
                self.msgs.append(msg)

        return Lgr()

    def test_run(self, dilate_process, simplex2):
        p = Pipeline()

        dp = dilate_process(factor=2)
        dp.logger = self.setup_lgr()
        mv = MixedVolume()
        mv.logger = self.setup_lgr()

        p.add(dp)
        p.add(mv)

        res = p.run(polytopes=[simplex2] * 2)

        entering = "Entering DilatePolytopes processing with call DilatePolytopes(factor=2)"
        assert entering in dp.logger.msgs
        assert "[MixedVolume] mixed volume of 2 polytopes: 4" in mv.logger.msgs

        # the dilated polytopes replace the inputs of the later step
        assert res == {"DilatePolytopes": {"factor": 2}, "MixedVolume": {"mixed_volume": 4}}

    def test_run_results_to_kwargs(self, volume_process, simplex2):
        p = Pipeline()
        p.add(volume_process(scale=3))
        p.add(Degree())

        res = p.run(polytopes=[simplex2], polynomial="1 + x + y", divisors=[simplex2])

        assert res == {"FirstVolume": {"volume": Fraction(9, 2)}, "Degree": {"degree": 1}}

    def test_run_processes(self):
        p = Pipeline()
        p.add(MahlerMeasure())
        p.add(MixedVolume())

        res = p.run(
            polynomial="x - 1",
            polytopes=[[[0, 0], [1, 0], [0, 1]], [[0, 0], [1, 0], [0, 1]]],
        )

        assert res["MahlerMeasure"] == {"mahler_measure": 0}
        assert res["MixedVolume"] == {"mixed_volume": Fraction(1)}

    def test_run_flatten(self):
        p = Pipeline(flatten_results=True)
        p.add(MahlerMeasure())
        p.add(MixedVolume())

        res = p.run(polynomial="x - 1", polytopes=[[[0], [1]]])

        assert res == {"mahler_measure": 0, "mixed_volume": Fraction(1)}

        p.add(MixedVolume())
        with pytest.raises(IndexError):
            p.run(polynomial="x - 1", polytopes=[[[0], [1]]])

    def test_run_save(self):
        p = Pipeline()

        with TemporaryDirectory() as tdir:
            fname = Path(tdir) / "{name}_results.csv"
            p.add(MixedVolume(), save_file=str(fname))

            p.run(polytopes=[[[0], [2]]])

            files = [i.name for i in Path(tdir).glob("*")]

        assert files == ["MixedVolume_results.csv"]

    def test_str_repr(self, dilate_process):
        p = Pipeline()

        assert repr(p) == "ToricHeightsPipeline[\n]"

        p.add(dilate_process(factor=2))
        p.add(MahlerMeasure(points_per_axis=64))

        assert str(p) == "ToricHeightsPipeline"
        assert repr(p) == (
            "ToricHeightsPipeline[\n\tDilatePolytopes(factor=2),\n"
            "\tMahlerMeasure(points_per_axis=64, precision_bits=None),\n]"
        )

    def test_add(self, dilate_process):
        p = Pipeline()
        p2 = Pipeline()

        tp = dilate_process(factor=5)
        tp2 = dilate_process(factor=4)
        p.add(tp, save_file="test_saver.csv", make_copy=False)
        p2.add(tp2, save_file="test_saver.csv")

        assert p._steps[0] is tp
        assert p._steps == [dilate_process(factor=5)]
        assert tp._in_pipeline
        assert tp.pipe_save_file == "test_saver.csv"

        # check when adding a copy
        assert tp2 is not p2._steps[0]
        assert not tp2._in_pipeline  # should be set on the copy
        assert tp2.pipe_save_file is None
        assert p2._steps[0]._in_pipeline

        with pytest.raises(NotAProcessError):
            p.add(list())

    def test_save(self):
        p = Pipeline()
        p.add(Degree(), save_file="{date}_degree.csv")
        p.add(MahlerMeasure(points_per_axis=64))

        with TemporaryDirectory() as tdir:
            fname = Path(tdir) / "file"

            out = p.save(str(fname))
            with open(out) as f:
                res = yaml.safe_load(f)

        assert out.endswith("file.skth")

        exp = {
            "Steps": [
                {
                    "Degree": {
                        "package": "skth",
                        "module": "heights.process",
                        "parameters": {},
                        "save_file": "{date}_degree.csv",
                    }
                },
                {
                    "MahlerMeasure": {
                        "package": "skth",
                        "module": "ronkin.process",
                        "parameters": {"points_per_axis": 64, "precision_bits": None},
                        "save_file": None,
                    }
                },
            ],
            "Version": skth_vers,
        }

        assert res == exp

    def test_save_load(self):
        p = Pipeline()
        p.add(MahlerMeasure(points_per_axis=64), save_file="{name}.csv")
        p.add(MixedVolume())

        with TemporaryDirectory() as tdir:
            out = p.save(Path(tdir) / "pipe.skth")
            p2 = Pipeline(dict(file=out))

        assert p2._steps == [MahlerMeasure(points_per_axis=64), MixedVolume()]
        assert p2._steps[0].pipe_save_file == "{name}.csv"

    def test__handle_load_input(self, dummy_pipeline):
        with TemporaryDirectory() as tdir:
            fname1 = Path(tdir) / "file.random"
            fname_json = Path(tdir) / "file.json"

            with fname1.open(mode="w") as f:
                yaml.dump(dummy_pipeline, f)
            with fname_json.open(mode="w") as f:
                json.dump(dummy_pipeline, f)

            with pytest.warns(
                UserWarning, match="does not have one of the expected suffixes:"
            ):
                Pipeline._handle_load_input(None, str(fname1))

            # JSON goes through the YAML loader
            data = Pipeline._handle_load_input(None, file=str(fname_json))

        assert data == dummy_pipeline

    def test_load_through_init(self, dummy_pipeline):
        with TemporaryDirectory() as tdir:
            fname = Path(tdir) / "file.skth"

            with fname.open(mode="w") as f:
                yaml.dump(dummy_pipeline, f)

            with pytest.warns(UserWarning, match="not found"):
                p = Pipeline(dict(file=str(fname)))

        assert p._steps == [MixedVolume(), Degree()]

        # Test loading from a yaml string
        dummy_pipe_str = yaml.dump(dummy_pipeline)
        with pytest.warns(UserWarning, match="not found"):
            p2 = Pipeline(dict(yaml_str=dummy_pipe_str))

        assert p2._steps == [MixedVolume(), Degree()]
        assert p2._steps[0].pipe_save_file == "mixed_volume_results.csv"
        assert p2._steps[1].pipe_save_file is None

    def test_load_function(self, dummy_pipeline):
        p = Pipeline()

        with TemporaryDirectory() as tdir:
            fname = Path(tdir) / "file.skth"

            with fname.open(mode="w") as f:
                # save only the steps to trigger version warning
                yaml.dump(dummy_pipeline["Steps"], f)

            with pytest.warns(
                UserWarning, match="Pipeline created by an unknown version"
            ):
                p.load(str(fname))

        assert p._steps == [MixedVolume(), Degree()]

    def test_load_errors(self, dummy_pipeline):
        p = Pipeline()

        pipe_str = yaml.dump(dummy_pipeline)
        pipe_str_steps_only = yaml.dump(dummy_pipeline["Steps"])

        with pytest.raises(VersionError):
            p.load(yaml_str=pipe_str_steps_only, noversion_raise=True)

        with pytest.raises(VersionError):
            p._min_vers = "100.0.0"
            p.load(yaml_str=pipe_str, old_raise=True)

        p._min_vers = None
        with pytest.raises(ProcessNotFoundError):
            p.load(yaml_str=pipe_str, process_raise=True)

    def test_load_version_warning(self, dummy_pipeline):
        p = Pipeline()
        p._min_vers = "100.0.0"

        with TemporaryDirectory() as tdir:
            fname = Path(tdir) / "file.yaml"

            with fname.open(mode="w") as f:
                yaml.dump(dummy_pipeline, f)

            with pytest.warns(
                UserWarning, match="Pipeline was created by an older version of skth"
            ):
                p.load(str(fname))
