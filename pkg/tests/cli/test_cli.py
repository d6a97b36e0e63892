import json
import os

import pytest

import skth
from skth import cli
from skth.cli import load_job, main, run
from skth.exactnum import LinLogValue, PRECISION_ENV_VAR, value_from_json
from skth.heights import HeightReport
from skth.utility.exceptions import (
    JobSchemaError,
    PrecisionExhaustedError,
    InvariantBreachError,
)

M_TRINOMIAL = 0.3230659472194505


def _read(path):
    with open(path) as f:
        return json.load(f)


class TestLoadJob:
    def test_json(self, write_job):
        job = load_job(write_job({"command": "mahler", "polynomial": "x - 1"}))

        assert job == {"command": "mahler", "polynomial": "x - 1"}

    def test_yaml(self, tmp_path):
        path = tmp_path / "job.yaml"
        path.write_text("command: mahler\npolynomial: x - 1\n")

        assert load_job(str(path))["polynomial"] == "x - 1"

    def test_missing_file(self, tmp_path):
        with pytest.raises(JobSchemaError, match="cannot read job file"):
            load_job(str(tmp_path / "none.json"))

    def test_not_a_mapping(self, write_job):
        with pytest.raises(JobSchemaError, match="does not hold a JSON object"):
            load_job(write_job([1, 2, 3]))


class TestRun:
    def test_envelope(self):
        report = run({"command": "mahler", "poly": "x - 1"})

        assert report["tool"] == "scikit-toric-heights"
        assert report["version"] == skth.__version__
        assert report["command"] == "mahler"
        assert report["result"] == {"mahler_measure": {"q": "0", "logs": {}}}
        assert report["exactness"] == {"exact": True, "path": "univariate-jensen"}
        assert report["timing"]["seconds"] >= 0
        assert report["input"] == {"command": "mahler", "poly": "x - 1"}

    def test_mahler_linear(self):
        report = run({"polynomial": "2*x + 4"}, command="mahler")

        value = value_from_json(report["result"]["mahler_measure"])
        assert value == LinLogValue.log_prime(2, 2)

    def test_mahler_quadrature(self):
        report = run({"command": "mahler", "polynomial": "1 + x + y"})

        res = report["result"]["mahler_measure"]
        assert abs(res["approx"] - M_TRINOMIAL) < 2e-3
        assert report["exactness"]["exact"] is False
        assert report["exactness"]["error"] == pytest.approx(res["err"])
        assert report["exactness"]["path"] == "torus-quadrature"

    def test_mixed_volume(self, simplex2_points):
        report = run({"command": "mixed-volume", "polytopes": [simplex2_points] * 2})

        assert report["result"] == {"mixed_volume": {"q": "1", "logs": {}}}
        assert report["exactness"] == {"exact": True}

    def test_degree(self, simplex2_points):
        report = run(
            {
                "command": "degree",
                "polynomial": "1 + x + y",
                "divisors": [simplex2_points],
            }
        )

        assert report["result"] == {"degree": {"q": "1", "logs": {}}}

    def test_ronkin_eval_prime(self):
        report = run(
            {
                "command": "ronkin-eval",
                "polynomial": "2*x + 4",
                "point": ["0"],
                "place": 2,
            }
        )

        assert report["result"]["place"] == "2"
        value = value_from_json(report["result"]["ronkin_value"])
        assert value == LinLogValue.log_prime(2)

    def test_mixed_integral(self):
        segment = {"rank": 1, "generators": [{"x": ["0"], "t": "0"}, {"x": ["1"], "t": "0"}]}
        tent = {"rank": 1, "generators": [{"x": ["0"], "t": "0"}, {"x": ["1"], "t": "2"}]}
        report = run(
            {
                "command": "mixed-integral",
                "functions": [segment, tent],
                "cross_check": True,
            }
        )

        # the indicator of [0, 1] against g gives max g
        assert value_from_json(report["result"]["mixed_integral"]) == 2
        assert report["result"]["cross_check_method"] == "recursive"

    def test_canonical_height(self, simplex2_points):
        report = run(
            {
                "command": "height",
                "kind": "canonical",
                "polynomial": "1 + x + y",
                "divisors": [simplex2_points] * 2,
            },
            threads=2,
        )

        height = HeightReport.from_json(report["result"]["height"])
        assert abs(float(height) - M_TRINOMIAL) < 2e-3
        assert report["exactness"]["exact"] is False
        assert report["exactness"]["error"] > 0

    def test_global_height_exact(self):
        report = run(
            {
                "command": "height",
                "polynomial": "2*x + 4",
                "divisors": [[[0], [1]]],
            }
        )

        height = HeightReport.from_json(report["result"]["height"])
        assert height.total == LinLogValue.log_prime(2)
        assert report["exactness"] == {"exact": True}

    def test_deterministic(self, simplex2_points):
        job = {
            "command": "height",
            "kind": "canonical",
            "polynomial": "1 + x + y",
            "divisors": [simplex2_points] * 2,
            "points_per_axis": 64,
        }
        first = run(job)
        second = run(job)

        assert json.dumps(first["result"], sort_keys=True) == json.dumps(
            second["result"], sort_keys=True
        )

    def test_pipeline(self, simplex2_points):
        pipe = {
            "Steps": [
                {
                    "MixedVolume": {
                        "package": "skth",
                        "module": "polytope.process",
                        "parameters": {},
                        "save_file": None,
                    }
                },
                {
                    "MahlerMeasure": {
                        "package": "skth",
                        "module": "ronkin.process",
                        "parameters": {},
                        "save_file": None,
                    }
                },
            ],
            "Version": skth.__version__,
        }
        report = run(
            {
                "command": "pipeline",
                "pipeline": pipe,
                "inputs": {"polytopes": [simplex2_points] * 2, "polynomial": "x - 1"},
            }
        )

        assert report["result"]["MixedVolume"] == {"mixed_volume": {"q": "1", "logs": {}}}
        assert report["exactness"] == {
            "MixedVolume": {"exact": True},
            "MahlerMeasure": {"exact": True},
        }

    @pytest.mark.parametrize(
        ("job", "match"),
        (
            ({"command": "volume"}, "unknown command"),
            ({"command": "mahler"}, "missing"),
            ({"command": "mahler", "polynomial": "x", "grid": 3}, "unknown keys"),
            ({"command": "mahler", "polynomial": "1/(1 + x)"}, "denominator"),
            ({"command": "height", "kind": "canonical", "polynomial": "1 + x"}, "needs divisors"),
        ),
    )
    def test_schema_errors(self, job, match):
        with pytest.raises(JobSchemaError, match=match):
            run(job)

    def test_command_mismatch(self):
        with pytest.raises(JobSchemaError, match="run as"):
            run({"command": "mahler", "polynomial": "x"}, command="degree")

    def test_rank_mismatch(self, simplex2_points):
        with pytest.raises(JobSchemaError, match="RankMismatchError"):
            run({"command": "mixed-volume", "polytopes": [simplex2_points]})

    @pytest.mark.parametrize(
        "job",
        (
            {"command": "mixed-volume", "polytopes": [[[0], [0.1]]]},
            {"command": "ronkin-eval", "polynomial": "2*x + 4", "point": [0.5], "place": 2},
        ),
    )
    def test_float_data(self, job):
        with pytest.raises(JobSchemaError, match="TypeError: float"):
            run(job)


class TestMain:
    def test_out_file(self, write_job, tmp_path):
        job = write_job({"polynomial": "x - 1"})
        out = tmp_path / "report.json"

        code = main(["mahler", "--job", job, "--out", str(out)])

        assert code == 0
        report = _read(out)
        assert report["result"] == {"mahler_measure": {"q": "0", "logs": {}}}

    def test_output_path(self, write_job, tmp_path):
        out = tmp_path / "from_job.json"
        job = write_job({"polynomial": "x - 1", "output_path": str(out)})

        assert main(["mahler", "--job", job]) == 0
        assert _read(out)["command"] == "mahler"

    def test_stdout(self, write_job, capsys, simplex2_points):
        job = write_job({"polytopes": [simplex2_points] * 2})

        assert main(["mixed-volume", "--job", job]) == 0

        report = json.loads(capsys.readouterr().out)
        assert report["result"]["mixed_volume"] == {"q": "1", "logs": {}}

    def test_schema_exit(self, write_job, capsys):
        job = write_job({"command": "mahler"})

        assert main(["mahler", "--job", job]) == 2

        diag = json.loads(capsys.readouterr().err)
        assert diag["error"] == "JobSchemaError"
        assert diag["exit_code"] == 2

    def test_float_exit(self, write_job, capsys):
        job = write_job({"polytopes": [[[0], [0.1]]]})

        assert main(["mixed-volume", "--job", job]) == 2
        assert json.loads(capsys.readouterr().err)["error"] == "JobSchemaError"

    def test_precision_exit(self, write_job, monkeypatch, capsys):
        def exhausted(*args):
            raise PrecisionExhaustedError("sign undecided at 4096 bits")

        monkeypatch.setattr(cli, "_dispatch", exhausted)
        job = write_job({"polynomial": "x - 1"})

        assert main(["mahler", "--job", job]) == 3
        assert json.loads(capsys.readouterr().err)["error"] == "PrecisionExhaustedError"

    def test_internal_exit(self, write_job, monkeypatch, capsys):
        def breach(*args):
            raise InvariantBreachError("negative mass")

        monkeypatch.setattr(cli, "_dispatch", breach)
        job = write_job({"polynomial": "x - 1"})

        assert main(["mahler", "--job", job]) == 4
        assert json.loads(capsys.readouterr().err)["error"] == "InvariantBreachError"

    def test_precision_bits_flag(self, write_job, monkeypatch, tmp_path):
        monkeypatch.setenv(PRECISION_ENV_VAR, "64")
        job = write_job({"polynomial": "x - 1"})

        argv = ["mahler", "--job", job, "--precision-bits", "96", "--out", str(tmp_path / "o.json")]

        assert main(argv) == 0

        assert os.environ[PRECISION_ENV_VAR] == "96"
