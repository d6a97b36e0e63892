"""
Command line front end running JSON job files

scikit-toric-heights developers
Copyright (c) 2026. All rights reserved.
"""
import argparse
import json
import logging
import sys
from fractions import Fraction
from os import environ
from time import perf_counter

import yaml

from skth.exactnum import Approx, LinLogValue, PRECISION_ENV_VAR, value_to_json
from skth.heights import Degree, Height, HeightReport
from skth.mamixint import MixedIntegral
from skth.pipeline import Pipeline, ProcessNotFoundError, TupleSafeLoader
from skth.polytope import MixedVolume
from skth.ronkin import LaurentPoly, MahlerMeasure, RonkinEvaluation
from skth.utility.exceptions import JobSchemaError, PrecisionExhaustedError

__all__ = ["COMMANDS", "load_job", "to_json_data", "run", "main"]

logger = logging.getLogger(__name__)

TOOL = "scikit-toric-heights"

EXIT_OK = 0
EXIT_SCHEMA = 2
EXIT_PRECISION = 3
EXIT_INTERNAL = 4

# command -> (required payload keys, optional payload keys)
COMMANDS = {
    "degree": (("polynomial", "divisors"), ()),
    "mahler": (("polynomial",), ("points_per_axis",)),
    "ronkin-eval": (("polynomial", "point"), ("place", "points_per_axis")),
    "mixed-volume": (("polytopes",), ()),
    "mixed-integral": (("functions",), ("method", "cross_check")),
    "height": (
        (),
        (
            "kind",
            "polynomial",
            "divisors",
            "m",
            "place",
            "points_per_axis",
            "grid",
            "radius",
            "fs_resolution",
        ),
    ),
    "pipeline": (("pipeline",), ("inputs", "flatten_results")),
}

# keys every job may carry
_COMMON_KEYS = ("command", "output_path", "precision_bits", "threads")
_ALIASES = {"poly": "polynomial"}


def load_job(file):
    """
    Read a job file. JSON is read through the YAML loader, so YAML job files
    work as well.

    Parameters
    ----------
    file : {str, path-like}

    Returns
    -------
    job : dict

    Raises
    ------
    JobSchemaError
        If the file cannot be read or does not hold a mapping.
    """
    try:
        with open(file, "r") as f:
            job = yaml.load(f, Loader=TupleSafeLoader)
    except (OSError, yaml.YAMLError) as e:
        raise JobSchemaError(f"cannot read job file {file}: {e}") from e
    if not isinstance(job, dict):
        raise JobSchemaError(f"job file {file} does not hold a JSON object")
    return job


def _validate(job, command):
    if command is None:
        command = job.get("command")
    elif job.get("command", command) != command:
        raise JobSchemaError(
            f"job is for command {job['command']!r}, run as {command!r}"
        )
    if command not in COMMANDS:
        raise JobSchemaError(
            f"unknown command {command!r}, expected one of {sorted(COMMANDS)}"
        )

    payload = {_ALIASES.get(k, k): v for k, v in job.items() if k not in _COMMON_KEYS}
    required, optional = COMMANDS[command]

    missing = [k for k in required if k not in payload]
    if missing:
        raise JobSchemaError(f"{command} job is missing {missing}")
    unknown = sorted(set(payload) - set(required) - set(optional))
    if unknown:
        raise JobSchemaError(f"{command} job has unknown keys {unknown}")

    return command, payload


def to_json_data(obj):
    """JSON form of a result: values as tagged values, rationals as "a/b"."""
    if hasattr(obj, "to_json"):
        return obj.to_json()
    if isinstance(obj, Fraction):
        return value_to_json(obj)
    if isinstance(obj, dict):
        return {str(k): to_json_data(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_json_data(v) for v in obj]
    return obj


def _exactness(result, command, payload):
    """Exactness tag of the main value of a result."""
    if command == "pipeline":
        if payload.get("flatten_results", False):
            return _exactness(result, "flat-pipeline", payload)
        return {step: _exactness(res, step, payload) for step, res in result.items()}

    main = None
    for key in ("height", "mahler_measure", "ronkin_value", "mixed_integral", "mixed_volume", "degree"):
        if key in result:
            main = result[key]
            break

    if isinstance(main, HeightReport):
        out = {"exact": main.is_exact}
        if not main.is_exact:
            out["error"] = float(main.error)
    elif isinstance(main, Approx):
        out = {"exact": False, "error": float(main.error)}
    elif isinstance(main, (Fraction, LinLogValue, int)):
        out = {"exact": True}
    else:
        out = {"exact": None}

    if command == "mahler":
        rank = LaurentPoly.coerce(payload["polynomial"]).rank
        out["path"] = "univariate-jensen" if rank == 1 else "torus-quadrature"
    return out


def _precision_kw(payload, precision_bits):
    kw = {}
    if "points_per_axis" in payload:
        kw["points_per_axis"] = payload["points_per_axis"]
    if precision_bits is not None:
        kw["precision_bits"] = precision_bits
    return kw


def _dispatch(command, payload, threads, precision_bits):
    if command == "degree":
        return Degree().predict(
            polynomial=payload["polynomial"], divisors=payload["divisors"]
        )
    if command == "mahler":
        proc = MahlerMeasure(**_precision_kw(payload, precision_bits))
        return proc.predict(polynomial=payload["polynomial"])
    if command == "ronkin-eval":
        proc = RonkinEvaluation(
            place=payload.get("place", "arch"), **_precision_kw(payload, precision_bits)
        )
        return proc.predict(polynomial=payload["polynomial"], point=payload["point"])
    if command == "mixed-volume":
        return MixedVolume().predict(polytopes=payload["polytopes"])
    if command == "mixed-integral":
        proc = MixedIntegral(
            method=payload.get("method", "inclusion-exclusion"),
            cross_check=bool(payload.get("cross_check", False)),
        )
        return proc.predict(functions=payload["functions"])
    if command == "height":
        kw = _precision_kw(payload, precision_bits)
        for key in ("kind", "place", "grid", "radius", "fs_resolution"):
            if key in payload:
                kw[key] = payload[key]
        proc = Height(threads=threads, **kw)
        return proc.predict(
            polynomial=payload.get("polynomial"),
            divisors=payload.get("divisors"),
            m=payload.get("m"),
        )

    # pipeline
    spec = payload["pipeline"]
    if isinstance(spec, dict):
        load_kwargs = {"yaml_str": yaml.dump(spec), "process_raise": True}
    else:
        load_kwargs = {"file": spec, "process_raise": True}
    pipe = Pipeline(
        load_kwargs=load_kwargs,
        flatten_results=bool(payload.get("flatten_results", False)),
    )
    return pipe.run(**(payload.get("inputs") or {}))


def run(job, command=None, threads=None, precision_bits=None):
    """
    Run a job.

    Parameters
    ----------
    job : dict
        Job data: a `command` (optional when given separately), the command
        payload, and optionally `output_path`, `precision_bits` and `threads`.
    command : {None, str}, optional
        Command to run, overriding the one in `job`.
    threads : {None, int}, optional
        Places evaluated concurrently by heights. Overrides the job value.
    precision_bits : {None, int}, optional
        Precision of approximate values. Overrides the job value.

    Returns
    -------
    report : dict
        Envelope with keys `tool`, `version`, `command`, `result`,
        `exactness`, `timing` and `input`.

    Raises
    ------
    JobSchemaError
        If the job is malformed or its data is invalid.
    """
    from skth import __skth_version__ as skth_version

    command, payload = _validate(job, command)
    threads = int(job.get("threads", 1) if threads is None else threads)
    if precision_bits is None:
        precision_bits = job.get("precision_bits")

    logger.info(f"running {command} job")
    t0 = perf_counter()
    try:
        result = _dispatch(command, payload, threads, precision_bits)
    except JobSchemaError:
        raise
    except (ValueError, TypeError, KeyError, OSError, ProcessNotFoundError) as e:
        # invalid job data surfaces as domain errors of the processes
        raise JobSchemaError(f"{type(e).__name__}: {e}") from e
    elapsed = perf_counter() - t0
    logger.info(f"{command} job finished in {elapsed:.3f}s")

    return {
        "tool": TOOL,
        "version": skth_version,
        "command": command,
        "result": to_json_data(result),
        "exactness": _exactness(result, command, payload),
        "timing": {"seconds": elapsed},
        "input": to_json_data(job),
    }


def _diagnostic(err, code):
    diag = {
        "tool": TOOL,
        "error": type(err).__name__,
        "message": str(err),
        "exit_code": code,
    }
    sys.stderr.write(json.dumps(diag, sort_keys=True) + "\n")
    return code


def _parser():
    parser = argparse.ArgumentParser(
        prog="toric-heights",
        description="Heights of hypersurfaces of toric varieties, run from JSON job files.",
    )
    parser.add_argument("command", choices=sorted(COMMANDS), help="computation to run")
    parser.add_argument("--job", required=True, help="job file (JSON or YAML)")
    parser.add_argument("--out", default=None, help="output file, default standard output")
    parser.add_argument("--threads", type=int, default=None, help="places evaluated concurrently")
    parser.add_argument(
        "--precision-bits",
        type=int,
        default=None,
        help=f"precision of approximate values, overrides {PRECISION_ENV_VAR}",
    )
    parser.add_argument(
        "-v", "--verbose", action="count", default=0, help="increase log verbosity"
    )
    return parser


def main(argv=None):
    """
    Entry point of the `toric-heights` command.

    Returns
    -------
    code : int
        0 on success, 2 for a malformed job, 3 when precision is exhausted,
        4 for an internal error.
    """
    args = _parser().parse_args(argv)

    level = [logging.WARNING, logging.INFO, logging.DEBUG][min(args.verbose, 2)]
    logging.basicConfig(level=level, format="%(asctime)s %(name)s %(levelname)s: %(message)s")

    if args.precision_bits is not None:
        environ[PRECISION_ENV_VAR] = str(args.precision_bits)

    try:
        job = load_job(args.job)
        report = run(
            job,
            command=args.command,
            threads=args.threads,
            precision_bits=args.precision_bits,
        )
    except JobSchemaError as e:
        return _diagnostic(e, EXIT_SCHEMA)
    except PrecisionExhaustedError as e:
        return _diagnostic(e, EXIT_PRECISION)
    except Exception as e:
        logger.exception("internal error")
        return _diagnostic(e, EXIT_INTERNAL)

    text = json.dumps(report, sort_keys=True, indent=2)
    out = args.out or job.get("output_path")
    if out is None:
        sys.stdout.write(text + "\n")
    else:
        with open(out, "w") as f:
            f.write(text + "\n")
        logger.info(f"report written to {out}")

    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
