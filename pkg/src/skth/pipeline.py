"""
Pipeline class for chaining several height computations into one run

scikit-toric-heights developers
Copyright (c) 2026. All rights reserved.
"""
from importlib import import_module
from warnings import warn
import logging
from packaging import version
from copy import copy
from pathlib import Path

import yaml
from skth.base import BaseProcess as Process

PIPELINE_SUFFIX = ".skth"
LOADABLE_SUFFIXES = (PIPELINE_SUFFIX, ".yml", ".yaml", ".json")


class NotAProcessError(Exception):
    pass


class ProcessNotFoundError(Exception):
    pass


class VersionError(Exception):
    pass


# safe loader that also accepts python tuples, which yaml.dump emits for them
class TupleSafeLoader(yaml.SafeLoader):
    def construct_python_tuple(self, node):
        return tuple(self.construct_sequence(node))


TupleSafeLoader.add_constructor(
    "tag:yaml.org,2002:python/tuple",
    TupleSafeLoader.construct_python_tuple,
)


def warn_or_raise(msg, err, err_raise):
    if err_raise:
        raise err(msg)
    else:
        warn(msg, UserWarning)


def _step_entry(step):
    """Serializable description of a pipeline step."""
    package, module = step.__class__.__module__.split(".", 1)
    return {
        step._name: {
            "package": package,
            "module": module,
            "parameters": step._kw,
            "save_file": step.pipe_save_file,
        }
    }


def _unpack_step_entry(entry):
    if not isinstance(entry, dict) or len(entry) != 1:
        raise ValueError(f"malformed pipeline step {entry!r}, expected {{name: {{...}}}}")
    ((name, info),) = entry.items()
    if not isinstance(info, dict) or "module" not in info:
        raise ValueError(f"pipeline step {name!r} does not name its module")
    return (
        name,
        info.get("package", "skth"),
        info["module"],
        info.get("parameters") or {},
        info.get("save_file"),
    )


def _find_process(package, module, name):
    """The process class `name` of `package.module`, or None if it is missing."""
    try:
        mod = import_module(f"{package}.{module}")
    except ImportError:
        return None
    return getattr(mod, name, None)


class Pipeline:
    """
    Ordered list of processes run on a shared set of keyword inputs.

    Every step receives the pipeline inputs. Results are collected per step
    and may be written to CSV files as they are produced. Pipelines are saved
    to and loaded from YAML files, which record the package version that
    created them.

    Parameters
    ----------
    load_kwargs : {None, dict}, optional
        Keyword arguments passed to :meth:`Pipeline.load` on creation. Default
        is None, which starts an empty pipeline.
    flatten_results : bool, optional
        Merge the results of all steps into a single dictionary instead of one
        sub-dictionary per step name. Clashing keys raise an `IndexError`.
        Default is False.

    Examples
    --------
    Load a saved pipeline, raising if one of its processes no longer exists:

    >>> pipe = Pipeline(
    >>>     load_kwargs={"file": "canonical_heights.skth", "process_raise": True})
    """

    def __str__(self):
        return "ToricHeightsPipeline"

    def __repr__(self):
        lines = ["ToricHeightsPipeline["] + [f"\t{proc!r}," for proc in self._steps]
        return "\n".join(lines + ["]"])

    def __init__(self, load_kwargs=None, flatten_results=False):
        self._steps = []
        self._current = -1

        self.logger = logging.getLogger(__name__)

        # minimum compatible version, None uses skth.__minimum_version__
        self._min_vers = None

        if load_kwargs is not None:
            self.load(**load_kwargs)

        self.flatten_results = flatten_results

    def save(self, file):
        """
        Write the steps and their parameters to a pipeline file.

        Parameters
        ----------
        file : {str, path-like}
            Destination. ".skth" is appended when the path has another suffix.

        Returns
        -------
        file : str
            Path actually written.
        """
        from skth import __skth_version__ as skth_version

        file = str(file)
        if Path(file).suffix != PIPELINE_SUFFIX:
            file += PIPELINE_SUFFIX

        data = {
            "Steps": [_step_entry(step) for step in self._steps],
            "Version": skth_version,
        }
        with open(file, "w") as f:
            yaml.dump(data, f)

        self.logger.info(f"saved {len(self._steps)} pipeline steps to {file}")
        return file

    @staticmethod
    def _handle_load_input(yaml_str, file):
        """
        Parsed pipeline data from a string, or from a file when `yaml_str` is
        None. JSON input works as well, being a subset of YAML.
        """
        if yaml_str is not None:
            return yaml.load(yaml_str, Loader=TupleSafeLoader)

        if Path(file).suffix not in LOADABLE_SUFFIXES:
            warn(
                f"File ({file}) does not have one of the expected suffixes: "
                f"{list(LOADABLE_SUFFIXES)}",
                UserWarning,
            )
        with open(file, "r") as f:
            return yaml.load(f, Loader=TupleSafeLoader)

    def _check_version(self, data, noversion_raise, old_raise):
        """Steps of the loaded data, after checking the recorded version."""
        import skth

        if isinstance(data, dict) and "Steps" in data and "Version" in data:
            steps, saved = data["Steps"], str(data["Version"])
        else:
            warn_or_raise(
                "Pipeline created by an unknown version of skth. Functionality not "
                "guaranteed.",
                VersionError,
                noversion_raise,
            )
            steps, saved = data, "0.0.1"

        minimum = self._min_vers or skth.__minimum_version__
        if version.parse(saved) < version.parse(minimum):
            warn_or_raise(
                f"Pipeline was created by an older version of skth ({saved}), "
                f"which may not be compatible with the current version "
                f"({skth.__version__}). Functionality is not guaranteed.",
                VersionError,
                old_raise,
            )
        return steps or []

    def load(
        self,
        file=None,
        *,
        yaml_str=None,
        process_raise=False,
        noversion_raise=False,
        old_raise=False,
    ):
        """
        Append the steps of a saved pipeline.

        Parameters
        ----------
        file : {None, str, path-like}
            Pipeline file (".skth", YAML or JSON).
        yaml_str : {None, str}, optional
            Pipeline contents as a string. Takes precedence over `file`.
        process_raise : bool, optional
            Raise a `ProcessNotFoundError` for a step whose process cannot be
            imported. Default is False, which warns and skips the step.
        noversion_raise : bool, optional
            Raise a `VersionError` when the data records no version. Default
            is False, which warns.
        old_raise : bool, optional
            Raise a `VersionError` when the data was written by a version older
            than the minimum compatible one. Default is False, which warns.

        Raises
        ------
        ValueError
            If a step entry is malformed.
        """
        data = self._handle_load_input(yaml_str, file)

        for entry in self._check_version(data, noversion_raise, old_raise):
            name, package, module, params, save_file = _unpack_step_entry(entry)

            process = _find_process(package, module, name)
            if process is None:
                warn_or_raise(
                    f"Process ({package}.{module}.{name}) not found. Not added to pipeline",
                    ProcessNotFoundError,
                    process_raise,
                )
                continue

            self.add(process(**params), save_file=save_file)

    def add(self, process, save_file=None, make_copy=True):
        """
        Append a step.

        Parameters
        ----------
        process : BaseProcess
            Process run by the step.
        save_file : {None, str}, optional
            CSV file the step results are written to, formatted with the
            `date`, `name` and `version` variables of
            :meth:`skth.base.BaseProcess.save_results`. Default is None, which
            does not save.
        make_copy : bool, optional
            Add a shallow copy, so the same process instance can sit in several
            pipelines with different save files. Default is True.

        Examples
        --------
        Compute the Mahler measure and the canonical height of a polynomial,
        saving the heights to a dated file:

        >>> from skth.ronkin import MahlerMeasure
        >>> from skth.heights import Height
        >>> p = Pipeline()
        >>> p.add(MahlerMeasure())
        >>> p.add(Height(kind="canonical"), save_file="{date}_{name}_results.csv")
        >>> p.run(polynomial="1 + x + y", divisors=[[[0, 0], [1, 0], [0, 1]]] * 2)
        """
        if not isinstance(process, Process):
            raise NotAProcessError(
                f"process is not a subclass of {Process!r}, "
                "cannot be added to the pipeline"
            )
        proc = copy(process) if make_copy else process

        proc._in_pipeline = True
        proc.pipe_save_file = save_file
        proc.logger.disabled = self.logger.disabled

        self._steps.append(proc)

    def __iter__(self):
        return self

    def __next__(self):
        self._current += 1
        if self._current < len(self._steps):
            return self._steps[self._current]

        self._current = -1
        raise StopIteration

    def _collect(self, results, proc, step_result):
        if not self.flatten_results:
            results[proc._name] = step_result
            return
        clash = sorted(set(results) & set(step_result))
        if clash:
            raise IndexError(
                f"Results of {proc._name} would overwrite {clash}, cannot create a "
                "flat dictionary. Try setting `flatten_results=False`."
            )
        results.update(step_result)

    def run(self, **kwargs):
        """
        Run every step in order.

        Parameters
        ----------
        kwargs
            Inputs passed to every step. They must cover what each process
            expects, e.g. `polynomial` and `divisors` for heights.

        Returns
        -------
        results : dict
            Step results, keyed by step name unless `flatten_results` is set.
        """
        self._current = -1
        results = {}

        for proc in self:
            kwargs, step_result = proc.predict(**kwargs)
            if proc.pipe_save_file is not None:
                proc.save_results(
                    step_result if step_result is not None else kwargs,
                    proc.pipe_save_file,
                )
            if step_result is not None:
                self._collect(results, proc, step_result)

        return results
