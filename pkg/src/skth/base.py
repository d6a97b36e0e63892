"""
Base classes, functions, etc for the skth library

scikit-toric-heights developers
Copyright (c) 2026. All rights reserved.
"""
from datetime import date as dt_date
import logging
import functools

from pandas import DataFrame, concat


def _merge_into(kwargs, update):
    try:
        kwargs.update(update)
    except (TypeError, ValueError) as e:
        raise TypeError("Cannot update input with non-dictionary output") from e


def handle_process_returns(*, results_to_kwargs):
    """
    Decorator for `predict` methods of `BaseProcess` subclasses.

    A decorated method returns either a results dictionary, or a tuple
    `(results, updates)` whose second entry holds new inputs for later steps.
    Outside a pipeline the caller gets the results. Inside a pipeline it gets
    `(kwargs, results)`, with `kwargs` the inputs after applying the updates.

    Parameters
    ----------
    results_to_kwargs : bool
        Also merge the results into the inputs seen by later steps.
    """

    def internal_handler(method):
        @functools.wraps(method)
        def magic(self, **kwargs):
            returned = method(self, **kwargs)

            if isinstance(returned, dict):
                res, updates = returned, ()
            else:
                res, *updates = returned
            if len(updates) > 1:
                raise ValueError(
                    "Too many values to update input with, updates should be a dictionary"
                )

            if results_to_kwargs:
                _merge_into(kwargs, res)
            for update in updates:
                _merge_into(kwargs, update)

            return (kwargs, res) if self._in_pipeline else res

        return magic

    return internal_handler


def _cell(value):
    """String form of a result entry for tabular output."""
    if isinstance(value, (list, tuple)):
        return "[" + ", ".join(_cell(v) for v in value) + "]"
    return str(value)


def results_frame(results):
    """
    Tabular form of a process result dictionary.

    Entries with a `to_frame` method (height reports) contribute their own
    rows, prefixed by the result key. Everything else is collected into a
    single row of string cells.

    Parameters
    ----------
    results : dict

    Returns
    -------
    frame : pandas.DataFrame
    """
    frames = []
    scalars = {}
    for key, value in results.items():
        if hasattr(value, "to_frame"):
            sub = value.to_frame()
            sub.insert(0, "result", key)
            frames.append(sub)
        else:
            scalars[key] = [_cell(value)]
    if scalars:
        frames.insert(0, DataFrame(scalars))
    if not frames:
        return DataFrame()
    return concat(frames, ignore_index=True, sort=False)


class BaseProcess:
    """
    The base class for any Process that is designed to work within the
    scikit-toric-heights framework, and the Pipeline class. Should be subclassed.
    """

    def __str__(self):
        return self._name

    def __repr__(self):
        params = ", ".join(f"{k}={v!r}" for k, v in self._kw.items())
        return f"{self._name}({params})"

    def __eq__(self, other):
        return isinstance(other, type(self)) and self._kw == other._kw

    def __init__(self, **kwargs):
        """
        Parameters
        ----------
        kwargs
            Configuration of the subclass. Recorded for `repr`, equality and
            pipeline files, so it must be YAML serializable.
        """
        self._name = self.__class__.__name__
        self._in_pipeline = False
        self.pipe_save_file = None

        self._kw = kwargs

        self.logger = logging.getLogger(__name__)

    def predict(self, **kwargs):
        """
        Log the call. Subclasses do the work and call this first through
        `super`.
        """
        self.logger.info(f"Entering {self._name} processing with call {self!r}")

    def save_results(self, results, file_name):
        """
        Save the results of the processing pipeline to a csv file

        Parameters
        ----------
        results : dict
            Dictionary of results from the output of predict
        file_name : str
            File name. Can be optionally formatted (see Notes)

        Notes
        -----
        Available format variables available:

        - date: todays date expressed in yyyymmdd format.
        - name: process name.
        - version: skth version number (short form, no period separation)
        """
        # avoid circular import
        from skth import __skth_version__ as skth_version

        date = dt_date.today().strftime("%Y%m%d")
        version = skth_version.replace(".", "")

        file_name = file_name.format(date=date, name=self._name, version=version)

        kw_line = [f"{k}: {self._kw[k]}".replace(",", "  ") for k in self._kw]

        lines = [
            "Scikit-Toric-Heights\n",
            f"Version,{skth_version}\n",
            f"Date,{date}\n",
            ",".join(kw_line),
            "\n",
            "\n",
        ]

        with open(file_name, "w") as f:
            f.writelines(lines)

        results_frame(results).to_csv(file_name, index=False, mode="a")

        return file_name
