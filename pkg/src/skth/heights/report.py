"""
Height reports: per-place contributions and their sum

scikit-toric-heights developers
Copyright (c) 2026. All rights reserved.
"""
from fractions import Fraction

from pandas import DataFrame

from skth.exactnum import Approx, as_value, value_from_json, value_to_json
from skth.ronkin import PlaceQ
from skth.utility.internal import format_rational, parse_rational

__all__ = ["HeightReport"]


def _sum_values(values):
    total = Fraction(0)
    for v in values:
        total = total + v
    return as_value(total)


class HeightReport:
    """
    Global height as a finite sum of contributions of places.

    Parameters
    ----------
    per_place : dict
        Mapping from places to Values. Stored in place order, archimedean
        place first and primes increasing.
    degree : {int, fractions.Fraction}
        Degree of the toric variety with respect to the divisors, the mixed
        volume of their polytopes.
    kind : str, optional
        Name of the height, such as "global", "canonical" or "fs". Default
        is "global".
    metadata : {None, dict}, optional
        JSON compatible description of how the values were computed.
    checked : {None, dict}, optional
        Contributions of places outside the active set, evaluated only to
        verify that they vanish. They are not part of the total.

    Attributes
    ----------
    total : Value
        Sum of the per-place values, exact when all of them are.
    """

    __slots__ = ("per_place", "degree", "kind", "metadata", "checked", "total")

    def __init__(self, per_place, degree, kind="global", metadata=None, checked=None):
        self.per_place = self._ordered(per_place)
        self.checked = self._ordered({} if checked is None else checked)
        self.degree = parse_rational(degree)
        self.kind = kind
        self.metadata = {} if metadata is None else dict(metadata)
        self.total = _sum_values(self.per_place.values())

    @staticmethod
    def _ordered(mapping):
        items = [(PlaceQ.parse(v), as_value(x)) for v, x in mapping.items()]
        return dict(sorted(items, key=lambda item: item[0].sort_key()))

    @property
    def is_exact(self):
        return not isinstance(self.total, Approx)

    @property
    def error(self):
        """Error bound of the total, 0 when exact."""
        return self.total.error_fraction() if isinstance(self.total, Approx) else Fraction(0)

    @property
    def is_zero_cycle(self):
        return bool(self.metadata.get("zero_cycle", False))

    def __getitem__(self, place):
        return self.per_place[PlaceQ.parse(place)]

    def __float__(self):
        return float(self.total)

    def __repr__(self):
        return (
            f"HeightReport(kind={self.kind!r}, total={self.total}, "
            f"places={[str(v) for v in self.per_place]})"
        )

    def to_frame(self):
        """
        Table of the contributions.

        Returns
        -------
        frame : pandas.DataFrame
            One row per place, then one row per checked place and a final
            "total" row, with columns `place`, `value`, `exact`, `error` and
            `checked`.
        """
        rows = []
        for checked, mapping in ((False, self.per_place), (True, self.checked)):
            for place, value in mapping.items():
                rows.append(self._row(str(place), value, checked))
        rows.append(self._row("total", self.total, False))
        return DataFrame(rows, columns=["place", "value", "exact", "error", "checked"])

    @staticmethod
    def _row(name, value, checked):
        approx = isinstance(value, Approx)
        return {
            "place": name,
            "value": float(value),
            "exact": not approx,
            "error": float(value.error) if approx else 0.0,
            "checked": checked,
        }

    def to_json(self):
        return {
            "kind": self.kind,
            "total": value_to_json(self.total),
            "per_place": {str(v): value_to_json(x) for v, x in self.per_place.items()},
            "checked": {str(v): value_to_json(x) for v, x in self.checked.items()},
            "degree": format_rational(self.degree),
            "metadata": self.metadata,
        }

    @classmethod
    def from_json(cls, data):
        return cls(
            {v: value_from_json(x) for v, x in data["per_place"].items()},
            data["degree"],
            kind=data.get("kind", "global"),
            metadata=data.get("metadata"),
            checked={v: value_from_json(x) for v, x in data.get("checked", {}).items()},
        )
