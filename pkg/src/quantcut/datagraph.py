"""CSV ingestion, feature standardisation and weighted-graph construction.

The clustering instance is a complete graph on the data rows whose edge
weights are pairwise distances between standardised feature vectors.
Maximising the cut then separates dissimilar rows.
"""

from __future__ import annotations

import csv
import warnings
from dataclasses import dataclass
from pathlib import Path

import numpy as np

METRICS = ("squared_euclidean", "euclidean")


@dataclass(frozen=True)
class FeatureTable:
    """Numeric feature rows with labels and optional binary class tags."""

    row_labels: list[str]
    feature_names: list[str]
    values: np.ndarray
    class_labels: list[str] | None = None

    def __post_init__(self):
        values = np.asarray(self.values, dtype=float)
        if values.ndim != 2:
            raise ValueError("feature values must be a 2-d array")
        n, d = values.shape
        if n < 2:
            raise ValueError("need at least 2 data rows")
        if d < 1:
            raise ValueError("need at least 1 feature column")
        if len(self.row_labels) != n:
            raise ValueError("row_labels length does not match the value rows")
        if len(self.feature_names) != d:
            raise ValueError("feature_names length does not match the value columns")
        if self.class_labels is not None and len(self.class_labels) != n:
            raise ValueError("class_labels length does not match the value rows")
        object.__setattr__(self, "values", values)

    @property
    def n(self) -> int:
        return self.values.shape[0]

    @property
    def d(self) -> int:
        return self.values.shape[1]


@dataclass(frozen=True)
class WeightMatrix:
    """Symmetric nonnegative edge weights with a zero diagonal."""

    w: np.ndarray

    def __post_init__(self):
        w = np.asarray(self.w, dtype=float)
        if w.ndim != 2 or w.shape[0] != w.shape[1]:
            raise ValueError("weight matrix must be square")
        if not np.allclose(w, w.T, rtol=1e-12, atol=1e-12, equal_nan=True):
            raise ValueError("weight matrix must be symmetric")
        if np.any(np.diag(w) != 0.0):
            raise ValueError("weight matrix must have a zero diagonal")
        if np.any(w < 0.0):
            raise ValueError("weights must be nonnegative")
        object.__setattr__(self, "w", (w + w.T) / 2.0)

    @property
    def n(self) -> int:
        return self.w.shape[0]


def load_csv(path, label_column: str, class_column: str | None = None) -> FeatureTable:
    """Read a CSV with a header row into a FeatureTable.

    Every column other than ``label_column`` and ``class_column`` must parse
    as a real number.  Row labels must be unique and at least two data rows
    are required.
    """
    path = Path(path)
    if not path.exists():
        raise FileNotFoundError(f"dataset not found: {path}")
    with path.open(newline="", encoding="utf-8") as fh:
        reader = csv.DictReader(fh)
        if reader.fieldnames is None:
            raise ValueError(f"{path}: empty file, expected a header row")
        header = list(reader.fieldnames)
        for needed in filter(None, (label_column, class_column)):
            if needed not in header:
                raise ValueError(f"{path}: column {needed!r} not in header {header}")
        feature_names = [c for c in header if c not in (label_column, class_column)]
        if not feature_names:
            raise ValueError(f"{path}: no feature columns besides {label_column!r}")
        labels: list[str] = []
        classes: list[str] = []
        rows: list[list[float]] = []
        for lineno, record in enumerate(reader, start=2):
            labels.append(record[label_column])
            if class_column is not None:
                classes.append(record[class_column])
            row = []
            for name in feature_names:
                cell = record[name]
                try:
                    row.append(float(cell))
                except (TypeError, ValueError):
                    raise ValueError(
                        f"{path}: non-numeric value {cell!r} in column {name!r} on line {lineno}"
                    ) from None
            rows.append(row)
    if len(set(labels)) != len(labels):
        dupes = sorted({x for x in labels if labels.count(x) > 1})
        raise ValueError(f"{path}: duplicate row labels {dupes}")
    if len(rows) < 2:
        raise ValueError(f"{path}: need at least 2 data rows, found {len(rows)}")
    return FeatureTable(
        row_labels=labels,
        feature_names=feature_names,
        values=np.array(rows, dtype=float),
        class_labels=classes if class_column is not None else None,
    )


def standardize(table: FeatureTable) -> FeatureTable:
    """Z-score every feature column using the sample (n-1) standard deviation.

    Constant columns carry no distance information and would divide by zero;
    they are dropped with a warning rather than raising, so real-world CSVs
    run unattended.  The operation is idempotent to within 1e-9.
    """
    stds = table.values.std(axis=0, ddof=1)
    keep = stds != 0.0
    if not keep.any():
        raise ValueError("all feature columns are constant")
    if not keep.all():
        dropped = [n for n, k in zip(table.feature_names, keep) if not k]
        warnings.warn(f"dropping constant feature columns: {dropped}", stacklevel=2)
    values = table.values[:, keep]
    z = (values - values.mean(axis=0)) / stds[keep]
    return FeatureTable(
        row_labels=table.row_labels,
        feature_names=[n for n, k in zip(table.feature_names, keep) if k],
        values=z,
        class_labels=table.class_labels,
    )


def build_weights(table: FeatureTable, metric: str = "squared_euclidean") -> WeightMatrix:
    """Pairwise-distance weight matrix over the table rows.

    The table should already be standardised so mixed-unit features are
    commensurable.  Squared Euclidean is the default: it keeps the resulting
    binary program polynomial in the raw features.
    """
    if metric not in METRICS:
        raise ValueError(f"unknown metric {metric!r}, expected one of {METRICS}")
    v = table.values
    d2 = ((v[:, None, :] - v[None, :, :]) ** 2).sum(axis=-1)
    w = np.sqrt(d2) if metric == "euclidean" else d2
    np.fill_diagonal(w, 0.0)
    return WeightMatrix(w)
