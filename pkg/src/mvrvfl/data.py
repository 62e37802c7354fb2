"""Dataset ingestion, two-view construction, splitting and fold planning.

All randomness goes through :func:`numpy.random.default_rng`, i.e. the
PCG64 bit generator seeded via ``SeedSequence``. Given the same seed the
permutations below are identical on every platform numpy supports.
"""

import csv
import math
from dataclasses import dataclass
from pathlib import Path

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from ._validation import check_matrix, check_pm1_labels


class DatasetError(ValueError):
    """Malformed or unusable dataset file."""


@dataclass(frozen=True)
class LabeledDataset:
    features: np.ndarray
    labels: np.ndarray
    feature_names: tuple = ()
    ids: tuple = ()

    def __post_init__(self):
        X = check_matrix(self.features, "features")
        y = check_pm1_labels(self.labels, "labels")
        if X.shape[0] != y.shape[0]:
            raise DatasetError(f"{X.shape[0]} feature rows but {y.shape[0]} labels")
        if X.shape[0] < 2:
            raise DatasetError("a dataset needs at least 2 samples")
        X.setflags(write=False)
        y.setflags(write=False)
        object.__setattr__(self, "features", X)
        object.__setattr__(self, "labels", y)

    @property
    def n_samples(self):
        return self.features.shape[0]

    def subset(self, idx):
        idx = np.asarray(idx)
        return LabeledDataset(
            self.features[idx],
            self.labels[idx],
            self.feature_names,
            tuple(self.ids[i] for i in idx) if self.ids else (),
        )


@dataclass(frozen=True)
class TwoViewDataset:
    view_a: np.ndarray
    view_b: np.ndarray
    labels: np.ndarray
    ids: tuple = ()
    names_a: tuple = ()
    names_b: tuple = ()

    def __post_init__(self):
        A = check_matrix(self.view_a, "view_a")
        B = check_matrix(self.view_b, "view_b")
        y = check_pm1_labels(self.labels, "labels")
        if not (A.shape[0] == B.shape[0] == y.shape[0]):
            raise DatasetError(
                f"row counts differ: view_a={A.shape[0]}, view_b={B.shape[0]}, labels={y.shape[0]}"
            )
        for arr in (A, B, y):
            arr.setflags(write=False)
        object.__setattr__(self, "view_a", A)
        object.__setattr__(self, "view_b", B)
        object.__setattr__(self, "labels", y)

    @property
    def n_samples(self):
        return self.labels.shape[0]

    @property
    def views(self):
        return [self.view_a, self.view_b]

    def subset(self, idx):
        idx = np.asarray(idx)
        return TwoViewDataset(
            self.view_a[idx],
            self.view_b[idx],
            self.labels[idx],
            tuple(self.ids[i] for i in idx) if self.ids else (),
            self.names_a,
            self.names_b,
        )


@dataclass(frozen=True)
class FoldPlan:
    k: int
    assignments: np.ndarray
    seed: int = 0

    def folds(self):
        """Yield ``(train_idx, test_idx)`` for each fold in index order."""
        for f in range(self.k):
            yield np.flatnonzero(self.assignments != f), np.flatnonzero(self.assignments == f)

    def sizes(self):
        return np.bincount(self.assignments, minlength=self.k)


# --------------------------------------------------------------------------
# label handling


def map_binary_labels(raw):
    """Map two distinct raw label strings onto {-1, +1}.

    The smaller value maps to -1. Values that all parse as numbers are
    ordered numerically (so "-1" < "+1"), anything else lexicographically.
    Returns ``(pm1 labels, (negative value, positive value))``.
    """
    values = sorted(set(raw))
    if len(values) != 2:
        raise DatasetError(
            f"degenerate labels: expected exactly two distinct values, found {len(values)}"
            + (f" ({values[:5]})" if values else "")
        )
    try:
        values.sort(key=float)
    except ValueError:
        pass
    neg, pos = values
    y = np.array([1 if v == pos else -1 for v in raw], dtype=np.int64)
    return y, (neg, pos)


def one_hot(labels):
    """One-hot encode {-1, +1} labels: column 0 is class -1, column 1 is +1."""
    y = check_pm1_labels(labels, "labels")
    Y = np.zeros((y.shape[0], 2))
    Y[np.arange(y.shape[0]), (y == 1).astype(int)] = 1.0
    return Y


def decode_scores(scores):
    """Argmax-decode an ``(n, 2)`` score matrix to {-1, +1}; ties go to +1."""
    scores = np.asarray(scores, dtype=float)
    return np.where(scores[:, 1] >= scores[:, 0], 1, -1).astype(np.int64)


# --------------------------------------------------------------------------
# CSV ingestion


def _read_rows(path):
    path = Path(path)
    if not path.is_file():
        raise FileNotFoundError(f"no such file: {path}")
    with path.open(newline="", encoding="utf-8") as fh:
        rows = list(csv.reader(fh))
    rows = [r for r in rows if r and any(c.strip() for c in r)]
    if not rows:
        raise DatasetError(f"{path}: empty file")
    header = [h.strip() for h in rows[0]]
    body = rows[1:]
    for i, r in enumerate(body, start=2):
        if len(r) != len(header):
            raise DatasetError(f"{path}: line {i} has {len(r)} cells, header has {len(header)}")
    return header, body


def _parse_block(path, header, body, cols):
    X = np.empty((len(body), len(cols)))
    for i, r in enumerate(body):
        for j, c in enumerate(cols):
            cell = r[c].strip()
            try:
                X[i, j] = float(cell)
            except ValueError:
                raise DatasetError(
                    f"{path}: non-numeric value {cell!r} at row {i + 1}, column {header[c]!r}"
                ) from None
    return X


def load_csv_dataset(path, label_column="label"):
    """Read a headed CSV into a :class:`LabeledDataset`.

    A column named ``id`` is kept as the row identifier rather than a
    feature. Every other column except ``label_column`` must be numeric.
    """
    header, body = _read_rows(path)
    if label_column not in header:
        raise DatasetError(f"{path}: label column {label_column!r} not in header")
    li = header.index(label_column)
    id_col = header.index("id") if "id" in header and label_column != "id" else None
    cols = [j for j in range(len(header)) if j not in (li, id_col)]
    X = _parse_block(path, header, body, cols)
    y, _ = map_binary_labels([r[li].strip() for r in body])
    ids = tuple(r[id_col].strip() for r in body) if id_col is not None else ()
    return LabeledDataset(X, y, tuple(header[j] for j in cols), ids)


def read_feature_csv(path):
    """Read a feature-only CSV; returns ``(X, names, ids)``."""
    header, body = _read_rows(path)
    id_col = header.index("id") if "id" in header else None
    cols = [j for j in range(len(header)) if j != id_col]
    X = _parse_block(path, header, body, cols)
    ids = tuple(r[id_col].strip() for r in body) if id_col is not None else ()
    return X, tuple(header[j] for j in cols), ids


def read_label_csv(path, label_column="label"):
    header, body = _read_rows(path)
    if label_column in header:
        li = header.index(label_column)
    else:
        non_id = [j for j, h in enumerate(header) if h != "id"]
        if len(non_id) != 1:
            raise DatasetError(f"{path}: cannot find label column {label_column!r}")
        li = non_id[0]
    y, _ = map_binary_labels([r[li].strip() for r in body])
    return y


def load_two_view(view_a=None, view_b=None, labels=None, combined=None, label_column="label"):
    """Load a two-view dataset.

    Either pass three row-aligned files (``view_a``, ``view_b``,
    ``labels``) or a single ``combined`` file whose view columns carry
    the ``a_`` / ``b_`` prefixes next to a label column.
    """
    if combined is not None:
        header, body = _read_rows(combined)
        if label_column not in header:
            raise DatasetError(f"{combined}: label column {label_column!r} not in header")
        ca = [j for j, h in enumerate(header) if h.startswith("a_")]
        cb = [j for j, h in enumerate(header) if h.startswith("b_")]
        if not ca or not cb:
            raise DatasetError(f"{combined}: need both a_* and b_* columns")
        li = header.index(label_column)
        ids = tuple(r[header.index("id")].strip() for r in body) if "id" in header else ()
        y, _ = map_binary_labels([r[li].strip() for r in body])
        return TwoViewDataset(
            _parse_block(combined, header, body, ca),
            _parse_block(combined, header, body, cb),
            y,
            ids,
            tuple(header[j] for j in ca),
            tuple(header[j] for j in cb),
        )
    if view_a is None or view_b is None:
        raise DatasetError("need both view files (or a combined file)")
    A, na, ida = read_feature_csv(view_a)
    B, nb, idb = read_feature_csv(view_b)
    if ida and idb and ida != idb:
        raise DatasetError("view files list different ids or a different row order")
    if labels is None:
        raise DatasetError("a label file is required")
    y = read_label_csv(labels, label_column)
    return TwoViewDataset(A, B, y, ida or idb, na, nb)


def read_views(view_a, view_b):
    """Read two unlabeled, row-aligned view files for prediction."""
    A, _, ida = read_feature_csv(view_a)
    B, _, idb = read_feature_csv(view_b)
    if A.shape[0] != B.shape[0]:
        raise DatasetError(f"view A has {A.shape[0]} rows, view B has {B.shape[0]}")
    if ida and idb and ida != idb:
        raise DatasetError("view files list different ids or a different row order")
    ids = ida or idb or tuple(str(i) for i in range(A.shape[0]))
    return A, B, ids


# --------------------------------------------------------------------------
# PCA-derived second view


class PCAView(BaseEstimator, TransformerMixin):
    """Project onto the fewest principal axes explaining ``variance_fraction``.

    Components are sorted by decreasing variance; each is sign-fixed so
    its largest-magnitude entry is non-negative.

    Attributes
    ----------
    mean_ : ndarray of shape (n_features,)
    components_ : ndarray of shape (n_components_, n_features)
    explained_variance_ : ndarray of shape (n_components_,)
    explained_variance_ratio_ : ndarray of shape (n_components_,)
    n_components_ : int
    """

    def __init__(self, variance_fraction=0.95):
        self.variance_fraction = variance_fraction

    def fit(self, X, y=None):
        if not 0 < self.variance_fraction <= 1:
            raise ValueError("variance_fraction must lie in (0, 1]")
        X = check_matrix(X, min_samples=2)
        mean = X.mean(axis=0)
        Xc = X - mean
        _, s, Vt = np.linalg.svd(Xc, full_matrices=False)
        var = s**2 / (X.shape[0] - 1)
        total = var.sum()
        if not total > 0:
            raise ValueError("X has zero total variance (all columns constant)")
        ratio = var / total
        # tolerance keeps fraction=1.0 from picking numerically-null axes
        k = int(np.searchsorted(np.cumsum(ratio), self.variance_fraction - 1e-12) + 1)
        k = min(k, ratio.size)
        comps = Vt[:k].copy()
        flip = np.sign(comps[np.arange(k), np.abs(comps).argmax(axis=1)])
        flip[flip == 0] = 1.0
        comps *= flip[:, None]
        self.mean_ = mean
        self.components_ = comps
        self.explained_variance_ = var[:k]
        self.explained_variance_ratio_ = ratio[:k]
        self.n_components_ = k
        return self

    def transform(self, X):
        check_is_fitted(self, "components_")
        X = check_matrix(X)
        return (X - self.mean_) @ self.components_.T

    def inverse_transform(self, Z):
        check_is_fitted(self, "components_")
        return np.asarray(Z) @ self.components_ + self.mean_


def make_pca_view(X, variance_fraction=0.95):
    """Return the PCA projection used as a derived second view."""
    return PCAView(variance_fraction).fit_transform(X)


# --------------------------------------------------------------------------
# splitting


def train_test_split(ds, train_fraction=0.7, seed=0):
    """Shuffle-split a dataset; ``round(n * train_fraction)`` rows train."""
    if not 0 < train_fraction < 1:
        raise ValueError("train_fraction must lie strictly between 0 and 1")
    n = ds.n_samples
    n_train = int(math.floor(n * train_fraction + 0.5))
    if n_train < 1 or n_train >= n:
        raise ValueError(f"split of {n} rows at {train_fraction} leaves an empty part")
    perm = np.random.default_rng(seed).permutation(n)
    train_idx, test_idx = np.sort(perm[:n_train]), np.sort(perm[n_train:])
    return ds.subset(train_idx), ds.subset(test_idx)


def make_folds(n, k, seed=0):
    """Assign ``n`` rows to ``k`` folds whose sizes differ by at most one."""
    if k < 2:
        raise ValueError("k must be at least 2")
    if k > n:
        raise ValueError(f"cannot make {k} folds from {n} rows")
    perm = np.random.default_rng(seed).permutation(n)
    assignments = np.empty(n, dtype=np.int64)
    assignments[perm] = np.arange(n) % k
    assignments.setflags(write=False)
    return FoldPlan(k, assignments, seed)
