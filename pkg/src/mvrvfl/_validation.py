"""Input validation helpers shared by the estimators and functional API."""

import numpy as np
from sklearn.utils.validation import check_array


class NotBinaryError(ValueError):
    """Raised when a label vector does not hold exactly two classes."""


def check_matrix(X, name="X", min_samples=1):
    return check_array(
        X,
        dtype=np.float64,
        ensure_2d=True,
        ensure_all_finite=True,
        ensure_min_samples=min_samples,
        input_name=name,
    )


def check_pm1_labels(y, name="y"):
    """Return ``y`` as an int vector, requiring every entry in {-1, +1}."""
    y = np.asarray(y)
    if y.ndim != 1:
        raise ValueError(f"{name} must be one-dimensional, got shape {y.shape}")
    yi = y.astype(np.int64)
    if not np.array_equal(yi, y) or not np.all(np.isin(yi, (-1, 1))):
        bad = sorted(set(np.unique(y).tolist()) - {-1, 1})
        raise ValueError(f"{name} must contain only -1 and +1, found {bad}")
    return yi


def check_binary_target(y):
    """Encode arbitrary binary labels.

    Returns ``(classes, pm1)`` where ``classes`` is the sorted pair of
    distinct values and ``pm1`` maps ``classes[0]`` to -1 and
    ``classes[1]`` to +1.
    """
    y = np.asarray(y)
    if y.ndim != 1:
        raise ValueError(f"y must be one-dimensional, got shape {y.shape}")
    classes = np.unique(y)
    if classes.size != 2:
        raise NotBinaryError(
            f"degenerate labels: expected exactly two classes, found {classes.size}"
        )
    pm1 = np.where(y == classes[1], 1, -1).astype(np.int64)
    return classes, pm1


def check_views(Xs, n_views=2):
    """Validate a list of row-aligned views and return float arrays."""
    if len(Xs) != n_views:
        raise ValueError(f"expected {n_views} views, got {len(Xs)}")
    out = [check_matrix(X, name=f"view {'AB'[i]}") for i, X in enumerate(Xs)]
    rows = {X.shape[0] for X in out}
    if len(rows) != 1:
        raise ValueError(
            "views are not row-aligned: "
            + ", ".join(f"view {'AB'[i]} has {X.shape[0]} rows" for i, X in enumerate(out))
        )
    return out


def check_width(X, expected, view="A"):
    if X.shape[1] != expected:
        raise ValueError(
            f"view {view}: expected {expected} feature columns, got {X.shape[1]}"
        )
