"""Minimum-redundancy maximum-relevance feature ranking.

Mutual information is the plug-in estimate on an equal-width histogram
(natural log). A continuous vector is cut into ``bins`` equal-width bins
over its own ``[min, max]``; a constant vector collapses to one bin, so
its MI with anything is zero.
"""

import math
from dataclasses import dataclass

import numpy as np
from sklearn.base import BaseEstimator
from sklearn.feature_selection import SelectorMixin
from sklearn.utils.validation import check_is_fitted

from ._validation import check_matrix

DEFAULT_BINS = 10
TIE_TOL = 1e-12  # MI values closer than this are treated as equal


@dataclass(frozen=True)
class MrmrRanking:
    order: np.ndarray
    scores: np.ndarray

    def __post_init__(self):
        if sorted(self.order.tolist()) != list(range(self.order.size)):
            raise ValueError("order must be a permutation of the feature indices")


def discretize(x, bins=DEFAULT_BINS):
    """Equal-width bin codes in ``[0, bins)``."""
    if bins < 2:
        raise ValueError("bins must be at least 2")
    x = np.asarray(x, dtype=float)
    lo, hi = x.min(), x.max()
    if hi == lo:
        return np.zeros(x.shape, dtype=np.int64)
    codes = np.floor((x - lo) / (hi - lo) * bins).astype(np.int64)
    return np.minimum(codes, bins - 1)


def discrete_mi(a, b):
    """Plug-in MI (nats) between two non-negative integer code vectors."""
    n = a.shape[0]
    ka, kb = int(a.max()) + 1, int(b.max()) + 1
    joint = np.bincount(a * kb + b, minlength=ka * kb).reshape(ka, kb) / n
    pa = joint.sum(axis=1, keepdims=True)
    pb = joint.sum(axis=0, keepdims=True)
    nz = joint > 0
    return float(max(0.0, np.sum(joint[nz] * np.log(joint[nz] / (pa @ pb)[nz]))))


def label_codes(y):
    _, codes = np.unique(np.asarray(y), return_inverse=True)
    return codes.astype(np.int64)


def mutual_information(x, y, bins=DEFAULT_BINS):
    """MI between two real vectors, each binned on its own range."""
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    if x.shape != y.shape or x.ndim != 1:
        raise ValueError("x and y must be 1-d vectors of equal length")
    if x.size < 2:
        raise ValueError("need at least 2 samples")
    return discrete_mi(discretize(x, bins), discretize(y, bins))


def _first_within(values, candidates, tol=TIE_TOL):
    """Candidates whose value is within ``tol`` of the smallest, in index order."""
    v = values[candidates]
    return candidates[v <= v.min() + tol]


def mrmr_rank(X, y, bins=DEFAULT_BINS):
    """Greedy ranking by ``mean MI to selected features - MI to label``.

    The first pick maximizes relevance; among equally relevant features
    the one with the lowest binned entropy wins (a copy of the label beats
    any other feature that merely determines it), then the lowest index.
    Each later pick minimizes the difference, ties to the lowest index.
    ``scores[t]`` is the objective of the feature picked at step ``t``
    (``-relevance`` first).
    """
    X = check_matrix(X, min_samples=2)
    m = X.shape[1]
    codes = np.column_stack([discretize(X[:, j], bins) for j in range(m)])
    target = label_codes(y)
    if target.shape[0] != X.shape[0]:
        raise ValueError("X and y have different numbers of rows")
    relevance = np.array([discrete_mi(codes[:, j], target) for j in range(m)])

    top = _first_within(-relevance, np.arange(m))
    if top.size > 1:
        entropy = np.array([discrete_mi(codes[:, j], codes[:, j]) for j in top])
        top = top[entropy <= entropy.min() + TIE_TOL]
    first = int(top[0])
    order, scores = [first], [-relevance[first]]
    redundancy_sum = np.zeros(m)
    remaining = np.ones(m, dtype=bool)
    remaining[first] = False
    while remaining.any():
        last = order[-1]
        cand = np.flatnonzero(remaining)
        for j in cand:
            redundancy_sum[j] += discrete_mi(codes[:, j], codes[:, last])
        objective = redundancy_sum / len(order) - relevance
        pick = int(_first_within(objective, cand)[0])
        order.append(pick)
        scores.append(objective[pick])
        remaining[pick] = False
    return MrmrRanking(np.array(order, dtype=np.int64), np.array(scores))


def select_fraction(ranking, fraction):
    """Leading ``ceil(fraction * m)`` indices of the ranking."""
    if not 0 < fraction <= 1:
        raise ValueError("fraction must lie in (0, 1]")
    m = ranking.order.size
    k = math.ceil(fraction * m - 1e-12)
    return ranking.order[: max(k, 1)].copy()


class MRMRSelector(SelectorMixin, BaseEstimator):
    """Keep the top ``fraction`` of features by mRMR rank.

    Attributes
    ----------
    ranking_ : MrmrRanking
    selected_ : ndarray of int
        Kept feature indices in rank order.
    """

    def __init__(self, fraction=0.5, bins=DEFAULT_BINS):
        self.fraction = fraction
        self.bins = bins

    def fit(self, X, y):
        X = check_matrix(X, min_samples=2)
        self.ranking_ = mrmr_rank(X, y, self.bins)
        self.selected_ = select_fraction(self.ranking_, self.fraction)
        self.n_features_in_ = X.shape[1]
        return self

    def _get_support_mask(self):
        check_is_fitted(self, "selected_")
        mask = np.zeros(self.n_features_in_, dtype=bool)
        mask[self.selected_] = True
        return mask

    def transform_ranked(self, X):
        """Selected columns in rank order (``transform`` keeps input order)."""
        check_is_fitted(self, "selected_")
        return check_matrix(X)[:, self.selected_]
