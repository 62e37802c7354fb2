"""Binary confusion counts, threshold metrics and ROC analysis.

The positive class is +1 throughout.
"""

import math
from dataclasses import dataclass

import numpy as np
from scipy.stats import rankdata

from .._validation import check_pm1_labels


@dataclass(frozen=True)
class ConfusionCounts:
    tp: int
    fn: int
    fp: int
    tn: int

    def __post_init__(self):
        for name in ("tp", "fn", "fp", "tn"):
            if getattr(self, name) < 0:
                raise ValueError(f"{name} must be non-negative")

    @property
    def n(self):
        return self.tp + self.fn + self.fp + self.tn


@dataclass(frozen=True)
class Metric:
    """A ratio that is NaN with ``defined=False`` when its denominator is zero."""

    value: float
    defined: bool = True

    def __float__(self):
        return self.value

    def __str__(self):
        return repr(self.value) if self.defined else "undefined"


def _ratio(num, den):
    if den == 0:
        return Metric(math.nan, False)
    return Metric(num / den)


def confusion(y_true, y_pred):
    y_true = check_pm1_labels(y_true, "y_true")
    y_pred = check_pm1_labels(y_pred, "y_pred")
    if y_true.shape != y_pred.shape:
        raise ValueError(f"y_true has {y_true.size} entries, y_pred has {y_pred.size}")
    if y_true.size == 0:
        raise ValueError("need at least one prediction")
    pos, hit = y_true == 1, y_pred == 1
    return ConfusionCounts(
        tp=int(np.sum(pos & hit)),
        fn=int(np.sum(pos & ~hit)),
        fp=int(np.sum(~pos & hit)),
        tn=int(np.sum(~pos & ~hit)),
    )


def metrics(cm):
    """accuracy, sensitivity, specificity and precision as ``Metric`` values."""
    return {
        "accuracy": _ratio(cm.tp + cm.tn, cm.n),
        "sensitivity": _ratio(cm.tp, cm.tp + cm.fn),
        "specificity": _ratio(cm.tn, cm.tn + cm.fp),
        "precision": _ratio(cm.tp, cm.tp + cm.fp),
    }


def _check_scored(scores, y_true):
    scores = np.asarray(scores, dtype=float)
    y = check_pm1_labels(y_true, "y_true")
    if scores.ndim != 1 or scores.shape != y.shape:
        raise ValueError("scores must be a vector matching y_true")
    if not np.all(np.isfinite(scores)):
        raise ValueError("scores contain non-finite values")
    if np.all(y == 1) or np.all(y == -1):
        raise ValueError("ROC analysis needs both classes in y_true")
    return scores, y


def roc_auc(scores, y_true):
    """Area under the ROC curve via the Mann-Whitney rank-sum (ties count 1/2)."""
    scores, y = _check_scored(scores, y_true)
    ranks = rankdata(scores)
    n_pos = int(np.sum(y == 1))
    n_neg = y.size - n_pos
    u = ranks[y == 1].sum() - n_pos * (n_pos + 1) / 2
    return float(u / (n_pos * n_neg))


def roc_curve(scores, y_true):
    """ROC points ``(threshold, fpr, tpr)`` for "predict +1 when score >= threshold".

    The first point has threshold ``+inf`` (nothing predicted positive);
    tied scores produce a single point.
    """
    scores, y = _check_scored(scores, y_true)
    order = np.argsort(-scores, kind="stable")
    s, pos = scores[order], (y[order] == 1)
    tps, fps = np.cumsum(pos), np.cumsum(~pos)
    last = np.r_[np.flatnonzero(np.diff(s) != 0), s.size - 1]
    thresholds = np.r_[np.inf, s[last]]
    tpr = np.r_[0.0, tps[last] / tps[-1]]
    fpr = np.r_[0.0, fps[last] / fps[-1]]
    return thresholds, fpr, tpr
