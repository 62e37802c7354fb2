"""Plain-text outputs shared by the command line and library callers.

Every CSV is UTF-8 with a header row; floats are written with ``repr``
so they read back bit-exactly.
"""

import csv
import json
import math
from pathlib import Path

import numpy as np

from .evaluation.metrics import confusion, metrics, roc_auc, roc_curve
from .evaluation.stats import (
    Q_ALPHA_05,
    InsufficientDataError,
    friedman,
    nemenyi_cd,
    rank_table,
    win_tie_loss,
)


def fmt(v):
    if isinstance(v, (int, np.integer)):
        return str(int(v))
    return repr(float(v))


def write_csv(path, header, rows):
    with open(path, "w", newline="", encoding="utf-8") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(header)
        for r in rows:
            w.writerow([c if isinstance(c, str) else fmt(c) for c in r])


def write_json(path, doc):
    Path(path).write_text(json.dumps(doc, indent=1, allow_nan=False) + "\n", encoding="utf-8")


def _clean(v):
    """NaN / inf are not JSON; report them as null."""
    return v if isinstance(v, (int, str)) or math.isfinite(v) else None


def write_predictions(path, ids, labels, scores=None):
    if scores is None:
        write_csv(path, ["id", "label"], zip(ids, labels))
    else:
        rows = ([i, lab, s[0], s[1]] for i, lab, s in zip(ids, labels, scores))
        write_csv(path, ["id", "label", "score_neg", "score_pos"], rows)


def write_ranking(path, ranking, names):
    rows = ([t + 1, int(j), names[j], s] for t, (j, s) in enumerate(zip(ranking.order, ranking.scores)))
    write_csv(path, ["rank", "feature_index", "feature_name", "objective"], rows)


def evaluation_rows(y_true, y_pred, scores=None):
    """``(metric, value, defined)`` rows; AUC added when scores are given."""
    cm = confusion(y_true, y_pred)
    rows = [[k, v] for k, v in (("tp", cm.tp), ("fn", cm.fn), ("fp", cm.fp), ("tn", cm.tn))]
    rows = [r + ["true"] for r in rows]
    for name, m in metrics(cm).items():
        rows.append([name, m.value, "true" if m.defined else "false"])
    if scores is not None:
        try:
            rows.append(["auc", roc_auc(scores, y_true), "true"])
        except ValueError:
            rows.append(["auc", math.nan, "false"])
    return rows


def write_metrics(path, rows):
    write_csv(path, ["metric", "value", "defined"], rows)


def write_roc(path, scores, y_true):
    thr, fpr, tpr = roc_curve(scores, y_true)
    write_csv(path, ["threshold", "fpr", "tpr"], zip(thr, fpr, tpr))


def comparison_summary(accuracies, names, q_alpha=None, tie_tol=1e-12):
    """Average ranks, Friedman, Nemenyi CD and pairwise win-tie-loss as a dict."""
    table = rank_table(accuracies)
    N, q = table.n_datasets, table.n_models
    if len(names) != q:
        raise ValueError(f"{len(names)} model names for {q} columns")
    if q_alpha is None:
        q_alpha = Q_ALPHA_05.get(q)
    doc = {
        "n_datasets": N,
        "n_models": q,
        "average_ranks": dict(zip(names, table.average.tolist())),
    }
    try:
        fr = friedman(table)
        doc["friedman"] = {"chi2_f": fr.chi2_f, "f_f": _clean(fr.f_f), "dof": list(fr.dof), "flag": fr.flag}
    except InsufficientDataError as exc:
        doc["friedman"] = {"chi2_f": None, "f_f": None, "dof": None, "flag": f"insufficient N: {exc}"}
    doc["q_alpha"] = q_alpha
    doc["critical_difference"] = nemenyi_cd(q_alpha, q, N) if q_alpha is not None else None
    pairs = []
    A = table.accuracies
    for i in range(q):
        for j in range(q):
            if i == j:
                continue
            w = win_tie_loss(A[:, i], A[:, j], tie_tol)
            pairs.append({
                "model": names[i], "versus": names[j], "wins": w.wins, "ties": w.ties,
                "losses": w.losses, "threshold": w.significance_threshold,
                "significant": bool(w.significant),
            })
    doc["win_tie_loss"] = pairs
    return doc
