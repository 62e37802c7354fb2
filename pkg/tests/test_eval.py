import math

import numpy as np
import pytest
from helpers import latent_two_view

from mvrvfl.evaluation import (
    ConfusionCounts,
    GridSpec,
    InsufficientDataError,
    average_ranks,
    confusion,
    friedman,
    friedman_f,
    grid_search,
    metrics,
    nemenyi_cd,
    rank_table,
    roc_auc,
    roc_curve,
    sign_test_threshold,
    win_tie_loss,
)
from mvrvfl.evaluation.search import fold_seed, fold_accuracy
from mvrvfl.data import make_folds
from mvrvfl.models import MvHyper

# ---------------------------------------------------------------- metrics


def test_confusion_examples():
    assert confusion([1, -1], [1, -1]) == ConfusionCounts(1, 0, 0, 1)
    assert confusion([-1] * 4, [1] * 4).fp == 4
    with pytest.raises(ValueError):
        confusion([1, -1], [1])
    with pytest.raises(ValueError):
        confusion([1, 0], [1, 1])


def test_confusion_loop_oracle():
    rng = np.random.default_rng(0)
    t, p = rng.choice([-1, 1], 50), rng.choice([-1, 1], 50)
    tp = fn = fp = tn = 0
    for a, b in zip(t, p):
        if a == 1 and b == 1:
            tp += 1
        elif a == 1:
            fn += 1
        elif b == 1:
            fp += 1
        else:
            tn += 1
    assert confusion(t, p) == ConfusionCounts(tp, fn, fp, tn)


def test_metric_values():
    m = metrics(ConfusionCounts(tp=3, fn=1, fp=2, tn=4))
    assert m["accuracy"].value == 0.7
    assert m["sensitivity"].value == 0.75
    assert abs(m["specificity"].value - 2 / 3) < 1e-15
    assert m["precision"].value == 0.6
    perfect = metrics(ConfusionCounts(5, 0, 0, 5))
    assert all(v.value == 1.0 for v in perfect.values())


def test_undefined_precision_flagged():
    m = metrics(ConfusionCounts(tp=0, fn=3, fp=0, tn=4))
    assert not m["precision"].defined and math.isnan(m["precision"].value)
    assert str(m["precision"]) == "undefined"
    assert m["accuracy"].defined


@pytest.mark.parametrize("seed", range(5))
def test_accuracy_identity(seed):
    rng = np.random.default_rng(seed)
    cm = confusion(rng.choice([-1, 1], 40), rng.choice([-1, 1], 40))
    m = metrics(cm)
    P, Nn = cm.tp + cm.fn, cm.tn + cm.fp
    assert abs(m["accuracy"].value - (m["sensitivity"].value * P + m["specificity"].value * Nn) / cm.n) < 1e-12


# ---------------------------------------------------------------- ROC


def pair_auc(scores, y):
    pos = [s for s, t in zip(scores, y) if t == 1]
    neg = [s for s, t in zip(scores, y) if t == -1]
    total = sum(1.0 if p > q else 0.5 if p == q else 0.0 for p in pos for q in neg)
    return total / (len(pos) * len(neg))


def test_auc_separated_and_antisymmetric():
    y = np.array([1, 1, -1, -1])
    s = np.array([0.9, 0.8, 0.1, 0.2])
    assert roc_auc(s, y) == 1.0
    rng = np.random.default_rng(1)
    s, y = rng.normal(size=30), rng.choice([-1, 1], 30)
    assert abs(roc_auc(s, y) + roc_auc(-s, y) - 1) < 1e-12


@pytest.mark.parametrize("seed", range(5))
def test_auc_pair_oracle_with_ties(seed):
    rng = np.random.default_rng(seed)
    s = rng.integers(0, 5, size=20).astype(float)
    y = rng.choice([-1, 1], 20)
    y[:2] = [1, -1]
    assert abs(roc_auc(s, y) - pair_auc(s, y)) < 1e-12


def test_auc_single_class_rejected():
    with pytest.raises(ValueError):
        roc_auc([0.1, 0.2], [1, 1])


def test_roc_curve_trapezoid_equals_auc():
    rng = np.random.default_rng(3)
    s = rng.integers(0, 6, size=40).astype(float)
    y = rng.choice([-1, 1], 40)
    thr, fpr, tpr = roc_curve(s, y)
    assert thr[0] == np.inf and fpr[-1] == 1.0 and tpr[-1] == 1.0
    assert np.all(np.diff(fpr) >= 0) and np.all(np.diff(tpr) >= 0)
    area = float(np.sum(np.diff(fpr) * (tpr[1:] + tpr[:-1]) / 2))
    assert abs(area - roc_auc(s, y)) < 1e-12


# ---------------------------------------------------------------- ranking statistics


def sort_rank_oracle(row):
    order = sorted(range(len(row)), key=lambda j: -row[j])
    ranks = [0.0] * len(row)
    i = 0
    while i < len(order):
        j = i
        while j + 1 < len(order) and row[order[j + 1]] == row[order[i]]:
            j += 1
        for k in range(i, j + 1):
            ranks[order[k]] = (i + j) / 2 + 1
        i = j + 1
    return ranks


def test_rank_examples():
    np.testing.assert_array_equal(average_ranks([[0.9, 0.8, 0.7]]), [1, 2, 3])
    np.testing.assert_array_equal(average_ranks([[0.9, 0.9, 0.7]]), [1.5, 1.5, 3])


def test_rank_sort_oracle():
    rng = np.random.default_rng(4)
    A = rng.integers(0, 4, size=(6, 4)) / 4
    table = rank_table(A)
    for i in range(6):
        assert table.ranks[i].tolist() == sort_rank_oracle(A[i].tolist())
        assert abs(table.ranks[i].sum() - 10) <= 1e-9
    np.testing.assert_allclose(average_ranks(A), np.array([sort_rank_oracle(r) for r in A.tolist()]).mean(axis=0))


def test_friedman_published_constants():
    assert abs(friedman_f(100.983, 27, 9) - 22.8276) <= 0.01
    assert abs(nemenyi_cd(3.102, 9, 27) - 2.3120) <= 0.0005
    assert abs(sign_test_threshold(27) - 18.59) <= 0.01


def test_friedman_formula_oracle():
    rng = np.random.default_rng(5)
    A = rng.uniform(size=(5, 3))
    N, q = A.shape
    R = np.array([sort_rank_oracle(r) for r in A.tolist()]).mean(axis=0)
    chi2 = 12 * N / (q * (q + 1)) * (sum(r * r for r in R) - q * (q + 1) ** 2 / 4)
    res = friedman(rank_table(A))
    assert abs(res.chi2_f - chi2) < 1e-12
    assert abs(res.f_f - (N - 1) * chi2 / (N * (q - 1) - chi2)) < 1e-12
    assert res.dof == (2, 8)


def test_friedman_all_tied_and_permutation_invariance():
    assert friedman(rank_table(np.full((4, 3), 0.5))).chi2_f == 0.0
    rng = np.random.default_rng(6)
    A = rng.uniform(size=(7, 5))
    assert abs(friedman(A).chi2_f - friedman(A[:, [3, 0, 4, 1, 2]]).chi2_f) < 1e-12


def test_friedman_degenerate_cases():
    with pytest.raises(InsufficientDataError):
        friedman(np.array([[0.9, 0.8, 0.7]]))
    # every dataset ranks the models identically: N(q-1) == chi2
    A = np.tile([0.9, 0.8], (3, 1))
    res = friedman(A)
    assert math.isnan(res.f_f) and res.flag


def test_nemenyi_scaling():
    assert nemenyi_cd(0.0, 9, 27) == 0.0
    assert abs(nemenyi_cd(2.5, 5, 10) / nemenyi_cd(2.5, 5, 20) - math.sqrt(2)) < 1e-12


def test_win_tie_loss_counts():
    w = win_tie_loss([0.9, 0.8, 0.5, 0.4, 0.7], [0.8, 0.7, 0.5, 0.6, 0.8])
    assert (w.wins, w.ties, w.losses) == (2, 1, 2)
    same = win_tie_loss(np.ones(27), np.ones(27))
    assert same.ties == 27 and abs(same.significance_threshold - 18.59) <= 0.01
    assert same.adjusted_wins == 13
    with pytest.raises(ValueError):
        win_tie_loss([1.0], [1.0, 2.0])


# ---------------------------------------------------------------- grid search


def test_grid_defaults():
    g = GridSpec()
    assert g.c1_grid[0] == 1e-5 and g.c1_grid[-1] == 1e5 and len(g.c1_grid) == 11
    assert g.h_l_grid == tuple(range(3, 204, 20))
    with pytest.raises(ValueError):
        GridSpec(c1_grid=())


def tiny_grid(**kw):
    base = dict(c1_grid=(1.0,), c2_grid=(1.0,), theta_grid=(1.0,), rho_grid=(1.0,), h_l_grid=(8,))
    base.update(kw)
    return GridSpec(**base)


def test_single_cell_grid():
    ds = latent_two_view(40, seed=0)
    best, rows = grid_search(ds, tiny_grid(), k=4, seed=2)
    assert best == MvHyper(1.0, 1.0, 1.0, 1.0, 8) and len(rows) == 1


def test_duplicate_cells_first_wins():
    ds = latent_two_view(40, seed=1)
    best, rows = grid_search(ds, tiny_grid(rho_grid=(0.5, 0.5)), k=4, seed=0)
    assert rows[0].hyper == rows[1].hyper
    assert best is rows[0].hyper


def test_two_by_two_matches_manual_sweep():
    ds = latent_two_view(45, seed=2, noise=0.8)
    grid = tiny_grid(c1_grid=(0.1, 10.0), rho_grid=(0.01, 1.0))
    best, rows = grid_search(ds, grid, k=3, seed=5)
    plan = make_folds(ds.n_samples, 3, 5)
    manual = []
    for cell, hyper in enumerate(grid.cells()):
        accs = [fold_accuracy(ds, tr, te, hyper, "sigmoid", fold_seed(5, f), "combined")
                for f, (tr, te) in enumerate(plan.folds())]
        manual.append((np.mean(accs), -cell, hyper))
        assert rows[cell].fold_accuracies == accs
    assert best == max(manual, key=lambda t: t[:2])[2]


def test_grid_search_deterministic_and_failures_excluded():
    ds = latent_two_view(40, seed=3)
    grid = tiny_grid(h_l_grid=(4, 8))
    a = grid_search(ds, grid, k=4, seed=9)
    b = grid_search(ds, grid, k=4, seed=9)
    assert a[0] == b[0]
    assert [r.fold_accuracies for r in a[1]] == [r.fold_accuracies for r in b[1]]
    # a vote-selected sweep runs on the same folds
    best, rows = grid_search(ds, grid, k=4, seed=9, selection="vote")
    assert len(rows) == 2
    with pytest.raises(ValueError):
        grid_search(ds, grid, selection="mean")


def test_failed_cell_is_skipped(monkeypatch):
    import mvrvfl.evaluation.search as search

    real = search.fold_accuracy

    def flaky(ds, tr, te, hyper, *args):
        if hyper.h_l == 4:
            raise np.linalg.LinAlgError("forced")
        return real(ds, tr, te, hyper, *args)

    monkeypatch.setattr(search, "fold_accuracy", flaky)
    ds = latent_two_view(40, seed=4)
    best, rows = grid_search(ds, tiny_grid(h_l_grid=(4, 8)), k=4)
    assert rows[0].failed and math.isnan(rows[0].mean_accuracy)
    assert best.h_l == 8
