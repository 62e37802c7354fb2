"""Exhaustive k-fold grid search over the two-view hyperparameters."""

import itertools
import logging
from dataclasses import dataclass, field

import numpy as np

from ..data import make_folds
from ..models.mvrvfl import MvHyper, predict_combined, predict_vote, train_mvrvfl

log = logging.getLogger(__name__)

POWERS = tuple(10.0**p for p in range(-5, 6))
HIDDEN = tuple(range(3, 204, 20))
SELECTION_RULES = ("combined", "vote")


@dataclass(frozen=True)
class GridSpec:
    c1_grid: tuple = POWERS
    c2_grid: tuple = POWERS
    theta_grid: tuple = POWERS
    rho_grid: tuple = POWERS
    h_l_grid: tuple = HIDDEN

    def __post_init__(self):
        for name in ("c1_grid", "c2_grid", "theta_grid", "rho_grid", "h_l_grid"):
            values = tuple(getattr(self, name))
            if not values:
                raise ValueError(f"{name} must not be empty")
            object.__setattr__(self, name, values)

    def cells(self):
        """Hyperparameters in grid order (c1 slowest, h_l fastest)."""
        for c1, c2, th, rho, h in itertools.product(
            self.c1_grid, self.c2_grid, self.theta_grid, self.rho_grid, self.h_l_grid
        ):
            yield MvHyper(c1, c2, th, rho, h)

    def __len__(self):
        return (len(self.c1_grid) * len(self.c2_grid) * len(self.theta_grid)
                * len(self.rho_grid) * len(self.h_l_grid))


@dataclass
class CvRow:
    cell: int
    hyper: MvHyper
    fold_accuracies: list = field(default_factory=list)
    error: str = ""

    @property
    def failed(self):
        return bool(self.error)

    @property
    def mean_accuracy(self):
        return float(np.mean(self.fold_accuracies)) if not self.failed else float("nan")


def fold_seed(seed, fold):
    """Feature-map seed for one fold.

    It does not depend on the cell, so every cell is scored on the same
    random maps (common random numbers) and duplicated cells tie exactly.
    """
    return int(np.random.SeedSequence([seed, fold]).generate_state(1)[0])


def fold_accuracy(ds, train_idx, test_idx, hyper, activation, seed, selection):
    model = train_mvrvfl(ds.subset(train_idx), hyper=hyper, activation=activation, seed=seed)
    test = ds.subset(test_idx)
    if selection == "vote":
        pred = predict_vote(model, test.view_a, test.view_b)
    else:
        pred, _ = predict_combined(model, test.view_a, test.view_b)
    return float(np.mean(pred == test.labels))


def grid_search(ds, grid=None, k=5, seed=0, selection="combined", activation="sigmoid"):
    """Mean k-fold validation accuracy for every cell; returns ``(best, rows)``.

    Every cell sees the same folds and the same per-fold random maps. A cell whose training raises is kept
    in the table with its error and excluded from selection. Ties go to
    the earliest cell in grid order.
    """
    if selection not in SELECTION_RULES:
        raise ValueError(f"selection must be one of {SELECTION_RULES}")
    grid = grid if grid is not None else GridSpec()
    plan = make_folds(ds.n_samples, k, seed)
    rows = []
    for cell, hyper in enumerate(grid.cells()):
        row = CvRow(cell, hyper)
        try:
            for f, (tr, te) in enumerate(plan.folds()):
                row.fold_accuracies.append(
                    fold_accuracy(ds, tr, te, hyper, activation, fold_seed(seed, f), selection)
                )
        except (np.linalg.LinAlgError, ValueError) as exc:
            row.error = str(exc) or type(exc).__name__
            row.fold_accuracies = []
            log.warning("grid cell %d %s failed: %s", cell, hyper.as_tuple(), row.error)
        rows.append(row)
    ok = [r for r in rows if not r.failed]
    if not ok:
        raise RuntimeError("every grid cell failed to train")
    best = max(ok, key=lambda r: (r.mean_accuracy, -r.cell))
    return best.hyper, rows
