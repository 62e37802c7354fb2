"""Multi-dataset comparison: average ranks, Friedman, Nemenyi and sign tests."""

import math
from dataclasses import dataclass

import numpy as np
from scipy.stats import rankdata

DEFAULT_TIE_TOL = 1e-12

# two-tailed Nemenyi q_alpha at alpha = 0.05 (studentized range / sqrt 2), q = 2..10
Q_ALPHA_05 = {2: 1.960, 3: 2.343, 4: 2.569, 5: 2.728, 6: 2.850, 7: 2.949, 8: 3.031, 9: 3.102, 10: 3.164}


class InsufficientDataError(ValueError):
    pass


@dataclass(frozen=True)
class RankTable:
    accuracies: np.ndarray
    ranks: np.ndarray

    @property
    def n_datasets(self):
        return self.accuracies.shape[0]

    @property
    def n_models(self):
        return self.accuracies.shape[1]

    @property
    def average(self):
        return self.ranks.mean(axis=0)


def _table(accuracies):
    A = np.asarray(accuracies, dtype=float)
    if A.ndim == 1:
        A = A[None, :]
    if A.ndim != 2 or A.shape[0] < 1 or A.shape[1] < 1:
        raise ValueError(f"accuracy table must be 2-d and non-empty, got shape {A.shape}")
    if not np.all(np.isfinite(A)):
        raise ValueError("accuracy table contains non-finite entries")
    return A


def rank_table(accuracies):
    """Rank each row, 1 = highest accuracy; tied entries share the mean rank."""
    A = _table(accuracies)
    return RankTable(A, rankdata(-A, method="average", axis=1))


def average_ranks(accuracies):
    return rank_table(accuracies).average


@dataclass(frozen=True)
class FriedmanResult:
    chi2_f: float
    f_f: float
    dof: tuple
    flag: str = ""


def friedman_f(chi2_f, n_datasets, n_models):
    """Iman-Davenport F statistic; NaN when its denominator vanishes."""
    den = n_datasets * (n_models - 1) - chi2_f
    if den == 0:
        return math.nan
    return (n_datasets - 1) * chi2_f / den


def friedman_from_ranks(avg_ranks, n_datasets):
    R = np.asarray(avg_ranks, dtype=float)
    N, q = int(n_datasets), R.size
    if N < 2 or q < 2:
        raise InsufficientDataError(f"Friedman test needs at least 2 datasets and 2 models (got N={N}, q={q})")
    chi2 = 12.0 * N / (q * (q + 1)) * (np.sum(R**2) - q * (q + 1) ** 2 / 4.0)
    f = friedman_f(chi2, N, q)
    flag = "" if np.isfinite(f) else "F_F undefined: N(q-1) equals chi2_F"
    return FriedmanResult(float(chi2), float(f), (q - 1, (N - 1) * (q - 1)), flag)


def friedman(table):
    """Friedman chi-square and its F form from a ``RankTable``."""
    if not isinstance(table, RankTable):
        table = rank_table(table)
    return friedman_from_ranks(table.average, table.n_datasets)


def nemenyi_cd(q_alpha, q, N):
    """Critical difference ``q_alpha * sqrt(q (q + 1) / (6 N))``."""
    if q_alpha < 0 or q < 1 or N < 1:
        raise ValueError("q_alpha must be non-negative and q, N positive")
    return q_alpha * math.sqrt(q * (q + 1) / (6.0 * N))


@dataclass(frozen=True)
class WinTieLoss:
    wins: int
    ties: int
    losses: int
    significance_threshold: float

    @property
    def adjusted_wins(self):
        """Wins plus half the ties; with an odd tie count one tie is dropped first."""
        return self.wins + self.ties // 2

    @property
    def significant(self):
        return self.adjusted_wins >= self.significance_threshold


def sign_test_threshold(N):
    return N / 2.0 + 1.96 * math.sqrt(N) / 2.0


def win_tie_loss(acc_a, acc_b, tie_tol=DEFAULT_TIE_TOL):
    a = np.asarray(acc_a, dtype=float)
    b = np.asarray(acc_b, dtype=float)
    if a.shape != b.shape or a.ndim != 1:
        raise ValueError("accuracy vectors must be 1-d and of equal length")
    d = a - b
    ties = int(np.sum(np.abs(d) <= tie_tol))
    wins = int(np.sum(d > tie_tol))
    return WinTieLoss(wins, ties, a.size - wins - ties, sign_test_threshold(a.size))
