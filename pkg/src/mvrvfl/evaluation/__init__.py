from .metrics import ConfusionCounts, Metric, confusion, metrics, roc_auc, roc_curve
from .search import CvRow, GridSpec, fold_seed, grid_search
from .stats import (
    Q_ALPHA_05,
    FriedmanResult,
    InsufficientDataError,
    RankTable,
    WinTieLoss,
    average_ranks,
    friedman,
    friedman_f,
    friedman_from_ranks,
    nemenyi_cd,
    rank_table,
    sign_test_threshold,
    win_tie_loss,
)

__all__ = [
    "ConfusionCounts",
    "Metric",
    "confusion",
    "metrics",
    "roc_auc",
    "roc_curve",
    "CvRow",
    "GridSpec",
    "fold_seed",
    "grid_search",
    "Q_ALPHA_05",
    "FriedmanResult",
    "InsufficientDataError",
    "RankTable",
    "WinTieLoss",
    "average_ranks",
    "friedman",
    "friedman_f",
    "friedman_from_ranks",
    "nemenyi_cd",
    "rank_table",
    "sign_test_threshold",
    "win_tie_loss",
]
