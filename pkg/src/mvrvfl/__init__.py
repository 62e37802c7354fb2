"""Two-view random vector functional link classifier with protein features.

The subpackages are ``features`` (sequence and PSSM descriptors),
``models`` (RVFL, ELM and the coupled two-view model), ``evaluation``
(metrics, grid search, comparison statistics); ``mrmr`` ranks features.
"""

__version__ = "0.1.0"

from .data import LabeledDataset, PCAView, TwoViewDataset, load_two_view, make_folds, make_pca_view
from .models import (
    ELMClassifier,
    MvHyper,
    MvRVFLClassifier,
    RVFLClassifier,
    bound_report,
    predict_rule,
    train_mvrvfl,
)
from .mrmr import MRMRSelector, mrmr_rank, mutual_information, select_fraction

__all__ = [
    "LabeledDataset", "TwoViewDataset", "PCAView", "load_two_view", "make_folds", "make_pca_view",
    "ELMClassifier", "RVFLClassifier", "MvRVFLClassifier", "MvHyper", "train_mvrvfl",
    "predict_rule", "bound_report", "MRMRSelector", "mrmr_rank", "mutual_information",
    "select_fraction",
]
