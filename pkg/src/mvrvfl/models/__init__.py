from .bounds import BoundReport, bound_report
from .linalg import IllConditionedError, IllConditionedWarning
from .mvrvfl import (
    MvHyper,
    MvRvflModel,
    MvRVFLClassifier,
    assemble_block_system,
    kkt_residuals,
    predict_combined,
    predict_rule,
    predict_view,
    predict_vote,
    relative_kkt_residual,
    train_mvrvfl,
)
from .random_map import RandomFeatureMap, enhance, init_feature_map
from .rvfl import ELMClassifier, RVFLClassifier, RvflModel, train_rvfl
from .serialize import FORMAT_NAME, FORMAT_VERSION, ModelFormatError, dumps, load, loads, save

__all__ = [
    "BoundReport", "bound_report", "IllConditionedError", "IllConditionedWarning",
    "MvHyper", "MvRvflModel", "MvRVFLClassifier", "assemble_block_system",
    "kkt_residuals", "relative_kkt_residual", "predict_combined", "predict_rule",
    "predict_view", "predict_vote", "train_mvrvfl", "RandomFeatureMap", "enhance",
    "init_feature_map", "ELMClassifier", "RVFLClassifier", "RvflModel", "train_rvfl",
    "FORMAT_NAME", "FORMAT_VERSION", "ModelFormatError", "dumps", "load", "loads", "save",
]
