"""Single-view RVFL and ELM trained by regularized least squares."""

from dataclasses import dataclass

import numpy as np
from sklearn.base import BaseEstimator, ClassifierMixin
from sklearn.utils.validation import check_is_fitted

from .._validation import check_binary_target, check_matrix
from ..data import decode_scores, one_hot
from .linalg import solve_factorized
from .random_map import RandomFeatureMap, enhance, init_feature_map


@dataclass(frozen=True)
class RvflModel:
    fmap: RandomFeatureMap
    beta: np.ndarray
    c: float
    direct_link: bool = True
    branch: str = "primal"
    condition: float = np.nan

    def __post_init__(self):
        object.__setattr__(self, "beta", np.ascontiguousarray(self.beta, dtype=float))

    def decision_scores(self, X):
        return enhance(X, self.fmap, self.direct_link) @ self.beta

    def predict(self, X):
        return decode_scores(self.decision_scores(X))


def ridge_output_weights(H, Y, c, branch="auto"):
    """Output weights for ``min c/2 ||H B - Y||^2 + 1/2 ||B||^2``.

    ``branch="auto"`` picks the primal system when H has no more columns
    than rows and the dual (Gram) system otherwise. Returns
    ``(B, branch, condition)``.
    """
    if not c > 0:
        raise ValueError("regularization constant c must be positive")
    n, p = H.shape
    if branch == "auto":
        branch = "primal" if p <= n else "dual"
    if branch == "primal":
        A = H.T @ H + np.eye(p) / c
        B, cond = solve_factorized(A, H.T @ Y, "RVFL primal system")
    elif branch == "dual":
        A = H @ H.T + np.eye(n) / c
        alpha, cond = solve_factorized(A, Y, "RVFL dual system")
        B = H.T @ alpha
    else:
        raise ValueError(f"unknown branch {branch!r}")
    return B, branch, cond


def train_rvfl(X, Y, c=1.0, h_l=100, activation="sigmoid", seed=0, direct_link=True, branch="auto"):
    """Fit an RVFL (``direct_link=True``) or ELM (``False``) on a one-hot target."""
    X = check_matrix(X, min_samples=2)
    Y = np.asarray(Y, dtype=float)
    fmap = init_feature_map(X.shape[1], h_l, activation, seed)
    H = enhance(X, fmap, direct_link)
    beta, used, cond = ridge_output_weights(H, Y, c, branch)
    return RvflModel(fmap, beta, float(c), bool(direct_link), used, cond)


class RVFLClassifier(ClassifierMixin, BaseEstimator):
    """Random vector functional link classifier.

    Parameters
    ----------
    c : float, default=1.0
        Weight on the squared training error; larger means less shrinkage.
    h_l : int, default=100
        Number of random hidden nodes.
    activation : {"sigmoid", "relu", "tanh"}, default="sigmoid"
    direct_link : bool, default=True
        Feed the raw inputs to the output layer. ``False`` gives an ELM.
    random_state : int, default=0
    """

    def __init__(self, c=1.0, h_l=100, activation="sigmoid", direct_link=True, random_state=0):
        self.c = c
        self.h_l = h_l
        self.activation = activation
        self.direct_link = direct_link
        self.random_state = random_state

    def fit(self, X, y):
        X = check_matrix(X, min_samples=2)
        self.classes_, pm1 = check_binary_target(y)
        self.model_ = train_rvfl(
            X, one_hot(pm1), self.c, self.h_l, self.activation, self.random_state, self.direct_link
        )
        self.n_features_in_ = X.shape[1]
        return self

    def decision_function(self, X):
        """Class(+1) score minus class(-1) score."""
        s = self.predict_scores(X)
        return s[:, 1] - s[:, 0]

    def predict_scores(self, X):
        check_is_fitted(self, "model_")
        return self.model_.decision_scores(X)

    def predict(self, X):
        pm1 = decode_scores(self.predict_scores(X))
        return self.classes_[(pm1 == 1).astype(int)]


class ELMClassifier(RVFLClassifier):
    """Extreme learning machine: an RVFL without direct input links."""

    def __init__(self, c=1.0, h_l=100, activation="sigmoid", random_state=0):
        super().__init__(c, h_l, activation, False, random_state)

    def fit(self, X, y):
        self.direct_link = False
        return super().fit(X, y)
