"""Two-view RVFL with coupled per-view errors.

Training minimizes

    1/2 ||b1||^2 + theta/2 ||b2||^2 + c1/2 ||e1||^2 + c2/2 ||e2||^2 + rho e1'e2
    with e1 = Z1 b1 - Y, e2 = Z2 b2 - Y

whose stationarity conditions form one symmetric linear system in the
stacked output weights (b1; b2).
"""

from dataclasses import asdict, dataclass

import numpy as np
from sklearn.base import BaseEstimator, ClassifierMixin
from sklearn.utils.validation import check_is_fitted

from .._validation import check_binary_target, check_views, check_width
from ..data import TwoViewDataset, decode_scores, one_hot
from .linalg import solve_factorized
from .random_map import RandomFeatureMap, enhance, init_feature_map

RULES = ("view_a", "view_b", "combined", "vote")


@dataclass(frozen=True)
class MvHyper:
    c1: float = 1.0
    c2: float = 1.0
    theta: float = 1.0
    rho: float = 1.0
    h_l: int = 100

    def __post_init__(self):
        for name in ("c1", "c2", "theta"):
            if not getattr(self, name) > 0:
                raise ValueError(f"{name} must be positive, got {getattr(self, name)}")
        if not np.isfinite(self.rho):
            raise ValueError("rho must be finite")
        if int(self.h_l) != self.h_l or self.h_l < 1:
            raise ValueError(f"h_l must be a positive integer, got {self.h_l}")
        object.__setattr__(self, "h_l", int(self.h_l))

    def as_dict(self):
        return asdict(self)

    def as_tuple(self):
        return (self.c1, self.c2, self.theta, self.rho, self.h_l)


@dataclass(frozen=True)
class MvRvflModel:
    map_a: RandomFeatureMap
    map_b: RandomFeatureMap
    beta1: np.ndarray
    beta2: np.ndarray
    hyper: MvHyper
    condition: float = np.nan

    def __post_init__(self):
        for name in ("beta1", "beta2"):
            object.__setattr__(self, name, np.ascontiguousarray(getattr(self, name), dtype=float))

    def scores_a(self, Xa):
        return enhance(Xa, self.map_a, True, "A") @ self.beta1

    def scores_b(self, Xb):
        return enhance(Xb, self.map_b, True, "B") @ self.beta2


def assemble_block_system(Z1, Z2, Y, hyper):
    """Return the stacked matrix and right-hand side of the stationarity system."""
    c1, c2, theta, rho = hyper.c1, hyper.c2, hyper.theta, hyper.rho
    p1, p2 = Z1.shape[1], Z2.shape[1]
    cross = rho * (Z1.T @ Z2)
    A = np.empty((p1 + p2, p1 + p2))
    A[:p1, :p1] = c1 * (Z1.T @ Z1)
    A[:p1, :p1][np.diag_indices(p1)] += 1.0
    A[p1:, p1:] = c2 * (Z2.T @ Z2)
    A[p1:, p1:][np.diag_indices(p2)] += theta
    A[:p1, p1:] = cross
    A[p1:, :p1] = cross.T
    rhs = np.vstack([(c1 + rho) * (Z1.T @ Y), (c2 + rho) * (Z2.T @ Y)])
    return A, rhs


def kkt_residuals(Z1, Z2, Y, beta1, beta2, hyper):
    """Norms of the two stationarity residuals and of their right-hand sides."""
    c1, c2, theta, rho = hyper.c1, hyper.c2, hyper.theta, hyper.rho
    rhs1 = (c1 + rho) * (Z1.T @ Y)
    rhs2 = (c2 + rho) * (Z2.T @ Y)
    r1 = beta1 + c1 * (Z1.T @ (Z1 @ beta1)) + rho * (Z1.T @ (Z2 @ beta2)) - rhs1
    r2 = rho * (Z2.T @ (Z1 @ beta1)) + theta * beta2 + c2 * (Z2.T @ (Z2 @ beta2)) - rhs2
    return {
        "view_a": float(np.linalg.norm(r1)),
        "view_b": float(np.linalg.norm(r2)),
        "rhs_a": float(np.linalg.norm(rhs1)),
        "rhs_b": float(np.linalg.norm(rhs2)),
    }


def relative_kkt_residual(Z1, Z2, Y, beta1, beta2, hyper):
    """Worst residual scaled by ``1 + ||rhs||``."""
    r = kkt_residuals(Z1, Z2, Y, beta1, beta2, hyper)
    return max(r["view_a"] / (1 + r["rhs_a"]), r["view_b"] / (1 + r["rhs_b"]))


def enhanced_views(model, Xa, Xb):
    return enhance(Xa, model.map_a, True, "A"), enhance(Xb, model.map_b, True, "B")


def train_mvrvfl(ds, Y=None, hyper=None, activation="sigmoid", seed=0):
    """Fit both views jointly.

    The view maps are drawn with seeds ``seed`` and ``seed + 1``.
    ``Y`` defaults to the one-hot encoding of ``ds.labels``.
    """
    hyper = hyper if hyper is not None else MvHyper()
    if Y is None:
        Y = one_hot(ds.labels)
    Y = np.asarray(Y, dtype=float)
    Xa, Xb = ds.view_a, ds.view_b
    map_a = init_feature_map(Xa.shape[1], hyper.h_l, activation, seed)
    map_b = init_feature_map(Xb.shape[1], hyper.h_l, activation, seed + 1)
    Z1 = enhance(Xa, map_a, True, "A")
    Z2 = enhance(Xb, map_b, True, "B")
    A, rhs = assemble_block_system(Z1, Z2, Y, hyper)
    beta, cond = solve_factorized(A, rhs, "coupled two-view system")
    p1 = Z1.shape[1]
    return MvRvflModel(map_a, map_b, beta[:p1], beta[p1:], hyper, cond)


def predict_view(model, X, view="A"):
    """Single-view labels and scores."""
    view = view.upper()
    if view == "A":
        scores = model.scores_a(X)
    elif view == "B":
        scores = model.scores_b(X)
    else:
        raise ValueError(f"view must be 'A' or 'B', got {view!r}")
    return decode_scores(scores), scores


def combined_scores(model, Xa, Xb):
    Sa = model.scores_a(Xa)
    Sb = model.scores_b(Xb)
    if Sa.shape[0] != Sb.shape[0]:
        raise ValueError(f"view A has {Sa.shape[0]} rows, view B has {Sb.shape[0]}")
    return 0.5 * (Sa + Sb), Sa, Sb


def predict_combined(model, Xa, Xb):
    """Average the two views' scores and take the argmax."""
    scores, _, _ = combined_scores(model, Xa, Xb)
    return decode_scores(scores), scores


def predict_vote(model, Xa, Xb):
    """Majority of view A, view B and the combined predictor."""
    scores, Sa, Sb = combined_scores(model, Xa, Xb)
    votes = decode_scores(Sa) + decode_scores(Sb) + decode_scores(scores)
    return np.where(votes > 0, 1, -1).astype(np.int64)


def predict_rule(model, Xa, Xb, rule="combined"):
    """Labels and scores under a named rule; vote returns ``scores=None``."""
    if rule == "view_a":
        return predict_view(model, Xa, "A")
    if rule == "view_b":
        return predict_view(model, Xb, "B")
    if rule == "combined":
        return predict_combined(model, Xa, Xb)
    if rule == "vote":
        return predict_vote(model, Xa, Xb), None
    raise ValueError(f"unknown rule {rule!r}; choose from {RULES}")


class MvRVFLClassifier(ClassifierMixin, BaseEstimator):
    """Two-view RVFL classifier.

    ``X`` arguments are a pair ``[X_a, X_b]`` of row-aligned views.

    Parameters
    ----------
    c1, c2 : float, default=1.0
        Error weights for view A and view B.
    theta : float, default=1.0
        Weight-norm penalty on view B relative to view A.
    rho : float, default=1.0
        Coupling weight on the product of the two views' errors.
    h_l : int, default=100
        Hidden nodes per view.
    activation : {"sigmoid", "relu", "tanh"}, default="sigmoid"
    rule : {"combined", "vote", "view_a", "view_b"}, default="combined"
        Decision rule used by :meth:`predict`.
    random_state : int, default=0
    """

    def __init__(self, c1=1.0, c2=1.0, theta=1.0, rho=1.0, h_l=100,
                 activation="sigmoid", rule="combined", random_state=0):
        self.c1 = c1
        self.c2 = c2
        self.theta = theta
        self.rho = rho
        self.h_l = h_l
        self.activation = activation
        self.rule = rule
        self.random_state = random_state

    @property
    def hyper(self):
        return MvHyper(self.c1, self.c2, self.theta, self.rho, self.h_l)

    def fit(self, Xs, y):
        Xa, Xb = check_views(Xs)
        self.classes_, pm1 = check_binary_target(y)
        ds = TwoViewDataset(Xa, Xb, pm1)
        self.model_ = train_mvrvfl(ds, None, self.hyper, self.activation, self.random_state)
        self.n_features_in_ = (Xa.shape[1], Xb.shape[1])
        return self

    def _views(self, Xs):
        check_is_fitted(self, "model_")
        Xa, Xb = check_views(Xs)
        check_width(Xa, self.model_.map_a.n_inputs, "A")
        check_width(Xb, self.model_.map_b.n_inputs, "B")
        return Xa, Xb

    def predict_scores(self, Xs, rule=None):
        Xa, Xb = self._views(Xs)
        _, scores = predict_rule(self.model_, Xa, Xb, rule or self.rule)
        return scores

    def decision_function(self, Xs):
        """Combined class(+1) score minus class(-1) score."""
        Xa, Xb = self._views(Xs)
        _, s = predict_combined(self.model_, Xa, Xb)
        return s[:, 1] - s[:, 0]

    def predict(self, Xs, rule=None):
        Xa, Xb = self._views(Xs)
        pm1, _ = predict_rule(self.model_, Xa, Xb, rule or self.rule)
        return self.classes_[(pm1 == 1).astype(int)]
