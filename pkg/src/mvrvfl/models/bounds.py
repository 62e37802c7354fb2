"""Rademacher-style consistency and generalization bounds as diagnostics.

Both bounds hold with probability at least ``1 - confidence_theta`` over
the training sample. Quantities are evaluated on the training data the
model was fit on.

Consistency (per one-hot output column c, with N_c the norm of the
stacked column weights and K the largest per-sample enhanced norm)::

    2 N_c + 3 N_c K sqrt(ln(2/t) / 2n) + (4 N_c / n) sqrt(sum_i |Z1_i|^2 + |Z2_i|^2)

Generalization, on the +-1 form of the model (column 1 minus column 0,
which is exactly the solution for a +-1 target since the solve is linear
in Y) with hinge slacks xi = max(0, 1 - y g)::

    sum_i (xi1_i + d xi2_i) / (n (1 + d)) + 3 sqrt(ln(2/t) / 2n)
        + 4 N / (n (1 + d)) sqrt(sum_i |Z1_i|^2 + d^2 |Z2_i|^2)
"""

from dataclasses import dataclass

import numpy as np

from ..data import one_hot
from .mvrvfl import enhanced_views


@dataclass(frozen=True)
class BoundReport:
    n_samples: int
    column_norms: np.ndarray
    empirical_consistency: np.ndarray
    consistency_bound: np.ndarray
    kappa_m: float
    confidence_term: float
    pm_norm: float
    empirical_slacks: tuple
    generalization_bound: float
    delta: float
    confidence_theta: float

    @property
    def n_norm(self):
        """Headline weight norm: the larger of the two column norms."""
        return float(self.column_norms.max())

    @property
    def consistency_bound_max(self):
        return float(self.consistency_bound.max())

    @property
    def empirical_consistency_max(self):
        return float(self.empirical_consistency.max())

    def as_dict(self):
        return {
            "n_samples": self.n_samples,
            "n_norm": self.n_norm,
            "column_norms": self.column_norms.tolist(),
            "empirical_consistency": self.empirical_consistency.tolist(),
            "consistency_bound": self.consistency_bound.tolist(),
            "kappa_m": self.kappa_m,
            "confidence_term": self.confidence_term,
            "pm_norm": self.pm_norm,
            "empirical_slacks": list(self.empirical_slacks),
            "generalization_bound": self.generalization_bound,
            "delta": self.delta,
            "confidence_theta": self.confidence_theta,
        }


def confidence_term(n, confidence_theta):
    return float(np.sqrt(np.log(2.0 / confidence_theta) / (2.0 * n)))


def bound_report(model, ds, Y=None, delta=1.0, confidence_theta=0.05):
    if model is None or getattr(model, "beta1", None) is None:
        raise ValueError("bound_report needs a trained model")
    if not 0 < confidence_theta < 1:
        raise ValueError("confidence_theta must lie in (0, 1)")
    if not delta > 0:
        raise ValueError("delta must be positive")
    if Y is None:
        Y = one_hot(ds.labels)
    Y = np.asarray(Y, dtype=float)
    y = np.where(Y[:, 1] > Y[:, 0], 1.0, -1.0)
    Z1, Z2 = enhanced_views(model, ds.view_a, ds.view_b)
    b1, b2 = model.beta1, model.beta2
    n = Z1.shape[0]

    sq1 = np.einsum("ij,ij->i", Z1, Z1)
    sq2 = np.einsum("ij,ij->i", Z2, Z2)
    kappa = float(np.sqrt((sq1 + sq2).max()))
    conf = confidence_term(n, confidence_theta)

    col_norms = np.sqrt((b1**2).sum(axis=0) + (b2**2).sum(axis=0))
    emp = np.abs(Z1 @ b1 - Z2 @ b2).mean(axis=0)
    cons = (
        2.0 * col_norms
        + 3.0 * col_norms * kappa * conf
        + 4.0 * col_norms / n * np.sqrt((sq1 + sq2).sum())
    )

    w1 = b1[:, 1] - b1[:, 0]
    w2 = b2[:, 1] - b2[:, 0]
    pm_norm = float(np.sqrt(w1 @ w1 + w2 @ w2))
    xi1 = np.maximum(0.0, 1.0 - y * (Z1 @ w1))
    xi2 = np.maximum(0.0, 1.0 - y * (Z2 @ w2))
    gen = (
        (xi1 + delta * xi2).sum() / (n * (1.0 + delta))
        + 3.0 * conf
        + 4.0 * pm_norm / (n * (1.0 + delta)) * np.sqrt((sq1 + delta**2 * sq2).sum())
    )
    return BoundReport(
        n_samples=n,
        column_norms=col_norms,
        empirical_consistency=emp,
        consistency_bound=cons,
        kappa_m=kappa,
        confidence_term=conf,
        pm_norm=pm_norm,
        empirical_slacks=(float(xi1.mean()), float(xi2.mean())),
        generalization_bound=float(gen),
        delta=float(delta),
        confidence_theta=float(confidence_theta),
    )
