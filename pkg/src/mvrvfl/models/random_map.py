from dataclasses import dataclass

import numpy as np
from scipy.special import expit

from .._validation import check_matrix, check_width

ACTIVATIONS = {
    "sigmoid": expit,
    "relu": lambda z: np.maximum(z, 0.0),
    "tanh": np.tanh,
}


@dataclass(frozen=True)
class RandomFeatureMap:
    """Frozen random projection ``phi(X W + b)``.

    ``bias`` is a single row broadcast over all samples, so every sample
    sees the same bias for a given hidden node.
    """

    weights: np.ndarray
    bias: np.ndarray
    activation: str = "sigmoid"
    seed: int = 0

    def __post_init__(self):
        for name in ("weights", "bias"):
            object.__setattr__(self, name, np.ascontiguousarray(getattr(self, name), dtype=float))
        if self.activation not in ACTIVATIONS:
            raise ValueError(
                f"unknown activation {self.activation!r}; choose from {sorted(ACTIVATIONS)}"
            )
        if self.weights.ndim != 2 or self.bias.shape != (self.weights.shape[1],):
            raise ValueError("bias must hold one entry per hidden node")

    @property
    def n_inputs(self):
        return self.weights.shape[0]

    @property
    def n_hidden(self):
        return self.weights.shape[1]

    def hidden(self, X):
        return ACTIVATIONS[self.activation](X @ self.weights + self.bias)


def init_feature_map(m, h_l, activation="sigmoid", seed=0):
    """Draw weights then bias uniformly on [-1, 1] from ``default_rng(seed)``."""
    if m < 1 or h_l < 1:
        raise ValueError("need m >= 1 input columns and h_l >= 1 hidden nodes")
    rng = np.random.default_rng(seed)
    W = rng.uniform(-1.0, 1.0, size=(m, h_l))
    b = rng.uniform(-1.0, 1.0, size=h_l)
    return RandomFeatureMap(W, b, activation, int(seed))


def enhance(X, fmap, direct_link=True, view="A"):
    """Enhanced features ``[X, H]`` (or just ``H`` without direct links)."""
    X = check_matrix(X)
    check_width(X, fmap.n_inputs, view)
    H = fmap.hidden(X)
    return np.hstack([X, H]) if direct_link else H
