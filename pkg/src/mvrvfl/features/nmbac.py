"""Normalized Moreau-Broto autocorrelation of physicochemical properties."""

import numpy as np

from .sequence import AMINO_ACIDS, PROPERTY_NAMES, SequenceError, standardized_physchem

MAX_LAG = 30
NMBAC_DIM = len(PROPERTY_NAMES) * MAX_LAG + len(AMINO_ACIDS)

_STD_PROPS = standardized_physchem()


def nmbac_features(seq, max_lag=MAX_LAG):
    """Lag autocorrelations (property-major, lag 1..max_lag) then residue frequencies.

    Entry ``j * max_lag + (lag - 1)`` is the mean over ``i`` of
    ``M[s_i, j] * M[s_{i+lag}, j]`` with ``M`` the standardized table.
    """
    L = len(seq)
    if L <= max_lag:
        raise SequenceError(f"{seq.id}: NMBAC needs more than {max_lag} residues, got {L}")
    idx = seq.indices
    P = _STD_PROPS[idx]  # L x 6
    auto = np.empty((P.shape[1], max_lag))
    for lag in range(1, max_lag + 1):
        auto[:, lag - 1] = (P[:-lag] * P[lag:]).mean(axis=0)
    freq = np.bincount(idx, minlength=len(AMINO_ACIDS)) / L
    return np.concatenate([auto.ravel(), freq])


def nmbac_feature_names(max_lag=MAX_LAG):
    return [f"{p}_lag{lag}" for p in PROPERTY_NAMES for lag in range(1, max_lag + 1)] + [
        f"freq_{a}" for a in AMINO_ACIDS
    ]
