"""Four-level wavelet statistics of PSSM columns.

Analysis step for a signal ``x`` of length ``n`` and filter ``f`` of
length ``F``::

    c[k] = sum_{j=0}^{F-1} f[j] * xe[2k + 1 - j],   k = 0 .. ceil(n/2) - 1

where ``xe`` is the half-sample symmetric extension of ``x``
(``x[-1] = x[0]``, ``x[n] = x[n-1]``, ...). For Haar this is
``((x[2k] + x[2k+1]) / sqrt 2, (x[2k] - x[2k+1]) / sqrt 2)``.
The low band of level ``i`` is the input of level ``i + 1``.
"""

import numpy as np
from scipy.fft import dct

from .pssm import PssmFormatError
from .sequence import AMINO_ACIDS

N_LEVELS = 4
N_DCT = 5
STATS_PER_LEVEL = 4 + 4 + N_DCT
PSSM_DWT_DIM = STATS_PER_LEVEL * N_LEVELS * 20
MIN_LENGTH = 2**N_LEVELS

_S = 1.0 / np.sqrt(2.0)

# decomposition low-pass filters; high-pass is the alternating flip
LOWPASS = {
    "haar": np.array([_S, _S]),
    "db4": np.array([
        -0.010597401784997278,
        0.032883011666982945,
        0.030841381835986965,
        -0.18703481171888114,
        -0.02798376941698385,
        0.6308807679295904,
        0.7148465705525415,
        0.23037781330885523,
    ]),
}


def filter_pair(wavelet="haar"):
    """Return ``(lowpass, highpass)`` decomposition filters."""
    try:
        lo = LOWPASS[wavelet]
    except KeyError:
        raise ValueError(f"unknown wavelet {wavelet!r}; choose from {sorted(LOWPASS)}") from None
    F = lo.size
    hi = np.array([(-1) ** (k + 1) * lo[F - 1 - k] for k in range(F)])
    return lo, hi


def symmetric_index(i, n):
    """Map any integer index into ``[0, n)`` by half-sample reflection."""
    period = 2 * n
    i = np.mod(i, period)
    return np.where(i < n, i, period - 1 - i)


def dwt_step(x, wavelet="haar"):
    """One analysis level: ``(approximation, detail)``, each of length ceil(n/2)."""
    x = np.asarray(x, dtype=float)
    lo, hi = filter_pair(wavelet)
    n = x.size
    k = np.arange((n + 1) // 2)
    taps = 2 * k[:, None] + 1 - np.arange(lo.size)[None, :]
    window = x[symmetric_index(taps, n)]
    # products then sums (not BLAS) so equal inputs cancel exactly in the detail band
    return (window * lo).sum(axis=1), (window * hi).sum(axis=1)


def level_stats(approx, detail):
    """mean, median, max, min of each band then the first DCT-II coefficients."""
    coeffs = dct(approx, type=2, norm="ortho")[:N_DCT]
    coeffs = np.pad(coeffs, (0, N_DCT - coeffs.size))
    return np.concatenate([
        [approx.mean(), np.median(approx), approx.max(), approx.min()],
        [detail.mean(), np.median(detail), detail.max(), detail.min()],
        coeffs,
    ])


def column_features(x, wavelet="haar", levels=N_LEVELS):
    out = []
    approx = np.asarray(x, dtype=float)
    for _ in range(levels):
        approx, detail = dwt_step(approx, wavelet)
        out.append(level_stats(approx, detail))
    return np.concatenate(out)


def pssm_dwt_features(pssm, wavelet="haar"):
    """1040 values ordered column, then level, then the 13 statistics."""
    L = len(pssm)
    if L < MIN_LENGTH:
        raise PssmFormatError(f"PSSM-DWT needs at least {MIN_LENGTH} rows, got {L}")
    Q = pssm.scores
    return np.concatenate([column_features(Q[:, j], wavelet) for j in range(Q.shape[1])])


def pssm_dwt_feature_names():
    slots = ["lo_mean", "lo_median", "lo_max", "lo_min", "hi_mean", "hi_median", "hi_max", "hi_min"]
    slots += [f"dct{i}" for i in range(N_DCT)]
    return [f"{a}_L{lv}_{s}" for a in AMINO_ACIDS for lv in range(1, N_LEVELS + 1) for s in slots]
