"""Dense solves through LAPACK's expert LU driver.

``gesvx`` equilibrates rows and columns, factorizes with partial
pivoting, refines the solution iteratively and reports a reciprocal
condition estimate of the equilibrated matrix. The output weights are
never formed through an explicit inverse.
"""

import warnings

import numpy as np
from scipy import linalg

COND_WARN = 1e12


class IllConditionedError(np.linalg.LinAlgError):
    def __init__(self, message, condition):
        super().__init__(f"{message} (condition estimate {condition:.3e})")
        self.condition = condition


class IllConditionedWarning(RuntimeWarning):
    pass


def solve_factorized(A, B, what="linear system"):
    """Solve ``A X = B``; returns ``(X, condition_estimate)``.

    Raises :class:`IllConditionedError` for a numerically singular
    matrix and warns when the estimate exceeds ``COND_WARN``.
    """
    A = np.asarray(A, dtype=np.float64)
    B = np.asarray(B, dtype=np.float64)
    vector = B.ndim == 1
    B2 = B[:, None] if vector else B
    (gesvx,) = linalg.get_lapack_funcs(("gesvx",), (A, B2))
    *_, X, rcond, _ferr, _berr, info = gesvx(A, B2, fact="E")
    n = A.shape[0]
    if 0 < info <= n:
        raise IllConditionedError(f"{what} is singular (zero pivot {info})", np.inf)
    cond = np.inf if rcond == 0 else 1.0 / rcond
    if info == n + 1 or not np.isfinite(cond):
        raise IllConditionedError(f"{what} is numerically singular", cond)
    if cond > COND_WARN:
        warnings.warn(
            f"{what} is ill-conditioned (condition estimate {cond:.3e})",
            IllConditionedWarning,
            stacklevel=3,
        )
    # C order so later products round the same as for arrays reloaded from disk
    return np.ascontiguousarray(X[:, 0] if vector else X), cond
