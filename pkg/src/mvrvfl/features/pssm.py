"""PSI-BLAST ASCII profiles and the block-average / pseudo-PSSM descriptors."""

import logging
import math
import re
from dataclasses import dataclass

import numpy as np

from .sequence import AMINO_ACIDS, NONSTANDARD, SUBSTITUTE

log = logging.getLogger(__name__)

N_BLOCKS = 20
PSSM_AB_DIM = N_BLOCKS * 20
MAX_PSEUDO_LAG = 15
PSEPSSM_DIM = 20 + 20 * MAX_PSEUDO_LAG

_ROW = re.compile(r"^\s*(\d+)\s+(\S)\s+(.*)$")
_NUM = re.compile(r"^[-+]?\d+(\.\d*)?$")


class PssmFormatError(ValueError):
    pass


@dataclass(frozen=True)
class PssmProfile:
    residues: str
    scores: np.ndarray
    id: str = ""

    def __post_init__(self):
        S = np.asarray(self.scores, dtype=float)
        if S.ndim != 2 or S.shape[1] != 20:
            raise PssmFormatError(f"PSSM must have 20 columns, got shape {S.shape}")
        if S.shape[0] != len(self.residues):
            raise PssmFormatError(f"{S.shape[0]} score rows but {len(self.residues)} residues")
        if not np.all(np.isfinite(S)):
            raise PssmFormatError("PSSM contains non-finite scores")
        S.setflags(write=False)
        object.__setattr__(self, "scores", S)

    def __len__(self):
        return self.scores.shape[0]


def parse_pssm(text, pssm_id=""):
    """Parse ``psiblast -out_ascii_pssm`` output.

    Data rows are ``<pos> <residue> <20 scores> [<20 percentages> <info> <weight>]``;
    anything not starting with a position number (title, column header,
    lambda/K footer) is skipped. Positions must run 1..L without gaps.
    """
    residues, rows = [], []
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.split()
        if len(stripped) == 20 and "".join(stripped) == AMINO_ACIDS:
            continue
        if len(stripped) >= 20 and all(len(t) == 1 and t.isalpha() for t in stripped[:20]):
            if "".join(stripped[:20]) != AMINO_ACIDS:
                raise PssmFormatError(f"line {lineno}: column order {''.join(stripped[:20])} is not {AMINO_ACIDS}")
            continue
        m = _ROW.match(line)
        if not m:
            continue
        pos, aa, rest = int(m.group(1)), m.group(2).upper(), m.group(3).split()
        if not all(_NUM.match(t) for t in rest):
            raise PssmFormatError(f"line {lineno}: malformed row (non-numeric score)")
        if len(rest) not in (20, 40, 42):
            raise PssmFormatError(f"line {lineno}: expected 20 scores, found {len(rest)} numeric columns")
        if pos != len(rows) + 1:
            raise PssmFormatError(f"line {lineno}: position {pos} out of sequence (expected {len(rows) + 1})")
        if aa in NONSTANDARD:
            log.warning("%s line %d: non-standard residue %s treated as %s", pssm_id or "pssm", lineno, aa, SUBSTITUTE)
            aa = SUBSTITUTE
        elif aa not in AMINO_ACIDS:
            raise PssmFormatError(f"line {lineno}: unknown residue letter {aa!r}")
        residues.append(aa)
        rows.append([float(t) for t in rest[:20]])
    if not rows:
        raise PssmFormatError("no profile rows found")
    return PssmProfile("".join(residues), np.array(rows), pssm_id)


def read_pssm(path, pssm_id=""):
    with open(path, encoding="utf-8") as fh:
        return parse_pssm(fh.read(), pssm_id)


def block_bounds(L, n_blocks=N_BLOCKS):
    return [(math.floor(j * L / n_blocks), math.floor((j + 1) * L / n_blocks)) for j in range(n_blocks)]


def pssm_ab_features(pssm):
    """Column means over 20 consecutive ~5% row blocks, block-major (400 values)."""
    L = len(pssm)
    if L < N_BLOCKS:
        raise PssmFormatError(f"PSSM-AB needs at least {N_BLOCKS} rows, got {L}")
    Q = pssm.scores
    return np.concatenate([Q[a:b].mean(axis=0) for a, b in block_bounds(L)])


def psepssm_features(pssm, max_lag=MAX_PSEUDO_LAG, standardize=False):
    """Column means followed by lag-``z`` mean squared differences, lag-major.

    With ``standardize=True`` each profile is z-scored over all its
    entries first; by default the raw scores are used.
    """
    L = len(pssm)
    if L <= max_lag:
        raise PssmFormatError(f"PsePSSM needs more than {max_lag} rows, got {L}")
    Q = pssm.scores
    if standardize:
        sd = Q.std()
        Q = (Q - Q.mean()) / (sd if sd > 0 else 1.0)
    parts = [Q.mean(axis=0)]
    for lag in range(1, max_lag + 1):
        parts.append(((Q[:-lag] - Q[lag:]) ** 2).mean(axis=0))
    return np.concatenate(parts)


def pssm_ab_feature_names():
    return [f"block{j + 1}_{a}" for j in range(N_BLOCKS) for a in AMINO_ACIDS]


def psepssm_feature_names(max_lag=MAX_PSEUDO_LAG):
    return [f"mean_{a}" for a in AMINO_ACIDS] + [
        f"lag{z}_{a}" for z in range(1, max_lag + 1) for a in AMINO_ACIDS
    ]
