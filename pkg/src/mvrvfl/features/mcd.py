"""Multi-scale composition / transition / distribution descriptor.

The sequence is cut into five near-equal segments; segment ``s`` (1-based)
covers ``[floor((s-1) L / 5), floor(s L / 5))``. Regions are all
contiguous segment spans ``[i..j]`` except the full span, giving 14
regions ordered by ``(i, j)``. Each region yields 63 values:

* composition (7): fraction of residues in each group
* transition (21): for unordered group pairs ``r < s`` in lexicographic
  order, the number of adjacent residue pairs whose groups are ``{r, s}``
  divided by ``len - 1``
* distribution (35): per group, the 1-based in-region positions of the
  first, ceil(25%)-th, ceil(50%)-th, ceil(75%)-th and last occurrence,
  divided by region length; an absent group gives five zeros
"""

import math
from itertools import combinations

import numpy as np

from .sequence import SequenceError

N_SEGMENTS = 5
N_GROUPS = 7
GROUP_PAIRS = tuple(combinations(range(1, N_GROUPS + 1), 2))
REGIONS = tuple(
    (i, j)
    for i in range(1, N_SEGMENTS + 1)
    for j in range(i, N_SEGMENTS + 1)
    if (i, j) != (1, N_SEGMENTS)
)
REGION_DIM = N_GROUPS + len(GROUP_PAIRS) + 5 * N_GROUPS
MCD_DIM = REGION_DIM * len(REGIONS)
MIN_LENGTH = 2 * N_SEGMENTS

# index into the 21-slot transition block for an unordered pair
_PAIR_SLOT = np.full((N_GROUPS + 1, N_GROUPS + 1), -1, dtype=np.int64)
for _k, (_r, _s) in enumerate(GROUP_PAIRS):
    _PAIR_SLOT[_r, _s] = _PAIR_SLOT[_s, _r] = _k


def segment_bounds(L):
    return [(math.floor((s - 1) * L / N_SEGMENTS), math.floor(s * L / N_SEGMENTS)) for s in range(1, N_SEGMENTS + 1)]


def region_bounds(L):
    seg = segment_bounds(L)
    return [(seg[i - 1][0], seg[j - 1][1]) for i, j in REGIONS]


def _landmarks(count):
    """1-based occurrence ranks used for the distribution descriptor."""
    return [1, math.ceil(0.25 * count), math.ceil(0.5 * count), math.ceil(0.75 * count), count]


def region_descriptor(groups):
    n = groups.shape[0]
    comp = np.bincount(groups, minlength=N_GROUPS + 1)[1:] / n

    trans = np.zeros(len(GROUP_PAIRS))
    if n > 1:
        slots = _PAIR_SLOT[groups[:-1], groups[1:]]
        trans += np.bincount(slots[slots >= 0], minlength=len(GROUP_PAIRS))
        trans /= n - 1

    dist = np.zeros((N_GROUPS, 5))
    for g in range(1, N_GROUPS + 1):
        pos = np.flatnonzero(groups == g) + 1
        if pos.size:
            dist[g - 1] = pos[np.array(_landmarks(pos.size)) - 1] / n
    return np.concatenate([comp, trans, dist.ravel()])


def mcd_features(seq):
    """882-dimensional MCD vector for a :class:`ProteinSequence`."""
    L = len(seq)
    if L < MIN_LENGTH:
        raise SequenceError(f"{seq.id}: MCD needs at least {MIN_LENGTH} residues, got {L}")
    groups = seq.groups
    return np.concatenate([region_descriptor(groups[a:b]) for a, b in region_bounds(L)])


def mcd_feature_names():
    names = []
    for i, j in REGIONS:
        tag = f"r{i}{j}"
        names += [f"{tag}_comp_g{g}" for g in range(1, N_GROUPS + 1)]
        names += [f"{tag}_trans_g{r}g{s}" for r, s in GROUP_PAIRS]
        names += [f"{tag}_dist_g{g}_{q}" for g in range(1, N_GROUPS + 1) for q in ("first", "q25", "q50", "q75", "last")]
    return names
