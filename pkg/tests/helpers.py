"""Synthetic inputs shared across the test modules."""

import csv

import numpy as np

from mvrvfl.data import TwoViewDataset
from mvrvfl.features.pssm import PssmProfile
from mvrvfl.features.sequence import AMINO_ACIDS, ProteinSequence


def random_protein(rng, length, pid="p"):
    return ProteinSequence(pid, "".join(rng.choice(list(AMINO_ACIDS), size=length)))


def random_profile(rng, length, pid="p"):
    residues = "".join(rng.choice(list(AMINO_ACIDS), size=length))
    return PssmProfile(residues, rng.integers(-9, 10, size=(length, 20)).astype(float), pid)


def pssm_text(profile, with_percentages=True):
    """Render a profile the way ``psiblast -out_ascii_pssm`` lays it out."""
    lines = ["", "Last position-specific scoring matrix computed, weighted observed percentages rounded down, information per position, and relative weight of gapless real matches to pseudocounts"]
    lines.append("           " + "   ".join(AMINO_ACIDS) + "   " + "   ".join(AMINO_ACIDS))
    for i, (aa, row) in enumerate(zip(profile.residues, profile.scores), start=1):
        cells = " ".join(f"{int(v):3d}" for v in row)
        extra = " " + " ".join(["  5"] * 20) + "  0.45 0.12" if with_percentages else ""
        lines.append(f"{i:5d} {aa}   {cells}{extra}")
    lines += ["", "                      K         Lambda", "Standard Ungapped    0.1301     0.3162"]
    return "\n".join(lines) + "\n"


def latent_two_view(n=200, seed=0, noise=0.3, m_a=8, m_b=6, d=3):
    """Two noisy linear projections of a linearly separable latent."""
    rng = np.random.default_rng(seed)
    z = rng.normal(size=(n, d))
    w = rng.normal(size=d)
    y = np.where(z @ w >= 0, 1, -1)
    A = z @ rng.normal(size=(d, m_a)) + noise * rng.normal(size=(n, m_a))
    B = z @ rng.normal(size=(d, m_b)) + noise * rng.normal(size=(n, m_b))
    return TwoViewDataset(A, B, y)


def write_matrix_csv(path, X, prefix, ids=None):
    ids = ids if ids is not None else [f"s{i}" for i in range(X.shape[0])]
    with open(path, "w", newline="", encoding="utf-8") as fh:
        w = csv.writer(fh)
        w.writerow(["id"] + [f"{prefix}{j}" for j in range(X.shape[1])])
        for pid, row in zip(ids, X):
            w.writerow([pid] + [repr(float(v)) for v in row])


def write_labels_csv(path, y, ids=None):
    ids = ids if ids is not None else [f"s{i}" for i in range(len(y))]
    with open(path, "w", newline="", encoding="utf-8") as fh:
        w = csv.writer(fh)
        w.writerow(["id", "label"])
        for pid, v in zip(ids, y):
            w.writerow([pid, int(v)])


def write_dataset(tmp_path, ds, stem="toy"):
    paths = tuple(tmp_path / f"{stem}_{s}.csv" for s in ("a", "b", "y"))
    write_matrix_csv(paths[0], ds.view_a, "a")
    write_matrix_csv(paths[1], ds.view_b, "b")
    write_labels_csv(paths[2], ds.labels)
    return paths
