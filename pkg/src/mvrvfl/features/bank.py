"""Corpus-level featurization with skip-and-report on per-protein failures."""

import csv
import logging
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .dwt import PSSM_DWT_DIM, pssm_dwt_features
from .mcd import MCD_DIM, mcd_features
from .nmbac import NMBAC_DIM, nmbac_features
from .pssm import PSEPSSM_DIM, PSSM_AB_DIM, psepssm_features, pssm_ab_features, read_pssm

log = logging.getLogger(__name__)

FAMILIES = ("mcd", "nmbac", "psepssm", "pssm_ab", "pssm_dwt")
DIMENSIONS = {
    "mcd": MCD_DIM,
    "nmbac": NMBAC_DIM,
    "psepssm": PSEPSSM_DIM,
    "pssm_ab": PSSM_AB_DIM,
    "pssm_dwt": PSSM_DWT_DIM,
}
PSSM_FAMILIES = frozenset({"psepssm", "pssm_ab", "pssm_dwt"})


@dataclass
class FeatureBank:
    """Per-family feature rows for the proteins that could be featurized."""

    ids: dict = field(default_factory=lambda: {f: [] for f in FAMILIES})
    rows: dict = field(default_factory=lambda: {f: [] for f in FAMILIES})
    skipped: list = field(default_factory=list)

    def matrix(self, family):
        rows = self.rows[family]
        return np.vstack(rows) if rows else np.empty((0, DIMENSIONS[family]))

    def vector(self, protein_id, family):
        return self.rows[family][self.ids[family].index(protein_id)]


def feature_column_names(family):
    return [f"{family}_{i:04d}" for i in range(1, DIMENSIONS[family] + 1)]


def featurize(seq, pssm, family, wavelet="haar", standardize_psepssm=False):
    """Compute one family for one protein; ``pssm`` may be None for sequence families."""
    if family == "mcd":
        return mcd_features(seq)
    if family == "nmbac":
        return nmbac_features(seq)
    if pssm is None:
        raise FileNotFoundError(f"{seq.id}: no PSSM profile available")
    if family == "psepssm":
        return psepssm_features(pssm, standardize=standardize_psepssm)
    if family == "pssm_ab":
        return pssm_ab_features(pssm)
    if family == "pssm_dwt":
        return pssm_dwt_features(pssm, wavelet)
    raise ValueError(f"unknown feature family {family!r}; choose from {FAMILIES}")


def build_feature_bank(sequences, pssm_dir=None, families=FAMILIES, wavelet="haar",
                       standardize_psepssm=False):
    """Featurize a corpus; failures are logged and collected in ``bank.skipped``.

    PSSM files are looked up as ``<pssm_dir>/<protein id>.pssm``.
    """
    for f in families:
        if f not in FAMILIES:
            raise ValueError(f"unknown feature family {f!r}; choose from {FAMILIES}")
    bank = FeatureBank()
    need_pssm = any(f in PSSM_FAMILIES for f in families)
    for seq in sequences:
        pssm, pssm_error = None, None
        if need_pssm:
            path = Path(pssm_dir) / f"{seq.id}.pssm" if pssm_dir is not None else None
            if path is None or not path.is_file():
                pssm_error = f"missing PSSM file {path}"
            else:
                try:
                    pssm = read_pssm(path, seq.id)
                except ValueError as exc:
                    pssm_error = f"unreadable PSSM: {exc}"
        for f in families:
            if f in PSSM_FAMILIES and pssm is None:
                bank.skipped.append((seq.id, f, pssm_error))
                log.warning("skipping %s for %s: %s", f, seq.id, pssm_error)
                continue
            try:
                vec = featurize(seq, pssm, f, wavelet, standardize_psepssm)
            except ValueError as exc:
                bank.skipped.append((seq.id, f, str(exc)))
                log.warning("skipping %s for %s: %s", f, seq.id, exc)
                continue
            bank.ids[f].append(seq.id)
            bank.rows[f].append(vec)
    return bank


def write_family_csv(bank, family, path):
    with open(path, "w", newline="", encoding="utf-8") as fh:
        w = csv.writer(fh)
        w.writerow(["id", *feature_column_names(family)])
        for pid, row in zip(bank.ids[family], bank.rows[family]):
            w.writerow([pid, *(repr(float(v)) for v in row)])


def write_skip_report(bank, path):
    with open(path, "w", newline="", encoding="utf-8") as fh:
        w = csv.writer(fh)
        w.writerow(["id", "family", "reason"])
        w.writerows(bank.skipped)
