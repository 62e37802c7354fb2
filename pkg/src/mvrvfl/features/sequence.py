"""Protein sequences, FASTA parsing and residue lookup tables."""

import logging
from dataclasses import dataclass

import numpy as np

log = logging.getLogger(__name__)

# PSI-BLAST profile column order; also the order of residue-frequency blocks.
AMINO_ACIDS = "ARNDCQEGHILKMFPSTWYV"
AA_INDEX = {a: i for i, a in enumerate(AMINO_ACIDS)}
NONSTANDARD = set("BJOUXZ")
SUBSTITUTE = "A"

# side-chain dipole / volume classes, groups numbered 1..7
AMINO_GROUPS = {
    **dict.fromkeys("AGV", 1),
    **dict.fromkeys("DE", 2),
    **dict.fromkeys("FPIL", 3),
    **dict.fromkeys("HQNW", 4),
    **dict.fromkeys("KR", 5),
    **dict.fromkeys("TYMS", 6),
    "C": 7,
}

PROPERTY_NAMES = ("Q1", "Q2", "SASA", "H", "NCISC", "VSC")

# raw physicochemical values per residue, columns as PROPERTY_NAMES
PHYSCHEM = {
    "D": (0.105, 13.0, 1.587, -0.9, -0.02382, 40.0),
    "C": (0.128, 5.5, 1.461, 0.29, -0.03661, 44.6),
    "A": (0.046, 8.1, 1.181, 0.62, 0.007187, 27.5),
    "R": (0.291, 10.5, 2.56, -2.53, 0.043587, 105.0),
    "G": (0.0, 9.0, 0.881, 0.48, 0.179052, 0.0),
    "H": (0.23, 10.4, 2.025, -0.4, -0.01069, 79.0),
    "P": (0.131, 8.0, 1.468, 0.12, 0.239531, 41.9),
    "E": (0.151, 12.3, 1.862, -0.74, 0.006802, 62.0),
    "I": (0.186, 5.2, 1.81, 1.38, 0.021631, 93.5),
    "N": (0.134, 11.6, 1.655, -0.78, 0.005392, 58.7),
    "Q": (0.18, 10.5, 1.932, -0.85, 0.049211, 80.7),
    "F": (0.29, 5.2, 2.228, 1.19, 0.037552, 115.5),
    "L": (0.186, 4.9, 1.931, 1.06, 0.051672, 93.5),
    "T": (0.108, 8.6, 1.525, -0.05, 0.003352, 51.3),
    "Y": (0.298, 6.2, 2.368, 0.26, 0.023599, 117.3),
    "M": (0.221, 5.7, 2.034, 0.64, 0.002683, 94.1),
    "W": (0.409, 5.4, 2.663, 0.81, 0.037977, 145.5),
    "S": (0.062, 9.2, 1.298, -0.18, 0.004627, 29.3),
    "K": (0.219, 11.3, 2.258, -1.5, 0.017708, 100.0),
    "V": (0.14, 5.9, 1.645, 1.08, 0.057004, 71.5),
}


def physchem_matrix():
    """Raw 20x6 property matrix in ``AMINO_ACIDS`` row order."""
    return np.array([PHYSCHEM[a] for a in AMINO_ACIDS])


def standardized_physchem():
    """Property columns standardized to mean 0, population std 1."""
    M = physchem_matrix()
    return (M - M.mean(axis=0)) / M.std(axis=0)


class SequenceError(ValueError):
    pass


@dataclass(frozen=True)
class ProteinSequence:
    id: str
    residues: str

    def __post_init__(self):
        if not self.residues:
            raise SequenceError(f"{self.id}: empty sequence")
        bad = set(self.residues) - set(AMINO_ACIDS)
        if bad:
            raise SequenceError(f"{self.id}: non-standard residues {sorted(bad)}")

    def __len__(self):
        return len(self.residues)

    @property
    def indices(self):
        return np.array([AA_INDEX[a] for a in self.residues], dtype=np.int64)

    @property
    def groups(self):
        return np.array([AMINO_GROUPS[a] for a in self.residues], dtype=np.int64)


def sanitize(residues, seq_id="?"):
    """Uppercase, drop whitespace and a terminal ``*``, map B/J/O/U/X/Z to A."""
    s = "".join(residues.split()).upper().rstrip("*")
    n_sub = sum(ch in NONSTANDARD for ch in s)
    if n_sub:
        log.warning("%s: replaced %d non-standard residue(s) with %s", seq_id, n_sub, SUBSTITUTE)
        s = "".join(SUBSTITUTE if ch in NONSTANDARD else ch for ch in s)
    bad = sorted(set(s) - set(AMINO_ACIDS))
    if bad:
        raise SequenceError(f"{seq_id}: invalid residue characters {bad}")
    return s


def parse_fasta(text):
    records = []
    seq_id, chunks = None, []

    def flush():
        if seq_id is None:
            return
        residues = sanitize("".join(chunks), seq_id)
        if not residues:
            raise SequenceError(f"{seq_id}: empty sequence")
        records.append(ProteinSequence(seq_id, residues))

    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line or line.startswith(";"):
            continue
        if line.startswith(">"):
            flush()
            header = line[1:].strip()
            seq_id = header.split()[0] if header else f"seq{len(records) + 1}"
            chunks = []
        else:
            if seq_id is None:
                raise SequenceError(f"line {lineno}: sequence data before any '>' header")
            chunks.append(line)
    flush()
    return records


def read_fasta(path):
    with open(path, encoding="utf-8") as fh:
        return parse_fasta(fh.read())
