from .bank import DIMENSIONS, FAMILIES, FeatureBank, build_feature_bank, featurize
from .dwt import PSSM_DWT_DIM, dwt_step, filter_pair, pssm_dwt_features
from .mcd import MCD_DIM, REGIONS, mcd_features
from .nmbac import NMBAC_DIM, nmbac_features
from .pssm import (
    PSEPSSM_DIM,
    PSSM_AB_DIM,
    PssmFormatError,
    PssmProfile,
    parse_pssm,
    psepssm_features,
    pssm_ab_features,
    read_pssm,
)
from .sequence import (
    AMINO_ACIDS,
    AMINO_GROUPS,
    PHYSCHEM,
    ProteinSequence,
    SequenceError,
    parse_fasta,
    read_fasta,
    standardized_physchem,
)

__all__ = [
    "DIMENSIONS",
    "FAMILIES",
    "FeatureBank",
    "build_feature_bank",
    "featurize",
    "PSSM_DWT_DIM",
    "dwt_step",
    "filter_pair",
    "pssm_dwt_features",
    "MCD_DIM",
    "REGIONS",
    "mcd_features",
    "NMBAC_DIM",
    "nmbac_features",
    "PSEPSSM_DIM",
    "PSSM_AB_DIM",
    "PssmFormatError",
    "PssmProfile",
    "parse_pssm",
    "psepssm_features",
    "pssm_ab_features",
    "read_pssm",
    "AMINO_ACIDS",
    "AMINO_GROUPS",
    "PHYSCHEM",
    "ProteinSequence",
    "SequenceError",
    "parse_fasta",
    "read_fasta",
    "standardized_physchem",
]
