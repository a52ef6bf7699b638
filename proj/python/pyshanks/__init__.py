"""Shanks polynomial periods, k-Shanks primes and monogenicity certificates."""

from ._core import (
    CeilingExceeded,
    CheckpointError,
    DomainError,
    ExactDivisionFailed,
    HypothesisViolation,
    InternalInconsistency,
    TheoremViolation,
    certify,
    classify,
    discriminant,
    discriminant_factored,
    factor_mod,
    is_k_shanks,
    params,
    period,
    search,
    shanks_poly,
    verify_table1,
)

__all__ = [
    "CeilingExceeded",
    "CheckpointError",
    "DomainError",
    "ExactDivisionFailed",
    "HypothesisViolation",
    "InternalInconsistency",
    "TheoremViolation",
    "certify",
    "classify",
    "discriminant",
    "discriminant_factored",
    "factor_mod",
    "is_k_shanks",
    "params",
    "period",
    "search",
    "shanks_poly",
    "verify_table1",
]
