"""Exact construction and verification of Segal–Sugawara vectors for osp(M|2n)."""
from .errors import DivisionByZero, InvalidArgument, PoleAtEvaluation, SizeMismatch
from .repcheck import verify_rep_identities
from .reports import VerificationReport
from .ssv import (
    SSVector,
    cycle_count,
    ev_centrality_check,
    partitions_even_length,
    phi_integral,
    phi_rational,
    psi_relation_check,
    verify_annihilation,
    verify_commutativity,
    y_poly,
)
from .superspace import Signature

__version__ = "0.1.0"

__all__ = [
    "DivisionByZero",
    "InvalidArgument",
    "PoleAtEvaluation",
    "SSVector",
    "Signature",
    "SizeMismatch",
    "VerificationReport",
    "cycle_count",
    "ev_centrality_check",
    "partitions_even_length",
    "phi_integral",
    "phi_rational",
    "psi_relation_check",
    "verify_annihilation",
    "verify_commutativity",
    "verify_rep_identities",
    "y_poly",
]
