from .extract import (
    ExtractionAssertionError,
    ExtractionResult,
    extract_nice_2deg,
    extract_nice_mad4,
    premise,
    search_order,
)
from .nice import (
    ContractionResult,
    NiceVerdict,
    Thm1Report,
    contract_to_multigraph,
    disjoint_edge_counts,
    is_consecutive,
    is_square_clique,
    square_clique_failures,
    thm1_check,
    verify_nice,
)
from .tokens import (
    MAD_FOUR,
    TWO_DEGENERATE,
    AuditReport,
    Classification,
    PreconditionError,
    TokenEvent,
    TokenLedger,
    classify,
    key_inequality_audit,
    r3_set,
    simulate_tokens,
)

__all__ = [
    "AuditReport",
    "Classification",
    "ContractionResult",
    "ExtractionAssertionError",
    "ExtractionResult",
    "MAD_FOUR",
    "NiceVerdict",
    "PreconditionError",
    "TWO_DEGENERATE",
    "Thm1Report",
    "TokenEvent",
    "TokenLedger",
    "classify",
    "contract_to_multigraph",
    "disjoint_edge_counts",
    "extract_nice_2deg",
    "extract_nice_mad4",
    "is_consecutive",
    "is_square_clique",
    "key_inequality_audit",
    "premise",
    "r3_set",
    "search_order",
    "simulate_tokens",
    "square_clique_failures",
    "thm1_check",
    "verify_nice",
]
