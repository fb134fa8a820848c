"""Token passing along a degeneracy order, and the vertex classes built on it.

Vertices are deleted in order. Just before deletion a vertex of S hands one
primary token to each later neighbor, and a vertex holding s >= 1 primary
tokens hands s secondary tokens to each later neighbor. In the ``mad_four``
variant a non-S vertex with at least three S-neighbors (set R3) that has
three later S-neighbors also hands each of them one tertiary token.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Sequence, Set, Tuple

from ..analysis import is_k_degeneracy_order
from ..graph import GraphError, SimpleGraph, VertexOrder

TWO_DEGENERATE = "two_degenerate"
MAD_FOUR = "mad_four"
VARIANTS = (TWO_DEGENERATE, MAD_FOUR)

# order degeneracy required by each variant
ORDER_K = {TWO_DEGENERATE: 2, MAD_FOUR: 3}
# Big threshold: primary(v) > D / BIG_DIVISOR
BIG_DIVISOR = {TWO_DEGENERATE: 4, MAD_FOUR: 8}
# slack term of the key inequality
KEY_SLACK = {TWO_DEGENERATE: 6, MAD_FOUR: 12}


class PreconditionError(GraphError):
    """An input violates the hypothesis of the requested procedure."""


@dataclass
class TokenEvent:
    giver: int
    receiver: int
    kind: str
    count: int


@dataclass
class TokenLedger:
    """Token counts held by each vertex immediately before its deletion."""

    variant: str
    tokens: List[int]
    primary: List[int]
    secondary: List[int]
    tertiary: List[int]
    r3: Set[int]
    trace: Optional[List[TokenEvent]] = None

    def total(self) -> int:
        return sum(self.tokens)


def r3_set(g: SimpleGraph, S: Iterable[int]) -> Set[int]:
    ss = set(S)
    return {v for v in g.vertices() if v not in ss and len(g.neighbor_set(v) & ss) >= 3}


def simulate_tokens(
    g: SimpleGraph,
    S: Iterable[int],
    order: VertexOrder,
    variant: str = TWO_DEGENERATE,
    trace: bool = False,
) -> TokenLedger:
    if variant not in VARIANTS:
        raise ValueError(f"unknown variant {variant!r}")
    if len(order) != g.n:
        raise PreconditionError(f"order covers {len(order)} vertices, graph has {g.n}")
    k = ORDER_K[variant]
    if not is_k_degeneracy_order(g, order, k):
        raise PreconditionError(f"order is not a {k}-degeneracy order")
    ss = set(S)
    r3 = r3_set(g, ss) if variant == MAD_FOUR else set()

    held_primary = [0] * g.n
    held_secondary = [0] * g.n
    held_tertiary = [0] * g.n
    tokens = [0] * g.n
    primary = [0] * g.n
    events: Optional[List[TokenEvent]] = [] if trace else None

    for v in order.sequence:
        primary[v] = held_primary[v]
        tokens[v] = held_primary[v] + held_secondary[v] + held_tertiary[v]
        later = order.later_neighbors(g, v)
        s = held_primary[v]
        for w in later:
            if v in ss:
                held_primary[w] += 1
                if events is not None:
                    events.append(TokenEvent(v, w, "primary", 1))
            if s:
                held_secondary[w] += s
                if events is not None:
                    events.append(TokenEvent(v, w, "secondary", s))
        if v in r3:
            later_s = [w for w in later if w in ss]
            if len(later_s) >= 3:
                for w in later_s[:3]:
                    held_tertiary[w] += 1
                    if events is not None:
                        events.append(TokenEvent(v, w, "tertiary", 1))

    return TokenLedger(variant, tokens, primary, held_secondary, held_tertiary, r3, events)


@dataclass
class Classification:
    big: Set[int]
    basic: Set[int]
    nonbasic: Set[int]
    w_set: Set[int]
    r3: Set[int]
    thresholds: Dict[str, Fraction] = field(default_factory=dict)

    def sizes(self) -> Dict[str, int]:
        return {
            "big": len(self.big),
            "basic": len(self.basic),
            "nonbasic": len(self.nonbasic),
            "W": len(self.w_set),
            "R3": len(self.r3),
        }


def classify(ledger: TokenLedger, g: SimpleGraph, S: Iterable[int], order: VertexOrder, D: int) -> Classification:
    """Big: primary > D/4 (D/8 for mad_four). Basic: S-vertices with tokens < D/4.

    Thresholds are compared exactly: ``primary > D/4`` is ``4*primary > D``.
    """
    ss = set(S)
    div = BIG_DIVISOR[ledger.variant]
    big = {v for v in g.vertices() if div * ledger.primary[v] > D}
    basic = {v for v in ss if 4 * ledger.tokens[v] < D}
    nonbasic = ss - basic
    w_set: Set[int] = set()
    for v in nonbasic:
        w_set.update(order.later_neighbors(g, v))
    thresholds = {"big_primary_gt": Fraction(D, div), "basic_tokens_lt": Fraction(D, 4)}
    return Classification(big, basic, nonbasic, w_set, set(ledger.r3), thresholds)


@dataclass
class AuditReport:
    variant: str
    checked: int
    violations: List[Tuple[int, int]]
    min_slack: Optional[int]

    @property
    def ok(self) -> bool:
        return not self.violations


def key_inequality_audit(
    g: SimpleGraph,
    S: Sequence[int],
    order: VertexOrder,
    ledger: TokenLedger,
    D: int,
    variant: Optional[str] = None,
) -> AuditReport:
    """Check 1 + tokens(v) + D + sum of primary(later neighbors) + slack >= |S| for v in S.

    The slack is 6 for two_degenerate and 12 for mad_four. Violations are
    reported as (vertex, left-hand side).
    """
    variant = variant or ledger.variant
    slack = KEY_SLACK[variant]
    size = len(set(S))
    violations = []
    min_slack = None
    for v in sorted(set(S)):
        lhs = 1 + ledger.tokens[v] + D + sum(ledger.primary[w] for w in order.later_neighbors(g, v)) + slack
        gap = lhs - size
        min_slack = gap if min_slack is None else min(min_slack, gap)
        if gap < 0:
            violations.append((v, lhs))
    return AuditReport(variant, size, violations, min_slack)
