"""Turning a graph with a large clique S in its square into a nice triple (G', S', sigma').

Both procedures run on any input meeting their hypotheses. The guarantees
that depend on |S| >= 5D/2 + 60 are asserted only when that premise holds;
the structural guarantees (degeneracy of sigma', S' a clique in the square
of G') are asserted on every run.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Set

from ..analysis import degeneracy, is_k_degeneracy_order, mad
from ..graph import SimpleGraph, VertexOrder, is_independent
from .nice import is_consecutive, square_clique_failures, verify_nice
from .tokens import (
    MAD_FOUR,
    TWO_DEGENERATE,
    AuditReport,
    Classification,
    PreconditionError,
    TokenLedger,
    classify,
    key_inequality_audit,
    simulate_tokens,
)

REMOVAL_BOUND_2DEG = 72
REMOVAL_BOUND_MAD4 = 460


class ExtractionAssertionError(AssertionError):
    """A guarantee of the extraction failed on a concrete instance."""


@dataclass
class ExtractionResult:
    variant: str
    graph_prime: SimpleGraph
    s_prime: List[int]
    order_prime: VertexOrder
    removed_count: int
    premise_held: bool
    nice: bool
    stats: Dict[str, int]
    claims: Dict[str, Optional[bool]]
    order: VertexOrder
    ledger: TokenLedger
    classification: Classification
    audit: AuditReport
    nice_reason: Optional[str] = None
    notes: Dict[str, int] = field(default_factory=dict)

    def as_stats(self) -> dict:
        return {
            "variant": self.variant,
            "removed_count": self.removed_count,
            "premise_held": self.premise_held,
            "nice": self.nice,
            "nice_reason": self.nice_reason,
            "sizes": dict(self.stats),
            "claims": dict(self.claims),
            "audit_violations": [list(v) for v in self.audit.violations],
            "audit_min_slack": self.audit.min_slack,
        }


def premise(size: int, D: int) -> bool:
    """|S| >= 5D/2 + 60, compared exactly."""
    return 2 * size >= 5 * D + 120


def search_order(g: SimpleGraph, S: Iterable[int], k: int = 2) -> VertexOrder:
    """A k-degeneracy order placing the first S-vertex as late as possible.

    Until an S-vertex is taken, any non-S vertex of current degree <= k is
    deleted (lowest index first); this prefix is the largest possible. From
    the first S-vertex on, S-vertices of degree <= k are preferred so that S
    stays together. If nothing of degree <= k is left the minimum-degree
    vertex is taken, so the result is always a smallest-last style order.
    """
    ss = set(S)
    deg = g.degrees()
    alive = [True] * g.n
    phase = [0]

    def key(v: int) -> tuple:
        in_s = v in ss
        return (deg[v] > k, in_s if phase[0] == 0 else not in_s, deg[v], v)

    heap = [(key(v), v) for v in g.vertices()]
    heapq.heapify(heap)
    seq: List[int] = []
    while heap:
        kv, v = heapq.heappop(heap)
        if not alive[v] or kv != key(v):
            continue
        alive[v] = False
        seq.append(v)
        for w in g.neighbor_set(v):
            if alive[w]:
                deg[w] -= 1
                heapq.heappush(heap, (key(w), w))
        if phase[0] == 0 and v in ss:
            phase[0] = 1
            heap = [(key(u), u) for u in g.vertices() if alive[u]]
            heapq.heapify(heap)
    return VertexOrder(seq)


def _check_common(g: SimpleGraph, S: List[int], D: int) -> None:
    if len(set(S)) != len(S):
        raise PreconditionError("S lists a vertex twice")
    for v in S:
        if not 0 <= v < g.n:
            raise PreconditionError(f"S contains {v}, outside 0..{g.n - 1}")
    if g.max_degree() > D:
        raise PreconditionError(f"max degree {g.max_degree()} exceeds D = {D}")
    bad = square_clique_failures(g, S)
    if bad:
        raise PreconditionError(f"S is not a clique in the square: {bad[0]} at distance > 2")


def _require(ok: bool, name: str) -> bool:
    if not ok:
        raise ExtractionAssertionError(f"extraction guarantee failed: {name}")
    return True


def _strip_edges(g: SimpleGraph, keep: Set[int]) -> SimpleGraph:
    out = g.copy()
    for a, b in list(out.edges()):
        if a not in keep and b not in keep:
            out.remove_edge(a, b)
    return out


def extract_nice_2deg(g: SimpleGraph, S: Iterable[int], D: int) -> ExtractionResult:
    S = sorted(S)
    _check_common(g, S, D)
    if degeneracy(g) > 2:
        raise PreconditionError(f"graph is {degeneracy(g)}-degenerate, not 2-degenerate")

    sigma = search_order(g, S)
    ledger = simulate_tokens(g, S, sigma, TWO_DEGENERATE)
    cls = classify(ledger, g, S, sigma, D)
    audit = key_inequality_audit(g, S, sigma, ledger, D)
    big = cls.big

    candidates = sorted(cls.basic - cls.w_set)
    # Keep a candidate only when all its later neighbors are Big. Under the
    # premise every Basic vertex already satisfies this; in general it is
    # what makes S' independent and sigma' 2-degenerate.
    s_prime = [v for v in candidates if all(w in big for w in sigma.later_neighbors(g, v))]
    sp = set(s_prime)
    pos = sigma.position
    head = [v for v in sigma.sequence if v not in sp and v not in big]
    order_prime = VertexOrder(head + sorted(sp, key=pos.__getitem__) + sorted(big, key=pos.__getitem__))
    g_prime = _strip_edges(g, sp)

    size = len(S)
    held = premise(size, D)
    removed = size - len(s_prime)
    x_size = len(cls.nonbasic | big)
    claims: Dict[str, Optional[bool]] = {}
    claims["order_prime_2_degenerate"] = _require(is_k_degeneracy_order(g_prime, order_prime, 2), "sigma' is a 2-degeneracy order")
    claims["s_prime_consecutive"] = _require(is_consecutive(order_prime, sp), "S' consecutive in sigma'")
    claims["s_prime_independent"] = _require(is_independent(g_prime, s_prime), "S' independent in G'")
    claims["s_prime_square_clique"] = _require(not square_clique_failures(g_prime, s_prime), "S' clique in the square of G'")
    claims["big_basic_disjoint"] = _require(not (big & cls.basic), "Big and Basic disjoint")
    claims["token_total_le_6S"] = _require(ledger.total() <= 6 * size, "total tokens <= 6|S|")
    claims["nonbasic_big_le_24S_over_D"] = _require(D * x_size <= 24 * size, "|NonBasic u Big| <= 24|S|/D")
    claims["key_inequality"] = audit.ok
    basic_ok = all(
        len(sigma.later_neighbors(g, v)) == 2 and all(w in big for w in sigma.later_neighbors(g, v))
        for v in cls.basic
    )
    if held:
        claims["basic_later_neighbors_big"] = basic_ok
        claims["nonbasic_big_le_72"] = _require(x_size <= REMOVAL_BOUND_2DEG, "|NonBasic u Big| <= 72")
        claims["removed_le_72"] = _require(removed <= REMOVAL_BOUND_2DEG, "|S - S'| <= 72")
    else:
        claims["basic_later_neighbors_big"] = None
        claims["nonbasic_big_le_72"] = None
        claims["removed_le_72"] = None

    verdict = verify_nice(g_prime, s_prime)
    _require(verdict.nice, "extracted triple is nice")
    stats = cls.sizes()
    stats.update({"S": size, "S_prime": len(s_prime), "basic_minus_W": len(candidates)})
    return ExtractionResult(
        TWO_DEGENERATE, g_prime, s_prime, order_prime, removed, held, verdict.nice, stats, claims,
        sigma, ledger, cls, audit, verdict.reason,
        {"filtered_by_later_neighbors": len(candidates) - len(s_prime)},
    )


def extract_nice_mad4(g: SimpleGraph, S: Iterable[int], D: int) -> ExtractionResult:
    S = sorted(S)
    _check_common(g, S, D)
    if g.n:
        density, _ = mad(g)
        if density >= 4:
            raise PreconditionError(f"mad = {density} is not < 4")

    # a 2-degenerate input keeps a 2-degeneracy order here as well
    sigma = search_order(g, S, max(2, degeneracy(g)))
    ledger = simulate_tokens(g, S, sigma, MAD_FOUR)
    cls = classify(ledger, g, S, sigma, D)
    audit = key_inequality_audit(g, S, sigma, ledger, D)
    big = cls.big
    pos = sigma.position

    middle = sorted(cls.basic - big, key=pos.__getitem__)
    middle_set = set(middle)
    s_prime = set(middle)
    # step 1: Big goes last; drop edges missing the initial S'
    g_prime = _strip_edges(g, s_prime)
    start: List[int] = []

    # step 2: vertices outside the middle and Big keep at most two edges
    for v in sigma.sequence:
        if v in middle_set or v in big:
            continue
        start.append(v)
        nbrs = g_prime.neighbors(v)
        if len(nbrs) > 2:
            # drop edges to S'-vertices last, so as few as possible leave S'
            nbrs.sort(key=lambda w: (w in s_prime, pos[w]))
            for w in nbrs[2:]:
                g_prime.remove_edge(v, w)
                s_prime.discard(w)

    order_prime = VertexOrder(start + middle + sorted(big, key=pos.__getitem__))
    pos2 = order_prime.position

    # step 3: middle vertices keep at most two later edges, Big ones first
    for v in middle:
        later = [w for w in g_prime.neighbor_set(v) if pos2[w] > pos2[v]]
        if len(later) > 2:
            later.sort(key=lambda w: (w not in big, pos2[w]))
            for w in later[2:]:
                g_prime.remove_edge(v, w)
                s_prime.discard(w)
            s_prime.discard(v)

    s_final = sorted(s_prime)
    size = len(S)
    held = premise(size, D)
    removed = size - len(s_final)
    r3 = cls.r3
    claims: Dict[str, Optional[bool]] = {}
    claims["order_prime_2_degenerate"] = _require(is_k_degeneracy_order(g_prime, order_prime, 2), "sigma' is a 2-degeneracy order")
    claims["s_prime_square_clique"] = _require(not square_clique_failures(g_prime, s_final), "S' clique in the square of G'")
    claims["r3_lt_2S"] = _require(not size or len(r3) < 2 * size, "|R3| < 2|S|")
    claims["token_total_le_12S_plus_3R3"] = _require(ledger.total() <= 12 * size + 3 * len(r3), "total tokens <= 12|S| + 3|R3|")
    claims["big_le_24S_over_D"] = _require(D * len(big) <= 24 * size, "|Big| <= 24|S|/D")
    claims["key_inequality"] = audit.ok
    bound = len(cls.nonbasic) + 3 * len(big)
    if held:
        claims["basic_two_later_big"] = all(
            sum(1 for w in sigma.later_neighbors(g, v) if w in big) >= 2 for v in cls.basic
        )
        claims["removed_le_nonbasic_plus_3big"] = _require(removed <= bound, "|S - S'| <= |NonBasic| + 3|Big|")
        claims["nonbasic_plus_3big_le_460"] = _require(bound <= REMOVAL_BOUND_MAD4, "|NonBasic| + 3|Big| <= 460")
    else:
        claims["basic_two_later_big"] = None
        claims["removed_le_nonbasic_plus_3big"] = None
        claims["nonbasic_plus_3big_le_460"] = None

    verdict = verify_nice(g_prime, s_final)
    stats = cls.sizes()
    stats.update({"S": size, "S_prime": len(s_final), "basic_minus_big": len(middle), "nonbasic_plus_3big": bound})
    return ExtractionResult(
        MAD_FOUR, g_prime, s_final, order_prime, removed, held, verdict.nice, stats, claims,
        sigma, ledger, cls, audit, verdict.reason,
    )
