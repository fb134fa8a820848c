"""Niceness, the contraction to a multigraph, and the edge-disjointness bound check."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Tuple

from ..analysis import is_k_degeneracy_order, peel
from ..graph import GraphError, Multigraph, SimpleGraph, VertexOrder


def square_clique_failures(g: SimpleGraph, S: Iterable[int]) -> List[Tuple[int, int]]:
    """Pairs of S at distance more than 2 in g."""
    ss = sorted(set(S))
    members = set(ss)
    bad = []
    for v in ss:
        reach = set(g.neighbor_set(v))
        for w in g.neighbor_set(v):
            reach |= g.neighbor_set(w)
        for x in members - reach:
            if x > v:
                bad.append((v, x))
    return sorted(bad)


def is_square_clique(g: SimpleGraph, S: Iterable[int]) -> bool:
    return not square_clique_failures(g, S)


@dataclass
class NiceVerdict:
    nice: bool
    order: Optional[VertexOrder] = None
    failed: Optional[str] = None
    reason: Optional[str] = None


def verify_nice(g: SimpleGraph, S: Iterable[int]) -> NiceVerdict:
    """Decide whether g is nice w.r.t. S and return a witnessing order.

    Conditions: (a) S is a clique in the square, (b) S is independent, (c)
    some 2-degeneracy order lists S consecutively. For (c) the vertices
    before S are peeled greedily (any non-S vertex of current degree <= 2);
    that prefix is the largest possible, so the search is exact: S then needs
    at most two remaining neighbors per vertex and the rest must peel as a
    2-degenerate graph.
    """
    ss = set(S)
    bad = square_clique_failures(g, ss)
    if bad:
        return NiceVerdict(False, failed="a", reason=f"S is not a clique in the square: {bad[0]} at distance > 2")
    for v in sorted(ss):
        hit = g.neighbor_set(v) & ss
        if hit:
            return NiceVerdict(False, failed="b", reason=f"S is not independent: edge ({v}, {min(hit)})")

    deg = g.degrees()
    removed = [False] * g.n
    prefix: List[int] = []
    queue = deque(v for v in g.vertices() if v not in ss and deg[v] <= 2)
    queued = set(queue)
    while queue:
        v = queue.popleft()
        removed[v] = True
        prefix.append(v)
        for w in g.neighbor_set(v):
            if not removed[w]:
                deg[w] -= 1
                if w not in ss and deg[w] <= 2 and w not in queued:
                    queue.append(w)
                    queued.add(w)
    for v in sorted(ss):
        if deg[v] > 2:
            return NiceVerdict(
                False, failed="c",
                reason=f"vertex {v} of S keeps {deg[v]} neighbors that must follow S",
            )
    rest = [v for v in g.vertices() if not removed[v] and v not in ss]
    sub, labels = g.subgraph(rest)
    seq, back = peel(sub, lambda v, d: (d, v))
    if max(back, default=0) > 2:
        return NiceVerdict(False, failed="c", reason="vertices after S do not form a 2-degenerate graph")
    order = VertexOrder(prefix + sorted(ss) + [labels[i] for i in seq])
    if not is_k_degeneracy_order(g, order, 2):
        raise AssertionError("constructed niceness witness is not a 2-degeneracy order")
    return NiceVerdict(True, order=order)


def is_consecutive(order: VertexOrder, S: Iterable[int]) -> bool:
    pos = sorted(order.position[v] for v in set(S))
    return not pos or pos[-1] - pos[0] + 1 == len(pos)


@dataclass
class ContractionResult:
    """Outcome of contracting a nice graph onto the vertices after S.

    ``branch`` is ``"multigraph"`` when every S-vertex has two neighbors
    after S; ``multigraph`` vertex i is ``t_vertices[i]``. Otherwise
    ``branch`` is ``"small_clique"`` and ``witness`` is an S-vertex with at
    most one such neighbor, which caps |S| at 2D.
    """

    branch: str
    multigraph: Optional[Multigraph]
    t_vertices: List[int]
    r_vertices: List[int]
    witness: Optional[int] = None
    checks: Dict[str, bool] = field(default_factory=dict)


def contract_to_multigraph(g: SimpleGraph, S: Iterable[int], order: VertexOrder) -> ContractionResult:
    ss = set(S)
    if not is_consecutive(order, ss):
        raise GraphError("S is not consecutive in the order")
    for v in ss:
        if g.neighbor_set(v) & ss:
            raise GraphError(f"S is not independent (vertex {v})")
    pos = order.position
    if ss:
        first = min(pos[v] for v in ss)
        last = max(pos[v] for v in ss)
    else:
        first = last = len(order)
    R = [v for v in order.sequence if pos[v] < first]
    T = [v for v in order.sequence if pos[v] > last] if ss else []
    t_set = set(T)
    t_index = {v: i for i, v in enumerate(T)}
    delta = g.max_degree()

    h = Multigraph(len(T))
    for v in sorted(ss, key=pos.__getitem__):
        # edges inside V - S are dropped first, so only S-T edges matter here
        tn = sorted(g.neighbor_set(v) & t_set, key=pos.__getitem__)
        if len(tn) <= 1:
            return ContractionResult(
                "small_clique", None, T, R, witness=v,
                checks={"|S| <= 2D": len(ss) <= 2 * delta},
            )
        if len(tn) > 2:
            raise GraphError(f"vertex {v} of S has {len(tn)} later neighbors; order is not 2-degenerate")
        w1, w2 = tn
        h.add_edge(t_index[w1], t_index[w2])
    checks = {
        "max_degree(H) <= max_degree(G)": h.max_degree() <= delta,
        "|E(H)| == |S|": h.edge_count() == len(ss),
    }
    return ContractionResult("multigraph", h, T, R, checks=checks)


@dataclass
class Thm1Report:
    D: int
    max_degree: int
    edge_count: int
    max_disjoint: int
    min_disjoint: int
    hypothesis_holds: bool
    conclusion_holds: bool

    @property
    def bound(self) -> float:
        return 5 * self.D / 2

    @property
    def ok(self) -> bool:
        return conclusion_if_hypothesis(self)

    def as_dict(self) -> dict:
        return {
            "D": self.D,
            "max_degree": self.max_degree,
            "edge_count": self.edge_count,
            "bound_5D_over_2": self.bound,
            "max_disjoint": self.max_disjoint,
            "min_disjoint": self.min_disjoint,
            "hypothesis_holds": self.hypothesis_holds,
            "conclusion_holds": self.conclusion_holds,
        }


def conclusion_if_hypothesis(r: Thm1Report) -> bool:
    return r.conclusion_holds or not r.hypothesis_holds


def disjoint_edge_counts(h: Multigraph) -> Dict[Tuple[int, int], int]:
    """For each vertex pair carrying edges: edges of h sharing no endpoint with one of them."""
    deg = h.degrees()
    total = h.edge_count()
    return {(a, b): total - (deg[a] + deg[b] - mu) for (a, b), mu in h.items()}


def thm1_check(h: Multigraph, D: int) -> Thm1Report:
    """Hypothesis: max degree <= D and every edge misses at most D-2 others. Conclusion: |E| <= 5D/2."""
    counts = disjoint_edge_counts(h)
    delta = h.max_degree()
    worst = max(counts.values(), default=0)
    best = min(counts.values(), default=0)
    m = h.edge_count()
    return Thm1Report(
        D=D,
        max_degree=delta,
        edge_count=m,
        max_disjoint=worst,
        min_disjoint=best,
        hypothesis_holds=delta <= D and worst <= D - 2,
        conclusion_holds=2 * m <= 5 * D,
    )
