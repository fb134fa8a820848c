"""Measurements on graphs: square, degeneracy orders, maximum average degree.

Each measurement has a brute-force twin usable as a test oracle on small
inputs. Maximum average degree is computed exactly with rational arithmetic.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Sequence, Tuple

import networkx as nx

from .graph import GraphError, SimpleGraph, VertexOrder

MAX_BRUTE_DEGENERACY = 16
MAX_BRUTE_MAD = 14


def square(g: SimpleGraph) -> SimpleGraph:
    """Graph on V(g) joining every pair at distance 1 or 2."""
    rows = g.bitsets()
    out = SimpleGraph(g.n)
    for v in g.vertices():
        reach = rows[v]
        for w in g.neighbor_set(v):
            reach |= rows[w]
        reach &= ~(1 << v)
        while reach:
            low = reach & -reach
            w = low.bit_length() - 1
            if w > v:
                out.add_edge(v, w)
            reach ^= low
    return out


def square_degrees_within(g: SimpleGraph, members: Sequence[int]) -> Dict[int, int]:
    """Degree of each member in ``square(g)[members]``."""
    ms = set(members)
    out = {}
    for v in members:
        reach = set(g.neighbor_set(v))
        for w in g.neighbor_set(v):
            reach |= g.neighbor_set(w)
        reach.discard(v)
        out[v] = len(reach & ms)
    return out


@dataclass
class DegeneracyCertificate:
    degeneracy: int
    order: VertexOrder
    back_degrees: List[int]

    def check(self, g: SimpleGraph) -> bool:
        recomputed = [len(self.order.later_neighbors(g, v)) for v in g.vertices()]
        return recomputed == self.back_degrees and max(recomputed, default=0) == self.degeneracy


def peel(g: SimpleGraph, key: Callable[[int, int], tuple]) -> Tuple[List[int], List[int]]:
    """Delete vertices one at a time, always taking the smallest ``key(v, current_degree)``.

    Returns the deletion sequence and the degree each vertex had when deleted
    (its number of later neighbors in that sequence).
    """
    deg = g.degrees()
    alive = [True] * g.n
    heap = [(key(v, deg[v]), v) for v in g.vertices()]
    heapq.heapify(heap)
    seq: List[int] = []
    back = [0] * g.n
    while heap:
        k, v = heapq.heappop(heap)
        if not alive[v] or k != key(v, deg[v]):
            continue
        alive[v] = False
        seq.append(v)
        back[v] = deg[v]
        for w in g.neighbor_set(v):
            if alive[w]:
                deg[w] -= 1
                heapq.heappush(heap, (key(w, deg[w]), w))
    return seq, back


def degeneracy_order(g: SimpleGraph) -> DegeneracyCertificate:
    """Smallest-last order; ties go to the lowest index."""
    seq, back = peel(g, lambda v, d: (d, v))
    return DegeneracyCertificate(max(back, default=0), VertexOrder(seq), back)


def degeneracy(g: SimpleGraph) -> int:
    return degeneracy_order(g).degeneracy


def back_degrees(g: SimpleGraph, order: VertexOrder) -> List[int]:
    if len(order) != g.n:
        raise GraphError(f"order has {len(order)} vertices, graph has {g.n}")
    pos = order.position
    return [sum(1 for w in g.neighbor_set(v) if pos[w] > pos[v]) for v in g.vertices()]


def is_k_degeneracy_order(g: SimpleGraph, order: VertexOrder, k: int) -> bool:
    return all(b <= k for b in back_degrees(g, order))


def exhaustive_degeneracy(g: SimpleGraph) -> int:
    """Minimum over all vertex orders of the largest back-degree (subset DP)."""
    n = g.n
    if n > MAX_BRUTE_DEGENERACY:
        raise GraphError(f"exhaustive degeneracy limited to {MAX_BRUTE_DEGENERACY} vertices, got {n}")
    rows = g.bitsets()
    best = [0] * (1 << n)
    for mask in range(1, 1 << n):
        value = n
        m = mask
        while m:
            low = m & -m
            v = low.bit_length() - 1
            cand = max(bin(rows[v] & mask).count("1"), best[mask ^ low])
            if cand < value:
                value = cand
            m ^= low
        best[mask] = value
    return best[(1 << n) - 1]


# maximum average degree ----------------------------------------------------

def _best_excess(g: SimpleGraph, edges: List[Tuple[int, int]], p: int, q: int) -> Tuple[int, List[int]]:
    """max over U of q|E(U)| - p|U|, with a maximizing U (min-cut source side)."""
    net = nx.DiGraph()
    net.add_node("s")
    net.add_node("t")
    for i, (a, b) in enumerate(edges):
        net.add_edge("s", ("e", i), capacity=q)
        net.add_edge(("e", i), ("v", a))
        net.add_edge(("e", i), ("v", b))
    for v in g.vertices():
        net.add_edge(("v", v), "t", capacity=p)
    cut, (source_side, _) = nx.minimum_cut(net, "s", "t")
    members = sorted(x[1] for x in source_side if isinstance(x, tuple) and x[0] == "v")
    return q * len(edges) - cut, members


def _induced_edges(g: SimpleGraph, members: Sequence[int]) -> int:
    ms = set(members)
    return sum(len(g.neighbor_set(v) & ms) for v in ms) // 2


def mad(g: SimpleGraph) -> Tuple[Fraction, List[int]]:
    """Exact maximum average degree and a vertex set attaining it.

    Parametric search: starting from the whole graph, a min-cut finds a set
    of strictly higher density whenever one exists; the density climbs
    through achieved values until no improvement is possible.
    """
    if g.n == 0:
        raise GraphError("mad of the empty graph is undefined")
    edges = list(g.edges())
    if not edges:
        return Fraction(0), [0]
    members = list(g.vertices())
    density = Fraction(len(edges), g.n)
    while True:
        excess, cand = _best_excess(g, edges, density.numerator, density.denominator)
        if excess <= 0 or not cand:
            break
        members = cand
        density = Fraction(_induced_edges(g, cand), len(cand))
    return 2 * density, members


def brute_force_mad(g: SimpleGraph) -> Fraction:
    n = g.n
    if n == 0:
        raise GraphError("mad of the empty graph is undefined")
    if n > MAX_BRUTE_MAD:
        raise GraphError(f"brute-force mad limited to {MAX_BRUTE_MAD} vertices, got {n}")
    edge_masks = [(1 << a) | (1 << b) for a, b in g.edges()]
    best = Fraction(0)
    for mask in range(1, 1 << n):
        e = sum(1 for em in edge_masks if em & mask == em)
        value = Fraction(2 * e, bin(mask).count("1"))
        if value > best:
            best = value
    return best


# degeneracy of the square ----------------------------------------------------

@dataclass
class SquareDegeneracyReport:
    D: int
    k: int
    max_degree: int
    degeneracy: int
    square_degeneracy: int
    bound_general: int
    bound_two_degenerate: Optional[int]
    mad: Fraction
    bound_mad_below_four: Optional[int]
    violations: List[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def as_dict(self) -> dict:
        return {
            "D": self.D,
            "k": self.k,
            "max_degree": self.max_degree,
            "degeneracy": self.degeneracy,
            "square_degeneracy": self.square_degeneracy,
            "bound_general": self.bound_general,
            "bound_two_degenerate": self.bound_two_degenerate,
            "mad": str(self.mad),
            "bound_mad_below_four": self.bound_mad_below_four,
            "violations": list(self.violations),
        }


def square_degeneracy_report(g: SimpleGraph, D: int, k: int) -> SquareDegeneracyReport:
    """Compare the degeneracy of ``square(g)`` with the known upper bounds.

    Bounds: k(D-1)+(D-k)(k-1) for k-degenerate g; 3D-4 when k = 2; 3D when
    mad(g) < 4 (only reported when that holds).
    """
    if g.n == 0:
        raise GraphError("square degeneracy report needs a nonempty graph")
    delta = g.max_degree()
    if delta > D:
        raise GraphError(f"hypothesis max degree <= D fails: max degree {delta} > D={D}")
    dg = degeneracy(g)
    if dg > k:
        raise GraphError(f"hypothesis {k}-degenerate fails: degeneracy is {dg}")
    sq = degeneracy(square(g))
    general = k * (D - 1) + (D - k) * (k - 1)
    two = 3 * D - 4 if k == 2 else None
    m, _ = mad(g)
    thm_a = 3 * D if m < 4 else None
    report = SquareDegeneracyReport(D, k, delta, dg, sq, general, two, m, thm_a)
    if sq > general:
        report.violations.append(f"square degeneracy {sq} exceeds k(D-1)+(D-k)(k-1) = {general}")
    if two is not None and sq > two:
        report.violations.append(f"square degeneracy {sq} exceeds 3D-4 = {two}")
    if thm_a is not None and sq > thm_a:
        report.violations.append(f"square degeneracy {sq} exceeds 3D = {thm_a}")
    return report
