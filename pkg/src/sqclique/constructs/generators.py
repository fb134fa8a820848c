"""Generators for the extremal graphs and the random instances used in searches."""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass, field
from typing import Any, Dict, Iterable, List, Optional, Sequence, Tuple

from ..analysis import degeneracy, square_degrees_within
from ..graph import GraphError, Multigraph, SimpleGraph, subdivide_all_edges
from .equitable import PartitionRound, equitable_partition
from .hamilton import cycle_edges, edge_disjoint_hamiltonian_cycles, matching_from_even_cycle

K5_PAIRS = list(itertools.combinations(range(5), 2))
OUTER_CYCLE = {(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)}


@dataclass
class LabeledConstruction:
    """A generated graph with its named vertex sets and checked identities.

    ``facts`` holds measured quantities, ``checks`` maps each identity the
    construction is supposed to satisfy to whether it does. A failed check is
    data, not an exception: callers decide how to report it.
    """

    graph: SimpleGraph
    sets: Dict[str, List[int]]
    params: Dict[str, Any]
    facts: Dict[str, Any] = field(default_factory=dict)
    checks: Dict[str, bool] = field(default_factory=dict)
    detail: Dict[str, Any] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(self.checks.values())

    @property
    def S(self) -> List[int]:
        return self.sets["S"]


def circulant(n: int, offsets: Iterable[int]) -> SimpleGraph:
    offs = sorted(set(offsets))
    if not offs:
        raise GraphError("circulant needs at least one offset")
    for o in offs:
        if not 1 <= o <= n // 2:
            raise GraphError(f"offset {o} outside 1..{n // 2}")
    g = SimpleGraph(n)
    for i in range(n):
        for o in offs:
            j = (i + o) % n
            if not g.has_edge(i, j):
                g.add_edge(i, j)
    return g


def regular_circulant_offsets(n: int, D: int) -> List[int]:
    """Offsets making ``circulant(n, offsets)`` D-regular (n even, 1 <= D < n)."""
    if n % 2 or not 1 <= D < n:
        raise GraphError(f"no D-regular circulant chosen for n={n}, D={D}")
    offs = list(range(1, D // 2 + 1))
    if D % 2:
        offs.append(n // 2)
    return offs


def _basic_facts(g: SimpleGraph, S: Sequence[int]) -> Dict[str, Any]:
    return {
        "n": g.n,
        "m": g.edge_count(),
        "S_size": len(S),
        "max_degree": g.max_degree(),
        "degeneracy": degeneracy(g),
    }


def example1(D: int) -> LabeledConstruction:
    """K5 hub with every hub pair joined through D/4 middle vertices.

    Every pair of middle vertices without a common neighbor gets a private
    gray vertex. When D = 2 (mod 4) the build uses D+2 and drops one middle
    vertex from each bundle on the outer 5-cycle 0-1-2-3-4-0.
    Layout: hubs 0..4, then middle vertices bundle by bundle (hub pairs in
    lexicographic order), then gray vertices in lexicographic pair order.
    """
    if D < 4 or D % 2:
        raise GraphError(f"example1 needs an even D >= 4, got {D}")
    Dp = D if D % 4 == 0 else D + 2
    bundle = Dp // 4
    g = SimpleGraph(5)
    hubs = [0, 1, 2, 3, 4]
    owner: Dict[int, Tuple[int, int]] = {}
    S: List[int] = []
    for a, b in K5_PAIRS:
        size = bundle - 1 if D != Dp and (a, b) in OUTER_CYCLE else bundle
        for _ in range(size):
            x = g.add_vertex()
            g.add_edge(a, x)
            g.add_edge(b, x)
            owner[x] = (a, b)
            S.append(x)
    gray = []
    for x, y in itertools.combinations(S, 2):
        if not set(owner[x]) & set(owner[y]):
            z = g.add_vertex()
            g.add_edge(x, z)
            g.add_edge(y, z)
            gray.append(z)
    facts = _basic_facts(g, S)
    checks = {
        "S_size == 5D/2": 2 * len(S) == 5 * D,
        "max_degree == D": facts["max_degree"] == D,
        "degeneracy == 2": facts["degeneracy"] == 2,
    }
    return LabeledConstruction(
        g, {"S": S, "hub": hubs, "gray": gray}, {"kind": "example1", "D": D}, facts, checks,
        {"bundle_size": bundle, "built_with": Dp},
    )


def example2(D: int, s: int) -> LabeledConstruction:
    """2-degenerate graph of maximum degree D whose square is not (3D-5)-degenerate.

    Subdivide a D-regular circulant on 4s vertices (set T), call the
    subdivision vertices S, and pair up S-vertices along a (D-2)-regular
    subgraph of the "no common neighbor" graph J built from edge-disjoint
    Hamiltonian cycles; each such pair receives a private vertex (set Z).
    """
    if s < 3:
        raise GraphError(f"example2 needs s >= 3, got {s}")
    if not 2 <= D < 4 * s:
        raise GraphError(f"example2 needs 2 <= D < 4s, got D={D}, s={s}")
    base = circulant(4 * s, regular_circulant_offsets(4 * s, D))
    T = list(base.vertices())
    g, S = subdivide_all_edges(base)
    base_edges = list(base.edges())
    m = len(base_edges)

    J = SimpleGraph(m)
    for i, j in itertools.combinations(range(m), 2):
        if not set(base_edges[i]) & set(base_edges[j]):
            J.add_edge(i, j)
    j_degree = 2 * s * D - (2 * D - 1)

    count = math.ceil((D - 2) / 2)
    cycles = edge_disjoint_hamiltonian_cycles(J, count, strict=True)
    j1: List[Tuple[int, int]] = []
    for idx, cycle in enumerate(cycles):
        if D % 2 and idx == len(cycles) - 1:
            j1.extend(matching_from_even_cycle(cycle))
        else:
            j1.extend(cycle_edges(cycle))

    Z = []
    for i, j in sorted(j1):
        z = g.add_vertex()
        g.add_edge(S[i], z)
        g.add_edge(S[j], z)
        Z.append(z)

    facts = _basic_facts(g, S)
    sq_deg = square_degrees_within(g, S)
    facts["J_degrees"] = sorted(set(J.degrees()))
    facts["square_S_degrees"] = sorted(set(sq_deg.values()))
    facts["hamiltonian_cycles"] = count
    j1_graph = SimpleGraph(m, j1)
    checks = {
        "S_size == 2sD": len(S) == 2 * s * D,
        "J regular of degree 2sD-(2D-1)": facts["J_degrees"] == [j_degree],
        "J1 is (D-2)-regular": set(j1_graph.degrees()) == {D - 2},
        "degeneracy <= 2": facts["degeneracy"] <= 2,
        "max_degree == D": facts["max_degree"] == D,
        "square[S] is (3D-4)-regular": facts["square_S_degrees"] == [3 * D - 4],
    }
    return LabeledConstruction(
        g, {"S": S, "T": T, "Z": Z}, {"kind": "example2", "D": D, "s": s}, facts, checks,
        {"J": J, "J1": j1, "cycles": cycles},
    )


def example3(k: int, D: int, S_size: Optional[int] = None) -> LabeledConstruction:
    """k-degenerate graph of maximum degree D with a dense square on S.

    S is partitioned k times into parts of size D and then D-k times into
    parts of size k, with no pair of S-vertices sharing a part twice; each
    part gets a hub adjacent to exactly that part. Layout: S first, then the
    hubs in round order.
    """
    if k < 2 or D < k:
        raise GraphError(f"example3 needs D >= k >= 2, got k={k}, D={D}")
    default = 2 * k * D * D
    size = default if S_size is None else S_size
    if size < default or size % (k * D):
        raise GraphError(f"|S|={size} must be >= 2kD^2={default} and divisible by kD={k * D}")

    g = SimpleGraph(size)
    S = list(range(size))
    J = SimpleGraph(size)
    rounds: List[PartitionRound] = []
    hub_D: List[int] = []
    hub_k: List[int] = []
    sizes = [D] * k + [k] * (D - k)
    for r, part_size in enumerate(sizes):
        partition = equitable_partition(J, part_size, r)
        rounds.append(partition)
        for part in partition.parts:
            w = g.add_vertex()
            (hub_D if r < k else hub_k).append(w)
            for v in part:
                g.add_edge(w, v)
            for a, b in itertools.combinations(part, 2):
                if J.has_edge(a, b):
                    raise AssertionError(f"pair ({a}, {b}) placed together twice")
                J.add_edge(a, b)

    target = k * (D - 1) + (D - k) * (k - 1)
    facts = _basic_facts(g, S)
    sq_deg = square_degrees_within(g, S)
    facts["square_S_min_degree"] = min(sq_deg.values())
    facts["J_degrees"] = sorted(set(J.degrees()))
    facts["rounds"] = len(rounds)
    checks = {
        "degeneracy <= k": facts["degeneracy"] <= k,
        "max_degree == D": facts["max_degree"] == D,
        "square[S] min degree == k(D-1)+(D-k)(k-1)": facts["square_S_min_degree"] == target,
        "J regular of degree k(D-1)+(D-k)(k-1)": facts["J_degrees"] == [target],
    }
    return LabeledConstruction(
        g, {"S": S, "hub": hub_D + hub_k, "hub_D": hub_D, "hub_k": hub_k},
        {"kind": "example3", "k": k, "D": D, "S_size": size}, facts, checks,
        {"J": J, "rounds": rounds},
    )


def fat_clique(h_order: int, multiplicity: int, thinned_cycle: Optional[Sequence[int]] = None) -> Multigraph:
    """Complete multigraph with uniform multiplicity.

    ``thinned_cycle`` (a cyclic vertex sequence) lowers the multiplicity of
    each of its edges by 2.
    """
    if h_order < 3 or multiplicity < 1:
        raise GraphError(f"fat_clique needs h_order >= 3 and multiplicity >= 1, got {h_order}, {multiplicity}")
    h = Multigraph(h_order)
    for a, b in itertools.combinations(range(h_order), 2):
        h.add_edge(a, b, multiplicity)
    if thinned_cycle is not None:
        cyc = list(thinned_cycle)
        if len(cyc) < 3 or len(set(cyc)) != len(cyc):
            raise GraphError("thinned cycle must list at least 3 distinct vertices")
        for a, b in cycle_edges(cyc):
            left = h.mu(a, b) - 2
            if left < 0:
                raise GraphError(f"thinning ({a}, {b}) would leave multiplicity {left}")
            h.set_multiplicity(a, b, left)
    return h


def random_k_degenerate(
    n: int,
    k: int,
    D: int,
    seed: int,
    back_weights: Optional[Sequence[float]] = None,
) -> SimpleGraph:
    """Random graph built by adding vertices with at most k earlier neighbors.

    Earlier neighbors are drawn uniformly among vertices of degree < D. By
    default each new vertex takes as many as it can (up to k);
    ``back_weights[j]`` instead gives the relative chance of taking j.
    """
    if n < 1 or k < 1 or D < k:
        raise GraphError(f"random_k_degenerate needs n >= 1, k >= 1, D >= k; got {n}, {k}, {D}")
    rng = random.Random(seed)
    g = SimpleGraph(n)
    for v in range(1, n):
        eligible = [u for u in range(v) if g.degree(u) < D]
        want = k
        if back_weights is not None:
            want = rng.choices(range(len(back_weights)), weights=back_weights)[0]
        for u in rng.sample(eligible, min(want, k, len(eligible))):
            g.add_edge(u, v)
    return g
