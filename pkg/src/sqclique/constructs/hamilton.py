"""Hamiltonian cycles in the Dirac regime (minimum degree >= n/2).

The search follows the classical proof: grow a path until both ends are
stuck, close it into a cycle with a crossing pair of end-neighbors, then
break the cycle open at a vertex with an outside neighbor and keep growing.
Under the Dirac condition every step is guaranteed to succeed.
"""

from __future__ import annotations

from typing import List, Optional, Sequence, Set, Tuple

from ..graph import GraphError, SimpleGraph


class DiracConditionError(GraphError):
    def __init__(self, message: str, round_index: Optional[int] = None) -> None:
        super().__init__(message)
        self.round_index = round_index


def satisfies_dirac(g: SimpleGraph) -> bool:
    return g.n >= 3 and 2 * g.min_degree() >= g.n


def _extend(g: SimpleGraph, path: List[int], on_path: Set[int]) -> None:
    """Greedily grow ``path`` at both ends (lowest-index neighbor first)."""
    for _ in range(2):
        while True:
            end = path[-1]
            nxt = next((w for w in g.neighbors(end) if w not in on_path), None)
            if nxt is None:
                break
            path.append(nxt)
            on_path.add(nxt)
        path.reverse()


def _close(g: SimpleGraph, path: List[int]) -> Optional[List[int]]:
    """Turn a path with both ends stuck into a cycle on the same vertices."""
    first, last = path[0], path[-1]
    if len(path) >= 3 and g.has_edge(first, last):
        return list(path)
    for i in range(len(path) - 1):
        if g.has_edge(first, path[i + 1]) and g.has_edge(last, path[i]):
            return path[: i + 1] + path[: i:-1]
    return None


def _search(g: SimpleGraph) -> Optional[List[int]]:
    n = g.n
    if n < 3:
        return None
    path = [0]
    on_path = {0}
    while True:
        _extend(g, path, on_path)
        cycle = _close(g, path)
        if cycle is None:
            return None
        if len(cycle) == n:
            return cycle
        # open the cycle next to a vertex that has an outside neighbor
        for j, c in enumerate(cycle):
            out = next((w for w in g.neighbors(c) if w not in on_path), None)
            if out is not None:
                rotated = cycle[j + 1:] + cycle[: j + 1]
                path = rotated + [out]
                on_path.add(out)
                break
        else:
            return None


def is_hamiltonian_cycle(g: SimpleGraph, cycle: Sequence[int]) -> bool:
    if len(cycle) != g.n or len(set(cycle)) != g.n or g.n < 3:
        return False
    return all(g.has_edge(cycle[i], cycle[(i + 1) % g.n]) for i in range(g.n))


def dirac_hamiltonian_cycle(g: SimpleGraph, strict: bool = True) -> List[int]:
    """Hamiltonian cycle of a graph with minimum degree at least n/2.

    With ``strict=False`` the same search is attempted on graphs outside the
    Dirac regime; it may then fail, which raises ``DiracConditionError``.
    """
    if strict and not satisfies_dirac(g):
        raise DiracConditionError(
            f"Dirac condition fails: n={g.n}, minimum degree {g.min_degree()} < n/2"
        )
    cycle = _search(g)
    if cycle is None:
        if satisfies_dirac(g):
            raise AssertionError("rotation-extension failed under the Dirac condition")
        raise DiracConditionError(f"no Hamiltonian cycle found (n={g.n}, min degree {g.min_degree()})")
    return cycle


def cycle_edges(cycle: Sequence[int]) -> List[Tuple[int, int]]:
    k = len(cycle)
    return [tuple(sorted((cycle[i], cycle[(i + 1) % k]))) for i in range(k)]


def edge_disjoint_hamiltonian_cycles(g: SimpleGraph, count: int, strict: bool = False) -> List[List[int]]:
    """Find ``count`` pairwise edge-disjoint Hamiltonian cycles.

    Round ``i`` (0-based, i.e. after ``i`` cycles were removed) uses the
    Dirac search on the remaining edges. With ``strict=True`` the Dirac
    condition must hold in every round; otherwise a round outside the regime
    is attempted anyway and only fails if no cycle is found.
    """
    remaining = g.copy()
    cycles: List[List[int]] = []
    for i in range(count):
        if strict and not satisfies_dirac(remaining):
            raise DiracConditionError(
                f"round {i}: minimum degree {remaining.min_degree()} < n/2 = {remaining.n / 2}", i
            )
        try:
            cycle = dirac_hamiltonian_cycle(remaining, strict=False)
        except DiracConditionError as exc:
            raise DiracConditionError(f"round {i}: {exc}", i) from None
        for a, b in cycle_edges(cycle):
            remaining.remove_edge(a, b)
        cycles.append(cycle)
    return cycles


def matching_from_even_cycle(cycle: Sequence[int]) -> List[Tuple[int, int]]:
    """Every other edge of an even cycle: a perfect matching of its vertices."""
    if len(cycle) % 2:
        raise GraphError(f"cycle of odd length {len(cycle)} has no perfect matching")
    return [tuple(sorted((cycle[i], cycle[i + 1]))) for i in range(0, len(cycle), 2)]
