"""Exact maximum clique.

Branch and bound over bitsets with a greedy-coloring upper bound. Vertices
are relabelled by descending degree (ties: ascending index) so that the
coloring visits high-degree vertices first. After the clique number is
known, a second pass extracts the lexicographically least maximum clique so
the reported witness does not depend on search order.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import List, Optional, Tuple

from .graph import GraphError, SimpleGraph

DEFAULT_BUDGET_S = 60.0
MAX_BRUTE_VERTICES = 25


@dataclass(frozen=True)
class CliqueWitness:
    members: Tuple[int, ...]
    exact: bool = True

    @property
    def size(self) -> int:
        return len(self.members)


class _BudgetExceeded(Exception):
    pass


class _Search:
    def __init__(self, rows: List[int], deadline: Optional[float]) -> None:
        self.rows = rows
        self.deadline = deadline
        self.nodes = 0
        self.best: List[int] = []
        self.target: Optional[int] = None

    def tick(self) -> None:
        self.nodes += 1
        if self.deadline is not None and self.nodes & 1023 == 1 and time.monotonic() > self.deadline:
            raise _BudgetExceeded

    def color_sort(self, cand: int) -> Tuple[List[int], List[int]]:
        rows = self.rows
        order: List[int] = []
        bounds: List[int] = []
        color = 0
        uncolored = cand
        while uncolored:
            color += 1
            q = uncolored
            while q:
                low = q & -q
                v = low.bit_length() - 1
                q &= ~rows[v]
                q ^= low
                uncolored ^= low
                order.append(v)
                bounds.append(color)
        return order, bounds

    def expand(self, current: List[int], cand: int) -> bool:
        """Search ``cand``; returns True once ``target`` (if set) is reached."""
        self.tick()
        order, bounds = self.color_sort(cand)
        for i in range(len(order) - 1, -1, -1):
            limit = self.target - 1 if self.target is not None else len(self.best)
            if len(current) + bounds[i] <= limit:
                return False
            v = order[i]
            current.append(v)
            sub = cand & self.rows[v]
            if sub:
                if self.expand(current, sub):
                    return True
            elif len(current) > len(self.best):
                self.best = list(current)
                if self.target is not None and len(current) >= self.target:
                    return True
            current.pop()
            cand &= ~(1 << v)
        return False


def _relabel(g: SimpleGraph) -> Tuple[List[int], List[int]]:
    """Rows in the new labelling and the map new -> old."""
    perm = sorted(g.vertices(), key=lambda v: (-g.degree(v), v))
    index = {v: i for i, v in enumerate(perm)}
    rows = []
    for v in perm:
        row = 0
        for w in g.neighbor_set(v):
            row |= 1 << index[w]
        rows.append(row)
    return rows, perm


def _find_at_least(rows: List[int], cand: int, size: int, deadline: Optional[float]) -> Optional[List[int]]:
    if size <= 0:
        return []
    s = _Search(rows, deadline)
    s.target = size
    s.expand([], cand)
    return s.best if len(s.best) >= size else None


def max_clique(g: SimpleGraph, time_budget: Optional[float] = DEFAULT_BUDGET_S) -> CliqueWitness:
    """Exact maximum clique, returned as the lexicographically least one.

    If ``time_budget`` seconds elapse first, the best clique found so far is
    returned with ``exact=False``.
    """
    if g.n == 0:
        return CliqueWitness(())
    deadline = None if time_budget is None else time.monotonic() + time_budget
    rows, perm = _relabel(g)
    search = _Search(rows, deadline)
    full = (1 << g.n) - 1
    try:
        search.expand([], full)
    except _BudgetExceeded:
        return CliqueWitness(tuple(sorted(perm[v] for v in search.best)), exact=False)
    omega = len(search.best)
    fallback = tuple(sorted(perm[v] for v in search.best))

    # lexicographically least clique of size omega, in original labels
    index = {v: i for i, v in enumerate(perm)}
    chosen: List[int] = []
    cand = full
    try:
        for v in g.vertices():
            if len(chosen) == omega:
                break
            bit = 1 << index[v]
            if not cand & bit:
                continue
            sub = cand & rows[index[v]]
            # keep only vertices above v in the original labelling
            higher = 0
            m = sub
            while m:
                low = m & -m
                if perm[low.bit_length() - 1] > v:
                    higher |= low
                m ^= low
            if _find_at_least(rows, higher, omega - len(chosen) - 1, deadline) is not None:
                chosen.append(v)
                cand = higher
    except _BudgetExceeded:
        return CliqueWitness(fallback, exact=False)
    return CliqueWitness(tuple(chosen))


def clique_number(g: SimpleGraph, time_budget: Optional[float] = DEFAULT_BUDGET_S) -> int:
    return max_clique(g, time_budget).size


def brute_force_max_clique(g: SimpleGraph) -> CliqueWitness:
    """Enumerate every clique in lexicographic order; keep the first largest."""
    if g.n > MAX_BRUTE_VERTICES:
        raise GraphError(f"brute-force clique limited to {MAX_BRUTE_VERTICES} vertices, got {g.n}")
    best: Tuple[int, ...] = ()

    def grow(current: List[int], common: set, start: int) -> None:
        nonlocal best
        if len(current) > len(best):
            best = tuple(current)
        for v in range(start, g.n):
            if v in common:
                current.append(v)
                grow(current, common & g.neighbor_set(v), v + 1)
                current.pop()

    grow([], set(g.vertices()), 0)
    return CliqueWitness(best)
