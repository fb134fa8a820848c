"""Slow, direct re-computations used to cross-check the package.

Nothing here imports the package's algorithms; graphs are plain
(n, edge list) pairs or anything with ``n`` and ``edges()``.
"""

from __future__ import annotations

import itertools
from collections import deque
from fractions import Fraction


def adjacency(n, edges):
    adj = [set() for _ in range(n)]
    for a, b in edges:
        adj[a].add(b)
        adj[b].add(a)
    return adj


def bfs_distances(adj, source):
    dist = {source: 0}
    queue = deque([source])
    while queue:
        v = queue.popleft()
        for w in adj[v]:
            if w not in dist:
                dist[w] = dist[v] + 1
                queue.append(w)
    return dist


def square_edges(n, edges):
    adj = adjacency(n, edges)
    out = set()
    for v in range(n):
        for w, d in bfs_distances(adj, v).items():
            if v < w and d <= 2:
                out.add((v, w))
    return out


def clique_number(n, edges):
    adj = adjacency(n, edges)
    for size in range(n, 0, -1):
        for combo in itertools.combinations(range(n), size):
            if all(b in adj[a] for a, b in itertools.combinations(combo, 2)):
                return size
    return 0


def min_max_back_degree(n, edges):
    """Degeneracy as the minimum over all permutations of the largest later-degree."""
    adj = adjacency(n, edges)
    best = n
    for perm in itertools.permutations(range(n)):
        pos = {v: i for i, v in enumerate(perm)}
        worst = max((sum(1 for w in adj[v] if pos[w] > pos[v]) for v in range(n)), default=0)
        best = min(best, worst)
    return best


def max_average_degree(n, edges):
    best = Fraction(0)
    for size in range(1, n + 1):
        for combo in itertools.combinations(range(n), size):
            cs = set(combo)
            m = sum(1 for a, b in edges if a in cs and b in cs)
            best = max(best, Fraction(2 * m, size))
    return best


def token_counts(n, edges, S, sequence, variant):
    """Closed-form token counts.

    primary(v): S-neighbors of v before it. secondary(v): sum of primary(y)
    over neighbors y before v. tertiary(v): earlier non-S neighbors y with at
    least 3 S-neighbors overall and at least 3 S-neighbors after y, where v is
    one of the first three of those.
    """
    adj = adjacency(n, edges)
    ss = set(S)
    pos = {v: i for i, v in enumerate(sequence)}
    primary = [sum(1 for y in adj[v] if y in ss and pos[y] < pos[v]) for v in range(n)]
    secondary = [sum(primary[y] for y in adj[v] if pos[y] < pos[v]) for v in range(n)]
    tertiary = [0] * n
    if variant == "mad_four":
        for y in range(n):
            if y in ss or len(adj[y] & ss) < 3:
                continue
            later_s = sorted((w for w in adj[y] if w in ss and pos[w] > pos[y]), key=pos.get)
            if len(later_s) >= 3:
                for w in later_s[:3]:
                    tertiary[w] += 1
    tokens = [primary[v] + secondary[v] + tertiary[v] for v in range(n)]
    return tokens, primary


def is_nice_by_permutations(n, edges, S):
    """Definition check with condition (c) decided over all n! orders."""
    adj = adjacency(n, edges)
    ss = set(S)
    sq = square_edges(n, edges)
    if any((min(a, b), max(a, b)) not in sq for a, b in itertools.combinations(sorted(ss), 2)):
        return False
    if any(adj[v] & ss for v in ss):
        return False
    for perm in itertools.permutations(range(n)):
        pos = {v: i for i, v in enumerate(perm)}
        if ss:
            spots = sorted(pos[v] for v in ss)
            if spots[-1] - spots[0] + 1 != len(spots):
                continue
        if all(sum(1 for w in adj[v] if pos[w] > pos[v]) <= 2 for v in range(n)):
            return True
    return False


def disjoint_counts(multiplicity):
    """For each pair, edges sharing no endpoint with one copy of that pair (explicit expansion)."""
    copies = [pair for pair, m in sorted(multiplicity.items()) for _ in range(m)]
    out = {}
    for i, (a, b) in enumerate(copies):
        out[(a, b)] = sum(1 for j, (c, d) in enumerate(copies) if j != i and not {a, b} & {c, d})
    return out
