"""Core graph types: simple graphs, multigraphs and vertex orders.

Vertices are dense 0-based integers. Neighbor iteration is ascending so every
downstream tie-break is deterministic.
"""

from __future__ import annotations

from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Set, Tuple, Union


class GraphError(ValueError):
    """Raised for structurally invalid graph requests."""


class LoopError(GraphError):
    """Raised when an edge from a vertex to itself is requested."""


def _pair(u: int, v: int) -> Tuple[int, int]:
    return (u, v) if u < v else (v, u)


class SimpleGraph:
    """Undirected simple graph on vertices ``0..n-1``."""

    __slots__ = ("_adj",)

    def __init__(self, n: int = 0, edges: Iterable[Tuple[int, int]] = ()) -> None:
        if n < 0:
            raise GraphError(f"vertex count must be nonnegative, got {n}")
        self._adj: List[Set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            self.add_edge(u, v)

    # construction -----------------------------------------------------
    def add_vertex(self) -> int:
        self._adj.append(set())
        return len(self._adj) - 1

    def add_vertices(self, count: int) -> List[int]:
        start = len(self._adj)
        self._adj.extend(set() for _ in range(count))
        return list(range(start, start + count))

    def add_edge(self, u: int, v: int) -> None:
        if u == v:
            raise LoopError(f"loop at vertex {u}")
        self._check(u)
        self._check(v)
        self._adj[u].add(v)
        self._adj[v].add(u)

    def remove_edge(self, u: int, v: int) -> None:
        if v not in self._adj[u]:
            raise GraphError(f"edge ({u}, {v}) not present")
        self._adj[u].discard(v)
        self._adj[v].discard(u)

    def _check(self, v: int) -> None:
        if not 0 <= v < len(self._adj):
            raise GraphError(f"vertex {v} out of range for n={len(self._adj)}")

    def copy(self) -> "SimpleGraph":
        g = SimpleGraph()
        g._adj = [set(a) for a in self._adj]
        return g

    # queries ----------------------------------------------------------
    @property
    def n(self) -> int:
        return len(self._adj)

    def __len__(self) -> int:
        return len(self._adj)

    def vertices(self) -> range:
        return range(len(self._adj))

    def neighbors(self, v: int) -> List[int]:
        return sorted(self._adj[v])

    def neighbor_set(self, v: int) -> Set[int]:
        # Callers must not mutate the returned set.
        return self._adj[v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adj[u]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def degrees(self) -> List[int]:
        return [len(a) for a in self._adj]

    def max_degree(self) -> int:
        return max((len(a) for a in self._adj), default=0)

    def min_degree(self) -> int:
        return min((len(a) for a in self._adj), default=0)

    def edges(self) -> Iterator[Tuple[int, int]]:
        for u, nbrs in enumerate(self._adj):
            for v in sorted(nbrs):
                if u < v:
                    yield (u, v)

    def edge_count(self) -> int:
        return sum(len(a) for a in self._adj) // 2

    def edge_set(self) -> Set[Tuple[int, int]]:
        return set(self.edges())

    def induced_degree(self, v: int, members: Set[int]) -> int:
        return len(self._adj[v] & members)

    def subgraph(self, members: Iterable[int]) -> Tuple["SimpleGraph", List[int]]:
        """Induced subgraph, relabelled; returns (graph, new-index -> old vertex)."""
        old = sorted(set(members))
        index = {v: i for i, v in enumerate(old)}
        h = SimpleGraph(len(old))
        for v in old:
            for w in self._adj[v]:
                if w in index and v < w:
                    h.add_edge(index[v], index[w])
        return h, old

    def bitsets(self) -> List[int]:
        """Adjacency rows as Python-int bitsets."""
        rows = []
        for nbrs in self._adj:
            row = 0
            for w in nbrs:
                row |= 1 << w
            rows.append(row)
        return rows

    def validate(self) -> None:
        n = len(self._adj)
        for v, nbrs in enumerate(self._adj):
            if v in nbrs:
                raise GraphError(f"loop at vertex {v}")
            for w in nbrs:
                if not 0 <= w < n:
                    raise GraphError(f"neighbor {w} of {v} out of range")
                if v not in self._adj[w]:
                    raise GraphError(f"asymmetric adjacency between {v} and {w}")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SimpleGraph):
            return NotImplemented
        return self._adj == other._adj

    def __repr__(self) -> str:
        return f"SimpleGraph(n={self.n}, m={self.edge_count()})"


class Multigraph:
    """Loopless multigraph stored as a multiplicity map on unordered pairs."""

    __slots__ = ("n", "_mult")

    def __init__(self, n: int = 0, multiplicity: Optional[Dict[Tuple[int, int], int]] = None) -> None:
        if n < 0:
            raise GraphError(f"vertex count must be nonnegative, got {n}")
        self.n = n
        self._mult: Dict[Tuple[int, int], int] = {}
        for (u, v), m in (multiplicity or {}).items():
            self.add_edge(u, v, m)

    def add_edge(self, u: int, v: int, count: int = 1) -> None:
        if u == v:
            raise LoopError(f"loop at vertex {u}")
        for x in (u, v):
            if not 0 <= x < self.n:
                raise GraphError(f"vertex {x} out of range for n={self.n}")
        if count < 0:
            raise GraphError("multiplicity increments must be nonnegative")
        if count:
            key = _pair(u, v)
            self._mult[key] = self._mult.get(key, 0) + count

    def set_multiplicity(self, u: int, v: int, count: int) -> None:
        if count < 0:
            raise GraphError(f"multiplicity of ({u}, {v}) would be {count}")
        key = _pair(u, v)
        if count == 0:
            self._mult.pop(key, None)
        else:
            self._mult.pop(key, None)
            self.add_edge(u, v, count)

    def mu(self, u: int, v: int) -> int:
        return self._mult.get(_pair(u, v), 0)

    def pairs(self) -> List[Tuple[int, int]]:
        return sorted(self._mult)

    def items(self) -> List[Tuple[Tuple[int, int], int]]:
        return sorted(self._mult.items())

    def edge_count(self) -> int:
        return sum(self._mult.values())

    def degree(self, v: int) -> int:
        return sum(m for (a, b), m in self._mult.items() if v in (a, b))

    def degrees(self) -> List[int]:
        deg = [0] * self.n
        for (a, b), m in self._mult.items():
            deg[a] += m
            deg[b] += m
        return deg

    def max_degree(self) -> int:
        return max(self.degrees(), default=0)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Multigraph):
            return NotImplemented
        return self.n == other.n and self._mult == other._mult

    def __repr__(self) -> str:
        return f"Multigraph(n={self.n}, pairs={len(self._mult)}, m={self.edge_count()})"


class VertexOrder:
    """A permutation of ``0..n-1`` together with its inverse."""

    __slots__ = ("sequence", "position")

    def __init__(self, sequence: Iterable[int]) -> None:
        seq = tuple(sequence)
        position = [-1] * len(seq)
        for i, v in enumerate(seq):
            if not 0 <= v < len(seq) or position[v] != -1:
                raise GraphError(f"order is not a permutation of 0..{len(seq) - 1}")
            position[v] = i
        self.sequence: Tuple[int, ...] = seq
        self.position: Tuple[int, ...] = tuple(position)

    def __len__(self) -> int:
        return len(self.sequence)

    def __iter__(self) -> Iterator[int]:
        return iter(self.sequence)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, VertexOrder):
            return NotImplemented
        return self.sequence == other.sequence

    def __repr__(self) -> str:
        return f"VertexOrder({list(self.sequence)})"

    def later_neighbors(self, g: SimpleGraph, v: int) -> List[int]:
        """Neighbors of ``v`` after it in this order, sorted by position."""
        p = self.position[v]
        return sorted((w for w in g.neighbor_set(v) if self.position[w] > p), key=self.position.__getitem__)

    def earlier_neighbors(self, g: SimpleGraph, v: int) -> List[int]:
        p = self.position[v]
        return sorted((w for w in g.neighbor_set(v) if self.position[w] < p), key=self.position.__getitem__)


# structural edits ---------------------------------------------------------

def add_edge(g: SimpleGraph, u: int, v: int) -> SimpleGraph:
    """Return a copy of ``g`` with edge ``uv`` present."""
    h = g.copy()
    h.add_edge(u, v)
    return h


def underlying_simple(h: Multigraph) -> SimpleGraph:
    return SimpleGraph(h.n, h.pairs())


def complement(g: SimpleGraph) -> SimpleGraph:
    out = SimpleGraph(g.n)
    for u in g.vertices():
        nbrs = g.neighbor_set(u)
        for v in range(u + 1, g.n):
            if v not in nbrs:
                out.add_edge(u, v)
    return out


def subdivide_all_edges(g: SimpleGraph) -> Tuple[SimpleGraph, List[int]]:
    """Replace every edge ``uv`` by a path ``u-x-v``.

    Original vertices keep their indices; the subdivision vertex of the i-th
    edge in ``g.edges()`` order is ``g.n + i``. Returns the new graph and the
    list of subdivision vertices.
    """
    edges = list(g.edges())
    out = SimpleGraph(g.n + len(edges))
    new = []
    for i, (u, v) in enumerate(edges):
        x = g.n + i
        out.add_edge(u, x)
        out.add_edge(x, v)
        new.append(x)
    return out, new


def contract_edge(g: SimpleGraph, u: int, v: int, multigraph: bool = False) -> Union[SimpleGraph, Multigraph]:
    """Contract edge ``uv`` into ``u``.

    Vertex ``v`` disappears and indices above ``v`` shift down by one. With
    ``multigraph=True`` parallel edges created by the merge are kept as
    multiplicities; otherwise they collapse.
    """
    if not g.has_edge(u, v):
        raise GraphError(f"cannot contract ({u}, {v}): not an edge")

    def relabel(x: int) -> int:
        x = u if x == v else x
        return x - 1 if x > v else x

    counts: Dict[Tuple[int, int], int] = {}
    for a, b in g.edges():
        if {a, b} == {u, v}:
            continue
        key = _pair(relabel(a), relabel(b))
        counts[key] = counts.get(key, 0) + 1
    if multigraph:
        return Multigraph(g.n - 1, counts)
    return SimpleGraph(g.n - 1, counts.keys())


def is_independent(g: SimpleGraph, members: Iterable[int]) -> bool:
    ms = set(members)
    return all(not (g.neighbor_set(v) & ms) for v in ms)


def is_clique(g: SimpleGraph, members: Sequence[int]) -> bool:
    ms = list(members)
    return all(g.has_edge(a, b) for i, a in enumerate(ms) for b in ms[i + 1:])
