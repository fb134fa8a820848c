"""Equal-size independent partitions (equitable colorings)."""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Tuple

import networkx as nx

from ..graph import GraphError, SimpleGraph


class EquitablePartitionError(GraphError):
    pass


@dataclass
class PartitionRound:
    parts: List[Tuple[int, ...]]
    round_index: int

    def is_valid(self, conflict: SimpleGraph) -> bool:
        seen = sorted(v for part in self.parts for v in part)
        if seen != list(conflict.vertices()):
            return False
        if len({len(p) for p in self.parts}) > 1:
            return False
        return all(not conflict.has_edge(a, b) for p in self.parts for i, a in enumerate(p) for b in p[i + 1:])


def equitable_partition(conflict: SimpleGraph, part_size: int, round_index: int = 0) -> PartitionRound:
    """Split V(conflict) into independent sets of exactly ``part_size`` vertices.

    Requires ``n / part_size >= max degree + 1``, the hypothesis under which
    such a partition always exists. An edgeless conflict graph is cut into
    consecutive blocks.
    """
    n = conflict.n
    if part_size < 1 or n % part_size:
        raise EquitablePartitionError(f"part size {part_size} does not divide {n}")
    parts_needed = n // part_size
    delta = conflict.max_degree()
    if parts_needed < delta + 1:
        raise EquitablePartitionError(
            f"{parts_needed} parts < max degree + 1 = {delta + 1}; equitable partition not guaranteed"
        )
    if conflict.edge_count() == 0:
        parts = [tuple(range(i, i + part_size)) for i in range(0, n, part_size)]
        return PartitionRound(parts, round_index)

    nxg = nx.Graph()
    nxg.add_nodes_from(conflict.vertices())
    nxg.add_edges_from(conflict.edges())
    coloring = nx.equitable_color(nxg, parts_needed)
    classes: List[List[int]] = [[] for _ in range(parts_needed)]
    for v in conflict.vertices():
        classes[coloring[v]].append(v)
    parts = sorted(tuple(sorted(c)) for c in classes)
    result = PartitionRound(parts, round_index)
    if not result.is_valid(conflict):
        raise EquitablePartitionError("equitable coloring returned an invalid partition")
    return result
