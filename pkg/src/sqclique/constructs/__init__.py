"""Extremal constructions and the combinatorial subroutines they need."""

from .equitable import EquitablePartitionError, PartitionRound, equitable_partition
from .generators import (
    LabeledConstruction,
    circulant,
    example1,
    example2,
    example3,
    fat_clique,
    random_k_degenerate,
    regular_circulant_offsets,
)
from .hamilton import (
    DiracConditionError,
    cycle_edges,
    dirac_hamiltonian_cycle,
    edge_disjoint_hamiltonian_cycles,
    is_hamiltonian_cycle,
    matching_from_even_cycle,
)

__all__ = [
    "DiracConditionError",
    "EquitablePartitionError",
    "LabeledConstruction",
    "PartitionRound",
    "circulant",
    "cycle_edges",
    "dirac_hamiltonian_cycle",
    "edge_disjoint_hamiltonian_cycles",
    "equitable_partition",
    "example1",
    "example2",
    "example3",
    "fat_clique",
    "is_hamiltonian_cycle",
    "matching_from_even_cycle",
    "random_k_degenerate",
    "regular_circulant_offsets",
]
