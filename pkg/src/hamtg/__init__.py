"""Exact GF(2) workbench for Hamiltonian time-graphs."""

from .gf2 import BitVec, Gf2Basis, LengthMismatchError, Solution, rank, solve
from .timegraph import (
    Edge,
    Graph,
    OracleScaleError,
    Permutation,
    TimeGraph,
    edge_from_index,
    edge_index,
    edge_space_size,
    hamiltonian_path_oracle,
    incident_permutations,
    is_hamiltonian_oracle,
    is_incident,
    reduce_hamp,
)
from .permvec import (
    EdgeVector,
    PairVector,
    diagonal,
    edge_indicator,
    is_closed_cycle,
    is_cycle,
    is_supported_in,
    pair_indicator,
    row_at,
    support,
    value,
    value_pair,
)
from .canonical import (
    CanonicalBasis,
    Decomposition,
    InternalInconsistencyError,
    build_canonical_basis,
    build_canonical_pair_basis,
    decompose,
    tail_sum_check,
)
from .liftbasis import Lift, base_basis, build_basis, lift_edge, lift_perm
from .solver import Decision, assemble_system, decide_hamiltonian_path, decide_time_graph

__all__ = [
    "BitVec",
    "CanonicalBasis",
    "Decision",
    "Decomposition",
    "Edge",
    "EdgeVector",
    "Gf2Basis",
    "Graph",
    "InternalInconsistencyError",
    "LengthMismatchError",
    "Lift",
    "OracleScaleError",
    "PairVector",
    "Permutation",
    "Solution",
    "TimeGraph",
    "assemble_system",
    "base_basis",
    "build_basis",
    "build_canonical_basis",
    "build_canonical_pair_basis",
    "decide_hamiltonian_path",
    "decide_time_graph",
    "decompose",
    "diagonal",
    "edge_from_index",
    "edge_index",
    "edge_indicator",
    "edge_space_size",
    "hamiltonian_path_oracle",
    "incident_permutations",
    "is_closed_cycle",
    "is_cycle",
    "is_hamiltonian_oracle",
    "is_incident",
    "is_supported_in",
    "lift_edge",
    "lift_perm",
    "pair_indicator",
    "rank",
    "reduce_hamp",
    "row_at",
    "solve",
    "support",
    "tail_sum_check",
    "value",
    "value_pair",
]
