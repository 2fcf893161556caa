"""Linear-feasibility decision procedure for Hamiltonian paths.

Reduce the graph to a time-graph, take a basis {g_i} of the order-n pair
span, and ask whether some coefficient vector has total parity 1 while the
combination vanishes on every row indexed by a missing edge.  A graph with
a Hamiltonian path always yields a solution (the indicator of the path's
permutation), so the procedure never answers "no" on a yes-instance.  A
"yes" on a no-instance is possible only if the open conjectures fail, and
is surfaced as a counterexample candidate rather than an error.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .canonical import InternalInconsistencyError
from .gf2 import bit_indices, solve_system
from .liftbasis import build_basis
from .timegraph import (
    Graph,
    Permutation,
    TimeGraph,
    edge_index,
    edge_space_size,
    incident_edges,
    reduce_hamp,
)


@dataclass(frozen=True)
class SystemRow:
    coeffs: int  # bitmask over basis coefficients
    rhs: int
    tag: str  # "value" or "pair(e,e')" with edge indices


@dataclass(frozen=True)
class LinearSystem:
    n: int
    nvars: int
    rows: tuple[SystemRow, ...]
    raw_rows: int  # generated count before zero-drop and dedup


@dataclass(frozen=True)
class Decision:
    answer: bool
    witness: Optional[tuple[int, ...]]  # basis indices with coefficient 1
    nvars: int
    rows: int
    raw_rows: int
    rank: int


def incidence_columns(n: int, basis_perms: Sequence[Permutation]) -> list[int]:
    """Per edge index, the bitmask of basis permutations incident on it."""
    cols = [0] * edge_space_size(n)
    for i, p in enumerate(basis_perms):
        if len(p) != n:
            raise ValueError(f"basis permutation {p} is not of order {n}")
        bit = 1 << i
        for e in incident_edges(p):
            cols[edge_index(e, n)] |= bit
    return cols


def assemble_system(G: TimeGraph, basis_perms: Sequence[Permutation]) -> LinearSystem:
    """One parity-1 value row plus, for every missing edge e and every edge
    e', the constraint that the combination vanishes at (e, e').

    The pair constraint coefficient for basis element i is 1 exactly when
    both e and e' are incident on permutation i, so each row is the AND of
    two incidence columns.  All-zero rows are dropped and duplicate rows
    are emitted once; both are pure optimizations.
    """
    n = G.n
    size = edge_space_size(n)
    nvars = len(basis_perms)
    cols = incidence_columns(n, basis_perms)
    rows = [SystemRow((1 << nvars) - 1, 1, "value")]
    complement = G.complement_indices()
    raw = 1 + len(complement) * size
    seen: set[int] = set()
    for e in complement:
        ce = cols[e]
        if ce == 0:
            continue
        for e2 in range(size):
            m = ce & cols[e2]
            if m == 0 or m in seen:
                continue
            seen.add(m)
            rows.append(SystemRow(m, 0, f"pair({e},{e2})"))
    return LinearSystem(n, nvars, tuple(rows), raw)


def decide_time_graph(
    G: TimeGraph, basis_perms: Sequence[Permutation]
) -> Decision:
    """Decide feasibility of the assembled system for a time-graph."""
    system = assemble_system(G, basis_perms)
    res = solve_system(
        (r.coeffs for r in system.rows),
        (r.rhs for r in system.rows),
        system.nvars,
    )
    if not res.consistent:
        return Decision(
            False, None, system.nvars, len(system.rows), system.raw_rows, res.rank
        )
    x = res.x
    assert x is not None
    for r in system.rows:
        if (x & r.coeffs).bit_count() & 1 != r.rhs:
            raise InternalInconsistencyError("witness fails the assembled system")
    return Decision(
        True,
        tuple(bit_indices(x)),
        system.nvars,
        len(system.rows),
        system.raw_rows,
        res.rank,
    )


def decide_hamiltonian_path(
    g: Graph,
    cache_dir: Optional[str] = None,
    cap: Optional[int] = None,
) -> Decision:
    """Full pipeline: reduce, build the pair basis, assemble, solve."""
    basis_perms = build_basis(g.n, cache_dir=cache_dir, cap=cap)
    return decide_time_graph(reduce_hamp(g), basis_perms)
