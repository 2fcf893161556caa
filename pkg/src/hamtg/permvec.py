"""Permutation indicator vectors over the edge space and the edge-pair space.

An EdgeVector lives in B^{E(n)} (length n^2(n-1)); a PairVector lives in
B^{E(n) x E(n)}, stored row-major as one integer so that a row extraction
is a contiguous slice.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .gf2 import BitVec, bit_indices
from .timegraph import (
    Edge,
    Permutation,
    TimeGraph,
    check_permutation,
    edge_from_index,
    edge_index,
    edge_space_size,
    incident_mask,
)


@dataclass(frozen=True)
class EdgeVector:
    n: int
    bits: BitVec

    def __post_init__(self) -> None:
        if self.bits.length != edge_space_size(self.n):
            raise ValueError(
                f"edge vector for order {self.n} must have length "
                f"{edge_space_size(self.n)}, got {self.bits.length}"
            )

    @classmethod
    def zero(cls, n: int) -> "EdgeVector":
        return cls(n, BitVec(edge_space_size(n)))

    @classmethod
    def from_raw(cls, n: int, raw: int) -> "EdgeVector":
        return cls(n, BitVec(edge_space_size(n), raw))

    def get(self, e: Edge) -> int:
        return self.bits.get(edge_index(e, self.n))

    def is_zero(self) -> bool:
        return self.bits.bits == 0

    def __xor__(self, other: "EdgeVector") -> "EdgeVector":
        if not isinstance(other, EdgeVector) or other.n != self.n:
            return NotImplemented
        return EdgeVector(self.n, self.bits ^ other.bits)


@dataclass(frozen=True)
class PairVector:
    n: int
    bits: BitVec  # position edge_index(e) * L + edge_index(e'), L = n^2(n-1)

    def __post_init__(self) -> None:
        size = edge_space_size(self.n) ** 2
        if self.bits.length != size:
            raise ValueError(
                f"pair vector for order {self.n} must have length {size}, "
                f"got {self.bits.length}"
            )

    @classmethod
    def zero(cls, n: int) -> "PairVector":
        return cls(n, BitVec(edge_space_size(n) ** 2))

    @classmethod
    def from_raw(cls, n: int, raw: int) -> "PairVector":
        return cls(n, BitVec(edge_space_size(n) ** 2, raw))

    def get(self, e: Edge, e2: Edge) -> int:
        size = edge_space_size(self.n)
        return self.bits.get(edge_index(e, self.n) * size + edge_index(e2, self.n))

    def is_zero(self) -> bool:
        return self.bits.bits == 0

    def __xor__(self, other: "PairVector") -> "PairVector":
        if not isinstance(other, PairVector) or other.n != self.n:
            return NotImplemented
        return PairVector(self.n, self.bits ^ other.bits)


def edge_indicator(p: Permutation) -> EdgeVector:
    """Indicator of the edges incident on p; exactly one bit per layer."""
    check_permutation(p)
    return EdgeVector.from_raw(len(p), incident_mask(p))


def pair_indicator(p: Permutation) -> PairVector:
    """Indicator of ordered pairs of edges both incident on p."""
    check_permutation(p)
    n = len(p)
    size = edge_space_size(n)
    inc = incident_mask(p)
    raw = 0
    for ei in bit_indices(inc):
        raw |= inc << (ei * size)
    return PairVector.from_raw(n, raw)


def diagonal(g: PairVector) -> EdgeVector:
    """Diagonal extraction g(e, e); linear in g."""
    size = edge_space_size(g.n)
    raw = 0
    gb = g.bits.bits
    for e in range(size):
        raw |= ((gb >> (e * (size + 1))) & 1) << e
    return EdgeVector.from_raw(g.n, raw)


def row_at(g: PairVector, e: Edge) -> EdgeVector:
    """Row extraction e' -> g(e, e'); linear in g."""
    size = edge_space_size(g.n)
    ei = edge_index(e, g.n)
    raw = (g.bits.bits >> (ei * size)) & ((1 << size) - 1)
    return EdgeVector.from_raw(g.n, raw)


def value(f: EdgeVector) -> int:
    """Parity of the layer-1 entries; 1 on every single-permutation indicator."""
    layer1 = (1 << (f.n * f.n)) - 1
    return (f.bits.bits & layer1).bit_count() & 1


def value_pair(g: PairVector) -> int:
    return value(diagonal(g))


def is_cycle(v: Union[EdgeVector, PairVector]) -> bool:
    """A vector with value 0."""
    if isinstance(v, PairVector):
        return value_pair(v) == 0
    return value(v) == 0


def is_closed_cycle(g: PairVector) -> bool:
    """A pair vector whose diagonal image is identically zero."""
    return diagonal(g).is_zero()


def support_mask(g: PairVector) -> int:
    """Bitmask over edge indices whose row is nonzero."""
    size = edge_space_size(g.n)
    row = (1 << size) - 1
    gb = g.bits.bits
    out = 0
    for e in range(size):
        if (gb >> (e * size)) & row:
            out |= 1 << e
    return out


def support(g: PairVector) -> frozenset[Edge]:
    """Edges that support g, i.e. whose row carries some 1."""
    return frozenset(
        edge_from_index(e, g.n) for e in bit_indices(support_mask(g))
    )


def is_supported_in(g: PairVector, G: TimeGraph) -> bool:
    """Whether every supporting edge of g lies in G."""
    if g.n != G.n:
        raise ValueError(f"order mismatch: {g.n} vs {G.n}")
    return support_mask(g) & ~G.edges == 0


def is_symmetric(g: PairVector) -> bool:
    size = edge_space_size(g.n)
    gb = g.bits.bits
    for a in range(size):
        for b in range(a + 1, size):
            if ((gb >> (a * size + b)) & 1) != ((gb >> (b * size + a)) & 1):
                return False
    return True
