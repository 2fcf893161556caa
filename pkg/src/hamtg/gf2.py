"""Exact dense linear algebra over the two-element field.

Vectors are arbitrary-precision Python integers wrapped in a fixed-length
``BitVec``: addition is integer xor, and Gaussian elimination reduces to
xor with lowest-set-bit pivoting.  All results are bit-exact.
"""

from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence


class LengthMismatchError(ValueError):
    """Operands of a GF(2) operation disagree on bit length."""


def bit_indices(x: int) -> list[int]:
    """Positions of the set bits of a nonnegative int, ascending."""
    out = []
    while x:
        low = x & -x
        out.append(low.bit_length() - 1)
        x ^= low
    return out


@dataclass(frozen=True)
class BitVec:
    """Fixed-length bit vector; bits at or beyond ``length`` are always zero."""

    length: int
    bits: int = 0

    def __post_init__(self) -> None:
        if self.length < 0:
            raise ValueError(f"negative length {self.length}")
        if self.bits < 0 or self.bits >> self.length:
            raise ValueError("set bits beyond declared length")

    @classmethod
    def from_indices(cls, length: int, indices: Iterable[int]) -> "BitVec":
        bits = 0
        for i in indices:
            if not 0 <= i < length:
                raise ValueError(f"bit index {i} out of range for length {length}")
            bits |= 1 << i
        return cls(length, bits)

    @classmethod
    def from_hex(cls, length: int, text: str) -> "BitVec":
        return cls(length, int(text, 16) if text else 0)

    def to_hex(self) -> str:
        return format(self.bits, "x")

    def get(self, i: int) -> int:
        if not 0 <= i < self.length:
            raise IndexError(f"bit index {i} out of range for length {self.length}")
        return (self.bits >> i) & 1

    def with_bit(self, i: int, value: int = 1) -> "BitVec":
        if not 0 <= i < self.length:
            raise IndexError(f"bit index {i} out of range for length {self.length}")
        if value:
            return BitVec(self.length, self.bits | (1 << i))
        return BitVec(self.length, self.bits & ~(1 << i))

    def popcount(self) -> int:
        return self.bits.bit_count()

    def indices(self) -> tuple[int, ...]:
        return tuple(bit_indices(self.bits))

    def _check_length(self, other: "BitVec") -> None:
        if self.length != other.length:
            raise LengthMismatchError(
                f"length mismatch: {self.length} vs {other.length}"
            )

    def __xor__(self, other: "BitVec") -> "BitVec":
        if not isinstance(other, BitVec):
            return NotImplemented
        self._check_length(other)
        return BitVec(self.length, self.bits ^ other.bits)

    def __and__(self, other: "BitVec") -> "BitVec":
        if not isinstance(other, BitVec):
            return NotImplemented
        self._check_length(other)
        return BitVec(self.length, self.bits & other.bits)

    def __bool__(self) -> bool:
        return self.bits != 0


@dataclass(frozen=True)
class InsertResult:
    """Outcome of a basis insertion.

    ``combination`` is the set of original indices whose xor equals the
    offered vector; it is None exactly when the vector extended the span.
    """

    extended: bool
    combination: Optional[tuple[int, ...]] = None


class Gf2Basis:
    """Incremental GF(2) basis in reduced echelon form.

    Tracks, per reduced row, its expression over the successfully inserted
    originals, so that membership queries also report the combination over
    the original vectors.  Pivot = lowest-index set bit, which makes the
    construction deterministic for a fixed insertion sequence.
    """

    def __init__(self, length: int):
        if length < 0:
            raise ValueError(f"negative length {length}")
        self.length = length
        self._rows: list[int] = []  # reduced rows, ascending pivot
        self._pivots: list[int] = []  # pivot bit of each row
        self._combos: list[int] = []  # row expression over originals, as bitmask
        self._originals: list[int] = []  # raw vectors that extended the span

    @property
    def rank(self) -> int:
        return len(self._rows)

    @property
    def originals(self) -> list[BitVec]:
        return [BitVec(self.length, o) for o in self._originals]

    def _reduce(self, r: int) -> tuple[int, int]:
        """Eliminate every existing pivot from r; returns (residual, combo)."""
        c = 0
        for k, p in enumerate(self._pivots):
            if (r >> p) & 1:
                r ^= self._rows[k]
                c ^= self._combos[k]
        return r, c

    def _check(self, v: BitVec) -> None:
        if v.length != self.length:
            raise LengthMismatchError(
                f"length mismatch: basis {self.length} vs vector {v.length}"
            )

    def insert(self, v: BitVec) -> InsertResult:
        """Insert v; reports Dependent(combination) when v is already in the span."""
        self._check(v)
        return self.insert_raw(v.bits)

    def insert_raw(self, bits: int) -> InsertResult:
        r, c = self._reduce(bits)
        if r == 0:
            return InsertResult(False, tuple(bit_indices(c)))
        combo = c ^ (1 << len(self._originals))
        pivot = (r & -r).bit_length() - 1
        # back-substitute to keep the reduced form
        for k in range(len(self._rows)):
            if (self._rows[k] >> pivot) & 1:
                self._rows[k] ^= r
                self._combos[k] ^= combo
        at = bisect_left(self._pivots, pivot)
        self._rows.insert(at, r)
        self._pivots.insert(at, pivot)
        self._combos.insert(at, combo)
        self._originals.append(bits)
        return InsertResult(True)

    def coords(self, v: BitVec) -> Optional[tuple[int, ...]]:
        """Indices of originals whose xor equals v, or None when v is outside the span."""
        self._check(v)
        return self.coords_raw(v.bits)

    def coords_raw(self, bits: int) -> Optional[tuple[int, ...]]:
        r, c = self._reduce(bits)
        if r:
            return None
        return tuple(bit_indices(c))

    def contains(self, v: BitVec) -> bool:
        self._check(v)
        r, _ = self._reduce(v.bits)
        return r == 0


def rank(vectors: Sequence[BitVec]) -> int:
    """GF(2) rank of a list of equal-length vectors."""
    if not vectors:
        return 0
    basis = Gf2Basis(vectors[0].length)
    for v in vectors:
        basis.insert(v)
    return basis.rank


@dataclass(frozen=True)
class LinearSolveResult:
    """Raw elimination outcome over int-encoded equation rows."""

    consistent: bool
    x: Optional[int]  # particular solution (free variables zero)
    nullspace: tuple[int, ...]  # basis of the homogeneous solutions
    rank: int  # coefficient-matrix rank of the rows processed


def solve_system(
    rows: Iterable[int], rhs: Iterable[int], nvars: int
) -> LinearSolveResult:
    """Solve the system given by equation rows (variable masks) and rhs bits.

    Stops at the first row that reduces to 0 = 1; the reported rank then
    covers only the rows seen up to that witness.
    """
    piv_rows: list[int] = []  # augmented rows, rhs at bit position nvars
    pivots: list[int] = []
    for row, b in zip(rows, rhs):
        if row < 0 or row >> nvars:
            raise ValueError(f"row has coefficients beyond {nvars} variables")
        aug = row | ((b & 1) << nvars)
        for k, p in enumerate(pivots):
            if (aug >> p) & 1:
                aug ^= piv_rows[k]
        var_part = aug & ((1 << nvars) - 1)
        if var_part == 0:
            if aug >> nvars:
                return LinearSolveResult(False, None, (), len(pivots))
            continue
        pivot = (var_part & -var_part).bit_length() - 1
        for k in range(len(piv_rows)):
            if (piv_rows[k] >> pivot) & 1:
                piv_rows[k] ^= aug
        at = bisect_left(pivots, pivot)
        pivots.insert(at, pivot)
        piv_rows.insert(at, aug)
    # particular solution: free variables zero, pivot variables from rhs
    x = 0
    for p, arow in zip(pivots, piv_rows):
        if arow >> nvars:
            x |= 1 << p
    pivot_set = set(pivots)
    null: list[int] = []
    for f in range(nvars):
        if f in pivot_set:
            continue
        vec = 1 << f
        for p, arow in zip(pivots, piv_rows):
            if (arow >> f) & 1:
                vec |= 1 << p
        null.append(vec)
    return LinearSolveResult(True, x, tuple(null), len(pivots))


@dataclass(frozen=True)
class Solution:
    """Solution of A·x = b: one particular x plus a homogeneous basis."""

    x: BitVec
    nullspace: tuple[BitVec, ...]
    rank: int


def solve(columns: Sequence[BitVec], b: BitVec) -> Optional[Solution]:
    """Solve A·x = b where A is given by its columns; None when inconsistent.

    Every returned solution and nullspace vector is verified bit-exactly
    against the input before being reported.
    """
    m = b.length
    for col in columns:
        if col.length != m:
            raise LengthMismatchError(
                f"length mismatch: column {col.length} vs rhs {m}"
            )
    nvars = len(columns)
    rows = []
    for j in range(m):
        r = 0
        for i, col in enumerate(columns):
            r |= ((col.bits >> j) & 1) << i
        rows.append(r)
    res = solve_system(rows, [b.get(j) for j in range(m)], nvars)
    if not res.consistent:
        return None

    def apply(x: int) -> int:
        out = 0
        for j, r in enumerate(rows):
            out |= ((r & x).bit_count() & 1) << j
        return out

    assert res.x is not None
    if apply(res.x) != b.bits:
        raise AssertionError("solver produced a non-solution")
    for vec in res.nullspace:
        if apply(vec) != 0:
            raise AssertionError("nullspace vector fails the homogeneous system")
    return Solution(
        BitVec(nvars, res.x),
        tuple(BitVec(nvars, v) for v in res.nullspace),
        res.rank,
    )
