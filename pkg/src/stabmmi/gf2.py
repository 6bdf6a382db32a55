"""Bit-packed GF(2) vectors, matrices, and subspace lattice operations.

Rows are stored as Python integers with bit ``i`` holding column ``i``
(little-endian), so row elimination is a single word-parallel XOR.
Subspaces are kept in reduced row-echelon form with sorted pivot columns,
which makes equality a plain tuple comparison.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator


def _popcount(x: int) -> int:
    return bin(x).count("1")


@dataclass(frozen=True)
class BitVector:
    """A vector in Z_2^len; bit i of `bits` is coordinate i."""

    len: int
    bits: int

    def __post_init__(self) -> None:
        if self.len < 0:
            raise ValueError("negative length")
        if self.bits >> self.len:
            raise ValueError("set bits beyond vector length")

    def __xor__(self, other: "BitVector") -> "BitVector":
        if self.len != other.len:
            raise ValueError("length mismatch")
        return BitVector(self.len, self.bits ^ other.bits)

    def dot(self, other: "BitVector") -> int:
        if self.len != other.len:
            raise ValueError("length mismatch")
        return _popcount(self.bits & other.bits) & 1

    def get(self, i: int) -> int:
        if not 0 <= i < self.len:
            raise IndexError(i)
        return (self.bits >> i) & 1

    def __str__(self) -> str:
        return "".join(str(self.get(i)) for i in range(self.len))


@dataclass(frozen=True)
class BitMatrix:
    """A matrix over GF(2); `rows[i]` packs row i, bit j = column j."""

    rows: tuple[int, ...]
    cols: int

    def __post_init__(self) -> None:
        if self.cols < 0:
            raise ValueError("negative column count")
        for r in self.rows:
            if r >> self.cols:
                raise ValueError("row has bits beyond column count")

    @staticmethod
    def from_rows(rows: Iterable[Iterable[int]], cols: int | None = None) -> "BitMatrix":
        packed = []
        width = cols
        for row in rows:
            bits = list(row)
            if width is None:
                width = len(bits)
            elif len(bits) != width:
                raise ValueError("ragged rows")
            packed.append(sum(1 << i for i, b in enumerate(bits) if b & 1))
        return BitMatrix(tuple(packed), width or 0)

    @staticmethod
    def zero(rows: int, cols: int) -> "BitMatrix":
        return BitMatrix((0,) * rows, cols)

    @staticmethod
    def identity(n: int) -> "BitMatrix":
        return BitMatrix(tuple(1 << i for i in range(n)), n)

    @property
    def nrows(self) -> int:
        return len(self.rows)

    def get(self, i: int, j: int) -> int:
        if not 0 <= j < self.cols:
            raise IndexError(j)
        return (self.rows[i] >> j) & 1

    def row_vectors(self) -> Iterator[BitVector]:
        for r in self.rows:
            yield BitVector(self.cols, r)

    def __str__(self) -> str:
        return "\n".join(str(v) for v in self.row_vectors())


def transpose(m: BitMatrix) -> BitMatrix:
    cols = []
    for j in range(m.cols):
        cols.append(sum(((r >> j) & 1) << i for i, r in enumerate(m.rows)))
    return BitMatrix(tuple(cols), m.nrows)


def rref(m: BitMatrix) -> tuple[BitMatrix, list[int]]:
    """Reduced row echelon form with zero rows dropped.

    Returns the reduced matrix and the (strictly increasing) pivot columns.
    """
    rows = list(m.rows)
    pivots: list[int] = []
    r = 0
    for c in range(m.cols):
        pivot_row = next((i for i in range(r, len(rows)) if (rows[i] >> c) & 1), None)
        if pivot_row is None:
            continue
        rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        for i in range(len(rows)):
            if i != r and (rows[i] >> c) & 1:
                rows[i] ^= rows[r]
        pivots.append(c)
        r += 1
    return BitMatrix(tuple(rows[:r]), m.cols), pivots


def rank(m: BitMatrix) -> int:
    rows = list(m.rows)
    r = 0
    for c in range(m.cols):
        pivot_row = next((i for i in range(r, len(rows)) if (rows[i] >> c) & 1), None)
        if pivot_row is None:
            continue
        rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        piv = rows[r]
        for i in range(r + 1, len(rows)):
            if (rows[i] >> c) & 1:
                rows[i] ^= piv
        r += 1
        if r == len(rows):
            break
    return r


@dataclass(frozen=True)
class Subspace:
    """A subspace of Z_2^ambient with a canonical RREF basis."""

    ambient: int
    basis: BitMatrix = field(default=None)  # type: ignore[assignment]

    def __post_init__(self) -> None:
        if self.basis is None:
            object.__setattr__(self, "basis", BitMatrix((), self.ambient))
        if self.basis.cols != self.ambient:
            raise ValueError("basis width must equal ambient dimension")
        reduced, _ = rref(self.basis)
        object.__setattr__(self, "basis", reduced)

    @staticmethod
    def zero(ambient: int) -> "Subspace":
        return Subspace(ambient, BitMatrix((), ambient))

    @staticmethod
    def span(ambient: int, vectors: Iterable[int]) -> "Subspace":
        return Subspace(ambient, BitMatrix(tuple(vectors), ambient))

    @property
    def dim(self) -> int:
        return self.basis.nrows

    def contains(self, v: int) -> bool:
        if v >> self.ambient:
            raise ValueError("vector outside ambient space")
        for row in self.basis.rows:
            low = row & -row  # pivot bit (lowest set bit of an RREF row)
            if v & low:
                v ^= row
        return v == 0

    def elements(self) -> Iterator[int]:
        """All 2^dim member vectors (small spaces only)."""
        for mask in range(1 << self.dim):
            v = 0
            for i, row in enumerate(self.basis.rows):
                if (mask >> i) & 1:
                    v ^= row
            yield v

    def __add__(self, other: "Subspace") -> "Subspace":
        return sum_spaces(self, other)

    def __and__(self, other: "Subspace") -> "Subspace":
        return intersect(self, other)


def column_space(m: BitMatrix) -> Subspace:
    return Subspace(m.nrows, transpose(m))


def _check_ambient(u: Subspace, v: Subspace) -> None:
    if u.ambient != v.ambient:
        raise ValueError("ambient dimension mismatch")


def sum_spaces(u: Subspace, v: Subspace) -> Subspace:
    _check_ambient(u, v)
    return Subspace(u.ambient, BitMatrix(u.basis.rows + v.basis.rows, u.ambient))


def intersect(u: Subspace, v: Subspace) -> Subspace:
    """Subspace intersection via Zassenhaus block reduction.

    Rows [x | x] for x in u and [y | 0] for y in v are reduced together;
    rows whose left block vanished have right blocks spanning u ∩ v.
    """
    _check_ambient(u, v)
    n = u.ambient
    stacked = [r | (r << n) for r in u.basis.rows] + list(v.basis.rows)
    reduced, _ = rref(BitMatrix(tuple(stacked), 2 * n))
    low_mask = (1 << n) - 1
    inter = [r >> n for r in reduced.rows if not (r & low_mask)]
    return Subspace(n, BitMatrix(tuple(inter), n))


def triple_intersect(u: Subspace, v: Subspace, w: Subspace) -> Subspace:
    return intersect(intersect(u, v), w)


def is_distributive(u: Subspace, v: Subspace, w: Subspace) -> bool:
    """Whether (u∩w + v∩w) == (u+v)∩w, checked in all three arrangements.

    The single identity is conjecturally permutation-invariant; all three
    are evaluated and their agreement asserted rather than assumed.
    """
    _check_ambient(u, v)
    _check_ambient(u, w)

    def one(a: Subspace, b: Subspace, c: Subspace) -> bool:
        return sum_spaces(intersect(a, c), intersect(b, c)) == intersect(sum_spaces(a, b), c)

    results = (one(u, v, w), one(w, v, u), one(u, w, v))
    assert len(set(results)) == 1, "distributivity disagreed across permutations"
    return results[0]
