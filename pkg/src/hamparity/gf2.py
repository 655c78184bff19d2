"""Dense GF(2) linear algebra on bit-packed rows.

Vectors and matrix rows are Python ints: coordinate ``j`` lives in bit ``j``.
XOR of whole rows is the elimination primitive.  The public types wrap the
ints with their lengths; the ``*_rows`` functions operate on raw ints and are
what the solvers call in their inner loops.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence


@dataclass(frozen=True)
class BitVector:
    length: int
    bits: int = 0

    def __post_init__(self):
        if self.length < 0:
            raise ValueError("negative length")
        if self.bits < 0 or self.bits >> self.length:
            raise ValueError(f"bits 0b{self.bits:b} do not fit in length {self.length}")

    @classmethod
    def from_list(cls, values: Iterable[int]) -> BitVector:
        values = list(values)
        bits = 0
        for j, v in enumerate(values):
            if v not in (0, 1):
                raise ValueError(f"entry {j} is {v!r}, expected 0 or 1")
            bits |= v << j
        return cls(len(values), bits)

    @classmethod
    def zeros(cls, length: int) -> BitVector:
        return cls(length, 0)

    @classmethod
    def ones(cls, length: int) -> BitVector:
        return cls(length, (1 << length) - 1)

    def to_list(self) -> list[int]:
        return [(self.bits >> j) & 1 for j in range(self.length)]

    def __len__(self) -> int:
        return self.length

    def __getitem__(self, j: int) -> int:
        if not 0 <= j < self.length:
            raise IndexError(j)
        return (self.bits >> j) & 1

    def __iter__(self) -> Iterator[int]:
        return iter(self.to_list())

    def _check(self, other: BitVector) -> None:
        if self.length != other.length:
            raise ValueError(f"length mismatch: {self.length} vs {other.length}")

    def __xor__(self, other: BitVector) -> BitVector:
        self._check(other)
        return BitVector(self.length, self.bits ^ other.bits)

    __add__ = __xor__

    def __and__(self, other: BitVector) -> BitVector:
        self._check(other)
        return BitVector(self.length, self.bits & other.bits)

    def dot(self, other: BitVector) -> int:
        self._check(other)
        return (self.bits & other.bits).bit_count() & 1

    def weight(self) -> int:
        return self.bits.bit_count()

    def support(self) -> list[int]:
        """0-based indices of the nonzero coordinates."""
        return [j for j in range(self.length) if (self.bits >> j) & 1]

    def __str__(self) -> str:
        return "".join(str(b) for b in self.to_list())


@dataclass(frozen=True)
class BitMatrix:
    nrows: int
    ncols: int
    data: tuple[int, ...]

    def __post_init__(self):
        if len(self.data) != self.nrows:
            raise ValueError(f"expected {self.nrows} rows, got {len(self.data)}")
        limit = 1 << self.ncols
        for i, row in enumerate(self.data):
            if row < 0 or row >= limit:
                raise ValueError(f"row {i} does not fit in {self.ncols} columns")

    @classmethod
    def from_lists(cls, rows: Sequence[Sequence[int]], ncols: int | None = None) -> BitMatrix:
        if ncols is None:
            ncols = len(rows[0]) if rows else 0
        packed = []
        for i, row in enumerate(rows):
            if len(row) != ncols:
                raise ValueError(f"row {i} has {len(row)} entries, expected {ncols}")
            packed.append(BitVector.from_list(row).bits)
        return cls(len(rows), ncols, tuple(packed))

    @classmethod
    def from_vectors(cls, rows: Sequence[BitVector], ncols: int) -> BitMatrix:
        for v in rows:
            if v.length != ncols:
                raise ValueError(f"row length {v.length}, expected {ncols}")
        return cls(len(rows), ncols, tuple(v.bits for v in rows))

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> BitMatrix:
        return cls(nrows, ncols, (0,) * nrows)

    @classmethod
    def identity(cls, n: int) -> BitMatrix:
        return cls(n, n, tuple(1 << i for i in range(n)))

    @property
    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def row(self, i: int) -> BitVector:
        return BitVector(self.ncols, self.data[i])

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        if not 0 <= j < self.ncols:
            raise IndexError(j)
        return (self.data[i] >> j) & 1

    def to_lists(self) -> list[list[int]]:
        return [self.row(i).to_list() for i in range(self.nrows)]

    def matvec(self, x: BitVector) -> BitVector:
        if x.length != self.ncols:
            raise ValueError(f"vector length {x.length}, expected {self.ncols}")
        out = 0
        for i, row in enumerate(self.data):
            out |= ((row & x.bits).bit_count() & 1) << i
        return BitVector(self.nrows, out)

    def transpose(self) -> BitMatrix:
        cols = [0] * self.ncols
        for i, row in enumerate(self.data):
            for j in range(self.ncols):
                if (row >> j) & 1:
                    cols[j] |= 1 << i
        return BitMatrix(self.ncols, self.nrows, tuple(cols))


@dataclass(frozen=True)
class LinearSystem:
    """``coeffs @ x = rhs`` over GF(2)."""

    coeffs: BitMatrix
    rhs: BitVector

    def __post_init__(self):
        if self.rhs.length != self.coeffs.nrows:
            raise ValueError(
                f"rhs has length {self.rhs.length} but coeffs has {self.coeffs.nrows} rows"
            )

    @property
    def nvars(self) -> int:
        return self.coeffs.ncols

    def augmented_rows(self) -> list[int]:
        v = self.coeffs.ncols
        return [row | (((self.rhs.bits >> i) & 1) << v) for i, row in enumerate(self.coeffs.data)]

    def is_satisfied_by(self, x: BitVector) -> bool:
        return self.coeffs.matvec(x) == self.rhs


@dataclass(frozen=True)
class AffineSolutionSpace:
    """All vectors ``particular + span(basis)``."""

    particular: BitVector
    basis: tuple[BitVector, ...]

    @property
    def dimension(self) -> int:
        return len(self.basis)

    @property
    def size(self) -> int:
        return 1 << len(self.basis)

    def __iter__(self) -> Iterator[BitVector]:
        return enumerate_space(self)


# -- raw-int kernels ---------------------------------------------------------


def reduce_rows(rows: list[int], nvars: int) -> tuple[list[int], list[int], bool]:
    """Bring augmented rows to reduced row echelon form in place.

    The right-hand side of each row sits in bit ``nvars``.  Pivots are chosen
    column by column, taking the first remaining row with a nonzero entry.
    Returns ``(rows, pivot_columns, consistent)``; the first ``len(pivot_columns)``
    rows are the pivot rows, in pivot order.
    """
    m = len(rows)
    pivots = []
    r = 0
    for col in range(nvars):
        if r == m:
            break
        bit = 1 << col
        for i in range(r, m):
            if rows[i] & bit:
                break
        else:
            continue
        p = rows[i]
        if i != r:
            rows[i] = rows[r]
            rows[r] = p
        for j in range(m):
            if j != r and rows[j] & bit:
                rows[j] ^= p
        pivots.append(col)
        r += 1
    # after elimination every non-pivot row has a zero coefficient part
    consistent = not any(rows[i] for i in range(r, m))
    return rows, pivots, consistent


def solve_rows(rows: list[int], nvars: int) -> tuple[int, list[int]] | None:
    """Solve augmented rows; ``None`` when inconsistent.

    Returns the particular solution (free variables at 0) and one null-space
    basis vector per free column, in increasing column order.
    """
    rows, pivots, consistent = reduce_rows(list(rows), nvars)
    if not consistent:
        return None
    particular = 0
    for t, c in enumerate(pivots):
        particular |= ((rows[t] >> nvars) & 1) << c
    basis = []
    if len(pivots) < nvars:
        pivot_set = set(pivots)
        for f in range(nvars):
            if f in pivot_set:
                continue
            b = 1 << f
            for t, c in enumerate(pivots):
                if (rows[t] >> f) & 1:
                    b |= 1 << c
            basis.append(b)
    return particular, basis


def nullity_rows(rows: list[int], nvars: int) -> int | None:
    """Dimension of the solution space, or ``None`` when inconsistent."""
    _, pivots, consistent = reduce_rows(list(rows), nvars)
    return nvars - len(pivots) if consistent else None


def rank_rows(rows: Iterable[int], ncols: int) -> int:
    _, pivots, _ = reduce_rows(list(rows), ncols)
    return len(pivots)


def span_members(particular: int, basis: Sequence[int]) -> Iterator[int]:
    """Yield ``particular ^ sum(alpha_t * basis[t])`` for alpha in binary counting order."""
    d = len(basis)
    for alpha in range(1 << d):
        x = particular
        t = 0
        a = alpha
        while a:
            if a & 1:
                x ^= basis[t]
            a >>= 1
            t += 1
        yield x


# -- public operations ---------------------------------------------------------


def solve(system: LinearSystem) -> AffineSolutionSpace | None:
    """Solve a linear system; returns ``None`` if it has no solution."""
    v = system.nvars
    result = solve_rows(system.augmented_rows(), v)
    if result is None:
        return None
    particular, basis = result
    return AffineSolutionSpace(BitVector(v, particular), tuple(BitVector(v, b) for b in basis))


def enumerate_space(space: AffineSolutionSpace) -> Iterator[BitVector]:
    length = space.particular.length
    for x in span_members(space.particular.bits, [b.bits for b in space.basis]):
        yield BitVector(length, x)


def rank(m: BitMatrix) -> int:
    return rank_rows(m.data, m.ncols)


def determinant(m: BitMatrix) -> int:
    """Determinant mod 2: 1 exactly when the matrix is invertible over GF(2)."""
    if not m.is_square:
        raise ValueError(f"determinant of non-square {m.nrows}x{m.ncols} matrix")
    return int(rank(m) == m.nrows)
