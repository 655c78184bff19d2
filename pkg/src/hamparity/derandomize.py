"""Deterministic choice of the self-loop diagonal by conditional expectations.

The diagonal entries are fixed one at a time.  With r_1..r_{l-1} fixed, r_l
tentatively set to b and r_{l+1}..r_n left symbolic, each prefix system
becomes a linear system over the suffix coordinates *and* the symbolic
r_i.  Its solution count 2^d, divided by 2^(n-l), is the conditional expected
number of candidates that prefix contributes.  All prefixes share that
denominator, so the two branches are compared through the numerators
sum 2^d alone, kept exactly as a DyadicTally.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import total_ordering
from typing import Iterable

from .digraph import Digraph, with_diagonal
from .general import PrefixState, prefix_masks
from .gf2 import BitVector, nullity_rows
from .result import require_size


@total_ordering
class DyadicTally:
    """An exact non-negative integer kept as a multiset of powers of two."""

    __slots__ = ("counts",)

    def __init__(self, exponents: Iterable[int] = ()):
        self.counts: Counter[int] = Counter()
        for d in exponents:
            self.add(d)

    def add(self, d: int, times: int = 1) -> None:
        if d < 0:
            raise ValueError(f"negative exponent {d}")
        self.counts[d] += times

    def __iadd__(self, other: DyadicTally) -> DyadicTally:
        self.counts.update(other.counts)
        return self

    def __add__(self, other: DyadicTally) -> DyadicTally:
        out = DyadicTally()
        out.counts = self.counts + other.counts
        return out

    def shifted(self, s: int) -> DyadicTally:
        """The tally multiplied by 2^s."""
        out = DyadicTally()
        out.counts = Counter({d + s: c for d, c in self.counts.items() if c})
        return out

    def normalized(self) -> DyadicTally:
        """Carry so that every exponent occurs at most once; value unchanged."""
        out = DyadicTally()
        carry = 0
        d = 0
        top = max(self.counts, default=-1)
        while d <= top or carry:
            c = self.counts.get(d, 0) + carry
            if c & 1:
                out.counts[d] = 1
            carry = c >> 1
            d += 1
        return out

    def _bits(self) -> list[int]:
        # exponents of the binary expansion, highest first
        return sorted(self.normalized().counts, reverse=True)

    def value(self) -> int:
        return sum(c << d for d, c in self.counts.items())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, DyadicTally):
            return NotImplemented
        return self._bits() == other._bits()

    def __lt__(self, other: DyadicTally) -> bool:
        a, b = self._bits(), other._bits()
        for x, y in zip(a, b):
            if x != y:
                return x < y
        return len(a) < len(b)

    def __hash__(self):
        return hash(tuple(self._bits()))

    def __repr__(self) -> str:
        return f"DyadicTally(value={self.value()})"


def _exponent(rows: tuple[int, ...], n: int, k: int, x1: int, l: int) -> int | None:
    """Nullity over the k suffix coordinates and the n-l symbolic r_i.

    ``rows`` carries the fixed diagonal entries for vertices 1..l; entries of
    later vertices are ignored.  Suffix coordinate t is variable t, r_i
    (1-indexed i > l) is variable k + i - l - 1, and the rhs is bit k + n - l.
    """
    length = n - k
    nvars = k + n - l
    rhs_bit = 1 << nvars
    system = []
    s = x1
    while s:
        lb = s & -s
        s ^= lb
        i = lb.bit_length() - 1
        row = rows[i]
        if i < l:
            rhs = 1 ^ ((row & x1).bit_count() & 1)
            system.append((row >> length) | (rhs_bit if rhs else 0))
        else:
            rhs = 1 ^ ((row & x1 & ~lb).bit_count() & 1)
            r_var = 1 << (k + i - l)
            system.append((row >> length) | r_var | (rhs_bit if rhs else 0))
    return nullity_rows(system, nvars)


def conditional_space_exponent(g_partial: Digraph, p: PrefixState, l: int, b: int) -> int | None:
    """Exponent d with 2^d solutions for the prefix system given r_1..r_l.

    ``g_partial`` carries the fixed diagonal for vertices 1..l-1; vertex l's
    loop is set to ``b`` here (ignored when l = 0).  ``None`` means the
    conditional system is inconsistent (zero solutions).
    """
    n = g_partial.n
    if not 0 <= l <= n:
        raise ValueError(f"l = {l} outside 0..{n}")
    rows = list(g_partial.rows)
    if l >= 1:
        i = l - 1
        rows[i] = (rows[i] & ~(1 << i)) | ((b & 1) << i)
    k = n - p.prefix.length
    return _exponent(tuple(rows), n, k, p.prefix.bits, l)


def _tally(rows: tuple[int, ...], n: int, l: int) -> DyadicTally:
    tally = DyadicTally()
    for k, _, x1 in prefix_masks(n):
        d = _exponent(rows, n, k, x1, l)
        if d is not None:
            tally.add(d)
    return tally


@dataclass
class Derandomization:
    diagonal: BitVector
    #: sum over prefixes of 2^d with no diagonal entry fixed
    initial: DyadicTally
    #: per l = 1..n, the tallies for r_l = 0 and r_l = 1
    branches: list[tuple[DyadicTally, DyadicTally]] = field(default_factory=list)

    def expected_candidates(self) -> float:
        """Expected candidate count under a uniformly random diagonal."""
        n = self.diagonal.length
        return self.initial.value() / 2**n


def derandomize(g: Digraph) -> Derandomization:
    n = g.n
    require_size(n)
    rows = list(with_diagonal(g, BitVector.zeros(n)).rows)
    initial = _tally(tuple(rows), n, 0)
    branches = []
    for l in range(1, n + 1):
        i = l - 1
        t = []
        for b in (0, 1):
            rows[i] = (rows[i] & ~(1 << i)) | (b << i)
            t.append(_tally(tuple(rows), n, l))
        # ties keep the loop off
        chosen = 1 if t[0] > t[1] else 0
        rows[i] = (rows[i] & ~(1 << i)) | (chosen << i)
        branches.append((t[0], t[1]))
    diagonal = BitVector(n, sum(((rows[i] >> i) & 1) << i for i in range(n)))
    return Derandomization(diagonal, initial, branches)


def choose_diagonal(g: Digraph) -> BitVector:
    return derandomize(g).diagonal
