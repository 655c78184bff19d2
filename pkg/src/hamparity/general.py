"""Parity for arbitrary digraphs by enumerating Fibonacci-many prefixes.

Every x in {0,1}^n has exactly one k in 0..n/2 for which its length-(n-k)
prefix either has weight k, or has weight k on the first n-k-1 coordinates and
a 1 in the last.  For such a prefix, the quadratic conditions of the rows where
the prefix is 1 are linear in the k remaining coordinates.  Solving those
systems lists a superset of all contributing sets, which is then filtered.
There are F(n+2) prefixes and, with a random diagonal, one candidate per
prefix in expectation.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import combinations
from typing import Iterator

from .contribution import f_parity_bits, is_quadratic_solution
from .digraph import Digraph, with_diagonal
from .gf2 import AffineSolutionSpace, BitVector, solve_rows, span_members
from .result import ParityResult, require_size, resolve_diagonal


class Family(enum.Enum):
    WEIGHT_K = "weight_k"
    WEIGHT_K_LAST_ONE = "weight_k_last_one"


@dataclass(frozen=True)
class PrefixState:
    k: int
    prefix: BitVector
    family: Family

    def __post_init__(self):
        w = self.prefix.weight()
        if self.family is Family.WEIGHT_K:
            if w != self.k:
                raise ValueError(f"weight {w} prefix in the weight-{self.k} family")
        elif self.prefix.length == 0 or self.prefix[self.prefix.length - 1] != 1 or w != self.k + 1:
            raise ValueError("last-one prefix must be weight k followed by a 1")


def fibonacci(m: int) -> int:
    """F(m) with F(1) = F(2) = 1."""
    a, b = 0, 1
    for _ in range(m):
        a, b = b, a + b
    return a


def prefix_masks(n: int) -> Iterator[tuple[int, Family, int]]:
    """``(k, family, prefix_bits)`` in (k, family, lexicographic) order."""
    bit = [1 << p for p in range(n)]
    for k in range(n // 2 + 1):
        length = n - k
        for combo in combinations(range(length), k):
            yield k, Family.WEIGHT_K, sum(map(bit.__getitem__, combo))
        if length - 1 >= k:
            last = bit[length - 1]
            for combo in combinations(range(length - 1), k):
                yield k, Family.WEIGHT_K_LAST_ONE, sum(map(bit.__getitem__, combo)) | last


def prefix_stream(n: int) -> Iterator[PrefixState]:
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    for k, fam, bits in prefix_masks(n):
        yield PrefixState(k, BitVector(n - k, bits), fam)


def prefix_count(n: int) -> int:
    return fibonacci(n + 2)


def _suffix_system(rows: tuple[int, ...], n: int, k: int, x1: int) -> list[int]:
    """Rows i with x1_i = 1, rewritten as equations in the last k coordinates.

    Suffix variable t is coordinate n-k+t; the right-hand side sits in bit k.
    """
    length = n - k
    system = []
    s = x1
    while s:
        lb = s & -s
        s ^= lb
        row = rows[lb.bit_length() - 1]
        system.append((row >> length) | ((1 ^ ((row & x1).bit_count() & 1)) << k))
    return system


def candidate_space(g_r: Digraph, p: PrefixState) -> AffineSolutionSpace | None:
    """Completions of the prefix satisfying the rows the prefix switches on.

    The returned space holds full length-n vectors (prefix followed by the
    solved suffix); ``None`` when the rows are inconsistent.
    """
    n = g_r.n
    length = p.prefix.length
    k = n - length
    if not 0 <= k <= n:
        raise ValueError(f"prefix of length {length} for a graph on {n} vertices")
    res = solve_rows(_suffix_system(g_r.rows, n, k, p.prefix.bits), k)
    if res is None:
        return None
    particular, basis = res
    return AffineSolutionSpace(
        BitVector(n, p.prefix.bits | (particular << length)),
        tuple(BitVector(n, b << length) for b in basis),
    )


def contributing_sets(g_r: Digraph) -> Iterator[int]:
    """All x with x o (A x) = x, as int indicators, listed through the prefixes."""
    n, rows = g_r.n, g_r.rows
    for k, _, x1 in prefix_masks(n):
        res = solve_rows(_suffix_system(rows, n, k, x1), k)
        if res is None:
            continue
        particular, basis = res
        length = n - k
        for y in span_members(particular, basis):
            x = x1 | (y << length)
            if is_quadratic_solution(rows, x):
                yield x


def parity_general(
    g: Digraph,
    diagonal: BitVector | None = None,
    seed: int | None = None,
    shard: tuple[int, int] = (0, 1),
) -> ParityResult:
    """Parity of the number of Hamiltonian cycles of ``g``.

    The input's self-loops are replaced by ``diagonal`` (drawn from ``seed`` when
    not given).  With ``shard=(i, m)`` only prefixes whose rank is i mod m are
    processed; merging all m shards with ``merge_results`` gives the full answer.
    """
    n = g.n
    require_size(n)
    r = resolve_diagonal(n, diagonal, seed)
    rows = with_diagonal(g, r).rows
    index, count = shard
    if not 0 <= index < count:
        raise ValueError(f"bad shard {shard}")

    parity = 0
    examined = candidates = contributing = 0
    for rank, (k, _, x1) in enumerate(prefix_masks(n)):
        if count > 1 and rank % count != index:
            continue
        examined += 1
        length = n - k
        system = []
        s = x1
        while s:
            lb = s & -s
            s ^= lb
            row = rows[lb.bit_length() - 1]
            system.append((row >> length) | ((1 ^ ((row & x1).bit_count() & 1)) << k))
        res = solve_rows(system, k)
        if res is None:
            continue
        particular, basis = res
        if not basis:
            candidates += 1
            x = x1 | (particular << length)
            if is_quadratic_solution(rows, x):
                contributing += 1
                parity ^= f_parity_bits(rows, n, x)
            continue
        for y in span_members(particular, basis):
            candidates += 1
            x = x1 | (y << length)
            if is_quadratic_solution(rows, x):
                contributing += 1
                parity ^= f_parity_bits(rows, n, x)

    return ParityResult(
        parity=parity,
        solver="general",
        diagonal=r,
        seed=seed if diagonal is None else None,
        prefixes_examined=examined,
        candidates_generated=candidates,
        contributing_count=contributing,
    )
