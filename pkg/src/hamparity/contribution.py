"""Parity of f(X): the number of (Y, Z) completions of a contributing set X.

For a vertex set X, f(X) counts ordered partitions (Y, Z) of V \\ X with
min X < min Y such that every y in Y has an odd number of arcs into Y and
every z in Z has an odd number of arcs into X u Y.  Over GF(2) these are
linear conditions on the indicator vector of Y, so f(X) mod 2 is 1 exactly
when that linear system has a unique solution.
"""

from __future__ import annotations

from dataclasses import dataclass

from .digraph import Digraph, VertexSet
from .gf2 import BitMatrix, BitVector, LinearSystem, reduce_rows, solve


def min_index(x: VertexSet) -> int:
    """Smallest 1-indexed member of ``x``; ``n + 1`` stands in for min of the empty set."""
    if x.bits == 0:
        return x.length + 1
    return (x.bits & -x.bits).bit_length()


@dataclass(frozen=True)
class ContributionSystem:
    system: LinearSystem
    subject: VertexSet
    min_x: int


def build_f_system(g_r: Digraph, x: VertexSet) -> ContributionSystem:
    """Linear system in y_1..y_n whose solutions are the Y contributing to f(X).

    Rows, in order: y_i = 0 for i in X; y_i = 0 for i <= min X; and for every
    i outside X, d_i(X) y_i + sum_j a_ij y_j = 1 + d_i(X).
    """
    n = g_r.n
    if x.length != n:
        raise ValueError(f"vertex set has length {x.length}, graph has {n} vertices")
    rows: list[int] = []
    rhs: list[int] = []
    for i in range(n):
        if (x.bits >> i) & 1:
            rows.append(1 << i)
            rhs.append(0)
    mx = min_index(x)
    for i in range(min(mx, n)):
        rows.append(1 << i)
        rhs.append(0)
    for i in range(n):
        if (x.bits >> i) & 1:
            continue
        d = (g_r.rows[i] & x.bits).bit_count() & 1
        rows.append(g_r.rows[i] ^ (d << i))
        rhs.append(1 ^ d)
    coeffs = BitMatrix(len(rows), n, tuple(rows))
    return ContributionSystem(LinearSystem(coeffs, BitVector.from_list(rhs)), x, mx)


def f_parity_bits(rows: tuple[int, ...] | list[int], n: int, x: int) -> int:
    """f(X) mod 2 on raw adjacency rows and an int indicator.

    Variables pinned to zero by the complement and order rows are substituted
    up front, so only the neighbourhood rows restricted to the free variables
    are eliminated; uniqueness then means full rank over the free set.
    """
    low = x & -x
    free = ((1 << n) - 1) & ~x & ~((low << 1) - 1)
    rhs_bit = 1 << n
    system = []
    rest = ((1 << n) - 1) & ~x
    while rest:
        lb = rest & -rest
        rest ^= lb
        i = lb.bit_length() - 1
        row = rows[i]
        d = (row & x).bit_count() & 1
        coeff = row & free
        if d:
            coeff ^= lb & free
            system.append(coeff)
        else:
            system.append(coeff | rhs_bit)
    nfree = free.bit_count()
    # pinned columns are zero in every row, so they never receive a pivot
    _, pivots, consistent = reduce_rows(system, n)
    return int(consistent and len(pivots) == nfree)


def f_parity(g_r: Digraph, x: VertexSet) -> int:
    if x.length != g_r.n:
        raise ValueError(f"vertex set has length {x.length}, graph has {g_r.n} vertices")
    return f_parity_bits(g_r.rows, g_r.n, x.bits)


def f_parity_via_system(g_r: Digraph, x: VertexSet) -> int:
    """Same value as ``f_parity`` but through the full, unreduced system."""
    space = solve(build_f_system(g_r, x).system)
    return int(space is not None and space.dimension == 0)


def is_quadratic_solution(rows: tuple[int, ...] | list[int], x: int) -> bool:
    """Every vertex of ``x`` has an odd number of arcs into ``x``."""
    s = x
    while s:
        lb = s & -s
        s ^= lb
        if not (rows[lb.bit_length() - 1] & x).bit_count() & 1:
            return False
    return True


def quadratic_residual(g_r: Digraph, x: BitVector) -> bool:
    """True iff ``x o (A x) == x`` with ``o`` the coordinate-wise product."""
    if x.length != g_r.n:
        raise ValueError(f"vector has length {x.length}, graph has {g_r.n} vertices")
    ax = g_r.adjacency.matvec(x)
    return (x & ax) == x
