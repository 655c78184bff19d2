"""Parity for balanced bipartite digraphs.

With the vertices ordered V1 then V2 and a diagonal R added, fixing the V1
half x1 makes the contributing-set conditions linear in the V2 half x2:

    rows i in V1 with x1_i = 1:   (B12 x2)_i = 1 + r_i
    rows i in V2:                 x2_i * ((B21 x1)_i + r_i + 1) = 0

(the V2 rows are linear because x2_i * r_i * x2_i = r_i * x2_i over GF(2)).
Each of the 2^(n/2) choices of x1 is one Gaussian elimination, and the
solution spaces enumerate exactly the contributing sets.
"""

from __future__ import annotations

from .contribution import f_parity_bits, is_quadratic_solution
from .digraph import Digraph, Unbalanced, bipartition, with_diagonal
from .gf2 import BitVector, solve_rows, span_members
from .result import ParityResult, require_size, resolve_diagonal


def _permute_bits(bits: int, order: list[int]) -> int:
    """Bit t of the result is bit ``order[t]`` of ``bits``."""
    return sum(((bits >> v) & 1) << t for t, v in enumerate(order))


def _half_system(rows: tuple[int, ...], n: int, x1: int) -> list[int]:
    h = n // 2
    system = []
    s = x1
    while s:
        lb = s & -s
        s ^= lb
        row = rows[lb.bit_length() - 1]
        system.append((row >> h) | ((1 ^ ((row & x1).bit_count() & 1)) << h))
    for i in range(h, n):
        row = rows[i]
        c = ((row & x1).bit_count() ^ (row >> i) ^ 1) & 1
        if c:
            system.append(1 << (i - h))
    return system


def contributing_sets_bipartite(g_r: Digraph) -> list[int]:
    """Contributing sets of a graph already laid out as V1 = first half."""
    n, rows = g_r.n, g_r.rows
    h = n // 2
    out = []
    for x1 in range(1 << h):
        res = solve_rows(_half_system(rows, n, x1), h)
        if res is None:
            continue
        particular, basis = res
        out.extend(x1 | (y << h) for y in span_members(particular, basis))
    return out


def parity_bipartite(
    g: Digraph,
    seed: int | None = None,
    diagonal: BitVector | None = None,
) -> ParityResult:
    """Parity of the Hamiltonian cycle count of a bipartite digraph.

    Unbalanced inputs return parity 0 immediately.  Raises NotBipartite for an
    odd cycle and ValueError for odd n.
    """
    n = g.n
    require_size(n)
    if n % 2:
        raise ValueError(f"bipartite solver needs even n, got {n}")
    r = resolve_diagonal(n, diagonal, seed)
    seed_out = seed if diagonal is None else None
    try:
        bp = bipartition(g)
    except Unbalanced:
        return ParityResult(0, "bipartite", r, seed_out)

    order = bp.order
    h = n // 2
    rows = with_diagonal(g.relabel(order), BitVector(n, _permute_bits(r.bits, order))).rows

    parity = 0
    candidates = contributing = 0
    for x1 in range(1 << h):
        res = solve_rows(_half_system(rows, n, x1), h)
        if res is None:
            continue
        particular, basis = res
        for y in span_members(particular, basis):
            candidates += 1
            x = x1 | (y << h)
            if is_quadratic_solution(rows, x):
                contributing += 1
                parity ^= f_parity_bits(rows, n, x)

    return ParityResult(
        parity=parity,
        solver="bipartite",
        diagonal=r,
        seed=seed_out,
        prefixes_examined=1 << h,
        candidates_generated=candidates,
        contributing_count=contributing,
    )
