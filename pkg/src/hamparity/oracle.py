"""Slow reference computations the fast solvers are checked against.

None of these share code with the solvers beyond the Digraph container and,
for the cycle-cover parity, the GF(2) determinant.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import permutations

import numpy as np

from .digraph import Digraph
from .gf2 import BitMatrix, determinant

BRUTE_MAX_N = 10
HELDKARP_MAX_N = 24


def _loopless_lists(g: Digraph) -> list[list[int]]:
    return [[j for j in range(g.n) if j != i and (g.rows[i] >> j) & 1] for i in range(g.n)]


def ham_count(g: Digraph) -> int:
    """Exact number of directed Hamiltonian cycles by anchored depth-first search.

    Every cycle is counted once: paths start at vertex 1 and must close back
    to it.  Self-loops are ignored.
    """
    n = g.n
    if not 2 <= n <= BRUTE_MAX_N:
        raise ValueError(f"brute-force counting supports 2 <= n <= {BRUTE_MAX_N}, got {n}")
    succ = _loopless_lists(g)
    full = (1 << n) - 1
    count = 0
    stack = [(0, 1)]
    while stack:
        v, seen = stack.pop()
        if seen == full:
            if (g.rows[v] & 1) and v != 0:
                count += 1
            continue
        for w in succ[v]:
            if not (seen >> w) & 1:
                stack.append((w, seen | (1 << w)))
    return count


def ham_count_brute(g: Digraph, K: int) -> int:
    if K < 2:
        raise ValueError(f"modulus must be >= 2, got {K}")
    return ham_count(g) % K


def ham_count_permutations(g: Digraph) -> int:
    """Hamiltonian cycles by checking all (n-1)! vertex orders starting at vertex 1."""
    n = g.n
    if not 2 <= n <= BRUTE_MAX_N:
        raise ValueError(f"brute-force counting supports 2 <= n <= {BRUTE_MAX_N}, got {n}")
    count = 0
    for rest in permutations(range(1, n)):
        tour = (0,) + rest
        if all((g.rows[tour[t]] >> tour[(t + 1) % n]) & 1 for t in range(n)):
            count += 1
    return count


def ham_parity_heldkarp(g: Digraph) -> int:
    """Parity of the Hamiltonian cycle count by the subset DP, anchored at vertex 1.

    ``ends[S]`` is a bitmask over v whose bit v is the parity of the number of
    paths from vertex 1 through exactly the vertices S ending at v.  Layers of
    equal |S| are processed together with numpy.
    """
    n = g.n
    if not 2 <= n <= HELDKARP_MAX_N:
        raise ValueError(f"Held-Karp supports 2 <= n <= {HELDKARP_MAX_N}, got {n}")
    # pred[w]: loopless in-neighbours of w
    pred = [0] * n
    for i, row in enumerate(g.rows):
        for j in range(n):
            if i != j and (row >> j) & 1:
                pred[j] |= 1 << i
    size = 1 << n
    masks = np.arange(size, dtype=np.int64)
    ends = np.zeros(size, dtype=np.int64)
    ends[1] = 1
    pop = np.bitwise_count(masks)
    with_anchor = (masks & 1) == 1
    for layer in range(1, n):
        src = masks[with_anchor & (pop == layer)]
        cur = ends[src]
        for w in range(1, n):
            wb = 1 << w
            sel = (src & wb) == 0
            s = src[sel]
            bit = (np.bitwise_count(cur[sel] & pred[w]) & 1).astype(np.int64)
            ends[s | wb] ^= bit << w
    full = size - 1
    return (int(ends[full]) & pred[0]).bit_count() & 1


def _labelings(n: int, base: int, chunk: int):
    total = base**n
    powers = base ** np.arange(n, dtype=np.int64)
    for start in range(0, total, chunk):
        idx = np.arange(start, min(start + chunk, total), dtype=np.int64)
        yield (idx[:, None] // powers[None, :]) % base


def theorem3_sum(g: Digraph, K: int, chunk: int = 1 << 16) -> int:
    """The signed sum over all (K+1)-labelings of V before division by K.

    Label 0 marks Z, labels 1..K the parts Y_1..Y_K.  Each term is
    (-1)^|Z| * prod_{z in Z} d_z(V \\ Z) * prod_k prod_{y in Y_k} d_y(Y_k).
    """
    if K < 2:
        raise ValueError(f"modulus must be >= 2, got {K}")
    n = g.n
    adj = np.array(g.adjacency.to_lists(), dtype=np.int64).reshape(n, n)
    # a single term is at most n^n in absolute value
    if n**n >= 2**62:
        raise ValueError(f"n = {n} too large for direct evaluation")
    total = 0
    for lab in _labelings(n, K + 1, chunk):
        nonz = lab != 0
        term = np.where(np.sum(~nonz, axis=1) % 2 == 0, 1, -1).astype(np.int64)
        for v in range(n):
            lv = lab[:, v : v + 1]
            target = np.where(lv == 0, nonz, lab == lv)
            term *= target.astype(np.int64) @ adj[v]
        total += int(term.sum())
    return total


def theorem3_direct(g: Digraph, K: int) -> int:
    """Number of Hamiltonian cycles mod K from the partition formula."""
    total = theorem3_sum(g, K)
    if total % K:
        raise AssertionError(f"partition sum {total} not divisible by {K}")
    return (total // K) % K


def _odd_product_table(g: Digraph) -> tuple[list[int], list[int]]:
    """For every S: parity of prod_{v in S} d_v(S), and of prod_{v in S} d_v(V \\ S)."""
    n = g.n
    full = (1 << n) - 1
    inside = [0] * (1 << n)
    outside = [0] * (1 << n)
    for s in range(1 << n):
        a = b = 1
        for v in range(n):
            if (s >> v) & 1:
                a &= (g.rows[v] & s).bit_count()
                b &= (g.rows[v] & (full ^ s)).bit_count()
        inside[s] = a & 1
        outside[s] = b & 1
    return inside, outside


def f_direct(g_r: Digraph, x: int) -> int:
    """f(X) mod 2 by enumerating every Y in V \\ X with min X < min Y."""
    n = g_r.n
    inside, outside = _odd_product_table(g_r)
    return _f_from_tables(n, x, inside, outside)


def f_direct_table(g_r: Digraph) -> list[int]:
    """f(X) mod 2 for every X, indexed by the int indicator of X."""
    n = g_r.n
    inside, outside = _odd_product_table(g_r)
    return [_f_from_tables(n, x, inside, outside) for x in range(1 << n)]


def _f_from_tables(n: int, x: int, inside: list[int], outside: list[int]) -> int:
    full = (1 << n) - 1
    rest = full ^ x
    min_x = (x & -x).bit_length() or n + 1
    acc = 0
    y = rest
    while True:
        min_y = (y & -y).bit_length() or n + 1
        if min_x < min_y:
            acc ^= inside[y] & outside[rest ^ y]
        if y == 0:
            break
        y = (y - 1) & rest
    return acc


def factored_parity_direct(g_r: Digraph) -> int:
    """sum_X f(X) prod_{x in X} d_x(X) mod 2, every sum written out."""
    n = g_r.n
    if n > 12:
        raise ValueError(f"direct factored evaluation supports n <= 12, got {n}")
    inside, outside = _odd_product_table(g_r)
    acc = 0
    for x in range(1 << n):
        if inside[x]:
            acc ^= _f_from_tables(n, x, inside, outside)
    return acc


def permanent(m: BitMatrix) -> int:
    """Permanent over the integers by expanding all permutations."""
    if not m.is_square:
        raise ValueError("permanent of a non-square matrix")
    n = m.nrows
    return sum(
        all((m.data[i] >> p[i]) & 1 for i in range(n)) for p in permutations(range(n))
    )


def cycle_cover_parity(g: Digraph) -> int:
    """Parity of the number of cycle covers (self-loops count as 1-cycles)."""
    return determinant(g.adjacency)


def quadratic_solutions(g_r: Digraph) -> list[int]:
    """Every x with x o (A x) = x, by checking all 2^n vectors."""
    n = g_r.n
    out = []
    for x in range(1 << n):
        ok = True
        for v in range(n):
            if (x >> v) & 1 and not (g_r.rows[v] & x).bit_count() & 1:
                ok = False
                break
        if ok:
            out.append(x)
    return out


def mean_solution_count(g: Digraph, trials: int, seed: int | None = None) -> Fraction:
    """Average number of contributing sets over ``trials`` random diagonals."""
    n = g.n
    if n > 16:
        raise ValueError(f"exhaustive counting supports n <= 16, got {n}")
    if trials < 1:
        raise ValueError("need at least one trial")
    xs = ((np.arange(1 << n)[:, None] >> np.arange(n)[None, :]) & 1).astype(np.int64)
    off = np.array(g.adjacency.to_lists(), dtype=np.int64).reshape(n, n)
    np.fill_diagonal(off, 0)
    base = (xs @ off.T) & 1
    rng = np.random.default_rng(seed)
    total = 0
    for _ in range(trials):
        r = rng.integers(0, 2, size=n)
        # for x_i = 1 the row needs (off-diagonal part) + r_i = 1
        bad = (xs == 1) & (((base + r[None, :]) & 1) == 0)
        total += int(np.count_nonzero(~bad.any(axis=1)))
    return Fraction(total, trials)

