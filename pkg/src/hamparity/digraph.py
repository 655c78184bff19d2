"""Directed graphs as bit-packed adjacency rows.

Vertices are 1..n at the API boundary (file format, CLI, ``degree_into``) and
0..n-1 internally, where row ``i`` has bit ``j`` set iff there is an edge
``i+1 -> j+1``.  The diagonal holds self-loops.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable

import numpy as np

from .gf2 import BitMatrix, BitVector

#: Vertex subsets are indicator vectors of length n.
VertexSet = BitVector


class ParseError(ValueError):
    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


class NotBipartite(ValueError):
    """The underlying undirected graph has an odd cycle."""


class Unbalanced(ValueError):
    """Bipartite, but no 2-colouring has classes of equal size."""


@dataclass(frozen=True)
class Digraph:
    n: int
    rows: tuple[int, ...]

    def __post_init__(self):
        if len(self.rows) != self.n:
            raise ValueError(f"expected {self.n} adjacency rows, got {len(self.rows)}")
        limit = 1 << self.n
        for i, row in enumerate(self.rows):
            if row < 0 or row >= limit:
                raise ValueError(f"row {i + 1} references a vertex outside 1..{self.n}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Digraph:
        """Build from 1-indexed ``(u, v)`` pairs; duplicates collapse."""
        rows = [0] * n
        for u, v in edges:
            if not (1 <= u <= n and 1 <= v <= n):
                raise ValueError(f"edge ({u}, {v}) outside 1..{n}")
            rows[u - 1] |= 1 << (v - 1)
        return cls(n, tuple(rows))

    @classmethod
    def from_matrix(cls, m: BitMatrix | Iterable[Iterable[int]]) -> Digraph:
        if not isinstance(m, BitMatrix):
            m = BitMatrix.from_lists([list(r) for r in m])
        if not m.is_square:
            raise ValueError("adjacency matrix must be square")
        return cls(m.nrows, m.data)

    @classmethod
    def empty(cls, n: int) -> Digraph:
        return cls(n, (0,) * n)

    @classmethod
    def complete(cls, n: int) -> Digraph:
        """Complete digraph without self-loops."""
        full = (1 << n) - 1
        return cls(n, tuple(full ^ (1 << i) for i in range(n)))

    @classmethod
    def cycle(cls, order: Iterable[int]) -> Digraph:
        """Directed cycle through the given 1-indexed vertices, in order."""
        order = list(order)
        n = len(order)
        return cls.from_edges(n, zip(order, order[1:] + order[:1]))

    @property
    def adjacency(self) -> BitMatrix:
        return BitMatrix(self.n, self.n, self.rows)

    @property
    def diagonal(self) -> BitVector:
        return BitVector(self.n, sum(((r >> i) & 1) << i for i, r in enumerate(self.rows)))

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.rows[u - 1] >> (v - 1)) & 1)

    def edges(self) -> list[tuple[int, int]]:
        """Sorted 1-indexed edge list, self-loops included."""
        return [
            (i + 1, j + 1)
            for i, row in enumerate(self.rows)
            for j in range(self.n)
            if (row >> j) & 1
        ]

    @property
    def num_edges(self) -> int:
        return sum(r.bit_count() for r in self.rows)

    def relabel(self, order: list[int]) -> Digraph:
        """Graph whose vertex ``t`` (0-based) is this graph's vertex ``order[t]``."""
        pos = {v: t for t, v in enumerate(order)}
        rows = []
        for v in order:
            row = self.rows[v]
            new = 0
            for j in range(self.n):
                if (row >> j) & 1:
                    new |= 1 << pos[j]
            rows.append(new)
        return Digraph(self.n, tuple(rows))


def vertex_set(n: int, members: Iterable[int]) -> VertexSet:
    """Indicator vector of a set of 1-indexed vertices."""
    bits = 0
    for v in members:
        if not 1 <= v <= n:
            raise ValueError(f"vertex {v} outside 1..{n}")
        bits |= 1 << (v - 1)
    return BitVector(n, bits)


def degree_into(g: Digraph, v: int, x: VertexSet) -> int:
    """Number of edges from vertex ``v`` (1-indexed) into ``x``, self-loop included."""
    if not 1 <= v <= g.n:
        raise ValueError(f"vertex {v} outside 1..{g.n}")
    if x.length != g.n:
        raise ValueError(f"vertex set has length {x.length}, graph has {g.n} vertices")
    return (g.rows[v - 1] & x.bits).bit_count()


def with_diagonal(g: Digraph, r: BitVector) -> Digraph:
    """Replace every self-loop indicator by the corresponding entry of ``r``."""
    if r.length != g.n:
        raise ValueError(f"diagonal has length {r.length}, graph has {g.n} vertices")
    rows = tuple(
        (row & ~(1 << i)) | (((r.bits >> i) & 1) << i) for i, row in enumerate(g.rows)
    )
    return Digraph(g.n, rows)


@dataclass(frozen=True)
class Bipartition:
    v1: VertexSet
    v2: VertexSet
    # 0-based vertices listed V1 first, then V2
    order: list[int] = field(compare=False)


def bipartition(g: Digraph) -> Bipartition:
    """Balanced 2-colouring of the underlying undirected graph, self-loops ignored.

    Components are coloured by BFS.  Each component prefers the orientation
    agreeing best with V1 = 1..n/2, V2 = n/2+1..n (its BFS root in V1 on ties),
    so graphs already laid out as two halves keep that layout; components are
    flipped away from their preference only as needed to balance the classes.

    Raises NotBipartite on an odd cycle and Unbalanced when no balanced
    colouring exists (including odd n).
    """
    n = g.n
    und = [0] * n
    for i, row in enumerate(g.rows):
        row &= ~(1 << i)
        und[i] |= row
        for j in range(n):
            if (row >> j) & 1:
                und[j] |= 1 << i
    color = [-1] * n
    comps: list[tuple[list[int], list[int]]] = []
    for s in range(n):
        if color[s] != -1:
            continue
        color[s] = 0
        sides: tuple[list[int], list[int]] = ([s], [])
        queue = deque([s])
        while queue:
            u = queue.popleft()
            nb = und[u]
            while nb:
                low = nb & -nb
                w = low.bit_length() - 1
                nb ^= low
                if color[w] == -1:
                    color[w] = 1 - color[u]
                    sides[color[w]].append(w)
                    queue.append(w)
                elif color[w] == color[u]:
                    raise NotBipartite(f"odd cycle through vertices {u + 1} and {w + 1}")
        # agreement with the layout V1 = 1..n/2, V2 = n/2+1..n
        keep = sum(v < n // 2 for v in sides[0]) + sum(v >= n // 2 for v in sides[1])
        comps.append(sides if 2 * keep >= len(sides[0]) + len(sides[1]) else (sides[1], sides[0]))
    if n % 2:
        raise Unbalanced(f"odd vertex count {n}")
    target = n // 2
    # reach[c] = set of achievable |V1| using the first c components
    reach = [{0}]
    for a, b in comps:
        reach.append({s + len(a) for s in reach[-1]} | {s + len(b) for s in reach[-1]})
    if target not in reach[-1]:
        raise Unbalanced("no balanced 2-colouring exists")
    flips = [False] * len(comps)
    need = target
    for c in range(len(comps) - 1, -1, -1):
        a, b = comps[c]
        # prefer the unflipped orientation; decisions are made back to front so
        # the reachable-set table can be reused
        if need - len(a) in reach[c]:
            need -= len(a)
        else:
            flips[c] = True
            need -= len(b)
    left: list[int] = []
    right: list[int] = []
    for (a, b), flip in zip(comps, flips):
        if flip:
            a, b = b, a
        left.extend(a)
        right.extend(b)
    left.sort()
    right.sort()
    v1 = BitVector(n, sum(1 << v for v in left))
    v2 = BitVector(n, sum(1 << v for v in right))
    return Bipartition(v1, v2, left + right)


# -- edge-list text format -------------------------------------------------------


def parse_edge_list(text: str) -> Digraph:
    """Parse ``n m`` followed by ``m`` lines ``u v``; ``#`` lines are comments."""
    header = None
    n = m = 0
    edges: list[tuple[int, int]] = []
    last_line = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        last_line = lineno
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if len(tokens) != 2:
            raise ParseError(lineno, f"expected two integers, got {line!r}")
        try:
            a, b = int(tokens[0]), int(tokens[1])
        except ValueError:
            raise ParseError(lineno, f"non-integer token in {line!r}") from None
        if header is None:
            if a < 0 or b < 0:
                raise ParseError(lineno, "header values must be non-negative")
            header = lineno
            n, m = a, b
            continue
        if len(edges) == m:
            raise ParseError(lineno, f"more than the declared {m} edges")
        if not (1 <= a <= n and 1 <= b <= n):
            raise ParseError(lineno, f"vertex out of range 1..{n}")
        edges.append((a, b))
    if header is None:
        raise ParseError(max(last_line, 1), "missing header line 'n m'")
    if len(edges) != m:
        raise ParseError(last_line, f"declared {m} edges, found {len(edges)}")
    return Digraph.from_edges(n, edges)


def write_edge_list(g: Digraph) -> str:
    edges = g.edges()
    lines = [f"{g.n} {len(edges)}"]
    lines.extend(f"{u} {v}" for u, v in edges)
    return "\n".join(lines) + "\n"


# -- random instances --------------------------------------------------------------


def _check_args(n: int, p: float) -> None:
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"probability {p} outside [0, 1]")


def _from_bool_matrix(m: np.ndarray) -> Digraph:
    n = m.shape[0]
    weights = 1 << np.arange(n, dtype=object)
    rows = tuple(int(np.dot(m[i].astype(object), weights)) for i in range(n))
    return Digraph(n, rows)


def random_digraph(n: int, p: float, seed: int | None = None) -> Digraph:
    """Each off-diagonal arc independently with probability ``p``; no self-loops.

    Uses numpy's PCG64 stream, so a seed reproduces the graph on every platform.
    """
    _check_args(n, p)
    rng = np.random.default_rng(seed)
    m = rng.random((n, n)) < p
    np.fill_diagonal(m, False)
    return _from_bool_matrix(m)


def random_bipartite(n: int, p: float, seed: int | None = None) -> Digraph:
    """Arcs only between ``1..n/2`` and ``n/2+1..n``, both directions sampled."""
    _check_args(n, p)
    if n % 2:
        raise ValueError(f"bipartite generator needs even n, got {n}")
    rng = np.random.default_rng(seed)
    h = n // 2
    m = np.zeros((n, n), dtype=bool)
    m[:h, h:] = rng.random((h, h)) < p
    m[h:, :h] = rng.random((h, h)) < p
    return _from_bool_matrix(m)


def random_diagonal(n: int, seed: int | None = None) -> BitVector:
    rng = np.random.default_rng(seed)
    return BitVector.from_list(int(b) for b in rng.integers(0, 2, size=n))
