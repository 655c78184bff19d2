from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Iterable

from .digraph import random_diagonal
from .gf2 import BitVector


@dataclass(frozen=True)
class ParityResult:
    """Parity of the Hamiltonian cycle count plus counters from the run.

    ``candidates_generated`` counts every vector enumerated from a solved linear
    system; ``contributing_count`` counts those that also passed the quadratic
    filter and were handed to the f(X) step.
    """

    parity: int
    solver: str
    diagonal: BitVector | None = None
    seed: int | None = None
    prefixes_examined: int = 0
    candidates_generated: int = 0
    contributing_count: int = 0

    def __post_init__(self):
        if self.contributing_count > self.candidates_generated:
            raise ValueError("more contributing sets than candidates")


def merge_results(parts: Iterable[ParityResult]) -> ParityResult:
    """Combine shard results: XOR the parities, add the counters."""
    parts = list(parts)
    if not parts:
        raise ValueError("nothing to merge")
    first = parts[0]
    return replace(
        first,
        parity=sum(p.parity for p in parts) & 1,
        prefixes_examined=sum(p.prefixes_examined for p in parts),
        candidates_generated=sum(p.candidates_generated for p in parts),
        contributing_count=sum(p.contributing_count for p in parts),
    )


def resolve_diagonal(n: int, diagonal: BitVector | None, seed: int | None) -> BitVector:
    if diagonal is not None:
        if diagonal.length != n:
            raise ValueError(f"diagonal has length {diagonal.length}, graph has {n} vertices")
        return diagonal
    return random_diagonal(n, seed)


def require_size(n: int) -> None:
    if n < 2:
        raise ValueError(f"parity solvers need at least 2 vertices, got {n}")
