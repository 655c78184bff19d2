"""Parity of the number of directed Hamiltonian cycles in O(1.619^n) time."""

from .bipartite import parity_bipartite
from .contribution import build_f_system, f_parity, min_index, quadratic_residual
from .derandomize import DyadicTally, choose_diagonal, conditional_space_exponent, derandomize
from .digraph import (
    Digraph,
    NotBipartite,
    ParseError,
    Unbalanced,
    VertexSet,
    bipartition,
    degree_into,
    parse_edge_list,
    random_bipartite,
    random_digraph,
    vertex_set,
    with_diagonal,
    write_edge_list,
)
from .general import Family, PrefixState, candidate_space, parity_general, prefix_stream
from .gf2 import (
    AffineSolutionSpace,
    BitMatrix,
    BitVector,
    LinearSystem,
    determinant,
    enumerate_space,
    rank,
    solve,
)
from .result import ParityResult

__all__ = [
    "AffineSolutionSpace",
    "BitMatrix",
    "BitVector",
    "Digraph",
    "DyadicTally",
    "Family",
    "LinearSystem",
    "NotBipartite",
    "ParityResult",
    "ParseError",
    "PrefixState",
    "Unbalanced",
    "VertexSet",
    "bipartition",
    "build_f_system",
    "candidate_space",
    "choose_diagonal",
    "conditional_space_exponent",
    "degree_into",
    "derandomize",
    "determinant",
    "enumerate_space",
    "f_parity",
    "min_index",
    "parity_bipartite",
    "parity_general",
    "parse_edge_list",
    "prefix_stream",
    "quadratic_residual",
    "random_bipartite",
    "random_digraph",
    "rank",
    "solve",
    "vertex_set",
    "with_diagonal",
    "write_edge_list",
]
