import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hamparity import oracle
from hamparity.contribution import (
    build_f_system,
    f_parity,
    f_parity_via_system,
    min_index,
    quadratic_residual,
)
from hamparity.digraph import Digraph, random_digraph, vertex_set, with_diagonal
from hamparity.gf2 import BitVector, solve


def test_min_index():
    assert min_index(vertex_set(6, [3, 5])) == 3
    assert min_index(vertex_set(6, [])) == 7
    assert min_index(vertex_set(6, [1])) == 1


def test_triangle_full_set_forces_zero(triangle):
    cs = build_f_system(triangle, BitVector.ones(3))
    assert cs.min_x == 1
    # complement rows and the single order row; no neighbourhood rows
    assert cs.system.coeffs.nrows == 4
    space = solve(cs.system)
    assert space is not None and space.dimension == 0
    assert space.particular == BitVector.zeros(3)
    assert f_parity(triangle, BitVector.ones(3)) == 1


def test_triangle_empty_set_inconsistent(triangle):
    cs = build_f_system(triangle, BitVector.zeros(3))
    assert cs.min_x == 4
    assert solve(cs.system) is None
    assert f_parity(triangle, BitVector.zeros(3)) == 0


@pytest.mark.parametrize("seed", range(10))
def test_full_set_always_dimension_zero(seed):
    g = random_digraph(6, 0.5, seed)
    space = solve(build_f_system(g, BitVector.ones(6)).system)
    assert space is not None and space.dimension == 0


def test_quadratic_residual_examples(triangle):
    for g in (triangle, Digraph.complete(4), random_digraph(5, 0.5, 3)):
        assert quadratic_residual(g, BitVector.zeros(g.n))
    assert quadratic_residual(triangle, BitVector.from_list([1, 1, 1]))
    assert not quadratic_residual(triangle, BitVector.from_list([0, 0, 1]))


@pytest.mark.parametrize("seed", range(24))
def test_f_parity_matches_enumeration_exhaustively(seed):
    n = 3 + seed % 7
    g = random_digraph(n, [0.2, 0.5, 0.8][seed % 3], seed)
    g_r = with_diagonal(g, BitVector(n, (seed * 2654435761) % (1 << n)))
    table = oracle.f_direct_table(g_r)
    for x in range(1 << n):
        X = BitVector(n, x)
        assert f_parity(g_r, X) == table[x], x
        assert f_parity_via_system(g_r, X) == table[x], x


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 7).flatmap(lambda n: st.tuples(
    st.lists(st.integers(0, (1 << n) - 1), min_size=n, max_size=n),
    st.integers(0, (1 << n) - 1))))
def test_f_system_solutions_are_the_contributing_y(data):
    rows, x = data
    n = len(rows)
    g = Digraph(n, tuple(rows))
    space = solve(build_f_system(g, BitVector(n, x)).system)
    got = set() if space is None else {v.bits for v in space}
    full = (1 << n) - 1
    min_x = (x & -x).bit_length() or n + 1
    expected = set()
    for y in range(1 << n):
        if y & x or not min_x < ((y & -y).bit_length() or n + 1):
            continue
        z = full ^ x ^ y
        ok = all((rows[v] & y).bit_count() % 2 for v in range(n) if (y >> v) & 1)
        ok = ok and all((rows[v] & (full ^ z)).bit_count() % 2 for v in range(n) if (z >> v) & 1)
        if ok:
            expected.add(y)
    assert got == expected


@pytest.mark.parametrize("seed", range(30))
def test_driver_identity_for_every_diagonal(seed):
    n = 2 + seed % 8
    g = random_digraph(n, 0.5, seed)
    expected = oracle.ham_parity_heldkarp(g)
    for t in range(4):
        r = BitVector(n, (seed * 7919 + t * 104729) % (1 << n))
        g_r = with_diagonal(g, r)
        total = 0
        for x in oracle.quadratic_solutions(g_r):
            assert quadratic_residual(g_r, BitVector(n, x))
            total ^= f_parity(g_r, BitVector(n, x))
        assert total == expected


@pytest.mark.parametrize("n", range(1, 9))
def test_f_of_empty_set_is_zero(n):
    g = Digraph.complete(n) if n > 1 else Digraph.from_edges(1, [(1, 1)])
    assert f_parity(g, BitVector.zeros(n)) == 0
