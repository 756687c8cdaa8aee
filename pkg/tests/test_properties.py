"""Randomised invariants over seeded corpora of linear hypergraphs."""

from fractions import Fraction

from hypothesis import given, settings, strategies as st

from hyperchroma.coloring import chromatic_index, exact_chromatic_index, greedy_color, verify_coloring
from hyperchroma.core import (
    degrees,
    dual,
    edge_degree,
    is_linear,
    large_antirank_bounds_hold,
    line_graph,
    random_linear_hypergraph,
    stats,
    two_section,
    verify_identities,
)
from hyperchroma.symmetry import are_isomorphic

import oracles


def _simple_ok(G):
    return all(v not in G.adj[v] and all(v in G.adj[u] for u in G.adj[v]) for v in range(G.n))


def test_identity_suite_on_corpus():
    for H in oracles.random_corpus(300, seed=101):
        rep = verify_identities(H)
        assert rep.ok, rep.failures()
        deg = degrees(H)
        assert sum(deg) == sum(len(e) for e in H.edges)
        for i, e in enumerate(H.edges):
            assert edge_degree(H, i) == sum(deg[x] - 1 for x in e)


def test_degree_bound_for_positive_min_degree():
    for H in oracles.random_corpus(300, seed=103):
        s = stats(H)
        if s.min_degree >= 2:
            assert all(d * (s.antirank - 1) <= H.n - 1 for d in degrees(H))


def test_bounds_when_antirank_large():
    seen = 0
    for H in oracles.random_corpus(400, seed=107, n_range=(4, 9), mixed=False):
        s = stats(H)
        if s.antirank**2 > H.n:
            seen += 1
            ar, n = s.antirank, H.n
            assert H.m * (ar * ar - n) <= n * (ar - 1)
            assert s.max_degree <= ar
            assert large_antirank_bounds_hold(H) is True
        else:
            assert large_antirank_bounds_hold(H) is None
    assert seen > 0


def test_two_section_degree_bound_linear():
    for H in oracles.random_corpus(300, seed=109):
        s = stats(H)
        assert two_section(H).max_degree() >= (s.antirank - 1) * s.max_degree


def test_graphs_are_simple():
    for H in oracles.random_corpus(100, seed=113):
        assert _simple_ok(two_section(H)) and _simple_ok(line_graph(H))


def test_stats_ordering():
    for H in oracles.random_corpus(300, seed=127):
        s = stats(H)
        assert s.min_degree <= s.max_degree <= s.max_intersecting
        assert isinstance(s.mean_edge_size, Fraction)


def test_double_dual_isomorphic():
    checked = 0
    for H in oracles.random_corpus(200, seed=131):
        try:
            D = dual(H)
        except ValueError:
            continue
        checked += 1
        assert are_isomorphic(dual(D), H)[0]
    assert checked > 10


def test_two_section_bound_with_witness_condition():
    from hyperchroma.core import condition_star

    seen = 0
    for H in oracles.random_corpus(300, seed=137, max_edges=10):
        if condition_star(H)[0]:
            seen += 1
            assert chromatic_index(H) <= two_section(H).max_degree() + 1
    assert seen > 50


def test_near_square_uniform_bound():
    for H in oracles.random_corpus(300, seed=139, mixed=False, max_edges=12):
        k = len(H.edges[0])
        if H.n <= k * k + k - 2:
            assert chromatic_index(H) <= two_section(H).max_degree() + 1


def test_vertex_count_bound_small_degree():
    for H in oracles.random_corpus(300, seed=149, max_edges=12):
        s = stats(H)
        r = int(H.n**0.5)
        if s.max_degree**2 <= (r + 1) ** 2:
            assert chromatic_index(H) <= H.n


@settings(max_examples=80, deadline=None)
@given(st.integers(6, 12), st.integers(2, 4), st.integers(0, 2**32))
def test_exact_solver_sandwich(n, k, seed):
    cap = n * (n - 1) // (k * (k - 1))
    H = random_linear_hypergraph(n, k, min(cap, 12), seed, max_tries=200)
    assert is_linear(H)
    q, wit = exact_chromatic_index(H)
    g = greedy_color(H)
    assert verify_coloring(H, wit) and wit.num_colors == q
    assert stats(H).max_intersecting <= q <= g.num_colors


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 2**32))
def test_generator_deterministic(seed):
    a = random_linear_hypergraph(10, 3, 8, seed)
    b = random_linear_hypergraph(10, 3, 8, seed)
    assert a == b and is_linear(a)
