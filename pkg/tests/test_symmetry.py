import random
import time

import pytest
from hypothesis import given, settings, strategies as st
from sympy.combinatorics import Permutation as SymPerm, PermutationGroup

from hyperchroma.coloring import chromatic_index
from hyperchroma.core import Hypergraph, is_linear, parse_edges
from hyperchroma.generators import field_plane, truncated_plane, twisted_plane
from hyperchroma.symmetry import (
    EnumerationBudgetExceeded,
    Permutation,
    apply,
    are_isomorphic,
    automorphism_group,
    canonical_form,
    canonical_key,
    enumerate_Hk,
    group_closure,
    is_automorphism,
    is_maximal_linear,
)

import oracles


def test_permutation_basics():
    p = Permutation.from_cycles(9, "(4 3 5)(6 7 8)")
    assert p(4) == 3 and p(5) == 4 and p(0) == 0
    assert str(p) == "(3 5 4)(6 7 8)"
    assert (p * p.inverse()).is_identity
    q = Permutation.from_cycles(3, [[0, 1]])
    r = Permutation.from_cycles(3, [[1, 2]])
    # composition applies the right factor first
    assert (q * r)(1) == q(r(1)) == 2
    with pytest.raises(ValueError):
        Permutation((0, 0, 1))


def test_apply_examples(a3hat):
    assert apply(Permutation.identity(9), a3hat) == a3hat
    p = Permutation.from_cycles(9, "(4 3 5)(6 7 8)")
    assert apply(p, a3hat) == a3hat
    swap = Permutation.from_cycles(4, "(0 3)")
    assert apply(swap, parse_edges("012", 4)).edges == ((1, 2, 3),)
    with pytest.raises(ValueError):
        apply(Permutation.identity(3), a3hat)


def test_canonical_form_examples(a3hat, h3p):
    rng = random.Random(5)
    base = canonical_form(a3hat).hypergraph
    for _ in range(20):
        R = oracles.relabel(a3hat, oracles.random_permutation(9, rng))
        assert canonical_form(R).hypergraph == base
    assert canonical_form(h3p).hypergraph != base
    E = Hypergraph(0)
    assert canonical_form(E).hypergraph == E


def test_canonical_labelling_certifies(h3p):
    cf = canonical_form(h3p)
    assert apply(cf.labelling, h3p) == cf.hypergraph


def test_canonical_invariance_on_corpus():
    rng = random.Random(43)
    for H in oracles.random_corpus(40, seed=47):
        key = canonical_key(H)
        for _ in range(100):
            R = oracles.relabel(H, oracles.random_permutation(H.n, rng))
            assert canonical_key(R) == key


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**9), st.integers(0, 10**9))
def test_canonical_invariance_property(seed, pseed):
    H = oracles.random_corpus(1, seed=seed)[0]
    R = oracles.relabel(H, oracles.random_permutation(H.n, random.Random(pseed)))
    assert canonical_key(R) == canonical_key(H)
    ok, pi = are_isomorphic(H, R)
    assert ok and apply(pi, H) == R


def test_are_isomorphic_examples(a3hat, h3p):
    ok, pi = are_isomorphic(twisted_plane(3)[0], h3p)
    assert ok and apply(pi, twisted_plane(3)[0]) == h3p
    assert are_isomorphic(a3hat, h3p) == (False, None)
    ok, pi = are_isomorphic(h3p, h3p)
    assert ok and apply(pi, h3p) == h3p
    assert not are_isomorphic(Hypergraph(3), Hypergraph(4))[0]


def test_isomorphism_is_equivalence():
    rng = random.Random(53)
    corpus = oracles.random_corpus(30, seed=59, n_range=(5, 7), max_edges=5)
    # add relabelled copies so the relation has non-trivial classes
    corpus += [oracles.relabel(H, oracles.random_permutation(H.n, rng)) for H in corpus[:15]]
    rel = [[are_isomorphic(a, b)[0] for b in corpus] for a in corpus]
    N = len(corpus)
    for i in range(N):
        assert rel[i][i]
        for j in range(N):
            assert rel[i][j] == rel[j][i]
    for _ in range(500):
        i, j, k = (rng.randrange(N) for _ in range(3))
        if rel[i][j] and rel[j][k]:
            assert rel[i][k]


def _sympy_order(H):
    gens = [SymPerm(list(g.images)) for g in automorphism_group(H).generators]
    return PermutationGroup(gens or [SymPerm(list(range(H.n)))]).order()


@pytest.mark.parametrize(
    "build,order",
    [
        (lambda: truncated_plane(2)[0], 4),
        (lambda: truncated_plane(3)[0], 36),
        (lambda: parse_edges("012 036 048 057 147 138 156 258 234 276", 9), 12),
        (lambda: field_plane(3)[0], 432),
        (lambda: twisted_plane(4)[0], 18),
    ],
)
def test_automorphism_orders(build, order):
    H = build()
    G = automorphism_group(H)
    assert G.order == order
    assert all(is_automorphism(g, H) for g in G.generators)
    assert len(group_closure(H.n, G.generators)) == order
    assert _sympy_order(H) == order
    assert oracles.count_automorphisms(H) == order


def test_listed_automorphisms(a3hat, h3p):
    for cyc in ["(4 3 5)(6 7 8)", "(0 1)(4 5)(6 8)", "(0 1 2)(4 3 5)"]:
        assert is_automorphism(Permutation.from_cycles(9, cyc), a3hat)
    for cyc in ["(3 6)(4 7)(5 8)", "(0 1)(3 4)(6 7)"]:
        assert is_automorphism(Permutation.from_cycles(9, cyc), h3p)


def test_automorphism_orders_larger():
    assert automorphism_group(field_plane(4)[0]).order == 5760
    assert automorphism_group(twisted_plane(5)[0]).order == 16


def test_automorphism_order_matches_counter_on_corpus():
    for H in oracles.random_corpus(30, seed=61, n_range=(4, 8)):
        assert automorphism_group(H).order == oracles.count_automorphisms(H)


def test_automorphism_guard():
    with pytest.raises(ValueError):
        automorphism_group(field_plane(7)[0])


def test_enumerate_k2(a2hat):
    reps = enumerate_Hk(2)
    assert len(reps) == 1 and are_isomorphic(reps[0], a2hat)[0]


def test_enumerate_k3(a3hat, h3p):
    reps = enumerate_Hk(3)
    assert len(reps) == 2
    keys = {canonical_key(H) for H in reps}
    assert keys == {canonical_key(a3hat), canonical_key(h3p)}
    assert sorted(chromatic_index(H) for H in reps) == [4, 5]


def test_enumerate_requires_flag():
    with pytest.raises(ValueError):
        enumerate_Hk(4)
    with pytest.raises(ValueError):
        enumerate_Hk(6)
    with pytest.raises(ValueError):
        enumerate_Hk(1)


def test_enumerate_budget():
    t0 = time.monotonic()
    with pytest.raises(EnumerationBudgetExceeded) as info:
        enumerate_Hk(4, allow_large=True, time_budget=0.5)
    assert time.monotonic() - t0 < 10
    assert info.value.level >= 0


def test_maximality_examples(a3hat, h3p, a3):
    assert is_maximal_linear(h3p, 3) == (True, None)
    ok, ext = is_maximal_linear(a3hat, 3)
    assert not ok and ext in {(3, 4, 5), (6, 7, 8)}
    assert is_linear(Hypergraph(9, list(a3hat.edges) + [ext]))
    assert is_maximal_linear(a3, 3) == (True, None)


@pytest.mark.parametrize("k", [3, 4, 5])
def test_twisted_maximal_truncated_not(k):
    assert is_maximal_linear(twisted_plane(k)[0], k)[0]
    ok, ext = is_maximal_linear(truncated_plane(k)[0], k)
    assert not ok and len(ext) == k


@pytest.mark.parametrize("k", [3, 4, 5])
def test_twisted_not_isomorphic_to_truncated(k):
    assert not are_isomorphic(twisted_plane(k)[0], truncated_plane(k)[0])[0]
