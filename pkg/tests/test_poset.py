import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from scipy.optimize import linear_sum_assignment
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import maximum_bipartite_matching

from nestchroma import constructions as C
from nestchroma.canon import are_isomorphic
from nestchroma.graph import build_graph, dedup, is_duplicate_free
from nestchroma.poset import (
    DuplicateVerticesError, Poset, PosetError, antichain_poset, brute_force_max_matching_size,
    brute_force_width, chain_poset, height, hasse_dot, hopcroft_karp, is_isomorphic,
    max_matching, min_chain_cover, poset_from_relations, split_graph, transitive_closure,
    weak_duplicate_poset, width,
)

from conftest import graphs_up_to


@st.composite
def posets(draw, max_m=10):
    # a random DAG on a random linear extension, then closed
    m = draw(st.integers(1, max_m))
    rel = [(p, q) for p in range(m) for q in range(p + 1, m) if draw(st.booleans())]
    perm = draw(st.permutations(range(m)))
    return poset_from_relations(m, [(perm[p], perm[q]) for p, q in rel])


@st.composite
def bipartite_adjacency(draw):
    nl = draw(st.integers(0, 9))
    nr = draw(st.integers(0, 9))
    adj = [sorted(draw(st.sets(st.integers(0, nr - 1), max_size=nr))) if nr else [] for _ in range(nl)]
    return adj, nr


def test_poset_validation():
    with pytest.raises(PosetError):
        Poset(np.array([[True]]))
    with pytest.raises(PosetError):
        Poset(np.array([[False, True], [True, False]]))
    with pytest.raises(PosetError):
        Poset(np.array([[0, 1, 0], [0, 0, 1], [0, 0, 0]], dtype=bool))


def test_example_poset(example):
    m = dedup(example)
    P = weak_duplicate_poset(m.image)
    cls = m.class_of()
    three, five = cls[2], cls[4]
    assert P.less(three, five)
    assert len(max_matching(P)) == 1
    assert len(min_chain_cover(P).chains) == 4
    assert brute_force_max_matching_size(P) == 1


def test_petersen_poset_is_antichain():
    P = weak_duplicate_poset(C.petersen())
    assert not P.lt.any()
    count, witness = width(P)
    assert count == 10 and sorted(witness) == list(range(10))


def test_duplicates_rejected_with_pair(example):
    with pytest.raises(DuplicateVerticesError) as err:
        weak_duplicate_poset(example)
    assert set(err.value.pair) == {4, 5}


def test_k3_plus_k1_realises_dual_claw():
    claw = poset_from_relations(4, [(0, 1), (0, 2), (0, 3)])
    G = C.disjoint_union(C.complete(3), C.complete(1))
    assert is_isomorphic(weak_duplicate_poset(G), claw.dual())
    assert not is_isomorphic(weak_duplicate_poset(G), claw)


@pytest.mark.parametrize("m", [1, 2, 3, 6])
def test_chain_and_antichain(m):
    ch, an = chain_poset(m), antichain_poset(m)
    assert len(max_matching(ch)) == m - 1 and len(max_matching(an)) == 0
    assert [list(c) for c in min_chain_cover(ch).chains] == [list(range(m))]
    assert len(min_chain_cover(an).chains) == m
    assert width(ch)[0] == 1 and width(an)[0] == m
    assert height(ch) == m - 1 and height(an) == 0


@given(posets())
@settings(max_examples=150, deadline=None)
def test_dilworth_against_subset_oracle(P):
    count, witness = width(P)
    cover = min_chain_cover(P)
    M = max_matching(P)
    assert count == brute_force_width(P) == len(cover.chains) == P.m - len(M)
    assert len(witness) == count and P.is_antichain(witness)
    assert sorted(v for c in cover.chains for v in c) == list(range(P.m))
    assert all(P.is_chain(c) for c in cover.chains)
    assert all(P.less(p, q) for p, q in M.pairs)
    starts = [c[0] for c in cover.chains]
    assert starts == sorted(starts)


@given(posets(max_m=7))
@settings(max_examples=60, deadline=None)
def test_matching_size_against_exhaustive_search(P):
    assert len(max_matching(P)) == brute_force_max_matching_size(P)


@given(bipartite_adjacency())
@settings(max_examples=200, deadline=None)
def test_hopcroft_karp_against_scipy(case):
    adj, nr = case
    mate = hopcroft_karp(adj, nr)
    used = [w for w in mate if w >= 0]
    assert len(used) == len(set(used))
    assert all(w in adj[u] for u, w in enumerate(mate) if w >= 0)
    if not adj or not nr:
        assert not used
        return
    dense = np.zeros((len(adj), nr))
    for u, ws in enumerate(adj):
        dense[u, ws] = 1
    ref = maximum_bipartite_matching(csr_matrix(dense), perm_type="column")
    assert len(used) == int((ref >= 0).sum())
    rows, cols = linear_sum_assignment(-dense)
    assert len(used) == int(dense[rows, cols].sum())


@given(posets())
@settings(max_examples=50, deadline=None)
def test_transitive_closure_idempotent(P):
    once = transitive_closure(P.lt)
    assert np.array_equal(once, P.lt)
    assert np.array_equal(transitive_closure(once), once)


@given(posets())
@settings(max_examples=50, deadline=None)
def test_dual_swaps_order(P):
    D = P.dual()
    assert np.array_equal(D.lt, P.lt.T)
    assert width(D)[0] == width(P)[0] and height(D) == height(P)


def test_height_bound_exhaustive():
    for G in graphs_up_to(8):
        if is_duplicate_free(G):
            assert height(weak_duplicate_poset(G)) <= (G.n - 1) // 2


def test_split_graph_shape():
    P = poset_from_relations(3, [(0, 1), (1, 2)])
    assert split_graph(P) == [[1, 2], [2], []]


def test_hasse_dot_only_covers():
    P = chain_poset(3)
    dot = hasse_dot(P)
    assert dot.startswith("digraph") and '"0" -> "1"' in dot and '"1" -> "2"' in dot
    assert '"0" -> "2"' not in dot
