import math
from itertools import combinations

import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

from nestchroma import constructions as C
from nestchroma.graph import (
    GraphError, are_duplicates, build_graph, closed_neighbourhood, complement, components,
    dedup, delete_vertex, girth, induced_subgraph, is_bipartite, is_connected,
    is_diamond_c4_free, is_duplicate_free, is_regular, is_weak_duplicate, leaf_classes,
    leaves, open_neighbourhood,
)
from nestchroma.canon import are_isomorphic

from conftest import graphs_up_to


@st.composite
def graphs(draw, max_n=8):
    n = draw(st.integers(0, max_n))
    pairs = list(combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True) if pairs else st.just([]))
    return build_graph(n, chosen)


def one_based(S):
    return {v + 1 for v in S}


def test_build_example_neighbourhoods(example):
    assert one_based(open_neighbourhood(example, 0)) == {2, 3}
    assert one_based(open_neighbourhood(example, 3)) == {3, 5, 6}
    assert one_based(open_neighbourhood(example, 2)) == {1, 2, 4}
    assert one_based(closed_neighbourhood(example, 2)) == {1, 2, 3, 4}


def test_build_trivial_cases():
    G = build_graph(3, [])
    assert G.num_edges == 0 and all(not open_neighbourhood(G, v) for v in range(3))
    assert build_graph(5, [(0, 1), (0, 1), (1, 2)]).num_edges == 2


@pytest.mark.parametrize("edges", [[(1, 1)], [(0, 3)], [(-1, 0)]])
def test_build_rejects(edges):
    with pytest.raises(GraphError):
        build_graph(3, edges)


def test_petersen_neighbourhoods_are_three_sets():
    P = C.petersen()
    assert all(len(open_neighbourhood(P, v)) == 3 for v in range(10))


def test_weak_duplicates_example(example):
    assert is_weak_duplicate(example, 4, 2)
    assert not is_weak_duplicate(example, 2, 4)
    assert are_duplicates(example, 4, 5)
    assert all(is_weak_duplicate(example, v, v) and are_duplicates(example, v, v) for v in range(6))


def test_petersen_has_no_weak_duplicates():
    P = C.petersen()
    assert not any(is_weak_duplicate(P, u, v) for u in range(10) for v in range(10) if u != v)


def test_c5_has_no_duplicates():
    G = C.cycle(5)
    nbhd = {v: set(open_neighbourhood(G, v)) for v in range(5)}
    for u, v in combinations(range(5), 2):
        assert nbhd[u] != nbhd[v]
        assert not are_duplicates(G, u, v)


def test_dedup_k23_is_k2():
    G = C.complete_multipartite([2, 3])
    m = dedup(G)
    # brute force: group by neighbourhood via networkx
    nxg = nx.Graph(G.edges())
    groups = {}
    for v in nxg:
        groups.setdefault(frozenset(nxg[v]), set()).add(v)
    assert sorted(map(set, m.classes), key=min) == sorted(groups.values(), key=min)
    assert m.image == C.complete(2)


def test_dedup_example_and_identity(example):
    m = dedup(example)
    assert len(m.classes) == 5 and (4, 5) in m.classes
    P = C.petersen()
    assert dedup(P).image == P and all(len(c) == 1 for c in dedup(P).classes)


def test_basic_operations():
    assert are_isomorphic(complement(C.cycle(5)), C.cycle(5))
    for v in range(6):
        assert are_isomorphic(delete_vertex(C.cycle(6), v), C.path(5))
    assert leaf_classes(C.star(3)) == 1
    assert leaves(C.star(3)) == frozenset({0, 1, 2})
    assert leaf_classes(C.path(4)) == 2
    assert sorted(map(sorted, components(C.disjoint_union(C.path(2), C.cycle(3))))) == [[0, 1], [2, 3, 4]]
    with pytest.raises(GraphError):
        induced_subgraph(C.path(3), [0, 5])


def test_structure_predicates():
    P = C.petersen()
    assert girth(P) == 5 and is_regular(P) == 3 and is_diamond_c4_free(P)
    assert not is_diamond_c4_free(C.diamond())
    assert not is_diamond_c4_free(C.cycle(4))
    assert girth(C.path(6)) == math.inf
    assert girth(C.cycle(7)) == 7 and girth(C.complete(4)) == 3
    assert is_bipartite(C.cycle(5)) is None
    A, B = is_bipartite(C.cycle(6))
    assert A | B == frozenset(range(6))
    assert is_connected(P) and not is_connected(build_graph(2))


def naive_diamond_c4_free(G):
    for quad in combinations(range(G.n), 4):
        H = induced_subgraph(G, quad)
        degs = sorted(H.degrees())
        if degs == [2, 2, 2, 2] or degs == [2, 2, 3, 3]:
            return False
    return True


def test_diamond_c4_free_matches_induced_search():
    for G in graphs_up_to(7):
        assert is_diamond_c4_free(G) == naive_diamond_c4_free(G)


def test_girth_matches_networkx():
    for G in graphs_up_to(7):
        expected = nx.girth(nx.Graph(G.edges())) if G.num_edges else math.inf
        assert girth(G) == expected


@given(graphs())
def test_weak_duplicate_symmetry_gives_duplicates(G):
    for u in range(G.n):
        for v in range(G.n):
            both = is_weak_duplicate(G, u, v) and is_weak_duplicate(G, v, u)
            assert both == are_duplicates(G, u, v)


@given(graphs())
def test_dedup_image_is_duplicate_free(G):
    m = dedup(G)
    assert is_duplicate_free(m.image)
    again = dedup(m.image)
    assert again.image == m.image and all(len(c) == 1 for c in again.classes)
    assert sorted(v for c in m.classes for v in c) == list(range(G.n))


@given(graphs())
def test_isolated_vertices_weakly_duplicate_everything(G):
    for u in range(G.n):
        if G.adj[u] == 0:
            assert all(is_weak_duplicate(G, u, v) for v in range(G.n))


@given(graphs())
def test_complement_involution_and_full_induced(G):
    assert complement(complement(G)) == G
    assert induced_subgraph(G, range(G.n)) == G


def test_regular_girth_five_duplicate_free():
    for G in graphs_up_to(7):
        if is_regular(G) and girth(G) >= 5:
            assert is_duplicate_free(G)
    for G in (C.petersen(), C.cycle(9), C.cube(4)):
        if girth(G) >= 5:
            assert is_duplicate_free(G)
