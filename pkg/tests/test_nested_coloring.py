import pytest
from hypothesis import given, settings

from nestchroma import constructions as C
from nestchroma.graph import (
    GraphError, build_graph, is_connected, is_diamond_c4_free, is_duplicate_free,
    is_regular, isolated_vertices, leaves,
)
from nestchroma.nested_coloring import (
    DEFAULT_BRUTE_FORCE_CAP, brute_force_chromatic_number, brute_force_nested_chromatic,
    chi_nested, chromatic_number_exact, critical_vertices, first_bad_class, is_colour_nested,
    is_nested_coloring, is_nested_critical, is_nested_independent, is_vertex_critical,
    nested_chromatic_number, nested_order, restricted_growth_strings,
)

from conftest import graphs_on, graphs_up_to
from test_graph import graphs


def zero(*labels):
    return [v - 1 for v in labels]


def test_example_sets(example):
    assert not is_nested_independent(example, zero(1, 4))
    assert is_nested_independent(example, zero(3, 5, 6))
    assert nested_order(example, zero(6, 5, 3)) == zero(3, 5, 6)
    assert all(is_nested_independent(example, [v]) for v in range(6))


def test_example_colourings(example):
    bad = [zero(1, 4), zero(2), zero(3, 5, 6)]
    good = [zero(1), zero(2), zero(3, 5, 6), zero(4)]
    assert not is_nested_coloring(example, bad) and first_bad_class(example, bad) == 0
    assert is_nested_coloring(example, good)
    assert is_nested_coloring(example, [[v] for v in range(6)])


@pytest.mark.parametrize("partition", [[[0, 1]], [[0], [0, 1, 2, 3, 4, 5]], [[0, 1, 2], [], [3, 4, 5]]])
def test_non_partition_rejected(example, partition):
    with pytest.raises(GraphError):
        is_nested_coloring(example, partition)


def test_solver_example(example):
    k, col = nested_chromatic_number(example)
    assert k == 4 and len(col) == 4
    assert is_nested_coloring(example, col.classes)
    assert zero(3, 5, 6) in [list(c) for c in col.classes]
    assert chromatic_number_exact(example) == 3 and not is_colour_nested(example)
    assert brute_force_nested_chromatic(example) == 4


@pytest.mark.parametrize("n", range(3, 13))
def test_cycles(n):
    assert chi_nested(C.cycle(n)) == {3: 3, 4: 2}.get(n, n)


@pytest.mark.parametrize("n", range(1, 13))
def test_paths(n):
    want = 1 if n == 1 else 2 if n <= 4 else 4 if n == 5 else n - 2
    assert chi_nested(C.path(n)) == want


@pytest.mark.parametrize("parts", [[1], [3], [2, 3], [1, 1, 1], [2, 2, 4], [3, 1, 2, 5]])
def test_complete_multipartite(parts):
    assert chi_nested(C.complete_multipartite(parts)) == len(parts)


def test_edge_cases():
    assert chi_nested(build_graph(0)) == 0
    for n in range(1, 6):
        assert chi_nested(C.empty(n)) == 1 == brute_force_nested_chromatic(C.empty(n))
        assert chi_nested(C.complete(n)) == n == chromatic_number_exact(C.complete(n))
    assert chromatic_number_exact(C.petersen()) == 3


def test_brute_force_cap():
    with pytest.raises(ValueError):
        brute_force_nested_chromatic(C.empty(DEFAULT_BRUTE_FORCE_CAP + 1))
    assert brute_force_nested_chromatic(C.path(11), cap=11) == 9


def test_restricted_growth_strings_are_bell_numbers():
    assert [sum(1 for _ in restricted_growth_strings(n)) for n in range(1, 8)] == [1, 2, 5, 15, 52, 203, 877]


def test_exact_chi_matches_brute_force():
    for G in graphs_up_to(6):
        assert chromatic_number_exact(G) == brute_force_chromatic_number(G)


def test_colour_nested_and_criticality():
    assert is_colour_nested(C.nested_bipartite([4, 3, 3, 1], 5))
    assert all(is_colour_nested(C.complete(n)) for n in range(1, 6))
    P7 = C.path(7)
    assert is_nested_critical(P7) and not is_vertex_critical(P7)
    for n in range(1, 6):
        K = C.complete(n)
        assert is_nested_critical(K) and is_vertex_critical(K) and critical_vertices(K) == frozenset(range(n))


def test_full_nested_number_forces_nested_critical():
    for G in graphs_up_to(6):
        if chi_nested(G) == G.n:
            assert is_nested_critical(G)


def test_critical_vertex_bound():
    for G in graphs_up_to(6):
        assert len(critical_vertices(G)) <= chi_nested(G)


def test_regular_duplicate_free_iff_full():
    for G in graphs_up_to(8):
        if is_regular(G) is not None:
            assert is_duplicate_free(G) == (chi_nested(G) == G.n)


def test_diamond_c4_free_leaf_bounds():
    K2 = C.complete(2)
    for G in graphs_up_to(7, min_n=2):
        if not (is_connected(G) and is_diamond_c4_free(G)):
            continue
        ell = len(leaves(G))
        s = chi_nested(G)
        assert G.n - ell <= s <= G.n
        assert (s == G.n) == (ell == 0 or G == K2)


def test_small_nested_number_without_isolated_is_connected():
    for G in graphs_up_to(7):
        if G.n and not isolated_vertices(G) and chi_nested(G) <= 3:
            assert is_connected(G)


@given(graphs(max_n=9))
@settings(max_examples=80, deadline=None)
def test_solver_certificate(G):
    k, col = nested_chromatic_number(G)
    assert len(col) == k
    if G.n:
        assert is_nested_coloring(G, col.classes)
        assert all(nested_order(G, c) is not None for c in col.classes)
    if G.n <= 8:
        assert k == brute_force_nested_chromatic(G)
