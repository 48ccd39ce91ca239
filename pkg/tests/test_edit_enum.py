import random
from itertools import combinations

import pytest

from edit_enum import (
    _minimal_sets_scan,
    is_editing_set,
    minimal_editing_sets,
    minimum_editing_set,
    pair_universe,
)
from graph_core import Graph, GraphInputError, is_bicluster
from graph_fixtures import all_graphs, complete, complete_bipartite, cycle, disjoint_union, path, random_graph


def test_bicluster_graph_has_only_the_empty_set():
    family = minimal_editing_sets(complete_bipartite(2, 3))
    assert family.members == (frozenset(),)
    assert family.graph_size == 5


def test_fmin_of_p4():
    family = minimal_editing_sets(path(4))
    assert family.sizes == (1, 1, 1, 1)
    assert set(family) == {frozenset({(0, 1)}), frozenset({(1, 2)}), frozenset({(2, 3)}), frozenset({(0, 3)})}
    # ordem: tamanho, depois pares canônicos
    assert family.members[0] == frozenset({(0, 1)})
    assert family.members[1] == frozenset({(0, 3)})


def test_fmin_of_triangle_only_deletes():
    g = complete(3)
    family = minimal_editing_sets(g)
    assert len(family) == 3
    assert all(len(f) == 1 and g.has_edge(*next(iter(f))) for f in family)


def test_minimum_examples():
    assert minimum_editing_set(complete_bipartite(3, 2)) == frozenset()
    assert len(minimum_editing_set(path(4))) == 1
    assert len(minimum_editing_set(cycle(5))) == 2


def test_minimum_tie_break_is_lexicographic():
    assert minimum_editing_set(path(4)) == frozenset({(0, 1)})
    assert minimum_editing_set(cycle(5)) == frozenset({(0, 1), (2, 3)})


def test_size_bounds_are_enforced():
    with pytest.raises(GraphInputError):
        minimal_editing_sets(Graph.empty(7))
    with pytest.raises(GraphInputError):
        minimum_editing_set(Graph.empty(9))
    with pytest.raises(GraphInputError):
        minimum_editing_set(path(5), max_vertices=4)


def test_minimum_above_table_size_uses_combination_scan():
    g = disjoint_union(path(4), Graph.empty(3))
    assert minimum_editing_set(g) == frozenset({(0, 1)})
    g = disjoint_union(cycle(5), Graph.empty(2))
    assert len(minimum_editing_set(g)) == 2


def test_fmin_is_sound_and_minimal():
    graphs = [g for n in range(0, 5) for g in all_graphs(n)]
    rng = random.Random(3)
    graphs += [random_graph(rng, rng.choice([5, 6])) for _ in range(60)]
    for g in graphs:
        for f in minimal_editing_sets(g):
            assert is_editing_set(g, f)
            for p in f:
                assert not is_editing_set(g, f - {p})


def test_fmin_is_complete_on_small_graphs():
    for n in range(0, 5):
        pairs = pair_universe(n)
        for g in all_graphs(n):
            family = minimal_editing_sets(g)
            for size in range(len(pairs) + 1):
                for f in combinations(pairs, size):
                    f = frozenset(f)
                    if is_editing_set(g, f):
                        assert any(member <= f for member in family)


def test_table_and_scan_agree():
    for n in range(0, 5):
        for g in all_graphs(n):
            assert set(minimal_editing_sets(g)) == set(_minimal_sets_scan(g))


def test_minimum_matches_smallest_fmin_member():
    for n in range(0, 6):
        for g in all_graphs(n):
            best = minimum_editing_set(g)
            assert len(best) == min(minimal_editing_sets(g).sizes)
            assert (best == frozenset()) == is_bicluster(g)
            assert is_editing_set(g, best)
