import pytest
from hypothesis import assume, given, settings

from hamcompletion.caterpillar import CaterpillarSpec, build_graph
from hamcompletion.errors import BudgetExceeded, TooSmallForCycle
from hamcompletion.graph import Edge, Graph, complete_graph, cycle_graph, leaves, path_graph, star_graph
from hamcompletion.hamcheck import hamiltonian_cycle, verify_cycle, verify_path
from hamcompletion.oracle import already_hamiltonian, min_cycle_augmentation, min_path_augmentation

from .conftest import connected_graphs, graphs
from .oracles import brute_min_augmentation, path_cover_number


def test_cycle_examples():
    r = min_cycle_augmentation(path_graph(4))
    assert (r.minimum, r.optimal_edges) == (1, (Edge(0, 3),))
    assert min_cycle_augmentation(star_graph(4)).minimum == 3
    g, _ = build_graph(CaterpillarSpec([1, 1, 1]))
    assert min_cycle_augmentation(g).minimum == 2


def test_path_examples():
    assert min_path_augmentation(star_graph(3)).minimum == 1
    assert min_path_augmentation(path_graph(5)).minimum == 0
    g, _ = build_graph(CaterpillarSpec([3]))
    assert min_path_augmentation(g).minimum == min_cycle_augmentation(g).minimum - 1 == 1


def test_already_hamiltonian():
    assert already_hamiltonian(cycle_graph(6))
    assert not already_hamiltonian(path_graph(6))
    assert already_hamiltonian(complete_graph(4))
    assert min_cycle_augmentation(complete_graph(4)).minimum == 0


def test_errors():
    with pytest.raises(TooSmallForCycle):
        min_cycle_augmentation(path_graph(2))
    with pytest.raises(BudgetExceeded):
        min_cycle_augmentation(star_graph(6), budget=4)


def test_result_witness_validates():
    g, _ = build_graph(CaterpillarSpec([2, 0, 1, 0, 2]))
    r = min_cycle_augmentation(g)
    assert r.minimum == 4
    assert not set(r.optimal_edges) & g.edges
    assert verify_cycle(g.with_edges(r.optimal_edges), r.witness)


@settings(max_examples=150, deadline=None)
@given(graphs(min_vertices=3, max_vertices=6))
def test_cycle_matches_unpruned_search(g):
    r = min_cycle_augmentation(g, budget=10)
    k, extra = brute_min_augmentation(g.vertex_count, g.sorted_edges(), "cycle")
    assert r.minimum == k
    assert r.optimal_edges == tuple(Edge(*e) for e in extra)


@settings(max_examples=150, deadline=None)
@given(graphs(min_vertices=1, max_vertices=6))
def test_path_matches_unpruned_search(g):
    r = min_path_augmentation(g, budget=10)
    k, extra = brute_min_augmentation(g.vertex_count, g.sorted_edges(), "path")
    assert r.minimum == k
    assert r.optimal_edges == tuple(Edge(*e) for e in extra)
    assert verify_path(g.with_edges(r.optimal_edges), r.witness)


@settings(max_examples=120, deadline=None)
@given(connected_graphs(min_vertices=3, max_vertices=10))
def test_cycle_matches_path_cover(g):
    # Removing the k added edges from the cycle leaves k covering paths, and
    # k covering paths close into a cycle with k new edges.
    assume(hamiltonian_cycle(g) is None)
    r = min_cycle_augmentation(g, budget=12)
    assert r.minimum == path_cover_number(g.vertex_count, g.sorted_edges())
    assert r.minimum >= -(-len(leaves(g)) // 2)
    assert min_path_augmentation(g, budget=12).minimum == r.minimum - 1


@settings(max_examples=40, deadline=None)
@given(connected_graphs(min_vertices=3, max_vertices=8))
def test_canonical_and_zero_case(g):
    a = min_cycle_augmentation(g, budget=12)
    b = min_cycle_augmentation(g, budget=12)
    assert a == b
    assert (a.minimum == 0) == (hamiltonian_cycle(g) is not None) == already_hamiltonian(g)


def test_parallel_matches_serial():
    for ls in ([3, 0, 1, 0, 3], [2, 2, 2], [1, 1, 2], [3, 5]):
        g, _ = build_graph(CaterpillarSpec(ls))
        serial = min_cycle_augmentation(g)
        parallel = min_cycle_augmentation(g, workers=2)
        assert serial == parallel
        assert serial.to_dict() == parallel.to_dict()
    g = star_graph(5)
    assert min_path_augmentation(g, workers=2) == min_path_augmentation(g)
