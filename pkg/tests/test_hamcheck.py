import pytest
from hypothesis import given, settings

from hamcompletion.caterpillar import CaterpillarSpec, build_graph
from hamcompletion.graph import Graph, complete_graph, cycle_graph, path_graph, star_graph
from hamcompletion.hamcheck import hamiltonian_cycle, hamiltonian_path, verify_cycle, verify_path

from .conftest import graphs
from .oracles import perm_has_cycle, perm_has_path


def test_cycle_examples():
    assert hamiltonian_cycle(cycle_graph(5)) == (0, 1, 2, 3, 4)
    assert hamiltonian_cycle(star_graph(3)) is None
    g, _ = build_graph(CaterpillarSpec([1, 1]))
    g, _ = g.add_edge(2, 3)
    w = hamiltonian_cycle(g)
    assert len(w) == 4 and verify_cycle(g, w)
    assert hamiltonian_cycle(complete_graph(2)) is None


def test_path_examples():
    assert hamiltonian_path(path_graph(4)) == (0, 1, 2, 3)
    assert hamiltonian_path(star_graph(3)) is None
    assert verify_path(star_graph(2), hamiltonian_path(star_graph(2)))
    assert hamiltonian_path(Graph(1)) == (0,)


def test_verify():
    c4 = cycle_graph(4)
    assert verify_cycle(c4, [0, 1, 2, 3])
    assert not verify_cycle(c4, [0, 2, 1, 3])
    assert not verify_cycle(c4, [0, 1, 2])
    assert not verify_cycle(c4, [0, 1, 2, 2])
    assert not verify_cycle(c4, ["x", None])
    p4 = path_graph(4)
    assert verify_path(p4, [0, 1, 2, 3])
    assert verify_path(p4, [3, 2, 1, 0])
    assert not verify_path(p4, [0, 2, 1, 3])


@pytest.mark.parametrize("method", ["dp", "backtrack"])
@settings(max_examples=300, deadline=None)
@given(g=graphs(max_vertices=8))
def test_agrees_with_permutations(method, g):
    w = hamiltonian_cycle(g, method)
    assert (w is not None) == perm_has_cycle(g.vertex_count, g.edges)
    if w is not None:
        assert verify_cycle(g, w)
        assert w == hamiltonian_cycle(g, method)
    p = hamiltonian_path(g, method)
    assert (p is not None) == perm_has_path(g.vertex_count, g.edges)
    if p is not None:
        assert verify_path(g, p)


@given(graphs(max_vertices=8))
def test_cycle_implies_path(g):
    if hamiltonian_cycle(g) is not None:
        assert hamiltonian_path(g) is not None


def test_backtracking_on_larger_graphs():
    g = cycle_graph(40)
    g, _ = g.add_edge(0, 20)
    w = hamiltonian_cycle(g)
    assert verify_cycle(g, w)
    g, _ = build_graph(CaterpillarSpec([2] * 10))
    assert hamiltonian_cycle(g) is None
    assert hamiltonian_path(g) is None
