import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from kchordal.chordality import (
    chordality,
    enumerate_induced_cycles,
    is_induced_cycle,
    is_k_chordal,
)
from kchordal.graph_core import Graph, induced_subgraph
from tests.conftest import all_graphs, k_bipartite
from tests.oracles import brute_chordality, induced_cycle_vertex_sets, to_nx
from tests.test_graph_core import graphs


def test_tree_has_chordality_zero():
    tree = Graph.from_edges(7, [(0, 1), (0, 2), (1, 3), (1, 4), (2, 5), (2, 6)])
    res = chordality(tree)
    assert res.value == 0 and res.witness is None


def test_c5():
    res = chordality(Graph.cycle(5))
    assert res.value == 5
    assert res.witness.vertices == (0, 1, 2, 3, 4)


def test_k4():
    assert chordality(Graph.complete(4)).value == 3


def test_petersen(petersen):
    # brute-force subset oracle: the ten hexagons of the Petersen graph are chordless
    assert brute_chordality(petersen) == 6
    res = chordality(petersen)
    assert res.value == 6
    assert is_induced_cycle(petersen, res.witness)


@pytest.mark.parametrize("n", range(3, 13))
def test_cycles(n):
    assert chordality(Graph.cycle(n)).value == n


def test_is_k_chordal_examples(c5):
    assert not is_k_chordal(c5, 4)
    assert is_k_chordal(c5, 5)
    with pytest.raises(ValueError):
        is_k_chordal(c5, 2)


def test_enumerate_examples():
    cycles = list(enumerate_induced_cycles(Graph.cycle(6)))
    assert [c.vertices for c in cycles] == [(0, 1, 2, 3, 4, 5)]
    assert list(enumerate_induced_cycles(Graph.complete(4), 4)) == []
    k23 = k_bipartite(2, 3)
    found = list(enumerate_induced_cycles(k23, 4))
    assert len(found) == 3 == len(induced_cycle_vertex_sets(k23, 4))
    with pytest.raises(ValueError):
        list(enumerate_induced_cycles(k23, 2))


def test_canonical_form():
    for c in enumerate_induced_cycles(Graph.complete(5)):
        vs = c.vertices
        assert vs[0] == min(vs) and vs[1] < vs[-1]


def _check_against_subsets(g):
    found = [frozenset(c.vertices) for c in enumerate_induced_cycles(g)]
    assert len(found) == len(set(found))
    assert set(found) == set(induced_cycle_vertex_sets(g))


def test_enumeration_matches_subset_oracle_exhaustively():
    for g in all_graphs(5):
        _check_against_subsets(g)


@settings(max_examples=150, deadline=None)
@given(graphs(8))
def test_enumeration_matches_subset_oracle_sampled(g):
    _check_against_subsets(g)


@settings(max_examples=150, deadline=None)
@given(graphs(9))
def test_chordality_matches_networkx(g):
    res = chordality(g)
    ref = max((len(c) for c in nx.chordless_cycles(to_nx(g))), default=0)
    # networkx reports 2-cycles only for multigraphs; simple graphs give >= 3
    assert res.value == ref
    if res.witness is not None:
        assert is_induced_cycle(g, res.witness) and res.witness.length == res.value


@settings(max_examples=150, deadline=None)
@given(graphs(8), st.integers(3, 8))
def test_k_chordal_iff_no_long_cycle(g, k):
    assert is_k_chordal(g, k) == (next(enumerate_induced_cycles(g, k + 1), None) is None)


@settings(max_examples=100, deadline=None)
@given(graphs(8), st.integers(3, 6), st.data())
def test_hereditary(g, k, data):
    if is_k_chordal(g, k):
        s = data.draw(st.integers(0, g.vertices))
        h, _ = induced_subgraph(g, s)
        assert is_k_chordal(h, k)


def test_deterministic_order(petersen):
    a = [c.vertices for c in enumerate_induced_cycles(petersen)]
    b = [c.vertices for c in enumerate_induced_cycles(petersen)]
    assert a == b
