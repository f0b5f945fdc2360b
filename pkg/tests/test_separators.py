import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from kchordal.chordality import enumerate_induced_cycles, is_induced_cycle, is_k_chordal
from kchordal.graph_core import Graph, iter_bits, members, vset
from kchordal.oracle_harness import brute_force_minimal_separators
from kchordal.separators import (
    SeparatorRecord,
    check_separator_condition,
    enumerate_minimal_separators,
    is_k_chordal_via_separators,
    longest_induced_xy_path_in_component,
)
from kchordal.simplicial import is_induced_path
from tests.conftest import all_graphs
from tests.oracles import chordless_paths
from tests.test_graph_core import graphs


def seps(g):
    return {frozenset(members(r.s)) for r in enumerate_minimal_separators(g)}


def record(g, s):
    return next(r for r in enumerate_minimal_separators(g) if r.s == vset(s))


def test_complete_graph_has_none():
    assert list(enumerate_minimal_separators(Graph.complete(5))) == []


def test_path_p3():
    assert seps(Graph.path(3)) == {frozenset({1})}


def test_c5(c5):
    expected = {frozenset({i, (i + 2) % 5}) for i in range(5)}
    assert brute_force_minimal_separators(c5) == expected
    assert seps(c5) == expected


def test_no_empty_separator_for_disconnected():
    g = Graph.from_edges(5, [(0, 1), (1, 2), (3, 4)])
    assert seps(g) == {frozenset({1})}


def test_matches_brute_force_exhaustive():
    for g in all_graphs(5):
        records = list(enumerate_minimal_separators(g))
        assert len({r.s for r in records}) == len(records)
        assert {frozenset(members(r.s)) for r in records} == brute_force_minimal_separators(g)


@settings(max_examples=200, deadline=None)
@given(graphs(8))
def test_record_invariants(g):
    for rec in enumerate_minimal_separators(g):
        a, b = rec.pair
        comp_of = {v: c for c in rec.components for v in iter_bits(c)}
        ca, cb = comp_of[a], comp_of[b]
        assert ca != cb
        assert len(rec.full_components) >= 2
        for v in iter_bits(rec.s):
            assert g.adj[v] & ca and g.adj[v] & cb


# ---------------------------------------------------------------- longest paths


def test_longest_path_examples(c5):
    assert longest_induced_xy_path_in_component(c5, 0, 2, {1}).vertices == (0, 1, 2)
    assert longest_induced_xy_path_in_component(c5, 0, 2, {3, 4}).vertices == (0, 4, 3, 2)


def test_longest_path_c6_long_side():
    c6 = Graph.cycle(6)
    by_oracle = max(len(p) - 1 for p in chordless_paths(c6, 0, 4, {5}))
    got = longest_induced_xy_path_in_component(c6, 0, 4, {1, 2, 3})
    assert got.length == by_oracle == 4
    assert longest_induced_xy_path_in_component(c6, 0, 4, {5}).length == 2


def test_longest_path_none_and_contracts(c5):
    assert longest_induced_xy_path_in_component(c5, 0, 1, {2, 3, 4}) is None
    with pytest.raises(ValueError):
        longest_induced_xy_path_in_component(c5, 0, 2, {0, 1})


@settings(max_examples=150, deadline=None)
@given(graphs(8), st.data())
def test_longest_path_matches_oracle(g, data):
    if g.n < 3:
        return
    x, y = data.draw(st.lists(st.integers(0, g.n - 1), min_size=2, max_size=2, unique=True))
    comp = data.draw(st.integers(0, g.vertices)) & ~(1 << x) & ~(1 << y)
    outside = set(range(g.n)) - set(members(comp))
    lengths = [len(p) - 1 for p in chordless_paths(g, x, y, outside) if len(p) > 2]
    got = longest_induced_xy_path_in_component(g, x, y, comp)
    if not lengths:
        assert got is None
    else:
        assert got.length == max(lengths) and is_induced_path(g, got)


# ---------------------------------------------------------------- condition


def test_condition_c5(c5):
    rec = record(c5, {0, 2})
    assert check_separator_condition(c5, rec, 5) is None
    v = check_separator_condition(c5, rec, 4)
    assert sorted([v.path_i.length, v.path_j.length]) == [2, 3]
    assert v.total == 5


def test_clique_separator_never_violates():
    # two triangles glued on an edge: the separator {1, 2} is a clique
    g = Graph.from_edges(4, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)])
    for rec in enumerate_minimal_separators(g):
        assert g.is_clique(rec.s)
        for k in (3, 4, 9):
            assert check_separator_condition(g, rec, k) is None


def test_via_separators_examples(c5):
    assert is_k_chordal_via_separators(Graph.complete(6), 3) == (True, None)
    ok, v = is_k_chordal_via_separators(c5, 4)
    assert not ok
    assert sorted(v.cycle()) == [0, 1, 2, 3, 4] and is_induced_cycle(c5, v.cycle())
    assert is_k_chordal_via_separators(c5, 5) == (True, None)


@settings(max_examples=200, deadline=None)
@given(graphs(8), st.integers(3, 8))
def test_violation_soundness_and_agreement(g, k):
    ok, v = is_k_chordal_via_separators(g, k)
    assert ok == is_k_chordal(g, k)
    if v is not None:
        assert not g.has_edge(v.x, v.y)
        assert v.comp_i != v.comp_j
        assert set(v.path_i.vertices[1:-1]) <= set(members(v.comp_i))
        assert set(v.path_j.vertices[1:-1]) <= set(members(v.comp_j))
        assert v.total >= k + 1
        assert is_induced_cycle(g, v.cycle()) and len(v.cycle()) == v.total


def test_dirac_k3_exhaustive():
    for g in all_graphs(5):
        clique_seps = all(g.is_clique(r.s) for r in enumerate_minimal_separators(g))
        assert clique_seps == is_k_chordal(g, 3)


def test_long_cycle_forces_separator_through_cycle():
    """For an induced cycle and a cycle vertex x with cycle-neighbours a, b, every
    minimal separator putting a and b in different full components contains x
    and a cycle vertex non-adjacent to x."""
    graphs_ = [g for g in all_graphs(6) if next(enumerate_induced_cycles(g, 4), None)]
    for g in graphs_[::7]:
        records = list(enumerate_minimal_separators(g))
        for cyc in enumerate_induced_cycles(g, 4):
            vs = cyc.vertices
            m = len(vs)
            for i, x in enumerate(vs):
                a, b = vs[i - 1], vs[(i + 1) % m]
                hits = [r for r in records if _splits(r, a, b)]
                assert hits
                for r in hits:
                    assert r.s >> x & 1
                    assert any(r.s >> z & 1 and not g.has_edge(x, z) for z in vs if z != x)


def _splits(rec: SeparatorRecord, a: int, b: int) -> bool:
    full_a = [c for c in rec.full_components if c >> a & 1]
    full_b = [c for c in rec.full_components if c >> b & 1]
    return bool(full_a and full_b and full_a != full_b)
