import itertools

import pytest
from hypothesis import given, settings, strategies as st

from thetaex.canon import is_isomorphic
from thetaex.constructions import bullet_k3, circ_k3, sk
from thetaex.graph import add_edge, build, complete, complete_bipartite, cycle, remove_edge
from thetaex.theta import (
    PatternError,
    ThetaPattern,
    chromatic_number,
    contains_theta,
    is_color_critical,
    is_theta_free,
    theta_graph,
)

from conftest import graphs


def naive_contains(g, p):
    """Try every injective placement of the theta graph's vertices."""
    h = theta_graph(p)
    if h.n > g.n:
        return False
    he = h.edges()
    for img in itertools.permutations(range(g.n), h.n):
        if all(g.has_edge(img[a], img[b]) for a, b in he):
            return True
    return False


def test_pattern_validation():
    assert ThetaPattern((3, 1, 2)).lengths == (1, 2, 3)
    assert ThetaPattern.parse("1,2,3") == ThetaPattern((1, 2, 3))
    for bad in [(1,), (1, 1), (0, 2), (1, 1, 3)]:
        with pytest.raises(PatternError):
            ThetaPattern(bad)


def test_pattern_counts():
    p = ThetaPattern((1, 2, 3))
    assert (p.t, p.vertex_count, p.edge_count) == (3, 5, 6)
    assert str(p) == "theta(1,2,3)"


def test_theta_graphs_are_cycles():
    assert is_isomorphic(theta_graph(ThetaPattern((2, 2))), cycle(4))
    assert is_isomorphic(theta_graph(ThetaPattern((2, 3))), cycle(5))


def test_diamond():
    d = theta_graph(ThetaPattern((1, 2, 2)))
    assert (d.n, d.edge_count()) == (4, 5)
    assert is_isomorphic(d, remove_edge(complete(4), 2, 3))


def test_k4_contains_diamond():
    w = contains_theta(complete(4), ThetaPattern((1, 2, 2)))
    assert w is not None and w.is_valid(complete(4), ThetaPattern((1, 2, 2)))


def test_bipartite_host_is_free_of_diamond():
    assert contains_theta(complete_bipartite(5, 5), ThetaPattern((1, 2, 2))) is None


def test_constructions_free():
    assert is_theta_free(circ_k3(4, 4), ThetaPattern((1, 2, 3)))
    assert is_theta_free(sk(4, 4), ThetaPattern((1, 2, 3)))
    assert is_theta_free(bullet_k3(4, 4), ThetaPattern((1, 2, 4)))


def test_kab_plus_edge_contains_diamond():
    g = add_edge(complete_bipartite(4, 4), 0, 1)
    w = contains_theta(g, ThetaPattern((1, 2, 2)))
    assert w is not None and w.is_valid(g, ThetaPattern((1, 2, 2)))


def test_witness_paths_sorted_by_length():
    p = ThetaPattern((1, 3, 2))
    w = contains_theta(complete(6), p)
    assert [len(x) - 1 for x in w.paths] == [1, 2, 3]
    assert w.to_dict()["endpoints"] == list(w.endpoints)


def test_chromatic_numbers():
    assert chromatic_number(cycle(5)) == 3
    assert chromatic_number(complete_bipartite(3, 3)) == 2
    assert chromatic_number(theta_graph(ThetaPattern((1, 2, 2)))) == 3
    assert chromatic_number(complete(5)) == 5
    assert chromatic_number(build(0, [])) == 0


@pytest.mark.parametrize("q", [2, 4, 6])
@pytest.mark.parametrize("r", [2, 3, 4, 5, 6])
def test_even_q_thetas_are_color_critical(q, r):
    h = theta_graph(ThetaPattern((1, q, r)))
    assert chromatic_number(h) == 3
    assert is_color_critical(h)


def test_critical_means_some_edge_lowers_chi():
    # C5 plus a pendant vertex: any cycle edge works
    assert is_color_critical(build(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 5)]))
    # two disjoint triangles: every deletion leaves the other triangle
    assert not is_color_critical(build(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]))
    assert not is_color_critical(complete_bipartite(3, 3))


patterns = st.sampled_from([(1, 2, 2), (1, 2, 3), (2, 2), (2, 3), (1, 3, 3), (2, 2, 2), (1, 2, 2, 2)])


@settings(max_examples=300, deadline=None)
@given(graphs(max_n=7), patterns)
def test_agrees_with_placement_oracle(g, lengths):
    p = ThetaPattern(lengths)
    w = contains_theta(g, p)
    assert (w is not None) == naive_contains(g, p)
    if w is not None:
        assert w.is_valid(g, p)


@settings(max_examples=150, deadline=None)
@given(graphs(min_n=2, max_n=9), patterns, st.data())
def test_monotone_under_adding_edges(g, lengths, data):
    p = ThetaPattern(lengths)
    u = data.draw(st.integers(0, g.n - 1))
    v = data.draw(st.integers(0, g.n - 1))
    if u == v:
        return
    if contains_theta(g, p) is not None:
        assert contains_theta(add_edge(g, u, v), p) is not None


@settings(max_examples=100, deadline=None)
@given(st.lists(st.integers(1, 4), min_size=2, max_size=4))
def test_theta_contains_itself(lengths):
    try:
        p = ThetaPattern(lengths)
    except PatternError:
        return
    h = theta_graph(p)
    assert (h.n, h.edge_count()) == (p.vertex_count, p.edge_count)
    assert contains_theta(h, p) is not None
