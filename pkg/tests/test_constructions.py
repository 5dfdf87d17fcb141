import pytest
from hypothesis import given, settings, strategies as st

from thetaex.canon import canonical_form, is_isomorphic
from thetaex.constructions import (
    ConstructionError,
    FamilyParams,
    bullet_k3,
    bullet_k3_balanced,
    circ_k3,
    circ_k3_balanced,
    constructions_of_order,
    enumerate_family,
    family_edge_count,
    family_member,
    family_params,
    named_graph,
    sk,
    sk_balanced,
    turan,
    turan_edges,
)
from thetaex.graph import has_triangle, is_bipartite, is_connected, odd_girth
from thetaex.theta import ThetaPattern, is_theta_free

sizes = st.integers(1, 30)


def test_turan():
    g = turan(7, 2)
    assert g.edge_count() == 12 == turan_edges(7, 2)
    assert turan(6, 3).edge_count() == 12
    assert turan(5, 1).edge_count() == 0


def test_sk44():
    g = sk(4, 4)
    assert g.edge_count() == 17
    assert odd_girth(g) == 5


def test_bullet_and_circ_sizes():
    assert bullet_k3(4, 4).edge_count() == 18
    g = circ_k3(4, 4)
    assert (g.n, g.edge_count()) == (10, 19)


def test_bad_parameters():
    with pytest.raises(ConstructionError):
        sk(0, 3)
    with pytest.raises(ConstructionError):
        named_graph("nope", 2, 2)
    with pytest.raises(ConstructionError):
        FamilyParams("H", 9, x1_size=0).validate()
    with pytest.raises(ConstructionError):
        FamilyParams("G", 9, x1_size=2, y1_size=1).validate()
    with pytest.raises(ConstructionError):
        FamilyParams("Q", 9).validate()


@settings(max_examples=120, deadline=None)
@given(sizes, sizes)
def test_sk_invariants(a, b):
    g = sk(a, b)
    assert g.n == a + b + 1
    assert g.edge_count() == a * b + 1
    assert not has_triangle(g)
    if a >= 2 or b >= 2:
        # the subdivided edge sits on a 5-cycle
        assert odd_girth(g) == (5 if min(a, b) >= 2 else None)


@settings(max_examples=120, deadline=None)
@given(sizes, sizes)
def test_bullet_invariants(a, b):
    g = bullet_k3(a, b)
    assert g.n == a + b + 1
    assert g.edge_count() == a * b + 2
    assert odd_girth(g) == 3


@settings(max_examples=120, deadline=None)
@given(sizes, sizes)
def test_circ_invariants(a, b):
    g = circ_k3(a, b)
    assert g.n == a + b + 2
    assert g.edge_count() == a * b + 3
    assert is_connected(g) and odd_girth(g) == 3


@pytest.mark.parametrize("n", range(7, 41))
def test_balanced_edge_identities(n):
    assert sk_balanced(n).edge_count() == (n - 1) ** 2 // 4 + 1
    assert bullet_k3_balanced(n).edge_count() == (n - 1) ** 2 // 4 + 2
    assert circ_k3_balanced(n).edge_count() == (n - 2) ** 2 // 4 + 3


@pytest.mark.parametrize("n", range(7, 13))
def test_family_members(n):
    hs = enumerate_family("H", n)
    gs = enumerate_family("G", n)
    assert hs and gs
    for g in hs:
        assert g.n == n and g.edge_count() == family_edge_count("H", n)
        assert odd_girth(g) == 5
    for g in gs:
        assert g.n == n and g.edge_count() == family_edge_count("G", n) == (n - 3) ** 2 // 4 + n
        assert is_bipartite(g) is None
        assert is_theta_free(g, ThetaPattern((1, 2, 2)))
    assert len({canonical_form(g) for g in hs}) == len(hs)


@pytest.mark.parametrize("n", range(7, 13))
def test_named_constructions_inside_families(n):
    assert any(is_isomorphic(sk_balanced(n), h) for h in enumerate_family("H", n))
    assert any(is_isomorphic(bullet_k3_balanced(n), g) for g in enumerate_family("G", n))


def test_h_family_size_examples():
    assert [len(enumerate_family("H", n)) for n in range(7, 13)] == [1, 2, 2, 3, 2, 4]


def test_family_params_all_valid():
    for fam in ("H", "G"):
        for n in range(7, 15):
            for p in family_params(fam, n):
                p.validate()
                assert family_member(p).n == n


def test_constructions_of_order_names():
    d = constructions_of_order(9)
    assert {"T(n,2)", "SK bal"} <= set(d)
    assert all(g.n == 9 for g in d.values())
