import io
import random

import networkx as nx
import pytest

from thetaex import graph6
from thetaex.graph import build, complete, empty
from thetaex.graph6 import Graph6Error

from conftest import random_graph


def reference(g):
    ref = nx.Graph()
    ref.add_nodes_from(range(g.n))
    ref.add_edges_from(g.edges())
    return nx.to_graph6_bytes(ref, header=False).decode("ascii").strip()


def test_k2():
    assert graph6.encode(complete(2)) == "A_"
    assert reference(complete(2)) == "A_"


def test_small_orders():
    assert graph6.encode(empty(0)) == "?"
    assert graph6.encode(empty(1)) == "@"
    assert graph6.encode(complete(4)) == "C~"


def test_header_is_stripped():
    assert graph6.decode(">>graph6<<A_") == complete(2)


def test_round_trip_random(rng):
    for _ in range(1000):
        g = random_graph(rng, rng.randint(0, 20), rng.random())
        s = graph6.encode(g)
        assert graph6.decode(s) == g


def test_matches_networkx_encoder(rng):
    for _ in range(200):
        g = random_graph(rng, rng.randint(1, 64), rng.random())
        assert graph6.encode(g) == reference(g)


def test_large_header():
    g = random_graph(random.Random(3), 63, 0.3)
    s = graph6.encode(g)
    assert s[0] == "~"
    assert graph6.decode(s) == g


@pytest.mark.parametrize("bad", ["", "A", "A_?", "A\x7f", "B\x20", "~??~" + "?" * 10])
def test_malformed(bad):
    with pytest.raises(Graph6Error):
        graph6.decode(bad)


def test_too_large():
    with pytest.raises(Graph6Error):
        graph6.decode("~?AA" + "?" * 200)


def test_batch_io():
    gs = [complete(3), empty(2), build(4, [(0, 3)])]
    buf = io.StringIO()
    graph6.write_lines(gs, buf)
    buf.seek(0)
    assert list(graph6.read_lines(buf)) == gs
