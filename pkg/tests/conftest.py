import itertools
import random

import pytest
from hypothesis import strategies as st

from thetaex.graph import Graph, build


@st.composite
def graphs(draw, min_n=0, max_n=10):
    n = draw(st.integers(min_n, max_n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return build(n, [e for e, keep in zip(pairs, mask) if keep])


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    return build(n, [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p])


def all_graphs(n: int):
    """Every labelled graph on n vertices (2^C(n,2) of them)."""
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    for bits in range(1 << len(pairs)):
        yield build(n, [e for k, e in enumerate(pairs) if bits >> k & 1])


def brute_odd_girth(g: Graph):
    """Shortest odd closed walk length, which equals the shortest odd cycle."""
    n = g.n
    # reach[parity] as sets of (start, end) pairs
    cur = {(v, v) for v in range(n)}
    for length in range(1, n + 1):
        cur = {(s, w) for s, v in cur for w in g.neighbors(v)}
        if length % 2 == 1 and any(s == e for s, e in cur):
            return length
    return None


@pytest.fixture
def rng():
    return random.Random(20240901)
