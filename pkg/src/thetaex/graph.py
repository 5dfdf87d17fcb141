"""Bit-mask graphs on at most 64 vertices and their structural predicates.

A :class:`Graph` stores one integer per vertex; bit ``j`` of ``adj[i]`` is set
iff ``{i, j}`` is an edge.  Graphs are immutable once built, so every helper
here returns a new graph instead of mutating.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Sequence

MAX_VERTICES = 64


class GraphError(ValueError):
    """Raised for malformed graph input (bad endpoint, loop, size)."""


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if not 0 <= self.n <= MAX_VERTICES:
            raise GraphError(f"vertex count {self.n} outside 0..{MAX_VERTICES}")
        if len(self.adj) != self.n:
            raise GraphError("adjacency length does not match n")
        full = (1 << self.n) - 1
        for i, row in enumerate(self.adj):
            if row & ~full:
                raise GraphError(f"row {i} has bits beyond n")
            if row >> i & 1:
                raise GraphError(f"loop at vertex {i}")
            for j in iter_bits(row):
                if not self.adj[j] >> i & 1:
                    raise GraphError(f"asymmetric adjacency at {i},{j}")

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, e={self.edge_count()})"

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    def neighbors(self, v: int) -> list[int]:
        return list(iter_bits(self.adj[v]))

    def edges(self) -> list[tuple[int, int]]:
        return [(i, j) for i in range(self.n) for j in iter_bits(self.adj[i] >> (i + 1) << (i + 1))]

    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    @property
    def vertex_mask(self) -> int:
        return (1 << self.n) - 1


def build(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph on ``n`` vertices; duplicate edges are collapsed."""
    if not 0 <= n <= MAX_VERTICES:
        raise GraphError(f"vertex count {n} outside 0..{MAX_VERTICES}")
    rows = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"endpoint out of range in edge ({u}, {v}) for n={n}")
        if u == v:
            raise GraphError(f"loop requested at vertex {u}")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, tuple(rows))


def _trusted(n: int, rows: Sequence[int]) -> Graph:
    # Skips row validation; callers guarantee symmetric, loop-free rows.
    if not 0 <= n <= MAX_VERTICES:
        raise GraphError(f"vertex count {n} outside 0..{MAX_VERTICES}")
    g = object.__new__(Graph)
    object.__setattr__(g, "n", n)
    object.__setattr__(g, "adj", tuple(rows))
    return g


def edge_count(g: Graph) -> int:
    return g.edge_count()


def empty(n: int) -> Graph:
    return _trusted(n, [0] * n)


def complete(n: int) -> Graph:
    full = (1 << n) - 1
    return _trusted(n, [full ^ (1 << i) for i in range(n)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError("a cycle needs at least 3 vertices")
    return build(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    return build(n, [(i, i + 1) for i in range(n - 1)])


def complete_bipartite(a: int, b: int) -> Graph:
    return build(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def complement(g: Graph) -> Graph:
    full = g.vertex_mask
    return _trusted(g.n, [full & ~row & ~(1 << i) for i, row in enumerate(g.adj)])


def disjoint_union(g: Graph, h: Graph) -> Graph:
    rows = list(g.adj) + [row << g.n for row in h.adj]
    return _trusted(g.n + h.n, rows)


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Return the graph with vertex ``v`` renamed to ``perm[v]``."""
    if sorted(perm) != list(range(g.n)):
        raise GraphError("perm is not a permutation of the vertex set")
    rows = [0] * g.n
    for v, row in enumerate(g.adj):
        m = 0
        for w in iter_bits(row):
            m |= 1 << perm[w]
        rows[perm[v]] = m
    return _trusted(g.n, rows)


def add_edge(g: Graph, u: int, v: int) -> Graph:
    if u == v or not (0 <= u < g.n and 0 <= v < g.n):
        raise GraphError(f"cannot add edge ({u}, {v})")
    rows = list(g.adj)
    rows[u] |= 1 << v
    rows[v] |= 1 << u
    return _trusted(g.n, rows)


def remove_edge(g: Graph, u: int, v: int) -> Graph:
    rows = list(g.adj)
    rows[u] &= ~(1 << v)
    rows[v] &= ~(1 << u)
    return _trusted(g.n, rows)


def add_vertex(g: Graph, neighbors: int) -> Graph:
    """Append vertex ``g.n`` adjacent to the vertices in the bit mask ``neighbors``."""
    n = g.n
    bit = 1 << n
    rows = [row | bit if neighbors >> i & 1 else row for i, row in enumerate(g.adj)]
    rows.append(neighbors)
    return _trusted(n + 1, rows)


def induced(g: Graph, vertices: Sequence[int]) -> Graph:
    """Subgraph induced on ``vertices``, relabelled ``0..k-1`` in the given order."""
    index = {v: i for i, v in enumerate(vertices)}
    rows = []
    for v in vertices:
        m = 0
        for w in iter_bits(g.adj[v]):
            if w in index:
                m |= 1 << index[w]
        rows.append(m)
    return _trusted(len(vertices), rows)


def delete_vertex(g: Graph, u: int) -> Graph:
    if not 0 <= u < g.n:
        raise GraphError(f"vertex {u} out of range")
    low = (1 << u) - 1
    rows = []
    for i, row in enumerate(g.adj):
        if i != u:
            rows.append((row & low) | (row >> (u + 1) << u))
    return _trusted(g.n - 1, rows)


def components(g: Graph) -> list[int]:
    """Connected components as vertex bit masks, ordered by smallest vertex."""
    seen = 0
    comps = []
    for s in range(g.n):
        if seen >> s & 1:
            continue
        comp = frontier = 1 << s
        while frontier:
            nxt = 0
            for v in iter_bits(frontier):
                nxt |= g.adj[v]
            frontier = nxt & ~comp
            comp |= frontier
        seen |= comp
        comps.append(comp)
    return comps


def is_connected(g: Graph) -> bool:
    return len(components(g)) <= 1


def is_bipartite(g: Graph) -> Optional[list[int]]:
    """Return a 0/1 side label per vertex if ``g`` is bipartite, else ``None``.

    Each component is 2-coloured by breadth-first layering from its smallest
    vertex, which gets side 0.
    """
    side = [-1] * g.n
    for s in range(g.n):
        if side[s] >= 0:
            continue
        side[s] = 0
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for w in iter_bits(g.adj[v]):
                if side[w] < 0:
                    side[w] = side[v] ^ 1
                    queue.append(w)
                elif side[w] == side[v]:
                    return None
    return side


def odd_girth(g: Graph) -> Optional[int]:
    """Length of a shortest odd cycle, or ``None`` for bipartite graphs.

    A breadth-first search from ``s`` that meets an edge ``xy`` with
    ``dist[x] == dist[y] == d`` witnesses a closed odd walk of length ``2d+1``,
    hence an odd cycle no longer than that.  Starting from a vertex on a
    shortest odd cycle makes the bound tight.
    """
    best = None
    for s in range(g.n):
        dist = {s: 0}
        layer = [s]
        d = 0
        found = False
        while layer and not found:
            if best is not None and 2 * d + 1 >= best:
                break
            layer_mask = 0
            for v in layer:
                layer_mask |= 1 << v
            for v in layer:
                if g.adj[v] & layer_mask:
                    found = True
                    break
            if found:
                best = 2 * d + 1
                break
            nxt = []
            for v in layer:
                for w in iter_bits(g.adj[v]):
                    if w not in dist:
                        dist[w] = d + 1
                        nxt.append(w)
            layer = nxt
            d += 1
        if best == 3:
            return 3
    return best


def has_triangle(g: Graph) -> bool:
    for i, row in enumerate(g.adj):
        for j in iter_bits(row >> (i + 1) << (i + 1)):
            if row & g.adj[j]:
                return True
    return False
