"""Canonical labelling by colour refinement plus individualisation search.

Ordered partitions are lists of vertex bit masks.  Refinement splits cells by
neighbour counts into splitter cells until the partition is equitable; the
search individualises vertices of the first non-singleton cell and keeps the
leaf whose relabelled adjacency rows are lexicographically largest.  Leaves
with equal rows yield automorphisms, which prune sibling branches lying in the
same orbit of the stabiliser of the current prefix.
"""

from __future__ import annotations

from itertools import permutations
from typing import Optional, Sequence

from . import graph6
from .graph import Graph, _trusted, iter_bits

CanonicalForm = bytes


def refine(adj: Sequence[int], cells: list[int], splitters: Optional[list[int]] = None) -> list[int]:
    """Refine the ordered partition ``cells`` to the coarsest equitable one below it.

    Sub-cells replace their parent in place, ordered by increasing neighbour
    count, so the result depends only on the structure, never on labels.
    """
    queue = list(cells if splitters is None else splitters)
    cells = list(cells)
    n_cells_goal = sum(c.bit_count() for c in cells)
    head = 0
    while head < len(queue) and len(cells) < n_cells_goal:
        s = queue[head]
        head += 1
        out = []
        for c in cells:
            if c & (c - 1) == 0:
                out.append(c)
                continue
            groups: dict[int, int] = {}
            for v in iter_bits(c):
                k = (adj[v] & s).bit_count()
                groups[k] = groups.get(k, 0) | (1 << v)
            if len(groups) == 1:
                out.append(c)
            else:
                pieces = [groups[k] for k in sorted(groups)]
                out.extend(pieces)
                queue.extend(pieces)
        cells = out
    return cells


def equitable_partition(g: Graph) -> list[int]:
    """Coarsest equitable partition reached from the unit partition."""
    if g.n == 0:
        return []
    return refine(g.adj, [g.vertex_mask])


class _Search:
    def __init__(self, g: Graph):
        self.g = g
        self.best_key: Optional[tuple[int, ...]] = None
        self.best_order: Optional[list[int]] = None
        self.first_key: Optional[tuple[int, ...]] = None
        self.first_order: Optional[list[int]] = None
        self.autos: list[tuple[int, ...]] = []
        self.prefix: list[int] = []
        self.tried: list[list[int]] = []
        self.abort_to: Optional[int] = None

    def leaf(self, cells: list[int]) -> None:
        order = [c.bit_length() - 1 for c in cells]
        pos = [0] * self.g.n
        for i, v in enumerate(order):
            pos[v] = i
        adj = self.g.adj
        key = []
        for v in order:
            m = 0
            for w in iter_bits(adj[v]):
                m |= 1 << pos[w]
            key.append(m)
        key = tuple(key)
        if self.first_key is None:
            self.first_key, self.first_order = key, order
        if self.best_key is None or key > self.best_key:
            self.best_key, self.best_order = key, order
            return
        if key == self.first_key:
            self._automorphism(self.first_order, order)
        elif key == self.best_key:
            self._automorphism(self.best_order, order)

    def _automorphism(self, src: list[int], dst: list[int]) -> None:
        n = self.g.n
        gamma = [0] * n
        inv = [0] * n
        for a, b in zip(src, dst):
            gamma[a] = b
            inv[b] = a
        self.autos.append(tuple(gamma))
        # The branch taken at level k is the image of an earlier sibling when
        # gamma fixes the prefix above it; everything below is a repeat.
        for k, v in enumerate(self.prefix):
            if any(gamma[p] != p for p in self.prefix[:k]):
                break
            if inv[v] in self.tried[k][:-1]:
                self.abort_to = k
                return

    def _orbit_rep(self, prefix: list[int]):
        gens = [a for a in self.autos if all(a[p] == p for p in prefix)]
        parent = list(range(self.g.n))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for a in gens:
            for x, y in enumerate(a):
                rx, ry = find(x), find(y)
                if rx != ry:
                    parent[max(rx, ry)] = min(rx, ry)
        return find

    def run(self, cells: list[int]) -> None:
        if len(cells) == self.g.n:
            self.leaf(cells)
            return
        depth = len(self.prefix)
        idx = next(i for i, c in enumerate(cells) if c & (c - 1))
        c = cells[idx]
        tried: list[int] = []
        self.tried.append(tried)
        seen_autos = -1
        find = None
        for v in iter_bits(c):
            if tried and self.autos:
                if seen_autos != len(self.autos):
                    find = self._orbit_rep(self.prefix)
                    seen_autos = len(self.autos)
                rv = find(v)
                if any(find(t) == rv for t in tried):
                    continue
            tried.append(v)
            bit = 1 << v
            child = cells[:idx] + [bit, c ^ bit] + cells[idx + 1:]
            self.prefix.append(v)
            self.run(refine(self.g.adj, child, [bit]))
            self.prefix.pop()
            if self.abort_to is not None:
                if self.abort_to == depth:
                    self.abort_to = None
                else:
                    break
        self.tried.pop()


def canonical_labeling(g: Graph) -> tuple[list[int], list[tuple[int, ...]]]:
    """Return ``(order, automorphisms)``.

    ``order[i]`` is the vertex receiving canonical label ``i``; the
    automorphisms are those found during the search (not necessarily a full
    generating set).
    """
    if g.n == 0:
        return [], []
    s = _Search(g)
    s.run(equitable_partition(g))
    return s.best_order, s.autos


def canonical_graph(g: Graph) -> Graph:
    order, _ = canonical_labeling(g)
    perm = [0] * g.n
    for i, v in enumerate(order):
        perm[v] = i
    rows = [0] * g.n
    for v, row in enumerate(g.adj):
        m = 0
        for w in iter_bits(row):
            m |= 1 << perm[w]
        rows[perm[v]] = m
    return _trusted(g.n, rows)


def canonical_form(g: Graph) -> CanonicalForm:
    """Labelling-invariant key: the graph6 bytes of the canonical relabelling."""
    return graph6.encode(canonical_graph(g)).encode("ascii")


def canonical_form_bruteforce(g: Graph) -> CanonicalForm:
    """Exhaustive-permutation canonical form; the reference oracle for ``n <= 10``."""
    if g.n > 10:
        raise ValueError("exhaustive canonical form is limited to n <= 10")
    edges = g.edges()
    best = None
    for perm in permutations(range(g.n)):
        rows = [0] * g.n
        for u, v in edges:
            rows[perm[u]] |= 1 << perm[v]
            rows[perm[v]] |= 1 << perm[u]
        key = graph6.encode(_trusted(g.n, rows))
        if best is None or key < best:
            best = key
    return (best if best is not None else graph6.encode(g)).encode("ascii")


def is_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.edge_count() != h.edge_count():
        return False
    if sorted(g.degrees()) != sorted(h.degrees()):
        return False
    return canonical_form(g) == canonical_form(h)
