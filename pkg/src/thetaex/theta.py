"""Generalized theta graphs, subgraph containment and colour-criticality."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Optional

from .graph import Graph, GraphError, build, iter_bits, remove_edge


class PatternError(ValueError):
    pass


@dataclass(frozen=True)
class ThetaPattern:
    """Path lengths of a generalized theta graph, kept sorted ascending."""

    lengths: tuple[int, ...]

    def __init__(self, lengths: Iterable[int]):
        ls = tuple(sorted(int(x) for x in lengths))
        if len(ls) < 2:
            raise PatternError("a theta pattern needs at least two paths")
        if ls[0] < 1:
            raise PatternError("path lengths must be positive")
        if ls[1] < 2:
            raise PatternError("at most one path may have length 1")
        object.__setattr__(self, "lengths", ls)

    @classmethod
    def parse(cls, text: str) -> "ThetaPattern":
        return cls(int(x) for x in text.replace(" ", "").strip("()").split(",") if x)

    @property
    def t(self) -> int:
        return len(self.lengths)

    @property
    def vertex_count(self) -> int:
        return 2 + sum(x - 1 for x in self.lengths)

    @property
    def edge_count(self) -> int:
        return sum(self.lengths)

    def __str__(self) -> str:
        return "theta(" + ",".join(map(str, self.lengths)) + ")"


@dataclass(frozen=True)
class ThetaWitness:
    endpoints: tuple[int, int]
    paths: tuple[tuple[int, ...], ...]

    def is_valid(self, g: Graph, pattern: ThetaPattern) -> bool:
        u, v = self.endpoints
        if u == v or len(self.paths) != pattern.t:
            return False
        seen = {u, v}
        for path, length in zip(self.paths, pattern.lengths):
            if len(path) != length + 1 or path[0] != u or path[-1] != v:
                return False
            for a, b in zip(path, path[1:]):
                if not (0 <= a < g.n and 0 <= b < g.n) or not g.has_edge(a, b):
                    return False
            for w in path[1:-1]:
                if w in seen:
                    return False
                seen.add(w)
        return True

    def to_dict(self) -> dict:
        return {"endpoints": list(self.endpoints), "paths": [list(p) for p in self.paths]}


def theta_graph(p: ThetaPattern) -> Graph:
    """The theta graph itself: endpoints 0 and 1, internal vertices numbered after."""
    edges = []
    nxt = 2
    for length in p.lengths:
        prev = 0
        for _ in range(length - 1):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
        edges.append((prev, 1))
    return build(p.vertex_count, edges)


def _walk_exists(adj, src: int, dst: int, length: int, allowed: int) -> bool:
    """Is there a walk of exactly ``length`` steps from src to dst whose
    interior vertices all lie in ``allowed``?"""
    frontier = 1 << src
    for _ in range(length - 1):
        nxt = 0
        for x in iter_bits(frontier):
            nxt |= adj[x]
        frontier = nxt & allowed
        if not frontier:
            return False
    for x in iter_bits(frontier):
        if adj[x] >> dst & 1:
            return True
    return False


class _PathSearch:
    def __init__(self, g: Graph, u: int, v: int, lengths: list[int]):
        self.adj = g.adj
        self.u, self.v = u, v
        self.lengths = lengths
        self.paths: list[list[int]] = []
        self.full = g.vertex_mask

    def feasible(self, used: int, head: int, remaining: int, next_path: int) -> bool:
        free = self.full & ~used
        need = remaining - 1 + sum(x - 1 for x in self.lengths[next_path:])
        if free.bit_count() < need:
            return False
        if not _walk_exists(self.adj, head, self.v, remaining, free):
            return False
        for length in self.lengths[next_path:]:
            if not _walk_exists(self.adj, self.u, self.v, length, free):
                return False
        return True

    def search(self, idx: int, used: int) -> bool:
        if idx == len(self.lengths):
            return True
        if not self.feasible(used, self.u, self.lengths[idx], idx + 1):
            return False
        return self._extend(idx, [self.u], used, self.lengths[idx])

    def _extend(self, idx: int, path: list[int], used: int, remaining: int) -> bool:
        head = path[-1]
        if remaining == 1:
            if self.adj[head] >> self.v & 1:
                self.paths.append(path + [self.v])
                if self.search(idx + 1, used):
                    return True
                self.paths.pop()
            return False
        for w in iter_bits(self.adj[head] & ~used):
            nused = used | (1 << w)
            if not self.feasible(nused, w, remaining - 1, idx + 1):
                continue
            path.append(w)
            if self._extend(idx, path, nused, remaining - 1):
                return True
            path.pop()
        return False


def contains_theta(g: Graph, p: ThetaPattern) -> Optional[ThetaWitness]:
    """Find ``theta(p)`` as a (not necessarily induced) subgraph of ``g``.

    Endpoint pairs are tried in order; for each, internally disjoint paths
    are laid down longest first.  A partial path survives only while an
    exact-length walk through unused vertices still reaches the far
    endpoint, and likewise for every path not yet started.
    """
    if g.n < p.vertex_count or g.edge_count() < p.edge_count:
        return None
    t = p.t
    has_edge_path = p.lengths[0] == 1
    long_paths = sorted((x for x in p.lengths if x > 1), reverse=True)
    degs = g.degrees()
    for u, v in combinations(range(g.n), 2):
        if degs[u] < t or degs[v] < t:
            continue
        if has_edge_path and not g.has_edge(u, v):
            continue
        s = _PathSearch(g, u, v, long_paths)
        if s.search(0, (1 << u) | (1 << v)):
            found = sorted(s.paths, key=len)
            if has_edge_path:
                found.insert(0, [u, v])
            return ThetaWitness((u, v), tuple(tuple(x) for x in found))
    return None


def is_theta_free(g: Graph, p: ThetaPattern) -> bool:
    return contains_theta(g, p) is None


EXACT_COLOURING_MAX_N = 16


def _colourable(g: Graph, k: int) -> bool:
    order = sorted(range(g.n), key=lambda x: -g.degree(x))
    colour = [-1] * g.n

    def place(i: int, used: int) -> bool:
        if i == len(order):
            return True
        x = order[i]
        banned = 0
        for y in iter_bits(g.adj[x]):
            if colour[y] >= 0:
                banned |= 1 << colour[y]
        # a fresh colour is interchangeable with every other unused one
        for c in range(min(k, used + 1)):
            if not banned >> c & 1:
                colour[x] = c
                if place(i + 1, max(used, c + 1)):
                    return True
                colour[x] = -1
        return False

    return place(0, 0)


def chromatic_number(g: Graph) -> int:
    if g.n > EXACT_COLOURING_MAX_N:
        raise GraphError(f"exact colouring is limited to n <= {EXACT_COLOURING_MAX_N}")
    if g.n == 0:
        return 0
    k = 1
    while not _colourable(g, k):
        k += 1
    return k


def is_color_critical(h: Graph) -> bool:
    chi = chromatic_number(h)
    return any(chromatic_number(remove_edge(h, a, b)) < chi for a, b in h.edges())
