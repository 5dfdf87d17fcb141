"""Isomorph-free generation of graphs by canonical vertex augmentation.

A graph on k+1 vertices is produced from its parent on k vertices by
appending a vertex with neighbourhood S.  The child is kept only when the
appended vertex is equivalent to the child's *canonical deletion vertex*:
the minimum-degree vertex with the largest canonical label.  Every class
then has exactly one parent class, and duplicates can only arise among
siblings, which are removed by canonical form.

Deleting a minimum-degree vertex never lowers edge density, so along every
generation path ``e(G_k) / C(k,2) >= e(G_n) / C(n,2)``; searches use that to
cut subtrees.  Hereditary constraints (closed under vertex deletion) are
applied at every level.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from itertools import combinations
from typing import Callable, Iterator, Optional, Sequence

from . import graph6
from .canon import canonical_form, canonical_labeling, equitable_partition
from .graph import Graph, _trusted, add_vertex, delete_vertex, empty, iter_bits
from .graph import odd_girth
from .theta import ThetaPattern, contains_theta

EXHAUSTIVE_MAX_N = 10

Visitor = Callable[[Graph], None]


class EnumerationError(ValueError):
    pass


class Hereditary:
    """A graph property closed under vertex deletion.

    ``extension_ok`` may reject a neighbourhood cheaply before the child is
    built; ``child_ok`` gets the child, whose last vertex is the new one and
    whose parent already has the property.
    """

    def extension_ok(self, parent: Graph, s: int) -> bool:
        return True

    def child_ok(self, child: Graph) -> bool:
        return True


class Everything(Hereditary):
    pass


class TriangleFree(Hereditary):
    def extension_ok(self, parent: Graph, s: int) -> bool:
        adj = parent.adj
        for i in iter_bits(s):
            if adj[i] & s:
                return False
        return True


class OddGirthAbove(Hereditary):
    """No odd cycle of length <= ``bound``."""

    def __init__(self, bound: int):
        self.bound = bound
        self._tri = TriangleFree()

    def extension_ok(self, parent: Graph, s: int) -> bool:
        return self._tri.extension_ok(parent, s)

    def child_ok(self, child: Graph) -> bool:
        og = odd_girth(child)
        return og is None or og > self.bound


class ThetaFree(Hereditary):
    def __init__(self, pattern: ThetaPattern):
        self.pattern = pattern

    def child_ok(self, child: Graph) -> bool:
        if child.adj[-1].bit_count() < 2:
            # a theta is 2-connected, so a new vertex of degree <= 1 is in no copy
            return True
        return contains_theta(child, self.pattern) is None


class AllOf(Hereditary):
    def __init__(self, parts: Sequence[Hereditary]):
        self.parts = list(parts)

    def extension_ok(self, parent: Graph, s: int) -> bool:
        return all(p.extension_ok(parent, s) for p in self.parts)

    def child_ok(self, child: Graph) -> bool:
        return all(p.child_ok(child) for p in self.parts)


class EdgeDensityBound:
    """Cut a subtree unless its leaves at order ``n`` can reach ``min_edges``."""

    def __init__(self, n: int, min_edges: int):
        self.n, self.min_edges = n, min_edges

    def max_edges(self, k: int, e: int) -> float:
        if k < 2:
            return self.n * (self.n - 1) / 2
        return e * self.n * (self.n - 1) / (k * (k - 1))

    def alive(self, k: int, e: int) -> bool:
        if k < 2:
            return True
        return e * self.n * (self.n - 1) >= self.min_edges * k * (k - 1)


def _candidate_sets(pdeg: list[int], k: int) -> Iterator[int]:
    """Neighbourhoods S of the new vertex for which it has minimum degree."""
    for d in range(k + 1):
        forced = 0
        ok = True
        for i, x in enumerate(pdeg):
            if x < d - 1:
                ok = False
                break
            if x == d - 1:
                forced |= 1 << i
        if not ok:
            break
        nf = forced.bit_count()
        if nf > d:
            continue
        rest = [i for i in range(k) if not forced >> i & 1]
        for extra in combinations(rest, d - nf):
            s = forced
            for i in extra:
                s |= 1 << i
            yield s


def children(
    parent: Graph,
    parent_cf: bytes,
    prop: Hereditary,
    bound: Optional[EdgeDensityBound] = None,
) -> list[tuple[Graph, bytes]]:
    """Accepted, pairwise non-isomorphic one-vertex extensions of ``parent``."""
    k = parent.n
    pdeg = parent.degrees()
    pe = sum(pdeg) // 2
    v = k
    vbit = 1 << v
    out: dict[bytes, Graph] = {}
    for s in _candidate_sets(pdeg, k):
        d = s.bit_count()
        if bound is not None and not bound.alive(k + 1, pe + d):
            continue
        if not prop.extension_ok(parent, s):
            continue
        child = add_vertex(parent, s)
        if not prop.child_ok(child):
            continue
        cells = equitable_partition(child)
        last = None
        for c in cells:
            if child.adj[c.bit_length() - 1].bit_count() == d:
                last = c
            elif last is not None:
                break
        if not last & vbit:
            continue
        order, autos = canonical_labeling(child)
        perm = [0] * (k + 1)
        for i, x in enumerate(order):
            perm[x] = i
        if last != vbit:
            w = max(iter_bits(last), key=lambda x: perm[x])
            if w != v and not _same_orbit(autos, v, w, k + 1):
                if canonical_form(delete_vertex(child, w)) != parent_cf:
                    continue
        rows = [0] * (k + 1)
        for x, row in enumerate(child.adj):
            m = 0
            for y in iter_bits(row):
                m |= 1 << perm[y]
            rows[perm[x]] = m
        cf = graph6.encode(_trusted(k + 1, rows)).encode("ascii")
        out.setdefault(cf, child)
    return [(g, cf) for cf, g in out.items()]


def _same_orbit(autos, a: int, b: int, n: int) -> bool:
    if not autos:
        return False
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for g in autos:
        for x, y in enumerate(g):
            rx, ry = find(x), find(y)
            if rx != ry:
                parent[rx] = ry
    return find(a) == find(b)


def _walk(
    g: Graph,
    cf: bytes,
    n: int,
    prop: Hereditary,
    bound: Optional[EdgeDensityBound],
    visit: Visitor,
) -> int:
    if g.n == n:
        visit(g)
        return 1
    total = 0
    for child, ccf in children(g, cf, prop, bound):
        total += _walk(child, ccf, n, prop, bound, visit)
    return total


def level(
    k: int,
    prop: Optional[Hereditary] = None,
    bound: Optional[EdgeDensityBound] = None,
) -> list[tuple[Graph, bytes]]:
    """All (graph, canonical form) pairs of order k in the class, breadth first."""
    prop = prop or Everything()
    cur = [(empty(0), canonical_form(empty(0)))]
    for _ in range(k):
        nxt = []
        for g, cf in cur:
            nxt.extend(children(g, cf, prop, bound))
        cur = nxt
    return cur


def _subtree_worker(args) -> list[str]:
    g6, cf, n, prop, bound = args
    out: list[str] = []
    _walk(graph6.decode(g6), cf, n, prop, bound, lambda h: out.append(graph6.encode(h)))
    return out


def iter_class(
    n: int,
    prop: Optional[Hereditary] = None,
    bound: Optional[EdgeDensityBound] = None,
    jobs: int = 1,
) -> Iterator[Graph]:
    """Yield one graph per isomorphism class of order n having ``prop``.

    With ``jobs > 1`` subtrees hanging off the level ``max(n - 3, 0)`` nodes
    are independent work units handed to a process pool.
    """
    if not 0 <= n <= EXHAUSTIVE_MAX_N:
        raise EnumerationError(f"exhaustive enumeration is limited to n <= {EXHAUSTIVE_MAX_N}")
    prop = prop or Everything()
    if jobs <= 1:
        stack: list[tuple[Graph, bytes]] = [(empty(0), canonical_form(empty(0)))]
        while stack:
            g, cf = stack.pop()
            if g.n == n:
                yield g
                continue
            kids = children(g, cf, prop, bound)
            stack.extend(reversed(kids))
        return
    split = max(n - 3, 0)
    units = [(graph6.encode(g), cf, n, prop, bound) for g, cf in level(split, prop, bound)]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        for batch in pool.map(_subtree_worker, units, chunksize=max(1, len(units) // (8 * jobs))):
            for g6 in batch:
                yield graph6.decode(g6)


def enumerate_all(n: int, visitor: Optional[Visitor] = None, prop: Optional[Hereditary] = None,
                  jobs: int = 1, mode: str = "augment") -> int:
    """Visit one representative of every isomorphism class of order n.

    ``mode="naive"`` grows each level by every possible neighbourhood and
    dedupes globally by canonical form; it is the slow cross-check for n <= 7.
    Returns the number of classes visited.
    """
    if mode == "naive":
        graphs = naive_classes(n, prop)
    elif mode == "augment":
        graphs = iter_class(n, prop, jobs=jobs)
    else:
        raise EnumerationError(f"unknown mode {mode!r}")
    count = 0
    for g in graphs:
        if visitor is not None:
            visitor(g)
        count += 1
    return count


NAIVE_MAX_N = 8


def naive_classes(n: int, prop: Optional[Hereditary] = None) -> list[Graph]:
    if not 0 <= n <= NAIVE_MAX_N:
        raise EnumerationError(f"naive mode is limited to n <= {NAIVE_MAX_N}")
    prop = prop or Everything()
    cur = {canonical_form(empty(0)): empty(0)}
    for k in range(n):
        nxt: dict[bytes, Graph] = {}
        for g in cur.values():
            for s in range(1 << k):
                if not prop.extension_ok(g, s):
                    continue
                child = add_vertex(g, s)
                if prop.child_ok(child):
                    nxt.setdefault(canonical_form(child), child)
        cur = nxt
    return [cur[k] for k in sorted(cur)]
