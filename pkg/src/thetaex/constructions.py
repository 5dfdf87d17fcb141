"""The named extremal graphs and the two parameterised families H(n), G(n).

Vertex numbering is fixed so tests can refer to roles directly:

* ``sk(a, b)``: part A = 0..a-1, part B = a..a+b-1, subdivision vertex a+b
  sitting on the edge (0, a).
* ``circ_k3(a, b)``: parts as above; the triangle is {a, a+b, a+b+1}, so the
  shared vertex ``a`` lies in the part of size b.
* ``bullet_k3(a, b)``: parts as above; apex a+b is joined to 0 and a.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .canon import canonical_form
from .graph import Graph, GraphError, build, has_triangle, is_bipartite


class ConstructionError(ValueError):
    pass


def _kab_edges(a: int, b: int) -> list[tuple[int, int]]:
    return [(i, a + j) for i in range(a) for j in range(b)]


def _check_parts(a: int, b: int) -> None:
    if a < 1 or b < 1:
        raise ConstructionError(f"part sizes must be positive, got ({a}, {b})")


def turan_part_sizes(n: int, r: int) -> list[int]:
    return [n // r + (1 if i < n % r else 0) for i in range(r)]


def turan(n: int, r: int) -> Graph:
    """Complete r-partite graph on n vertices with part sizes as equal as possible."""
    if r < 1:
        raise ConstructionError("r must be at least 1")
    if n < 0:
        raise ConstructionError("n must be non-negative")
    part = []
    for i, size in enumerate(turan_part_sizes(n, r)):
        part.extend([i] * size)
    return build(n, [(i, j) for i in range(n) for j in range(i + 1, n) if part[i] != part[j]])


def turan_edges(n: int, r: int) -> int:
    sizes = turan_part_sizes(n, r)
    return (n * n - sum(s * s for s in sizes)) // 2


def sk(a: int, b: int) -> Graph:
    """K_{a,b} with the edge (0, a) subdivided by a new vertex."""
    _check_parts(a, b)
    s = a + b
    edges = [e for e in _kab_edges(a, b) if e != (0, a)] + [(0, s), (a, s)]
    return build(a + b + 1, edges)


def circ_k3(a: int, b: int) -> Graph:
    """K_{a,b} with a triangle glued at a vertex of the part of size b."""
    _check_parts(a, b)
    s = a + b
    return build(a + b + 2, _kab_edges(a, b) + [(a, s), (a, s + 1), (s, s + 1)])


def bullet_k3(a: int, b: int) -> Graph:
    """K_{a,b} with a triangle glued along the edge (0, a)."""
    _check_parts(a, b)
    s = a + b
    return build(a + b + 1, _kab_edges(a, b) + [(0, s), (a, s)])


def balanced(n: int, shift: int) -> tuple[int, int]:
    """(ceil((n-shift)/2), floor((n-shift)/2))."""
    m = n - shift
    return (m + 1) // 2, m // 2


def sk_balanced(n: int) -> Graph:
    return sk(*balanced(n, 1))


def bullet_k3_balanced(n: int) -> Graph:
    return bullet_k3(*balanced(n, 1))


def circ_k3_balanced(n: int) -> Graph:
    return circ_k3(*balanced(n, 2))


@dataclass(frozen=True)
class FamilyParams:
    """Discrete choice of one member of H(n) or G(n).

    For H: ``b`` is the balance offset and ``x1_size`` is |X1|.  For G:
    ``x1_size``/``y1_size`` are |X1|/|Y1| and ``x_larger`` says which part of
    T_{n-3,2} gets the extra vertex when n-3 is odd.
    """

    family: str
    n: int
    b: int = 0
    x1_size: int = 0
    y1_size: int = 0
    x_larger: bool = True

    def validate(self) -> None:
        if self.family == "H":
            if self.b not in (0, 1) or (self.n % 2 == 1 and self.b != 0):
                raise ConstructionError(f"invalid balance offset b={self.b} for n={self.n}")
            x = self.n // 2 - self.b
            if x < 2:
                raise ConstructionError(f"n={self.n} too small for H(n)")
            if not 1 <= self.x1_size <= x - 1:
                raise ConstructionError(f"X1 must be a non-empty proper subset of X (|X|={x}), got {self.x1_size}")
        elif self.family == "G":
            if self.n < 5:
                raise ConstructionError(f"n={self.n} too small for G(n)")
            x, y = self._g_parts()
            if self.x1_size < 0 or self.y1_size < 0 or self.x1_size > x or self.y1_size > y:
                raise ConstructionError("X1/Y1 sizes out of range")
            if self.x1_size * self.y1_size > 1:
                raise ConstructionError("|X1|*|Y1| must be at most 1")
        else:
            raise ConstructionError(f"unknown family {self.family!r}")

    def _g_parts(self) -> tuple[int, int]:
        big, small = balanced(self.n, 3)
        return (big, small) if self.x_larger else (small, big)


def family_member(p: FamilyParams) -> Graph:
    p.validate()
    if p.family == "H":
        ysize = (p.n + 1) // 2 + p.b
        xsize = p.n - ysize
        # Y = 0..ysize-1 with u1 = 0, u2 = 1; X = ysize..n-1, X1 its first x1_size vertices
        u1, u2 = 0, 1
        xs = list(range(ysize, p.n))
        x1 = set(xs[: p.x1_size])
        edges = [(u1, u2)]
        for y in range(ysize):
            for x in xs:
                if y == u1 and x not in x1:
                    continue
                if y == u2 and x in x1:
                    continue
                edges.append((y, x))
        return build(p.n, edges)
    xsize, ysize = p._g_parts()
    xs = list(range(xsize))
    ys = list(range(xsize, xsize + ysize))
    w1, w2, w3 = p.n - 3, p.n - 2, p.n - 1
    x1, y1 = set(xs[: p.x1_size]), set(ys[: p.y1_size])
    edges = [(x, y) for x in xs for y in ys] + [(w1, w2), (w1, w3), (w2, w3)]
    edges += [(w1, x) for x in xs if x not in x1]
    edges += [(w2, y) for y in ys if y not in y1]
    edges += [(w3, z) for z in sorted(x1 | y1)]
    return build(p.n, edges)


def family_params(family: str, n: int) -> list[FamilyParams]:
    """Every discrete parameter choice for the family at order n."""
    out = []
    if family == "H":
        for b in ((0,) if n % 2 else (0, 1)):
            x = n // 2 - b
            for k in range(1, x):
                out.append(FamilyParams("H", n, b=b, x1_size=k))
    elif family == "G":
        sides = (True,) if (n - 3) % 2 == 0 else (True, False)
        for x_larger in sides:
            probe = FamilyParams("G", n, x_larger=x_larger)
            x, y = probe._g_parts()
            sizes = {(0, 0), (1, 1)} | {(k, 0) for k in range(1, x + 1)} | {(0, k) for k in range(1, y + 1)}
            for x1, y1 in sorted(sizes):
                if x1 <= x and y1 <= y:
                    out.append(FamilyParams("G", n, x1_size=x1, y1_size=y1, x_larger=x_larger))
    else:
        raise ConstructionError(f"unknown family {family!r}")
    return out


def family_edge_count(family: str, n: int) -> int:
    if family == "H":
        return (n - 1) ** 2 // 4 + 1
    if family == "G":
        return (n - 3) ** 2 // 4 + n
    raise ConstructionError(f"unknown family {family!r}")


def enumerate_family(family: str, n: int) -> list[Graph]:
    """One representative per isomorphism class of H(n) or G(n)."""
    if n < 6:
        raise ConstructionError("families are enumerated for n >= 6")
    seen: dict[bytes, Graph] = {}
    expected = family_edge_count(family, n)
    for p in family_params(family, n):
        g = family_member(p)
        if g.edge_count() != expected:
            raise AssertionError(f"{p} has {g.edge_count()} edges, expected {expected}")
        if is_bipartite(g) is not None:
            raise AssertionError(f"{p} is bipartite")
        if family == "H" and has_triangle(g):
            raise AssertionError(f"{p} contains a triangle")
        seen.setdefault(canonical_form(g), g)
    return [seen[k] for k in sorted(seen)]


NAMED = {
    "turan": turan,
    "sk": sk,
    "circ_k3": circ_k3,
    "bullet_k3": bullet_k3,
}


def named_graph(name: str, a: int, b: Optional[int] = None) -> Graph:
    try:
        fn = NAMED[name]
    except KeyError:
        raise ConstructionError(f"unknown construction {name!r}") from None
    if b is None:
        raise ConstructionError(f"{name} needs two parameters")
    return fn(a, b)


def constructions_of_order(n: int) -> dict[str, Graph]:
    """Every named construction with exactly n vertices (used as search lower bounds)."""
    out: dict[str, Graph] = {}
    if n >= 1:
        out["T(n,2)"] = turan(n, 2)
    if n >= 3:
        out["SK bal"] = sk_balanced(n)
        out["bullet bal"] = bullet_k3_balanced(n)
        a, b = balanced(n, 1)
        if a != b:
            out["SK rev"] = sk(b, a)
    if n >= 4:
        a, b = balanced(n, 2)
        out["circ bal"] = circ_k3(a, b)
        if a != b:
            out["circ rev"] = circ_k3(b, a)
    if n >= 6:
        for fam in ("H", "G"):
            for i, g in enumerate(enumerate_family(fam, n)):
                out[f"{fam}[{i}]"] = g
    return out
