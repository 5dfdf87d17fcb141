"""Brute-force extremal searches over isomorph-free enumerations.

``ex_search`` maximises edges, ``spex_search`` the spectral radius, over
n-vertex graphs that avoid a theta pattern (and/or short odd cycles) and
optionally are non-bipartite.  The forbidden structure is hereditary, so it
prunes the generation tree; the bipartiteness constraint is not, and is
applied to leaves only.  The best applicable construction supplies a lower
bound that drives the edge-density cut.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional, Union

from . import graph6
from .canon import canonical_form
from .constructions import constructions_of_order
from .enumerate import (
    EXHAUSTIVE_MAX_N,
    AllOf,
    EdgeDensityBound,
    Everything,
    Hereditary,
    OddGirthAbove,
    ThetaFree,
    iter_class,
)
from .graph import Graph, is_bipartite, odd_girth
from .spectral import Order, RhoInterval, compare_rho, rho_exact, rho_float
from .theta import ThetaPattern, contains_theta

SPEX_MAX_N = 9
CONSTRAINTS = ("none", "non_bipartite")
OBJECTIVES = ("edges", "rho")


class SearchError(ValueError):
    pass


@dataclass(frozen=True)
class SearchSpec:
    n: int
    pattern: Optional[ThetaPattern] = None
    constraint: str = "non_bipartite"
    objective: str = "edges"
    odd_girth_min: Optional[int] = None

    def validate(self) -> None:
        if not 1 <= self.n <= EXHAUSTIVE_MAX_N:
            raise SearchError(f"exhaustive search needs 1 <= n <= {EXHAUSTIVE_MAX_N}, got {self.n}")
        if self.constraint not in CONSTRAINTS:
            raise SearchError(f"unknown constraint {self.constraint!r}")
        if self.objective not in OBJECTIVES:
            raise SearchError(f"unknown objective {self.objective!r}")
        if self.objective == "rho" and self.n > SPEX_MAX_N:
            raise SearchError(f"spectral search is limited to n <= {SPEX_MAX_N}")
        if self.odd_girth_min is not None and (self.odd_girth_min < 3 or self.odd_girth_min % 2 == 0):
            raise SearchError("odd_girth_min must be an odd integer >= 3")

    def admits(self, g: Graph) -> bool:
        """Full (non-incremental) membership test, used for re-verification."""
        if g.n != self.n:
            return False
        if self.constraint == "non_bipartite" and is_bipartite(g) is not None:
            return False
        if self.odd_girth_min is not None:
            og = odd_girth(g)
            if og is not None and og < self.odd_girth_min:
                return False
        if self.pattern is not None and contains_theta(g, self.pattern) is not None:
            return False
        return True

    def hereditary(self) -> Hereditary:
        parts: list[Hereditary] = []
        if self.odd_girth_min is not None and self.odd_girth_min > 3:
            parts.append(OddGirthAbove(self.odd_girth_min - 2))
        if self.pattern is not None:
            parts.append(ThetaFree(self.pattern))
        if not parts:
            return Everything()
        return parts[0] if len(parts) == 1 else AllOf(parts)

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "pattern": list(self.pattern.lengths) if self.pattern else None,
            "constraint": self.constraint,
            "objective": self.objective,
            "odd_girth_min": self.odd_girth_min,
        }


@dataclass
class ExtremalRecord:
    spec: SearchSpec
    best_value: Union[int, RhoInterval, None]
    maximizers: list[str]
    classes_scanned: int
    lower_bound: Optional[float] = None
    lower_bound_source: Optional[str] = None
    notes: list[str] = field(default_factory=list)

    def graphs(self) -> list[Graph]:
        return [graph6.decode(s) for s in self.maximizers]

    def to_dict(self) -> dict:
        bv = self.best_value
        if isinstance(bv, RhoInterval):
            bv = bv.to_dict()
        return {
            "spec": self.spec.to_dict(),
            "best_value": bv,
            "maximizers": list(self.maximizers),
            "classes_scanned": self.classes_scanned,
            "lower_bound": self.lower_bound,
            "lower_bound_source": self.lower_bound_source,
            "notes": list(self.notes),
        }


def _canonical_g6(g: Graph) -> str:
    return canonical_form(g).decode("ascii")


def construction_witnesses(spec: SearchSpec) -> dict[str, Graph]:
    """Named constructions of order n that satisfy every condition of ``spec``."""
    return {name: g for name, g in constructions_of_order(spec.n).items() if spec.admits(g)}


def ex_search(spec: SearchSpec, jobs: int = 1) -> ExtremalRecord:
    spec.validate()
    if spec.objective != "edges":
        raise SearchError("ex_search maximises edges; use spex_search for rho")
    witnesses = construction_witnesses(spec)
    lb, src = 0, None
    for name, g in witnesses.items():
        if g.edge_count() > lb:
            lb, src = g.edge_count(), name
    bound = EdgeDensityBound(spec.n, lb) if lb else None
    best = -1
    found: dict[str, Graph] = {}
    scanned = 0
    need_bip_check = spec.constraint == "non_bipartite"
    for g in iter_class(spec.n, spec.hereditary(), bound, jobs=jobs):
        scanned += 1
        e = g.edge_count()
        if e < best:
            continue
        if need_bip_check and is_bipartite(g) is not None:
            continue
        if e > best:
            best, found = e, {}
        found[_canonical_g6(g)] = g
    rec = ExtremalRecord(
        spec,
        best if best >= 0 else None,
        sorted(found),
        scanned,
        lower_bound=lb if src else None,
        lower_bound_source=src,
    )
    verify_record(rec)
    return rec


def _stanley_min_edges(rho_lb: float) -> int:
    # rho <= (-1 + sqrt(1 + 8m)) / 2, so rho >= r forces m >= r (r + 1) / 2
    r = max(rho_lb - 1e-9, 0.0)
    return max(int(math.floor(r * (r + 1) / 2 - 1e-9)), 0)


def spex_search(spec: SearchSpec, jobs: int = 1) -> ExtremalRecord:
    spec.validate()
    if spec.objective != "rho":
        raise SearchError("spex_search maximises rho; use ex_search for edges")
    witnesses = construction_witnesses(spec)
    rho_lb, src = 0.0, None
    for name, g in witnesses.items():
        r = rho_float(g)
        if r > rho_lb:
            rho_lb, src = r, name
    min_edges = _stanley_min_edges(rho_lb) if src else 0
    bound = EdgeDensityBound(spec.n, min_edges) if min_edges else None
    need_bip_check = spec.constraint == "non_bipartite"
    best_f = -1.0
    cands: list[tuple[float, Graph]] = []
    scanned = 0
    for g in iter_class(spec.n, spec.hereditary(), bound, jobs=jobs):
        scanned += 1
        if need_bip_check and is_bipartite(g) is not None:
            continue
        r = rho_float(g)
        if r < best_f - 1e-7:
            continue
        best_f = max(best_f, r)
        cands.append((r, g))
    cands = [(r, g) for r, g in cands if r >= best_f - 1e-7]
    cands.sort(key=lambda t: -t[0])
    champion: Optional[Graph] = None
    tied: list[Graph] = []
    for _, g in cands:
        if champion is None:
            champion, tied = g, [g]
            continue
        c = compare_rho(g, champion)
        if c is Order.GREATER:
            champion, tied = g, [g]
        elif c is Order.EQUAL:
            tied.append(g)
    best_value = rho_exact(champion) if champion is not None else None
    maxi = sorted({_canonical_g6(g) for g in tied})
    rec = ExtremalRecord(spec, best_value, maxi, scanned, lower_bound=rho_lb if src else None,
                         lower_bound_source=src)
    verify_record(rec)
    return rec


def triangle_constraint_search(n: int, odd_girth_min: int, objective: str = "edges",
                               jobs: int = 1) -> ExtremalRecord:
    """Extremal search over non-bipartite graphs with odd girth >= odd_girth_min."""
    if odd_girth_min < 3 or odd_girth_min % 2 == 0:
        raise SearchError("odd_girth_min must be odd and >= 3")
    spec = SearchSpec(n, None, "non_bipartite", objective, odd_girth_min)
    return ex_search(spec, jobs) if objective == "edges" else spex_search(spec, jobs)


def search(spec: SearchSpec, jobs: int = 1) -> ExtremalRecord:
    return ex_search(spec, jobs) if spec.objective == "edges" else spex_search(spec, jobs)


def verify_record(rec: ExtremalRecord) -> None:
    """Re-check every maximizer outside the search path; raise on any mismatch."""
    seen = set()
    for s in rec.maximizers:
        g = graph6.decode(s)
        if not rec.spec.admits(g):
            raise AssertionError(f"maximizer {s} violates the search conditions")
        if rec.spec.objective == "edges" and g.edge_count() != rec.best_value:
            raise AssertionError(f"maximizer {s} has {g.edge_count()} edges, best is {rec.best_value}")
        if rec.spec.objective == "rho" and not rec.best_value.lo - 1e-9 <= rho_float(g) <= rec.best_value.hi + 1e-9:
            raise AssertionError(f"maximizer {s} does not attain the best spectral radius")
        cf = canonical_form(g)
        if cf in seen:
            raise AssertionError("isomorphic maximizers in record")
        seen.add(cf)


def spex_within_ex(ex_rec: ExtremalRecord, spex_rec: ExtremalRecord) -> dict:
    """Does every spectral maximizer also maximise the edge count?"""
    edges = {s: graph6.decode(s).edge_count() for s in spex_rec.maximizers}
    ok = bool(edges) and all(e == ex_rec.best_value for e in edges.values())
    return {
        "subset": ok,
        "ex_best": ex_rec.best_value,
        "spex_maximizer_edges": edges,
        "spex_maximizers_in_ex": sorted(set(spex_rec.maximizers) & set(ex_rec.maximizers)),
    }
