"""Spectral radius: a floating power-iteration estimate and an exact tier.

The exact tier works on the quotient matrix of the coarsest equitable
partition of each connected component.  For a connected graph that quotient
is a non-negative irreducible integer matrix whose Perron root equals
rho(G), so its characteristic polynomial carries the spectral radius while
usually being far smaller than the adjacency matrix.  The largest root is
then isolated with Sturm sequences and rational bisection.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Optional

import numpy as np

from . import poly
from .canon import equitable_partition
from .graph import Graph, GraphError, _trusted, components, delete_vertex, induced, iter_bits

EXACT_MAX_ORDER = 20
DEFAULT_WIDTH = Fraction(1, 10**12)


class SpectralError(ValueError):
    pass


class Order(enum.Enum):
    LESS = "Less"
    EQUAL = "Equal"
    GREATER = "Greater"


@dataclass(frozen=True)
class RhoInterval:
    lo: Fraction
    hi: Fraction

    def contains(self, x) -> bool:
        return self.lo <= Fraction(x) <= self.hi

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    def to_dict(self) -> dict:
        return {"lo": str(self.lo), "hi": str(self.hi), "lo_float": float(self.lo), "hi_float": float(self.hi)}


@dataclass(frozen=True)
class PerronEstimate:
    vector: np.ndarray
    rayleigh: float
    residual: float
    iterations: int


def adjacency_matrix(g: Graph) -> np.ndarray:
    a = np.zeros((g.n, g.n))
    for i, row in enumerate(g.adj):
        for j in iter_bits(row):
            a[i, j] = 1.0
    return a


def _power_component(a: np.ndarray, tol: float, seed: int, max_iter: int) -> tuple[np.ndarray, float, float, int]:
    m = a.shape[0]
    if m == 1:
        return np.ones(1), 0.0, 0.0, 0
    # A + I keeps the dominant eigenvalue unique in modulus for bipartite blocks
    shifted = a + np.eye(m)
    x = np.ones(m) / np.sqrt(m)
    rng = np.random.default_rng(seed)
    best = np.inf
    since_best = 0
    it = 0
    lam, res = 0.0, np.inf
    while it < max_iter:
        y = shifted @ x
        x = y / np.linalg.norm(y)
        ax = a @ x
        lam = float(x @ ax)
        res = float(np.linalg.norm(ax - lam * x))
        it += 1
        if res <= tol:
            break
        if res < best * (1 - 1e-9):
            best, since_best = res, 0
        else:
            since_best += 1
            if since_best >= 1000:
                x = rng.random(m) + 0.5
                x /= np.linalg.norm(x)
                best, since_best = np.inf, 0
    return x, lam, res, it


def rho_estimate(g: Graph, tol: float = 1e-10, seed: int = 0, max_iter: int = 200_000) -> PerronEstimate:
    """Power iteration per connected component, keeping the largest Rayleigh quotient."""
    if g.n == 0:
        raise SpectralError("spectral radius of the empty graph is undefined")
    if tol <= 0:
        raise SpectralError("tol must be positive")
    a = adjacency_matrix(g)
    best = None
    for comp in components(g):
        idx = list(iter_bits(comp))
        x, lam, res, it = _power_component(a[np.ix_(idx, idx)], tol, seed, max_iter)
        if best is None or lam > best[1] + 1e-12:
            vec = np.zeros(g.n)
            vec[idx] = np.abs(x)
            best = (vec, lam, res, it)
    vec, lam, res, it = best
    return PerronEstimate(vec, lam, res, it)


def quotient_matrix(g: Graph, cells: list[int]) -> list[list[int]]:
    """Neighbour counts from a representative of cell i into cell j."""
    return [[(g.adj[c.bit_length() - 1] & d).bit_count() for d in cells] for c in cells]


def rho_polynomial(g: Graph, max_order: int = EXACT_MAX_ORDER) -> list[int]:
    """Integer polynomial, real-rooted, whose largest root is rho(g).

    Product over components of the characteristic polynomial of the
    equitable quotient.  Graphs with n <= ``max_order`` are always accepted;
    larger graphs only when every component quotient has order <= max_order.
    """
    if g.n == 0:
        raise SpectralError("spectral radius of the empty graph is undefined")
    if g.n > 64:
        raise SpectralError("graphs are capped at 64 vertices")
    return _rho_polynomial_cached(g.n, g.adj, max_order)


@lru_cache(maxsize=4096)
def _rho_polynomial_cached(n: int, adj: tuple[int, ...], max_order: int) -> tuple[int, ...]:
    g = _trusted(n, adj)
    out = [1]
    for comp in components(g):
        sub = induced(g, list(iter_bits(comp)))
        cells = equitable_partition(sub)
        if len(cells) > max_order and n > max_order:
            raise SpectralError(
                f"exact mode needs n <= {max_order} or equitable quotients of order <= {max_order}; "
                f"got a component quotient of order {len(cells)}"
            )
        out = poly.mul(out, poly.charpoly(quotient_matrix(sub, cells)))
    return tuple(out)


class LargestRoot:
    """Largest real root of a real-rooted integer polynomial, held in (lo, hi].

    ``exact`` is set when the root has been hit on the nose (lo == hi).
    """

    def __init__(self, p, lo: Fraction, hi: Fraction):
        self.poly = poly.squarefree(list(p))
        self.chain = poly.sturm_chain(self.poly)
        self.lo, self.hi = Fraction(lo), Fraction(hi)
        if poly.count_roots_above(self.chain, self.hi) != 0:
            raise ArithmeticError("upper bound is below the largest root")
        if poly.count_roots_above(self.chain, self.lo) < 1:
            raise ArithmeticError("lower bound is above the largest root")
        self.exact = False
        if poly.eval_sign(self.poly, self.hi) == 0:
            self.lo, self.exact = self.hi, True

    def bisect(self) -> None:
        if self.exact:
            return
        mid = (self.lo + self.hi) / 2
        above = poly.count_roots_above(self.chain, mid)
        if above == 0:
            if poly.eval_sign(self.poly, mid) == 0:
                self.lo = self.hi = mid
                self.exact = True
            else:
                self.hi = mid
        else:
            self.lo = mid

    def refine(self, width: Fraction) -> "LargestRoot":
        while not self.exact and self.hi - self.lo > width:
            self.bisect()
        return self

    def isolating(self) -> bool:
        return self.exact or poly.count_roots_above(self.chain, self.lo) == 1

    def exceeds(self, x: Fraction) -> bool:
        """Is the largest root strictly greater than x?"""
        return poly.count_roots_above(self.chain, Fraction(x)) >= 1

    def interval(self) -> RhoInterval:
        return RhoInterval(self.lo, self.hi)


def compare_roots(r1: LargestRoot, r2: LargestRoot) -> Order:
    """Exact comparison of two largest roots.

    Intervals are bisected until disjoint.  Once both isolate their root
    and still overlap, a common root of the two polynomials inside the
    overlap proves equality.
    """
    common = None
    while True:
        if r1.exact and r2.exact:
            if r1.lo == r2.lo:
                return Order.EQUAL
            return Order.LESS if r1.lo < r2.lo else Order.GREATER
        # a non-exact root lies in the half-open (lo, hi]
        if r1.hi < r2.lo or (r1.hi == r2.lo and not r2.exact):
            return Order.LESS
        if r2.hi < r1.lo or (r2.hi == r1.lo and not r1.exact):
            return Order.GREATER
        if r1.exact or r2.exact:
            point, other = (r1, r2) if r1.exact else (r2, r1)
            x = point.lo
            if other.isolating() and other.lo < x <= other.hi and poly.eval_sign(other.poly, x) == 0:
                return Order.EQUAL
            other.bisect()
            continue
        if r1.isolating() and r2.isolating():
            if common is None:
                common = poly.poly_gcd(r1.poly, r2.poly)
            if poly.degree(common) >= 1:
                lo, hi = max(r1.lo, r2.lo), min(r1.hi, r2.hi)
                if lo < hi and poly.count_roots_between(poly.sturm_chain(common), lo, hi) >= 1:
                    return Order.EQUAL
        if r1.hi - r1.lo >= r2.hi - r2.lo:
            r1.bisect()
        else:
            r2.bisect()


def _rho_root(g: Graph, max_order: int = EXACT_MAX_ORDER) -> LargestRoot:
    p = rho_polynomial(g, max_order)
    delta = max(g.degrees())
    return LargestRoot(p, Fraction(-1), Fraction(delta))


def rho_exact(g: Graph, width: Fraction = DEFAULT_WIDTH, max_order: int = EXACT_MAX_ORDER) -> RhoInterval:
    """Certified rational bracket [lo, hi] around rho(g) with hi - lo <= width."""
    width = Fraction(width)
    if width <= 0:
        raise SpectralError("width must be positive")
    r = _rho_root(g, max_order).refine(width)
    lo = max(r.lo, Fraction(0))
    return RhoInterval(lo, max(r.hi, lo))


def compare_rho(g: Graph, h: Graph, max_order: int = EXACT_MAX_ORDER) -> Order:
    return compare_roots(_rho_root(g, max_order), _rho_root(h, max_order))


def rho_exceeds(g: Graph, x, max_order: int = EXACT_MAX_ORDER) -> bool:
    """Exact test of rho(g) > x for rational x."""
    return _rho_root(g, max_order).exceeds(Fraction(x))


def rho_squared_root(g: Graph, plus: int = 0, max_order: int = EXACT_MAX_ORDER) -> LargestRoot:
    """rho(g)^2 + plus as the largest root of an integer polynomial."""
    if g.n == 0:
        return LargestRoot([-plus, 1], Fraction(plus - 1), Fraction(plus))
    p = poly.square_roots_poly(list(rho_polynomial(g, max_order)))
    delta = max(g.degrees())
    return LargestRoot(poly.shift(p, plus), Fraction(plus - 1), Fraction(delta * delta + plus))


def rho_squared_exceeds(g: Graph, m, max_order: int = EXACT_MAX_ORDER) -> bool:
    """Exact test of rho(g)^2 > m, i.e. rho(g) > sqrt(m) for m >= 0."""
    return rho_squared_root(g, 0, max_order).exceeds(Fraction(m))


def vertex_deletion_bound_check(g: Graph, u: int, max_order: int = EXACT_MAX_ORDER) -> bool:
    """Exact check of rho(G)^2 <= rho(G - u)^2 + 2 d(u)."""
    if g.n < 2:
        raise SpectralError("need at least two vertices")
    if not 0 <= u < g.n:
        raise GraphError(f"vertex {u} out of range")
    lhs = rho_squared_root(g, 0, max_order)
    rhs = rho_squared_root(delete_vertex(g, u), 2 * g.degree(u), max_order)
    return compare_roots(lhs, rhs) is not Order.GREATER


def rayleigh_lower_bound(g: Graph) -> Fraction:
    """All-ones Rayleigh quotient 2e/n, a certified lower bound on rho."""
    if g.n == 0:
        raise SpectralError("empty graph")
    return Fraction(2 * g.edge_count(), g.n)


def rho_float(g: Graph) -> float:
    if g.n == 0:
        return 0.0
    return float(np.linalg.eigvalsh(adjacency_matrix(g))[-1])
