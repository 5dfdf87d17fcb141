"""Exact integer polynomials: characteristic polynomials and Sturm root isolation.

Polynomials are lists of Python ints, lowest degree first.  Sturm chains are
kept primitive with positive scaling only, which leaves every sign
variation count unchanged.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Optional, Sequence

def trim(p: Sequence) -> list:
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return p


def degree(p: Sequence) -> int:
    return len(trim(p)) - 1


def derivative(p: Sequence[int]) -> list[int]:
    return [i * c for i, c in enumerate(p)][1:]


def mul(p: Sequence[int], q: Sequence[int]) -> list[int]:
    if not p or not q:
        return []
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return out


def sub(p: Sequence[int], q: Sequence[int]) -> list[int]:
    m = max(len(p), len(q))
    return trim([(p[i] if i < len(p) else 0) - (q[i] if i < len(q) else 0) for i in range(m)])


def primitive(p: Sequence) -> list[int]:
    """Scale a rational polynomial to coprime integers by a positive factor."""
    p = trim(p)
    if not p:
        return []
    fr = [Fraction(c) for c in p]
    den = lcm(*(c.denominator for c in fr))
    ints = [int(c * den) for c in fr]
    g = 0
    for c in ints:
        g = gcd(g, c)
    return [c // g for c in ints]


def monic_sign(p: list[int]) -> list[int]:
    return [-c for c in p] if p and p[-1] < 0 else p


def divmod_poly(p: Sequence, q: Sequence) -> tuple[list[Fraction], list[Fraction]]:
    p = [Fraction(c) for c in trim(p)]
    q = [Fraction(c) for c in trim(q)]
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    quot = [Fraction(0)] * max(len(p) - len(q) + 1, 0)
    lead = q[-1]
    while len(p) >= len(q) and p:
        shift = len(p) - len(q)
        c = p[-1] / lead
        quot[shift] = c
        for i, b in enumerate(q):
            p[i + shift] -= c * b
        p = trim(p)
    return quot, p


def poly_gcd(p: Sequence[int], q: Sequence[int]) -> list[int]:
    a, b = primitive(p), primitive(q)
    while b:
        _, r = divmod_poly(a, b)
        a, b = b, primitive(r)
    return monic_sign(primitive(a))


def exact_div(p: Sequence[int], q: Sequence[int]) -> list[int]:
    quot, rem = divmod_poly(p, q)
    if rem:
        raise ArithmeticError("division is not exact")
    return monic_sign(primitive(quot))


def squarefree(p: Sequence[int]) -> list[int]:
    p = monic_sign(primitive(p))
    if degree(p) <= 0:
        return p
    return exact_div(p, poly_gcd(p, derivative(p)))


def charpoly(m: Sequence[Sequence[int]]) -> list[int]:
    """det(xI - M) for a square integer matrix, by Faddeev-LeVerrier.

    Every division by k is exact over the integers.
    """
    n = len(m)
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    if n == 0:
        return coeffs
    cur = [[0] * n for _ in range(n)]
    for k in range(1, n + 1):
        # cur <- M @ cur + c_{n-k+1} I
        c_prev = coeffs[n - k + 1]
        nxt = [[0] * n for _ in range(n)]
        for i in range(n):
            row = m[i]
            out = nxt[i]
            for t, a in enumerate(row):
                if a:
                    src = cur[t]
                    for j in range(n):
                        out[j] += a * src[j]
            out[i] += c_prev
        cur = nxt
        tr = 0
        for i in range(n):
            row = m[i]
            for t in range(n):
                tr += row[t] * cur[t][i]
        if tr % k:
            raise ArithmeticError("Faddeev-LeVerrier trace not divisible; matrix not integral?")
        coeffs[n - k] = -tr // k
    return coeffs


def square_roots_poly(p: Sequence[int]) -> list[int]:
    """Polynomial whose roots are the squares of the roots of ``p``."""
    even = list(p[0::2])
    odd = list(p[1::2])
    # p(x) p(-x) = E(y)^2 - y O(y)^2 with y = x^2
    return monic_sign(sub(mul(even, even), [0] + mul(odd, odd)))


def shift(p: Sequence[int], s: int) -> list[int]:
    """q(y) = p(y - s), i.e. every root moves up by s."""
    out: list[int] = []
    for c in reversed(list(p)):
        # Horner step: out = out * (y - s) + c
        nxt = [0] * (len(out) + 1)
        for i, a in enumerate(out):
            nxt[i + 1] += a
            nxt[i] -= s * a
        nxt[0] += c
        out = nxt
    return trim(out)


def eval_sign(p: Sequence[int], x: Fraction) -> int:
    """Exact sign of p(x) for rational x."""
    x = Fraction(x)
    a, b = x.numerator, x.denominator
    # Homogeneous Horner: acc = b^deg * p(a/b), and b > 0.
    acc = 0
    bpow = 1
    for c in reversed(p):
        acc = acc * a + c * bpow
        bpow *= b
    return (acc > 0) - (acc < 0)


def sturm_chain(p: Sequence[int]) -> list[list[int]]:
    p0 = monic_sign(primitive(p))
    chain = [p0]
    if degree(p0) <= 0:
        return chain
    chain.append(primitive(derivative(p0)))
    while degree(chain[-1]) > 0:
        _, r = divmod_poly(chain[-2], chain[-1])
        r = primitive([-c for c in r])
        if not r:
            break
        chain.append(r)
    return chain


def variations(chain: Sequence[Sequence[int]], x: Optional[Fraction]) -> int:
    """Sign variations of the chain at x (``None`` means +infinity); zeros dropped."""
    signs = []
    for q in chain:
        if x is None:
            s = (q[-1] > 0) - (q[-1] < 0) if q else 0
        else:
            s = eval_sign(q, x)
        if s:
            signs.append(s)
    return sum(1 for s, t in zip(signs, signs[1:]) if s != t)


def count_roots_above(chain: Sequence[Sequence[int]], x: Fraction) -> int:
    """Number of distinct real roots in (x, +inf) for a square-free chain head."""
    return variations(chain, x) - variations(chain, None)


def count_roots_between(chain: Sequence[Sequence[int]], a: Fraction, b: Fraction) -> int:
    """Number of distinct real roots in (a, b]."""
    return variations(chain, a) - variations(chain, b)
