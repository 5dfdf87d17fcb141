from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from thetaex import poly

small_ints = st.lists(st.integers(-5, 5), min_size=1, max_size=6)


def sym(p):
    x = sympy.Symbol("x")
    return sympy.Poly(list(reversed(p)), x)


def test_charpoly_k23_by_hand():
    a = [[0, 0, 1, 1, 1], [0, 0, 1, 1, 1], [1, 1, 0, 0, 0], [1, 1, 0, 0, 0], [1, 1, 0, 0, 0]]
    # x^5 - 6 x^3
    assert poly.charpoly(a) == [0, 0, 0, -6, 0, 1]


def test_charpoly_p3():
    assert poly.charpoly([[0, 1, 0], [1, 0, 1], [0, 1, 0]]) == [0, -2, 0, 1]


@settings(max_examples=80, deadline=None)
@given(st.integers(1, 6).flatmap(lambda n: st.lists(st.lists(st.integers(-3, 3), min_size=n, max_size=n),
                                                   min_size=n, max_size=n)))
def test_charpoly_matches_sympy(m):
    x = sympy.Symbol("x")
    ref = sympy.Matrix(m).charpoly(x).all_coeffs()
    assert poly.charpoly(m) == [int(c) for c in reversed(ref)]


@settings(max_examples=80, deadline=None)
@given(small_ints, small_ints)
def test_gcd_matches_sympy(p, q):
    if not poly.trim(p) or not poly.trim(q):
        return
    g = poly.poly_gcd(p, q)
    ref = sympy.gcd(sym(poly.trim(p)), sym(poly.trim(q)))
    assert poly.degree(g) == ref.degree()


def test_squarefree():
    p = poly.mul(poly.mul([-1, 1], [-1, 1]), [2, 1])  # (x-1)^2 (x+2)
    assert poly.squarefree(p) == [-2, 1, 1]


def test_square_roots_poly():
    # roots 1, -2, 3 -> squares 1, 4, 9
    p = poly.mul(poly.mul([-1, 1], [2, 1]), [-3, 1])
    assert poly.square_roots_poly(p) == poly.mul(poly.mul([-1, 1], [-4, 1]), [-9, 1])


def test_shift():
    assert poly.shift([-2, 1], 3) == [-5, 1]


def test_eval_sign():
    assert poly.eval_sign([-2, 0, 1], Fraction(3, 2)) == 1
    assert poly.eval_sign([-2, 0, 1], Fraction(7, 5)) == -1
    assert poly.eval_sign([-4, 0, 1], Fraction(2)) == 0


def test_sturm_counts():
    p = poly.mul(poly.mul([-1, 1], [2, 1]), [-3, 1])
    chain = poly.sturm_chain(p)
    assert poly.count_roots_above(chain, Fraction(0)) == 2
    assert poly.count_roots_above(chain, Fraction(-5)) == 3
    assert poly.count_roots_between(chain, Fraction(1), Fraction(3)) == 1


@settings(max_examples=80, deadline=None)
@given(st.lists(st.integers(-6, 6), min_size=1, max_size=5, unique=True), st.integers(-7, 7))
def test_sturm_counts_random_roots(roots, x):
    p = [1]
    for r in roots:
        p = poly.mul(p, [-r, 1])
    chain = poly.sturm_chain(p)
    assert poly.count_roots_above(chain, Fraction(x)) == sum(1 for r in roots if r > x)


def test_exact_div_error():
    with pytest.raises(ArithmeticError):
        poly.exact_div([1, 0, 1], [1, 1])
