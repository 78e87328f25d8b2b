from fractions import Fraction

import pytest
from hypothesis import given

from gesselwalks.laurent import ONE, X, Y, ZERO, LaurentPoly, lp_arith, lp_coeff, lp_split, grader
from conftest import gradings, laurent_polys


def test_binomial_square():
    b = X + X ** -1
    assert lp_arith("mul", b, b) == X ** 2 + 2 + X ** -2


def test_identity_and_cancellation():
    p = X * Y ** -2 + Fraction(3, 4)
    assert lp_arith("mul", ONE, p) == p
    assert lp_arith("add", X - Y, Y - X) == ZERO
    assert lp_arith("neg", p) + p == ZERO


def test_split_examples():
    p = X ** 2 + 3 + X ** -1 * Y
    assert lp_split(p, "x") == (X ** -1 * Y, LaurentPoly.constant(3), X ** 2)
    assert lp_split(ZERO, "y") == (ZERO, ZERO, ZERO)
    q = X * Y ** -1 + X ** -1 * Y
    assert lp_split(q, (1, 1)) == (ZERO, q, ZERO)


def test_coeff_examples():
    p = X ** 2 + 2 + X ** -2
    assert lp_coeff(p, (0, 0, 0)) == 2
    assert lp_coeff(p, (1, 0, 0)) == 0
    assert lp_coeff(LaurentPoly.monomial(1, 1, 0, Fraction(3, 2)), (1, 1, 0)) == Fraction(3, 2)


def test_rejects_floats():
    with pytest.raises(TypeError):
        LaurentPoly.constant(0.5)


def test_integral_fractions_become_ints():
    p = LaurentPoly({(1, 0, 0): Fraction(4, 2)})
    assert type(p.terms[(1, 0, 0)]) is int


@given(laurent_polys, laurent_polys, laurent_polys)
def test_ring_axioms(p, q, r):
    assert (p * q) * r == p * (q * r)
    assert p * q == q * p
    assert (p + q) + r == p + (q + r)
    assert p * (q + r) == p * q + p * r


@given(laurent_polys, laurent_polys)
def test_no_stored_zeros(p, q):
    for result in (p + q, p * q, p - p, -p, p.scale(0)):
        assert all(c != 0 for c in result.terms.values())


@given(laurent_polys, gradings)
def test_split_reconstructs_with_signs(p, grading):
    neg, zero, pos = p.split(grading)
    assert neg + zero + pos == p
    g = grader(grading)
    assert all(g(k) < 0 for k in neg)
    assert all(g(k) == 0 for k in zero)
    assert all(g(k) > 0 for k in pos)
