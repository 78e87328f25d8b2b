from fractions import Fraction

import pytest
from hypothesis import given, settings

from gesselwalks.laurent import ONE, X, Y, LaurentPoly
from gesselwalks.monoid import SQUARE
from gesselwalks.series import (
    TSeries,
    ts_arith,
    ts_coeff,
    ts_deriv_t,
    ts_exp,
    ts_integrate_t,
    ts_inv,
    ts_log,
    ts_poly_eval,
    ts_project,
)
from gesselwalks.walks import gf_free
from conftest import gradings, returns_to_zero, unit_series


def t(n=1, trunc=6, coeff=1):
    return TSeries.monomial(n, coeff, trunc)


def consts(f):
    return [c.constant_term() for c in f.coeffs]


def test_products():
    one = TSeries.one(2)
    assert ts_arith("mul", one + t(trunc=2), one - t(trunc=2)) == one - t(2, 2)
    f = TSeries([1, X, Y, X * Y])
    assert f * TSeries.one(3) == f
    step = t(coeff=X + X ** -1)
    assert (step * step) == t(2, coeff=X ** 2 + 2 + X ** -2)


def test_mixed_truncation_uses_smaller():
    f = TSeries([1, 1, 1, 1])
    g = TSeries([1, 1])
    assert (f + g).trunc == 1
    assert (f * g).trunc == 1
    assert f == TSeries([1, 1])  # compared up to the smaller truncation


def test_geometric_inverse():
    assert consts(ts_inv(TSeries.one(6) - t())) == [1] * 7
    f = ts_inv(TSeries.one(4) - t(trunc=4, coeff=X + X ** -1))
    assert f[2] == X ** 2 + 2 + X ** -2


def test_inverse_requires_unit():
    with pytest.raises(ValueError):
        TSeries([2, 1]).inv()
    with pytest.raises(ValueError):
        TSeries([X, 1]).log()
    with pytest.raises(ValueError):
        TSeries([1, 1]).exp()


def test_log_exp_examples():
    geo = ts_inv(TSeries.one(3) - t(trunc=3))
    assert consts(ts_log(geo)) == [0, 1, Fraction(1, 2), Fraction(1, 3)]
    assert consts(ts_exp(t(trunc=3))) == [1, 1, Fraction(1, 2), Fraction(1, 6)]
    assert not any(ts_log(TSeries.one(4)).coeffs)


def test_derivative_and_integral():
    assert ts_deriv_t(t(2, 3)) == t(1, 2, 2)
    assert consts(ts_integrate_t(TSeries([1, 1]))) == [0, 1, Fraction(1, 2)]
    cube = t(3, 4, Fraction(1, 3))
    assert ts_integrate_t(ts_deriv_t(cube)) == cube
    assert ts_deriv_t(cube).trunc == 3 and ts_integrate_t(cube).trunc == 5


def test_projections():
    f = t(coeff=Y + Y ** -1 + 2)
    assert ts_project(f, "CT", "y") == t(coeff=2)
    assert ts_project(t(coeff=X + X ** -1), "PT", "x") == t(coeff=X)
    assert ts_project(t(coeff=X + X ** -1), "NT", "x") == t(coeff=X ** -1)


def test_constant_term_central_binomials():
    f = ts_inv(TSeries.one(6) - t(trunc=6, coeff=Y + Y ** -1))
    expected = [returns_to_zero(n) for n in range(7)]
    assert expected == [1, 0, 2, 0, 6, 0, 20]
    assert consts(ts_project(f, "CT", "y")) == expected


def test_ts_coeff():
    f = gf_free(SQUARE, 3)
    assert ts_coeff(f, 1, 0, 1) == 1
    assert ts_coeff(f, 0, 0, 1) == 0
    assert ts_coeff(f, 0, 0, 2) == 4  # EW, WE, NS, SN
    with pytest.raises(ValueError):
        ts_coeff(f, 0, 0, 4)


def test_ts_coeff_sums_marks():
    f = TSeries([0, LaurentPoly({(1, 0, 1): 2, (1, 0, -1): 3})])
    assert ts_coeff(f, 1, 0, 1) == 5


def test_poly_eval():
    one = TSeries.one(4)
    assert ts_poly_eval([one, 0, one], t(trunc=4)) == one + t(2, 4)
    f = t(trunc=4, coeff=X) + t(3, 4)
    assert ts_poly_eval([0, one], f) == f
    with pytest.raises(ValueError):
        ts_poly_eval([one, one], one)


@settings(max_examples=30, deadline=None)
@given(unit_series())
def test_inverse_roundtrip(f):
    assert f * f.inv() == TSeries.one(f.trunc)
    assert f.inv().inv() == f


@settings(max_examples=30, deadline=None)
@given(unit_series(), unit_series())
def test_log_exp_identities(f, g):
    assert f.log().exp() == f
    h = f.log()
    assert h.exp().log() == h
    assert (f * g).log() == f.log() + g.log()


@settings(max_examples=25, deadline=None)
@given(unit_series(), gradings)
def test_exponentiated_parts_multiply_back(f, grading):
    neg, zero, pos = f.log().split(grading)
    assert neg.exp() * zero.exp() * pos.exp() == f


def test_free_walk_coefficients_are_counts():
    f = gf_free(SQUARE, 8)
    assert all(type(v) is int and v > 0 for c in f.coeffs for v in c.terms.values())
