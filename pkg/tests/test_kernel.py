import random
from fractions import Fraction

import pytest

from gesselwalks.kernel import (
    B,
    Q2_STEPS,
    KernelPoly,
    closed_form_a10,
    ct_direct,
    ct_residue,
    expand_b,
    lagrange_Y_coeff,
    printed_Y_coeff,
    q2_bilateral,
    q2_kernel,
    q2_logderiv,
    q2_root,
    q2_s10,
    solve_positive_root,
)
from gesselwalks.laurent import X, LaurentPoly
from gesselwalks.monoid import AvoidHalfLine
from gesselwalks.oracle import enumerate_walks
from gesselwalks.series import TSeries
from gesselwalks.verify import random_kernel_pair
from gesselwalks.walks import bilateral, sp0
from conftest import dyck_count, returns_to_zero

N = 8


def t(n=1, trunc=N, coeff=1):
    return TSeries.monomial(n, coeff, trunc)


def consts(f):
    return [c.constant_term() for c in f.coeffs]


ONE = TSeries.one(N)
ZERO = TSeries.zero(N)
LINEAR = KernelPoly((-t(), ONE))  # y - t
CATALAN = KernelPoly((-t(), ONE, -t()))  # y - t(1 + y^2)


def test_solve_examples():
    assert solve_positive_root(LINEAR, N) == t()
    y = solve_positive_root(CATALAN, N)
    assert consts(y) == [0] + [dyck_count(n - 1) for n in range(1, N + 1)]
    assert consts(y)[1::2] == [1, 1, 2, 5]
    y = q2_root(4)
    assert y[1] == LaurentPoly.constant(1) and y[2] == B and y[3] == B * B
    assert q2_kernel(N)(q2_root(N)) == ZERO


def test_hypothesis_violations():
    with pytest.raises(ValueError):
        KernelPoly((-t(), ZERO, ONE)).linear_coefficient()  # no linear term
    with pytest.raises(ValueError):
        KernelPoly((ONE, ONE)).linear_coefficient()  # G(0, 0) != 0
    with pytest.raises(ValueError):
        KernelPoly((-t(), TSeries([X] + [0] * N))).linear_coefficient()  # a not constant


def test_residue_examples():
    assert consts(ct_residue(KernelPoly((ONE,)), CATALAN, N)) == [returns_to_zero(n) for n in range(N + 1)]
    assert consts(ct_residue(KernelPoly((ONE,)), CATALAN, 6))[::2] == [1, 2, 6, 20]
    assert ct_residue(KernelPoly((ONE,)), LINEAR, N) == ONE
    assert q2_bilateral(N) == bilateral(Q2_STEPS, N)


def test_direct_constant_term_examples():
    assert ct_direct(KernelPoly((ONE,)), CATALAN, N) == ct_residue(KernelPoly((ONE,)), CATALAN, N)
    assert ct_direct(KernelPoly((ONE,)), q2_kernel(6), 6) == bilateral(Q2_STEPS, 6)


@pytest.mark.parametrize("seed", range(20))
def test_residue_equals_direct_random(seed):
    f, g = random_kernel_pair(random.Random(seed), 7)
    assert ct_residue(f, g, 7) == ct_direct(f, g, 7)


def test_logderiv_examples():
    d = q2_logderiv(4)
    assert d[0] == B
    assert d[1] == B * B
    assert d[2] == B ** 3 + 9


def test_logderiv_matches_pipeline():
    assert q2_logderiv(N - 1) == bilateral(Q2_STEPS, N).log().deriv()


def test_s10():
    s = q2_s10(10)
    assert consts(s)[:4] == [0, 1, 0, 1]
    assert all(type(v) is int and v >= 0 for v in consts(s))
    oracle = enumerate_walks(Q2_STEPS, [AvoidHalfLine()], 10)
    assert consts(s) == [oracle[(1, 0, n)] for n in range(11)]
    assert s == sp0(Q2_STEPS, 1, 10)


def test_lagrange_coefficients():
    assert lagrange_Y_coeff(1) == LaurentPoly.constant(1)
    assert lagrange_Y_coeff(2) == X  # b, held in the x slot
    assert lagrange_Y_coeff(3) == X * X
    y = q2_root(12)
    for n in range(1, 13):
        assert expand_b(lagrange_Y_coeff(n)) == y[n]


def test_printed_lagrange_formula_differs():
    assert printed_Y_coeff(1) == lagrange_Y_coeff(1)
    assert printed_Y_coeff(2) == X * 2
    for n in range(2, 8):
        assert printed_Y_coeff(n) == lagrange_Y_coeff(n) * n


def test_closed_form_literal_values():
    assert closed_form_a10(3) == [1, 0, Fraction(21, 4)]
