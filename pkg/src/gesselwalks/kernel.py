"""Kernel-method tools: positive-order roots, residue evaluation, the q=2 model.

A kernel is a polynomial ``G(y, t) = sum_k c_k(t) y^k`` whose coefficients are
series in ``t`` (with Laurent coefficients in ``x``).  When ``G(y, 0)`` is
``a*y + ...`` with a nonzero constant ``a``, ``G`` has a unique root ``Y(t)``
of positive order, and

    CT_y  y F(y, t) / G(y, t)  =  F(Y, t) / G_y(Y, t).

For the step set ``{(1,0), (-1,0), (0,2), (0,-1)}`` the bilateral series is the
right-hand side with ``F = 1`` and ``G = y - t(y^3 + b y + 1)``, ``b = x + 1/x``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .laurent import ONE, X, LaurentPoly, Y as Y_VAR
from .monoid import StepSet
from .series import TSeries, ts_poly_eval
from .walks import x_coefficient

Q2_STEPS = StepSet.of((1, 0), (-1, 0), (0, 2), (0, -1))
B = X + X ** -1


@dataclass(frozen=True)
class KernelPoly:
    """Polynomial in ``y`` with series coefficients ``c_0, ..., c_d``."""

    coeffs: tuple[TSeries, ...]

    def __post_init__(self):
        if not self.coeffs:
            raise ValueError("empty kernel polynomial")
        for c in self.coeffs:
            for poly in c.coeffs:
                if any(k[1] for k in poly):
                    raise ValueError("kernel coefficients must not involve y")

    @property
    def trunc(self) -> int:
        return min(c.trunc for c in self.coeffs)

    def __call__(self, y: TSeries) -> TSeries:
        return ts_poly_eval(self.coeffs, y)

    def derivative(self) -> KernelPoly:
        if len(self.coeffs) == 1:
            return KernelPoly((TSeries.zero(self.trunc),))
        return KernelPoly(tuple(c * k for k, c in enumerate(self.coeffs) if k))

    def linear_coefficient(self) -> Fraction:
        """The constant ``a`` of ``G(y, 0) = a*y + ...``; raises if the hypothesis fails."""
        if self.coeffs[0][0]:
            raise ValueError("G(0, 0) must vanish")
        a = self.coeffs[1][0] if len(self.coeffs) > 1 else LaurentPoly()
        if not a or not a.is_constant():
            raise ValueError(f"G(y, 0) must start with a*y, a a nonzero constant; got a = {a}")
        return Fraction(a.constant_term())

    def bivariate(self) -> TSeries:
        """``G`` as one series with the kernel variable in the y slot."""
        n = self.trunc
        out = TSeries.zero(n)
        for k, c in enumerate(self.coeffs):
            out = out + c.truncate(n) * (Y_VAR ** k)
        return out


def solve_positive_root(G: KernelPoly, trunc: int) -> TSeries:
    """The unique ``Y`` in ``t K[[t]]`` with ``G(Y, t) = 0`` modulo ``t^(trunc+1)``.

    Iterates ``Y <- Y - G(Y)/a``; every pass fixes at least one more order.
    """
    a = G.linear_coefficient()
    if G.trunc < trunc:
        raise ValueError(f"kernel known only to t^{G.trunc}")
    G = KernelPoly(tuple(c.truncate(trunc) for c in G.coeffs))
    y = TSeries.zero(trunc)
    for _ in range(trunc):
        r = G(y)
        if not any(r.coeffs):
            break
        y = y - r * (1 / a)
    return y


def ct_residue(F: KernelPoly, G: KernelPoly, trunc: int) -> TSeries:
    """``F(Y, t) / G_y(Y, t)`` at the positive-order root ``Y`` of ``G``."""
    a = G.linear_coefficient()
    y = solve_positive_root(G, trunc)
    F = KernelPoly(tuple(c.truncate(trunc) for c in F.coeffs))
    den = G.derivative()(y) * (1 / a)
    return F(y) * den.inv() * (1 / a)


def _ytrunc(f: TSeries, deg: int) -> TSeries:
    return f.map(lambda c: c.filter(lambda k: k[1] <= deg))


def ct_direct(F: KernelPoly, G: KernelPoly, trunc: int) -> TSeries:
    """``CT_y  y F / G`` by expanding ``1/G`` as an iterated Laurent series.

    With ``G = G0(y) + t*G1(y, t)`` and ``G0 = a*y*(1 + u(y))``,
    ``y/G = sum_k (-t G1)^k y^-k a^-(k+1) (1+u)^-(k+1)``, so the constant term
    of the k-th summand only needs power series in ``y`` up to degree ``k``.
    No root of ``G`` is computed.
    """
    a = G.linear_coefficient()
    g = G.bivariate().truncate(trunc)
    f = _ytrunc(F.bivariate().truncate(trunc), trunc)
    g0 = g[0]
    u = (g0 - Y_VAR.scale(a)) * (Y_VAR ** -1).scale(1 / a)
    w = ONE
    term = ONE
    for _ in range(trunc):
        term = (term * -u).filter(lambda k: k[1] <= trunc)
        w = w + term
    result = TSeries.zero(trunc)
    g1 = TSeries(g.coeffs[1:]) if trunc else None
    for k in range(trunc + 1):
        n = trunc - k
        acc = _ytrunc(f.truncate(n), k)
        for _ in range(k):
            acc = _ytrunc(acc * g1.truncate(n), k)
        wk = w.filter(lambda key: key[1] <= k)
        for _ in range(k + 1):
            acc = _ytrunc(acc * wk, k)
        coef = acc.map(
            lambda c: c.filter(lambda key: key[1] == k).map_keys(lambda key: (key[0], 0, key[2]))
        ) * (Fraction(-1) ** k / Fraction(a) ** (k + 1))
        padded = TSeries(list(coef.coeffs) + [0] * k)
        result = result + (padded.shift(k) if k else padded)
    return result


# the q = 2 model


def q2_kernel(trunc: int) -> KernelPoly:
    """``y - t(y^3 + b*y + 1)``."""
    t = TSeries.monomial(1, 1, trunc)
    one = TSeries.one(trunc)
    zero = TSeries.zero(trunc)
    return KernelPoly((-t, one - t * B, zero, -t))


def q2_root(trunc: int) -> TSeries:
    return solve_positive_root(q2_kernel(trunc), trunc)


def q2_bilateral(trunc: int) -> TSeries:
    """``1 / (1 - t*b - 3t*Y^2)`` via the residue formula."""
    one = TSeries.one(trunc)
    return ct_residue(KernelPoly((one,)), q2_kernel(trunc), trunc)


def q2_logderiv(trunc: int) -> TSeries:
    """``d/dt log S_x`` assembled from the closed rational form in ``b``, ``t`` and ``Y``.

    Both pieces share the denominator ``4(1-bt)^3 - 27t^3``.
    """
    t = TSeries.monomial(1, 1, trunc)
    one = TSeries.one(trunc)
    one_bt = one - t * B
    den = one_bt * one_bt * one_bt * 4 - t * t * t * 27
    num = t * t * (B ** 3 * 4 + 27) - t * (B * B * 8) + one * (B * 4)
    num = num + t * q2_root(trunc) * 9
    # den starts with the constant 4
    return num * (den * Fraction(1, 4)).inv() * Fraction(1, 4)


def q2_s10(trunc: int) -> TSeries:
    """Slit-plane walks of the q=2 model ending at ``(1, 0)``.

    Integrates :func:`q2_logderiv` with zero constant (``S_x(x, 0) = 1``)
    and extracts ``[x^1]``.
    """
    if trunc == 0:
        return TSeries.zero(0)
    log_sx = q2_logderiv(trunc - 1).integrate()
    return x_coefficient(log_sx, 1)


def _multinomial(n: int, parts: Sequence[int]) -> int:
    if any(p < 0 for p in parts) or sum(parts) != n:
        return 0
    out = math.factorial(n)
    for p in parts:
        out //= math.factorial(p)
    return out


def lagrange_Y_coeff(n: int) -> LaurentPoly:
    """``[t^n] Y`` as a polynomial in ``b``, with ``b`` held in the x slot.

    Uses ``(1/n) [y^(n-1)] (1 + b*y + y^3)^n``.
    """
    if n < 1:
        raise ValueError("n must be positive")
    phi = ONE + X * Y_VAR + Y_VAR ** 3
    return (phi ** n).filter(lambda k: k[1] == n - 1).map_keys(lambda k: (k[0], 0, 0)).scale(Fraction(1, n))


def printed_Y_coeff(n: int) -> LaurentPoly:
    """The double sum for ``[t^n] Y`` exactly as printed (no ``1/n``); b in the x slot."""
    terms: dict = {}
    for k in range((n - 1) // 3 + 1):
        e = n - 3 * k - 1
        terms[(e, 0, 0)] = terms.get((e, 0, 0), 0) + _multinomial(n, (k, 2 * k + 1, n - 3 * k - 1))
    return LaurentPoly(terms)


def expand_b(p: LaurentPoly) -> LaurentPoly:
    """Substitute ``b = x + 1/x`` into a polynomial in ``b`` stored in the x slot."""
    out = LaurentPoly()
    for (e, _, _), c in p.items():
        out = out + (B ** e).scale(c)
    return out


def _binom_half(a: int, b: Fraction) -> int:
    """``C(a, b)``, zero when ``b`` is a half-integer or out of range."""
    b = Fraction(b)
    if b.denominator != 1:
        return 0
    b = int(b)
    if b < 0 or a < 0 or b > a:
        return 0
    return math.comb(a, b)


def closed_form_a10(n_max: int) -> list[Fraction]:
    """Literal evaluation of the printed triple-sum count for ``N = 1..n_max``.

    Kept as a reference only; the values do not agree with the walk counts
    beyond the first few lengths.
    """
    out = []
    for N in range(1, n_max + 1):
        total = Fraction(_binom_half(N, Fraction(N - 1, 2)))
        for n in range(1, N // 3 + 1):
            total += (
                Fraction(3 ** (3 * n - 1), n * 2 ** (2 * n))
                * math.comb(N - 1, 3 * n - 1)
                * _binom_half(N - 3 * n, Fraction(N - 3 * n, 2))
            )
        for n in range(1, N + 1):
            for m in range((N - n - 2) // 3 + 1):
                for k in range((n - 1) // 3 + 1):
                    total += (
                        Fraction(3 ** (3 * m + 2), n * N * 2 ** (2 * m + 2))
                        * _multinomial(n, (k, 2 * k + 1, n - 3 * k - 1))
                        * math.comb(N - n, 3 * m + 2)
                        * _binom_half(N - 3 * m - 3 * k - 3, Fraction(N - 3 * m - 3 * k - 4, 2))
                    )
        out.append(total)
    return out
