"""Truncated power series in t whose coefficients are Laurent polynomials.

A :class:`TSeries` with truncation ``N`` stores the coefficients of
``t^0 .. t^N``; every operation is exact modulo ``t^(N+1)``.  Binary
operations work at the smaller of the two truncations and never extend it.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Callable, Iterable, Sequence

from .laurent import (
    ONE,
    ZERO,
    Grading,
    LaurentPoly,
    _coerce,
    mul_into,
    normalize_scalar,
)


class TSeries:
    """Immutable truncated series ``sum_{n<=N} c_n t^n``."""

    __slots__ = ("_c",)

    def __init__(self, coeffs: Iterable):
        cs = tuple(_coerce(c) for c in coeffs)
        if not cs:
            raise ValueError("a series needs at least the t^0 coefficient")
        self._c = cs

    @classmethod
    def _raw(cls, coeffs: Sequence[LaurentPoly]) -> TSeries:
        out = cls.__new__(cls)
        out._c = tuple(coeffs)
        return out

    @classmethod
    def zero(cls, trunc: int) -> TSeries:
        return cls._raw([ZERO] * (trunc + 1))

    @classmethod
    def one(cls, trunc: int) -> TSeries:
        return cls._raw([ONE] + [ZERO] * trunc)

    @classmethod
    def monomial(cls, n: int, coeff, trunc: int) -> TSeries:
        """``coeff * t^n`` truncated at ``trunc``."""
        cs = [ZERO] * (trunc + 1)
        if n <= trunc:
            cs[n] = _coerce(coeff)
        return cls._raw(cs)

    @property
    def trunc(self) -> int:
        return len(self._c) - 1

    @property
    def coeffs(self) -> tuple[LaurentPoly, ...]:
        return self._c

    def __getitem__(self, n: int) -> LaurentPoly:
        return self._c[n]

    def __len__(self) -> int:
        return len(self._c)

    def truncate(self, trunc: int) -> TSeries:
        if trunc > self.trunc:
            raise ValueError(f"cannot extend truncation {self.trunc} to {trunc}")
        return TSeries._raw(self._c[: trunc + 1])

    def __eq__(self, other) -> bool:
        if not isinstance(other, TSeries):
            return NotImplemented
        n = min(self.trunc, other.trunc)
        return self._c[: n + 1] == other._c[: n + 1]

    __hash__ = None

    def __repr__(self) -> str:
        body = " + ".join(f"({c})*t^{n}" for n, c in enumerate(self._c) if c)
        return f"TSeries({body or '0'}; N={self.trunc})"

    # ring operations

    def __add__(self, other) -> TSeries:
        other = _as_series(other, self.trunc)
        n = min(self.trunc, other.trunc)
        return TSeries._raw([self._c[i] + other._c[i] for i in range(n + 1)])

    __radd__ = __add__

    def __neg__(self) -> TSeries:
        return TSeries._raw([-c for c in self._c])

    def __sub__(self, other) -> TSeries:
        return self + (-_as_series(other, self.trunc))

    def __rsub__(self, other) -> TSeries:
        return _as_series(other, self.trunc) + (-self)

    def __mul__(self, other) -> TSeries:
        if isinstance(other, TSeries):
            return _cauchy(self, other)
        if isinstance(other, LaurentPoly):
            return TSeries._raw([c * other for c in self._c])
        try:
            s = normalize_scalar(other)
        except TypeError:
            return NotImplemented
        return TSeries._raw([c.scale(s) for c in self._c])

    __rmul__ = __mul__

    def __pow__(self, k: int) -> TSeries:
        if k < 0:
            return self.inv() ** (-k)
        result = TSeries.one(self.trunc)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def shift(self, k: int) -> TSeries:
        """Multiply by ``t^k`` keeping the truncation."""
        if k <= 0:
            raise ValueError("shift expects a positive power of t")
        return TSeries._raw(([ZERO] * k + list(self._c))[: self.trunc + 1])

    def map(self, fn: Callable[[LaurentPoly], LaurentPoly]) -> TSeries:
        return TSeries._raw([fn(c) for c in self._c])

    # transcendental operations

    def _require_unit(self, what: str) -> None:
        if self._c[0] != ONE:
            raise ValueError(f"{what} needs the t^0 coefficient to be 1, got {self._c[0]}")

    def inv(self) -> TSeries:
        self._require_unit("inverse")
        f = [c._terms for c in self._c]
        g = [ONE]
        for n in range(1, len(f)):
            acc: dict = {}
            for k in range(1, n + 1):
                if f[k]:
                    mul_into(acc, f[k], g[n - k]._terms)
            g.append(-LaurentPoly._raw(acc))
        return TSeries._raw(g)

    def deriv(self) -> TSeries:
        if self.trunc < 1:
            raise ValueError("derivative of a series truncated at t^0 is undefined")
        return TSeries._raw([c.scale(n) for n, c in enumerate(self._c) if n])

    def integrate(self) -> TSeries:
        return TSeries._raw([ZERO] + [c.scale(Fraction(1, n + 1)) for n, c in enumerate(self._c)])

    def log(self) -> TSeries:
        self._require_unit("log")
        if self.trunc == 0:
            return TSeries.zero(0)
        return (self.deriv() * self.truncate(self.trunc - 1).inv()).integrate()

    def exp(self) -> TSeries:
        if self._c[0]:
            raise ValueError(f"exp needs a zero t^0 coefficient, got {self._c[0]}")
        # n g_n = sum_{k=1}^n k h_k g_{n-k}
        h = [c._terms for c in self._c]
        g = [ONE]
        for n in range(1, len(h)):
            acc: dict = {}
            for k in range(1, n + 1):
                if h[k]:
                    mul_into(acc, {key: k * c for key, c in h[k].items()}, g[n - k]._terms)
            g.append(LaurentPoly._raw(acc).scale(Fraction(1, n)))
        return TSeries._raw(g)

    # grading

    def split(self, grading: Grading) -> tuple[TSeries, TSeries, TSeries]:
        parts = [c.split(grading) for c in self._c]
        return tuple(TSeries._raw([p[i] for p in parts]) for i in range(3))

    def project(self, which: str, grading: Grading) -> TSeries:
        neg, zero, pos = self.split(grading)
        if which == "CT":
            return zero
        if which == "PT":
            return zero + pos
        if which == "NT":
            return neg
        raise ValueError(f"unknown projection {which!r}")

    def coeff(self, i: int, j: int, n: int) -> Fraction:
        """Coefficient of ``x^i y^j t^n`` summed over the mark exponent."""
        if n > self.trunc or n < 0:
            raise ValueError(f"t-order {n} outside 0..{self.trunc}")
        return Fraction(sum(c for (a, b, _), c in self._c[n].items() if a == i and b == j))


def _as_series(value, trunc: int) -> TSeries:
    if isinstance(value, TSeries):
        return value
    return TSeries.monomial(0, value, trunc)


def _cauchy(f: TSeries, g: TSeries) -> TSeries:
    n_max = min(f.trunc, g.trunc)
    a = [c._terms for c in f._c]
    b = [c._terms for c in g._c]
    out = []
    for n in range(n_max + 1):
        acc: dict = {}
        for k in range(n + 1):
            if a[k] and b[n - k]:
                mul_into(acc, a[k], b[n - k])
        out.append(LaurentPoly._raw(acc))
    return TSeries._raw(out)


def ts_arith(op: str, f: TSeries, g: TSeries) -> TSeries:
    if op == "add":
        return f + g
    if op == "mul":
        return f * g
    raise ValueError(f"unknown operation {op!r}")


def ts_inv(f: TSeries) -> TSeries:
    return f.inv()


def ts_log(f: TSeries) -> TSeries:
    return f.log()


def ts_exp(f: TSeries) -> TSeries:
    return f.exp()


def ts_deriv_t(f: TSeries) -> TSeries:
    return f.deriv()


def ts_integrate_t(f: TSeries) -> TSeries:
    return f.integrate()


def ts_project(f: TSeries, which: str, grading: Grading) -> TSeries:
    return f.project(which, grading)


def ts_coeff(f: TSeries, i: int, j: int, n: int) -> Fraction:
    return f.coeff(i, j, n)


def ts_poly_eval(coeffs: Sequence[TSeries], arg: TSeries) -> TSeries:
    """Evaluate ``sum_k coeffs[k] * arg^k`` by Horner's rule.

    ``arg`` must have zero constant term so the composition is well defined.
    """
    if arg[0]:
        raise ValueError("substituted series must have positive order in t")
    trunc = min([arg.trunc] + [c.trunc for c in coeffs if isinstance(c, TSeries)])
    acc = TSeries.zero(trunc)
    for c in reversed(coeffs):
        acc = acc * arg + _as_series(c, trunc)
    return acc.truncate(trunc)
