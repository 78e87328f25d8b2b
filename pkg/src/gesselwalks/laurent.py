"""Sparse Laurent polynomials in x, y and a mark variable z over the rationals.

Monomials are keyed by exponent triples ``(ex, ey, em)``.  Coefficients are
kept as ``int`` whenever they are integral and as :class:`fractions.Fraction`
otherwise, so path counts stay on the fast integer path while logarithms and
integrals can still introduce denominators.
"""
from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from types import MappingProxyType
from typing import Callable, Iterator, Mapping, Tuple, Union

ExponentKey = Tuple[int, int, int]
Scalar = Union[int, Fraction]
# "x", "y", "mark" or an endpoint functional (alpha, beta) -> alpha*ex + beta*ey
Grading = Union[str, Tuple[int, int]]

_SLOTS = {"x": 0, "y": 1, "mark": 2, "z": 2}


def normalize_scalar(c) -> Scalar:
    """Return ``c`` as an int if integral, else as a Fraction."""
    if isinstance(c, int):
        return c
    if isinstance(c, Fraction):
        return c.numerator if c.denominator == 1 else c
    if isinstance(c, Rational):
        c = Fraction(c.numerator, c.denominator)
        return c.numerator if c.denominator == 1 else c
    raise TypeError(f"coefficients must be exact rationals, got {type(c).__name__}")


def grader(grading: Grading) -> Callable[[ExponentKey], int]:
    """Return the map from an exponent key to its integer grade."""
    if isinstance(grading, str):
        try:
            slot = _SLOTS[grading]
        except KeyError:
            raise ValueError(f"unknown grading slot {grading!r}") from None
        return lambda key: key[slot]
    alpha, beta = grading
    return lambda key: alpha * key[0] + beta * key[1]


class LaurentPoly:
    """Immutable sparse Laurent polynomial with rational coefficients."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[ExponentKey, object] | None = None):
        clean = {}
        if terms:
            for key, c in terms.items():
                if len(key) != 3:
                    raise ValueError(f"exponent key must have three entries: {key!r}")
                c = normalize_scalar(c)
                if c:
                    clean[tuple(int(e) for e in key)] = c
        self._terms = clean

    @classmethod
    def _raw(cls, terms: dict) -> LaurentPoly:
        # terms already has tuple keys and exact values; only zeros and
        # integral Fractions need cleaning
        out = cls.__new__(cls)
        clean = {}
        for k, c in terms.items():
            if c:
                if c.__class__ is Fraction and c.denominator == 1:
                    c = c.numerator
                clean[k] = c
        out._terms = clean
        return out

    @classmethod
    def constant(cls, c) -> LaurentPoly:
        return cls({(0, 0, 0): c})

    @classmethod
    def monomial(cls, ex: int = 0, ey: int = 0, em: int = 0, coeff=1) -> LaurentPoly:
        return cls({(ex, ey, em): coeff})

    @property
    def terms(self) -> Mapping[ExponentKey, Scalar]:
        return MappingProxyType(self._terms)

    def items(self):
        return self._terms.items()

    def __iter__(self) -> Iterator[ExponentKey]:
        return iter(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, LaurentPoly):
            try:
                other = _coerce(other)
            except TypeError:
                return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def coeff(self, key: ExponentKey) -> Fraction:
        return Fraction(self._terms.get(tuple(key), 0))

    def constant_term(self) -> Scalar:
        return self._terms.get((0, 0, 0), 0)

    def is_constant(self) -> bool:
        return all(k == (0, 0, 0) for k in self._terms)

    # ring structure

    def __add__(self, other) -> LaurentPoly:
        other = _coerce(other)
        out = dict(self._terms)
        for k, c in other._terms.items():
            out[k] = out.get(k, 0) + c
        return LaurentPoly._raw(out)

    __radd__ = __add__

    def __neg__(self) -> LaurentPoly:
        out = LaurentPoly.__new__(LaurentPoly)
        out._terms = {k: -c for k, c in self._terms.items()}
        return out

    def __sub__(self, other) -> LaurentPoly:
        return self + (-_coerce(other))

    def __rsub__(self, other) -> LaurentPoly:
        return _coerce(other) + (-self)

    def __mul__(self, other) -> LaurentPoly:
        if not isinstance(other, LaurentPoly):
            try:
                s = normalize_scalar(other)
            except TypeError:
                return NotImplemented
            return self.scale(s)
        out: dict = {}
        mul_into(out, self._terms, other._terms)
        return LaurentPoly._raw(out)

    __rmul__ = __mul__

    def scale(self, s) -> LaurentPoly:
        s = normalize_scalar(s)
        if not s:
            return LaurentPoly()
        return LaurentPoly._raw({k: c * s for k, c in self._terms.items()})

    def __pow__(self, n: int) -> LaurentPoly:
        if n < 0:
            if len(self._terms) != 1:
                raise ValueError("only monomials have Laurent inverses")
            ((k, c),) = self._terms.items()
            return LaurentPoly({tuple(-e * (-n) for e in k): Fraction(1) / Fraction(c) ** (-n)})
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    # grading

    def split(self, grading: Grading) -> tuple[LaurentPoly, LaurentPoly, LaurentPoly]:
        """Split into the parts of negative, zero and positive grade."""
        g = grader(grading)
        neg, zero, pos = {}, {}, {}
        for k, c in self._terms.items():
            d = g(k)
            (neg if d < 0 else pos if d > 0 else zero)[k] = c
        return _wrap(neg), _wrap(zero), _wrap(pos)

    def filter(self, pred: Callable[[ExponentKey], bool]) -> LaurentPoly:
        return _wrap({k: c for k, c in self._terms.items() if pred(k)})

    def map_keys(self, fn: Callable[[ExponentKey], ExponentKey]) -> LaurentPoly:
        """Re-key monomials through ``fn``, adding colliding coefficients."""
        out: dict = {}
        for k, c in self._terms.items():
            k2 = fn(k)
            out[k2] = out.get(k2, 0) + c
        return LaurentPoly._raw(out)

    def set_one(self, slot: str) -> LaurentPoly:
        """Substitute 1 for the variable in ``slot``."""
        i = _SLOTS[slot]
        return self.map_keys(lambda k: k[:i] + (0,) + k[i + 1:])

    def __repr__(self) -> str:
        return f"LaurentPoly({self})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for k in sorted(self._terms):
            c = self._terms[k]
            mono = "*".join(
                name if e == 1 else f"{name}^{e}"
                for name, e in zip("xyz", k)
                if e
            )
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")


def mul_into(out: dict, a: Mapping, b: Mapping) -> None:
    """Accumulate the product of two term maps into ``out``."""
    get = out.get
    for (a1, a2, a3), v in a.items():
        for (b1, b2, b3), w in b.items():
            k = (a1 + b1, a2 + b2, a3 + b3)
            out[k] = get(k, 0) + v * w


def _wrap(terms: dict) -> LaurentPoly:
    out = LaurentPoly.__new__(LaurentPoly)
    out._terms = terms
    return out


def _coerce(value) -> LaurentPoly:
    if isinstance(value, LaurentPoly):
        return value
    return LaurentPoly.constant(normalize_scalar(value))


ZERO = LaurentPoly()
ONE = LaurentPoly.constant(1)
X = LaurentPoly.monomial(1, 0, 0)
Y = LaurentPoly.monomial(0, 1, 0)
Z = LaurentPoly.monomial(0, 0, 1)


def lp_arith(op: str, p: LaurentPoly, q: LaurentPoly | None = None) -> LaurentPoly:
    """Apply ``op`` ("add", "neg" or "mul") to Laurent polynomials."""
    if op == "add":
        return p + q
    if op == "neg":
        return -p
    if op == "mul":
        return p * q
    raise ValueError(f"unknown operation {op!r}")


def lp_split(p: LaurentPoly, grading: Grading) -> tuple[LaurentPoly, LaurentPoly, LaurentPoly]:
    return p.split(grading)


def lp_coeff(p: LaurentPoly, key: ExponentKey) -> Fraction:
    return p.coeff(key)
