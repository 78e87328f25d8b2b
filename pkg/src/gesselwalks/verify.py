"""Self-check harness: every identity of the library, checked at one truncation.

Each check yields a :class:`CheckResult`.  Two entries are expected
mismatches: the printed closed form for slit-plane walks ending at ``(1, 0)``
in the q=2 model, and the printed Lagrange expansion of its kernel root.
They are reported but never counted as failures.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterator

from . import kernel, walks
from .factorize import unique_factorization
from .laurent import LaurentPoly, grader
from .monoid import (
    SQUARE,
    AvoidHalfLine,
    GesselPair,
    LowerY,
    StepSet,
    UpperHalfPlane,
    UpperY,
    classify,
    path_factorize,
)
from .oracle import all_paths, convolve, enumerate_walks, factor_census, monoid_table
from .series import TSeries

PASS, FAIL, KNOWN = "pass", "fail", "known-mismatch"

EW = StepSet.of("E", "W")
HALFPLANE_SETS = (SQUARE, kernel.Q2_STEPS, StepSet.of((2, 1), (-1, 1), (0, -1)))


@dataclass(frozen=True)
class CheckResult:
    name: str
    status: str
    detail: str = ""

    def line(self) -> str:
        return f"{self.status.upper():15s} {self.name}" + (f"  ({self.detail})" if self.detail else "")


def series_counts(f: TSeries) -> dict:
    """``{(i, j, n): count}`` of a series, summed over marks."""
    out: dict = {}
    for n, c in enumerate(f.coeffs):
        for (i, j, _), v in c.items():
            out[(i, j, n)] = out.get((i, j, n), 0) + v
    return {k: v for k, v in out.items() if v}


def random_laurent(rng: random.Random, n_terms: int = 3, span: int = 1) -> LaurentPoly:
    return LaurentPoly(
        {
            (rng.randint(-span, span), rng.randint(-span, span), 0): rng.choice([-2, -1, 1, 2, Fraction(1, 2)])
            for _ in range(n_terms)
        }
    )


def random_unit_series(rng: random.Random, trunc: int) -> TSeries:
    """``1 + t*p1 + t^2*p2`` with small random Laurent ``p1``, ``p2``."""
    cs = [LaurentPoly.constant(1), random_laurent(rng, 3), random_laurent(rng, 2)]
    return TSeries((cs + [0] * trunc)[: trunc + 1])


def random_grading(rng: random.Random):
    return rng.choice(["x", "y", (1, 1), (1, -1), (2, 1), (-1, 3)])


def random_kernel_pair(rng: random.Random, trunc: int) -> tuple[kernel.KernelPoly, kernel.KernelPoly]:
    """Random polynomial ``F`` and ``G`` (degree <= 4 in y and t) with ``G(y,0) = a*y + ...``."""

    def poly_t(max_deg: int, lead=None) -> TSeries:
        cs = [rng.randint(-3, 3) for _ in range(max_deg + 1)]
        if lead is not None:
            cs[0] = lead
        return TSeries((cs + [0] * trunc)[: trunc + 1])

    a = rng.choice([1, -1, 2, 3])
    g = [poly_t(rng.randint(1, 3), 0), poly_t(rng.randint(0, 3), a)]
    g += [poly_t(rng.randint(0, 2)) for _ in range(rng.randint(0, 3))]
    f = [poly_t(rng.randint(0, 2)) for _ in range(rng.randint(1, 4))]
    return kernel.KernelPoly(tuple(f)), kernel.KernelPoly(tuple(g))


def _check(name: str, fn: Callable[[], object]) -> CheckResult:
    try:
        out = fn()
    except Exception as exc:  # a crashing check is a failed check
        return CheckResult(name, FAIL, f"{type(exc).__name__}: {exc}")
    if isinstance(out, tuple):
        ok, detail = out
    else:
        ok, detail = bool(out), ""
    return CheckResult(name, PASS if ok else FAIL, detail)


def run_checks(trunc: int = 8, seed: int = 2004) -> Iterator[CheckResult]:
    N = trunc
    small = min(N, 6)
    rng = random.Random(seed)

    # laurent
    def ring_axioms():
        for _ in range(30):
            p, q, r = (random_laurent(rng, 4, 2) for _ in range(3))
            if (p * q) * r != p * (q * r) or p * q != q * p or p * (q + r) != p * q + p * r:
                return False
            if any(c == 0 for part in (p * q, p + q, p - p) for c in part.terms.values()):
                return False
        return True

    yield _check("laurent: ring axioms, no stored zeros", ring_axioms)

    def split_reconstruct():
        for _ in range(30):
            p = random_laurent(rng, 5, 3)
            g = random_grading(rng)
            neg, zero, pos = p.split(g)
            if neg + zero + pos != p:
                return False
        return True

    yield _check("laurent: split reconstructs", split_reconstruct)

    # series
    def series_identities():
        for _ in range(10):
            f, g = random_unit_series(rng, small), random_unit_series(rng, small)
            if f * f.inv() != TSeries.one(small):
                return False, "f * inv(f) != 1"
            if f.log().exp() != f:
                return False, "exp(log f) != f"
            if (f * g).log() != f.log() + g.log():
                return False, "log not additive"
            h = f.log()
            if h.exp().log() != h:
                return False, "log(exp h) != h"
        return True

    yield _check("series: inv, log/exp inverse pair, log homomorphism", series_identities)

    def free_counts_integral():
        f = walks.gf_free(SQUARE, N)
        return all(isinstance(v, int) and v >= 0 for c in f.coeffs for v in c.terms.values())

    yield _check("series: free walk counts are nonnegative integers", free_counts_integral)

    # factorize
    def factor_props():
        for _ in range(10):
            h = random_unit_series(rng, small)
            g = random_grading(rng)
            fac = unique_factorization(h, g)
            if fac.product() != h:
                return False, f"reconstruction, grading {g}"
            for part, sign in zip(fac, (-1, 0, 1)):
                for n, c in enumerate(part.coeffs):
                    if n and any(_sign(grader(g)(k)) != sign for k in c):
                        return False, f"support sign, grading {g}"
            again = unique_factorization(fac.zero * fac.plus, g)
            if again.minus != TSeries.one(small) or again.zero != fac.zero or again.plus != fac.plus:
                return False, f"idempotence, grading {g}"
        return True

    yield _check("factorize: reconstruction, support signs, idempotence", factor_props)

    # monoid and census
    n_census = min(N, 8)
    for steps, label in ((EW, "{E,W}"), (SQUARE, "{N,S,E,W}")):
        yield _check(
            f"monoid: census equals series factors, {label}, n<={n_census}",
            lambda steps=steps: _census_agrees(steps, GesselPair.free("x"), n_census),
        )
    yield _check(
        "monoid: census equals series factors, strip d=1, {N,S,E,W}, n<=6",
        lambda: _census_agrees(SQUARE, GesselPair.axis([LowerY(1)]), min(N, 6)),
    )

    def bijection_and_duality():
        gp = GesselPair.free("x")
        neg = gp.negated()
        for n in range(min(N, 6) + 1):
            seen = set()
            for path in all_paths(SQUARE, n):
                a, b, c = path_factorize(path, gp)
                if a * b * c != path:
                    return False, "product"
                if not (classify(a, gp).is_minus and classify(b, gp).is_zero and classify(c, gp).is_plus):
                    return False, "factor classes"
                if (a, b, c) in seen:
                    return False, "not injective"
                seen.add((a, b, c))
                rev = type(path)(path.steps[::-1])
                if classify(path, gp).is_minus != classify(rev, neg).is_plus:
                    return False, "reversal duality"
        return True

    yield _check("monoid: factorization bijective, reversal duality", bijection_and_duality)

    # walks
    for cons in ([], [UpperHalfPlane()], [AvoidHalfLine()], [AvoidHalfLine(), UpperHalfPlane()],
                 [LowerY(1), UpperY(2)]):
        label = ",".join(str(c) for c in cons) or "none"
        yield _check(
            f"walks: gf_constrained equals oracle [{label}]",
            lambda cons=cons: series_counts(walks.gf_constrained(SQUARE, cons, N))
            == enumerate_walks(SQUARE, cons, N).counts,
        )
    for steps in (SQUARE, kernel.Q2_STEPS):
        yield _check(f"walks: slit-plane identities, steps {steps}", lambda steps=steps: _slit_ok(steps, N))
    for steps in HALFPLANE_SETS:
        yield _check(f"walks: half-plane 1/n law, steps {steps}", lambda steps=steps: _halfplane_ok(steps, N))

    def rary():
        for r in (1, 2, 3):
            f = walks.rary_family(r, N)
            if f - 1 - f ** (r + 1) * TSeries.monomial(r + 1, 1, N) != TSeries.zero(N):
                return False, f"r={r}"
        return True

    yield _check("walks: r-ary family functional equation", rary)

    # kernel
    def root_residual():
        g = kernel.q2_kernel(N)
        return g(kernel.q2_root(N)) == TSeries.zero(N)

    yield _check("kernel: q=2 root satisfies its equation", root_residual)

    def residues():
        for _ in range(10):
            f, g = random_kernel_pair(rng, small)
            if kernel.ct_residue(f, g, small) != kernel.ct_direct(f, g, small):
                return False
        return True

    yield _check("kernel: residue formula equals direct constant term (10 random)", residues)
    yield _check(
        "kernel: q=2 bilateral via residue equals pipeline",
        lambda: kernel.q2_bilateral(N) == walks.bilateral(kernel.Q2_STEPS, N),
    )
    yield _check(
        "kernel: q=2 log-derivative closed form equals d/dt log S_x",
        lambda: kernel.q2_logderiv(N - 1) == walks.bilateral(kernel.Q2_STEPS, N).log().deriv(),
    )

    def lagrange():
        y = kernel.q2_root(N)
        return all(kernel.expand_b(kernel.lagrange_Y_coeff(n)) == y[n] for n in range(1, N + 1))

    yield _check("kernel: Lagrange inversion equals fixed-point root", lagrange)

    def s10():
        a = kernel.q2_s10(N)
        b = walks.sp0(kernel.Q2_STEPS, 1, N)
        table = enumerate_walks(kernel.Q2_STEPS, [AvoidHalfLine()], N)
        oracle = [table[(1, 0, n)] for n in range(N + 1)]
        ok = a == b and [a[n].constant_term() for n in range(N + 1)] == oracle
        return ok, "oracle " + " ".join(map(str, oracle))

    yield _check("kernel: q=2 S_{1,0} equals sp0 equals oracle", s10)

    yield from known_mismatches(N)


def known_mismatches(N: int) -> Iterator[CheckResult]:
    table = enumerate_walks(kernel.Q2_STEPS, [AvoidHalfLine()], N)
    literal = kernel.closed_form_a10(N)
    diffs = [(n, v, table[(1, 0, n)]) for n, v in enumerate(literal, start=1) if v != table[(1, 0, n)]]
    detail = "; ".join(f"N={n}: formula {v} vs count {c}" for n, v, c in diffs[:4])
    yield CheckResult(
        "kernel: printed closed form for a_{1,0}(N)",
        KNOWN if diffs else PASS,
        detail or "no difference up to this truncation",
    )
    y = kernel.q2_root(max(N, 2))
    bad = [n for n in range(1, max(N, 2) + 1) if kernel.expand_b(kernel.printed_Y_coeff(n)) != y[n]]
    yield CheckResult(
        "kernel: printed Lagrange expansion of Y",
        KNOWN if bad else PASS,
        f"first differs at n={bad[0]}: printed {kernel.printed_Y_coeff(bad[0])} vs "
        f"{kernel.lagrange_Y_coeff(bad[0])} (b in place of x)" if bad else "",
    )


def _sign(v: int) -> int:
    return (v > 0) - (v < 0)


def _census_agrees(steps: StepSet, gp: GesselPair, n_max: int):
    census = factor_census(steps, gp, n_max)
    if gp.family == "free":
        gamma = walks.gf_free(steps, n_max)
    else:
        gamma = walks.gf_constrained(steps, gp.constraints, n_max).project("CT", "y")
    fac = unique_factorization(gamma, gp.rho)
    for name, table, part in zip(("minus", "zero", "plus"), census, fac):
        if table.counts != series_counts(part):
            return False, f"{name} part differs"
    total = convolve(convolve(census.minus, census.zero), census.plus)
    if total != monoid_table(steps, gp, n_max):
        return False, "convolution of census differs from monoid count"
    return True


def _slit_ok(steps: StepSet, N: int):
    r = walks.slitplane(steps, N)
    one = TSeries.one(N)
    step = TSeries.monomial(1, steps.weight(), N)
    if r.S0 * r.Binv != r.Sx:
        return False, "S0 * Binv != S_x"
    if r.Sxyt * (one - step) * r.factors.zero * r.factors.minus != one:
        return False, "complete generating function identity"
    oracle = enumerate_walks(steps, [AvoidHalfLine()], N)
    if series_counts(r.Sxyt) != oracle.counts:
        return False, "complete slit-plane counts differ from oracle"
    return True


def _halfplane_ok(steps: StepSet, N: int):
    h = walks.halfplane_halfline(steps, N)
    if h.p is None:
        return True, "no walk reaches the positive x-axis"
    oracle = enumerate_walks(steps, [AvoidHalfLine(), UpperHalfPlane()], N)
    if any(c.restricted != oracle[(h.p, 0, c.n)] for c in h.checks):
        return False, "restricted counts differ from oracle"
    return h.ok, f"p={h.p}"
