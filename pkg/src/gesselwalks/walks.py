"""Walk-counting pipelines built on series factorization.

Generating functions are in ``x`` (end abscissa), ``y`` (end ordinate), the
mark slot, and ``t`` (length).
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .factorize import Factorization, unique_factorization
from .laurent import LaurentPoly
from .monoid import (
    Constraint,
    LowerY,
    StepSet,
    UpperHalfPlane,
    UpperY,
    admissible,
)
from .oracle import enumerate_walks
from .series import TSeries


def gf_free(steps: StepSet, trunc: int) -> TSeries:
    """``1 / (1 - t * weight(S))``: all walks, by endpoint, mark and length."""
    step = TSeries.monomial(1, steps.weight(), trunc)
    return (TSeries.one(trunc) - step).inv()


def gf_constrained(steps: StepSet, constraints: Sequence[Constraint], trunc: int) -> TSeries:
    """Generating function of walks whose every point after the start is admissible."""
    moves = [(s.dx, s.dy, s.mark) for s in steps]
    frontier = {(0, 0, 0): 1}
    coeffs = [LaurentPoly(frontier)]
    for _ in range(trunc):
        nxt: dict = {}
        for (x, y, m), c in frontier.items():
            for dx, dy, dm in moves:
                if admissible(x + dx, y + dy, constraints):
                    k = (x + dx, y + dy, m + dm)
                    nxt[k] = nxt.get(k, 0) + c
        frontier = nxt
        coeffs.append(LaurentPoly(frontier))
    return TSeries(coeffs)


def bilateral(steps: StepSet, trunc: int) -> TSeries:
    """Walks ending on the x-axis: the constant term in ``y`` of :func:`gf_free`."""
    return gf_free(steps, trunc).project("CT", "y")


def x_coefficient(f: TSeries, p: int) -> TSeries:
    """``[x^p y^0]`` of every t-coefficient, as a series of constants."""
    return f.map(
        lambda c: LaurentPoly.constant(sum(v for (a, b, _), v in c.items() if a == p and b == 0))
    )


def minimal_axis_p(steps: StepSet, trunc: int, constraints: Sequence[Constraint] = ()) -> Optional[int]:
    """Smallest ``p > 0`` reached at ``(p, 0)`` by some walk of length <= trunc."""
    table = enumerate_walks(steps, constraints, trunc)
    ps = [i for (i, j, n), c in table.counts.items() if j == 0 and i > 0 and c]
    return min(ps) if ps else None


@dataclass(frozen=True)
class SlitPlaneResult:
    S0: TSeries  # slit-plane walks ending on the x-axis
    Binv: TSeries  # 1 / (1 - B(1/x, t))
    Sxyt: TSeries  # all slit-plane walks
    Sx: TSeries  # bilateral walks
    factors: Factorization


def slitplane(steps: StepSet, trunc: int) -> SlitPlaneResult:
    sx = bilateral(steps, trunc)
    fac = unique_factorization(sx, "x")
    binv = fac.zero * fac.minus
    sxyt = gf_free(steps, trunc) * binv.inv()
    return SlitPlaneResult(fac.plus, binv, sxyt, sx, fac)


@dataclass(frozen=True)
class HalfPlaneCheck:
    n: int
    restricted: int
    unrestricted: int

    @property
    def holds(self) -> bool:
        return self.n * self.restricted == self.unrestricted


@dataclass(frozen=True)
class HalfPlaneResult:
    H0: TSeries  # upper half-plane walks ending on the x-axis
    J0: TSeries
    Jplus: TSeries  # of those, the ones avoiding the half line
    p: Optional[int]
    checks: tuple[HalfPlaneCheck, ...]

    @property
    def ok(self) -> bool:
        return all(c.holds for c in self.checks)


def halfplane_halfline(steps: StepSet, trunc: int) -> HalfPlaneResult:
    """Walks in the upper half plane avoiding the half line, and the 1/n law at ``(p, 0)``.

    Each check compares ``n`` times the restricted count at ``(p, 0)`` with
    the number of unrestricted walks of length ``n`` ending there.
    """
    h0 = gf_constrained(steps, [UpperHalfPlane()], trunc).project("CT", "y")
    fac = unique_factorization(h0, "x")
    p = minimal_axis_p(steps, trunc)
    checks = []
    if p is not None:
        free = gf_free(steps, trunc)
        for n in range(1, trunc + 1):
            r = fac.plus.coeff(p, 0, n)
            u = free.coeff(p, 0, n)
            checks.append(HalfPlaneCheck(n, int(r), int(u)))
    return HalfPlaneResult(h0, fac.zero, fac.plus, p, tuple(checks))


@dataclass(frozen=True)
class StripResult:
    gamma: TSeries  # axis-return paths inside the strip
    factors: Factorization


def strip_models(steps: StepSet, d: int, f: Optional[int], trunc: int) -> StripResult:
    """Axis-return walks kept above ``y = -d`` (and below ``y = f``), factored in ``x``."""
    cons: list[Constraint] = [LowerY(d)]
    if f is not None:
        cons.append(UpperY(f))
    gamma = gf_constrained(steps, cons, trunc).project("CT", "y")
    return StripResult(gamma, unique_factorization(gamma, "x"))


def rary_family(r: int, trunc: int) -> TSeries:
    """Walks with steps ``(1, r)``, ``(1, -1)`` staying weakly above and ending on level 0.

    ``r = 1`` gives the Catalan numbers at even orders.
    """
    if r < 1:
        raise ValueError("r must be a positive integer")
    h = gf_free(StepSet.of((1, r), (1, -1)), trunc)
    return unique_factorization(h, "y").zero.map(lambda c: c.set_one("x"))


def sp0(steps: StepSet, p: int, trunc: int) -> TSeries:
    """Slit-plane walks ending at ``(p, 0)`` read off as ``[x^p] log S_x``.

    ``p`` must be the least positive abscissa that slit-plane walks reach on
    the axis within the truncation.
    """
    if p < 1:
        raise ValueError("p must be positive")
    log_sx = bilateral(steps, trunc).log()
    for q in range(1, p):
        if any(x_coefficient(log_sx, q).coeffs):
            raise ValueError(f"walks already reach ({q}, 0); p={p} is not minimal")
    return x_coefficient(log_sx, p)
