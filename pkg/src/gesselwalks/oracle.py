"""Exhaustive walk counting, used as ground truth for the series pipelines.

Nothing here touches the series layer: counts are plain Python integers
obtained by recursive expansion from the origin.
"""
from __future__ import annotations

import itertools
from functools import lru_cache
from typing import Iterator, Mapping, NamedTuple, Sequence

from .monoid import Constraint, GesselPair, Path, StepSet, admissible, classify


class CountTable:
    """Exact counts ``a[i, j, n]``; absent keys are zero."""

    def __init__(self, counts: Mapping[tuple[int, int, int], int] | None = None, n_max: int = 0):
        self.counts = {k: v for k, v in (counts or {}).items() if v}
        self.n_max = n_max

    def __getitem__(self, key: tuple[int, int, int]) -> int:
        return self.counts.get(tuple(key), 0)

    def __eq__(self, other) -> bool:
        if not isinstance(other, CountTable):
            return NotImplemented
        return self.counts == other.counts

    def __repr__(self) -> str:
        return f"CountTable({len(self.counts)} entries, n_max={self.n_max})"

    def entries(self) -> list[tuple[int, int, int, int]]:
        """``(i, j, n, count)`` sorted by ``(n, i, j)``."""
        return [(i, j, n, c) for (i, j, n), c in sorted(self.counts.items(), key=lambda kv: (kv[0][2], kv[0][0], kv[0][1]))]

    def total(self, n: int) -> int:
        return sum(c for (_, _, m), c in self.counts.items() if m == n)


def enumerate_walks(steps: StepSet, constraints: Sequence[Constraint] = (), n_max: int = 0) -> CountTable:
    """Count walks from the origin by endpoint and length, pruning inadmissible points."""
    deltas = [(s.dx, s.dy) for s in steps]
    cons = tuple(constraints)

    @lru_cache(maxsize=None)
    def ends(x: int, y: int, k: int) -> dict:
        if k == 0:
            return {(x, y): 1}
        out: dict = {}
        for dx, dy in deltas:
            nx, ny = x + dx, y + dy
            if admissible(nx, ny, cons):
                for e, c in ends(nx, ny, k - 1).items():
                    out[e] = out.get(e, 0) + c
        return out

    table = {}
    for n in range(n_max + 1):
        for (i, j), c in ends(0, 0, n).items():
            table[(i, j, n)] = c
    return CountTable(table, n_max)


def all_paths(steps: StepSet, n: int) -> Iterator[Path]:
    """Every step sequence of length ``n``."""
    for combo in itertools.product(steps.steps, repeat=n):
        yield Path(combo)


class Census(NamedTuple):
    minus: CountTable
    zero: CountTable
    plus: CountTable


def factor_census(steps: StepSet, gp: GesselPair, n_max: int) -> Census:
    """Count the minus-, zero- and plus-paths of ``gp`` by endpoint and length."""
    tables = ({}, {}, {})
    for n in range(n_max + 1):
        for path in all_paths(steps, n):
            if not gp.contains(path):
                continue
            cls = classify(path, gp)
            i, j = path.end
            for table, member in zip(tables, (cls.is_minus, cls.is_zero, cls.is_plus)):
                if member:
                    table[(i, j, n)] = table.get((i, j, n), 0) + 1
    return Census(*(CountTable(t, n_max) for t in tables))


def monoid_table(steps: StepSet, gp: GesselPair, n_max: int) -> CountTable:
    """Count all members of ``gp``'s monoid by brute force."""
    table: dict = {}
    for n in range(n_max + 1):
        for path in all_paths(steps, n):
            if gp.contains(path):
                i, j = path.end
                table[(i, j, n)] = table.get((i, j, n), 0) + 1
    return CountTable(table, n_max)


def convolve(a: CountTable, b: CountTable) -> CountTable:
    """Counts of concatenations: endpoints and lengths add."""
    n_max = min(a.n_max, b.n_max)
    out: dict = {}
    for (i1, j1, n1), c1 in a.counts.items():
        for (i2, j2, n2), c2 in b.counts.items():
            if n1 + n2 <= n_max:
                k = (i1 + i2, j1 + j2, n1 + n2)
                out[k] = out.get(k, 0) + c1 * c2
    return CountTable(out, n_max)
