"""Lattice paths, step sets, position constraints and Gessel pairs.

A Gessel pair couples a free monoid H of paths with an additive map
``rho: H -> Z``.  Two families of monoids are supported: the free monoid
of all step sequences (primes are single steps) and the monoid of paths
that end on the x-axis, optionally confined to a horizontal strip (primes
are paths that come back to the axis only at their last point).
"""
from __future__ import annotations

import enum
import re
from dataclasses import dataclass, field
from typing import Iterable, Sequence, Tuple, Union

from .laurent import LaurentPoly


@dataclass(frozen=True)
class Step:
    dx: int
    dy: int
    mark: int = 0

    def __str__(self) -> str:
        s = f"{self.dx},{self.dy}"
        return f"{s}:{self.mark}" if self.mark else s


_NAMED = {"N": (0, 1), "S": (0, -1), "E": (1, 0), "W": (-1, 0)}


@dataclass(frozen=True)
class StepSet:
    steps: Tuple[Step, ...]

    def __post_init__(self):
        if not self.steps:
            raise ValueError("a step set must be nonempty")
        if len(set(self.steps)) != len(self.steps):
            raise ValueError("steps must be distinct")

    @classmethod
    def of(cls, *pairs) -> StepSet:
        """Build from ``(dx, dy)``/``(dx, dy, mark)`` tuples or compass letters."""
        steps = []
        for p in pairs:
            if isinstance(p, Step):
                steps.append(p)
            elif isinstance(p, str):
                steps.append(Step(*_NAMED[p]))
            else:
                steps.append(Step(*p))
        return cls(tuple(steps))

    @classmethod
    def parse(cls, text: str) -> StepSet:
        """Parse ``"dx,dy[:mark];dx,dy[:mark];..."``; whitespace is ignored."""
        text = re.sub(r"\s+", "", text)
        steps = []
        for chunk in filter(None, text.split(";")):
            m = re.fullmatch(r"(-?\d+),(-?\d+)(?::(-?\d+))?", chunk)
            if not m:
                raise ValueError(f"malformed step {chunk!r}; expected dx,dy or dx,dy:mark")
            dx, dy, mark = m.groups()
            steps.append(Step(int(dx), int(dy), int(mark or 0)))
        return cls(tuple(steps))

    def __iter__(self):
        return iter(self.steps)

    def __len__(self) -> int:
        return len(self.steps)

    def __str__(self) -> str:
        return ";".join(str(s) for s in self.steps)

    def with_marks(self, alpha: int, beta: int) -> StepSet:
        """Copy with every mark set to ``alpha*dx + beta*dy``."""
        return StepSet(tuple(Step(s.dx, s.dy, alpha * s.dx + beta * s.dy) for s in self.steps))

    def weight(self) -> LaurentPoly:
        """Sum of ``x^dx y^dy z^mark`` over the steps (the weight without t)."""
        return LaurentPoly({(s.dx, s.dy, s.mark): 1 for s in self.steps})

    def path(self, indices: Iterable[int]) -> Path:
        return Path(tuple(self.steps[i] for i in indices))

    def parse_path(self, text: str) -> Path:
        """Path from comma-separated step indices, e.g. ``"0,2,2"``."""
        text = text.strip()
        if not text:
            return Path(())
        try:
            return self.path(int(i) for i in text.split(","))
        except (ValueError, IndexError):
            raise ValueError(f"malformed path literal {text!r}") from None


SQUARE = StepSet.of("N", "S", "E", "W")


@dataclass(frozen=True)
class Path:
    steps: Tuple[Step, ...] = ()

    def __mul__(self, other: Path) -> Path:
        return Path(self.steps + other.steps)

    def __len__(self) -> int:
        return len(self.steps)

    def __bool__(self) -> bool:
        return bool(self.steps)

    def positions(self) -> list[tuple[int, int]]:
        """Points visited after the start, in order."""
        x = y = 0
        out = []
        for s in self.steps:
            x += s.dx
            y += s.dy
            out.append((x, y))
        return out

    @property
    def end(self) -> tuple[int, int]:
        return (sum(s.dx for s in self.steps), sum(s.dy for s in self.steps))

    @property
    def mark(self) -> int:
        return sum(s.mark for s in self.steps)

    def __str__(self) -> str:
        names = {v: k for k, v in _NAMED.items()}
        return "".join(
            names.get((s.dx, s.dy), f"({s})") if not s.mark else f"({s})" for s in self.steps
        ) or "ε"


EPSILON = Path(())


# position constraints; none of them is ever checked at the starting point


@dataclass(frozen=True)
class AvoidHalfLine:
    """Never touch ``(-k, 0)`` for ``k >= 0``."""

    def allows(self, x: int, y: int) -> bool:
        return not (y == 0 and x <= 0)

    def __str__(self) -> str:
        return "avoid-halfline"


@dataclass(frozen=True)
class LowerY:
    """Never go below ``y = -d``."""

    d: int

    def allows(self, x: int, y: int) -> bool:
        return y >= -self.d

    def __str__(self) -> str:
        return f"lower-y={self.d}"


@dataclass(frozen=True)
class UpperY:
    """Never go above ``y = f``."""

    f: int

    def allows(self, x: int, y: int) -> bool:
        return y <= self.f

    def __str__(self) -> str:
        return f"upper-y={self.f}"


@dataclass(frozen=True)
class UpperHalfPlane:
    """Never visit a point with ``y < 0``."""

    def allows(self, x: int, y: int) -> bool:
        return y >= 0

    def __str__(self) -> str:
        return "upper-halfplane"


Constraint = Union[AvoidHalfLine, LowerY, UpperY, UpperHalfPlane]


def parse_constraint(text: str) -> Constraint:
    text = text.strip()
    if text == "avoid-halfline":
        return AvoidHalfLine()
    if text == "upper-halfplane":
        return UpperHalfPlane()
    m = re.fullmatch(r"(lower|upper)-y=(\d+)", text)
    if m:
        return LowerY(int(m.group(2))) if m.group(1) == "lower" else UpperY(int(m.group(2)))
    raise ValueError(f"unknown constraint {text!r}")


def admissible(x: int, y: int, constraints: Sequence[Constraint]) -> bool:
    return all(c.allows(x, y) for c in constraints)


# Gessel pairs

Rho = Union[str, Tuple[int, int]]  # "x", "y", "mark" or (alpha, beta)


@dataclass(frozen=True)
class GesselPair:
    family: str = "free"  # "free" or "axis"
    constraints: Tuple[Constraint, ...] = ()
    rho: Rho = "x"

    def __post_init__(self):
        if self.family not in ("free", "axis"):
            raise ValueError(f"unknown monoid family {self.family!r}")
        if self.family == "free" and self.constraints:
            raise ValueError("the free monoid takes no constraints")
        if any(isinstance(c, AvoidHalfLine) for c in self.constraints):
            raise ValueError("half-line avoidance does not give a monoid of axis returns")

    @classmethod
    def free(cls, rho: Rho = "x") -> GesselPair:
        return cls("free", (), rho)

    @classmethod
    def axis(cls, constraints: Iterable[Constraint] = (), rho: Rho = "x") -> GesselPair:
        return cls("axis", tuple(constraints), rho)

    def negated(self) -> GesselPair:
        """Same monoid with ``-rho``."""
        if isinstance(self.rho, str):
            if self.rho == "mark":
                raise ValueError("negate marks on the step set instead")
            rho = (-1, 0) if self.rho == "x" else (0, -1)
        else:
            rho = (-self.rho[0], -self.rho[1])
        return GesselPair(self.family, self.constraints, rho)

    def rho_of(self, path: Path) -> int:
        if self.rho == "mark":
            return path.mark
        x, y = path.end
        if self.rho == "x":
            return x
        if self.rho == "y":
            return y
        alpha, beta = self.rho
        return alpha * x + beta * y

    def contains(self, path: Path) -> bool:
        if self.family == "free":
            return True
        pos = path.positions()
        if pos and pos[-1][1] != 0:
            return False
        return all(admissible(x, y, self.constraints) for x, y in pos)

    def primes(self, path: Path) -> list[Path]:
        """Prime factorization of ``path`` in H."""
        if not self.contains(path):
            raise ValueError(f"path {path} is not in the monoid {self.family}")
        if self.family == "free":
            return [Path((s,)) for s in path.steps]
        out, start, y = [], 0, 0
        for i, s in enumerate(path.steps):
            y += s.dy
            if y == 0:
                out.append(Path(path.steps[start : i + 1]))
                start = i + 1
        return out


def h_heads(pi: Path, gp: GesselPair) -> list[Path]:
    """The H-heads ``h_1...h_i`` for ``i = 0..m``."""
    heads = [EPSILON]
    for p in gp.primes(pi):
        heads.append(heads[-1] * p)
    return heads


def _head_values(pi: Path, gp: GesselPair) -> list[int]:
    vals = [0]
    for p in gp.primes(pi):
        vals.append(vals[-1] + gp.rho_of(p))
    return vals


def path_factorize(pi: Path, gp: GesselPair) -> tuple[Path, Path, Path]:
    """Unique factorization ``pi = minus * zero * plus``.

    ``minus`` is the shortest head of minimal rho value and ``minus*zero`` the
    longest such head.
    """
    primes = gp.primes(pi)
    vals = _head_values(pi, gp)
    low = min(vals)
    first = vals.index(low)
    last = len(vals) - 1 - vals[::-1].index(low)
    minus = Path(tuple(s for p in primes[:first] for s in p.steps))
    zero = Path(tuple(s for p in primes[first:last] for s in p.steps))
    plus = Path(tuple(s for p in primes[last:] for s in p.steps))
    return minus, zero, plus


class PathClass(enum.Enum):
    UNIT = "Unit"
    MINUS = "Minus"
    ZERO = "Zero"
    PLUS = "Plus"
    MIXED = "Mixed"


@dataclass(frozen=True)
class Classification:
    kind: PathClass
    is_minus: bool
    is_zero: bool
    is_plus: bool
    minus_prime: bool = False
    zero_prime: bool = False
    plus_prime: bool = False
    heads: Tuple[int, ...] = field(default=(), compare=False)


def classify(pi: Path, gp: GesselPair) -> Classification:
    """Decide the minus/zero/plus classes of ``pi`` and whether it is prime there."""
    v = _head_values(pi, gp)
    m = len(v) - 1
    if m == 0:
        return Classification(PathClass.UNIT, True, True, True, heads=(0,))
    total, inner = v[-1], v[:-1]
    is_minus = total < 0 and all(total < w for w in inner)
    is_zero = total == 0 and all(w >= 0 for w in v)
    is_plus = all(w > 0 for w in v[1:])
    # prime criteria: no proper H-head splits pi into two members of its class
    minus_prime = total < 0 and all(w >= 0 for w in inner)
    zero_prime = is_zero and all(w > 0 for w in v[1:-1])
    plus_prime = is_plus and all(w >= total for w in v[1:-1])
    kind = (
        PathClass.MINUS if is_minus
        else PathClass.ZERO if is_zero
        else PathClass.PLUS if is_plus
        else PathClass.MIXED
    )
    return Classification(kind, is_minus, is_zero, is_plus,
                          minus_prime, zero_prime, plus_prime, tuple(v))
