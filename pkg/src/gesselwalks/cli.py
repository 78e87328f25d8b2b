"""Command-line front end.

    gesselwalks slit --steps "0,1;0,-1;1,0;-1,0" --trunc 7
    gesselwalks catalan --r 1 --trunc 8
    gesselwalks verify --trunc 8
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction
from typing import Iterable, Sequence

from . import kernel, verify, walks
from .factorize import unique_factorization
from .monoid import AvoidHalfLine, StepSet, parse_constraint
from .oracle import CountTable, enumerate_walks
from .series import TSeries

SQUARE_STEPS = "0,1;0,-1;1,0;-1,0"


def format_count(v) -> str:
    v = Fraction(v)
    return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"


def series_entries(f: TSeries) -> list[dict]:
    """Nonzero ``x^i y^j t^n`` coefficients (marks summed), sorted by ``(n, i, j)``."""
    counts = verify.series_counts(f)
    return [
        {"x": i, "y": j, "n": n, "count": format_count(c)}
        for (i, j, n), c in sorted(counts.items(), key=lambda kv: (kv[0][2], kv[0][0], kv[0][1]))
    ]


def table_entries(table: CountTable) -> list[dict]:
    return [{"x": i, "y": j, "n": n, "count": str(c)} for i, j, n, c in table.entries()]


def parse_grading(text: str):
    text = text.strip()
    if text in ("x", "y", "mark"):
        return text
    try:
        alpha, beta = (int(v) for v in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"grading must be x, y, mark or 'alpha,beta', got {text!r}")
    return (alpha, beta)


def _steps(text: str) -> StepSet:
    try:
        return StepSet.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _constraint(text: str):
    try:
        return parse_constraint(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _nonneg(text: str) -> int:
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError("expected a nonnegative integer")
    return v


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="gesselwalks", description="Exact lattice walk enumeration")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--trunc", type=_nonneg, default=8, help="truncation order in t")
    common.add_argument("--format", choices=("json", "csv"), default="json")
    common.add_argument("--out", help="write output to FILE instead of stdout")
    stepped = argparse.ArgumentParser(add_help=False)
    stepped.add_argument("--steps", type=_steps, default=StepSet.parse(SQUARE_STEPS),
                         help='step set "dx,dy[:mark];..." (default: N,S,E,W)')
    constrained = argparse.ArgumentParser(add_help=False)
    constrained.add_argument("--constraint", type=_constraint, action="append", default=[],
                             help="avoid-halfline | lower-y=d | upper-y=f | upper-halfplane")

    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("gf", parents=[common, stepped, constrained], help="walk generating function")
    sub.add_parser("oracle", parents=[common, stepped, constrained], help="brute-force counts")
    sub.add_parser("slit", parents=[common, stepped], help="slit-plane walks ending on the x-axis")
    sub.add_parser("halfplane", parents=[common, stepped],
                   help="half-plane walks avoiding the half line, with the 1/n check")
    p = sub.add_parser("strip", parents=[common, stepped], help="axis-return walks in a strip")
    p.add_argument("--d", type=_nonneg, required=True, help="stay at or above y=-d")
    p.add_argument("--f", type=_nonneg, default=None, help="stay at or below y=f")
    p = sub.add_parser("catalan", parents=[common], help="(1,r),(1,-1) excursions")
    p.add_argument("--r", type=int, default=1)
    p = sub.add_parser("kernel", parents=[common], help="explicit q=2 model")
    p.add_argument("--model", choices=("q2",), default="q2")
    p = sub.add_parser("factor", parents=[common, stepped, constrained],
                       help="factor a walk generating function by grade")
    p.add_argument("--grading", type=parse_grading, default="x")
    p.add_argument("--monoid", choices=("free", "axis"), default="free",
                   help="axis: keep only walks ending on the x-axis")
    sub.add_parser("verify", parents=[common], help="run every identity check")
    return parser


def _emit(payload: dict, fmt: str, out) -> None:
    if fmt == "json":
        out.write(json.dumps(payload, indent=2) + "\n")
        return
    writer = csv.writer(out, lineterminator="\n")
    tables = [("", payload["entries"])] + [(k, v) for k, v in payload.get("parts", {}).items()]
    labelled = len(tables) > 1
    writer.writerow((["part"] if labelled else []) + ["x", "y", "n", "count"])
    for label, rows in tables:
        for e in rows:
            writer.writerow(([label or "input"] if labelled else []) + [e["x"], e["y"], e["n"], e["count"]])


def _factor_parts(fac) -> dict:
    return {name: series_entries(part) for name, part in zip(("minus", "zero", "plus"), fac)}


def run(argv: Sequence[str] | None = None, stdout=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    stdout = stdout or sys.stdout
    N = args.trunc
    ok = True

    if args.command == "verify":
        results = list(verify.run_checks(N))
        ok = all(r.status != verify.FAIL for r in results)
        if args.format == "json":
            payload = {"model": "verify", "trunc": N, "ok": ok,
                       "checks": [{"name": r.name, "status": r.status, "detail": r.detail} for r in results]}
            text = json.dumps(payload, indent=2) + "\n"
        else:
            text = "\n".join(r.line() for r in results) + "\n"
        _write(text, args.out, stdout)
        return 0 if ok else 1

    if args.command == "gf":
        payload = {"model": "gf", "trunc": N,
                   "entries": series_entries(walks.gf_constrained(args.steps, args.constraint, N))}
    elif args.command == "oracle":
        payload = {"model": "oracle", "trunc": N,
                   "entries": table_entries(enumerate_walks(args.steps, args.constraint, N))}
    elif args.command == "slit":
        r = walks.slitplane(args.steps, N)
        payload = {"model": "slit", "trunc": N, "entries": series_entries(r.S0),
                   "parts": {"binv": series_entries(r.Binv), "bilateral": series_entries(r.Sx)}}
    elif args.command == "halfplane":
        h = walks.halfplane_halfline(args.steps, N)
        ok = h.ok
        payload = {"model": "halfplane", "trunc": N, "entries": series_entries(h.Jplus), "p": h.p,
                   "checks": [{"n": c.n, "restricted": str(c.restricted),
                               "unrestricted": str(c.unrestricted), "holds": c.holds} for c in h.checks]}
    elif args.command == "strip":
        s = walks.strip_models(args.steps, args.d, args.f, N)
        payload = {"model": "strip", "trunc": N, "entries": series_entries(s.gamma),
                   "parts": _factor_parts(s.factors)}
    elif args.command == "catalan":
        if args.r < 1:
            parser.error("--r must be a positive integer")
        payload = {"model": f"catalan:r={args.r}", "trunc": N,
                   "entries": series_entries(walks.rary_family(args.r, N))}
    elif args.command == "kernel":
        payload, ok = _kernel_payload(N)
    elif args.command == "factor":
        h = walks.gf_constrained(args.steps, args.constraint, N)
        if args.monoid == "axis":
            h = h.project("CT", "y")
        fac = unique_factorization(h, args.grading)
        payload = {"model": f"factor:{args.monoid}", "trunc": N, "entries": series_entries(h),
                   "parts": _factor_parts(fac)}
    else:  # pragma: no cover - argparse rejects unknown commands
        parser.error(f"unknown command {args.command}")

    buf = io.StringIO()
    _emit(payload, args.format, buf)
    _write(buf.getvalue(), args.out, stdout)
    return 0 if ok else 1


def _kernel_payload(N: int) -> tuple[dict, bool]:
    s10 = kernel.q2_s10(N)
    table = enumerate_walks(kernel.Q2_STEPS, [AvoidHalfLine()], N)
    literal = kernel.closed_form_a10(N)
    comparison = [
        {"n": n, "series": format_count(s10[n].constant_term()), "oracle": str(table[(1, 0, n)]),
         "closed_form": format_count(literal[n - 1]),
         "status": "match" if literal[n - 1] == table[(1, 0, n)] else "known-mismatch"}
        for n in range(1, N + 1)
    ]
    ok = all(s10[n].constant_term() == table[(1, 0, n)] for n in range(N + 1))
    entries = [{"x": 1, "y": 0, "n": n, "count": format_count(s10[n].constant_term())}
               for n in range(N + 1) if s10[n]]
    # polynomials in b; the x slot holds b
    lagrange = [
        {"n": n, "inversion": str(kernel.lagrange_Y_coeff(n)).replace("x", "b"),
         "printed": str(kernel.printed_Y_coeff(n)).replace("x", "b"),
         "status": "match" if kernel.lagrange_Y_coeff(n) == kernel.printed_Y_coeff(n) else "known-mismatch"}
        for n in range(1, N + 1)
    ]
    payload = {"model": "kernel:q2", "trunc": N, "entries": entries,
               "closed_form_comparison": comparison, "lagrange_comparison": lagrange}
    return payload, ok


def _write(text: str, path: str | None, stdout) -> None:
    if path:
        with open(path, "w") as fh:
            fh.write(text)
    else:
        stdout.write(text)


def main(argv: Iterable[str] | None = None) -> None:
    try:
        code = run(list(argv) if argv is not None else None)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        code = 2
    sys.exit(code)


if __name__ == "__main__":
    main()
