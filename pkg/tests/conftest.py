import itertools
from fractions import Fraction

from hypothesis import strategies as st

from gesselwalks.laurent import LaurentPoly
from gesselwalks.series import TSeries

exponents = st.integers(-3, 3)
coefficients = st.fractions(min_value=-4, max_value=4, max_denominator=3)
keys = st.tuples(exponents, exponents, st.integers(-1, 1))

laurent_polys = st.dictionaries(keys, coefficients, max_size=5).map(LaurentPoly)
gradings = st.one_of(
    st.sampled_from(["x", "y", "mark"]),
    st.tuples(st.integers(-3, 3), st.integers(-3, 3)),
)


@st.composite
def unit_series(draw, trunc=5):
    """``1 + t*p1 + t^2*p2`` with small random Laurent coefficients."""
    small = st.dictionaries(keys, coefficients, max_size=3).map(LaurentPoly)
    cs = [LaurentPoly.constant(1), draw(small), draw(small)]
    return TSeries((cs + [0] * trunc)[: trunc + 1])


def pm1_walks(n):
    """All sequences of +-1 of length n (brute force)."""
    return itertools.product((1, -1), repeat=n)


def dyck_count(n):
    """Brute-force count of +-1 walks of length n staying >= 0 and ending at 0."""
    total = 0
    for w in pm1_walks(n):
        h = 0
        ok = True
        for s in w:
            h += s
            if h < 0:
                ok = False
                break
        total += ok and h == 0
    return total


def returns_to_zero(n):
    return sum(1 for w in pm1_walks(n) if sum(w) == 0)


_acceptance: dict = {}


def pytest_runtest_logreport(report):
    if "test_acceptance" in report.nodeid and report.when == "call":
        _acceptance[report.nodeid.split("::")[-1]] = report.outcome
    elif "test_acceptance" in report.nodeid and report.failed:
        _acceptance[report.nodeid.split("::")[-1]] = "failed"


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome in sorted(_acceptance.items()):
        terminalreporter.write_line(f"{'PASS' if outcome == 'passed' else 'FAIL'}  {name}")
