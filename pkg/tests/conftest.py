"""Shared test helpers: independent brute-force oracles and hypothesis strategies.

The word-count enumerator here is deliberately naive (walk every word) so the
closed forms in the package are confronted with something that cannot share
their bugs.
"""

from itertools import product

from hypothesis import strategies as st

from propercube import Coloring, Vertex


def brute_word_count(l: int, d: int, m: int) -> int:
    """Count length-m words over l letters with letters 0..d-1 odd, the rest even."""
    total = 0
    for word in product(range(l), repeat=m):
        if all((word.count(i) % 2 == 1) == (i < d) for i in range(l)):
            total += 1
    return total


def coloring_from_mask(n: int, mask1: int) -> Coloring:
    return Coloring.from_class1(n, [d for d in range(1, n + 1) if (mask1 >> (d - 1)) & 1])


def all_prefix_colorings(n: int) -> list[Coloring]:
    return [Coloring.prefix(n, j) for j in range(1, n)]


@st.composite
def pair_with_coloring(draw, max_n: int = 8):
    """A random (u, v, coloring) triple sharing one dimension count."""
    n = draw(st.integers(min_value=2, max_value=max_n))
    mask1 = draw(st.integers(min_value=1, max_value=(1 << n) - 2))
    u = Vertex(n, draw(st.integers(min_value=0, max_value=(1 << n) - 1)))
    v = Vertex(n, draw(st.integers(min_value=0, max_value=(1 << n) - 1)))
    return u, v, coloring_from_mask(n, mask1)


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    """One line per acceptance criterion at the end of the run."""
    lines = []
    for outcome in ("passed", "failed", "error"):
        for report in terminalreporter.stats.get(outcome, []):
            nodeid = getattr(report, "nodeid", "")
            if "test_acceptance" in nodeid and getattr(report, "when", "call") == "call":
                label = "PASS" if outcome == "passed" else "FAIL"
                lines.append(f"{label}  {nodeid.split('::')[-1]}")
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines, key=lambda s: s.split()[-1]):
            terminalreporter.write_line(line)
