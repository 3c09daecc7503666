"""Acceptance sweeps: every closed form is held against brute force, exactly.

Each test covers one release criterion and prints one PASS line (run with
``pytest -s`` to see them inline; a summary block is also emitted at the end
of the run).  All comparisons are exact integer equality; there are no
tolerances anywhere.
"""

import json
import random
import time
from math import comb, factorial

from propercube import (
    Coloring,
    Vertex,
    count_shortest_proper_paths,
    enumerate_shortest_proper_paths,
    is_proper_path,
    j1_reference_count,
    proper_distance,
    word_count_closed,
    word_count_sum,
    WordConstraint,
)
from propercube.cli import main as cli_main
from propercube.enumeration import ProperPath
from propercube.oracle import (
    build_colored_hypercube,
    oracle_count_shortest,
    oracle_proper_distance,
    proper_distances_from,
    shortest_walk_counts_from,
)
from propercube.verify import run_verification

from conftest import all_prefix_colorings


def _report(name: str, started: float, detail: str = "") -> None:
    elapsed = time.perf_counter() - started
    suffix = f" ({detail})" if detail else ""
    print(f"\nPASS: {name}{suffix} [{elapsed:.1f}s]")


def test_distance_formula_matches_bfs_everywhere():
    """Formula pd == BFS distance: n=2..8, every prefix coloring, every ordered
    pair, plus 100 random general 2-class colorings per n."""
    started = time.perf_counter()
    all_j = run_verification(8, colorings="all-j", check_counts=False)
    assert all_j.passed, all_j.mismatches[:5]
    jstar = run_verification(8, colorings="random-jstar:100", seed=0, check_counts=False)
    assert jstar.passed, jstar.mismatches[:5]
    _report(
        "distance formula == BFS oracle",
        started,
        f"{all_j.checked + jstar.checked} comparisons",
    )


def test_count_formula_matches_dfs_and_enumeration():
    """Count formula == DFS count == enumeration length: n=2..6 exhaustive over
    prefix colorings; 500 sampled pairs each at n=7 and n=8 (predicted <= 1e6)."""
    started = time.perf_counter()
    report = run_verification(6, colorings="all-j", budget=10**6)
    assert report.passed, report.mismatches[:5]
    assert report.skipped == 0
    checked = report.checked

    for n in (7, 8):
        rng = random.Random(n)
        graphs = {}
        accepted = 0
        while accepted < 500:
            j = rng.randrange(1, n)
            um = rng.randrange(1 << n)
            vm = rng.randrange(1 << n)
            c = Coloring.prefix(n, j)
            u, v = Vertex(n, um), Vertex(n, vm)
            predicted = count_shortest_proper_paths(u, v, c)
            if predicted > 10**6:
                continue
            accepted += 1
            if j not in graphs:
                graphs[j] = build_colored_hypercube(n, c)
            assert oracle_count_shortest(graphs[j], um, vm, budget=10**6) == predicted
            stream = sum(1 for _ in enumerate_shortest_proper_paths(u, v, c))
            assert stream == predicted
            checked += 2
    _report(
        "count formula == DFS oracle == enumeration",
        started,
        f"{checked} comparisons",
    )


def test_single_class1_dimension_regression():
    """Under class 1 = {1}: count == (2 - gamma) * t!, every ordered pair, n <= 10."""
    started = time.perf_counter()
    pairs = 0
    for n in range(2, 11):
        c = Coloring.prefix(n, 1)
        mask2 = c.mask2
        verts = [Vertex(n, m) for m in range(1 << n)]
        for u in verts:
            for v in verts:
                x = u.mask ^ v.mask
                t = (x & mask2).bit_count()
                g = x.bit_count() & 1
                expected = 1 if t == 0 else (2 - g) * factorial(t)
                assert count_shortest_proper_paths(u, v, c) == expected
                assert j1_reference_count(u, v, c) == expected
                pairs += 1
    _report("single-class-1-dimension count regression", started, f"{pairs} pairs")


def test_balanced_difference_regression():
    """Whenever o = t >= 1: count == 2 * o! * t!, every pair, n <= 8, every j."""
    started = time.perf_counter()
    hits = 0
    for n in range(2, 9):
        verts = [Vertex(n, m) for m in range(1 << n)]
        for c in all_prefix_colorings(n):
            mask1, mask2 = c.mask1, c.mask2
            for u in verts:
                for v in verts:
                    x = u.mask ^ v.mask
                    o = (x & mask1).bit_count()
                    if o and o == (x & mask2).bit_count():
                        assert count_shortest_proper_paths(u, v, c) == 2 * factorial(o) ** 2
                        hits += 1
    _report("balanced-difference count regression", started, f"{hits} pairs")


def test_word_count_grid():
    """Dual implementations agree, the raw double sum is divisible by 2^l,
    the boundary value is d!, and the count vanishes exactly on bad parity:
    l <= 6, 0 <= d <= l, 0 <= m <= 12."""
    started = time.perf_counter()
    for l in range(1, 7):
        for d in range(l + 1):
            for m in range(13):
                w = WordConstraint(l, d, m)
                s = word_count_sum(w)
                assert s == word_count_closed(w), (l, d, m)
                raw = sum(
                    (-1) ** (d - i) * comb(d, i) * comb(l - d, j) * (2 * i + 2 * j - l) ** m
                    for i in range(d + 1)
                    for j in range(l - d + 1)
                )
                assert raw % (1 << l) == 0, (l, d, m)
                if m == d:
                    assert s == factorial(d), (l, d, m)
                assert (s == 0) == (m < d or (m - d) % 2 != 0), (l, d, m)
    _report("parity-word count: dual implementations, divisibility, boundary", started)


def test_worked_example_golden():
    """The worked pair (n=7, class 1 = dims 1..4, 0101000 -> 0011111):
    pd = 5, both published walks validate, only the 5-edge one is shortest,
    and the count is 12 (established by brute force before trusting the formula)."""
    started = time.perf_counter()
    c = Coloring.prefix(7, 4)
    u = Vertex.from_string("0101000")
    v = Vertex.from_string("0011111")

    g = build_colored_hypercube(7, c)
    assert oracle_proper_distance(g, u.mask, v.mask) == 5
    assert proper_distance(u, v, c) == 5

    detour = ProperPath.from_vertices([Vertex.from_string(s) for s in (
        "0101000", "0001000", "0001100", "0011100",
        "0011110", "1011110", "1011111", "0011111",
    )])
    shortest = ProperPath.from_vertices([Vertex.from_string(s) for s in (
        "0101000", "0101100", "0001100", "0001110", "0011110", "0011111",
    )])
    assert is_proper_path(detour, c).ok
    assert is_proper_path(shortest, c).ok
    assert len(shortest) == 5 == proper_distance(u, v, c)
    assert len(detour) == 7 > proper_distance(u, v, c)

    brute = oracle_count_shortest(g, u.mask, v.mask)
    assert brute == 12
    assert count_shortest_proper_paths(u, v, c) == brute
    paths = list(enumerate_shortest_proper_paths(u, v, c))
    assert len(paths) == 12
    assert shortest in paths
    _report("worked-example golden values", started)


def test_derived_spot_values_oracle_first():
    """Spot counts are recomputed by the brute-force engine in this very test,
    then required of the formula: 2, 8, and 84."""
    started = time.perf_counter()
    cases = [
        (5, [1, 2], "11100", "00000", 2),
        (4, [1, 2], "1100", "0000", 8),
        (6, [1, 2, 3], "111100", "000000", 84),
    ]
    for n, class1, us, vs, frozen in cases:
        c = Coloring.from_class1(n, class1)
        u, v = Vertex.from_string(us), Vertex.from_string(vs)
        g = build_colored_hypercube(n, c)
        brute = oracle_count_shortest(g, u.mask, v.mask)
        assert brute == frozen, (us, vs, brute)
        assert count_shortest_proper_paths(u, v, c) == brute
    _report("derived spot values (oracle first)", started)


def test_walk_path_coincidence():
    """Shortest proper walk counts == shortest proper path counts:
    n <= 6, every prefix coloring, every ordered pair."""
    started = time.perf_counter()
    pairs = 0
    for n in range(2, 7):
        for c in all_prefix_colorings(n):
            g = build_colored_hypercube(n, c)
            for um in range(1 << n):
                walks = shortest_walk_counts_from(g, um)
                for vm in range(1 << n):
                    assert walks[vm] == oracle_count_shortest(g, um, vm)
                    pairs += 1
    _report("walk-path coincidence", started, f"{pairs} pairs")


def test_negative_control_must_fail(capsys):
    """A build whose deficit flip budget is rounded up to ceil(pd/2) must fail
    verification at n=3 with the single-class-1-dimension coloring; this pins
    the adopted flip budget max(o,t) - gamma as the one brute force confirms."""
    started = time.perf_counter()
    code = cli_main(["verify", "--max-n", "3", "--negative-control"])
    out = capsys.readouterr().out
    assert code == 1
    data = json.loads(out)
    assert data["passed"] is False
    assert any(m["n"] == 3 and m["coloring"] == "j=1" for m in data["mismatches"])
    # distances are untouched by the corrupted count formula
    assert all(m["kind"] != "pd" for m in data["mismatches"])
    with capsys.disabled():
        _report("negative control fails verification", started,
                f"{len(data['mismatches'])} mismatches surfaced")
