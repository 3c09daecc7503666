"""Formula-versus-oracle verification sweeps and machine-readable reports.

A sweep walks every vertex pair of every selected coloring and confronts the
closed forms with the brute-force engine: distance formula against BFS,
path-count formula against depth-bounded DFS, and the enumeration stream
length against the count.  Pairs whose predicted count exceeds the budget are
skipped and tallied.  The report is plain data, JSON-serializable, and
deterministic for a fixed seed.

``PROPERCUBE_VERIFY_WORKERS`` distributes colorings over a process pool;
results are merged in a fixed order, so reports stay diffable.
"""

from __future__ import annotations

import os
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field

from .core import Coloring, Vertex, proper_distance
from .counting import FLIP_BUDGET_CEIL_HALF, FLIP_BUDGET_EXACT, count_shortest_proper_paths
from .enumeration import enumerate_shortest_proper_paths
from .oracle import (
    BudgetExceededError,
    build_colored_hypercube,
    oracle_count_shortest,
    proper_distances_from,
)

WORKERS_ENV = "PROPERCUBE_VERIFY_WORKERS"
DEFAULT_BUDGET = 10**6


@dataclass(frozen=True)
class Mismatch:
    """One disagreement between a closed form and the ground truth."""

    kind: str      # "pd" (distance), "pp" (count), or "enum" (stream length)
    n: int
    coloring: str  # textual coloring spec
    u: str
    v: str
    formula: str   # decimal string, exact
    oracle: str    # brute-force/enumeration value, decimal string


@dataclass
class VerificationReport:
    scope: str
    checked: int
    skipped: int
    mismatches: list[Mismatch] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.mismatches

    def to_dict(self) -> dict:
        return {
            "scope": self.scope,
            "checked": self.checked,
            "skipped": self.skipped,
            "passed": self.passed,
            "mismatches": [asdict(m) for m in self.mismatches],
            "elapsed": self.elapsed,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "VerificationReport":
        return cls(
            scope=data["scope"],
            checked=data["checked"],
            skipped=data["skipped"],
            mismatches=[Mismatch(**m) for m in data["mismatches"]],
            elapsed=data["elapsed"],
        )


def parse_colorings_spec(spec: str) -> tuple[str, int]:
    """Parse "all-j" or "random-jstar:K" into (mode, sample count)."""
    if spec == "all-j":
        return "all-j", 0
    if spec.startswith("random-jstar:"):
        try:
            k = int(spec.split(":", 1)[1])
        except ValueError:
            raise ValueError(f"invalid colorings spec {spec!r}")
        if k < 1:
            raise ValueError(f"invalid colorings spec {spec!r}: sample count must be >= 1")
        return "random-jstar", k
    raise ValueError(f"invalid colorings spec {spec!r}: expected 'all-j' or 'random-jstar:K'")


def colorings_for(n: int, spec: str, seed: int = 0) -> list[Coloring]:
    """The colorings a sweep visits at dimension n, deterministically.

    "all-j" yields every prefix coloring.  "random-jstar:K" draws K class-1
    subsets uniformly from the nonempty proper subsets of {1..n} (duplicates
    collapse, so small n may produce fewer than K distinct colorings).
    """
    mode, k = parse_colorings_spec(spec)
    if mode == "all-j":
        return [Coloring.prefix(n, j) for j in range(1, n)]
    rng = random.Random(f"{seed}:{n}")
    masks = dict.fromkeys(rng.randrange(1, (1 << n) - 1) for _ in range(k))
    return [
        Coloring.from_class1(n, [d for d in range(1, n + 1) if (mask >> (d - 1)) & 1])
        for mask in masks
    ]


def verify_coloring(
    n: int,
    c: Coloring,
    *,
    budget: int = DEFAULT_BUDGET,
    flip_budget: str = FLIP_BUDGET_EXACT,
    check_counts: bool = True,
) -> tuple[int, int, list[Mismatch]]:
    """Sweep one coloring: (comparisons made, pairs skipped, mismatches).

    Distances are compared for every ordered pair; counts and enumeration for
    every unordered pair (both quantities are symmetric, a property tested
    separately).
    """
    g = build_colored_hypercube(n, c)
    size = 1 << n
    verts = [Vertex(n, m) for m in range(size)]
    spec = c.spec()
    checked = 0
    skipped = 0
    mismatches: list[Mismatch] = []

    for um in range(size):
        dists = proper_distances_from(g, um)
        u = verts[um]
        for vm in range(size):
            formula_pd = proper_distance(u, verts[vm], c)
            checked += 1
            if formula_pd != dists[vm]:
                mismatches.append(
                    Mismatch("pd", n, spec, str(u), str(verts[vm]),
                             str(formula_pd), str(dists[vm]))
                )

    if not check_counts:
        return checked, skipped, mismatches

    for um in range(size):
        u = verts[um]
        for vm in range(um, size):
            v = verts[vm]
            pp = count_shortest_proper_paths(u, v, c, flip_budget=flip_budget)
            if pp > budget:
                skipped += 1
                continue
            try:
                dfs = str(oracle_count_shortest(g, um, vm, budget=budget))
            except BudgetExceededError:
                # the formula predicted <= budget yet DFS overran: a mismatch
                dfs = f">{budget}"
            checked += 1
            if dfs != str(pp):
                mismatches.append(Mismatch("pp", n, spec, str(u), str(v), str(pp), dfs))
            stream = 0
            for _ in enumerate_shortest_proper_paths(u, v, c):
                stream += 1
                if stream > budget:
                    break
            checked += 1
            if stream != pp:
                noted = str(stream) if stream <= budget else f">{budget}"
                mismatches.append(Mismatch("enum", n, spec, str(u), str(v), str(pp), noted))
    return checked, skipped, mismatches


def _verify_task(args) -> tuple[int, int, list[Mismatch]]:
    n, c, budget, flip_budget, check_counts = args
    return verify_coloring(
        n, c, budget=budget, flip_budget=flip_budget, check_counts=check_counts
    )


def worker_count() -> int:
    raw = os.environ.get(WORKERS_ENV, "")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def run_verification(
    max_n: int,
    *,
    colorings: str = "all-j",
    budget: int = DEFAULT_BUDGET,
    seed: int = 0,
    flip_budget: str = FLIP_BUDGET_EXACT,
    check_counts: bool = True,
    workers: int | None = None,
) -> VerificationReport:
    """Sweep every coloring selected by ``colorings`` for each n in 2..max_n."""
    if not 2 <= max_n <= 20:
        raise ValueError(f"max_n must be within the oracle range 2..20, got {max_n}")
    parse_colorings_spec(colorings)  # fail fast on bad specs
    if flip_budget not in (FLIP_BUDGET_EXACT, FLIP_BUDGET_CEIL_HALF):
        raise ValueError(f"unknown flip budget {flip_budget!r}")
    started = time.perf_counter()
    tasks = []
    for n in range(2, max_n + 1):
        for c in colorings_for(n, colorings, seed):
            tasks.append((n, c, budget, flip_budget, check_counts))

    nworkers = worker_count() if workers is None else max(1, workers)
    if nworkers > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=nworkers) as pool:
            results = list(pool.map(_verify_task, tasks))
    else:
        results = [_verify_task(t) for t in tasks]

    checked = sum(r[0] for r in results)
    skipped = sum(r[1] for r in results)
    mismatches = [m for r in results for m in r[2]]
    scope = (
        f"n=2..{max_n}, colorings={colorings}, seed={seed}, budget={budget}, "
        f"pairs=ordered(distance)"
        + ("+unordered(count,enumeration)" if check_counts else "")
        + ("" if flip_budget == FLIP_BUDGET_EXACT else f", flip_budget={flip_budget}")
    )
    return VerificationReport(
        scope=scope,
        checked=checked,
        skipped=skipped,
        mismatches=mismatches,
        elapsed=time.perf_counter() - started,
    )
