"""Exact counts of shortest properly colored paths.

Everything here is exact big-integer arithmetic; no floating point is used
anywhere (factorials and the alternating closed form would overflow and
cancel catastrophically otherwise).

The shortest-path count factors into three independent pieces:

  count = (2 - gamma) * (max(o, t))! * a

  - (2 - gamma): how many edge classes a shortest path may start with.  When
    o + t is odd only the surplus class can start; when it is even both can.
  - (max(o, t))!: the surplus side flips each of its differing dimensions
    exactly once, in any order.
  - a: the deficit side performs m = pd - max(o, t) flips over its l
    dimensions; each of its d = min(o, t) differing dimensions must be
    flipped an odd number of times and every other dimension an even number
    of times (wasted flips cancel in pairs).  ``a`` is the number of such
    length-m words, computed by :func:`word_count_sum` (the direct
    definition) or :func:`word_count_closed` (the fast closed form); the two
    must always agree.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb, factorial

from .core import Coloring, Vertex, class_difference

# The exact flip budget on the deficit side, or the rounded-up half-length
# variant.  The latter is wrong whenever o + t is odd and exists solely as a
# negative control: verification sweeps run with it MUST report mismatches.
FLIP_BUDGET_EXACT = "exact"
FLIP_BUDGET_CEIL_HALF = "ceil-half"

PathCount = int  # exact, arbitrary precision; never rounded


@dataclass(frozen=True)
class WordConstraint:
    """Parameters of a parity-constrained word count.

    Words of length ``m`` over an ``l``-letter alphabet in which each of the
    first ``d`` designated letters occurs an odd number of times and every
    other letter an even number of times.
    """

    l: int
    d: int
    m: int

    def __post_init__(self) -> None:
        if self.l < 1:
            raise ValueError(f"alphabet size must be >= 1, got l={self.l}")
        if not 0 <= self.d <= self.l:
            raise ValueError(f"need 0 <= d <= l, got d={self.d}, l={self.l}")
        if self.m < 0:
            raise ValueError(f"word length must be >= 0, got m={self.m}")


def word_count_sum(w: WordConstraint) -> PathCount:
    """Parity-constrained word count, straight from the definition.

    Sums the multinomial m!/(k_1! ... k_l!) over all compositions
    k_1 + ... + k_l = m with k_i odd for the d designated letters and even
    for the rest.  This is the defining form; :func:`word_count_closed` is
    the fast path and must agree with it everywhere.
    """
    l, d, m = w.l, w.d, w.m
    if m < d or (m - d) % 2 != 0:
        return 0
    m_fact = factorial(m)
    total = 0

    # letters 0..d-1 need odd multiplicity, letters d..l-1 even
    def place(letter: int, remaining: int, odd_left: int, denom: int) -> None:
        nonlocal total
        if letter == l:
            if remaining == 0:
                total += m_fact // denom
            return
        odd = letter < d
        lo = 1 if odd else 0
        # the other odd letters still need at least one flip each
        reserve = odd_left - (1 if odd else 0)
        for k in range(lo, remaining - reserve + 1, 2):
            place(letter + 1, remaining - k, reserve, denom * factorial(k))

    place(0, m, d, 1)
    return total


def word_count_closed(w: WordConstraint) -> PathCount:
    """Parity-constrained word count via the alternating closed form.

    Evaluates

        (1 / 2^l) * sum_{i=0..d} sum_{j=0..l-d}
            (-1)^(d-i) * C(d, i) * C(l-d, j) * (2i + 2j - l)^m

    in exact integer arithmetic.  The double sum is always divisible by 2^l;
    a failed divisibility check signals an implementation bug, never bad
    input.  The convention 0^0 = 1 covers m = 0.
    """
    return _word_count_closed(w.l, w.d, w.m)


@lru_cache(maxsize=None)
def _word_count_closed(l: int, d: int, m: int) -> int:
    total = 0
    for i in range(d + 1):
        sign = -1 if (d - i) % 2 else 1
        ci = comb(d, i)
        for j in range(l - d + 1):
            total += sign * ci * comb(l - d, j) * (2 * i + 2 * j - l) ** m
    q, r = divmod(total, 1 << l)
    assert r == 0, f"closed form not divisible by 2^l for l={l}, d={d}, m={m}"
    assert q >= 0, f"closed form negative for l={l}, d={d}, m={m}"
    return q


def profile_path_count(
    o: int, t: int, c: Coloring, *, flip_budget: str = FLIP_BUDGET_EXACT
) -> PathCount:
    """Shortest-proper-path count for any pair with the given difference profile.

    The count depends on the pair only through (o, t) and the class sizes, so
    tables can be produced without enumerating concrete vertices.
    """
    l1 = len(c.class1)
    l2 = c.n - l1
    if not (0 <= o <= l1 and 0 <= t <= l2):
        raise ValueError(f"profile (o={o}, t={t}) not realizable under {c}")
    if o == 0 and t == 0:
        return 1  # the empty path
    g = (o + t) & 1
    surplus = max(o, t)
    if o < t:
        l, d = l1, o
    else:
        l, d = l2, t
    if flip_budget == FLIP_BUDGET_EXACT:
        m = surplus - g
    elif flip_budget == FLIP_BUDGET_CEIL_HALF:
        m = (2 * surplus - g + 1) // 2  # ceil(pd / 2); negative control only
    else:
        raise ValueError(f"unknown flip budget {flip_budget!r}")
    return (2 - g) * factorial(surplus) * _word_count_closed(l, d, m)


def count_shortest_proper_paths(
    u: Vertex, v: Vertex, c: Coloring, *, flip_budget: str = FLIP_BUDGET_EXACT
) -> PathCount:
    """Exact number of distinct shortest properly colored paths from u to v.

    Returns 1 when u = v (the empty path).  ``flip_budget`` selects the
    deficit-side flip budget; anything but the default exists only for
    negative-control verification and is deliberately wrong.
    """
    o, t = class_difference(u, v, c)
    return profile_path_count(o, t, c, flip_budget=flip_budget)


def j1_reference_count(u: Vertex, v: Vertex, c: Coloring | None = None) -> PathCount:
    """Independent regression count for the single-class-1-dimension coloring.

    Under the coloring with class 1 = {1}, the count collapses to
    (2 - gamma) * t! for t >= 1 and to 1 for t = 0.  Used only to
    cross-check :func:`count_shortest_proper_paths`; rejects any other
    coloring.
    """
    if c is None:
        c = Coloring.prefix(u.n, 1)
    elif c.class1 != frozenset({1}):
        raise ValueError(f"reference count requires class1 == {{1}}, got {c}")
    o, t = class_difference(u, v, c)
    if t == 0:
        return 1  # u = v, or adjacent across dimension 1
    return (2 - ((o + t) & 1)) * factorial(t)
