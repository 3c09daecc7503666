"""Deterministic generation of every shortest properly colored path.

Construction: a shortest proper path of length pd alternates strictly between
the two edge classes, so the class that takes the first flip performs
ceil(pd/2) flips and the other floor(pd/2).  Each class contributes an
independent flip word over its own dimensions (differing dimensions an odd
number of times, all others even); interleaving the two words alternately
yields the path.  A starting class is admissible exactly when both resulting
flip budgets are achievable, which reproduces the (2 - gamma) starting-class
factor constructively.

Enumeration order (frozen, so golden tests stay stable): starting class 1
before class 2 when both are admissible; within a start, class-1 words in
lexicographic order over ascending dimensions, class-2 words likewise in the
inner loop.

Streams are lazy generators; callers may stop early.  Full drains are only
sensible when the predicted count is bounded.
"""

from __future__ import annotations

from typing import Iterator, NamedTuple, Sequence

from .core import Coloring, Vertex, class_difference


class ProperPath:
    """A walk through the hypercube recorded as vertices plus per-edge flips.

    Internally stores vertex masks; ``vertices`` materializes `Vertex`
    objects on demand so that large enumeration drains stay cheap.  The
    constructor does not validate properness: build candidate paths freely
    and judge them with :func:`is_proper_path`.
    """

    __slots__ = ("n", "masks", "flips")

    def __init__(self, n: int, masks: tuple[int, ...], flips: tuple[int, ...]):
        self.n = n
        self.masks = masks
        self.flips = flips

    @classmethod
    def from_flips(cls, start: Vertex, flips: Sequence[int]) -> "ProperPath":
        """Walk from ``start`` flipping the given dimensions in order."""
        n = start.n
        masks = [start.mask]
        m = start.mask
        for d in flips:
            if not 1 <= d <= n:
                raise ValueError(f"dimension {d} out of range 1..{n}")
            m ^= 1 << (d - 1)
            masks.append(m)
        return cls(n, tuple(masks), tuple(flips))

    @classmethod
    def from_vertices(cls, vertices: Sequence[Vertex]) -> "ProperPath":
        """Rebuild the flip sequence from consecutive vertices (must be unit steps)."""
        if not vertices:
            raise ValueError("a path needs at least one vertex")
        n = vertices[0].n
        if any(v.n != n for v in vertices):
            raise ValueError("all path vertices must share the same n")
        flips = []
        for a, b in zip(vertices, vertices[1:]):
            x = a.mask ^ b.mask
            if x.bit_count() != 1:
                raise ValueError(
                    f"consecutive vertices {a} and {b} differ in {x.bit_count()} dimensions"
                )
            flips.append(x.bit_length())
        return cls(n, tuple(v.mask for v in vertices), tuple(flips))

    @property
    def vertices(self) -> tuple[Vertex, ...]:
        return tuple(Vertex(self.n, m) for m in self.masks)

    @property
    def start(self) -> Vertex:
        return Vertex(self.n, self.masks[0])

    @property
    def end(self) -> Vertex:
        return Vertex(self.n, self.masks[-1])

    def __len__(self) -> int:
        """Edge count."""
        return len(self.flips)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, ProperPath)
            and self.n == other.n
            and self.masks == other.masks
        )

    def __hash__(self) -> int:
        return hash((self.n, self.masks))

    def __str__(self) -> str:
        return "->".join(str(Vertex(self.n, m)) for m in self.masks)

    def __repr__(self) -> str:
        dims = ",".join(str(d) for d in self.flips)
        return f"ProperPath({self}, dims: {dims})"


class PathCheck(NamedTuple):
    """Validation outcome; ``edge_index`` points at the first offending edge."""

    ok: bool
    edge_index: int | None
    reason: str | None

    def __bool__(self) -> bool:
        return self.ok


def is_proper_path(p: ProperPath, c: Coloring) -> PathCheck:
    """Check unit steps, class alternation, and vertex distinctness under ``c``.

    Works from the vertex sequence alone (recorded flips are not trusted).
    Returns the first violation, if any; a repeated vertex is reported at the
    edge that enters it.
    """
    if p.n != c.n:
        return PathCheck(False, None, f"path has n={p.n} but coloring has n={c.n}")
    seen = {p.masks[0]}
    prev_color = 0
    for i in range(len(p.masks) - 1):
        x = p.masks[i] ^ p.masks[i + 1]
        if x.bit_count() != 1:
            return PathCheck(False, i, f"edge {i} changes {x.bit_count()} dimensions")
        color = c.color_of(x.bit_length())
        if color == prev_color:
            return PathCheck(False, i, f"edges {i - 1} and {i} both have color {color}")
        if p.masks[i + 1] in seen:
            return PathCheck(False, i, f"edge {i} revisits an earlier vertex")
        seen.add(p.masks[i + 1])
        prev_color = color
    return PathCheck(True, None, None)


def _feasible(budget: int, required: int) -> bool:
    # A class can spend `budget` flips iff the required odd flips fit and the
    # surplus cancels in pairs.
    return budget >= required and (budget - required) % 2 == 0


def _parity_words(
    dims: tuple[int, ...], odd_dims: frozenset[int], length: int
) -> Iterator[tuple[int, ...]]:
    """All length-``length`` words over ``dims`` with the given parity pattern.

    Dimensions in ``odd_dims`` must occur an odd number of times, all others
    an even number of times.  Yields in lexicographic order over ``dims``
    (assumed ascending).  Pruning is exact, so every branch taken completes.
    """
    pending = set(odd_dims)
    if length < len(pending) or (length - len(pending)) % 2:
        return
    word: list[int] = []

    def extend(remaining: int) -> Iterator[tuple[int, ...]]:
        if remaining == 0:
            yield tuple(word)
            return
        for d in dims:
            if d in pending:
                np = len(pending) - 1
            else:
                np = len(pending) + 1
            if np > remaining - 1 or (remaining - 1 - np) % 2:
                continue
            pending.symmetric_difference_update((d,))
            word.append(d)
            yield from extend(remaining - 1)
            word.pop()
            pending.symmetric_difference_update((d,))

    yield from extend(length)


def _interleave(first: tuple[int, ...], second: tuple[int, ...]) -> tuple[int, ...]:
    out = []
    for i in range(len(first)):
        out.append(first[i])
        if i < len(second):
            out.append(second[i])
    return tuple(out)


def enumerate_shortest_proper_paths(
    u: Vertex, v: Vertex, c: Coloring
) -> Iterator[ProperPath]:
    """Yield every shortest properly colored path from u to v exactly once.

    The stream is deterministic (see module docstring for the order), every
    path has length pd(u, v), and the stream length equals the closed-form
    count.  For u = v the stream is a single zero-length path.
    """
    o, t = class_difference(u, v, c)
    if o == 0 and t == 0:
        yield ProperPath(u.n, (u.mask,), ())
        return
    pd = 2 * max(o, t) - ((o + t) & 1)
    x = u.mask ^ v.mask
    dims1 = c.class1_sorted
    dims2 = c.class2_sorted
    odd1 = frozenset(d for d in dims1 if (x >> (d - 1)) & 1)
    odd2 = frozenset(d for d in dims2 if (x >> (d - 1)) & 1)
    n = u.n
    base = u.mask
    first_budget = (pd + 1) // 2
    second_budget = pd // 2
    for start_class in (1, 2):
        if start_class == 1:
            b1, b2 = first_budget, second_budget
        else:
            b1, b2 = second_budget, first_budget
        if not (_feasible(b1, o) and _feasible(b2, t)):
            continue
        for w1 in _parity_words(dims1, odd1, b1):
            for w2 in _parity_words(dims2, odd2, b2):
                flips = _interleave(w1, w2) if start_class == 1 else _interleave(w2, w1)
                masks = [base]
                m = base
                for d in flips:
                    m ^= 1 << (d - 1)
                    masks.append(m)
                yield ProperPath(n, tuple(masks), flips)


def shortest_path_witness(u: Vertex, v: Vertex, c: Coloring) -> ProperPath:
    """The first path of the deterministic enumeration order."""
    return next(enumerate_shortest_proper_paths(u, v, c))
