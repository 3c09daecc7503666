"""Vertices, two-class edge colorings, and pairwise routing metrics of hypercubes.

An n-dimensional hypercube has one vertex per n-bit string; two vertices are
adjacent when they differ in exactly one bit position (the *dimension* of that
edge).  A two-class coloring splits the dimension set {1..n} into class 1 and
class 2; every edge inherits the class of its dimension.  A path is *proper*
when consecutive edges never repeat a class, which models alternation
constraints in interconnection routing.

Conventions:
  - Dimensions are 1-based.  In textual I/O, dimension 1 is the leftmost
    character of the bit string.
  - Internally a vertex is a bit-packed integer mask with bit (d-1) holding
    dimension d.  Python integers are arbitrary precision, so the same
    representation is exact at any n.
  - pd(u, u) = 0 by the empty-path convention.

The derived pair metrics:
  - o: number of class-1 dimensions where the two vertices differ
  - t: number of class-2 dimensions where they differ
  - gamma: 1 if o + t is odd, else 0
  - pd: length of a shortest properly colored path, 2*max(o, t) - gamma
    for distinct vertices
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property


class DimensionMismatchError(ValueError):
    """Operands (vertices and/or coloring) do not share the same dimension count."""


@dataclass(frozen=True)
class Vertex:
    """A hypercube vertex: n bits packed into an integer mask.

    Bit (d - 1) of ``mask`` is the value of dimension d.
    """

    n: int
    mask: int

    def __post_init__(self) -> None:
        if self.n < 2:
            raise ValueError(f"vertex needs at least 2 dimensions, got n={self.n}")
        if not 0 <= self.mask < (1 << self.n):
            raise ValueError(f"mask {self.mask} out of range for n={self.n}")

    @classmethod
    def from_string(cls, text: str) -> "Vertex":
        """Parse a bit string such as "0101000" (dimension 1 leftmost)."""
        mask = 0
        for i, ch in enumerate(text):
            if ch == "1":
                mask |= 1 << i
            elif ch != "0":
                raise ValueError(
                    f"invalid vertex string {text!r}: character {ch!r} at position {i + 1}"
                )
        if len(text) < 2:
            raise ValueError(f"invalid vertex string {text!r}: need at least 2 bits")
        return cls(len(text), mask)

    @classmethod
    def from_bits(cls, bits) -> "Vertex":
        """Build from an iterable of 0/1 values, dimension 1 first."""
        vals = list(bits)
        if any(b not in (0, 1) for b in vals):
            raise ValueError(f"bits must be 0 or 1, got {vals!r}")
        mask = 0
        for i, b in enumerate(vals):
            if b:
                mask |= 1 << i
        return cls(len(vals), mask)

    @property
    def bits(self) -> tuple[int, ...]:
        return tuple((self.mask >> i) & 1 for i in range(self.n))

    def bit(self, dimension: int) -> int:
        """Value of the given 1-based dimension."""
        if not 1 <= dimension <= self.n:
            raise ValueError(f"dimension {dimension} out of range 1..{self.n}")
        return (self.mask >> (dimension - 1)) & 1

    def flip(self, dimension: int) -> "Vertex":
        """The neighbor across the given dimension."""
        if not 1 <= dimension <= self.n:
            raise ValueError(f"dimension {dimension} out of range 1..{self.n}")
        return Vertex(self.n, self.mask ^ (1 << (dimension - 1)))

    def __xor__(self, other: "Vertex") -> "Vertex":
        """Coordinatewise XOR translation (a color-preserving automorphism)."""
        if self.n != other.n:
            raise DimensionMismatchError(f"n mismatch: {self.n} vs {other.n}")
        return Vertex(self.n, self.mask ^ other.mask)

    def __str__(self) -> str:
        return "".join("1" if (self.mask >> i) & 1 else "0" for i in range(self.n))


@dataclass(frozen=True)
class Coloring:
    """A two-class partition of the dimensions {1..n}.

    Class 1 is given explicitly; class 2 is the complement.  Both classes must
    be nonempty, so 2-class proper alternation is always meaningful.
    """

    n: int
    class1: frozenset[int]

    def __post_init__(self) -> None:
        object.__setattr__(self, "class1", frozenset(self.class1))
        if self.n < 2:
            raise ValueError(f"coloring needs at least 2 dimensions, got n={self.n}")
        bad = [d for d in self.class1 if not 1 <= d <= self.n]
        if bad:
            raise ValueError(f"class-1 dimensions {bad} out of range 1..{self.n}")
        if not self.class1:
            raise ValueError("class 1 must be nonempty")
        if len(self.class1) == self.n:
            raise ValueError("class 2 must be nonempty (class 1 covers every dimension)")

    @classmethod
    def prefix(cls, n: int, j: int) -> "Coloring":
        """The prefix coloring: dimensions 1..j in class 1, the rest in class 2."""
        if not 1 <= j < n:
            raise ValueError(f"need 1 <= j < n, got j={j}, n={n}")
        return cls(n, frozenset(range(1, j + 1)))

    @classmethod
    def from_class1(cls, n: int, dims) -> "Coloring":
        """Arbitrary class-1 dimension set (the general two-class coloring)."""
        return cls(n, frozenset(dims))

    @cached_property
    def class2(self) -> frozenset[int]:
        return frozenset(range(1, self.n + 1)) - self.class1

    @cached_property
    def mask1(self) -> int:
        m = 0
        for d in self.class1:
            m |= 1 << (d - 1)
        return m

    @cached_property
    def mask2(self) -> int:
        return ((1 << self.n) - 1) ^ self.mask1

    @cached_property
    def class1_sorted(self) -> tuple[int, ...]:
        return tuple(sorted(self.class1))

    @cached_property
    def class2_sorted(self) -> tuple[int, ...]:
        return tuple(sorted(self.class2))

    def color_of(self, dimension: int) -> int:
        """1 or 2: the class of the given dimension."""
        if not 1 <= dimension <= self.n:
            raise ValueError(f"dimension {dimension} out of range 1..{self.n}")
        return 1 if dimension in self.class1 else 2

    def is_prefix(self) -> bool:
        return self.class1 == frozenset(range(1, len(self.class1) + 1))

    def spec(self) -> str:
        """Canonical textual form: "j=K" for prefix colorings, else a dim list."""
        if self.is_prefix():
            return f"j={len(self.class1)}"
        return ",".join(str(d) for d in self.class1_sorted)

    def __str__(self) -> str:
        return f"n={self.n}:{self.spec()}"


def parse_coloring(n: int, text: str) -> Coloring:
    """Parse a coloring spec: "j=K" or a comma-separated class-1 dimension list."""
    text = text.strip()
    if text.startswith("j="):
        try:
            j = int(text[2:])
        except ValueError:
            raise ValueError(f"invalid coloring spec {text!r}: expected an integer after 'j='")
        return Coloring.prefix(n, j)
    try:
        dims = [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise ValueError(
            f"invalid coloring spec {text!r}: expected 'j=K' or comma-separated dimensions"
        )
    if not dims:
        raise ValueError(f"invalid coloring spec {text!r}: empty dimension list")
    return Coloring.from_class1(n, dims)


@dataclass(frozen=True)
class PairProfile:
    """All derived quantities for one vertex pair under one coloring.

    The *surplus* side is the class with more differing dimensions, the
    *deficit* side the other one (class 2 on ties, a pure determinism
    convention).  ``m`` is the number of flips a shortest proper path spends
    on the deficit side; the surplus side always flips each of its differing
    dimensions exactly once.
    """

    o: int            # differing class-1 dimensions
    t: int            # differing class-2 dimensions
    gamma: int        # (o + t) mod 2
    pd: int           # shortest proper path length
    surplus: int      # max(o, t)
    deficit_d: int    # min(o, t): deficit-side dimensions that must change
    deficit_l: int    # size of the deficit-side color class
    deficit_class: int  # 1 or 2
    m: int            # pd - max(o, t): flip budget on the deficit side

    def __post_init__(self) -> None:
        assert self.gamma == (self.o + self.t) % 2
        assert self.pd >= self.o + self.t and (self.pd - self.o - self.t) % 2 == 0
        assert self.m >= self.deficit_d and (self.m - self.deficit_d) % 2 == 0


def _require_same_n(u: Vertex, v: Vertex, c: Coloring) -> None:
    if not (u.n == v.n == c.n):
        raise DimensionMismatchError(
            f"dimension mismatch: u has n={u.n}, v has n={v.n}, coloring has n={c.n}"
        )


def class_difference(u: Vertex, v: Vertex, c: Coloring) -> tuple[int, int]:
    """(o, t): counts of differing dimensions in class 1 and class 2."""
    _require_same_n(u, v, c)
    x = u.mask ^ v.mask
    return (x & c.mask1).bit_count(), (x & c.mask2).bit_count()


def gamma(u: Vertex, v: Vertex, c: Coloring) -> int:
    """Parity indicator: 1 if the total number of differing dimensions is odd."""
    o, t = class_difference(u, v, c)
    return (o + t) & 1


def proper_distance(u: Vertex, v: Vertex, c: Coloring) -> int:
    """Length of a shortest properly colored path from u to v (0 when u = v)."""
    o, t = class_difference(u, v, c)
    if o == 0 and t == 0:
        return 0
    return 2 * max(o, t) - ((o + t) & 1)


def pair_profile(u: Vertex, v: Vertex, c: Coloring) -> PairProfile:
    """Bundle every pairwise metric, including the deficit-side parameters."""
    o, t = class_difference(u, v, c)
    g = (o + t) & 1
    surplus = max(o, t)
    pd = 0 if surplus == 0 else 2 * surplus - g
    if o < t:
        deficit_class = 1
        deficit_d = o
        deficit_l = len(c.class1)
    else:
        # ties go to class 2; the resulting word count is side-independent there
        deficit_class = 2
        deficit_d = t
        deficit_l = c.n - len(c.class1)
    return PairProfile(
        o=o,
        t=t,
        gamma=g,
        pd=pd,
        surplus=surplus,
        deficit_d=deficit_d,
        deficit_l=deficit_l,
        deficit_class=deficit_class,
        m=pd - surplus,
    )
