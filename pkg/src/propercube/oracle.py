"""Brute-force ground truth over generic edge-colored graphs.

Nothing here knows the closed-form pair metrics: distances come from
breadth-first search over (vertex, last-edge-color) states and counts from
depth-bounded DFS and dynamic programming, straight from the definitions.
Every closed-form result in the package is validated against this module.

Colors are arbitrary small positive integers; the hypercube builder uses
1 and 2.  Path counting is exponential by nature, so it takes a budget that
turns runaway instances into an explicit error instead of a silent hang.
"""

from __future__ import annotations

from collections import deque

from .core import Coloring

DEFAULT_PATH_BUDGET = 10**6


class BudgetExceededError(RuntimeError):
    """Raised when a counting run materializes more paths than its budget."""


class _StateMachine:
    """Flattened (vertex, last-color) transition tables for one graph.

    State id = vertex * width + color_index, where color_index 0 means "no
    edge taken yet" and 1..k index the sorted distinct colors.  ``fwd`` holds
    plain target state ids (fast BFS), ``fwd_pairs`` the same with the target
    vertex unpacked (fast DFS), ``pred`` the reversed edges (distance-to-goal
    tables).
    """

    __slots__ = ("width", "color_index", "fwd", "fwd_pairs", "pred")

    def __init__(self, graph: "ColoredGraph"):
        colors = sorted({color for _, _, color in graph.edges})
        self.color_index = {color: i + 1 for i, color in enumerate(colors)}
        width = len(colors) + 1
        self.width = width
        nstates = graph.vertex_count * width
        fwd: list[list[int]] = [[] for _ in range(nstates)]
        for a, b, color in graph.edges:
            ci = self.color_index[color]
            for src, dst in ((a, b), (b, a)):
                tgt = dst * width + ci
                base = src * width
                for last in range(width):
                    if last != ci:
                        fwd[base + last].append(tgt)
        self.fwd = fwd
        self.fwd_pairs = [[(s // width, s) for s in lst] for lst in fwd]
        pred: list[list[int]] = [[] for _ in range(nstates)]
        for s, lst in enumerate(fwd):
            for tgt in lst:
                pred[tgt].append(s)
        self.pred = pred


class ColoredGraph:
    """Undirected finite graph with color-labeled edges.

    No self-loops; a vertex pair may carry several edges only if their colors
    differ.  Mutating the edge set invalidates cached state tables.
    """

    def __init__(self, vertex_count: int):
        if vertex_count < 1:
            raise ValueError(f"vertex count must be >= 1, got {vertex_count}")
        self.vertex_count = vertex_count
        self.edges: list[tuple[int, int, int]] = []
        self._adjacency: list[list[tuple[int, int]]] = [[] for _ in range(vertex_count)]
        self._edge_keys: set[tuple[int, int, int]] = set()
        self._states: _StateMachine | None = None

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.vertex_count:
            raise ValueError(f"vertex id {v} out of range 0..{self.vertex_count - 1}")

    def add_edge(self, u: int, v: int, color: int) -> None:
        self._check_vertex(u)
        self._check_vertex(v)
        if u == v:
            raise ValueError(f"self-loop at vertex {u}")
        if color < 1:
            raise ValueError(f"colors are positive integers, got {color}")
        key = (min(u, v), max(u, v), color)
        if key in self._edge_keys:
            raise ValueError(f"duplicate edge {key}")
        self._edge_keys.add(key)
        self.edges.append(key)
        self._adjacency[u].append((v, color))
        self._adjacency[v].append((u, color))
        self._states = None

    def adjacency(self, v: int) -> list[tuple[int, int]]:
        """(neighbor, color) pairs incident to v."""
        self._check_vertex(v)
        return list(self._adjacency[v])

    def _state_machine(self) -> _StateMachine:
        if self._states is None:
            self._states = _StateMachine(self)
        return self._states

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, ColoredGraph)
            and self.vertex_count == other.vertex_count
            and sorted(self.edges) == sorted(other.edges)
        )

    def __repr__(self) -> str:
        return f"ColoredGraph(vertices={self.vertex_count}, edges={len(self.edges)})"


def build_colored_hypercube(n: int, c: Coloring) -> ColoredGraph:
    """The n-cube on vertex ids 0..2^n - 1 with edges colored by dimension class.

    Vertex id bit (d - 1) is dimension d, matching ``Vertex.mask``.  Capped at
    n <= 20: brute-force work is infeasible beyond small n anyway.
    """
    if not 2 <= n <= 20:
        raise ValueError(f"oracle range is 2 <= n <= 20, got n={n}")
    if c.n != n:
        raise ValueError(f"coloring has n={c.n}, expected {n}")
    g = ColoredGraph(1 << n)
    for d in range(1, n + 1):
        bit = 1 << (d - 1)
        color = c.color_of(d)
        for m in range(1 << n):
            if not m & bit:
                g.add_edge(m, m | bit, color)
    return g


def proper_distances_from(g: ColoredGraph, u: int) -> list[int | None]:
    """Single-source shortest properly-colored walk lengths to every vertex.

    BFS over (vertex, last-edge-color) states with a virtual "no color yet"
    start state.  A shortest proper walk never needs to repeat a vertex, so
    these are also the shortest proper path lengths.  ``None`` marks vertices
    with no properly colored walk from u.
    """
    g._check_vertex(u)
    sm = g._state_machine()
    width, fwd = sm.width, sm.fwd
    nstates = g.vertex_count * width
    dist = [-1] * nstates
    start = u * width
    dist[start] = 0
    queue = [start]
    head = 0
    while head < len(queue):
        s = queue[head]
        head += 1
        d = dist[s] + 1
        for tgt in fwd[s]:
            if dist[tgt] < 0:
                dist[tgt] = d
                queue.append(tgt)
    out: list[int | None] = []
    for v in range(g.vertex_count):
        base = v * width
        best = -1
        for i in range(width):
            dv = dist[base + i]
            if dv >= 0 and (best < 0 or dv < best):
                best = dv
        out.append(best if best >= 0 else None)
    return out


def oracle_proper_distance(g: ColoredGraph, u: int, v: int) -> int | None:
    """Minimum edge count over properly colored walks u -> v; None if unreachable."""
    g._check_vertex(v)
    return proper_distances_from(g, u)[v]


def _state_distances_to(g: ColoredGraph, v: int) -> list[int]:
    """For every state, the remaining walk length needed to reach vertex v.

    -1 where v cannot be reached.  Used as an exact lower bound for DFS
    pruning (paths are walks, so the bound is safe).
    """
    sm = g._state_machine()
    width, pred = sm.width, sm.pred
    nstates = g.vertex_count * width
    need = [-1] * nstates
    queue = []
    for i in range(width):
        need[v * width + i] = 0
        queue.append(v * width + i)
    head = 0
    while head < len(queue):
        s = queue[head]
        head += 1
        d = need[s] + 1
        for p in pred[s]:
            if need[p] < 0:
                need[p] = d
                queue.append(p)
    return need


def oracle_count_shortest(
    g: ColoredGraph, u: int, v: int, budget: int = DEFAULT_PATH_BUDGET
) -> int:
    """Exact number of vertex-simple properly colored paths of minimum length.

    Depth-bounded DFS with exact remaining-distance pruning; raises
    :class:`BudgetExceededError` as soon as more than ``budget`` paths have
    been counted, and ``ValueError`` on unreachable pairs.
    """
    g._check_vertex(u)
    g._check_vertex(v)
    target = oracle_proper_distance(g, u, v)
    if target is None:
        raise ValueError(f"no properly colored walk from {u} to {v}")
    if target == 0:
        return 1
    sm = g._state_machine()
    width, fwd_pairs = sm.width, sm.fwd_pairs
    need = _state_distances_to(g, v)
    visited = bytearray(g.vertex_count)
    visited[u] = 1
    count = 0

    def walk(state: int, remaining: int) -> None:
        nonlocal count
        if remaining == 0:
            # pruning guarantees we are at v here
            count += 1
            if count > budget:
                raise BudgetExceededError(
                    f"more than {budget} shortest proper paths from {u} to {v}"
                )
            return
        nxt = remaining - 1
        for x, s2 in fwd_pairs[state]:
            if visited[x]:
                continue
            nd = need[s2]
            if nd < 0 or nd > nxt:
                continue
            visited[x] = 1
            walk(s2, nxt)
            visited[x] = 0

    walk(u * width, target)
    return count


def shortest_walk_counts_from(g: ColoredGraph, u: int) -> list[int | None]:
    """For every vertex v, the number of properly colored walks u -> v whose
    length equals the proper distance; None where unreachable.

    Dynamic programming over (vertex, last-color, steps); exact integers.
    """
    dists = proper_distances_from(g, u)
    sm = g._state_machine()
    width, fwd = sm.width, sm.fwd
    nstates = g.vertex_count * width
    counts: list[int | None] = [None] * g.vertex_count
    counts[u] = 1
    finite = [d for d in dists if d is not None]
    max_d = max(finite) if finite else 0
    ways = [0] * nstates
    ways[u * width] = 1
    for step in range(1, max_d + 1):
        nxt = [0] * nstates
        for s, w in enumerate(ways):
            if w:
                for tgt in fwd[s]:
                    nxt[tgt] += w
        ways = nxt
        for v in range(g.vertex_count):
            if dists[v] == step:
                base = v * width
                counts[v] = sum(ways[base + i] for i in range(width))
    return counts


def oracle_count_shortest_walks(g: ColoredGraph, u: int, v: int) -> int:
    """Number of properly colored walks u -> v of exactly the proper distance."""
    g._check_vertex(v)
    counts = shortest_walk_counts_from(g, u)
    if counts[v] is None:
        raise ValueError(f"no properly colored walk from {u} to {v}")
    return counts[v]


def dump_edge_list(g: ColoredGraph) -> str:
    """Plain text form: "n_vertices n_edges n_colors" then one "u v color" per line.

    Edges are emitted sorted with u < v, so the dump is canonical and
    round-trips bit-exactly through :func:`load_edge_list`.
    """
    colors = {color for _, _, color in g.edges}
    n_colors = max(colors) if colors else 0
    lines = [f"{g.vertex_count} {len(g.edges)} {n_colors}"]
    for a, b, color in sorted(g.edges):
        lines.append(f"{a} {b} {color}")
    return "\n".join(lines) + "\n"


def load_edge_list(text: str) -> ColoredGraph:
    """Inverse of :func:`dump_edge_list`; validates the header against the body."""
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ValueError("empty graph dump")
    try:
        n_vertices, n_edges, n_colors = map(int, lines[0].split())
    except ValueError:
        raise ValueError(f"bad header line {lines[0]!r}: expected 3 integers")
    if len(lines) - 1 != n_edges:
        raise ValueError(f"header claims {n_edges} edges, found {len(lines) - 1}")
    g = ColoredGraph(n_vertices)
    for ln in lines[1:]:
        try:
            a, b, color = map(int, ln.split())
        except ValueError:
            raise ValueError(f"bad edge line {ln!r}: expected 3 integers")
        if color > n_colors:
            raise ValueError(f"edge color {color} exceeds header n_colors={n_colors}")
        g.add_edge(a, b, color)
    return g
