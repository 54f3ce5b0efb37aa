"""Undirected simple graphs and the structural queries the toolkit relies on.

Vertices are the integers ``0..n-1``.  Edges are stored as ``(min, max)``
pairs and adjacency is kept as one bitmask int per vertex, which keeps the
hot loops (common-neighbor tests, reachability, coloring) allocation-free.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import (
    BadParameters,
    BoundExceeded,
    FormatError,
    ImproperColoring,
    MissingEdge,
)

Edge = tuple[int, int]


def normalize_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


class Graph:
    """Immutable undirected simple graph on vertices ``0..n-1``."""

    __slots__ = ("n", "edges", "_adj", "_nbrs")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]]):
        if n < 0:
            raise BadParameters(f"vertex count must be non-negative, got {n}")
        adj = [0] * n
        seen: set[Edge] = set()
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise BadParameters(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise BadParameters(f"self-loop at vertex {u}")
            seen.add(normalize_edge(u, v))
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        self.n = n
        self.edges: tuple[Edge, ...] = tuple(sorted(seen))
        self._adj = tuple(adj)
        self._nbrs: tuple[tuple[int, ...], ...] | None = None

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def adjacent(self, u: int, v: int) -> bool:
        return bool(self._adj[u] >> v & 1)

    def adjacency_mask(self, u: int) -> int:
        return self._adj[u]

    def neighbors(self, u: int) -> tuple[int, ...]:
        if self._nbrs is None:
            self._nbrs = tuple(tuple(_bits(m)) for m in self._adj)
        return self._nbrs[u]

    def degree(self, u: int) -> int:
        return self._adj[u].bit_count()

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={len(self.edges)})"


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def delete_edge(g: Graph, u: int, v: int) -> Graph:
    """Return a copy of ``g`` without the edge ``{u, v}``."""
    e = normalize_edge(u, v)
    if e not in set(g.edges):
        raise MissingEdge(f"graph has no edge {{{u}, {v}}}")
    return Graph(g.n, (f for f in g.edges if f != e))


def is_connected(g: Graph) -> bool:
    if g.n <= 1:
        return True
    seen = 1
    queue = deque([0])
    while queue:
        u = queue.popleft()
        fresh = g.adjacency_mask(u) & ~seen
        seen |= fresh
        queue.extend(_bits(fresh))
    return seen == (1 << g.n) - 1


def girth(g: Graph) -> int | float:
    """Length of a shortest cycle, or ``math.inf`` for a forest.

    One breadth-first search per root; the first non-tree edge seen from a
    root closes a cycle of length ``dist[u] + dist[w] + 1``, and the minimum
    of those estimates over all roots is exact.
    """
    best: int | float = math.inf
    for root in range(g.n):
        dist = [-1] * g.n
        parent = [-1] * g.n
        dist[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            if 2 * dist[u] >= best:
                continue
            for w in g.neighbors(u):
                if dist[w] < 0:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif w != parent[u]:
                    cand = dist[u] + dist[w] + 1
                    if cand < best:
                        best = cand
        if best == 3:
            break
    return best


def is_triangle_free(g: Graph) -> bool:
    return all(not (g.adjacency_mask(u) & g.adjacency_mask(v)) for u, v in g.edges)


def degree_profile(g: Graph) -> tuple[int, int, bool]:
    """``(min degree, max degree, regular?)``; ``(0, 0, True)`` when empty."""
    if g.n == 0:
        return (0, 0, True)
    degs = [g.degree(v) for v in range(g.n)]
    lo, hi = min(degs), max(degs)
    return (lo, hi, lo == hi)


@dataclass(frozen=True)
class Coloring:
    """A vertex coloring with colors ``0..num_colors-1``."""

    colors: tuple[int, ...]
    num_colors: int = -1  # -1: infer from the palette actually used

    def __post_init__(self) -> None:
        object.__setattr__(self, "colors", tuple(self.colors))
        if self.num_colors < 0:
            inferred = max(self.colors) + 1 if self.colors else 0
            object.__setattr__(self, "num_colors", inferred)

    def color_of(self, v: int) -> int:
        return self.colors[v]


def is_proper(g: Graph, coloring: Coloring) -> bool:
    if len(coloring.colors) != g.n:
        return False
    if any(not (0 <= c < max(coloring.num_colors, 1)) for c in coloring.colors):
        return False
    return all(coloring.colors[u] != coloring.colors[v] for u, v in g.edges)


def require_proper(g: Graph, coloring: Coloring) -> None:
    if not is_proper(g, coloring):
        raise ImproperColoring("coloring is not a proper coloring of the graph")


def proper_coloring(g: Graph, k: int) -> Coloring | None:
    """Deterministic backtracking search for a proper ``k``-coloring.

    Vertices are colored in saturation-degree order (most distinctly colored
    neighbors first, ties by degree then index) and a fresh color index is
    only opened once, which prunes color permutations.
    """
    if k < 0:
        raise BadParameters("number of colors must be non-negative")
    n = g.n
    if n == 0:
        return Coloring((), k)
    if k == 0:
        return None
    colors = [-1] * n
    neighbor_colors = [0] * n  # bitmask of colors used by colored neighbors

    def pick() -> int:
        best_v = -1
        best_key = (-1, -1, 0)
        for v in range(n):
            if colors[v] >= 0:
                continue
            key = (neighbor_colors[v].bit_count(), g.degree(v), -v)
            if key > best_key:
                best_key = key
                best_v = v
        return best_v

    def extend(colored: int, used: int) -> bool:
        if colored == n:
            return True
        v = pick()
        limit = min(used + 1, k)
        for c in range(limit):
            if neighbor_colors[v] >> c & 1:
                continue
            colors[v] = c
            touched = []
            for w in g.neighbors(v):
                if colors[w] < 0 and not (neighbor_colors[w] >> c & 1):
                    neighbor_colors[w] |= 1 << c
                    touched.append(w)
            if extend(colored + 1, max(used, c + 1)):
                return True
            colors[v] = -1
            for w in touched:
                neighbor_colors[w] &= ~(1 << c)
        return False

    if extend(0, 0):
        return Coloring(tuple(colors), k)
    return None


def _dsatur_upper_bound(g: Graph) -> int:
    n = g.n
    colors = [-1] * n
    neighbor_colors = [0] * n
    used = 0
    for _ in range(n):
        v = max(
            (v for v in range(n) if colors[v] < 0),
            key=lambda v: (neighbor_colors[v].bit_count(), g.degree(v), -v),
        )
        c = 0
        while neighbor_colors[v] >> c & 1:
            c += 1
        colors[v] = c
        used = max(used, c + 1)
        for w in g.neighbors(v):
            neighbor_colors[w] |= 1 << c
    return used


def _greedy_clique_lower_bound(g: Graph) -> int:
    best = 1 if g.n else 0
    order = sorted(range(g.n), key=lambda v: (-g.degree(v), v))
    for seed in order:
        mask = 1 << seed
        common = g.adjacency_mask(seed)
        size = 1
        for w in order:
            if common >> w & 1:
                mask |= 1 << w
                common &= g.adjacency_mask(w)
                size += 1
        best = max(best, size)
    return best


def chromatic_number(g: Graph, *, max_vertices: int = 32) -> int:
    """Exact chromatic number for graphs up to ``max_vertices`` vertices."""
    if g.n > max_vertices:
        raise BoundExceeded(
            f"graph has {g.n} vertices, above the cap of {max_vertices}"
        )
    if g.n == 0:
        return 0
    if not g.edges:
        return 1
    lower = max(_greedy_clique_lower_bound(g), 2)
    upper = _dsatur_upper_bound(g)
    for k in range(lower, upper):
        if proper_coloring(g, k) is not None:
            return k
    return upper


def read_edge_list(text: str) -> Graph:
    """Parse the edge-list text format.

    ``#`` starts a comment, the first non-comment line is the vertex count,
    and every following line is one ``u v`` edge.  Duplicate edges are an
    error so that a round-trip through the format is loss-free.
    """
    n: int | None = None
    edges: list[Edge] = []
    seen: set[Edge] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if n is None:
            if len(fields) != 1:
                raise FormatError(f"line {lineno}: expected a single vertex count")
            try:
                n = int(fields[0])
            except ValueError:
                raise FormatError(f"line {lineno}: bad vertex count {fields[0]!r}")
            continue
        if len(fields) != 2:
            raise FormatError(f"line {lineno}: expected 'u v'")
        try:
            u, v = int(fields[0]), int(fields[1])
        except ValueError:
            raise FormatError(f"line {lineno}: bad vertex in {line!r}")
        if not (0 <= u < n and 0 <= v < n):
            raise FormatError(f"line {lineno}: vertex out of range in {line!r}")
        if u == v:
            raise FormatError(f"line {lineno}: self-loop at {u}")
        e = normalize_edge(u, v)
        if e in seen:
            raise FormatError(f"line {lineno}: duplicate edge {e}")
        seen.add(e)
        edges.append(e)
    if n is None:
        raise FormatError("missing vertex-count header line")
    return Graph(n, edges)


def write_edge_list(g: Graph) -> str:
    lines = [str(g.n)]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"
