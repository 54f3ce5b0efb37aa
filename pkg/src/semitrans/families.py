"""Deterministic graph-family generators.

Figure-derived instances (the Grötzsch, Chvátal, hub-and-spokes Kneser
subgraph) are shipped as hard-coded edge lists with their label maps
documented, so they cannot drift.  Everything else is constructed.

Label maps for the hard-coded instances:

* ``grotzsch``: outer cycle ``1..5`` -> ``0..4``, inner ``1'..5'`` -> ``5..9``,
  hub ``0`` -> ``10``.
* ``chvatal``: ``i`` -> ``i - 1``.
* ``kneser83_sub16``: ``i`` -> ``i - 1``.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterable

from .errors import BadParameters, JumpOutOfRange, OffsetOutOfRange
from .graphs import Graph


def cycle(n: int) -> Graph:
    if n < 3:
        raise BadParameters(f"cycle needs at least 3 vertices, got {n}")
    return Graph(n, ((i, (i + 1) % n) for i in range(n)))


def complete(n: int) -> Graph:
    return Graph(n, combinations(range(n), 2))


def complete_bipartite(a: int, b: int) -> Graph:
    if a < 0 or b < 0:
        raise BadParameters("part sizes must be non-negative")
    return Graph(a + b, ((i, a + j) for i in range(a) for j in range(b)))


def circulant(n: int, jumps: Iterable[int]) -> Graph:
    """Vertices ``0..n-1``, edge {i, j} iff (i - j) mod n is a listed jump."""
    if n < 3:
        raise BadParameters(f"circulant needs at least 3 vertices, got {n}")
    js = sorted(set(jumps))
    for a in js:
        if not 1 <= a <= n // 2:
            raise JumpOutOfRange(f"jump {a} outside [1, {n // 2}] for n={n}")
    return Graph(n, ((i, (i + a) % n) for i in range(n) for a in js))


def toeplitz(n: int, offsets: Iterable[int]) -> Graph:
    """Vertices ``0..n-1``, edge {i, j} iff |i - j| is a listed offset."""
    if n < 1:
        raise BadParameters(f"toeplitz needs at least 1 vertex, got {n}")
    offs = sorted(set(offsets))
    for t in offs:
        if not 1 <= t <= n - 1:
            raise OffsetOutOfRange(f"offset {t} outside [1, {n - 1}] for n={n}")
    return Graph(n, ((i, i + t) for t in offs for i in range(n - t)))


def mycielski(g: Graph) -> Graph:
    """Mycielski construction on 2n+1 vertices.

    Originals keep their edges, shadow ``n+i`` is adjacent to the original
    neighbors of ``i``, and the hub ``2n`` is adjacent to every shadow.
    """
    n = g.n
    edges: list[tuple[int, int]] = list(g.edges)
    for u, v in g.edges:
        edges.append((n + u, v))
        edges.append((u, n + v))
    edges.extend((n + i, 2 * n) for i in range(n))
    return Graph(2 * n + 1, edges)


_GROTZSCH_EDGES = (
    # outer 5-cycle
    (0, 1), (1, 2), (2, 3), (3, 4), (0, 4),
    # inner vertex i' sits on the two cycle-neighbors of i
    (1, 5), (4, 5),
    (0, 6), (2, 6),
    (1, 7), (3, 7),
    (2, 8), (4, 8),
    (3, 9), (0, 9),
    # hub
    (5, 10), (6, 10), (7, 10), (8, 10), (9, 10),
)


def grotzsch() -> Graph:
    return Graph(11, _GROTZSCH_EDGES)


_CHVATAL_EDGES_1BASED = (
    (1, 2), (1, 4), (1, 7), (1, 12),
    (2, 3), (2, 6), (2, 9),
    (3, 4), (3, 8), (3, 11),
    (4, 5), (4, 10),
    (5, 6), (5, 9), (5, 12),
    (6, 7), (6, 10),
    (7, 8), (7, 11),
    (8, 9), (8, 12),
    (9, 10),
    (10, 11),
    (11, 12),
)


def chvatal() -> Graph:
    return Graph(12, ((u - 1, v - 1) for u, v in _CHVATAL_EDGES_1BASED))


def kneser(n: int, k: int) -> Graph:
    """Kneser graph: k-subsets of {1..n} in colexicographic order, disjoint = adjacent."""
    if not n >= 2 * k >= 2:
        raise BadParameters(f"kneser needs n >= 2k >= 2, got n={n}, k={k}")
    subsets = sorted(
        (frozenset(s) for s in combinations(range(1, n + 1), k)),
        key=lambda s: tuple(sorted(s, reverse=True)),
    )
    edges = (
        (i, j)
        for i, j in combinations(range(len(subsets)), 2)
        if not subsets[i] & subsets[j]
    )
    return Graph(len(subsets), edges)


_K83_SUB16_EDGES_1BASED = (
    (1, 2), (1, 3), (1, 4), (1, 5), (1, 6),
    (2, 7), (2, 8), (2, 9), (2, 10),
    (3, 11), (3, 12), (3, 16),
    (7, 12), (7, 11), (7, 14),
    (4, 8), (4, 9), (4, 10), (4, 13),
    (5, 8), (5, 9), (5, 10), (5, 16),
    (6, 8), (6, 9), (6, 10), (6, 12),
    (8, 15),
    (9, 14),
    (10, 11),
    (13, 15), (13, 16), (13, 11),
    (14, 15), (14, 16),
    (12, 15),
)


def kneser83_sub16() -> Graph:
    return Graph(16, ((u - 1, v - 1) for u, v in _K83_SUB16_EDGES_1BASED))


def toft(n: int) -> Graph:
    """Four layers of n vertices: A1 = 0..n-1 and A4 = 3n..4n-1 induce n-cycles,
    A2 = n..2n-1 and A3 = 2n..3n-1 induce K_{n,n}, with matchings A1-A2 and A3-A4.
    """
    if n <= 3 or n % 2 == 0:
        raise BadParameters(f"toft needs odd n > 3, got {n}")
    edges: list[tuple[int, int]] = []
    for i in range(n):
        edges.append((i, (i + 1) % n))                    # A1 cycle
        edges.append((3 * n + i, 3 * n + (i + 1) % n))    # A4 cycle
        edges.append((i, n + i))                          # A1-A2 matching
        edges.append((2 * n + i, 3 * n + i))              # A3-A4 matching
        for j in range(n):
            edges.append((n + i, 2 * n + j))              # K_{n,n}
    return Graph(4 * n, edges)


def parse_family_spec(text: str) -> Graph:
    """Resolve the colon-separated family syntax to a graph.

    Examples: ``cycle:7``, ``complete:4``, ``complete_bipartite:3:3``,
    ``circulant:13:1,5``, ``toeplitz:13:1,5,8,12``, ``mycielski:cycle:5``,
    ``grotzsch``, ``chvatal``, ``kneser:8:3``, ``kneser83sub16``, ``toft:5``.
    """
    parts = text.strip().split(":")
    name, args = parts[0].lower(), parts[1:]

    def want(count: int) -> list[int]:
        if len(args) != count:
            raise BadParameters(
                f"family {name!r} takes {count} argument(s), got {len(args)}"
            )
        try:
            return [int(a) for a in args]
        except ValueError:
            raise BadParameters(f"bad integer argument in {text!r}")

    def want_int_and_list() -> tuple[int, list[int]]:
        if len(args) != 2:
            raise BadParameters(f"family {name!r} takes n and a comma list")
        try:
            return int(args[0]), [int(a) for a in args[1].split(",") if a]
        except ValueError:
            raise BadParameters(f"bad integer argument in {text!r}")

    if name == "cycle":
        return cycle(*want(1))
    if name == "complete":
        return complete(*want(1))
    if name == "complete_bipartite":
        return complete_bipartite(*want(2))
    if name == "circulant":
        n, jumps = want_int_and_list()
        return circulant(n, jumps)
    if name == "toeplitz":
        n, offs = want_int_and_list()
        return toeplitz(n, offs)
    if name == "mycielski":
        if not args:
            raise BadParameters("mycielski needs an inner family spec")
        return mycielski(parse_family_spec(":".join(args)))
    if name == "grotzsch":
        want(0)
        return grotzsch()
    if name == "chvatal":
        want(0)
        return chvatal()
    if name == "kneser":
        n, k = want(2)
        return kneser(n, k)
    if name == "kneser83sub16":
        want(0)
        return kneser83_sub16()
    if name == "toft":
        return toft(*want(1))
    raise BadParameters(f"unknown family {name!r}")
