"""Complete search for semi-transitive orientations.

The engine is a depth-first search over edge directions with three pruning
devices, each individually sound:

* cycle propagation — on a cycle of length m >= 4 whose vertex set is not a
  clique, m-1 edges oriented one way around force a contradiction, and m-2
  force the remaining edges the opposite way (the catalog rule);
* triangle closure — two arcs forming a path across a triangle force the
  transitive third arc, since the alternative is a directed 3-cycle;
* a directed-cycle check over the assigned arcs after every decision.

The catalog rule is sound but not complete, so every full assignment is
verified with the real detector before being reported.  Root symmetry
breaking explores the first decision edge in one direction only: reversing
all arcs preserves acyclicity and maps shortcuts to shortcuts, so the two
halves of the search tree are verdict-equivalent.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Iterator, Union

from .errors import BadParameters, ImproperColoring, NotAcyclic, TooLarge
from .graphs import Coloring, Graph, is_proper, normalize_edge
from .orientation import (
    Orientation,
    PartialOrientation,
    SemiTransitive,
    check_semi_transitive,
    find_shortcut,
    find_shortcut_oracle,
    is_acyclic,
    peel,
    topological_order,
)


@dataclass(frozen=True)
class CycleCatalog:
    """Cycles of length 4..L whose vertex sets do not induce cliques."""

    cycles: tuple[tuple[int, ...], ...]

    def __len__(self) -> int:
        return len(self.cycles)


def short_cycles(g: Graph, max_len: int) -> CycleCatalog:
    """Enumerate cycles of length 4..max_len up to rotation and reflection.

    Canonical form: the smallest vertex first, and the smaller of its two
    cycle-neighbors second.
    """
    if max_len < 4:
        raise BadParameters(f"catalog length must be >= 4, got {max_len}")
    found: list[tuple[int, ...]] = []

    def is_clique(vs: tuple[int, ...]) -> bool:
        return all(
            g.adjacent(vs[i], vs[j])
            for i in range(len(vs))
            for j in range(i + 1, len(vs))
        )

    path: list[int] = []

    def extend(root: int) -> None:
        last = path[-1]
        can_close = len(path) >= 4 and len(path) <= max_len
        for w in g.neighbors(last):
            if w == root and can_close and path[1] < path[-1]:
                vs = tuple(path)
                if not is_clique(vs):
                    found.append(vs)
            elif w > root and w not in path and len(path) < max_len:
                path.append(w)
                extend(root)
                path.pop()

    for root in range(g.n):
        path = [root]
        extend(root)
    return CycleCatalog(tuple(found))


@dataclass(frozen=True)
class Contradiction:
    reason: str
    cycle: tuple[int, ...] | None = None


def lemma2_propagate(
    g: Graph, p: PartialOrientation, catalog: CycleCatalog
) -> tuple[Union[PartialOrientation, Contradiction], list[tuple[int, int]]]:
    """Run the cycle rule to fixpoint over a copy of ``p``.

    Per cycle and traversal direction with f edges assigned along it:
    f >= m-1 is a contradiction; f = m-2 forces every unassigned edge of the
    cycle the opposite way.  Derived arcs are reported in derivation order.
    """
    q = p.copy()
    derived: list[tuple[int, int]] = []
    changed = True
    while changed:
        changed = False
        for cyc in catalog.cycles:
            mlen = len(cyc)
            along = against = 0
            free: list[tuple[int, int]] = []
            for t in range(mlen):
                u, v = cyc[t], cyc[(t + 1) % mlen]
                d = q.direction_of(u, v)
                if d is None:
                    free.append((u, v))
                elif d == (u, v):
                    along += 1
                else:
                    against += 1
            if along >= mlen - 1 or against >= mlen - 1:
                return Contradiction("cycle rule", cyc), derived
            if along == mlen - 2 and free:
                for u, v in free:
                    q.assign(v, u)
                    derived.append((v, u))
                changed = True
            elif against == mlen - 2 and free:
                for u, v in free:
                    q.assign(u, v)
                    derived.append((u, v))
                changed = True
    return q, derived


@dataclass
class SolveStats:
    nodes: int = 0
    propagations: int = 0
    leaf_checks: int = 0
    wall_ms: float = 0.0


@dataclass(frozen=True)
class SolverConfig:
    catalog_max_len: int = 5
    use_peel: bool = False
    node_limit: int | None = None
    branch_heuristic: str = "dynamic_most_constrained"
    symmetry_break: bool = True

    def __post_init__(self) -> None:
        if self.catalog_max_len < 4:
            raise BadParameters("catalog_max_len must be >= 4")
        if self.branch_heuristic not in ("static_degree", "dynamic_most_constrained"):
            raise BadParameters(f"unknown heuristic {self.branch_heuristic!r}")


@dataclass(frozen=True)
class Sat:
    orientation: Orientation
    stats: SolveStats
    verdict = "sat"


@dataclass(frozen=True)
class Unsat:
    stats: SolveStats
    verdict = "unsat"


@dataclass(frozen=True)
class Unknown:
    stats: SolveStats
    reason: str = "node_limit"
    verdict = "unknown"


SolveResult = Union[Sat, Unsat, Unknown]


class _NodeLimit(Exception):
    pass


class _Engine:
    def __init__(self, g: Graph, cfg: SolverConfig):
        self.g = g
        self.cfg = cfg
        self.stats = SolveStats()
        edges = g.edges
        self.edges = edges
        m = len(edges)
        self.m = m
        eidx = {e: i for i, e in enumerate(edges)}

        catalog = short_cycles(g, cfg.catalog_max_len)
        self.cyc_len: list[int] = []
        self.cyc_edges: list[tuple[int, ...]] = []
        self.cyc_signs: list[tuple[int, ...]] = []
        occ: list[list[tuple[int, int]]] = [[] for _ in range(m)]
        for ci, cyc in enumerate(catalog.cycles):
            mlen = len(cyc)
            es, ss = [], []
            for t in range(mlen):
                u, v = cyc[t], cyc[(t + 1) % mlen]
                e = eidx[normalize_edge(u, v)]
                s = 1 if (u, v) == edges[e] else 2  # dirs value meaning "along"
                es.append(e)
                ss.append(s)
                occ[e].append((ci, s))
            self.cyc_len.append(mlen)
            self.cyc_edges.append(tuple(es))
            self.cyc_signs.append(tuple(ss))
        self.occ = [tuple(x) for x in occ]
        self.cnt = [[0, 0] for _ in self.cyc_len]

        tris: list[tuple[int, int, int]] = []
        tri_occ: list[list[int]] = [[] for _ in range(m)]
        for a, b in edges:
            for c in g.neighbors(b):
                if c > b and g.adjacent(a, c):
                    ti = len(tris)
                    tris.append((eidx[(a, b)], eidx[(b, c)], eidx[(a, c)]))
                    for e in tris[-1]:
                        tri_occ[e].append(ti)
        self.tris = tris
        self.tri_occ = [tuple(x) for x in tri_occ]

        self.dirs = bytearray(m)
        self.trail: list[int] = []
        self._queue: list[int] = []

        if cfg.branch_heuristic == "static_degree":
            self.static_order = sorted(
                range(m),
                key=lambda i: (-(g.degree(edges[i][0]) + g.degree(edges[i][1])), edges[i]),
            )

    # -- assignment machinery -------------------------------------------

    def _assign(self, e: int, val: int) -> bool:
        cur = self.dirs[e]
        if cur:
            return cur == val
        self.dirs[e] = val
        self.trail.append(e)
        for ci, s in self.occ[e]:
            self.cnt[ci][0 if val == s else 1] += 1
        self._queue.append(e)
        return True

    def _undo(self, mark: int) -> None:
        while len(self.trail) > mark:
            e = self.trail.pop()
            val = self.dirs[e]
            self.dirs[e] = 0
            for ci, s in self.occ[e]:
                self.cnt[ci][0 if val == s else 1] -= 1

    def _propagate(self) -> bool:
        q = self._queue
        dirs = self.dirs
        qi = 0
        while qi < len(q):
            e = q[qi]
            qi += 1
            for ti in self.tri_occ[e]:
                i1, i2, i3 = self.tris[ti]
                d1, d2, d3 = dirs[i1], dirs[i2], dirs[i3]
                # directed-3-cycle patterns on (ab, bc, ac): (1,1,2), (2,2,1)
                if d1 and d2 and d3:
                    if d1 == d2 and d3 == 3 - d1:
                        return False
                elif d1 and d2:
                    if d1 == d2 and not self._force(i3, d1):
                        return False
                elif d1 and d3:
                    if d1 != d3 and not self._force(i2, d3):
                        return False
                elif d2 and d3:
                    if d2 != d3 and not self._force(i1, 3 - d2):
                        return False
            for ci, s in self.occ[e]:
                a, b = self.cnt[ci]
                mlen = self.cyc_len[ci]
                if a >= mlen - 1 or b >= mlen - 1:
                    return False
                if a == mlen - 2 or b == mlen - 2:
                    forced_along = b == mlen - 2
                    for k, sk in zip(self.cyc_edges[ci], self.cyc_signs[ci]):
                        if not dirs[k]:
                            if not self._force(k, sk if forced_along else 3 - sk):
                                return False
        return True

    def _force(self, e: int, val: int) -> bool:
        if self.dirs[e]:
            return self.dirs[e] == val
        self.stats.propagations += 1
        return self._assign(e, val)

    def _has_directed_cycle(self) -> bool:
        n = self.g.n
        out = [0] * n
        indeg = [0] * n
        for i, (u, v) in enumerate(self.edges):
            d = self.dirs[i]
            if d == 1:
                out[u] |= 1 << v
                indeg[v] += 1
            elif d == 2:
                out[v] |= 1 << u
                indeg[u] += 1
        ready = [v for v in range(n) if indeg[v] == 0]
        done = 0
        while ready:
            x = ready.pop()
            done += 1
            mask = out[x]
            while mask:
                low = mask & -mask
                w = low.bit_length() - 1
                mask ^= low
                indeg[w] -= 1
                if indeg[w] == 0:
                    ready.append(w)
        return done != n

    # -- branching --------------------------------------------------------

    def _pick_edge(self) -> int | None:
        dirs = self.dirs
        if self.cfg.branch_heuristic == "static_degree":
            for e in self.static_order:
                if not dirs[e]:
                    return e
            return None
        best, best_score = None, -1
        for e in range(self.m):
            if dirs[e]:
                continue
            score = 0
            for ci, _ in self.occ[e]:
                mlen = self.cyc_len[ci]
                a, b = self.cnt[ci]
                if a in (mlen - 3, mlen - 2) or b in (mlen - 3, mlen - 2):
                    score += 1
            if score > best_score:
                best, best_score = e, score
        return best

    def _leaf(self) -> Orientation | None:
        self.stats.leaf_checks += 1
        o = Orientation(
            self.g,
            [
                (u, v) if self.dirs[i] == 1 else (v, u)
                for i, (u, v) in enumerate(self.edges)
            ],
        )
        ok, _ = is_acyclic(o)
        if not ok:
            return None
        target = peel(o)[0] if self.cfg.use_peel else o
        return o if find_shortcut(target) is None else None

    def search(self) -> Orientation | None:
        return self._search(0)

    def _search(self, depth: int) -> Orientation | None:
        e = self._pick_edge()
        if e is None:
            return self._leaf()
        self.stats.nodes += 1
        limit = self.cfg.node_limit
        if limit is not None and self.stats.nodes > limit:
            raise _NodeLimit()
        branches = (1,) if depth == 0 and self.cfg.symmetry_break else (1, 2)
        for val in branches:
            mark = len(self.trail)
            self._queue = []
            self._assign(e, val)
            if self._propagate() and not self._has_directed_cycle():
                found = self._search(depth + 1)
                if found is not None:
                    return found
            self._undo(mark)
        return None


def solve(g: Graph, cfg: SolverConfig | None = None) -> SolveResult:
    cfg = cfg or SolverConfig()
    engine = _Engine(g, cfg)
    t0 = time.perf_counter()
    try:
        found = engine.search()
    except _NodeLimit:
        engine.stats.wall_ms = (time.perf_counter() - t0) * 1000.0
        return Unknown(engine.stats, "node_limit")
    engine.stats.wall_ms = (time.perf_counter() - t0) * 1000.0
    if found is None:
        return Unsat(engine.stats)
    if not isinstance(check_semi_transitive(found), SemiTransitive):
        raise AssertionError("solver produced an unverified orientation")
    return Sat(found, engine.stats)


def stats_doc(result: SolveResult, cfg: SolverConfig) -> dict:
    doc = {
        "verdict": result.verdict,
        "nodes": result.stats.nodes,
        "propagations": result.stats.propagations,
        "leaf_checks": result.stats.leaf_checks,
        "wall_ms": round(result.stats.wall_ms, 3),
        "config": {
            "catalog_max_len": cfg.catalog_max_len,
            "use_peel": cfg.use_peel,
            "node_limit": cfg.node_limit,
            "branch_heuristic": cfg.branch_heuristic,
            "symmetry_break": cfg.symmetry_break,
        },
    }
    if isinstance(result, Unknown):
        doc["reason"] = result.reason
    return doc


def orient_by_coloring(g: Graph, coloring: Coloring) -> Orientation:
    """Direct every edge from the lower color to the higher one."""
    if not is_proper(g, coloring):
        raise ImproperColoring("coloring is not proper on this graph")
    col = coloring.colors
    return Orientation(
        g, [(u, v) if col[u] < col[v] else (v, u) for u, v in g.edges]
    )


_ENUM_EDGE_CAP = 22


def enumerate_acyclic_orientations(g: Graph) -> Iterator[Orientation]:
    """All acyclic orientations, in ascending bitmask order (bit i set =
    edge i reversed against its sorted form)."""
    m = len(g.edges)
    if m > _ENUM_EDGE_CAP:
        raise TooLarge(f"{m} edges is above the enumeration cap {_ENUM_EDGE_CAP}")
    n = g.n
    edges = g.edges
    for mask in range(1 << m):
        out = [0] * n
        indeg = [0] * n
        for i in range(m):
            u, v = edges[i]
            if mask >> i & 1:
                u, v = v, u
            out[u] |= 1 << v
            indeg[v] += 1
        ready = [v for v in range(n) if indeg[v] == 0]
        done = 0
        while ready:
            x = ready.pop()
            done += 1
            mm = out[x]
            while mm:
                low = mm & -mm
                w = low.bit_length() - 1
                mm ^= low
                indeg[w] -= 1
                if indeg[w] == 0:
                    ready.append(w)
        if done == n:
            yield Orientation(
                g,
                [
                    (v, u) if mask >> i & 1 else (u, v)
                    for i, (u, v) in enumerate(edges)
                ],
            )


def count_st_orientations(g: Graph) -> int:
    """Brute-force count of semi-transitive orientations, via the oracle."""
    return sum(
        1
        for o in enumerate_acyclic_orientations(g)
        if find_shortcut_oracle(o) is None
    )


def longest_directed_path(o: Orientation) -> int:
    """Number of arcs on a longest directed path."""
    order = topological_order(o)
    dist = [0] * o.graph.n
    for u in reversed(order):
        best = 0
        for w in o.out_neighbors(u):
            if dist[w] + 1 > best:
                best = dist[w] + 1
        dist[u] = best
    return max(dist, default=0)
