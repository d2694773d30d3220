"""Backtracking search for bad 2-colorings with constraint propagation.

State is a partial edge assignment plus two incremental structures:

* per-triangle red counters — two red edges force the third blue, three
  red edges are a conflict;
* a union-find over blue edges with size tracking and rollback — a blue
  assignment that would grow a component to k vertices is a conflict, and
  once a component reaches the k-1 cap every unassigned edge leaving it
  is forced red.

Branching is deterministic: unassigned edge lying in the most triangles
first, red tried before blue, so certificates are byte-reproducible.
Presolve assigns the forced-blue edges (>= 2k-3 triangles) up front.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

from .colorings import (
    BLUE,
    RED,
    BadColoringCertificate,
    TwoColoring,
    forced_blue_edges,
)
from .graphs import Graph, GraphError

UNASSIGNED = -1

FOUND = "found"
NONE = "none"
EXHAUSTED = "budget-exhausted"
OK = "ok"

_BUDGET_CHECK_MASK = 0x3FF  # wall-clock checked every 1024 nodes


class InconclusiveError(RuntimeError):
    """A verdict could not be computed within the search budget."""


@dataclass(frozen=True)
class SearchBudget:
    """Explicit node and wall-time caps; exceeding either is reported as a
    distinct outcome, never conflated with 'no solution exists'."""

    max_nodes: int = 50_000_000
    max_seconds: float = 900.0


DEFAULT_BUDGET = SearchBudget()


@dataclass
class SearchStats:
    nodes: int = 0
    backtracks: int = 0
    propagations: int = 0
    wall_time: float = 0.0


@dataclass
class FindResult:
    status: str  # found | none | budget-exhausted
    certificate: BadColoringCertificate | None
    stats: SearchStats

    @property
    def found(self) -> bool:
        return self.status == FOUND


@dataclass
class CountResult:
    status: str  # ok | budget-exhausted
    count: int
    stats: SearchStats


class _Budget(Exception):
    pass


class _CapReached(Exception):
    pass


class _Engine:
    def __init__(self, g: Graph, k: int, budget: SearchBudget):
        self.g = g
        self.k = k
        self.budget = budget
        self.m = g.m
        self.eu = [e[0] for e in g.edges]
        self.ev = [e[1] for e in g.edges]
        self.tri_edges = g.triangle_edge_triples()
        self.tris_of: list[list[int]] = [[] for _ in range(self.m)]
        for t, (a, b, c) in enumerate(self.tri_edges):
            self.tris_of[a].append(t)
            self.tris_of[b].append(t)
            self.tris_of[c].append(t)
        self.inc: list[list[int]] = [[] for _ in range(g.n)]
        for i, (u, v) in enumerate(g.edges):
            self.inc[u].append(i)
            self.inc[v].append(i)
        self.tri_red = [0] * len(self.tri_edges)
        self.color = [UNASSIGNED] * self.m
        self.parent = list(range(g.n))
        self.size = [1] * g.n
        self.members: list[list[int]] = [[v] for v in range(g.n)]
        self.color_trail: list[int] = []
        self.union_trail: list[tuple[int, int]] = []
        self.red_count = 0
        # static branch order: densest-in-triangles first, index breaks ties
        self.order = sorted(range(self.m), key=lambda e: (-len(self.tris_of[e]), e))
        self.stats = SearchStats()
        self._start = 0.0

    # -- incremental state -------------------------------------------------

    def _find(self, v: int) -> int:
        parent = self.parent
        while parent[v] != v:
            v = parent[v]
        return v

    def _assign(self, e0: int, c0: int) -> bool:
        """Assign and propagate; False on conflict (caller must roll back)."""
        stack = [(e0, c0)]
        color = self.color
        tri_red = self.tri_red
        tri_edges = self.tri_edges
        k = self.k
        while stack:
            e, c = stack.pop()
            cur = color[e]
            if cur != UNASSIGNED:
                if cur != c:
                    return False
                continue
            color[e] = c
            self.color_trail.append(e)
            if c == RED:
                self.red_count += 1
                conflict = False
                # increment every counter before bailing out: undo always
                # decrements all triangles of a popped red edge
                for t in self.tris_of[e]:
                    r = tri_red[t] + 1
                    tri_red[t] = r
                    if r == 3:
                        conflict = True
                    elif r == 2 and not conflict:
                        a, b, cc = tri_edges[t]
                        if color[a] != RED:
                            third = a
                        elif color[b] != RED:
                            third = b
                        else:
                            third = cc
                        if color[third] == UNASSIGNED:
                            stack.append((third, BLUE))
                            self.stats.propagations += 1
                if conflict:
                    return False
            else:
                u = self.eu[e]
                v = self.ev[e]
                ru = self._find(u)
                rv = self._find(v)
                if ru != rv:
                    su = self.size[ru]
                    sv = self.size[rv]
                    if su + sv >= k:
                        return False
                    if su < sv:
                        ru, rv = rv, ru
                    self.parent[rv] = ru
                    self.size[ru] = su + sv
                    self.members[ru].extend(self.members[rv])
                    self.union_trail.append((rv, ru))
                    if su + sv == k - 1:
                        # component is full: edges leaving it must be red
                        for x in self.members[ru]:
                            for f in self.inc[x]:
                                if color[f] == UNASSIGNED:
                                    y = self.ev[f] if self.eu[f] == x else self.eu[f]
                                    if self._find(y) != ru:
                                        stack.append((f, RED))
                                        self.stats.propagations += 1
        return True

    def _mark(self) -> tuple[int, int]:
        return (len(self.color_trail), len(self.union_trail))

    def _undo_to(self, mark: tuple[int, int]) -> None:
        ct, ut = mark
        union_trail = self.union_trail
        parent = self.parent
        size = self.size
        members = self.members
        while len(union_trail) > ut:
            small, big = union_trail.pop()
            parent[small] = small
            ssz = size[small]
            size[big] -= ssz
            del members[big][-ssz:]
        color_trail = self.color_trail
        color = self.color
        tri_red = self.tri_red
        while len(color_trail) > ct:
            e = color_trail.pop()
            if color[e] == RED:
                self.red_count -= 1
                for t in self.tris_of[e]:
                    tri_red[t] -= 1
            color[e] = UNASSIGNED

    # -- search drivers ------------------------------------------------------

    def _tick(self) -> None:
        self.stats.nodes += 1
        if self.stats.nodes > self.budget.max_nodes:
            raise _Budget()
        if self.stats.nodes & _BUDGET_CHECK_MASK == 0:
            if time.perf_counter() - self._start > self.budget.max_seconds:
                raise _Budget()

    def _next_unassigned(self, start: int) -> int:
        order = self.order
        color = self.color
        i = start
        while i < self.m and color[order[i]] != UNASSIGNED:
            i += 1
        return i

    def _branch_colors(self, e: int):
        u = self.eu[e]
        v = self.ev[e]
        ru = self._find(u)
        rv = self._find(v)
        if ru != rv and self.size[ru] + self.size[rv] >= self.k:
            return (RED,)
        return (RED, BLUE)

    def _presolve(self) -> bool:
        forced = forced_blue_edges(self.g, self.k)
        for ref in forced.edges:
            if not self._assign(ref.index, BLUE):
                return False
        return True

    def _certificate(self) -> BadColoringCertificate:
        sizes = sorted(
            (self.size[v] for v in range(self.g.n) if self.parent[v] == v),
            reverse=True,
        )
        return BadColoringCertificate(TwoColoring(self.color), tuple(sizes))

    def run_find(self) -> FindResult:
        self._start = time.perf_counter()
        status = NONE
        certificate = None
        try:
            if self._presolve():
                certificate = self._dfs_find(0)
                if certificate is not None:
                    status = FOUND
        except _Budget:
            status = EXHAUSTED
        self.stats.wall_time = time.perf_counter() - self._start
        return FindResult(status, certificate, self.stats)

    def _dfs_find(self, start: int) -> BadColoringCertificate | None:
        i = self._next_unassigned(start)
        if i == self.m:
            return self._certificate()
        e = self.order[i]
        self._tick()
        for c in self._branch_colors(e):
            mark = self._mark()
            if self._assign(e, c):
                found = self._dfs_find(i + 1)
                if found is not None:
                    return found
            self.stats.backtracks += 1
            self._undo_to(mark)
        return None

    def run_count(self, cap: int) -> CountResult:
        self._start = time.perf_counter()
        self._count = 0
        self._cap = cap
        status = OK
        try:
            if self._presolve():
                self._dfs_count(0)
        except _CapReached:
            pass
        except _Budget:
            status = EXHAUSTED
        self.stats.wall_time = time.perf_counter() - self._start
        return CountResult(status, self._count, self.stats)

    def _dfs_count(self, start: int) -> None:
        i = self._next_unassigned(start)
        if i == self.m:
            self._count += 1
            if self._count >= self._cap:
                raise _CapReached()
            return
        e = self.order[i]
        self._tick()
        for c in self._branch_colors(e):
            mark = self._mark()
            if self._assign(e, c):
                self._dfs_count(i + 1)
            else:
                self.stats.backtracks += 1
            self._undo_to(mark)

    def run_max_red(self) -> FindResult:
        self._start = time.perf_counter()
        self._best_red = -1
        self._best: BadColoringCertificate | None = None
        status = NONE
        try:
            if self._presolve():
                self._dfs_max_red(0)
            if self._best is not None:
                status = FOUND
        except _Budget:
            # a best-so-far may ride along, but optimality is not claimed
            status = EXHAUSTED
        self.stats.wall_time = time.perf_counter() - self._start
        return FindResult(status, self._best, self.stats)

    def _dfs_max_red(self, start: int) -> None:
        # bound: every unassigned edge red at best
        if self.red_count + (self.m - len(self.color_trail)) <= self._best_red:
            return
        i = self._next_unassigned(start)
        if i == self.m:
            if self.red_count > self._best_red:
                self._best_red = self.red_count
                self._best = self._certificate()
            return
        e = self.order[i]
        self._tick()
        for c in self._branch_colors(e):
            mark = self._mark()
            if self._assign(e, c):
                self._dfs_max_red(i + 1)
            else:
                self.stats.backtracks += 1
            self._undo_to(mark)


def _validate(g: Graph, k: int) -> None:
    if k < 2:
        raise GraphError(f"k must be >= 2, got {k}")


def find_bad_coloring(
    g: Graph, k: int, budget: SearchBudget = DEFAULT_BUDGET
) -> FindResult:
    """Find any bad coloring, or prove none exists (exhaustive search)."""
    _validate(g, k)
    return _Engine(g, k, budget).run_find()


def count_bad_colorings(
    g: Graph, k: int, cap: int = 1 << 62, budget: SearchBudget = DEFAULT_BUDGET
) -> CountResult:
    """Exact number of bad colorings, saturating at ``cap``.

    Counts labeled colorings: no quotient by graph symmetry.
    """
    _validate(g, k)
    if cap < 1:
        raise GraphError(f"cap must be >= 1, got {cap}")
    return _Engine(g, k, budget).run_count(cap)


def find_max_red_bad_coloring(
    g: Graph, k: int, budget: SearchBudget = DEFAULT_BUDGET
) -> FindResult:
    """Among all bad colorings, one with the maximum number of red edges."""
    _validate(g, k)
    return _Engine(g, k, budget).run_max_red()
