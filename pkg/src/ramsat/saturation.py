"""Saturation and minimality predicates, plus structure classifiers.

A graph is saturated for the pair (triangle, all k-vertex trees) when it
admits at least one bad 2-coloring but adding any non-edge destroys all of
them; it is Ramsey-minimal when it admits none but every single-edge
deletion restores one. Edge deletion suffices for minimality because
arrowing is monotone under subgraph inclusion and the blue targets all
carry edges.
"""

from __future__ import annotations

import concurrent.futures
from dataclasses import dataclass
from itertools import combinations

from . import search
from .colorings import BadColoringCertificate
from .graphs import Graph, GraphError, bits, from_graph6
from .search import (
    DEFAULT_BUDGET,
    EXHAUSTED,
    FOUND,
    InconclusiveError,
    SearchBudget,
)

SATURATED = "saturated"
NOT_SATURATED = "not-saturated"
INCONCLUSIVE = "inconclusive"


# -- K_t saturation -----------------------------------------------------------


def _has_clique(g: Graph, inside: int, size: int) -> bool:
    if size == 0:
        return True
    if inside.bit_count() < size:
        return False
    for v in bits(inside):
        if _has_clique(g, inside & g.adj[v] & ~((1 << (v + 1)) - 1), size - 1):
            return True
        inside &= ~(1 << v)
        if inside.bit_count() < size:
            return False
    return False


def has_kt(g: Graph, t: int) -> bool:
    """True iff g contains a complete subgraph on t vertices."""
    if t <= 0:
        return True
    full = (1 << g.n) - 1
    return _has_clique(g, full, t)


def is_kt_saturated(g: Graph, t: int) -> bool:
    """K_t-free, and every non-edge completes a K_t."""
    if t < 3:
        raise GraphError(f"is_kt_saturated requires t >= 3, got {t}")
    if t == 3:
        if not g.is_triangle_free():
            return False
        for u, v in g.non_edges():
            if not g.adj[u] & g.adj[v]:
                return False
        return True
    if has_kt(g, t):
        return False
    for u, v in g.non_edges():
        # a new K_t must use the new edge: K_{t-2} among common neighbors
        if not _has_clique(g, g.adj[u] & g.adj[v], t - 2):
            return False
    return True


# -- saturation for (triangle, k-vertex trees) ---------------------------------


@dataclass(frozen=True)
class NonEdgeOutcome:
    pair: tuple[int, int]
    status: str  # found | none | budget-exhausted
    nodes: int


@dataclass
class SaturationReport:
    n: int
    k: int
    status: str  # saturated | not-saturated | inconclusive
    base_certificate: BadColoringCertificate | None
    failures: tuple[tuple[tuple[int, int], BadColoringCertificate], ...]
    non_edge_outcomes: tuple[NonEdgeOutcome, ...]
    reason: str = ""

    @property
    def verdict(self) -> bool:
        return self.status == SATURATED

    def as_dict(self, g: Graph) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "status": self.status,
            "reason": self.reason,
            "base_certificate": (
                None
                if self.base_certificate is None
                else self.base_certificate.as_dict(g)
            ),
            "failures": [
                {
                    "non_edge": list(pair),
                    "certificate": cert.as_dict(g.with_edge(*pair)),
                }
                for pair, cert in self.failures
            ],
            "non_edges_checked": [
                {"non_edge": list(o.pair), "status": o.status, "nodes": o.nodes}
                for o in self.non_edge_outcomes
            ],
        }


def _check_non_edge(g6: str, pair: tuple[int, int], k: int, budget: SearchBudget):
    g = from_graph6(g6)
    res = search.find_bad_coloring(g.with_edge(*pair), k, budget)
    return pair, res.status, res.certificate, res.stats.nodes


def is_rmin_saturated(
    g: Graph,
    k: int,
    budget: SearchBudget = DEFAULT_BUDGET,
    jobs: int = 1,
) -> SaturationReport:
    """Decide saturation; every verdict ships re-checkable evidence.

    A single surviving non-edge settles 'not saturated' even if other
    sub-searches ran out of budget; 'inconclusive' is reported only when
    no counterexample was found and some sub-search was cut short.
    """
    if k < 2:
        raise GraphError(f"k must be >= 2, got {k}")
    base = search.find_bad_coloring(g, k, budget)
    if base.status == EXHAUSTED:
        return SaturationReport(
            g.n, k, INCONCLUSIVE, None, (), (), "base search exhausted its budget"
        )
    if base.status != FOUND:
        return SaturationReport(
            g.n, k, NOT_SATURATED, None, (), (), "graph admits no bad coloring"
        )
    non_edges = list(g.non_edges())
    results = []
    if jobs > 1 and len(non_edges) > 1:
        g6 = g.to_graph6()
        with concurrent.futures.ProcessPoolExecutor(max_workers=jobs) as pool:
            futures = [
                pool.submit(_check_non_edge, g6, pair, k, budget)
                for pair in non_edges
            ]
            results = [f.result() for f in futures]
    else:
        for pair in non_edges:
            res = search.find_bad_coloring(g.with_edge(*pair), k, budget)
            results.append((pair, res.status, res.certificate, res.stats.nodes))
    failures = []
    outcomes = []
    exhausted = False
    for pair, status, cert, nodes in results:
        outcomes.append(NonEdgeOutcome(pair, status, nodes))
        if status == FOUND:
            failures.append((pair, cert))
        elif status == EXHAUSTED:
            exhausted = True
    if failures:
        status = NOT_SATURATED
        reason = f"{len(failures)} non-edge(s) still admit a bad coloring"
    elif exhausted:
        status = INCONCLUSIVE
        reason = "some non-edge searches exhausted their budget"
    else:
        status = SATURATED
        reason = "every non-edge addition destroys all bad colorings"
    return SaturationReport(
        g.n,
        k,
        status,
        base.certificate,
        tuple(failures),
        tuple(outcomes),
        reason,
    )


def is_ramsey_minimal(
    g: Graph, k: int, budget: SearchBudget = DEFAULT_BUDGET
) -> bool:
    """True iff g admits no bad coloring but every g-e does.

    Raises InconclusiveError when a sub-search exhausts its budget.
    """
    if k < 2:
        raise GraphError(f"k must be >= 2, got {k}")
    base = search.find_bad_coloring(g, k, budget)
    if base.status == EXHAUSTED:
        raise InconclusiveError("base search exhausted its budget")
    if base.status == FOUND:
        return False
    for u, v in g.edges:
        res = search.find_bad_coloring(g.without_edge(u, v), k, budget)
        if res.status == EXHAUSTED:
            raise InconclusiveError(f"search on g - ({u},{v}) exhausted its budget")
        if res.status != FOUND:
            return False
    return True


# -- structure classifiers ------------------------------------------------------


@dataclass(frozen=True)
class StructureClass:
    """Classification of a triangle-saturated graph by minimum degree."""

    tag: str  # star | j | other
    y: int | None = None
    z: int | None = None
    set_a: tuple[int, ...] = ()
    set_b: tuple[int, ...] = ()
    set_c: tuple[int, ...] = ()

    @property
    def a(self) -> int:
        return len(self.set_a)

    @property
    def b(self) -> int:
        return len(self.set_b)

    @property
    def c(self) -> int:
        return len(self.set_c)


def classify_k3_saturated(g: Graph) -> StructureClass:
    """Star when the minimum degree is 1, the two-apex split when it is 2,
    'other' for minimum degree >= 3."""
    if not is_kt_saturated(g, 3):
        raise GraphError("classify_k3_saturated requires a K3-saturated graph")
    delta = g.min_degree()
    if delta <= 0:
        # K3-saturated graphs with an isolated vertex exist only at n <= 2
        return StructureClass("other") if g.n > 2 else StructureClass("star")
    if delta == 1:
        return StructureClass("star")
    if delta >= 3:
        return StructureClass("other")
    full = (1 << g.n) - 1
    for y, z in combinations(range(g.n), 2):
        if g.adj[y] >> z & 1:
            continue
        rest = full & ~(1 << y) & ~(1 << z)
        if (g.adj[y] | g.adj[z]) & rest == rest:
            mask_a = g.adj[y] & g.adj[z]
            mask_b = g.adj[y] & ~g.adj[z] & ~(1 << z)
            mask_c = g.adj[z] & ~g.adj[y] & ~(1 << y)
            cls = StructureClass(
                "j",
                y,
                z,
                tuple(bits(mask_a)),
                tuple(bits(mask_b)),
                tuple(bits(mask_c)),
            )
            _validate_j_split(g, cls)
            return cls
    raise GraphError("no covering non-adjacent pair found; graph is not J-shaped")


def _validate_j_split(g: Graph, cls: StructureClass) -> None:
    mask_a = sum(1 << v for v in cls.set_a)
    mask_b = sum(1 << v for v in cls.set_b)
    mask_c = sum(1 << v for v in cls.set_c)
    ok = cls.a >= 1 and ((cls.b == 0) == (cls.c == 0))
    for v in cls.set_a:
        ok = ok and not g.adj[v] & (mask_a | mask_b | mask_c)
    for v in cls.set_b:
        ok = ok and not g.adj[v] & mask_b and g.adj[v] & mask_c == mask_c
    for v in cls.set_c:
        ok = ok and not g.adj[v] & mask_c
    if not ok:
        raise GraphError("covering pair does not induce a valid two-apex split")


def k3_saturated_edge_bound(g: Graph) -> int:
    """Degree-sum lower bound 2e >= max((d+1)n - d^2 - 1, (d+2)n - d(d+t) - 2)
    for K3-saturated graphs with minimum degree d >= 3; t is the least
    degree among neighbors of minimum-degree vertices."""
    if not is_kt_saturated(g, 3):
        raise GraphError("k3_saturated_edge_bound requires a K3-saturated graph")
    delta = g.min_degree()
    if delta < 3:
        raise GraphError(
            f"k3_saturated_edge_bound requires minimum degree >= 3, got {delta}"
        )
    n = g.n
    near_min = 0
    for v in range(n):
        if g.degree(v) == delta:
            near_min |= g.adj[v]
    t = min(g.degree(v) for v in bits(near_min))
    return max(
        (delta + 1) * n - delta * delta - 1,
        (delta + 2) * n - delta * (delta + t) - 2,
    )


# -- certificate structure checks ------------------------------------------------


@dataclass(frozen=True)
class CertificateStructureReport:
    """Pass/fail per structural clause; None marks a clause not evaluated."""

    small_blue_components: int | None = None
    small_count_ok: bool | None = None
    red_complete_ok: bool | None = None
    max_red_degree_ok: bool | None = None
    red_two_connected_ok: bool | None = None

    def all_evaluated_pass(self) -> bool:
        clauses = (
            self.small_count_ok,
            self.red_complete_ok,
            self.max_red_degree_ok,
            self.red_two_connected_ok,
        )
        return all(c is not False for c in clauses)


def check_certificate_structure(
    g: Graph,
    k: int,
    cert: BadColoringCertificate,
    saturated: bool,
    max_red: bool = False,
) -> CertificateStructureReport:
    """Check the structural consequences a bad coloring of a saturated graph
    must satisfy: at most two blue components smaller than k/2 (red-complete
    to each other when there are exactly two), and, for a coloring of
    maximum red size on n >= k+2 vertices, red max degree <= n-3 with a
    2-connected red subgraph."""
    if not cert.verify(g, k):
        raise GraphError("certificate does not verify for this graph and k")
    small_count = None
    count_ok = None
    complete_ok = None
    degree_ok = None
    two_conn_ok = None
    coloring = cert.coloring
    if saturated:
        comp = coloring.blue_graph(g).components()
        # strict threshold: components on fewer than k/2 vertices
        small_ids = [
            cid for cid, size in enumerate(comp.sizes) if 2 * size < k
        ]
        small_count = len(small_ids)
        count_ok = small_count <= 2
        if small_count == 2:
            d1 = [v for v in range(g.n) if comp.assignment[v] == small_ids[0]]
            d2 = [v for v in range(g.n) if comp.assignment[v] == small_ids[1]]
            red = coloring.red_graph(g)
            complete_ok = all(red.has_edge(x, y) for x in d1 for y in d2)
    if saturated and max_red and g.n >= k + 2:
        red = coloring.red_graph(g)
        degree_ok = red.max_degree() <= g.n - 3
        two_conn_ok = red.is_2_connected()
    return CertificateStructureReport(
        small_count, count_ok, complete_ok, degree_ok, two_conn_ok
    )
