"""Colorings, the bad-coloring predicate, forced-blue edges, CNF export."""

import random

import pytest

from ramsat.colorings import (
    BLUE,
    RED,
    BadColoringCertificate,
    TwoColoring,
    blue_component_sizes,
    enumerate_subtrees,
    export_cnf,
    forced_blue_edges,
    is_bad_coloring,
    make_certificate,
)
from ramsat.constructions import ConstructionSpec, build
from ramsat.graphs import Graph, GraphError, complete, cycle, path, star
from ramsat.search import find_bad_coloring


def test_two_coloring_basics():
    g = path(3)
    c = TwoColoring([RED, BLUE])
    assert c.red_edge_indices() == (0,)
    assert c.blue_edge_indices() == (1,)
    assert c.red_count == 1 and c.blue_count == 1
    assert c.red_graph(g).edges == ((0, 1),)
    assert c.blue_graph(g).edges == ((1, 2),)
    assert TwoColoring.from_blue_edges(g, [(2, 1)]) == c
    with pytest.raises(GraphError):
        TwoColoring([0, 2])
    with pytest.raises(GraphError):
        is_bad_coloring(g, 3, TwoColoring([RED]))
    with pytest.raises(GraphError):
        is_bad_coloring(g, 1, TwoColoring([RED, RED]))


def test_mask_round_trip():
    c = TwoColoring([RED, BLUE, BLUE, RED])
    assert TwoColoring.from_mask(4, c.as_mask()) == c


def test_is_bad_coloring_examples():
    k3 = complete(3)
    assert not is_bad_coloring(k3, 3, TwoColoring.all_red(k3))  # red triangle
    one_blue = TwoColoring([BLUE, RED, RED])
    assert is_bad_coloring(k3, 3, one_blue)
    geven = build(ConstructionSpec.geven(18))
    assert is_bad_coloring(geven.graph, 4, geven.reference_coloring)
    godd = build(ConstructionSpec.godd(19))
    assert is_bad_coloring(godd.graph, 4, godd.reference_coloring)
    gen = build(ConstructionSpec.general(5, 20))
    assert is_bad_coloring(gen.graph, 5, gen.reference_coloring)
    # all-blue K3 has a 3-vertex blue component: bad for k=4, not k=3
    all_blue = TwoColoring([BLUE] * 3)
    assert is_bad_coloring(k3, 4, all_blue)
    assert not is_bad_coloring(k3, 3, all_blue)


def test_blue_component_sizes():
    g = cycle(5)
    c = TwoColoring.from_blue_edges(g, [(0, 1), (1, 2)])
    assert blue_component_sizes(g, c) == (3, 1, 1)
    assert blue_component_sizes(g, TwoColoring.all_red(g)) == (1,) * 5


def test_certificate_verification():
    g = star(6)
    c = TwoColoring.all_red(g)
    cert = make_certificate(g, 4, c)
    assert cert.verify(g, 4)
    assert cert.blue_component_sizes == (1,) * 6
    # tampered component sizes no longer verify
    fake = BadColoringCertificate(c, (6,))
    assert not fake.verify(g, 4)
    with pytest.raises(GraphError):
        make_certificate(complete(3), 3, TwoColoring.all_red(complete(3)))


def test_forced_blue_edges_geven():
    b = build(ConstructionSpec.geven(18))
    res = forced_blue_edges(b.graph, 4)
    assert res.applicable
    y1, y2 = b.roles["y1"][0], b.roles["y2"][0]
    forced_pairs = {(r.u, r.v) for r in res.edges}
    assert (y1, y2) in forced_pairs
    assert b.graph.common_neighbor_count(y1, y2) >= 5  # 2k-3 at k=4


def test_forced_blue_edges_general():
    b = build(ConstructionSpec.general(5, 20))
    res = forced_blue_edges(b.graph, 5)
    forced_pairs = {(r.u, r.v) for r in res.edges}
    for block in (b.roles["H1"], b.roles["H2"]):
        for i, u in enumerate(block):
            for v in block[i + 1 :]:
                assert (u, v) in forced_pairs


def test_forced_blue_edges_small_or_sparse():
    assert forced_blue_edges(cycle(5), 3) == ((), True)  # no triangles at all
    res = forced_blue_edges(complete(4), 3)  # n < k + 2
    assert res.edges == () and not res.applicable


def test_enumerate_subtrees():
    assert len(enumerate_subtrees(complete(3), 3)) == 3  # spanning trees of K3
    assert len(enumerate_subtrees(star(4), 4)) == 1  # the star itself
    assert len(enumerate_subtrees(path(4), 4)) == 1
    assert len(enumerate_subtrees(path(4), 2)) == 3  # single edges
    # K4 on 4 vertices: 16 spanning trees (Cayley)
    assert len(enumerate_subtrees(complete(4), 4)) == 16


def test_export_cnf_structure():
    text = export_cnf(complete(3), 3)
    lines = [l for l in text.splitlines() if not l.startswith("c")]
    assert lines[0] == "p cnf 3 4"
    assert lines.count("-1 -2 -3 0") == 1
    assert sorted(lines[1:]) == sorted(["-1 -2 -3 0", "1 2 0", "1 3 0", "2 3 0"])

    text = export_cnf(star(4), 4)
    lines = [l for l in text.splitlines() if not l.startswith("c")]
    assert lines == ["p cnf 3 1", "1 2 3 0"]

    with pytest.raises(GraphError):
        export_cnf(complete(3), 7)  # k cap


# -- independent CNF satisfiability check (tiny DPLL) ---------------------------


def parse_dimacs(text):
    clauses = []
    for line in text.splitlines():
        if line.startswith(("c", "p")) or not line.strip():
            continue
        clauses.append([int(x) for x in line.split()[:-1]])
    return clauses


def dpll(clauses):
    while True:
        units = [c[0] for c in clauses if len(c) == 1]
        if not units:
            break
        lit = units[0]
        reduced = []
        for c in clauses:
            if lit in c:
                continue
            if -lit in c:
                c = [x for x in c if x != -lit]
                if not c:
                    return False
            reduced.append(c)
        clauses = reduced
    if not clauses:
        return True
    lit = clauses[0][0]
    return dpll(clauses + [[lit]]) or dpll(clauses + [[-lit]])


@pytest.mark.parametrize(
    "g, k",
    [
        (complete(3), 3),
        (complete(5), 3),
        (complete(6), 4),
        (complete(7), 4),
        (star(4), 4),
        (cycle(5), 3),
    ],
)
def test_cnf_satisfiable_iff_bad_coloring_exists(g, k):
    sat = dpll(parse_dimacs(export_cnf(g, k)))
    assert sat == (find_bad_coloring(g, k).status == "found")


def test_cnf_matches_engine_on_random_graphs():
    rng = random.Random(2024)
    for _ in range(40):
        n = rng.randint(2, 6)
        pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
        g = Graph(n, rng.sample(pairs, rng.randint(0, len(pairs))))
        for k in (3, 4):
            sat = dpll(parse_dimacs(export_cnf(g, k)))
            assert sat == (find_bad_coloring(g, k).status == "found")
