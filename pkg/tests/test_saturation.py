"""Saturation predicates, minimality, and structure classification."""

import random
from itertools import combinations

import pytest

from ramsat.colorings import BadColoringCertificate, TwoColoring
from ramsat.constructions import ConstructionSpec, build
from ramsat.graphs import (
    Graph,
    GraphError,
    complete,
    complete_bipartite,
    cycle,
    path,
    petersen,
    star,
)
from ramsat.oracle import brute_force_bad_coloring, enumerate_graphs, scan_k3_saturated
from ramsat.saturation import (
    INCONCLUSIVE,
    NOT_SATURATED,
    SATURATED,
    check_certificate_structure,
    classify_k3_saturated,
    has_kt,
    is_kt_saturated,
    is_ramsey_minimal,
    is_rmin_saturated,
    k3_saturated_edge_bound,
)
from ramsat.search import InconclusiveError, SearchBudget, find_bad_coloring, find_max_red_bad_coloring


def naive_kt_saturated(g, t):
    def naive_has_kt(h):
        return any(
            all(h.has_edge(a, b) for a, b in combinations(sub, 2))
            for sub in combinations(range(h.n), t)
        )

    if naive_has_kt(g):
        return False
    return all(naive_has_kt(g.with_edge(u, v)) for u, v in g.non_edges())


def test_is_kt_saturated_examples():
    assert is_kt_saturated(cycle(5), 3)
    assert is_kt_saturated(petersen(), 3)
    assert not is_kt_saturated(path(4), 3)
    assert is_kt_saturated(complete_bipartite(2, 4), 3)
    # t = 4: a clique joined to an independent set
    joined = Graph(
        5, [(0, 1)] + [(0, v) for v in (2, 3, 4)] + [(1, v) for v in (2, 3, 4)]
    )
    assert is_kt_saturated(joined, 4)
    with pytest.raises(GraphError):
        is_kt_saturated(cycle(5), 2)


def test_is_kt_saturated_against_naive_definition():
    rng = random.Random(31)
    for _ in range(60):
        n = rng.randint(1, 7)
        pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
        g = Graph(n, rng.sample(pairs, rng.randint(0, len(pairs))))
        for t in (3, 4):
            assert is_kt_saturated(g, t) == naive_kt_saturated(g, t)


def test_has_kt():
    assert has_kt(complete(4), 4)
    assert not has_kt(petersen(), 3)
    assert has_kt(petersen(), 2)


def test_is_rmin_saturated_witnesses():
    for spec, k in [
        (ConstructionSpec.geven(18), 4),
        (ConstructionSpec.godd(19), 4),
        (ConstructionSpec.general(5, 20), 5),
    ]:
        rep = is_rmin_saturated(build(spec).graph, k)
        assert rep.status == SATURATED, spec.name
        assert rep.verdict and rep.base_certificate is not None
        assert not rep.failures


def test_witness_family_saturated_and_unique_at_other_sizes():
    from ramsat.search import count_bad_colorings

    for spec, k in [
        (ConstructionSpec.geven(8), 4),
        (ConstructionSpec.geven(20), 4),
        (ConstructionSpec.godd(9), 4),
        (ConstructionSpec.godd(21), 4),
        (ConstructionSpec.general(5, 22), 5),
        (ConstructionSpec.general(6, 26), 6),
    ]:
        g = build(spec).graph
        assert count_bad_colorings(g, k, cap=2).count == 1, spec.name
        assert is_rmin_saturated(g, k).verdict, spec.name


def test_is_rmin_saturated_parallel_jobs_match():
    g = build(ConstructionSpec.geven(18)).graph
    serial = is_rmin_saturated(g, 4, jobs=1)
    parallel = is_rmin_saturated(g, 4, jobs=4)
    assert serial.status == parallel.status == SATURATED
    assert serial.non_edge_outcomes == parallel.non_edge_outcomes


def test_is_rmin_saturated_star_fails():
    g = star(10)
    rep = is_rmin_saturated(g, 4)
    assert rep.status == NOT_SATURATED and not rep.verdict
    assert rep.failures
    pair, cert = rep.failures[0]
    assert pair == (1, 2)
    assert cert.verify(g.with_edge(*pair), 4)


def test_is_rmin_saturated_complete_below_ramsey():
    assert is_rmin_saturated(complete(4), 3).verdict  # r(3) = 5
    assert is_rmin_saturated(complete(6), 4).verdict  # r(4) = 7
    # above the threshold K_n no longer admits a bad coloring
    rep = is_rmin_saturated(complete(7), 4)
    assert rep.status == NOT_SATURATED
    assert "no bad coloring" in rep.reason


def test_is_rmin_saturated_budget_inconclusive():
    g = build(ConstructionSpec.general(5, 20)).graph
    rep = is_rmin_saturated(g, 5, SearchBudget(max_nodes=1))
    assert rep.status == INCONCLUSIVE


def test_is_rmin_saturated_matches_oracle_definition():
    """Report verdict equals the definition computed with the 2^m scan."""
    for n in range(1, 6):
        for g in enumerate_graphs(n):
            for k in (3, 4):
                want = brute_force_bad_coloring(g, k).exists and all(
                    not brute_force_bad_coloring(g.with_edge(u, v), k).exists
                    for u, v in g.non_edges()
                )
                assert is_rmin_saturated(g, k).verdict == want, (g.to_graph6(), k)


def test_is_rmin_saturated_matches_oracle_definition_n7_sample():
    rng = random.Random(71)
    classes = enumerate_graphs(7)
    for g in rng.sample(classes, 50):
        for k in (3, 4):
            want = brute_force_bad_coloring(g, k).exists and all(
                not brute_force_bad_coloring(g.with_edge(u, v), k).exists
                for u, v in g.non_edges()
            )
            assert is_rmin_saturated(g, k).verdict == want, (g.to_graph6(), k)


def test_is_ramsey_minimal():
    assert not is_ramsey_minimal(star(5), 3)  # does not arrow at all
    # oracle-determined verdicts for complete graphs at the Ramsey number
    def oracle_minimal(g, k):
        if brute_force_bad_coloring(g, k).exists:
            return False
        return all(
            brute_force_bad_coloring(g.without_edge(u, v), k).exists
            for u, v in g.edges
        )

    assert is_ramsey_minimal(complete(5), 3) == oracle_minimal(complete(5), 3)
    assert is_ramsey_minimal(complete(7), 4) == oracle_minimal(complete(7), 4)
    # K8 at k=5 sits below the forced-blue threshold, so the search is real
    with pytest.raises(InconclusiveError):
        is_ramsey_minimal(complete(8), 5, SearchBudget(max_nodes=1))


def test_minimal_graphs_exist_in_scan():
    """Engine-found minimal graphs at n = 5, k = 3 agree with the oracle."""
    found = []
    for g in enumerate_graphs(5):
        if is_ramsey_minimal(g, 3):
            found.append(g)
    assert found, "some 5-vertex graph should be minimal for k=3"
    for g in found:
        assert not brute_force_bad_coloring(g, 3).exists
        for u, v in g.edges:
            assert brute_force_bad_coloring(g.without_edge(u, v), 3).exists


def test_classify_examples():
    assert classify_k3_saturated(star(8)).tag == "star"
    cls = classify_k3_saturated(complete_bipartite(2, 6))
    assert cls.tag == "j" and (cls.a, cls.b, cls.c) == (6, 0, 0)
    assert classify_k3_saturated(petersen()).tag == "other"
    cls = classify_k3_saturated(cycle(5))
    assert cls.tag == "j" and (cls.a, cls.b, cls.c) == (1, 1, 1)
    with pytest.raises(GraphError):
        classify_k3_saturated(path(4))  # not saturated


def test_classify_recovers_built_j():
    for a, b, c in [(1, 1, 1), (3, 1, 2), (4, 2, 3), (5, 0, 0), (2, 2, 2)]:
        built = build(ConstructionSpec.j(a, b, c))
        cls = classify_k3_saturated(built.graph)
        assert cls.tag == "j"
        assert (cls.a,) + tuple(sorted((cls.b, cls.c))) == (a,) + tuple(sorted((b, c)))


def test_classify_rebuilds_isomorphic():
    rng = random.Random(23)
    for a, b, c in [(2, 1, 2), (3, 2, 3), (4, 1, 1)]:
        g = build(ConstructionSpec.j(a, b, c)).graph
        perm = list(range(g.n))
        rng.shuffle(perm)
        h = g.relabeled(perm)
        cls = classify_k3_saturated(h)
        rebuilt = build(ConstructionSpec.j(cls.a, cls.b, cls.c)).graph
        assert rebuilt.canonical_form() == h.canonical_form()


def test_k3_saturated_edge_bound():
    p = petersen()
    assert k3_saturated_edge_bound(p) == 30 == 2 * p.m
    with pytest.raises(GraphError):
        k3_saturated_edge_bound(cycle(5))  # min degree 2
    # oracle-enumerated delta >= 3 cases satisfy the bound
    checked = 0
    for n in (7, 8):
        for g, m in scan_k3_saturated(n, 3):
            assert k3_saturated_edge_bound(g) <= 2 * m
            checked += 1
    assert checked > 0


def test_erdos_hajnal_moon_t3():
    """Every K3-saturated graph has e >= n - 1, equality only for stars."""
    for n in range(2, 8):
        for g in enumerate_graphs(n):
            if not is_kt_saturated(g, 3):
                continue
            assert g.m >= n - 1
            if g.m == n - 1:
                assert g.canonical_form() == star(n).canonical_form()


def test_check_certificate_structure():
    b = build(ConstructionSpec.geven(18))
    res = find_bad_coloring(b.graph, 4)
    rep = check_certificate_structure(b.graph, 4, res.certificate, saturated=True)
    assert rep.small_count_ok is True
    assert rep.max_red_degree_ok is None  # max_red not claimed
    mr = find_max_red_bad_coloring(b.graph, 4)
    rep = check_certificate_structure(
        b.graph, 4, mr.certificate, saturated=True, max_red=True
    )
    assert rep.max_red_degree_ok is True and rep.red_two_connected_ok is True
    assert rep.all_evaluated_pass()
    # non-saturated inputs skip the structural clauses
    g = star(6)
    cert = find_bad_coloring(g, 3).certificate
    rep = check_certificate_structure(g, 3, cert, saturated=False)
    assert rep.small_count_ok is None and rep.small_blue_components is None
    # certificates must verify before any clause is evaluated
    with pytest.raises(GraphError):
        check_certificate_structure(
            g, 3, BadColoringCertificate(TwoColoring([0] * g.m), (6,)), True
        )


def test_small_component_clause_with_two_components():
    # K6 at k = 4: unique-style coloring with two blue triangles;
    # components of size < 2 are absent, so use k = 7 where size < 3.5
    g = complete(6)
    coloring = TwoColoring.from_blue_edges(
        g, [(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5)]
    )
    cert = BadColoringCertificate(coloring, (3, 3))
    rep = check_certificate_structure(g, 7, cert, saturated=True)
    assert rep.small_blue_components == 2
    assert rep.small_count_ok is True
    assert rep.red_complete_ok is True  # K3,3 between the triangles


def test_saturation_report_serialization():
    g = star(5)
    rep = is_rmin_saturated(g, 3)
    payload = rep.as_dict(g)
    assert payload["status"] == rep.status
    assert isinstance(payload["non_edges_checked"], list)
