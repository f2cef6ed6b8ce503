import pytest

import locdim


def test_graph6_round_trip():
    g = locdim.parse_graph6("D?{")
    assert g.n == 5
    assert g.edges() == [(0, 4), (1, 4), (2, 4), (3, 4)]
    assert locdim.write_graph6(g) == "D?{"
    with pytest.raises(ValueError):
        locdim.parse_graph6("D?")


def test_graph_basics():
    g = locdim.named_graph("C5")
    assert locdim.is_connected(g)
    assert locdim.clique_number(g) == 2
    assert not locdim.has_k4(g)
    assert locdim.distances_from(g, 0) == [0, 1, 2, 2, 1]
    assert g.neighbors(0) == [1, 4]


def test_exact_dimension():
    assert locdim.local_metric_dimension(locdim.named_graph("C5")) == (2, [0, 1])
    assert locdim.local_metric_dimension(locdim.named_graph("K5"))[0] == 4
    assert locdim.local_metric_dimension(locdim.named_graph("P4"))[0] == 1
    with pytest.raises(RuntimeError):
        locdim.local_metric_dimension(locdim.named_graph("P17"))


def test_local_resolving_verdicts():
    assert locdim.is_local_resolving(locdim.named_graph("C4"), [0]) is None
    assert locdim.is_local_resolving(locdim.named_graph("triangle"), [0]) == (1, 2)


def test_certificate_tight_family():
    for k in (2, 3, 4):
        g = locdim.friendship_graph(k)
        cert = locdim.construct_certificate(g, trace=False)
        assert cert["bound_ok"] and not cert["repair_performed"]
        assert len(cert["W"]) == k == locdim.local_metric_dimension(g)[0]


def test_certificate_rejects_k4():
    with pytest.raises(ValueError):
        locdim.construct_certificate(locdim.named_graph("K4"))


def test_certificate_witness_table():
    cert = locdim.construct_certificate(locdim.named_graph("C5"), trace=True)
    g = locdim.named_graph("C5")
    w = set(cert["W"])
    in_s_edges = [(u, v) for (u, v) in g.edges() if u not in w and v not in w]
    assert set(cert["witness"]) == {f"{u}-{v}" for (u, v) in in_s_edges}


def test_division_and_facts():
    placements = locdim.local_vertex_division(locdim.friendship_graph(2))
    assert [p["class"] for p in placements] == ["F2", "F10"]
    assert placements[0]["roles"]["b2"] == 0
    facts = locdim.check_division_facts(locdim.friendship_graph(2))
    assert all(f["pass"] for f in facts)
    assert len(facts) == 10  # well-formedness plus the nine assertions


def test_random_generator_deterministic():
    a = locdim.random_k4_free(9, 0.4, 7)
    b = locdim.random_k4_free(9, 0.4, 7)
    assert a == b and not locdim.has_k4(a)


def test_batch_round():
    lines = "\n".join(
        locdim.write_graph6(locdim.friendship_graph(k)) for k in (2, 3)
    )
    report, summary = locdim.run_batch(lines + "\n", jobs=2)
    assert summary["processed"] == 2
    assert summary["bound_violations"] == 0
    assert len(report.strip().splitlines()) == 2


def test_bounds_report():
    r = locdim.check_known_bounds(locdim.named_graph("K4"))
    assert r["dim_l"] == 3
    ratio = next(c for c in r["checks"] if c["name"] == "upper_clique_ratio")
    assert ratio["holds"] and ratio["tight"]
