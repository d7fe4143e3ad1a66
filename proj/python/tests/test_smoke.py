import pytest

import mdlab


def test_triangle():
    report = mdlab.md("Bw")
    assert report["value"] == 1
    assert report["status"] == "exact"


def test_graph_round_trip():
    g = mdlab.Graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    assert g.edges == [(0, 1), (0, 3), (1, 2), (2, 3)]
    assert mdlab.Graph.from_graph6(g.graph6()) == g
    assert mdlab.md(g)["value"] == 2
    assert mdlab.md_oracle(g) == 2


def test_colorings():
    c4 = mdlab.build("cycle", 4)
    assert mdlab.verify_coloring(c4, [1, 2, 2, 1])["md_coloring"]
    bad = mdlab.verify_coloring(c4, [1, 1, 1, 2])
    assert not bad["md_coloring"]
    assert bad["unseparated"] == [[2, 3]]


def test_families_and_products():
    h7 = mdlab.build("H", 7)
    assert (h7.order, h7.size) == (7, 9)
    assert mdlab.md(h7)["value"] == 1
    assert mdlab.build("H_nr", 10, 3).size == 12
    k2 = mdlab.build("K", 2)
    assert mdlab.product(k2, k2, "strong") == mdlab.build("K", 4)
    assert mdlab.md(mdlab.product(mdlab.build("C", 4), k2))["value"] == 3
    assert mdlab.closure(mdlab.build("K", 5))["closure"]


def test_thresholds():
    assert mdlab.threshold_f(7, 2) == 13
    assert mdlab.threshold_g(7, 3) == 8
    assert len(mdlab.enumerate_connected(5)) == 21
    (report,) = mdlab.census("g", 7, 3)
    assert report["verified"] and report["threshold"] == 8


def test_check_and_cli():
    assert mdlab.check("thm4.1", max_order=8)["passed"]
    code, out, _ = mdlab.run_cli(["md", "-"], "Bw\n")
    assert code == 0 and '"value": 1' in out


def test_errors():
    with pytest.raises(mdlab.ParseError):
        mdlab.md("Bxx")
    with pytest.raises(mdlab.DomainError):
        mdlab.build("H_nr", 5, 3)
    with pytest.raises(mdlab.GraphError):
        mdlab.md("B?")
    with pytest.raises(ValueError):
        mdlab.check("nope")
