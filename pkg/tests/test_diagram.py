import math

import pytest

from artin353.diagram import (
    INF,
    TEMPLATES,
    CoxeterDiagram,
    PreconditionViolated,
    SimpleGraph,
    classify_triangle_free,
    complement,
    complete_bipartite,
    cycle_graph,
    girth,
    is_admissible_subdiagram,
    is_isomorphism,
    shortest_cycle,
    spherical_type,
)


def graph(n, edges):
    return SimpleGraph.from_edges(range(n), edges)


def test_complement_of_five_cycle_is_five_cycle():
    c5 = cycle_graph(5)
    assert girth(complement(c5)) == 5
    assert len(complement(c5).edges) == 5


def test_complement_of_k4_is_edgeless():
    k4 = graph(4, [(i, j) for i in range(4) for j in range(i + 1, 4)])
    assert not complement(k4).edges


def test_complement_of_k33_is_two_triangles():
    co = complement(complete_bipartite(3, 3))
    assert len(co.edges) == 6
    assert girth(co) == 3


@pytest.mark.parametrize("g, expected", [
    (complete_bipartite(3, 3), 4),
    (cycle_graph(5), 5),
    (graph(7, [(0, 1), (1, 2), (1, 3), (3, 4), (4, 5), (4, 6)]), INF),
])
def test_girth(g, expected):
    assert girth(g) == expected


def test_shortest_cycle_is_embedded():
    cyc = shortest_cycle(complete_bipartite(3, 3))
    assert len(cyc) == 4 and len(set(cyc)) == 4


def test_classify_five_cycle():
    tag, phi = classify_triangle_free(cycle_graph(5))
    assert tag == "FiveCycle"
    assert is_isomorphism(cycle_graph(5), TEMPLATES[tag], phi)


def test_classify_k33_minus_edge():
    g = complete_bipartite(3, 3, minus=True)
    tag, phi = classify_triangle_free(g)
    assert tag == "K33minus"


def test_path_fails_hypotheses():
    p5 = graph(5, [(0, 1), (1, 2), (2, 3), (3, 4)])
    with pytest.raises(PreconditionViolated, match="4-cycle"):
        classify_triangle_free(p5)


def test_admissible_subdiagrams():
    stpr = CoxeterDiagram.linear("stpr", [3, 3, 3])
    assert is_admissible_subdiagram(stpr, "stp")
    tri = CoxeterDiagram(("s", "t", "p"), {frozenset("st"): 3, frozenset("tp"): 3, frozenset("sp"): 3})
    assert is_admissible_subdiagram(tri, "sp")
    square = CoxeterDiagram(("s1", "t1", "s2", "t2"), {
        frozenset(("s1", "t1")): 3, frozenset(("t1", "s2")): 3,
        frozenset(("s2", "t2")): 3, frozenset(("t2", "s1")): 3})
    assert not is_admissible_subdiagram(square, ["s1", "t1", "s2"])


@pytest.mark.parametrize("labels, tag", [((3, 5), "H3"), ((5, 3), "H3"), ((3, 4), "B3"), ((3, 6), None)])
def test_spherical_type(labels, tag):
    assert spherical_type(CoxeterDiagram.linear("abc", labels)) == tag


def test_text_round_trip():
    d = CoxeterDiagram.linear("abc", [3, INF])
    back = CoxeterDiagram.from_text(d.to_text())
    assert back == d
    assert math.isinf(back.m("b", "c"))
    assert back.m("a", "c") == 2


def test_bad_label_rejected():
    with pytest.raises(ValueError):
        CoxeterDiagram.linear("ab", [1])
