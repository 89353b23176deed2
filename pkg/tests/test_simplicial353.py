import pytest

from artin353.complexes import exchange_records, records_to_text
from artin353.poset import HypothesisFailed
from artin353.simplicial353 import (
    check_353_simplicial,
    complex_from_simplices,
    condition3_violation,
    condition4_violation,
    coned_grid,
    four_tetrahedra,
    passes,
    pipeline,
    square_complex_of,
    subdivide,
    typed_complex_from_text,
)
from artin353.square353 import contract_by_peeling, thickening

TETRA = [("a", "b", "c", "d")]


def _reduced(betti):
    betti = list(betti)
    while betti and betti[-1] == 0:
        betti.pop()
    return betti


def test_single_tetrahedron():
    rep = check_353_simplicial(complex_from_simplices(TETRA))
    assert passes(rep)
    assert rep["wide"].failed and rep["wide"].witness["vertex"] == "b"


def test_single_tetrahedron_square_complex_is_an_edge():
    X = square_complex_of(complex_from_simplices(TETRA), require=False)
    assert X.A == {"a"} and X.D == {"d"} and not X.squares
    with pytest.raises(HypothesisFailed):
        square_complex_of(complex_from_simplices(TETRA))


def test_tetrahedra_glued_along_bc_edge():
    cx = complex_from_simplices([("a1", "b", "c", "d1"), ("a2", "b", "c", "d2")])
    rep = check_353_simplicial(cx)
    assert rep["1"].failed
    assert rep["non_degenerate"].failed


def test_four_tetrahedra_give_one_square():
    cx = four_tetrahedra()
    rep = check_353_simplicial(cx)
    assert passes(rep) and rep["wide"]
    assert rep["non_degenerate"].failed
    X = square_complex_of(cx)
    assert X.squares == {frozenset({"a1", "a2", "d1", "d2"})}


def test_four_cycle_without_apex_is_not_a_square():
    cx = complex_from_simplices([("a1", "d1"), ("d1", "a2"), ("a2", "d2"), ("d2", "a1")])
    X = square_complex_of(cx, require=False)
    assert not X.squares and len(X.edges) == 4


def test_condition3_witness():
    rep = check_353_simplicial(condition3_violation())
    assert rep["3"].failed and rep["3"].witness["vertex"] == "d"
    assert len(rep["3"].witness["cycle"]) == 8


def test_condition4_witness():
    rep = check_353_simplicial(condition4_violation())
    assert rep["4"].failed and len(rep["4"].witness["cycle"]) == 10


def test_budget_gives_indeterminate():
    rep = check_353_simplicial(condition3_violation(), budget=2)
    assert rep["3"].indeterminate


@pytest.mark.parametrize("rows, cols", [(1, 1), (2, 2)])
def test_coned_grid_pipeline(rows, cols):
    cx = coned_grid(rows, cols)
    report = pipeline(cx)
    assert passes(report.simplicial) and report.simplicial["wide"] and report.simplicial["non_degenerate"]
    assert report.consistent and all(report.axioms.values())
    X = report.square
    assert len(X.squares) == rows * cols
    assert contract_by_peeling(X).replay(thickening(X).complex)
    assert _reduced(cx.homology().betti) == _reduced(thickening(X).complex.homology().betti) == [1]


def test_subdivide_triangle():
    cx = complex_from_simplices([("s", "t", "p")], {"s": "s", "t": "t", "p": "p"})
    sub = subdivide(cx, [{"s", "t"}, {"p"}])
    assert len(sub.maximal()) == 2
    (mid,) = [v for v in sub.vertices if v not in cx.types]
    assert sub.types[mid] == "st"
    assert all(mid in m for m in sub.maximal())
    assert sub.euler_characteristic() == 1


def test_subdivide_singletons_is_identity():
    cx = four_tetrahedra()
    sub = subdivide(cx, [{"a"}, {"b"}, {"c"}, {"d"}])
    assert sub.faces == cx.faces


def test_subdivide_rejects_overlapping_blocks():
    with pytest.raises(ValueError):
        subdivide(four_tetrahedra(), [{"a", "b"}, {"b", "c"}, {"d"}])


def test_exchange_text_loader():
    cx = coned_grid(1, 1)
    text = records_to_text(exchange_records(cx, {v: {"type": t} for v, t in cx.types.items()}))
    back = typed_complex_from_text(text)
    assert back.types == cx.types and back.faces == cx.faces
    simple = typed_complex_from_text("simplex a1 b c d1\nsimplex a2 b c d1\n")
    assert simple.types["a2"] == "a"
    with pytest.raises(ValueError):
        typed_complex_from_text("cell 0 0 - name=x\n")
