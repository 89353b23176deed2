import random

import networkx as nx
import pytest

from artin353.square353 import (
    FailureReport,
    InvalidSquareComplex,
    SquareComplex,
    axiom4_templates,
    check_axioms,
    clique_pair_vertex,
    close_triples_have_common_neighbour,
    contract_by_peeling,
    cube_corners,
    diameter_two_hypotheses,
    grid_complex,
    polyomino_complex,
    random_polyomino,
    simply_connected,
    thickening,
    unmarked_four_cycles,
)


@pytest.fixture
def load(fixtures):
    def _load(name):
        return SquareComplex.from_text((fixtures / f"{name}.sqc").read_text())
    return _load


def statuses(verdicts):
    return {k: v.status for k, v in verdicts.items()}


def test_single_square_satisfies_everything(load):
    X = load("single_square")
    assert all(check_axioms(X).values())
    assert simply_connected(X)
    assert cube_corners(X) == []


def test_axiom1_violation_has_witness(load):
    v = check_axioms(load("badaxiom1"))["1"]
    assert v.failed
    assert {v.witness["d1"], v.witness["d2"]} == {"d1", "d2"}


def test_cube_corner_complex(load):
    X = load("corner")
    assert all(check_axioms(X).values())
    assert simply_connected(X)
    (corner,) = cube_corners(X)
    assert corner.centre == "c" and corner.minimal


def test_cube_boundary(load):
    X = load("cube")
    corners = cube_corners(X)
    assert len(corners) == 8 and all(c.minimal for c in corners)
    verdicts = check_axioms(X)
    assert verdicts["2"].failed and verdicts["5"].failed
    assert "exchanged" in verdicts["5"].note


def test_empty_cycle_is_not_simply_connected(load):
    v = simply_connected(load("empty_cycle"))
    assert v.failed
    assert sorted(v.witness) == ["a1", "a2", "d1", "d2"]


def test_axiom4_templates():
    E, Ep = axiom4_templates()
    assert check_axioms(E)["4"].failed
    # E' glued on, plus the edge from its cone point q to the centre d of E
    edges = {tuple(sorted(e)) for e in E.edges | Ep.edges} | {("d", "q")}
    merged = SquareComplex.build(sorted(E.A | Ep.A), sorted(E.D | Ep.D), sorted(edges),
                                 sorted(E.squares | Ep.squares, key=repr))
    verdicts = check_axioms(merged)
    assert all(verdicts[k] for k in "1234")
    assert verdicts["5"].failed


def test_axiom4_budget_gives_indeterminate():
    E, _ = axiom4_templates()
    assert check_axioms(E, budget=1)["4"].indeterminate


def test_invalid_inputs():
    with pytest.raises(InvalidSquareComplex):
        SquareComplex.from_text("A a\nA b\nedge a b\n")
    with pytest.raises(InvalidSquareComplex):
        SquareComplex.from_text("A a\nfrobnicate\n")


def test_text_round_trip():
    X = grid_complex(2, 3)
    assert SquareComplex.from_text(X.to_text()) == X


def test_passing_complexes_have_only_marked_four_cycles():
    rng = random.Random(5)
    for _ in range(15):
        X = polyomino_complex(random_polyomino(rng, 7))
        if all(check_axioms(X).values()) and simply_connected(X):
            assert unmarked_four_cycles(X) == []
            assert close_triples_have_common_neighbour(X)


def test_thickening_of_single_square_is_a_simplex(load):
    th = thickening(load("single_square"))
    assert th.complex.maximal() == [frozenset("abde")]
    assert th.complex.homology().is_point()


def test_thickening_of_square_free_graph_is_the_graph(load):
    th = thickening(load("empty_cycle"))
    assert all(len(m) == 2 for m in th.complex.maximal())
    assert th.complex.homology().betti == [1, 1]


def test_peeling_single_square(load):
    trace = contract_by_peeling(load("single_square"))
    assert len(trace.final.vertices) == 1
    assert all(step.homology_point for step in trace.steps)


def test_peeling_cube_corner_needs_narrow_mode(load):
    X = load("corner")
    with pytest.raises(FailureReport) as info:
        contract_by_peeling(X)
    assert info.value.stage == "wideness"
    trace = contract_by_peeling(X, "c", require_wide=False)
    assert len(trace.final.vertices) == 1
    assert trace.replay(thickening(X).complex)


@pytest.mark.parametrize("rows, cols", [(1, 1), (2, 2), (2, 3)])
def test_grid_peels_to_a_point(rows, cols):
    X = grid_complex(rows, cols)
    trace = contract_by_peeling(X)
    assert trace.replay(thickening(X).complex)
    assert {step.kind for step in trace.steps} <= {"collapse", "star"}


def test_diameter_two_hypotheses():
    wheel = nx.wheel_graph(6)
    assert diameter_two_hypotheses(wheel)
    assert not diameter_two_hypotheses(nx.cycle_graph(4))
    assert not diameter_two_hypotheses(nx.cycle_graph(5))
    assert clique_pair_vertex(wheel, [1, 2], [3]) == 0
