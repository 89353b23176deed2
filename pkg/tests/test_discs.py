import random
from fractions import Fraction

import pytest

from artin353.discs import (
    AngleSumViolation,
    DiscDiagram,
    Indeterminate,
    InvalidDiagram,
    cube_corner_diagram,
    diagram_hyperplanes,
    gauss_bonnet,
    minimal_disc_diagram,
    polygon,
    random_angles,
    random_disc_diagram,
    square_grid,
    uniform_angles,
)

HALF = Fraction(1, 2)


def test_single_square_right_angles():
    rep = gauss_bonnet(polygon(4), uniform_angles(polygon(4)))
    assert rep.total == 2
    assert set(rep.per_vertex.values()) == {HALF}


def test_cube_corner_curvatures():
    d = cube_corner_diagram()
    rep = gauss_bonnet(d, uniform_angles(d))
    assert rep.total == 2
    assert rep.per_vertex["c"] == HALF
    for v in ("n1", "n2", "n3"):
        assert rep.per_vertex[v] == 0
    for v in ("m12", "m23", "m31"):
        assert rep.per_vertex[v] == HALF


def test_grid_curvatures():
    d = square_grid(2, 2)
    rep = gauss_bonnet(d, uniform_angles(d))
    assert rep.total == 2
    assert sorted(rep.per_vertex.values()).count(HALF) == 4
    assert sorted(rep.per_vertex.values()).count(0) == 5


@pytest.mark.parametrize("convention", ["standard", "components"])
def test_random_diagrams(convention):
    rng = random.Random(3)
    for _ in range(40):
        d = random_disc_diagram(rng)
        rep = gauss_bonnet(d, random_angles(d, rng), convention)
        interior = [v for v in d.vertices if v not in set(d.boundary)]
        expected = 2 if convention == "standard" else 2 - len(interior)
        assert rep.total == expected


def test_bad_angles_rejected():
    d = polygon(4)
    angles = uniform_angles(d)
    angles[(0, 0)] += 1
    with pytest.raises(AngleSumViolation):
        gauss_bonnet(d, angles)


def test_text_round_trip():
    d = cube_corner_diagram()
    back = DiscDiagram.from_text(d.to_text())
    assert back.faces == d.faces and list(back.boundary) == list(d.boundary)


def test_invalid_diagram():
    with pytest.raises(InvalidDiagram):
        DiscDiagram([("a", "b", "c", "d")], ["a", "b", "c"]).certify()


def test_hyperplanes():
    hyps, crossing = diagram_hyperplanes(polygon(4))
    assert len(hyps) == 2 and crossing == {frozenset((0, 1)): 1}
    hyps, crossing = diagram_hyperplanes(cube_corner_diagram())
    assert len(hyps) == 3 and set(crossing.values()) == {1} and len(crossing) == 3
    hyps, crossing = diagram_hyperplanes(square_grid(1, 3))
    assert len(hyps) == 4
    long = [k for k, h in enumerate(hyps) if len(h.squares) == 3]
    assert len(long) == 1 and all(h.embedded for h in hyps)
    assert all(crossing[frozenset((long[0], k))] == 1 for k in range(4) if k != long[0])


CORNER = [("c", "n1", "m12", "n2"), ("c", "n2", "m23", "n3"), ("c", "n3", "m31", "n1")]


def test_minimal_filling_of_a_square():
    d = minimal_disc_diagram(CORNER[:1], ["c", "n1", "m12", "n2"], 3)
    assert d.area == 1


def test_minimal_filling_of_corner_boundary():
    d = minimal_disc_diagram(CORNER, ["n1", "m12", "n2", "m23", "n3", "m31"], 3)
    assert d.area == 3
    with pytest.raises(Indeterminate):
        minimal_disc_diagram(CORNER, ["n1", "m12", "n2", "m23", "n3", "m31"], 2)


def test_loop_without_squares_is_indeterminate():
    with pytest.raises(Indeterminate):
        minimal_disc_diagram([], ["a", "b", "c", "d"], 4)
