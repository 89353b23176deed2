import itertools

import pytest

from artin353.arrangement import Arrangement, NotCentral, reflection_arrangement
from artin353.coxeter import enumerate_group
from artin353.diagram import CoxeterDiagram


def sigma_of(names, labels):
    return reflection_arrangement(enumerate_group(CoxeterDiagram.linear(names, labels)))


@pytest.fixture(scope="module")
def hexagon():
    return sigma_of("ab", [3])


def test_i2_3_sigma_is_hexagon(hexagon):
    arr, sigma = hexagon
    assert len(arr.hyperplanes) == 3
    assert [len(sigma.cells_of_dim(d)) for d in range(3)] == [6, 6, 1]


def test_h3_has_120_chambers():
    arr, sigma = sigma_of("abc", [3, 5])
    assert len(arr.hyperplanes) == 15
    assert len(sigma.chambers) == 120


def test_a1_sigma_is_an_edge():
    arr, sigma = sigma_of("a", [])
    assert [len(sigma.cells_of_dim(d)) for d in range(2)] == [2, 1]


def test_distances(hexagon):
    _, sigma = hexagon
    x = sigma.chambers[0]
    assert sigma.graph_distance(x, x) == 0
    opposite = tuple(-s for s in x)
    assert sigma.graph_distance(x, opposite) == 3
    for y in sigma.adjacency[x]:
        assert sigma.graph_distance(x, y) == 1


def test_gates_on_hexagon(hexagon):
    _, sigma = hexagon
    x = sigma.chambers[0]
    top = (0, 0, 0)
    assert sigma.gate(x, top) == x
    for e in sigma.edges:
        verts = sigma.vertex_set(e)
        g = sigma.gate(x, e)
        if x in verts:
            assert g == x
        assert sigma.gate_by_distance(x, e) == [g]
    far = [e for e in sigma.edges if min(sigma.graph_distance(x, v) for v in sigma.vertex_set(e)) == 2]
    assert far
    for e in far:
        assert sigma.graph_distance(x, sigma.gate(x, e)) == 2


def test_gate_face_of_subface(hexagon):
    _, sigma = hexagon
    for e in sigma.edges:
        for v in sigma.vertex_set(e):
            assert sigma.gate_face(v, e) == v
        assert sigma.gate_face(e, (0, 0, 0)) == e


def test_explicit_arrangement_witnesses():
    arr = Arrangement.explicit([[1, 0], [0, 1], [1, 1]])
    assert arr.verify_witnesses()
    assert len([s for s, d in arr.faces.items() if d == 0]) == 6


def test_single_hyperplane_salvetti_is_a_circle():
    arr = Arrangement.explicit([[1]])
    sal = arr.face_complex().salvetti()
    assert sal.counts() == [2, 2]
    ends = {sal.edge_ends(e) for e in sal.cells_of_dim(1)}
    assert len(ends) == 2 and all(a != b for a, b in ends)


def test_salvetti_counts_for_hexagon(hexagon):
    _, sigma = hexagon
    assert sigma.salvetti().counts() == [6, 12, 6]


def test_collapse(hexagon):
    arr, sigma = hexagon
    same, kappa = sigma.collapse([0, 1, 2])
    assert all(kappa(c) == c for c in sigma.cells)
    square, kappa = sigma.collapse([0, 1])
    assert [len(square.cells_of_dim(d)) for d in range(3)] == [4, 4, 1]
    for e in sigma.edges:
        image = kappa(e)
        assert image in square.dim
        if e[2] == 0:
            assert square.dim[image] == 0
    point, kappa = sigma.collapse([])
    assert point.cells == [()]


def test_decone_three_lines():
    arr = Arrangement.explicit([[1, 0], [0, 1], [1, 1]])
    sub = arr.decone(0).face_complex()
    assert len(sub.chambers) == 3
    assert len(sub.edges) == 2
    arr, _ = sigma_of("ab", [3])
    refl = arr.decone(0).face_complex()
    assert (len(refl.chambers), len(refl.edges)) == (3, 2)


def test_decone_needs_central():
    arr = Arrangement.explicit([[1, 0], [0, 1]], [1, 0])
    with pytest.raises(NotCentral):
        arr.decone(0)


def test_ell_segments_on_two_cell_boundaries(hexagon):
    _, sigma = hexagon
    sal = sigma.salvetti()
    for cell in sal.two_cells:
        loop = sal.two_cell_boundary(cell)
        assert sal.path_is_connected(loop)
        for ell in range(3):
            assert sal.ell_segments(loop, ell) == 2
    assert sal.ell_segments([], 0) == 0


def test_delta_word_is_a_loop(hexagon):
    _, sigma = hexagon
    sal = sigma.salvetti()
    for x in sigma.chambers:
        loop = sal.delta_word(x)
        assert len(loop) == 6
        assert sal.path_is_connected(loop)
        assert sal.step(*loop[0])[0] == x == sal.step(*loop[-1])[1]


def test_retraction_to_edge_has_zero_winding(hexagon):
    _, sigma = hexagon
    sal = sigma.salvetti()
    for cell, e in itertools.product(sal.two_cells, sigma.edges):
        image = sal.retract_path(e, sal.two_cell_boundary(cell))
        assert sal.winding(image) == 0
