import itertools

import pytest

from artin353.bestvina import (
    a2_window,
    b_geodesic,
    check_an_like,
    check_convexity_consequences,
    criterion_paths,
    deligne_normal_form,
    half_plane,
    interval,
    interval_meet,
    intersection_connected,
    is_lattice,
    is_normal_form,
    lift,
    local_criterion,
    locally_b_convex,
    phi,
    WindowTooSmall,
)


@pytest.fixture(scope="module")
def X():
    return a2_window(3)


def test_radius_one_window():
    W = a2_window(1)
    assert len(W.complex.vertices) == 7
    assert sum(1 for f in W.complex.maximal() if len(f) == 3) == 6
    assert W.core == {"v0_0"}


def test_window_is_an_like(X):
    assert check_an_like(X)
    assert check_an_like(X.reversed())


def test_intervals_are_lattices(X):
    for x in sorted(X.core, key=repr):
        u = lift(X, x)
        p = interval(X, u)
        assert len(p.elements) == len(X.link(x)) + 2
        assert is_lattice(p)


def test_interval_meet_trivial_cases(X):
    u = lift(X, "v0_0")
    top = phi(u)
    assert interval_meet(X, u, top, u) == u
    assert interval_meet(X, u, top, top) == top


def test_normal_form_of_phi_translate(X):
    u = lift(X, "v0_0")
    nf = deligne_normal_form(X, u, phi(u))
    assert nf.l == 1 and nf.sign == 1 and len(nf.vertices) == 2
    assert is_normal_form(X, nf)
    back = deligne_normal_form(X, u, phi(u, -1))
    assert back.sign == -1 and is_normal_form(X, back)


def test_normal_form_of_adjacent_pair(X):
    a = "v0_0"
    for b in sorted(X.link(a)):
        nf = deligne_normal_form(X, lift(X, a), lift(X, b))
        assert nf.l == 2 and is_normal_form(X, nf)
        assert b_geodesic(X, a, b) == [a, b]


def test_trivial_geodesic(X):
    assert b_geodesic(X, "v0_0", "v0_0") == ["v0_0"]


def test_geodesics_satisfy_local_criterion(X):
    core = sorted(X.core)
    for a, b in itertools.combinations(core, 2):
        path = b_geodesic(X, a, b)
        assert path[0] == a and path[-1] == b
        assert all(X.adjacent(x, y) for x, y in zip(path, path[1:]))
        assert local_criterion(X, path)


def test_backtrack_fails_local_criterion(X):
    assert not local_criterion(X, ["v0_0", "v1_0", "v0_0"])


def test_geodesic_outside_core_raises(X):
    with pytest.raises(WindowTooSmall):
        b_geodesic(X, "v0_0", "v3_0")


def test_criterion_paths_in_window_report_boundary(X):
    found, unsure = criterion_paths(X, "v0_0", 4)
    assert found["v0_0"] == [["v0_0"]]
    assert unsure


def test_whole_window_and_point_are_convex(X):
    assert locally_b_convex(X, X.complex.vertices)
    assert locally_b_convex(X, {"v0_0"})


@pytest.mark.parametrize("direction", [0, 1, 2, 3, 4, 5])
def test_half_planes_are_convex(X, direction):
    Y = half_plane(X, direction, 0)
    rep = check_convexity_consequences(X, Y)
    assert rep.convex and rep.geodesics


def test_meet_missing_set_is_not_convex(X):
    a = "v0_0"
    failing = None
    for y1, y2 in itertools.combinations(sorted(X.link(a)), 2):
        z = X.meet_in_link(a, y1, y2)
        if z is not None and z not in (y1, y2):
            failing = {a, y1, y2}
            break
    assert failing is not None
    verdict = locally_b_convex(X, failing)
    assert verdict.failed and verdict.witness[0] == a


def test_orientation_matters(X):
    Y = {"v0_0", "v-1_0", "v0_1"}
    assert locally_b_convex(X, Y).failed
    assert locally_b_convex(X.reversed(), Y)
    Z = {"v0_0", "v-1_1", "v0_-1"}
    assert locally_b_convex(X, Z)
    assert locally_b_convex(X.reversed(), Z).failed


def test_intersections_of_half_planes_are_connected(X):
    H = [half_plane(X, d, 0) for d in range(6)]
    for Y1, Y2 in itertools.combinations(H, 2):
        assert intersection_connected(X, Y1, Y2)
    split = intersection_connected(X, {"v-3_0", "v3_0"}, X.complex.vertices)
    assert split.failed
