import pytest

from artin353.artin_complex import (
    NotDentable,
    artin_ball,
    check_cycle,
    cycle_to_words,
    dent,
    dentable_configurations,
    face_type,
    link_matches_subball,
    reverse_cycle,
    same_vertex,
    shortest_cycle_through,
    words_product,
)
from artin353.diagram import CoxeterDiagram
from artin353.garside import artin_group

I2_3 = CoxeterDiagram.linear("ab", [3])
H3 = CoxeterDiagram.linear("abc", [3, 5])


def test_radius_zero_is_one_edge():
    ball = artin_ball(I2_3, None, 0)
    assert len(ball.vertices) == 2 and len(ball.edges) == 1


def test_i2_3_ball_has_girth_six():
    assert artin_ball(I2_3, None, 4).girth() == 6


def test_h3_relative_ball_girth():
    assert artin_ball(H3, ["a", "b"], 3).girth() >= 6


def test_face_types_of_a_simplex_share_a_chamber():
    G = artin_group(H3)
    ball = artin_ball(G, None, 1)
    for _, ids in ball.chambers:
        if None in ids:
            continue
        faces = [face_type(G, ball.vertices[i]) for i in ids]
        common = frozenset.intersection(*(f.chambers(G) for f in faces))
        assert common


def test_identity_vertex_face_type():
    G = artin_group(H3)
    ball = artin_ball(G, None, 0)
    for v in ball.vertices:
        f = face_type(G, v)
        assert f.rep == 0
        assert 0 in f.chambers(G)


@pytest.fixture(scope="module")
def hexagon():
    G = artin_group(I2_3)
    ball = artin_ball(G, None, 3)
    ids = shortest_cycle_through(ball.graph(), 6)
    return G, ball.cycle(ids)


def test_cycle_to_words_multiplies_to_identity(hexagon):
    G, cyc = hexagon
    assert check_cycle(G, cyc)
    words = cycle_to_words(G, cyc)
    assert any(not w.is_identity() for w in words)
    assert words_product(G, words).is_identity()


def test_cycle_and_reverse(hexagon):
    G, cyc = hexagon
    back = reverse_cycle(cyc)
    assert check_cycle(G, back)
    assert words_product(G, cycle_to_words(G, back)).is_identity()
    assert same_vertex(G, back.vertices[0], cyc.vertices[0])


def test_links_match_smaller_complexes():
    assert link_matches_subball(H3, "a", 1)
    assert link_matches_subball(H3, "c", 1)


def test_dent_moves_one_vertex():
    G = artin_group(H3)
    configs = list(dentable_configurations(G, 1))
    assert configs
    for cyc in configs[:6]:
        out = dent(G, cyc, 1)
        assert len(out) == len(cyc)
        assert check_cycle(G, out, embedded=False)
        changed = [k for k in range(len(cyc)) if not same_vertex(G, cyc.vertices[k], out.vertices[k])]
        assert changed == [1]


def test_dent_rejects_wrong_types():
    G = artin_group(H3)
    cyc = next(iter(dentable_configurations(G, 0)))
    with pytest.raises(NotDentable):
        dent(G, cyc, 0)


def test_ball_exchange_records():
    ball = artin_ball(I2_3, None, 1)
    recs = ball.exchange_records()
    assert sum(r["dim"] == 0 for r in recs) == len(ball.vertices)
    assert all("type" in r["attrs"] for r in recs if r["dim"] == 0)
