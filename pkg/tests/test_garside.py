import itertools

import pytest

from artin353.diagram import CoxeterDiagram
from artin353.garside import GarsideNormalForm, NotSpherical, RewritingOracle, artin_group, normal_form, parse_word

I2_3 = CoxeterDiagram.linear("ab", [3])


@pytest.fixture(scope="module")
def G():
    return artin_group(I2_3)


def simple(G, text):
    return G.W.from_word(text.split())


def test_aabb_normal_form(G):
    g = normal_form(I2_3, "a a b b")
    assert g.delta_power == 0
    assert g.simples == (simple(G, "a"), simple(G, "a b"), simple(G, "b"))


def test_delta_is_absorbed(G):
    assert normal_form(I2_3, "a b a") == GarsideNormalForm(1, ())
    assert normal_form(I2_3, "b a b") == GarsideNormalForm(1, ())


def test_inverse_pair_is_identity(G):
    assert normal_form(I2_3, "a A").is_identity()
    assert normal_form(I2_3, "a^-1 a").is_identity()


def test_group_axioms_on_short_words(G):
    letters = [(s, e) for s in range(2) for e in (1, -1)]
    words = [w for n in range(4) for w in itertools.product(letters, repeat=n)]
    for u in words[:40]:
        gu = G.from_word(u)
        assert G.mul(gu, G.inverse(gu)).is_identity()
        for v in words[:40]:
            assert G.mul(gu, G.from_word(v)) == G.from_word(list(u) + list(v))


def test_to_word_round_trip(G):
    g = normal_form(I2_3, "A b b a B a")
    assert G.from_word(G.to_word(g)) == g


def test_parabolic_membership(G):
    assert not G.parabolic_membership(normal_form(I2_3, "a b"), ["a"])
    assert G.parabolic_membership(normal_form(I2_3, "a a a"), ["a"])
    delta2 = GarsideNormalForm(2, ())
    assert G.parabolic_membership(delta2, ["a", "b"])
    assert not G.parabolic_membership(delta2, ["a"])


def test_delta_squared_is_central(G):
    delta2 = GarsideNormalForm(2, ())
    for s in ("a", "b"):
        x = G.generator(s)
        assert G.mul(delta2, x) == G.mul(x, delta2)


def test_rewriting_oracle_agrees_on_braid_relation():
    oracle = RewritingOracle(I2_3)
    assert oracle.equal([(0, 1), (1, 1), (0, 1)], [(1, 1), (0, 1), (1, 1)])
    assert not oracle.equal([(0, 1), (1, 1)], [(1, 1), (0, 1)])
    assert oracle.equal([(0, 1), (0, -1)], [])


def test_non_spherical_rejected():
    with pytest.raises(NotSpherical):
        artin_group(CoxeterDiagram.linear("abc", [3, 6]))


def test_parse_word_rejects_unknown_letters():
    with pytest.raises(ValueError):
        parse_word("a x", I2_3)


def test_format(G):
    assert G.format(G.identity) == "1"
    assert G.format(normal_form(I2_3, "a b a a")) == "D^1 (a)"
    assert G.format(normal_form(I2_3, "a a b a")) == "D^1 (b)"


def test_h3_normal_forms_left_weighted():
    d = CoxeterDiagram.linear("abc", [3, 5])
    H = artin_group(d)
    oracle = RewritingOracle(d)
    word = parse_word("a b C b a A c b B a c c", d)
    g = H.from_word(word)
    assert H.is_left_weighted(g)
    assert oracle.equal(H.to_word(g), word)
