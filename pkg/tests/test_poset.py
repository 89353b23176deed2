import random

import pytest

from artin353.complexes import TypedComplex
from artin353.poset import (
    FinitePoset,
    NoBound,
    NotAPartialOrder,
    TypedOrderView,
    boolean_lattice,
    bowties,
    brute_force_join,
    flag_checks,
    is_bowtie_free,
    is_partial_order,
    join,
    meet,
    random_bowtie_free_poset,
)


def test_simplex_with_ordered_types_is_partial_order():
    cx = TypedComplex({"x": 0, "y": 1, "z": 2}, [("x", "y"), ("y", "z"), ("x", "z")])
    assert is_partial_order(TypedOrderView(cx, (0, 1, 2)))


def test_path_is_not_transitive():
    cx = TypedComplex({"x": 0, "y": 1, "z": 2}, [("x", "y"), ("y", "z")])
    v = is_partial_order(TypedOrderView(cx, (0, 1, 2)))
    assert v.failed and v.witness == ("x", "y", "z")


def test_uncertified_violation_is_indeterminate():
    cx = TypedComplex({"x": 0, "y": 1, "z": 2}, [("x", "y"), ("y", "z")])
    v = is_partial_order(TypedOrderView(cx, (0, 1, 2), frozenset({"x", "y"})))
    assert v.indeterminate


def bowtie_poset(with_middle: bool) -> FinitePoset:
    rel = [("x1", "y1"), ("x1", "y2"), ("x2", "y1"), ("x2", "y2")]
    elems = ["x1", "x2", "y1", "y2"]
    rank = {"x1": 0, "x2": 0, "y1": 2, "y2": 2}
    if with_middle:
        elems.append("z")
        rel += [("x1", "z"), ("x2", "z"), ("z", "y1"), ("z", "y2")]
        rank["z"] = 1
    return FinitePoset(elems, rel, rank)


def test_bowtie_detection():
    (b,) = bowties(bowtie_poset(False))
    assert not b.resolved
    assert not is_bowtie_free(bowtie_poset(False))
    assert is_bowtie_free(bowtie_poset(True))
    assert bowties(bowtie_poset(True))[0].centre == "z"


def test_square_face_poset_has_no_unresolved_bowtie():
    verts = ["v0", "v1", "v2", "v3"]
    edges = [f"e{i}" for i in range(4)]
    rel = [(verts[i], edges[i]) for i in range(4)] + [(verts[(i + 1) % 4], edges[i]) for i in range(4)]
    rel += [(e, "sq") for e in edges]
    p = FinitePoset(verts + edges + ["sq"], rel)
    assert is_bowtie_free(p)
    assert not any({b.x1, b.x2} == {"v0", "v2"} for b in bowties(p))


def test_join_examples():
    b3 = boolean_lattice(3)
    a, b = frozenset({0}), frozenset({1})
    assert join(b3, [a]) == a
    assert join(b3, [a, b]) == a | b
    assert meet(b3, [a | b, b | frozenset({2})]) == b


def test_join_without_bound():
    p = FinitePoset(["a", "b"], [], {"a": 0, "b": 0})
    with pytest.raises(NoBound):
        join(p, ["a", "b"])


def test_join_matches_brute_force_on_random_posets():
    rng = random.Random(7)
    for _ in range(30):
        p = random_bowtie_free_poset(rng, 9)
        for a in p.elements:
            for b in p.elements:
                if p.upper_bounds((a, b)):
                    assert join(p, (a, b)) == brute_force_join(p, (a, b))


def test_cyclic_relation_rejected():
    with pytest.raises(NotAPartialOrder):
        FinitePoset(["a", "b"], [("a", "b"), ("b", "a")])


def test_flag_checks():
    chain = FinitePoset("abc", [("a", "b"), ("b", "c")])
    assert all(flag_checks(chain).values())
    elems = ["x1", "x2", "x3", "t12", "t23", "t13"]
    rel = [("x1", "t12"), ("x2", "t12"), ("x2", "t23"), ("x3", "t23"), ("x1", "t13"), ("x3", "t13")]
    p = FinitePoset(elems, rel)
    flags = flag_checks(p)
    assert flags["upward_flag"].failed
    assert set(flags["upward_flag"].witness) == {"x1", "x2", "x3"}
    assert flags["weakly_upward_flag"]
