import pytest

from artin353.coxeter import DivergedAtCutoff, coxeter_complex, enumerate_group, matrix_oracle
from artin353.diagram import INF, CoxeterDiagram


def lin(names, labels):
    return CoxeterDiagram.linear(names, labels)


@pytest.mark.parametrize("d, order", [(lin("abc", [3, 5]), 120), (lin("abc", [4, 3]), 48), (lin("ab", [5]), 10)])
def test_orders_match_matrix_oracle(d, order):
    W = enumerate_group(d)
    assert W.order == order
    assert matrix_oracle(d)["order"] == order


def test_infinite_dihedral_diverges():
    with pytest.raises(DivergedAtCutoff) as info:
        enumerate_group(lin("ab", [INF]), cutoff=100)
    assert info.value.count == 100


@pytest.mark.parametrize("d, count", [(lin("ab", [5]), 5), (lin("abc", [3, 5]), 15), (lin("a", []), 1)])
def test_reflection_counts(d, count):
    assert len(enumerate_group(d).reflections) == count


def test_h3_longest_length_equals_reflections():
    W = enumerate_group(lin("abc", [3, 5]))
    assert W.length[W.longest] == len(W.reflections) == 15


def test_weak_order():
    W = enumerate_group(lin("ab", [3]))
    a, b = W.gen("a"), W.gen("b")
    assert W.weak_meet(a, b) == 0
    j = W.weak_join(a, b)
    assert W.length[j] == 3 and j == W.longest
    assert W.weak_join(a, a) == a


def test_shortlex_words_and_inverse():
    W = enumerate_group(lin("ab", [3]))
    assert W.words[0] == ()
    for w in range(W.order):
        assert W.mul(w, W.inv[w]) == 0
        assert W.from_word(W.words[w]) == w


def test_chamber_sign_vectors():
    W = enumerate_group(lin("ab", [3]))
    assert set(W.chamber_sign_vector(0)) == {1}
    assert W.chamber_sign_vector(W.gen("a")).count(-1) == 1
    H = enumerate_group(lin("abc", [3, 5]))
    assert set(H.chamber_sign_vector(H.longest)) == {-1}


@pytest.mark.parametrize("m", [2, 3, 4, 5])
def test_coxeter_complex_of_dihedral_is_cycle(m):
    cx = coxeter_complex(enumerate_group(lin("ab", [m])))
    g = cx.graph()
    assert len(cx.vertices) == 2 * m == g.number_of_edges()
    assert all(deg == 2 for _, deg in g.degree())


def test_coxeter_complex_rank_one_and_h3():
    assert len(coxeter_complex(enumerate_group(lin("a", []))).vertices) == 2
    h3 = coxeter_complex(enumerate_group(lin("abc", [3, 5])))
    assert h3.f_vector() == [62, 180, 120]
    assert h3.euler_characteristic() == 2


def test_table_dump_is_deterministic():
    d = lin("abc", [4, 3])
    assert enumerate_group(d).table_dump() == enumerate_group(d).table_dump()
