import itertools
import math

import pytest
from hypothesis import given, strategies as st

from barcode_strata.errors import SizeMismatchError, StrataError
from barcode_strata.permutations import (
    Permutation, act_on_vector, all_permutations, compose, descents, inverse, inversions,
)

P = Permutation.parse


@st.composite
def perms(draw, n=None):
    n = draw(st.integers(1, 8)) if n is None else n
    return Permutation(tuple(draw(st.permutations(range(1, n + 1)))))


@st.composite
def same_size(draw, k):
    n = draw(st.integers(1, 8))
    return [draw(perms(n)) for _ in range(k)]


def test_compose_examples():
    assert compose(Permutation.identity(3), P("231")) == P("231")
    assert compose(P("4213"), P("1342")) == P("4132")
    assert compose(P("21"), P("21")) == P("12")
    assert P("4213") * P("1342") == P("4132")


def test_compose_size_mismatch():
    with pytest.raises(SizeMismatchError):
        compose(P("12"), P("123"))


def test_inverse_examples():
    assert inverse(Permutation.identity(5)) == Permutation.identity(5)
    assert inverse(P("3241")) == P("4213")
    assert inverse(P("231")) == P("312")


def test_inverse_by_search():
    # tau^{-1}(i) = j iff tau(j) = i
    for p in all_permutations(4):
        q = p.inverse()
        for i in range(1, 5):
            assert p(q(i)) == i
            assert q(p(i)) == i


def test_act_on_vector_examples():
    v = ["v1", "v2", "v3"]
    assert act_on_vector(Permutation.transposition(3, 1, 2), v) == ["v2", "v1", "v3"]
    assert act_on_vector(Permutation.identity(3), [1.5, 2.5, 0.5]) == [1.5, 2.5, 0.5]
    assert act_on_vector(P("231"), [10, 20, 30]) == [30, 10, 20]
    with pytest.raises(SizeMismatchError):
        act_on_vector(P("21"), [1, 2, 3])


@pytest.mark.parametrize("word,inv,des", [("1234", 0, 0), ("4132", 4, 2), ("54321", 10, 4)])
def test_statistics(word, inv, des):
    p = P(word)
    assert inversions(p) == inv
    assert descents(p) == des


def test_reverse_is_maximal():
    for n in range(1, 8):
        w = Permutation(tuple(range(n, 0, -1)))
        assert inversions(w) == n * (n - 1) // 2
        assert descents(w) == max(n - 1, 0)


def test_invalid_permutations():
    with pytest.raises(StrataError):
        Permutation((1, 1, 2))
    with pytest.raises(StrataError):
        Permutation(())
    with pytest.raises(StrataError):
        Permutation.adjacent(3, 3)


def test_parse_forms():
    assert P("[4132]") == P("4,1,3,2") == Permutation((4, 1, 3, 2))
    assert str(P("4132")) == "[4132]"
    assert Permutation.adjacent(4, 2) == P("1324")


def test_all_permutations_lexicographic():
    words = [p.images for p in all_permutations(4)]
    assert words == sorted(words)
    assert len(set(words)) == math.factorial(4)


@given(same_size(3))
def test_group_axioms(ps):
    a, b, c = ps
    e = Permutation.identity(a.n)
    assert (a * b) * c == a * (b * c)
    assert a * e == a == e * a
    assert a * a.inverse() == e == a.inverse() * a


@given(same_size(2), st.data())
def test_action_is_a_group_action(ps, data):
    g, h = ps
    x = data.draw(st.lists(st.floats(-1e6, 1e6), min_size=g.n, max_size=g.n))
    assert act_on_vector(g * h, x) == act_on_vector(g, act_on_vector(h, x))


@given(same_size(1), st.data())
def test_action_preserves_multiset_norm_sum(ps, data):
    (g,) = ps
    x = data.draw(st.lists(st.floats(-1e6, 1e6), min_size=g.n, max_size=g.n))
    y = act_on_vector(g, x)
    assert sorted(y) == sorted(x)
    assert math.fsum(v * v for v in y) == math.fsum(v * v for v in x)
    assert math.fsum(y) == math.fsum(x)
    assert act_on_vector(g, [1.0] * g.n) == [1.0] * g.n


def test_inversions_matches_pair_count():
    for p in all_permutations(5):
        w = p.images
        assert inversions(p) == sum(
            1 for i, j in itertools.combinations(range(5), 2) if w[i] > w[j])
