import math
import random

import pytest
from hypothesis import assume, given, strategies as st

from barcode_strata.coordinates import (
    ConeCoordinates, decompose, direction, face_of, project, reconstruct, sorting_order,
)
from barcode_strata.coxeter import Coset, ParabolicSubgroup
from barcode_strata.errors import DegenerateError, StrataError
from barcode_strata.permutations import Permutation, act_on_vector

import oracles

vectors = st.integers(2, 8).flatmap(
    lambda n: st.lists(
        st.one_of(st.floats(-1e3, 1e3, allow_nan=False), st.integers(-3, 3).map(float)),
        min_size=n, max_size=n))


def test_project_examples():
    assert project((1, 1, 1)) == (1.0, 0.0)
    m, r = project((1, 2, 4, 4))
    assert m == 2.75 and r == pytest.approx(math.sqrt(6.75), abs=1e-15)
    m, r = project((0, 2))
    assert m == 1.0 and r == pytest.approx(math.sqrt(2), abs=1e-15)
    with pytest.raises(StrataError):
        project((1,))


def test_direction_examples():
    assert direction((0, 2)) == pytest.approx((-1 / math.sqrt(2), 1 / math.sqrt(2)), abs=1e-15)
    with pytest.raises(DegenerateError, match="degenerate"):
        direction((1, 1, 1))
    expected = [v / math.sqrt(6.75) for v in (-1.75, -0.75, 1.25, 1.25)]
    assert direction((1, 2, 4, 4)) == pytest.approx(expected, abs=1e-15)


def test_face_of_examples():
    assert face_of((3.0, 1.0, 2.0)) == Coset(Permutation.parse("231"), ParabolicSubgroup(3))
    f = face_of((1, 1, 2))
    assert f.rep == Permutation.parse("123") and f.subgroup.generators == {1}
    assert set(p.images for p in f.elements()) == {(1, 2, 3), (2, 1, 3)}
    g = face_of((5, 5, 5))
    assert g.subgroup == ParabolicSubgroup.full(3) and g.dim == -1


def test_example_reflection():
    # v_2 < v_3 < v_1 lies in [231]; the reflection (12) moves it to [132]
    v = (3.0, 1.0, 2.0)
    gamma = Permutation.transposition(3, 1, 2)
    assert face_of(v).rep == Permutation.parse("231")
    assert face_of(act_on_vector(gamma, v)).rep == Permutation.parse("132")


def test_reconstruct_examples():
    assert reconstruct(ConeCoordinates(1.0, 0.0), n=3) == [1.0, 1.0, 1.0]
    c = ConeCoordinates(0.0, math.sqrt(2), (-1 / math.sqrt(2), 1 / math.sqrt(2)),
                        Coset(Permutation.identity(2), ParabolicSubgroup(2)))
    assert reconstruct(c) == pytest.approx([-1.0, 1.0], abs=1e-15)
    assert reconstruct(decompose((1, 2, 4, 4))) == pytest.approx([1, 2, 4, 4], abs=1e-12)


def test_cone_coordinates_validation():
    face = Coset(Permutation.identity(2), ParabolicSubgroup(2))
    with pytest.raises(StrataError):
        ConeCoordinates(0.0, 1.0)
    with pytest.raises(StrataError):
        ConeCoordinates(0.0, 1.0, (0.6, 0.8), face)
    with pytest.raises(StrataError):
        ConeCoordinates(0.0, 1.0, (2 ** -0.5, -(2 ** -0.5)), face)  # wrong order for face
    with pytest.raises(StrataError):
        ConeCoordinates(0.0, -1.0)


def test_face_of_matches_sorting_set():
    rng = random.Random(5)
    for _ in range(300):
        n = rng.randint(1, 5)
        x = [float(rng.randrange(3)) for _ in range(n)]
        f = face_of(x)
        assert set(p.images for p in f.elements()) == oracles.sorting_set(x)


def test_tolerance_merges_single_linkage():
    x = (0.0, 0.3, 0.15, 2.0)
    assert face_of(x).subgroup.is_trivial()
    f = face_of(x, tol=0.2)
    assert f.subgroup.generators == {1, 2}
    assert f.rep == Permutation.parse("1234")
    order, ties = sorting_order(x, tol=0.2)
    assert ties == {1, 2}
    with pytest.raises(StrataError):
        face_of(x, tol=-1)


@given(vectors, st.data())
def test_equivariance(x, data):
    n = len(x)
    gamma = Permutation(tuple(data.draw(st.permutations(range(1, n + 1)))))
    gx = act_on_vector(gamma, x)
    assert project(gx) == project(x)
    f, gf = face_of(x), face_of(gx)
    assert gf == f.left_multiply(gamma)
    assert gamma * f.rep in gf
    if len(set(x)) > 1:
        assert direction(gx) == tuple(act_on_vector(gamma, direction(x)))


@given(vectors)
def test_round_trip(x):
    assume(len(set(x)) > 1)
    c = decompose(x)
    y = reconstruct(c)
    assert max(abs(a - b) for a, b in zip(x, y)) <= 1e-12 * max(1.0, max(map(abs, x)))
    assert abs(math.fsum(c.direction)) <= 1e-12
    assert abs(math.sqrt(math.fsum(v * v for v in c.direction)) - 1) <= 1e-12


@given(vectors)
def test_trivial_face_iff_distinct(x):
    assert face_of(x).subgroup.is_trivial() == (len(set(x)) == len(x))


@given(vectors, st.floats(0.01, 100), st.floats(-100, 100))
def test_scale_and_shift_invariance(x, lam, mu):
    y = [lam * v + mu for v in x]
    assume(project(x)[1] >= 1e-3)
    assume(len(set(x)) == len(x) and len(set(y)) == len(y))
    assert direction(y) == pytest.approx(direction(x), abs=1e-9)
    assert face_of(y) == face_of(x)


def test_tiny_spread_is_not_degenerate():
    x = [0.0, 1e-242]
    mean, radius = project(x)
    assert radius > 0
    assert direction(x) == pytest.approx((-math.sqrt(0.5), math.sqrt(0.5)), abs=1e-15)
    assert reconstruct(decompose(x))[1] == pytest.approx(1e-242, rel=1e-12)
