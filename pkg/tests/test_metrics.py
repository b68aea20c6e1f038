import math
import random

import numpy as np
import pytest

from barcode_strata.barcode import Barcode
from barcode_strata.errors import EnumerationCapError, SizeMismatchError, StrataError
from barcode_strata.metrics import (
    brute_force, cost_matrix, distance, distance_matrix, modified_bottleneck,
    modified_wasserstein, objective, quotient_distance,
)
from barcode_strata.permutations import Permutation

from conftest import random_barcode


def shuffled(B, rng):
    return B.reindex(Permutation(tuple(rng.sample(range(1, B.n + 1), B.n))))


def test_single_bar_examples(kernels):
    A, B = Barcode(((0, 1),)), Barcode(((2, 5),))
    assert modified_bottleneck(A, B).distance == 4.0
    assert modified_wasserstein(A, B).distance == pytest.approx(math.sqrt(20), rel=1e-15)


def test_self_distance_zero(kernels, tied_barcode):
    for metric in ("bottleneck", "wasserstein"):
        res = distance(tied_barcode, tied_barcode, metric)
        assert res.distance == 0.0
        assert res.matching == Permutation.identity(4)


def test_ties_pick_lexicographically_smallest(kernels):
    B = Barcode(((0, 1),) * 3)
    assert distance(B, B, "bottleneck").matching == Permutation.identity(3)
    assert distance(B, B, "wasserstein").matching == Permutation.identity(3)


def test_metric_aliases():
    A, B = Barcode(((0, 1), (1, 3))), Barcode(((0, 2), (2, 3)))
    assert distance(A, B, "linf") == distance(A, B, "bottleneck")
    with pytest.raises(StrataError):
        distance(A, B, "l3")


def test_size_mismatch():
    with pytest.raises(SizeMismatchError):
        distance(Barcode(((0, 1),)), Barcode(((0, 1), (0, 2))))


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6])
def test_against_brute_force(kernels, n):
    rng = random.Random(n)
    for _ in range(40):
        pool = rng.choice([None, 3])
        A, B = random_barcode(rng, n, pool), random_barcode(rng, n, pool)
        bf = brute_force(A, B, "bottleneck")
        res = modified_bottleneck(A, B)
        assert res.distance == bf.distance
        assert res.matching == bf.matching
        assert objective(A, B, res.matching, "bottleneck") == res.distance
        bw = brute_force(A, B, "wasserstein")
        rw = modified_wasserstein(A, B)
        assert abs(rw.distance - bw.distance) <= 1e-9 * max(1.0, bw.distance)
        assert objective(A, B, rw.matching, "wasserstein") == rw.distance


@pytest.mark.parametrize("n", [1, 3, 5, 7])
def test_matches_quotient_distance(n):
    rng = random.Random(100 + n)
    for _ in range(20):
        A, B = random_barcode(rng, n), random_barcode(rng, n)
        assert modified_bottleneck(A, B).distance == quotient_distance(A, B, "linf")
        l2 = quotient_distance(A, B, "l2")
        assert abs(modified_wasserstein(A, B).distance - l2) <= 1e-9 * max(1.0, l2)


def test_bottleneck_value_is_a_candidate_cost():
    rng = random.Random(5)
    for _ in range(50):
        n = rng.randint(1, 8)
        A, B = random_barcode(rng, n), random_barcode(rng, n)
        assert modified_bottleneck(A, B).distance in set(cost_matrix(A, B).ravel().tolist())


def test_indexing_invariance():
    rng = random.Random(6)
    for _ in range(100):
        n = rng.randint(1, 8)
        A, B = random_barcode(rng, n), random_barcode(rng, n)
        A2, B2 = shuffled(A, rng), shuffled(B, rng)
        assert modified_bottleneck(A, B).distance == modified_bottleneck(A2, B2).distance
        w, w2 = modified_wasserstein(A, B).distance, modified_wasserstein(A2, B2).distance
        assert abs(w - w2) <= 1e-9 * max(1.0, w)


def test_metric_axioms():
    rng = random.Random(8)
    for _ in range(200):
        n = rng.randint(1, 6)
        pool = rng.choice([None, 3])
        A, B, C = (random_barcode(rng, n, pool) for _ in range(3))
        for metric in ("bottleneck", "wasserstein"):
            ab = distance(A, B, metric).distance
            assert ab >= 0
            assert abs(ab - distance(B, A, metric).distance) <= 1e-9 * max(1.0, ab)
            assert ab <= distance(A, C, metric).distance + distance(C, B, metric).distance + 1e-9
            if ab == 0:
                assert A.same_multiset(B)
            if A.same_multiset(B):
                assert ab <= 1e-12


def test_not_the_diagonal_bottleneck():
    # ordinary bottleneck could match both bars to the diagonal at cost 0.05
    A = Barcode(((0.0, 0.1), (10.0, 11.0)))
    B = Barcode(((5.0, 5.1), (10.0, 11.0)))
    assert modified_bottleneck(A, B).distance == 5.0


def test_brute_force_cap():
    B = Barcode(((0, 1),) * 9)
    with pytest.raises(EnumerationCapError):
        brute_force(B, B)
    with pytest.raises(EnumerationCapError):
        quotient_distance(B, B)
    assert distance(B, B).distance == 0.0


def test_distance_matrix():
    rng = random.Random(9)
    bars = [random_barcode(rng, 4) for _ in range(5)]
    M = distance_matrix(bars, "wasserstein")
    assert M.shape == (5, 5)
    assert np.all(np.diag(M) == 0) and np.array_equal(M, M.T)
    assert M[1, 3] == distance(bars[1], bars[3], "wasserstein").distance
    assert distance_matrix([]).shape == (0, 0)
    with pytest.raises(SizeMismatchError):
        distance_matrix([Barcode(((0, 1),)), Barcode(((0, 1), (1, 2)))])


def test_larger_instance_runs(kernels):
    rng = random.Random(12)
    A, B = random_barcode(rng, 60), random_barcode(rng, 60)
    res = modified_bottleneck(A, B)
    assert objective(A, B, res.matching) == res.distance
    rw = modified_wasserstein(A, B)
    assert objective(A, B, rw.matching, "wasserstein") == rw.distance
