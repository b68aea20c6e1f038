"""
Modified bottleneck and Wasserstein distances between barcodes with the
same number of bars.

Unlike the classical distances, bars are never matched to the diagonal:
a matching is a permutation gamma pairing bar i of B with bar gamma(i) of
B'. The bottleneck cost is the largest l-infinity displacement; the
Wasserstein cost is the l2 norm of the vector of l2 displacements,
``sqrt(sum_i |(b_i, d_i) - (b'_gamma(i), d'_gamma(i))|_2^2)``.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from . import config
from ._backend import BACKEND, kernels
from .barcode import Barcode
from .errors import EnumerationCapError, SizeMismatchError, StrataError
from .permutations import Permutation

__all__ = [
    "MatchingResult", "modified_bottleneck", "modified_wasserstein",
    "quotient_distance", "brute_force", "distance_matrix", "objective",
    "cost_matrix", "distance", "BACKEND",
]

METRICS = ("bottleneck", "wasserstein")
NORMS = {"bottleneck": "linf", "wasserstein": "l2", "linf": "linf", "l2": "l2"}


@dataclass(frozen=True)
class MatchingResult:
    distance: float
    matching: Permutation
    metric: str

    def to_json(self) -> dict:
        return {"metric": self.metric, "distance": self.distance,
                "matching": self.matching.to_list()}


def _norm(metric: str) -> str:
    try:
        return NORMS[metric]
    except KeyError:
        raise StrataError(f"unknown metric {metric!r}; use bottleneck/linf or wasserstein/l2") from None


def _arrays(B: Barcode, other: Barcode) -> tuple[np.ndarray, np.ndarray]:
    if B.n != other.n:
        raise SizeMismatchError(
            f"modified distances need equal bar counts, got {B.n} and {other.n}")
    return np.asarray(B.bars, dtype=float), np.asarray(other.bars, dtype=float)


def cost_matrix(B: Barcode, other: Barcode, metric: str = "bottleneck") -> np.ndarray:
    """Pairwise bar costs: l-infinity distance, or squared l2 distance for Wasserstein."""
    x, y = _arrays(B, other)
    db = np.abs(x[:, None, 0] - y[None, :, 0])
    dd = np.abs(x[:, None, 1] - y[None, :, 1])
    if _norm(metric) == "linf":
        return np.maximum(db, dd)
    return db * db + dd * dd


def objective(B: Barcode, other: Barcode, gamma: Permutation, metric: str = "bottleneck") -> float:
    """Cost of the matching bar i -> bar gamma(i)."""
    x, y = _arrays(B, other)
    terms = []
    for i, j in enumerate(gamma.zero_based()):
        db, dd = abs(x[i, 0] - y[j, 0]), abs(x[i, 1] - y[j, 1])
        terms.append(max(db, dd) if _norm(metric) == "linf" else db * db + dd * dd)
    if _norm(metric) == "linf":
        return float(max(terms))
    return math.sqrt(math.fsum(terms))


def modified_bottleneck(B: Barcode, other: Barcode) -> MatchingResult:
    """Exact min over matchings of the max l-infinity displacement.

    Threshold search over the n^2 pairwise costs with a bipartite perfect
    matching test; ties go to the lexicographically smallest matching.
    """
    C = cost_matrix(B, other, "bottleneck")
    value, assignment = kernels.bottleneck_assignment(C)
    return MatchingResult(float(value), Permutation.from_zero_based(assignment), "bottleneck")


def modified_wasserstein(B: Barcode, other: Barcode) -> MatchingResult:
    C = cost_matrix(B, other, "wasserstein")
    assignment = kernels.linear_assignment(C)
    value = math.sqrt(math.fsum(float(C[i, j]) for i, j in enumerate(assignment)))
    return MatchingResult(value, Permutation.from_zero_based(assignment), "wasserstein")


def distance(B: Barcode, other: Barcode, metric: str = "bottleneck") -> MatchingResult:
    if _norm(metric) == "linf":
        return modified_bottleneck(B, other)
    return modified_wasserstein(B, other)


def _check_enumerable(n: int) -> None:
    if n > config.BRUTE_FORCE_MAX_N:
        raise EnumerationCapError(
            f"exhaustive search over S_{n} refused (n > {config.BRUTE_FORCE_MAX_N})")


def _all_perms(n: int) -> np.ndarray:
    # rows in lexicographic order, so argmin picks the lexicographically first optimum
    return np.array(list(itertools.permutations(range(n))), dtype=np.intp).reshape(-1, n)


def brute_force(B: Barcode, other: Barcode, metric: str = "bottleneck") -> MatchingResult:
    """Exhaustive minimum over all n! matchings (n <= 8); test oracle."""
    x, y = _arrays(B, other)
    n = B.n
    _check_enumerable(n)
    perms = _all_perms(n)
    rows = np.arange(n)
    db = np.abs(x[rows, 0][None, :] - y[perms, 0])
    dd = np.abs(x[rows, 1][None, :] - y[perms, 1])
    norm = _norm(metric)
    if norm == "linf":
        scores = np.maximum(db, dd).max(axis=1)
    else:
        scores = (db * db + dd * dd).sum(axis=1)
    k = int(np.argmin(scores))
    gamma = Permutation.from_zero_based(perms[k].tolist())
    name = "bottleneck" if norm == "linf" else "wasserstein"
    return MatchingResult(objective(B, other, gamma, name), gamma, name)


def quotient_distance(B: Barcode, other: Barcode, norm: str = "linf") -> float:
    """Distance between S_n-orbits in R^n x R^n (n <= 8).

    B and B' become the points (b_1..b_n, d_1..d_n) of R^{2n}; the result
    is the min over gamma of the l-infinity (or l2) distance between the
    first point and gamma acting diagonally on the second.
    """
    x, y = _arrays(B, other)
    n = B.n
    _check_enumerable(n)
    norm = _norm(norm)
    point = np.concatenate([x[:, 0], x[:, 1]])
    perms = _all_perms(n)
    # (gamma . v)_k = v_{gamma^{-1}(k)}
    inv = np.argsort(perms, axis=1)
    moved = np.concatenate([y[inv, 0], y[inv, 1]], axis=1)
    diff = np.abs(point[None, :] - moved)
    if norm == "linf":
        return float(diff.max(axis=1).min())
    return float(math.sqrt(max(0.0, float((diff * diff).sum(axis=1).min()))))


def distance_matrix(barcodes: Sequence[Barcode], metric: str = "bottleneck") -> np.ndarray:
    """Symmetric matrix of pairwise modified distances with a zero diagonal."""
    if not barcodes:
        return np.zeros((0, 0))
    sizes = {B.n for B in barcodes}
    if len(sizes) > 1:
        raise SizeMismatchError(f"barcodes have different bar counts: {sorted(sizes)}")
    m = len(barcodes)
    out = np.zeros((m, m))
    for i in range(m):
        for j in range(i + 1, m):
            out[i, j] = out[j, i] = distance(barcodes[i], barcodes[j], metric).distance
    return out
