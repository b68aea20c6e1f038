"""
Coxeter-complex coordinates on R^n.

A vector x splits orthogonally as ``mean * (1, ..., 1) + v`` with v summing
to zero. The pair (mean, |v|) is the projection ``project``; for x off the
diagonal line, ``direction`` is the unit vector v/|v| (a point of the unit
sphere in the sum-zero hyperplane, which the reflection hyperplanes
x_i = x_j triangulate as the Coxeter complex of S_n). ``face_of`` names the
lowest-dimensional simplex containing that point: the coset of sorting
permutations of x.

``radius`` is the plain l2 norm of the deviations, with no 1/n or 1/(n-1)
normalisation, so it is sqrt(n) times the population standard deviation.

Sums go through ``math.fsum`` so that permuting the coordinates never
changes the mean or the radius, not even in the last bit.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .coxeter import Coset, ParabolicSubgroup
from .errors import DegenerateError, SizeMismatchError, StrataError
from .permutations import Permutation

__all__ = [
    "ConeCoordinates", "project", "direction", "face_of", "sorting_order",
    "decompose", "reconstruct", "tie_generators",
]

UNIT_TOL = 1e-12


def _as_floats(x: Sequence[float]) -> list[float]:
    out = [float(v) for v in x]
    if not all(math.isfinite(v) for v in out):
        raise StrataError("coordinates must be finite")
    return out


def mean_and_radius(x: Sequence[float]) -> tuple[float, float]:
    """Like ``project`` but defined for n = 1 as well."""
    x = _as_floats(x)
    n = len(x)
    if n == 0:
        raise StrataError("empty vector")
    mean = math.fsum(x) / n
    if all(v == x[0] for v in x):
        return mean, 0.0
    dev = [v - mean for v in x]
    # scale before squaring so tiny spreads do not underflow to zero
    scale = max(abs(v) for v in dev)
    return mean, scale * math.sqrt(math.fsum((v / scale) ** 2 for v in dev))


def project(x: Sequence[float]) -> tuple[float, float]:
    """``(mean, radius)`` of x; radius is 0 exactly when all coordinates are equal."""
    if len(x) < 2:
        raise StrataError(f"project needs n >= 2, got n = {len(x)}")
    return mean_and_radius(x)


def direction(x: Sequence[float]) -> tuple[float, ...]:
    mean, radius = project(x)
    if radius == 0.0:
        raise DegenerateError("degenerate: all coordinates equal, direction undefined")
    x = _as_floats(x)
    scale = max(abs(v - mean) for v in x)
    d = [((v - mean) / scale) / (radius / scale) for v in x]
    # a rounded mean shifts every entry by the same amount; undo it
    shift = math.fsum(d) / len(d)
    d = [v - shift for v in d]
    norm = math.sqrt(math.fsum(v * v for v in d))
    return tuple(v / norm for v in d)


def sorting_order(x: Sequence[float], tol: float = 0.0) -> tuple[list[int], set[int]]:
    """Canonical sorting permutation and tie positions of x.

    Returns ``(order, ties)``: ``order`` is 0-based with x[order[0]] <= x[order[1]] <= ...,
    ties broken by original index, and ``ties`` holds the 1-based positions i
    with x[order[i-1]] tied to x[order[i]]. With ``tol > 0`` neighbours in
    sorted order closer than ``tol`` are chained into one tie group (single
    linkage) and each group is listed by increasing index.
    """
    if tol < 0:
        raise StrataError(f"tolerance must be >= 0, got {tol}")
    order = sorted(range(len(x)), key=lambda i: (x[i], i))
    ties = set()
    for pos in range(1, len(order)):
        if x[order[pos]] - x[order[pos - 1]] <= tol:
            ties.add(pos)
    if tol > 0 and ties:
        start = 0
        for pos in range(1, len(order) + 1):
            if pos == len(order) or pos not in ties:
                order[start:pos] = sorted(order[start:pos])
                start = pos
    return order, ties


def tie_generators(x: Sequence[float], tol: float = 0.0) -> frozenset[int]:
    return frozenset(sorting_order(x, tol)[1])


def face_of(x: Sequence[float], tol: float = 0.0) -> Coset:
    """The coset of all rho with x_rho(1) <= ... <= x_rho(n).

    For x on the diagonal line this is the whole group (the (-1)-face).
    """
    x = _as_floats(x)
    if not x:
        raise StrataError("empty vector")
    order, ties = sorting_order(x, tol)
    P = ParabolicSubgroup(len(x), frozenset(ties))
    return Coset(Permutation.from_zero_based(order), P)


@dataclass(frozen=True)
class ConeCoordinates:
    mean: float
    radius: float
    direction: tuple[float, ...] | None = None
    face: Coset | None = None

    def __post_init__(self):
        if not self.radius >= 0:
            raise StrataError(f"radius must be >= 0, got {self.radius}")
        absent = (self.radius == 0, self.direction is None, self.face is None)
        if len(set(absent)) != 1:
            raise StrataError("radius = 0, missing direction and missing face must coincide")
        if self.direction is not None:
            d = self.direction
            if len(d) != self.face.n:
                raise SizeMismatchError("direction and face have different n")
            if abs(math.sqrt(math.fsum(v * v for v in d)) - 1.0) > UNIT_TOL:
                raise StrataError("direction is not a unit vector")
            if abs(math.fsum(d)) > UNIT_TOL:
                raise StrataError("direction does not sum to zero")
            rho = self.face.rep.images
            gens = self.face.subgroup.generators
            for i in range(1, len(d)):
                a, b = d[rho[i - 1] - 1], d[rho[i] - 1]
                if (a == b) != (i in gens) or a > b:
                    raise StrataError("face does not match the ordering of direction")

    def to_json(self) -> dict:
        out = {"mean": self.mean, "radius": self.radius}
        if self.direction is not None:
            out["direction"] = list(self.direction)
            out["face"] = self.face.to_json()
        return out


def decompose(x: Sequence[float]) -> ConeCoordinates:
    mean, radius = project(x)
    if radius == 0.0:
        return ConeCoordinates(mean, 0.0)
    d = direction(x)
    return ConeCoordinates(mean, radius, d, face_of(d))


def reconstruct(c: ConeCoordinates, n: int | None = None) -> list[float]:
    """Inverse of ``decompose``: ``mean * e + radius * direction``.

    ``n`` is only needed when the direction is absent.
    """
    if c.direction is None:
        if n is None:
            raise StrataError("n is required to reconstruct a point on the diagonal")
        return [c.mean] * n
    if n is not None and n != len(c.direction):
        raise SizeMismatchError(f"n = {n} but the direction has length {len(c.direction)}")
    return [c.mean + c.radius * v for v in c.direction]
