"""
Standard parabolic subgroups of S_n, their cosets as faces of the Coxeter
complex, and marked double cosets ``(P_1, P_1 sigma P_2, P_2)``.

A parabolic subgroup is given by a set of indices ``T`` in ``{1, ..., n-1}``,
index i standing for the adjacent transposition (i, i+1). Maximal runs of
consecutive indices cut ``{1, ..., n}`` into blocks of consecutive positions,
and the subgroup is the product of the symmetric groups on those blocks.

Right cosets are never used: ``Coset`` is always the left coset ``tau P``,
whose elements are the ``tau * g`` for ``g`` in ``P`` (P permutes positions
of the one-line word of tau inside each block).
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from itertools import combinations, permutations
from math import factorial, prod
from typing import Iterable, Iterator

import networkx as nx

from . import config
from .errors import EnumerationCapError, SizeMismatchError, StrataError
from .permutations import Permutation, all_permutations

__all__ = [
    "ParabolicSubgroup", "Coset", "Face", "CoxeterComplex", "MarkedDoubleCoset",
    "parabolic_elements", "canonical_coset_rep", "canonical_double_coset_rep",
    "all_parabolics", "enumerate_complex", "chamber_graph",
]


@dataclass(frozen=True)
class ParabolicSubgroup:
    n: int
    generators: frozenset[int] = frozenset()

    def __post_init__(self):
        gens = frozenset(int(i) for i in self.generators)
        if self.n < 1:
            raise StrataError("n must be >= 1")
        bad = [i for i in gens if not 1 <= i <= self.n - 1]
        if bad:
            raise StrataError(f"generator indices {sorted(bad)} outside 1..{self.n - 1}")
        object.__setattr__(self, "generators", gens)

    @classmethod
    def trivial(cls, n: int) -> ParabolicSubgroup:
        return cls(n, frozenset())

    @classmethod
    def full(cls, n: int) -> ParabolicSubgroup:
        return cls(n, frozenset(range(1, n)))

    def blocks(self) -> list[tuple[int, int]]:
        """Blocks as inclusive 1-based position ranges ``(start, stop)``."""
        out = []
        start = 1
        for i in range(1, self.n):
            if i not in self.generators:
                out.append((start, i))
                start = i + 1
        out.append((start, self.n))
        return out

    def block_of(self) -> list[int]:
        """Block id of every position (0-based list)."""
        ids = []
        for b, (lo, hi) in enumerate(self.blocks()):
            ids.extend([b] * (hi - lo + 1))
        return ids

    def order(self) -> int:
        return prod(factorial(hi - lo + 1) for lo, hi in self.blocks())

    @property
    def rank(self) -> int:
        return len(self.generators)

    def is_trivial(self) -> bool:
        return not self.generators

    def issuperset(self, other: ParabolicSubgroup) -> bool:
        _check_n(self.n, other.n)
        return self.generators >= other.generators

    def __contains__(self, perm: Permutation) -> bool:
        if perm.n != self.n:
            return False
        ids = self.block_of()
        return all(ids[i] == ids[v - 1] for i, v in enumerate(perm.images))

    def generator_permutations(self) -> list[Permutation]:
        return [Permutation.adjacent(self.n, i) for i in sorted(self.generators)]

    def elements(self, cap: int | None = None) -> list[Permutation]:
        return parabolic_elements(self, cap)

    def sorted_generators(self) -> list[int]:
        return sorted(self.generators)

    def __str__(self) -> str:
        if not self.generators:
            return "<>"
        return "<" + ",".join(f"({i},{i + 1})" for i in sorted(self.generators)) + ">"


def _check_n(a: int, b: int) -> None:
    if a != b:
        raise SizeMismatchError(f"size mismatch: S_{a} vs S_{b}")


def all_parabolics(n: int) -> list[ParabolicSubgroup]:
    """All 2^(n-1) standard parabolic subgroups of S_n, by increasing rank."""
    idx = range(1, n)
    return [
        ParabolicSubgroup(n, frozenset(c))
        for k in range(n)
        for c in combinations(idx, k)
    ]


def parabolic_elements(P: ParabolicSubgroup, cap: int | None = None) -> list[Permutation]:
    """Closure of the generators of ``P`` under composition, sorted by one-line word."""
    cap = config.subgroup_cap() if cap is None else cap
    order = P.order()
    if order > cap:
        raise EnumerationCapError(f"|P| = {order} exceeds the enumeration cap {cap}")
    n = P.n
    start = tuple(range(1, n + 1))
    seen = {start}
    queue = deque([start])
    while queue:
        w = queue.popleft()
        for i in P.generators:
            v = list(w)
            v[i - 1], v[i] = v[i], v[i - 1]
            v = tuple(v)
            if v not in seen:
                seen.add(v)
                queue.append(v)
    return [Permutation(w) for w in sorted(seen)]


def canonical_coset_rep(tau: Permutation, P: ParabolicSubgroup) -> Permutation:
    """The block-increasing (equivalently minimal-length) element of ``tau P``."""
    _check_n(tau.n, P.n)
    images = list(tau.images)
    for lo, hi in P.blocks():
        if hi > lo:
            images[lo - 1:hi] = sorted(images[lo - 1:hi])
    return Permutation(tuple(images))


@dataclass(frozen=True)
class Coset:
    """The left coset ``rep * subgroup``; ``rep`` is normalised to the canonical member."""
    rep: Permutation
    subgroup: ParabolicSubgroup

    def __post_init__(self):
        object.__setattr__(self, "rep", canonical_coset_rep(self.rep, self.subgroup))

    @property
    def n(self) -> int:
        return self.rep.n

    @property
    def dim(self) -> int:
        return self.n - 2 - self.subgroup.rank

    def size(self) -> int:
        return self.subgroup.order()

    def __contains__(self, perm: Permutation) -> bool:
        if perm.n != self.n:
            return False
        return canonical_coset_rep(perm, self.subgroup) == self.rep

    def issuperset(self, other: Coset) -> bool:
        return self.subgroup.issuperset(other.subgroup) and other.rep in self

    def left_multiply(self, gamma: Permutation) -> Coset:
        return Coset(gamma * self.rep, self.subgroup)

    def elements(self, cap: int | None = None) -> list[Permutation]:
        return sorted((self.rep * g for g in self.subgroup.elements(cap)), key=lambda p: p.images)

    def to_json(self) -> dict:
        return {"rep": self.rep.to_list(), "generators": self.subgroup.sorted_generators()}


@dataclass(frozen=True)
class Face:
    coset: Coset

    @property
    def dim(self) -> int:
        return self.coset.dim

    def to_json(self) -> dict:
        return {**self.coset.to_json(), "dim": self.dim}


def _check_complex_n(n: int) -> None:
    if not 2 <= n <= config.COMPLEX_MAX_N:
        raise StrataError(f"n must be in 2..{config.COMPLEX_MAX_N}, got {n}")


@dataclass
class CoxeterComplex:
    """All faces of the Coxeter complex of S_n, including the (-1)-dimensional face."""
    n: int
    faces: list[Face]
    index: dict[Coset, int] = field(repr=False)

    def face_leq(self, f: Face | int, g: Face | int) -> bool:
        """``f <= g`` iff the coset of f contains the coset of g (f is a face of g)."""
        if isinstance(f, int):
            f = self.faces[f]
        if isinstance(g, int):
            g = self.faces[g]
        return f.coset.issuperset(g.coset)

    def relations(self) -> list[tuple[int, int]]:
        """All strict pairs ``(i, j)`` with ``faces[i] < faces[j]``."""
        out = []
        for j, g in enumerate(self.faces):
            rep, gens = g.coset.rep, g.coset.subgroup.generators
            free = [i for i in range(1, self.n) if i not in gens]
            for k in range(1, len(free) + 1):
                for extra in combinations(free, k):
                    bigger = Coset(rep, ParabolicSubgroup(self.n, gens | frozenset(extra)))
                    out.append((self.index[bigger], j))
        out.sort()
        return out

    def f_vector(self) -> dict[int, int]:
        counts: dict[int, int] = {}
        for f in self.faces:
            counts[f.dim] = counts.get(f.dim, 0) + 1
        return dict(sorted(counts.items()))

    def euler_characteristic(self) -> int:
        return sum((-1) ** d * c for d, c in self.f_vector().items() if d >= 0)

    def chambers(self) -> list[Face]:
        return [f for f in self.faces if f.dim == self.n - 2]

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "faces": [f.to_json() for f in self.faces],
            "relations": [list(r) for r in self.relations()],
        }


def enumerate_complex(n: int) -> CoxeterComplex:
    """Enumerate every coset tau P_T, T a subset of the simple reflections.

    Faces are ordered by decreasing dimension, then by generator set, then by
    canonical representative.
    """
    _check_complex_n(n)
    perms = list(all_permutations(n))
    faces = []
    for P in all_parabolics(n):
        reps = sorted({canonical_coset_rep(p, P) for p in perms}, key=lambda p: p.images)
        faces.extend(Face(Coset(r, P)) for r in reps)
    index = {f.coset: i for i, f in enumerate(faces)}
    return CoxeterComplex(n, faces, index)


def chamber_graph(n: int) -> nx.Graph:
    """Chambers of the complex, adjacent when they share a codimension-1 face.

    Nodes are Permutations (the canonical reps of the chambers).
    """
    _check_complex_n(n)
    graph = nx.Graph()
    by_facet: dict[Coset, list[Permutation]] = {}
    for rho in all_permutations(n):
        graph.add_node(rho)
        for i in range(1, n):
            facet = Coset(rho, ParabolicSubgroup(n, frozenset((i,))))
            by_facet.setdefault(facet, []).append(rho)
    for members in by_facet.values():
        for a, b in combinations(members, 2):
            graph.add_edge(a, b)
    return graph


def canonical_double_coset_rep(
    sigma: Permutation, left: ParabolicSubgroup, right: ParabolicSubgroup
) -> Permutation:
    """Minimal-length element of ``left * sigma * right``.

    Greedy descent: a left generator s_i swaps the values i and i+1, a right
    generator swaps positions i and i+1. Each applied move removes one
    inversion, and the fixed point (no left descent in ``left``, no right
    descent in ``right``) is the unique minimal element of the double coset.
    """
    _check_n(sigma.n, left.n)
    _check_n(sigma.n, right.n)
    w = list(sigma.images)
    pos = [0] * (len(w) + 1)
    for i, v in enumerate(w):
        pos[v] = i
    lgens = sorted(left.generators)
    rgens = sorted(right.generators)
    changed = True
    while changed:
        changed = False
        for i in lgens:
            if pos[i + 1] < pos[i]:
                a, b = pos[i], pos[i + 1]
                w[a], w[b] = i + 1, i
                pos[i], pos[i + 1] = b, a
                changed = True
        for j in rgens:
            if w[j - 1] > w[j]:
                w[j - 1], w[j] = w[j], w[j - 1]
                pos[w[j - 1]], pos[w[j]] = j - 1, j
                changed = True
    return Permutation(tuple(w))


@dataclass(frozen=True)
class MarkedDoubleCoset:
    """The triple ``(P_1, P_1 sigma P_2, P_2)``; ``rep`` is normalised to the minimal element.

    Two values are equal iff both parabolics and the double coset agree, even
    when different parabolics happen to produce the same set of permutations.
    """
    left: ParabolicSubgroup
    rep: Permutation
    right: ParabolicSubgroup

    def __post_init__(self):
        object.__setattr__(
            self, "rep", canonical_double_coset_rep(self.rep, self.left, self.right)
        )

    @property
    def n(self) -> int:
        return self.rep.n

    def __contains__(self, perm: Permutation) -> bool:
        if perm.n != self.n:
            return False
        return canonical_double_coset_rep(perm, self.left, self.right) == self.rep

    def enumeration_size_bound(self) -> int:
        return self.left.order() * self.right.order()

    def elements(self, cap: int | None = None) -> list[Permutation]:
        """Every ``g sigma h`` with g in P_1, h in P_2, deduplicated and sorted by one-line word."""
        cap = config.double_coset_cap() if cap is None else cap
        bound = self.enumeration_size_bound()
        if bound > cap:
            raise EnumerationCapError(
                f"|P_1|*|P_2| = {bound} exceeds the double coset enumeration cap {cap}"
            )
        big = max(cap, bound)
        lefts = [g.images for g in self.left.elements(big)]
        rights = [h.images for h in self.right.elements(big)]
        sigma = self.rep.images
        out = set()
        for h in rights:
            sh = [sigma[k - 1] for k in h]
            for g in lefts:
                out.add(tuple(g[v - 1] for v in sh))
        return [Permutation(w) for w in sorted(out)]

    def is_singleton(self) -> bool:
        return self.left.is_trivial() and self.right.is_trivial()

    def dim_pair(self) -> tuple[int, int]:
        """Dimensions of the two Coxeter-complex faces indexed by the parabolics."""
        return (self.n - 2 - self.left.rank, self.n - 2 - self.right.rank)

    def to_json(self) -> dict:
        return {
            "left_generators": self.left.sorted_generators(),
            "rep": self.rep.to_list(),
            "right_generators": self.right.sorted_generators(),
            "dim_pair": list(self.dim_pair()),
        }

    def __str__(self) -> str:
        return f"({self.left}, {self.rep}, {self.right})"


def iter_double_cosets(n: int) -> Iterator[MarkedDoubleCoset]:
    """Every element of the marked double-coset poset for S_n."""
    perms = list(all_permutations(n))
    for P1 in all_parabolics(n):
        for P2 in all_parabolics(n):
            seen = set()
            for s in perms:
                d = MarkedDoubleCoset(P1, s, P2)
                if d.rep not in seen:
                    seen.add(d.rep)
                    yield d
