"""
The stratification of the space of barcodes by marked double cosets.

Strata are closed and ordered by inclusion: ``q_leq(s, t)`` means the
stratum s lies inside the stratum t. The smallest element is
``(S_n, S_n, S_n)`` (all births equal and all deaths equal); the maximal
elements ``(1, {sigma}, 1)`` hold the strict barcodes of permutation type
sigma. A barcode B lies in s iff ``q_leq(stratum_of(B), s)``.

Orbits ``S_n . (tau_1 P_1, tau_2 P_2)`` of pairs of Coxeter-complex faces
are modelled by ``OrbitPair``; ``phi``/``psi`` translate between the two
descriptions.
"""
from __future__ import annotations

import random
from dataclasses import dataclass

from .barcode import Barcode, double_coset
from .coxeter import (
    Coset, MarkedDoubleCoset, ParabolicSubgroup,
    canonical_double_coset_rep, iter_double_cosets,
)
from .errors import SizeMismatchError
from .permutations import Permutation

__all__ = [
    "MarkedDoubleCoset", "OrbitPair", "dc_member", "q_leq", "compare",
    "phi", "psi", "p_leq", "stratum_of", "contains", "enumerate_q", "realize",
    "bottom", "top",
]


def _same_n(a: int, b: int) -> None:
    if a != b:
        raise SizeMismatchError(f"size mismatch: S_{a} vs S_{b}")


@dataclass(frozen=True)
class OrbitPair:
    """An orbit of pairs of faces under the diagonal left action of S_n.

    Stored in normal form: the left coset is ``P_1`` itself (identity
    representative) and the right coset is ``d P_2`` with d the minimal
    element of ``P_1 tau_1^{-1} tau_2 P_2``. Two OrbitPairs are equal iff
    they describe the same orbit.
    """
    left: Coset
    right: Coset

    def __post_init__(self):
        _same_n(self.left.n, self.right.n)
        P1, P2 = self.left.subgroup, self.right.subgroup
        shift = self.left.rep.inverse()
        d = canonical_double_coset_rep(shift * self.right.rep, P1, P2)
        object.__setattr__(self, "left", Coset(Permutation.identity(P1.n), P1))
        object.__setattr__(self, "right", Coset(d, P2))

    @property
    def n(self) -> int:
        return self.left.n


def dc_member(perm: Permutation, d: MarkedDoubleCoset) -> bool:
    _same_n(perm.n, d.n)
    return perm in d


def q_leq(a: MarkedDoubleCoset, b: MarkedDoubleCoset) -> bool:
    """``a <= b``: P_1 ⊇ P_1', P_2 ⊇ P_2' and P_1 sigma P_2 ⊇ P_1' sigma' P_2'."""
    _same_n(a.n, b.n)
    return (
        a.left.issuperset(b.left)
        and a.right.issuperset(b.right)
        and b.rep in a
    )


def compare(a: MarkedDoubleCoset, b: MarkedDoubleCoset) -> str:
    le, ge = q_leq(a, b), q_leq(b, a)
    if le and ge:
        return "equal"
    if le:
        return "leq"
    if ge:
        return "geq"
    return "incomparable"


def phi(p: OrbitPair) -> MarkedDoubleCoset:
    return MarkedDoubleCoset(
        p.left.subgroup, p.left.rep.inverse() * p.right.rep, p.right.subgroup
    )


def psi(d: MarkedDoubleCoset) -> OrbitPair:
    return OrbitPair(Coset(Permutation.identity(d.n), d.left), Coset(d.rep, d.right))


def p_leq(a: OrbitPair, b: OrbitPair) -> bool:
    """Order on orbits: some representative of b is contained, componentwise, in a."""
    return q_leq(phi(a), phi(b))


def stratum_of(B: Barcode, tol: float = 0.0) -> MarkedDoubleCoset:
    """The smallest stratum containing B, ``(P_b, D_B, P_d)``."""
    return double_coset(B, tol)


def contains(s: MarkedDoubleCoset, B: Barcode, tol: float = 0.0) -> bool:
    """Whether the closed stratum s contains the barcode B."""
    return q_leq(stratum_of(B, tol), s)


def enumerate_q(n: int) -> list[MarkedDoubleCoset]:
    return list(iter_double_cosets(n))


def bottom(n: int) -> MarkedDoubleCoset:
    full = ParabolicSubgroup.full(n)
    return MarkedDoubleCoset(full, Permutation.identity(n), full)


def top(sigma: Permutation) -> MarkedDoubleCoset:
    triv = ParabolicSubgroup.trivial(sigma.n)
    return MarkedDoubleCoset(triv, sigma, triv)


def _levels(P: ParabolicSubgroup, rng: random.Random | None) -> list[float]:
    """Nondecreasing values, one per position, equal exactly within the blocks of P."""
    out = []
    level = 0.0
    for lo, hi in P.blocks():
        level += 1.0 if rng is None else rng.uniform(0.05, 1.0)
        out.extend([level] * (hi - lo + 1))
    return out


def realize(s: MarkedDoubleCoset, rng: random.Random | None = None) -> Barcode:
    """A barcode whose smallest stratum is exactly s.

    Births are sorted in index order with ties on the blocks of P_1; the
    death of bar sigma(i) is the i-th smallest death, with ties on the
    blocks of P_2. With ``rng`` the gaps between levels are random.
    """
    n = s.n
    births = _levels(s.left, rng)
    ranks = _levels(s.right, rng)
    offset = max(births) + 1.0
    deaths = [0.0] * n
    for i, v in enumerate(s.rep.images):
        deaths[v - 1] = offset + ranks[i]
    return Barcode.from_arrays(births, deaths)
