"""
Elements of the symmetric group S_n in one-line notation.

Permutations are 1-based to match the usual notation: ``Permutation((4, 1, 3, 2))``
is the permutation written [4132], sending 1 -> 4, 2 -> 1, 3 -> 3, 4 -> 2.
Products follow function composition, ``(p * q)(i) == p(q(i))``.

>>> p = Permutation((4, 2, 1, 3)); q = Permutation((1, 3, 4, 2))
>>> p * q
Permutation([4132])
>>> Permutation((3, 2, 4, 1)).inverse()
Permutation([4213])
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence
import itertools

from .errors import SizeMismatchError, StrataError

__all__ = [
    "Permutation", "compose", "inverse", "act_on_vector",
    "inversions", "descents", "all_permutations",
]


@dataclass(frozen=True, slots=True)
class Permutation:
    images: tuple[int, ...]

    def __post_init__(self):
        images = tuple(int(v) for v in self.images)
        if len(images) < 1:
            raise StrataError("a permutation needs n >= 1")
        if sorted(images) != list(range(1, len(images) + 1)):
            raise StrataError(f"not a permutation of 1..{len(images)}: {list(images)}")
        object.__setattr__(self, "images", images)

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def adjacent(cls, n: int, i: int) -> Permutation:
        """The simple transposition (i, i+1) in S_n, 1 <= i < n."""
        if not 1 <= i < n:
            raise StrataError(f"adjacent transposition ({i},{i + 1}) not in S_{n}")
        images = list(range(1, n + 1))
        images[i - 1], images[i] = images[i], images[i - 1]
        return cls(tuple(images))

    @classmethod
    def transposition(cls, n: int, i: int, j: int) -> Permutation:
        images = list(range(1, n + 1))
        images[i - 1], images[j - 1] = images[j - 1], images[i - 1]
        return cls(tuple(images))

    @classmethod
    def from_zero_based(cls, images: Iterable[int]) -> Permutation:
        return cls(tuple(v + 1 for v in images))

    @classmethod
    def parse(cls, text: str) -> Permutation:
        """Parse ``"[4132]"``, ``"4132"`` (n <= 9) or ``"4,1,3,2"``."""
        body = text.strip().strip("[]()")
        if "," in body or " " in body.strip():
            parts = body.replace(",", " ").split()
        else:
            parts = list(body)
        return cls(tuple(int(p) for p in parts))

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __mul__(self, other: Permutation) -> Permutation:
        return compose(self, other)

    def __len__(self) -> int:
        return len(self.images)

    def __iter__(self) -> Iterator[int]:
        return iter(self.images)

    def inverse(self) -> Permutation:
        return inverse(self)

    def zero_based(self) -> tuple[int, ...]:
        return tuple(v - 1 for v in self.images)

    def is_identity(self) -> bool:
        return all(v == i for i, v in enumerate(self.images, 1))

    def inversions(self) -> int:
        return inversions(self)

    def descents(self) -> int:
        return descents(self)

    def sort_key(self) -> tuple[int, tuple[int, ...]]:
        """Total order used for canonical representatives: length, then one-line lex."""
        return (inversions(self), self.images)

    def to_list(self) -> list[int]:
        return list(self.images)

    def __str__(self) -> str:
        if self.n <= 9:
            return "[" + "".join(map(str, self.images)) + "]"
        return "[" + ",".join(map(str, self.images)) + "]"

    def __repr__(self) -> str:
        return f"Permutation({self})"


def compose(p: Permutation, q: Permutation) -> Permutation:
    if p.n != q.n:
        raise SizeMismatchError(f"cannot compose permutations of sizes {p.n} and {q.n}")
    pi = p.images
    return Permutation(tuple(pi[v - 1] for v in q.images))


def inverse(p: Permutation) -> Permutation:
    out = [0] * p.n
    for i, v in enumerate(p.images, 1):
        out[v - 1] = i
    return Permutation(tuple(out))


def act_on_vector(gamma: Permutation, x: Sequence[float]) -> list[float]:
    """Left action permuting coordinates: ``(gamma . x)_i = x_{gamma^{-1}(i)}``.

    Equivalently the entry at position i moves to position gamma(i).
    """
    if len(x) != gamma.n:
        raise SizeMismatchError(f"vector of length {len(x)} for a permutation of S_{gamma.n}")
    out = [0.0] * gamma.n
    for i, v in enumerate(gamma.images):
        out[v - 1] = x[i]
    return out


def inversions(p: Permutation) -> int:
    """Number of pairs i < j with p(i) > p(j), i.e. the Coxeter length."""
    im = p.images
    n = len(im)
    return sum(1 for i in range(n) for j in range(i + 1, n) if im[i] > im[j])


def descents(p: Permutation) -> int:
    im = p.images
    return sum(1 for i in range(len(im) - 1) if im[i] > im[i + 1])


def all_permutations(n: int) -> Iterator[Permutation]:
    """Every element of S_n, in lexicographic order of one-line notation."""
    for images in itertools.permutations(range(1, n + 1)):
        yield Permutation(images)
