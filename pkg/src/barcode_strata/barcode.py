"""
Barcodes with n bars and their permutation-type invariants.

A ``Barcode`` keeps its bars in the order they were given, but every
invariant computed here (sigma, the parabolics, the double coset, the
means and deviations) depends only on the underlying multiset.
"""
from __future__ import annotations

import io
import json
import math
import os
from dataclasses import dataclass
from typing import IO, Iterable, Sequence

from .coordinates import direction, face_of, mean_and_radius
from .coxeter import Coset, MarkedDoubleCoset, ParabolicSubgroup
from .errors import BarcodeFormatError, EnumerationCapError, NonStrictError, StrataError
from .permutations import Permutation

__all__ = [
    "Barcode", "RegionDescriptor", "CoxeterCoordinates",
    "parse", "parse_csv", "parse_json", "load",
    "tau_b", "tau_d", "birth_face", "death_face", "is_strict", "sigma",
    "parabolics", "double_coset", "coxeter_coordinates", "from_coxeter_coordinates",
    "region", "same_region", "analyze",
]


@dataclass(frozen=True)
class Barcode:
    bars: tuple[tuple[float, float], ...]

    def __post_init__(self):
        bars = []
        for i, bar in enumerate(self.bars):
            try:
                b, d = bar
                b, d = float(b), float(d)
            except (TypeError, ValueError):
                raise BarcodeFormatError(f"bar {i}: expected a (birth, death) pair, got {bar!r}",
                                         index=i) from None
            if not (math.isfinite(b) and math.isfinite(d)):
                raise BarcodeFormatError(f"bar {i}: values must be finite", index=i)
            if not b < d:
                raise BarcodeFormatError(f"bar {i}: birth {b} must be < death {d}", index=i)
            bars.append((b, d))
        if not bars:
            raise BarcodeFormatError("a barcode needs at least one bar")
        object.__setattr__(self, "bars", tuple(bars))

    @classmethod
    def from_arrays(cls, births: Sequence[float], deaths: Sequence[float]) -> Barcode:
        if len(births) != len(deaths):
            raise BarcodeFormatError("births and deaths have different lengths")
        return cls(tuple(zip(births, deaths)))

    @property
    def n(self) -> int:
        return len(self.bars)

    @property
    def births(self) -> list[float]:
        return [b for b, _ in self.bars]

    @property
    def deaths(self) -> list[float]:
        return [d for _, d in self.bars]

    def reindex(self, gamma: Permutation) -> Barcode:
        """``gamma . B``: bar i moves to position gamma(i)."""
        out = [None] * self.n
        for i, v in enumerate(gamma.images):
            out[v - 1] = self.bars[i]
        return Barcode(tuple(out))

    def sorted_bars(self) -> tuple[tuple[float, float], ...]:
        return tuple(sorted(self.bars))

    def same_multiset(self, other: Barcode) -> bool:
        return self.sorted_bars() == other.sorted_bars()

    def to_json(self) -> list[list[float]]:
        return [[b, d] for b, d in self.bars]

    def to_csv(self) -> str:
        return "".join(f"{b!r},{d!r}\n" for b, d in self.bars)


def parse_csv(text: str) -> Barcode:
    """One ``birth,death`` per line; ``#`` starts a comment, blank lines are skipped."""
    bars = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = [f.strip() for f in line.split(",")]
        if len(fields) != 2:
            raise BarcodeFormatError(
                f"line {lineno}: expected 'birth,death', got {raw.strip()!r}",
                index=len(bars), line=lineno)
        try:
            b, d = float(fields[0]), float(fields[1])
        except ValueError:
            raise BarcodeFormatError(f"line {lineno}: non-numeric value in {raw.strip()!r}",
                                     index=len(bars), line=lineno) from None
        if not (math.isfinite(b) and math.isfinite(d)):
            raise BarcodeFormatError(f"line {lineno}: values must be finite",
                                     index=len(bars), line=lineno)
        if not b < d:
            raise BarcodeFormatError(
                f"line {lineno}: bar {len(bars)} has birth {b} >= death {d}",
                index=len(bars), line=lineno)
        bars.append((b, d))
    if not bars:
        raise BarcodeFormatError("empty input: no bars found")
    return Barcode(tuple(bars))


def parse_json(text: str) -> Barcode:
    """A JSON array of ``[birth, death]`` pairs."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise BarcodeFormatError(f"invalid JSON: {exc}", line=exc.lineno) from None
    if not isinstance(data, list):
        raise BarcodeFormatError("expected a JSON array of [birth, death] pairs")
    if not data:
        raise BarcodeFormatError("empty input: no bars found")
    for i, bar in enumerate(data):
        if (not isinstance(bar, list) or len(bar) != 2
                or not all(isinstance(v, (int, float)) and not isinstance(v, bool) for v in bar)):
            raise BarcodeFormatError(f"bar {i}: expected [birth, death], got {bar!r}", index=i)
    return Barcode(tuple((v[0], v[1]) for v in data))


def parse(source: str | bytes | IO, format: str = "csv") -> Barcode:
    if hasattr(source, "read"):
        source = source.read()
    if isinstance(source, bytes):
        source = source.decode("utf-8")
    if format == "csv":
        return parse_csv(source)
    if format == "json":
        return parse_json(source)
    raise StrataError(f"unknown barcode format {format!r}")


def load(path: str | os.PathLike, format: str | None = None) -> Barcode:
    """Read a barcode file; the format defaults to the extension (``.json`` or CSV)."""
    if format is None:
        format = "json" if os.fspath(path).lower().endswith(".json") else "csv"
    with open(path, "rb") as fh:
        return parse(fh.read(), format)


def birth_face(B: Barcode, tol: float = 0.0) -> Coset:
    """``tau_b P_b``: all rho with b_rho(1) <= ... <= b_rho(n)."""
    return face_of(B.births, tol)


def death_face(B: Barcode, tol: float = 0.0) -> Coset:
    return face_of(B.deaths, tol)


def tau_b(B: Barcode, tol: float = 0.0) -> Permutation:
    return birth_face(B, tol).rep


def tau_d(B: Barcode, tol: float = 0.0) -> Permutation:
    return death_face(B, tol).rep


def parabolics(B: Barcode, tol: float = 0.0) -> tuple[ParabolicSubgroup, ParabolicSubgroup]:
    return birth_face(B, tol).subgroup, death_face(B, tol).subgroup


def is_strict(B: Barcode, tol: float = 0.0) -> bool:
    Pb, Pd = parabolics(B, tol)
    return Pb.is_trivial() and Pd.is_trivial()


def sigma(B: Barcode, tol: float = 0.0) -> Permutation:
    """``tau_b^{-1} tau_d`` for a strict barcode.

    sigma(j) is the rank of the birth of the bar with the j-th smallest death.
    """
    fb, fd = birth_face(B, tol), death_face(B, tol)
    if not (fb.subgroup.is_trivial() and fd.subgroup.is_trivial()):
        raise NonStrictError("sigma_B undefined: barcode has tied births or deaths; use double_coset")
    return fb.rep.inverse() * fd.rep


def double_coset(B: Barcode, tol: float = 0.0) -> MarkedDoubleCoset:
    """``(P_b, P_b tau_b^{-1} tau_d P_d, P_d)``; ``.elements()`` enumerates the set."""
    fb, fd = birth_face(B, tol), death_face(B, tol)
    return MarkedDoubleCoset(fb.subgroup, fb.rep.inverse() * fd.rep, fd.subgroup)


@dataclass(frozen=True)
class RegionDescriptor:
    mean_birth: float
    mean_death: float
    dev_birth: float
    dev_death: float
    stratum: MarkedDoubleCoset


@dataclass(frozen=True)
class CoxeterCoordinates:
    """The five coordinates of a barcode.

    ``birth_direction``/``death_direction`` are the canonical representative
    of the S_n-orbit of the two sphere points: bars are put in order of
    increasing birth, then death, then original index. A direction is None
    when the corresponding values are all equal.
    """
    region: RegionDescriptor
    birth_direction: tuple[float, ...] | None
    death_direction: tuple[float, ...] | None

    @property
    def n(self) -> int:
        return self.region.stratum.n

    @property
    def degenerate(self) -> bool:
        return self.birth_direction is None or self.death_direction is None


def _orbit_order(B: Barcode) -> list[int]:
    return sorted(range(B.n), key=lambda i: (B.bars[i][0], B.bars[i][1], i))


def region(B: Barcode, tol: float = 0.0) -> RegionDescriptor:
    mb, rb = mean_and_radius(B.births)
    md, rd = mean_and_radius(B.deaths)
    return RegionDescriptor(mb, md, rb, rd, double_coset(B, tol))


def coxeter_coordinates(B: Barcode, tol: float = 0.0) -> CoxeterCoordinates:
    reg = region(B, tol)
    order = _orbit_order(B)
    births = [B.bars[i][0] for i in order]
    deaths = [B.bars[i][1] for i in order]
    bdir = direction(births) if reg.dev_birth > 0 else None
    ddir = direction(deaths) if reg.dev_death > 0 else None
    return CoxeterCoordinates(reg, bdir, ddir)


def from_coxeter_coordinates(c: CoxeterCoordinates) -> Barcode:
    """Rebuild the barcode (in orbit-representative order) from its five coordinates."""
    reg, n = c.region, c.n

    def axis(mean, dev, unit):
        if unit is None:
            return [mean] * n
        return [mean + dev * u for u in unit]

    births = axis(reg.mean_birth, reg.dev_birth, c.birth_direction)
    deaths = axis(reg.mean_death, reg.dev_death, c.death_direction)
    return Barcode.from_arrays(births, deaths)


def same_region(B: Barcode, other: Barcode, tol: float = 0.0) -> bool:
    """Same means and deviations (within ``tol``) and the same marked double coset.

    ``tol`` compares the four real coordinates only; ties are detected exactly.
    """
    if B.n != other.n:
        return False
    a, b = region(B), region(other)
    return (
        abs(a.mean_birth - b.mean_birth) <= tol
        and abs(a.mean_death - b.mean_death) <= tol
        and abs(a.dev_birth - b.dev_birth) <= tol
        and abs(a.dev_death - b.dev_death) <= tol
        and a.stratum == b.stratum
    )


def analyze(B: Barcode, tol: float = 0.0, enumerate_dc: bool = False,
            cap: int | None = None) -> dict:
    """The JSON document printed by ``barcode-strata analyze``."""
    fb, fd = birth_face(B, tol), death_face(B, tol)
    reg = region(B, tol)
    dc = reg.stratum
    strict = dc.is_singleton()
    out = {
        "n": B.n,
        "mean_birth": reg.mean_birth,
        "mean_death": reg.mean_death,
        "dev_birth": reg.dev_birth,
        "dev_death": reg.dev_death,
        "tau_b": fb.rep.to_list(),
        "tau_d": fd.rep.to_list(),
    }
    if strict:
        out["sigma"] = (fb.rep.inverse() * fd.rep).to_list()
    out.update({
        "P_b": fb.subgroup.sorted_generators(),
        "P_d": fd.subgroup.sorted_generators(),
        "double_coset_rep": dc.rep.to_list(),
    })
    if enumerate_dc:
        out["double_coset_elements"] = [p.to_list() for p in dc.elements(cap)]
    out["strict"] = strict
    return out
