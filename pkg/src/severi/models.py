"""Catalog of singularity models and the headline cross-check.

Each record carries the numerical invariants of a germ, where its
multiplicity vector comes from, and, when the link is a torus link with
a standard positive presentation, a braid word for it.  The cross-check
compares the lowest-a part of the link's HOMFLY polynomial with the
prediction sum_h n_h z^(2h-b); for catalog entries both sides are
computable and any mismatch is a bug, not news.

Braid words: the link of the two-variable singularity with exponents
(p, q), gcd 1, is the (p, q) torus knot, closed from ((1 2 .. p-1))^q on
p strands.  The y^2-family germ of index n has link T(2, n+1), closed
from (1)^(n+1) on two strands, whether or not n+1 is even.  The E6 and
E8 germs give T(3, 4) and T(3, 5).  The xy^2 family and E7 have links
that are not plain torus knots and carry no braid word here.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .braid import BraidWord, PinfPositive, pinf_positive
from .genus_transform import NhVector
from .laurent import LaurentPoly1
from .staircase import ADEType, ade_closed_vector, ade_nh


@dataclass(frozen=True)
class SingularityModel:
    """Catalog record for one germ."""

    name: str
    delta: int
    mu: int
    branches: int
    nh_source: str | None          # "staircase", "formula", or None
    ade: ADEType | None
    link_braid: BraidWord | None

    def __post_init__(self):
        if self.mu != 2 * self.delta + 1 - self.branches:
            raise ValueError(f"{self.name}: mu must equal 2*delta + 1 - branches")
        if self.link_braid is not None and self.link_braid.is_positive():
            w, n = self.link_braid.writhe, self.link_braid.strands
            if self.mu != w - n + 1:
                raise ValueError(f"{self.name}: braid word violates mu = w - n + 1")
            if 2 * self.delta != w - n + self.branches:
                raise ValueError(f"{self.name}: braid word violates 2*delta = w - n + b")

    def local_nh(self) -> NhVector | None:
        if self.nh_source == "staircase":
            return ade_nh(self.ade)
        if self.nh_source == "formula":
            return ade_closed_vector(self.ade)
        return None


def _torus_braid(p: int, q: int) -> BraidWord:
    return BraidWord(p, tuple((i, 1) for _ in range(q) for i in range(1, p)))


def _ade_model(t: ADEType) -> SingularityModel:
    braid = None
    if t.family == "A":
        braid = _torus_braid(2, t.index + 1)
    elif t.family == "E" and t.index in (6, 8):
        braid = _torus_braid(3, 4 if t.index == 6 else 5)
    return SingularityModel(
        name=t.name,
        delta=t.delta,
        mu=t.milnor,
        branches=t.branches,
        nh_source="staircase",
        ade=t,
        link_braid=braid,
    )


def torus_model(p: int, q: int) -> SingularityModel:
    """Germ with two coprime exponents p, q >= 2: delta is half the
    product (p-1)(q-1) and the link is the (p, q) torus knot."""
    if p < 2 or q < 2:
        raise ValueError("torus exponents must be at least 2")
    if math.gcd(p, q) != 1:
        raise ValueError("torus exponents must be coprime")
    delta = (p - 1) * (q - 1) // 2
    return SingularityModel(
        name=f"T({p},{q})",
        delta=delta,
        mu=2 * delta,
        branches=1,
        nh_source=None,
        ade=None,
        link_braid=_torus_braid(p, q),
    )


def catalog(max_index: int = 12) -> list[SingularityModel]:
    """The y^2 family up to index max_index, the xy^2 family from 4 up,
    and the three exceptional germs."""
    out = [_ade_model(ADEType("A", n)) for n in range(1, max_index + 1)]
    out += [_ade_model(ADEType("D", n)) for n in range(4, max_index + 1)]
    out += [_ade_model(ADEType("E", n)) for n in (6, 7, 8) if n <= max_index]
    return out


def predicted_pinf(nh: NhVector, branches: int) -> LaurentPoly1:
    """The multiplicity side of the cross-check: sum_h n_h z^(2h-b)."""
    return LaurentPoly1({2 * h - branches: nh.n(h) for h in range(nh.high + 1)})


@dataclass(frozen=True)
class ConjectureReport:
    """Outcome of comparing the state sum with the multiplicity sum.

    ok is None when one side is unavailable (no braid word, or no
    multiplicity table for a non-simple germ)."""

    name: str
    pinf: PinfPositive | None
    predicted: LaurentPoly1 | None
    ok: bool | None
    note: str = ""


def conjecture_check(model: SingularityModel, budget: int | None = None) -> ConjectureReport:
    if model.link_braid is None:
        return ConjectureReport(model.name, None, None, None, "no braid word attached")
    result = pinf_positive(model.link_braid, budget)
    nh = model.local_nh()
    if nh is None:
        return ConjectureReport(model.name, result, None, None,
                                "multiplicity table unavailable for this germ")
    expected = predicted_pinf(nh, model.branches)
    return ConjectureReport(model.name, result, expected, result.poly == expected)
