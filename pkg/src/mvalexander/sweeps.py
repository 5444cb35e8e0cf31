"""Drivers that run the checkers over a whole diagram: every deletion, every
sublink and finite grids of multiplicity vectors."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, product
from typing import Iterator, Optional

from .fox import alexander_polynomial
from .laurent import UnitClass, canonicalize, permute_vars
from .linkdiag import LinkDiagram, LinkingMatrix, linking_matrix, sublink
from .multilink import Lemma7Report, MultilinkSpec, check_lemma7
from .torres import (
    Prop8Report,
    SymmetryReport,
    TorresReport,
    check_prop8,
    check_torres_formula,
    check_torres_fox,
)


def m_grid(mu: int, bound: int) -> Iterator[tuple[int, ...]]:
    """Nonzero vectors of ``[-bound, bound]^mu`` in lexicographic order."""
    if bound < 0:
        raise ValueError("grid bound must be non-negative")
    for m in product(range(-bound, bound + 1), repeat=mu):
        if any(m):
            yield m


@dataclass
class LinkData:
    """A diagram with its polynomial and lazily computed sublink polynomials.

    Sublinks are keyed by ascending tuples of 1-based component indices.
    """

    diagram: LinkDiagram
    _cache: dict[tuple[int, ...], UnitClass] = field(default_factory=dict, repr=False)

    def __post_init__(self):
        self.lk: LinkingMatrix = linking_matrix(self.diagram)

    @property
    def mu(self) -> int:
        return self.diagram.num_components

    def delta_of(self, keep: tuple[int, ...]) -> UnitClass:
        keep = tuple(keep)
        if keep not in self._cache:
            d = self.diagram if keep == tuple(range(1, self.mu + 1)) else sublink(self.diagram, keep)
            self._cache[keep] = alexander_polynomial(d)
        return self._cache[keep]

    @property
    def delta(self) -> UnitClass:
        return self.delta_of(tuple(range(1, self.mu + 1)))

    def sublinks(self, min_size: int = 1) -> list[tuple[int, ...]]:
        return [
            keep
            for size in range(self.mu, min_size - 1, -1)
            for keep in combinations(range(1, self.mu + 1), size)
        ]

    def proper_sublink_polys(self) -> dict[tuple[int, ...], UnitClass]:
        return {keep: self.delta_of(keep) for keep in self.sublinks() if len(keep) < self.mu}

    def moved_last(self, keep: tuple[int, ...], k: int) -> tuple[UnitClass, UnitClass, LinkingMatrix]:
        """Polynomial of sublink ``keep`` with component ``k`` listed last,
        the polynomial of ``keep`` without ``k``, and the reordered linking matrix."""
        order = [i for i in keep if i != k] + [k]
        local = [keep.index(i) + 1 for i in order]
        moved = canonicalize(permute_vars(self.delta_of(keep).rep, local))
        rest = tuple(i for i in keep if i != k)
        return moved, self.delta_of(rest), self.lk.restrict(order)


@dataclass
class Labelled:
    """One checker report together with where it was taken."""

    sublink: tuple[int, ...]
    deleted: Optional[int]
    report: object

    @property
    def holds(self) -> bool:
        r = self.report
        return r.passed if isinstance(r, SymmetryReport) else bool(r.holds)


def torres_reports(data: LinkData, all_sublinks: bool = True) -> list[Labelled]:
    """Torres formula for every deletion, on the link and (optionally) on
    every sublink with at least two components."""
    keeps = data.sublinks(2) if all_sublinks else [tuple(range(1, data.mu + 1))]
    out = []
    for keep in keeps:
        for k in keep:
            moved, rest, lk = data.moved_last(keep, k)
            out.append(Labelled(keep, k, check_torres_formula(moved, rest, lk)))
    return out


def torres_fox_reports(data: LinkData, all_sublinks: bool = True) -> list[Labelled]:
    keeps = data.sublinks(2) if all_sublinks else [tuple(range(1, data.mu + 1))]
    return [Labelled(keep, None, check_torres_fox(data.delta_of(keep), data.lk.restrict(keep))) for keep in keeps]


def lemma7_reports(data: LinkData, bound: int = 3) -> list[Labelled]:
    """Every choice of zero-multiplicity component and every nonzero ``m'``
    in the grid for the remaining ones."""
    out = []
    full = tuple(range(1, data.mu + 1))
    for k in full:
        moved, rest, lk = data.moved_last(full, k)
        for mp in m_grid(data.mu - 1, bound):
            spec = MultilinkSpec(mp + (0,), lk)
            out.append(Labelled(full, k, check_lemma7(moved, rest, spec)))
    return out


def prop8_reports(data: LinkData, bound: int = 3) -> list[Labelled]:
    subs = data.proper_sublink_polys()
    full = tuple(range(1, data.mu + 1))
    return [Labelled(full, None, check_prop8(data.delta, data.lk, m, subs)) for m in m_grid(data.mu, bound)]


__all__ = [
    "LinkData",
    "Labelled",
    "m_grid",
    "torres_reports",
    "torres_fox_reports",
    "lemma7_reports",
    "prop8_reports",
    "Lemma7Report",
    "Prop8Report",
    "TorresReport",
]
