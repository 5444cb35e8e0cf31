"""Multilinks: multiplicity vectors, cable data and one-variable specializations."""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from math import gcd
from typing import Sequence

from .laurent import LaurentPoly, UnitClass, as_poly, canonicalize, substitute_powers
from .linkdiag import LinkingMatrix


def tpow_minus_one(k: int) -> LaurentPoly:
    """t^k - 1 in one variable (zero when k == 0)."""
    return LaurentPoly.monomial((k,)) - 1


@dataclass(frozen=True)
class MultilinkSpec:
    """A link's linking matrix together with multiplicities ``m``."""

    m: tuple[int, ...]
    lk: LinkingMatrix

    def __post_init__(self):
        object.__setattr__(self, "m", tuple(int(x) for x in self.m))
        if len(self.m) != self.lk.mu:
            raise ValueError(f"multiplicity vector has {len(self.m)} entries for a {self.lk.mu}-component link")

    @property
    def mu(self) -> int:
        return len(self.m)

    @property
    def d(self) -> int:
        return reduce(gcd, self.m, 0)

    def s(self, i: int) -> int:
        """sum over j != i of m_j * lk(L_i, L_j)  (1-based ``i``)."""
        return sum(self.m[j - 1] * self.lk[i, j] for j in range(1, self.mu + 1) if j != i)

    def d_i(self, i: int) -> int:
        return gcd(self.m[i - 1], self.s(i))

    def reverse(self, i: int) -> "MultilinkSpec":
        """The same multilink written with component ``i`` reversed."""
        m = list(self.m)
        m[i - 1] = -m[i - 1]
        return MultilinkSpec(tuple(m), self.lk.reverse(i))

    def normalized(self) -> "MultilinkSpec":
        """Representative with every m_i >= 0; zero-multiplicity components are
        oriented so their first nonzero linking number is positive."""
        spec = self
        for i in range(1, self.mu + 1):
            mi = spec.m[i - 1]
            if mi < 0:
                spec = spec.reverse(i)
            elif mi == 0:
                row = [spec.lk[i, j] for j in range(1, self.mu + 1) if spec.lk[i, j]]
                if row and row[0] < 0:
                    spec = spec.reverse(i)
        return spec


def cable_data(spec: MultilinkSpec, i: int) -> tuple[int, int, int]:
    """``(d_i, p_i, q_i)``: the surface meets the boundary torus of ``L_i`` in
    the ``(d_i p_i, d_i q_i)`` cable.  ``d_i == 0`` marks ``m_i = s_i = 0``."""
    if not 1 <= i <= spec.mu:
        raise IndexError(f"component {i} out of range 1..{spec.mu}")
    mi, si = spec.m[i - 1], spec.s(i)
    di = gcd(mi, si)
    if di == 0:
        return 0, 0, 0
    return di, mi // di, -si // di


def corollary6_degenerate(spec: MultilinkSpec) -> int:
    """Number of components with ``m_i = 0`` and ``s_i = 0``; any such
    component forces the multilink polynomial to vanish."""
    return sum(1 for i in range(1, spec.mu + 1) if spec.m[i - 1] == 0 and spec.s(i) == 0)


def multilink_polynomial(delta: UnitClass | LaurentPoly, m: Sequence[int]) -> LaurentPoly:
    """Representative of Delta_{L(m)}(t) from the multivariable polynomial."""
    p = as_poly(delta)
    m = tuple(m)
    if len(m) != p.nvars:
        raise ValueError(f"multiplicity vector has {len(m)} entries, polynomial has {p.nvars} variables")
    if not any(m):
        raise ValueError("the zero multiplicity vector does not define a multilink polynomial")
    sub = substitute_powers(p, m)
    if p.nvars == 1:
        return sub
    return tpow_minus_one(reduce(gcd, m, 0)) * sub


def specialize_prop1(delta: UnitClass | LaurentPoly, spec: MultilinkSpec | Sequence[int]) -> UnitClass:
    """Delta_{L(m)}: ``Delta_L(t^m1)`` for knots, ``(t^d - 1) Delta_L(t^m1, ..., t^mmu)`` otherwise."""
    m = spec.m if isinstance(spec, MultilinkSpec) else spec
    return canonicalize(multilink_polynomial(delta, m))


@dataclass
class Lemma7Report:
    m: tuple[int, ...]
    exponent: int
    lhs: UnitClass
    rhs: UnitClass

    @property
    def holds(self) -> bool:
        return self.lhs == self.rhs


def check_lemma7(delta: UnitClass, delta_sub: UnitClass, spec: MultilinkSpec) -> Lemma7Report:
    """Compare Delta_{L(m)} with ``(t^{sum m_i lk_i,mu} - 1) Delta_{L'(m')}``
    where ``L'`` drops the last component, which must have ``m_mu = 0``."""
    mu = spec.mu
    if mu < 2:
        raise ValueError("needs at least two components")
    if delta.nvars != mu or delta_sub.nvars != mu - 1:
        raise ValueError("polynomial variable counts do not match the multilink")
    if spec.m[-1] != 0:
        raise ValueError("the last multiplicity must be zero")
    m_sub = spec.m[:-1]
    if not any(m_sub):
        raise ValueError("the remaining multiplicities must not all vanish")
    e = sum(spec.m[i - 1] * spec.lk[i, mu] for i in range(1, mu))
    lhs = specialize_prop1(delta, spec.m)
    rhs = canonicalize(tpow_minus_one(e) * multilink_polynomial(delta_sub, m_sub))
    return Lemma7Report(spec.m, e, lhs, rhs)
