"""Necessary conditions on link polynomials and exponent-encoding reconstruction.

All checkers return report objects; they never raise on a failed condition.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import reduce
from math import gcd, prod
from typing import Callable, Mapping, Optional, Sequence

from .laurent import (
    LaurentPoly,
    UnitClass,
    as_poly,
    canonicalize,
    eval_at_one_var,
    exact_div,
    involution,
    substitute_powers,
    unit_ratio,
)
from .linkdiag import LinkingMatrix
from .matrices import det
from .multilink import tpow_minus_one


# ---------------------------------------------------------------------------
# Torres formula


@dataclass
class TorresReport:
    holds: bool
    lhs: UnitClass
    rhs: UnitClass
    branch: str
    details: dict = field(default_factory=dict)


def check_torres_formula(delta: UnitClass, delta_sub: UnitClass, lk: LinkingMatrix) -> TorresReport:
    """Compare Delta_L(t_1, ..., t_{mu-1}, 1) with the sublink side.

    ``delta_sub`` is the polynomial of the link without its last component.
    """
    mu = lk.mu
    if mu < 2:
        raise ValueError("the Torres formula needs at least two components")
    delta, delta_sub = as_poly(delta), as_poly(delta_sub)
    if delta.nvars != mu or delta_sub.nvars != mu - 1:
        raise ValueError(
            f"expected polynomials in {mu} and {mu - 1} variables, got {delta.nvars} and {delta_sub.nvars}"
        )
    at_one = eval_at_one_var(delta, mu)
    lhs = canonicalize(at_one)
    if mu == 2:
        ell = lk[1, 2]
        t = LaurentPoly.var(1, 1)
        num = LaurentPoly.monomial((ell,)) - 1
        factor = exact_div(num, t - 1)  # geometric sum; zero when ell == 0
        branch = "mu=2"
    else:
        exps = tuple(lk[i, mu] for i in range(1, mu))
        factor = LaurentPoly.monomial(exps) - 1
        branch = "mu>2"
    rhs = canonicalize(factor * delta_sub)
    details = {
        "delta_at_one": str(at_one),
        "factor": str(factor),
        "linking_with_last": [lk[i, mu] for i in range(1, mu)],
    }
    return TorresReport(lhs == rhs, lhs, rhs, branch, details)


# ---------------------------------------------------------------------------
# Torres-Fox symmetry


@dataclass
class SymmetryReport:
    holds: bool
    nu: Optional[tuple[int, ...]]
    parity_ok: bool
    sign: Optional[int] = None

    @property
    def passed(self) -> bool:
        return self.holds and self.parity_ok


def check_torres_fox(delta: UnitClass, lk: LinkingMatrix) -> SymmetryReport:
    """Find the unit with Delta(t^-1) = (-1)^mu t^(nu - 1) Delta(t) on the
    canonical representative and check the parity of every nu_i."""
    mu = lk.mu
    if mu < 2:
        raise ValueError("Torres-Fox symmetry is stated for at least two components")
    p = canonicalize(delta).rep
    if p.nvars != mu:
        raise ValueError(f"expected a polynomial in {mu} variables")
    if not p:
        return SymmetryReport(True, None, True)
    ratio = unit_ratio(involution(p), p)
    if ratio is None:
        return SymmetryReport(False, None, False)
    sign, shift = ratio
    nu = tuple(k + 1 for k in shift)
    row_sums = [sum(lk[i, j] for j in range(1, mu + 1)) for i in range(1, mu + 1)]
    parity_ok = all((a - b) % 2 == 0 for a, b in zip(nu, row_sums))
    return SymmetryReport(sign == (-1) ** mu, nu, parity_ok, sign)


# ---------------------------------------------------------------------------
# conditions on the auxiliary polynomial nabla


def laplacian_matrix(lk: LinkingMatrix, m: Sequence[int]) -> list[list[int]]:
    """Off-diagonal m_i m_j lk_ij, diagonal -sum_j m_i m_j lk_ij (zero row sums)."""
    mu = lk.mu
    rows = [[m[i] * m[j] * lk.entries[i][j] for j in range(mu)] for i in range(mu)]
    for i in range(mu):
        rows[i][i] = -sum(rows[i][j] for j in range(mu) if j != i)
    return rows


def laplacian_minor_D(lk: LinkingMatrix, m: Sequence[int]) -> int:
    """The common value of all (mu-1) x (mu-1) cofactors of the weighted
    linking Laplacian.  Raises ``ArithmeticError`` if two cofactors differ."""
    mu = lk.mu
    if mu < 2:
        raise ValueError("needs at least two components")
    if len(m) != mu:
        raise ValueError("multiplicity vector length does not match the linking matrix")
    lap = laplacian_matrix(lk, m)
    values = set()
    for i in range(mu):
        for j in range(mu):
            sub = [r[:j] + r[j + 1:] for k, r in enumerate(lap) if k != i]
            values.add((-1) ** (i + j) * det(sub))
    if len(values) != 1:
        raise ArithmeticError(f"cofactors disagree: {sorted(values)}")
    return values.pop()


def symmetric_representative(p: LaurentPoly) -> Optional[LaurentPoly]:
    """The shift of ``p`` with p(t^-1) = p(t), if one exists (one variable)."""
    if not p:
        return p
    (lo,), (hi,) = p.min_exponents(), p.max_exponents()
    if (lo + hi) % 2:
        return None
    c = p.shift((-(lo + hi) // 2,))
    return c if involution(c) == c else None


@dataclass
class Prop8Report:
    m: tuple[int, ...]
    d: int
    d_i: tuple[int, ...]
    nabla: Optional[UnitClass]
    nabla_symmetric: Optional[LaurentPoly]
    condition_i: bool
    condition_ii: bool
    condition_iii: Optional[bool]
    condition_iv: Optional[bool]
    D: Optional[int]
    notes: list[str] = field(default_factory=list)

    @property
    def holds(self) -> bool:
        """Every applicable condition passes (``None`` means not applicable)."""
        return (
            self.condition_i
            and self.condition_ii
            and self.condition_iii is not False
            and self.condition_iv is not False
        )

    def to_dict(self) -> dict:
        return {
            "m": list(self.m),
            "d": self.d,
            "d_i": list(self.d_i),
            "nabla": str(self.nabla) if self.nabla is not None else None,
            "nabla_symmetric": str(self.nabla_symmetric) if self.nabla_symmetric is not None else None,
            "condition_i": self.condition_i,
            "condition_ii": self.condition_ii,
            "condition_iii": self.condition_iii,
            "condition_iv": self.condition_iv,
            "D": self.D,
            "notes": list(self.notes),
            "holds": self.holds,
        }


_MISSING = object()


def _multiplicity_data(lk: LinkingMatrix, m: Sequence[int]) -> tuple[int, tuple[int, ...]]:
    mu = len(m)
    d = reduce(gcd, m, 0)
    di = tuple(
        gcd(m[i], sum(m[j] * lk.entries[i][j] for j in range(mu) if j != i)) for i in range(mu)
    )
    return d, di


def _nabla_for(
    keep: tuple[int, ...],
    delta_of: Callable[[tuple[int, ...]], Optional[UnitClass]],
    lk: LinkingMatrix,
    m: Sequence[int],
):
    """nabla for the sublink ``keep`` (original 1-based indices), ``None`` when
    the division fails, ``_MISSING`` when a needed sublink polynomial is absent."""
    delta = delta_of(keep)
    if delta is None:
        return _MISSING
    mk = [m[i - 1] for i in keep]
    if len(keep) == 1:
        return substitute_powers(as_poly(delta), mk)
    d, di = _multiplicity_data(lk.restrict(keep), mk)
    zero_at = [keep[k] for k, v in enumerate(di) if v == 0]
    if zero_at:
        return _nabla_for(tuple(i for i in keep if i != zero_at[0]), delta_of, lk, m)
    s = tpow_minus_one(d) ** 2 * substitute_powers(as_poly(delta), mk)
    p = prod((tpow_minus_one(x) for x in di), start=LaurentPoly.constant(1, 1))
    return exact_div(s, p)


def check_prop8(
    delta: UnitClass,
    lk: LinkingMatrix,
    m: Sequence[int],
    sublinks: Optional[Mapping[tuple[int, ...], UnitClass]] = None,
) -> Prop8Report:
    """Check the four conditions on the auxiliary polynomial nabla for one ``m``.

    ``sublinks`` maps tuples of kept component indices (ascending, 1-based) to
    the polynomials of those sublinks; it is only consulted when some
    ``m_i = 0``.
    """
    mu = lk.mu
    m = tuple(int(x) for x in m)
    if mu < 2:
        raise ValueError("needs at least two components")
    if len(m) != mu:
        raise ValueError("multiplicity vector length does not match the linking matrix")
    if not any(m):
        raise ValueError("the zero multiplicity vector is excluded")
    delta_p = as_poly(delta)
    full = tuple(range(1, mu + 1))

    def delta_of(keep):
        if keep == full:
            return delta
        return (sublinks or {}).get(keep)

    d, di = _multiplicity_data(lk, m)
    notes: list[str] = []
    s = tpow_minus_one(d) ** 2 * substitute_powers(delta_p, m)

    # (i)
    if all(di):
        p = prod((tpow_minus_one(x) for x in di), start=LaurentPoly.constant(1, 1))
        nabla_p = exact_div(s, p)
        cond_i = nabla_p is not None
    else:
        cond_i = not s
        notes.append("some d_i = 0: condition (i) only requires the right-hand side to vanish")
        nabla_p = _nabla_for(full, delta_of, lk, m) if cond_i else None
        if nabla_p is _MISSING:
            notes.append("nabla taken 0: sublink polynomial unavailable")
            nabla_p = LaurentPoly.zero(1)
        elif nabla_p is not None:
            notes.append("nabla chosen equal to the nabla of the sublink without the degenerate component")
        else:
            nabla_p = LaurentPoly.zero(1)

    nabla = canonicalize(nabla_p) if cond_i and nabla_p is not None else None

    # (ii): exactly symmetric representative supported in dZ
    sym = None
    cond_ii = False
    if nabla is not None:
        sym = symmetric_representative(nabla.rep)
        if sym is None:
            notes.append("no symmetric representative of nabla")
        elif any(e % d for (e,) in sym.terms):
            notes.append(f"nabla is not supported in {d}Z")
        else:
            cond_ii = True

    # (iii)
    D = laplacian_minor_D(lk, m)
    cond_iii: Optional[bool] = None
    if all(m):
        if nabla is None:
            cond_iii = False
        else:
            at_one = abs(sum(nabla.rep.terms.values()))
            cond_iii = at_one * prod(di) * abs(prod(m)) == d * d * abs(D)
            if D == 0:
                notes.append("D = 0 forces nabla(1) = 0")

    # (iv)
    cond_iv: Optional[bool] = None
    zeros = [i for i in full if m[i - 1] == 0]
    if zeros:
        results = []
        for i in zeros:
            sub = _nabla_for(tuple(j for j in full if j != i), delta_of, lk, m)
            if sub is _MISSING:
                notes.append(f"sublink polynomial without component {i} not supplied")
                results = None
                break
            results.append(sub is not None and nabla is not None and canonicalize(sub) == nabla)
        cond_iv = all(results) if results is not None else None

    return Prop8Report(m, d, di, nabla, sym, cond_i, cond_ii, cond_iii, cond_iv, D, notes)


# ---------------------------------------------------------------------------
# reconstruction from one-variable specializations


def reconstruct_lemma2(
    oracle: Callable[[tuple[int, ...]], UnitClass | LaurentPoly],
    mu: int,
    degree_bound: int,
) -> UnitClass:
    """Recover a polynomial in ``mu`` variables, up to units, from a single
    specialization at ``m = (1, N, ..., N^(mu-1))``.

    The oracle may answer up to units, so exponents are known only relative to
    one another: they are decoded as balanced base-``N`` digits in
    ``[-B, B]`` with ``N = 2B + 1``, where ``B`` bounds every variable's
    degree spread.
    """
    if mu < 1:
        raise ValueError("mu must be positive")
    if degree_bound < 0:
        raise ValueError("degree bound must be non-negative")
    B = degree_bound
    N = 2 * B + 1
    m = tuple(N ** k for k in range(mu))
    answer = as_poly(oracle(m))
    if answer.nvars != 1:
        raise ValueError(f"oracle returned a polynomial in {answer.nvars} variables, expected 1")
    rep = canonicalize(answer).rep
    out: dict[tuple[int, ...], int] = {}
    for (e,), c in rep.terms.items():
        digits = []
        for _ in range(mu):
            r = e % N
            if r > B:
                r -= N
            digits.append(r)
            e = (e - r) // N
        if e != 0:
            raise ValueError("oracle answer exceeds the declared degree bound")
        out[tuple(digits)] = c
    return canonicalize(LaurentPoly(mu, out))


def reconstruction_point(mu: int, degree_bound: int) -> tuple[int, ...]:
    """The multiplicity vector queried by :func:`reconstruct_lemma2`."""
    N = 2 * degree_bound + 1
    return tuple(N ** k for k in range(mu))
