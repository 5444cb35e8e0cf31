"""Fox free differential calculus and the multivariable Alexander polynomial.

The abelianization sends generator ``g`` to ``t_c`` where ``c`` is the
component of ``g``; the Alexander matrix has one row per relator and one
column per generator.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Optional, Sequence

from .laurent import LaurentPoly, UnitClass, canonicalize, exact_div, gcd_multivar
from .linkdiag import GroupPresentation, LinkDiagram, wirtinger
from .matrices import det


def fox_derivative(
    word: Sequence[int], j: int, generator_component: Sequence[int], nvars: int
) -> LaurentPoly:
    """d(word)/d(x_j) pushed into Z[t_1^{+-1}, ..., t_nvars^{+-1}].

    ``word`` is a sequence of signed 1-based generator indices.
    """
    ngen = len(generator_component)
    if not 1 <= j <= ngen:
        raise IndexError(f"generator index {j} out of range 1..{ngen}")
    prefix = [0] * nvars
    out: dict[tuple[int, ...], int] = {}

    def bump(exps, c):
        v = out.get(exps, 0) + c
        if v:
            out[exps] = v
        else:
            out.pop(exps, None)

    for letter in word:
        g = abs(letter)
        if not 1 <= g <= ngen:
            raise IndexError(f"generator index {letter} out of range")
        comp = generator_component[g - 1] - 1
        if letter > 0:
            if g == j:
                bump(tuple(prefix), 1)
            prefix[comp] += 1
        else:
            prefix[comp] -= 1
            if g == j:
                bump(tuple(prefix), -1)
    return LaurentPoly(nvars, out)


def abelianize(word: Sequence[int], generator_component: Sequence[int], nvars: int) -> LaurentPoly:
    exps = [0] * nvars
    for letter in word:
        exps[generator_component[abs(letter) - 1] - 1] += 1 if letter > 0 else -1
    return LaurentPoly.monomial(exps)


@dataclass(frozen=True)
class AlexanderMatrix:
    rows: tuple[tuple[LaurentPoly, ...], ...]
    ncols: int
    nvars: int
    generator_component: tuple[int, ...]

    @property
    def nrows(self) -> int:
        return len(self.rows)

    def row_sum_defect(self, i: int) -> LaurentPoly:
        """sum_j M[i][j] * (t_c(j) - 1); zero for every row of a genuine relator matrix."""
        total = LaurentPoly.zero(self.nvars)
        for j, entry in enumerate(self.rows[i]):
            t = LaurentPoly.var(self.generator_component[j], self.nvars)
            total = total + entry * (t - 1)
        return total

    def delete_column(self, j: int, rows: Optional[Sequence[int]] = None) -> list[list[LaurentPoly]]:
        """0-based column ``j`` removed; optionally restricted to ``rows``."""
        sel = range(self.nrows) if rows is None else rows
        return [list(self.rows[i][:j] + self.rows[i][j + 1:]) for i in sel]


def alexander_matrix(p: GroupPresentation, mu: int) -> AlexanderMatrix:
    if any(not 1 <= c <= mu for c in p.generator_component):
        raise ValueError(f"generator components must lie in 1..{mu}")
    rows = tuple(
        tuple(fox_derivative(r, j, p.generator_component, mu) for j in range(1, p.num_generators + 1))
        for r in p.relators
    )
    return AlexanderMatrix(rows, p.num_generators, mu, tuple(p.generator_component))


def delta1(m: AlexanderMatrix) -> UnitClass:
    """gcd of all (n-1) x (n-1) minors, i.e. the Alexander polynomial.

    Stops early once the running gcd is a unit.
    """
    n = m.ncols
    if n < 1:
        raise ValueError("Alexander matrix needs at least one column")
    k = n - 1
    one = LaurentPoly.constant(1, m.nvars)
    if k == 0:
        return canonicalize(one)
    if m.nrows < k:
        return canonicalize(LaurentPoly.zero(m.nvars))
    g = LaurentPoly.zero(m.nvars)
    for skip in range(n):
        for rsel in combinations(range(m.nrows), k):
            sub = m.delete_column(skip, rsel)
            d = det(sub, one)
            if not d:
                continue
            g = gcd_multivar(g, d).rep
            if g.is_unit():
                return canonicalize(g)
    return canonicalize(g)


def alexander_polynomial(d: LinkDiagram) -> UnitClass:
    """Delta_L of a diagram through its Wirtinger presentation."""
    return delta1(alexander_matrix(wirtinger(d), d.num_components))


@dataclass
class ColumnQuotient:
    column: int
    component: int
    determinant: LaurentPoly
    quotient: Optional[UnitClass]


@dataclass
class DeltaStarReport:
    columns: list[ColumnQuotient] = field(default_factory=list)
    delta_star: Optional[UnitClass] = None
    consistent: bool = False
    agrees_with_delta1: Optional[bool] = None

    @property
    def holds(self) -> bool:
        return self.consistent and self.agrees_with_delta1 is not False


def delta_star_check(m: AlexanderMatrix, delta: Optional[UnitClass] = None) -> DeltaStarReport:
    """Check that deleting column ``j`` (and the last relator) leaves a
    determinant ``(t_c(j) - 1) * Delta_*`` with one common ``Delta_*``.

    Divisibility failures are reported, not raised.
    """
    if m.nvars < 2:
        raise ValueError("delta_star_check needs at least two variables")
    n = m.ncols
    rows = list(range(min(m.nrows, n - 1)))
    one = LaurentPoly.constant(1, m.nvars)
    report = DeltaStarReport()
    quotients = []
    for j in range(n):
        comp = m.generator_component[j]
        if len(rows) < n - 1:
            dj = LaurentPoly.zero(m.nvars)
        else:
            dj = det(m.delete_column(j, rows), one)
        q = exact_div(dj, LaurentPoly.var(comp, m.nvars) - 1)
        uq = canonicalize(q) if q is not None else None
        report.columns.append(ColumnQuotient(j + 1, comp, dj, uq))
        quotients.append(uq)
    report.consistent = all(q is not None for q in quotients) and len(set(quotients)) == 1
    if report.consistent:
        report.delta_star = quotients[0]
        if delta is not None:
            report.agrees_with_delta1 = report.delta_star == delta
    return report
