"""Exact determinants over integral domains (int or LaurentPoly entries).

Entries must support ``+``, ``-``, ``*`` and exact ``//``.
"""

from __future__ import annotations

from itertools import combinations
from typing import Any, Callable, Iterator, Sequence

Matrix = Sequence[Sequence[Any]]

CofactorCutoff = 5


def _is_zero(x) -> bool:
    return not x


def det(rows: Matrix, one: Any = 1) -> Any:
    """Determinant of a square matrix.

    Cofactor expansion below size 5, fraction-free (Bareiss) elimination
    above.  ``one`` is the multiplicative identity, returned for the empty
    matrix.
    """
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise ValueError("determinant of a non-square matrix")
    if n == 0:
        return one
    if n < CofactorCutoff:
        return _cofactor(rows)
    return bareiss(rows)


def _cofactor(rows: Matrix):
    n = len(rows)
    if n == 1:
        return rows[0][0]
    if n == 2:
        return rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    total = None
    for j in range(n):
        a = rows[0][j]
        if _is_zero(a):
            continue
        minor = [r[:j] + r[j + 1:] for r in (list(x) for x in rows[1:])]
        term = a * _cofactor(minor)
        if j % 2:
            term = -term
        total = term if total is None else total + term
    if total is None:
        return rows[0][0] - rows[0][0]
    return total


def bareiss(rows: Matrix):
    """Fraction-free Gaussian elimination; every division is exact."""
    m = [list(r) for r in rows]
    n = len(m)
    sign = 1
    prev = None
    for k in range(n - 1):
        if _is_zero(m[k][k]):
            for i in range(k + 1, n):
                if not _is_zero(m[i][k]):
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return m[0][0] - m[0][0]
        pivot = m[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                v = m[i][j] * pivot - m[i][k] * m[k][j]
                m[i][j] = v if prev is None else v // prev
        prev = pivot
    d = m[n - 1][n - 1]
    return d if sign > 0 else -d


def minors(rows: Matrix, ncols: int, size: int) -> Iterator[tuple[tuple[int, ...], tuple[int, ...], Any]]:
    """Yield ``(row_idx, col_idx, determinant)`` for every ``size x size`` minor."""
    nrows = len(rows)
    for cols in combinations(range(ncols), size):
        for rsel in combinations(range(nrows), size):
            sub = [[rows[i][j] for j in cols] for i in rsel]
            yield rsel, cols, det(sub)


def transpose(rows: Matrix, ncols: int | None = None) -> list[list[Any]]:
    if ncols is None:
        ncols = len(rows[0]) if rows else 0
    return [[rows[i][j] for i in range(len(rows))] for j in range(ncols)]


def matmul(a: Matrix, b: Matrix, zero: Any = 0) -> list[list[Any]]:
    inner = len(b)
    cols = len(b[0]) if b else 0
    return [[sum((a[i][k] * b[k][j] for k in range(inner)), zero) for j in range(cols)] for i in range(len(a))]


def apply(rows: Matrix, f: Callable[[Any], Any]) -> list[list[Any]]:
    return [[f(x) for x in r] for r in rows]
