"""Recursive dense polynomials over Z, used for gcd and exact division.

A polynomial in ``k`` variables is either an ``int`` (``k == 0``) or a list
of coefficients in the main variable (the *last* variable), lowest degree
first, each coefficient being a polynomial in ``k - 1`` variables.  Lists
never carry trailing zeros, so the zero polynomial in ``k >= 1`` variables
is ``[]``.

Only non-negative exponents are representable; the Laurent layer shifts
exponents before calling in here.
"""

from __future__ import annotations

from math import gcd as _igcd
from typing import Any, Optional

Rec = Any  # int | list[Rec]


def zero(k: int) -> Rec:
    return 0 if k == 0 else []


def one(k: int) -> Rec:
    r: Rec = 1
    for _ in range(k):
        r = [r]
    return r


def is_zero(a: Rec, k: int) -> bool:
    return a == 0 if k == 0 else not a


def _trim(a: list) -> list:
    while a and _is_zero_any(a[-1]):
        a.pop()
    return a


def _is_zero_any(a: Rec) -> bool:
    return a == 0 if isinstance(a, int) else not a


def degree(a: Rec) -> int:
    return len(a) - 1


def lc(a: Rec) -> Rec:
    return a[-1]


def add(a: Rec, b: Rec, k: int) -> Rec:
    if k == 0:
        return a + b
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] = add(out[i], c, k - 1)
    return _trim(out)


def neg(a: Rec, k: int) -> Rec:
    if k == 0:
        return -a
    return [neg(c, k - 1) for c in a]


def sub(a: Rec, b: Rec, k: int) -> Rec:
    return add(a, neg(b, k), k)


def mul(a: Rec, b: Rec, k: int) -> Rec:
    if k == 0:
        return a * b
    if not a or not b:
        return []
    out = [zero(k - 1)] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if _is_zero_any(ca):
            continue
        for j, cb in enumerate(b):
            if _is_zero_any(cb):
                continue
            out[i + j] = add(out[i + j], mul(ca, cb, k - 1), k - 1)
    return _trim(out)


def scale(a: Rec, c: Rec, k: int) -> Rec:
    """Multiply ``a`` (k vars) by ``c`` (k - 1 vars, constant in the main variable)."""
    if _is_zero_any(c):
        return []
    return _trim([mul(x, c, k - 1) for x in a])


def shift(a: Rec, n: int, k: int) -> Rec:
    """Multiply by the main variable to the power ``n``."""
    if not a:
        return a
    return [zero(k - 1)] * n + list(a)


def divexact(a: Rec, b: Rec, k: int) -> Optional[Rec]:
    """Return ``a / b`` if ``b`` divides ``a`` exactly, else ``None``."""
    if k == 0:
        if b == 0:
            raise ZeroDivisionError("division by zero polynomial")
        q, r = divmod(a, b)
        return q if r == 0 else None
    if not b:
        raise ZeroDivisionError("division by zero polynomial")
    if not a:
        return []
    db = degree(b)
    if degree(a) < db:
        return None
    rem = list(a)
    quot = [zero(k - 1)] * (degree(a) - db + 1)
    lb = lc(b)
    while rem and degree(rem) >= db:
        c = divexact(lc(rem), lb, k - 1)
        if c is None:
            return None
        e = degree(rem) - db
        quot[e] = c
        rem = sub(rem, shift(scale(b, c, k), e, k), k)
    if rem:
        return None
    return _trim(quot)


def divexact_coeff(a: Rec, c: Rec, k: int) -> Rec:
    """Divide every main-variable coefficient of ``a`` by ``c``; must be exact."""
    out = []
    for x in a:
        q = divexact(x, c, k - 1)
        if q is None:
            raise ArithmeticError("inexact coefficient division")
        out.append(q)
    return out


def pow_(a: Rec, n: int, k: int) -> Rec:
    r = one(k)
    for _ in range(n):
        r = mul(r, a, k)
    return r


def prem(a: Rec, b: Rec, k: int) -> Rec:
    """Pseudo-remainder of ``a`` by ``b`` in the main variable."""
    db = degree(b)
    delta = degree(a) - db
    if delta < 0:
        return a
    lb = lc(b)
    r = list(a)
    steps = 0
    while r and degree(r) >= db:
        e = degree(r) - db
        r = sub(scale(r, lb, k), shift(scale(b, lc(r), k), e, k), k)
        steps += 1
    extra = delta + 1 - steps
    if extra > 0 and r:
        r = scale(r, pow_(lb, extra, k - 1), k)
    return r


def content(a: Rec, k: int) -> Rec:
    """gcd of the main-variable coefficients (a polynomial in k - 1 vars)."""
    g = zero(k - 1)
    for c in a:
        g = gcd(g, c, k - 1)
        if is_unit(g, k - 1):
            break
    return g


def is_unit(a: Rec, k: int) -> bool:
    while k > 0:
        if len(a) != 1:
            return False
        a = a[0]
        k -= 1
    return a in (1, -1)


def primitive_part(a: Rec, k: int) -> Rec:
    if not a:
        return a
    c = content(a, k)
    if is_unit(c, k - 1):
        return _normalize_sign(a, k)
    return _normalize_sign(divexact_coeff(a, c, k), k)


def _leading_int(a: Rec, k: int) -> int:
    while k > 0:
        a = a[-1]
        k -= 1
    return a


def _normalize_sign(a: Rec, k: int) -> Rec:
    if is_zero(a, k):
        return a
    return neg(a, k) if _leading_int(a, k) < 0 else a


def gcd(a: Rec, b: Rec, k: int) -> Rec:
    """A gcd of ``a`` and ``b`` in Z[x_1..x_k], sign-normalized."""
    if k == 0:
        return _igcd(a, b)
    if not a:
        return _normalize_sign(b, k)
    if not b:
        return _normalize_sign(a, k)
    if degree(a) < degree(b):
        a, b = b, a
    ca, cb = content(a, k), content(b, k)
    cg = gcd(ca, cb, k - 1)
    a = a if is_unit(ca, k - 1) else divexact_coeff(a, ca, k)
    b = b if is_unit(cb, k - 1) else divexact_coeff(b, cb, k)
    g = _subresultant_gcd(a, b, k)
    return _normalize_sign(scale(g, cg, k), k)


def _subresultant_gcd(a: Rec, b: Rec, k: int) -> Rec:
    # a, b primitive, deg a >= deg b >= 0
    if degree(b) == 0:
        return one(k)
    g = one(k - 1)
    h = one(k - 1)
    while True:
        delta = degree(a) - degree(b)
        r = prem(a, b, k)
        if not r:
            return primitive_part(b, k)
        if degree(r) == 0:
            return one(k)
        a = b
        div = mul(g, pow_(h, delta, k - 1), k - 1)
        b = divexact_coeff(r, div, k)
        g = lc(a)
        if delta == 0:
            continue
        hq = divexact(pow_(g, delta, k - 1), pow_(h, delta - 1, k - 1), k - 1)
        if hq is None:
            raise ArithmeticError("subresultant recurrence produced an inexact step")
        h = hq


def from_terms(terms: dict[tuple[int, ...], int], k: int) -> Rec:
    """Build from an exponent-vector map with non-negative exponents."""
    if k == 0:
        return sum(terms.values())
    groups: dict[int, dict[tuple[int, ...], int]] = {}
    for exps, c in terms.items():
        groups.setdefault(exps[-1], {})[exps[:-1]] = c
    if not groups:
        return []
    out = [zero(k - 1)] * (max(groups) + 1)
    for e, sub_terms in groups.items():
        out[e] = from_terms(sub_terms, k - 1)
    return _trim(out)


def to_terms(a: Rec, k: int) -> dict[tuple[int, ...], int]:
    if k == 0:
        return {(): a} if a else {}
    out: dict[tuple[int, ...], int] = {}
    for e, c in enumerate(a):
        for exps, v in to_terms(c, k - 1).items():
            out[exps + (e,)] = v
    return out
