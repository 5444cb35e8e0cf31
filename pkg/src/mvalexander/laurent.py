"""Integer Laurent polynomials in one or several variables.

Values are immutable.  A :class:`LaurentPoly` stores a map from exponent
vectors to nonzero integer coefficients; :class:`UnitClass` wraps the
canonical representative of a polynomial modulo the units
``+-t_1^a_1 ... t_n^a_n`` of the Laurent ring.

The text grammar used by the CLI and fixture files is::

    poly   := term (('+'|'-') term)*
    term   := [integer] ['*'] factor ('*' factor)*  |  integer
    factor := var ['^' integer]
    var    := 't' index | 't'

e.g. ``-3*t1^2*t2^-1 + t3 - 1``.  A bare ``t`` means ``t1``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import gcd as _igcd
from typing import Iterable, Mapping, Optional, Sequence, Union

from . import _recpoly as rp

Exps = tuple[int, ...]


class LaurentPoly:
    """Element of Z[t_1^{+-1}, ..., t_n^{+-1}].

    >>> t1, t2 = LaurentPoly.var(1, 2), LaurentPoly.var(2, 2)
    >>> str((t1 - 1) * (t1 + 1))
    't1^2 - 1'
    """

    __slots__ = ("nvars", "_terms", "_hash")

    def __init__(self, nvars: int, terms: Optional[Mapping[Exps, int]] = None):
        if nvars < 0:
            raise ValueError("nvars must be non-negative")
        clean: dict[Exps, int] = {}
        for exps, c in (terms or {}).items():
            exps = tuple(int(e) for e in exps)
            if len(exps) != nvars:
                raise ValueError(f"exponent vector {exps} has length {len(exps)}, expected {nvars}")
            if c:
                clean[exps] = clean.get(exps, 0) + int(c)
                if not clean[exps]:
                    del clean[exps]
        self.nvars = nvars
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, nvars: int, terms: dict[Exps, int]) -> "LaurentPoly":
        # terms already validated and free of zeros
        p = cls.__new__(cls)
        p.nvars = nvars
        p._terms = terms
        p._hash = None
        return p

    # constructors

    @classmethod
    def zero(cls, nvars: int) -> "LaurentPoly":
        return cls._raw(nvars, {})

    @classmethod
    def constant(cls, c: int, nvars: int) -> "LaurentPoly":
        return cls._raw(nvars, {(0,) * nvars: int(c)} if c else {})

    @classmethod
    def monomial(cls, exps: Sequence[int], coeff: int = 1) -> "LaurentPoly":
        exps = tuple(exps)
        return cls._raw(len(exps), {exps: int(coeff)} if coeff else {})

    @classmethod
    def var(cls, k: int, nvars: int) -> "LaurentPoly":
        """The variable ``t_k`` (1-based)."""
        if not 1 <= k <= nvars:
            raise IndexError(f"variable index {k} out of range 1..{nvars}")
        return cls.monomial(tuple(1 if i == k - 1 else 0 for i in range(nvars)))

    # accessors

    @property
    def terms(self) -> Mapping[Exps, int]:
        return self._terms

    def items(self):
        return self._terms.items()

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def coeff(self, exps: Sequence[int]) -> int:
        return self._terms.get(tuple(exps), 0)

    def min_exponents(self) -> Exps:
        if not self._terms:
            return (0,) * self.nvars
        return tuple(min(e[i] for e in self._terms) for i in range(self.nvars))

    def max_exponents(self) -> Exps:
        if not self._terms:
            return (0,) * self.nvars
        return tuple(max(e[i] for e in self._terms) for i in range(self.nvars))

    def degree_spread(self) -> Exps:
        lo, hi = self.min_exponents(), self.max_exponents()
        return tuple(h - l for l, h in zip(lo, hi))

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def is_unit(self) -> bool:
        return len(self._terms) == 1 and next(iter(self._terms.values())) in (1, -1)

    def content(self) -> int:
        return reduce(_igcd, self._terms.values(), 0)

    def __call__(self, *values):
        """Evaluate at numeric (or polynomial) values."""
        if len(values) != self.nvars:
            raise ValueError(f"expected {self.nvars} values")
        total = 0
        for exps, c in self._terms.items():
            term = c
            for v, e in zip(values, exps):
                if e < 0 and isinstance(v, int):
                    v = Fraction(v)
                term = term * v ** e
            total = total + term
        return total

    # ring structure

    def _check(self, other: "LaurentPoly") -> None:
        if self.nvars != other.nvars:
            raise ValueError(f"variable-count mismatch: {self.nvars} vs {other.nvars}")

    def _coerce(self, other) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            self._check(other)
            return other
        if isinstance(other, int):
            return LaurentPoly.constant(other, self.nvars)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for e, c in other._terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return LaurentPoly._raw(self.nvars, out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._raw(self.nvars, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict[Exps, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                v = out.get(e, 0) + c1 * c2
                if v:
                    out[e] = v
                else:
                    out.pop(e, None)
        return LaurentPoly._raw(self.nvars, out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            if not self.is_monomial():
                raise ArithmeticError("only monomials can be raised to negative powers")
            (e, c), = self._terms.items()
            if c not in (1, -1):
                raise ArithmeticError("non-unit monomial has no inverse")
            return LaurentPoly.monomial(tuple(n * x for x in e), c ** (-n))
        result = LaurentPoly.constant(1, self.nvars)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __floordiv__(self, other):
        """Exact division; raises ``ArithmeticError`` when not divisible."""
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        q = exact_div(self, other)
        if q is None:
            raise ArithmeticError(f"{other} does not divide {self}")
        return q

    def shift(self, exps: Sequence[int]) -> "LaurentPoly":
        """Multiply by the monomial t^exps."""
        exps = tuple(exps)
        return LaurentPoly._raw(
            self.nvars, {tuple(a + b for a, b in zip(e, exps)): c for e, c in self._terms.items()}
        )

    # comparison / hashing

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.constant(other, self.nvars)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.nvars == other.nvars and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self._terms.items())))
        return self._hash

    def __repr__(self):
        return f"LaurentPoly({self.nvars}, {format_poly(self)!r})"

    def __str__(self):
        return format_poly(self)


# ---------------------------------------------------------------------------
# module-level operations


def add(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    p._check(q)
    return p + q


def mul(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    p._check(q)
    return p * q


def neg(p: LaurentPoly) -> LaurentPoly:
    return -p


def substitute_powers(p: LaurentPoly, m: Sequence[int]) -> LaurentPoly:
    """Return p(t^m_1, ..., t^m_n) as a one-variable polynomial."""
    p = as_poly(p)
    m = tuple(int(x) for x in m)
    if len(m) != p.nvars:
        raise ValueError(f"multiplicity vector has length {len(m)}, expected {p.nvars}")
    out: dict[Exps, int] = {}
    for exps, c in p.items():
        e = (sum(a * b for a, b in zip(exps, m)),)
        v = out.get(e, 0) + c
        if v:
            out[e] = v
        else:
            out.pop(e, None)
    return LaurentPoly._raw(1, out)


def eval_at_one_var(p: LaurentPoly, k: int, value: int = 1) -> LaurentPoly:
    """Set ``t_k = value`` (1-based; ``value`` must be +-1) and drop that variable."""
    p = as_poly(p)
    if not 1 <= k <= p.nvars:
        raise IndexError(f"variable index {k} out of range 1..{p.nvars}")
    if value not in (1, -1):
        raise ValueError("only evaluation at +-1 stays inside the integer Laurent ring")
    out: dict[Exps, int] = {}
    for exps, c in p.items():
        e = exps[: k - 1] + exps[k:]
        c = c * (value ** exps[k - 1] if exps[k - 1] >= 0 else value ** (-exps[k - 1]))
        v = out.get(e, 0) + c
        if v:
            out[e] = v
        else:
            out.pop(e, None)
    return LaurentPoly._raw(p.nvars - 1, out)


def involution(p: LaurentPoly) -> LaurentPoly:
    """t_i -> t_i^{-1} for every variable."""
    p = as_poly(p)
    return LaurentPoly._raw(p.nvars, {tuple(-e for e in exps): c for exps, c in p.items()})


def permute_vars(p: LaurentPoly, order: Sequence[int]) -> LaurentPoly:
    """New variable ``i`` is old variable ``order[i]`` (1-based)."""
    p = as_poly(p)
    if sorted(order) != list(range(1, p.nvars + 1)):
        raise ValueError(f"{order} is not a permutation of 1..{p.nvars}")
    return LaurentPoly._raw(
        p.nvars, {tuple(exps[j - 1] for j in order): c for exps, c in p.items()}
    )


def normalize_shift(p: LaurentPoly) -> LaurentPoly:
    """Multiply by the monomial that makes every variable's minimum exponent zero."""
    lo = p.min_exponents()
    if not any(lo):
        return p
    return p.shift(tuple(-x for x in lo))


@dataclass(frozen=True)
class UnitClass:
    """A Laurent polynomial up to multiplication by +-monomials.

    The stored representative is canonical: every variable's minimum exponent
    is zero and the coefficient of the lexicographically smallest exponent
    vector is positive.  Constructing from any representative canonicalizes.
    """

    rep: LaurentPoly

    def __post_init__(self):
        p = self.rep
        if isinstance(p, UnitClass):
            p = p.rep
        p = normalize_shift(p)
        if p and p.coeff(min(p.terms)) < 0:
            p = -p
        object.__setattr__(self, "rep", p)

    @property
    def nvars(self) -> int:
        return self.rep.nvars

    def is_zero(self) -> bool:
        return self.rep.is_zero()

    def is_unit(self) -> bool:
        return self.rep.is_unit()

    def __bool__(self) -> bool:
        return bool(self.rep)

    def __str__(self) -> str:
        return format_poly(self.rep)

    def __repr__(self) -> str:
        return f"UnitClass({self.nvars}, {format_poly(self.rep)!r})"


def canonicalize(p: Union[LaurentPoly, UnitClass]) -> UnitClass:
    return p if isinstance(p, UnitClass) else UnitClass(p)


def as_poly(p: Union[LaurentPoly, UnitClass]) -> LaurentPoly:
    return p.rep if isinstance(p, UnitClass) else p


def equal_up_to_units(p, q) -> bool:
    return canonicalize(as_poly(p)) == canonicalize(as_poly(q))


def unit_ratio(p: LaurentPoly, q: LaurentPoly) -> Optional[tuple[int, Exps]]:
    """If ``p = sign * t^exps * q`` return ``(sign, exps)``, else ``None``."""
    p, q = as_poly(p), as_poly(q)
    p._check(q)
    if not p or not q or len(p) != len(q):
        return None
    ep, eq = min(p.terms), min(q.terms)
    cp, cq = p.coeff(ep), q.coeff(eq)
    if cp not in (cq, -cq):
        return None
    sign = 1 if cp == cq else -1
    shift = tuple(a - b for a, b in zip(ep, eq))
    if q.shift(shift) * sign != p:
        return None
    return sign, shift


# ---------------------------------------------------------------------------
# gcd and exact division


def _to_rec(p: LaurentPoly):
    # p must have non-negative exponents
    return rp.from_terms(dict(p.terms), p.nvars)


def _from_rec(a, nvars: int) -> LaurentPoly:
    return LaurentPoly._raw(nvars, {e: c for e, c in rp.to_terms(a, nvars).items() if c})


def exact_div(p: LaurentPoly, q: LaurentPoly) -> Optional[LaurentPoly]:
    """Return ``r`` with ``q * r == p`` in the Laurent ring, or ``None``.

    Raises ``ZeroDivisionError`` when ``q`` is zero.
    """
    p, q = as_poly(p), as_poly(q)
    p._check(q)
    if not q:
        raise ZeroDivisionError("division by the zero polynomial")
    if not p:
        return LaurentPoly.zero(p.nvars)
    lo_p, lo_q = p.min_exponents(), q.min_exponents()
    p0, q0 = normalize_shift(p), normalize_shift(q)
    if q0.is_monomial():
        (_, c), = q0.items()
        if any(v % c for v in p0.terms.values()):
            return None
        r0 = LaurentPoly._raw(p.nvars, {e: v // c for e, v in p0.items()})
    else:
        if any(a < b for a, b in zip(p0.max_exponents(), q0.max_exponents())):
            return None
        r = rp.divexact(_to_rec(p0), _to_rec(q0), p.nvars)
        if r is None:
            return None
        r0 = _from_rec(r, p.nvars)
    return r0.shift(tuple(a - b for a, b in zip(lo_p, lo_q)))


def gcd_multivar(p: LaurentPoly, q: LaurentPoly) -> UnitClass:
    """A greatest common divisor in the Laurent ring, as a unit class."""
    p, q = as_poly(p), as_poly(q)
    p._check(q)
    if not p:
        return canonicalize(q)
    if not q:
        return canonicalize(p)
    n = p.nvars
    if n == 0:
        return canonicalize(LaurentPoly.constant(_igcd(p.coeff(()), q.coeff(())), 0))
    p0, q0 = normalize_shift(p), normalize_shift(q)
    if p0.is_monomial() or q0.is_monomial():
        return canonicalize(LaurentPoly.constant(_igcd(p0.content(), q0.content()), n))
    g = rp.gcd(_to_rec(p0), _to_rec(q0), n)
    return canonicalize(_from_rec(g, n))


def gcd_many(polys: Iterable[LaurentPoly], nvars: int) -> UnitClass:
    g = LaurentPoly.zero(nvars)
    for p in polys:
        g = gcd_multivar(g, as_poly(p)).rep
        if g.is_unit():
            break
    return canonicalize(g)


# ---------------------------------------------------------------------------
# text format

_TOKEN = re.compile(r"\s*(?:(\d+)|(t\d*)|(\^)|(\*)|([+-])|(\S))")


def _var_name(i: int, nvars: int) -> str:
    return "t" if nvars == 1 else f"t{i + 1}"


def format_poly(p: Union[LaurentPoly, UnitClass]) -> str:
    """Serialize with terms in decreasing lexicographic order of exponent vectors."""
    p = as_poly(p)
    if not p:
        return "0"
    parts: list[str] = []
    for exps in sorted(p.terms, reverse=True):
        c = p.coeff(exps)
        factors = []
        for i, e in enumerate(exps):
            if e == 0:
                continue
            name = _var_name(i, p.nvars)
            factors.append(name if e == 1 else f"{name}^{e}")
        mag = abs(c)
        if not factors:
            body = str(mag)
        elif mag == 1:
            body = "*".join(factors)
        else:
            body = f"{mag}*" + "*".join(factors)
        if not parts:
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append(("- " if c < 0 else "+ ") + body)
    return " ".join(parts)


class PolyParseError(ValueError):
    pass


def parse_poly(text: str, nvars: Optional[int] = None) -> LaurentPoly:
    """Parse the polynomial grammar.  ``nvars`` defaults to the largest index used."""
    tokens = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            break
        num, var, caret, star, sign, bad = m.groups()
        if bad is not None:
            raise PolyParseError(f"unexpected character {bad!r} at position {m.start(6)}")
        if num is not None:
            tokens.append(("num", int(num)))
        elif var is not None:
            tokens.append(("var", int(var[1:]) if len(var) > 1 else None))
        elif caret is not None:
            tokens.append(("^", None))
        elif star is not None:
            tokens.append(("*", None))
        else:
            tokens.append(("sign", sign))
        pos = m.end()
    if not tokens:
        raise PolyParseError("empty polynomial")

    raw_terms: list[tuple[int, dict[int, int]]] = []
    i = 0

    def peek(kind):
        return i < len(tokens) and tokens[i][0] == kind

    def signed_int():
        nonlocal i
        s = 1
        if peek("sign"):
            s = -1 if tokens[i][1] == "-" else 1
            i += 1
        if not peek("num"):
            raise PolyParseError("expected integer exponent")
        v = tokens[i][1]
        i += 1
        return s * v

    bare = indexed = False
    first = True
    while i < len(tokens):
        sign = 1
        if peek("sign"):
            sign = -1 if tokens[i][1] == "-" else 1
            i += 1
        elif not first:
            raise PolyParseError(f"expected '+' or '-' before term {len(raw_terms) + 1}")
        first = False
        coeff = 1
        have_coeff = False
        if peek("num"):
            coeff = tokens[i][1]
            have_coeff = True
            i += 1
            if peek("*"):
                i += 1
                if not peek("var"):
                    raise PolyParseError("expected variable after '*'")
        powers: dict[int, int] = {}
        while peek("var"):
            idx = tokens[i][1]
            if idx is None:
                bare = True
                idx = 1
            elif idx < 1:
                raise PolyParseError("variable indices start at 1")
            else:
                indexed = True
            i += 1
            e = 1
            if peek("^"):
                i += 1
                e = signed_int()
            powers[idx] = powers.get(idx, 0) + e
            if peek("*"):
                i += 1
                if not peek("var"):
                    raise PolyParseError("expected variable after '*'")
        if not have_coeff and not powers:
            raise PolyParseError("empty term")
        raw_terms.append((sign * coeff, powers))

    used = max((k for _, pw in raw_terms for k in pw), default=0)
    if bare and (indexed or (nvars or 1) > 1):
        raise PolyParseError("the bare variable 't' is only allowed in single-variable polynomials")
    if nvars is None:
        nvars = max(used, 1)
    elif used > nvars:
        raise PolyParseError(f"variable t{used} exceeds the declared {nvars} variables")
    out: dict[Exps, int] = {}
    for c, pw in raw_terms:
        e = tuple(pw.get(k + 1, 0) for k in range(nvars))
        out[e] = out.get(e, 0) + c
    return LaurentPoly(nvars, out)
