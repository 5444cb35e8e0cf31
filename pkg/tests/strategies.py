"""Hypothesis strategies and seeded generators shared by the test modules."""

from __future__ import annotations

import random

from hypothesis import strategies as st

from mvalexander.laurent import LaurentPoly


def laurent(nvars: int, max_terms: int = 5, lo: int = -3, hi: int = 3, coeff: int = 9):
    exps = st.tuples(*[st.integers(lo, hi)] * nvars)
    return st.dictionaries(exps, st.integers(-coeff, coeff), max_size=max_terms).map(
        lambda d: LaurentPoly(nvars, d)
    )


def nonzero_laurent(nvars: int, **kw):
    return laurent(nvars, **kw).filter(bool)


def units(nvars: int, span: int = 4):
    return st.tuples(st.sampled_from([1, -1]), st.tuples(*[st.integers(-span, span)] * nvars)).map(
        lambda se: LaurentPoly.monomial(se[1], se[0])
    )


@st.composite
def poly_pair_same_nvars(draw, max_nvars: int = 3, **kw):
    n = draw(st.integers(1, max_nvars))
    return draw(laurent(n, **kw)), draw(laurent(n, **kw))


def random_poly(rng: random.Random, nvars: int, degree: int, coeff: int, max_terms: int = 6) -> LaurentPoly:
    """A random nonzero polynomial with exponents in ``[0, degree]``."""
    while True:
        terms = {
            tuple(rng.randint(0, degree) for _ in range(nvars)): rng.randint(-coeff, coeff)
            for _ in range(rng.randint(1, max_terms))
        }
        p = LaurentPoly(nvars, terms)
        if p:
            return p


def random_unit(rng: random.Random, nvars: int, span: int = 5) -> LaurentPoly:
    return LaurentPoly.monomial([rng.randint(-span, span) for _ in range(nvars)], rng.choice([1, -1]))


def random_symmetric_int_matrix(rng: random.Random, mu: int, lo: int = -3, hi: int = 3):
    rows = [[0] * mu for _ in range(mu)]
    for i in range(mu):
        for j in range(i + 1, mu):
            rows[i][j] = rows[j][i] = rng.randint(lo, hi)
    return rows
