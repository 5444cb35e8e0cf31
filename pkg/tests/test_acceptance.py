"""Acceptance criteria, one test per criterion.

Each test prints a single ``PASS``/``FAIL`` line.  Arithmetic is exact, so
every comparison is an equality of canonical forms.
"""

from __future__ import annotations

import random

import pytest

from mvalexander.fixtures import link_names, load_link, load_pair, pair_document, pair_names
from mvalexander.fox import alexander_polynomial
from mvalexander.laurent import (
    LaurentPoly,
    canonicalize,
    eval_at_one_var,
    exact_div,
    format_poly,
    gcd_multivar,
    substitute_powers,
)
from mvalexander.linkdiag import LinkingMatrix
from mvalexander.multilink import specialize_prop1, tpow_minus_one
from mvalexander.seifert import SeifertPair, delta_from_seifert, lemma7_block_determinant
from mvalexander.sweeps import (
    LinkData,
    lemma7_reports,
    prop8_reports,
    torres_fox_reports,
    torres_reports,
)
from mvalexander.torres import check_prop8, laplacian_minor_D, reconstruct_lemma2
from strategies import random_poly, random_symmetric_int_matrix, random_unit

LINKS = [n for n in link_names() if load_link(n).num_components >= 2]
SPLIT = ["unlink2", "unlink3", "unlink2_overlap", "hopf_split_unlink"]


@pytest.fixture(scope="module")
def link_data():
    return {name: LinkData(load_link(name)) for name in link_names()}


def report(capsys, number: int, ok: bool, detail: str) -> None:
    with capsys.disabled():
        print(f"\n{'PASS' if ok else 'FAIL'} criterion {number}: {detail}")
    assert ok, detail


def test_criterion_1_fixture_polynomials(capsys, link_data):
    got = {n: format_poly(link_data[n].delta) for n in ("trefoil", "hopf", "unlink2", "unlink3", "t24")}
    expected = {"trefoil": "t^2 - t + 1", "hopf": "1", "unlink2": "0", "unlink3": "0"}
    ok = all(got[k] == v for k, v in expected.items())
    # closure of sigma_1^4: Delta(t, 1) = (t^2 - 1)/(t - 1) * Delta_unknot
    t24 = link_data["t24"].delta.rep
    factor = exact_div(LaurentPoly.monomial((2,)) - 1, LaurentPoly.var(1, 1) - 1)
    torres_ok = canonicalize(eval_at_one_var(t24, 2)) == canonicalize(factor)
    report(capsys, 1, ok and torres_ok, f"fox path {got}; sigma1^4 Delta(t,1) matches Torres: {torres_ok}")


def test_criterion_2_two_routes(capsys):
    bad = []
    for name in pair_names():
        sp = load_pair(name)
        delta = alexander_polynomial(load_link(pair_document(name)["link"]))
        if delta_from_seifert(sp) != specialize_prop1(delta, sp.m):
            bad.append(name)
    report(capsys, 2, not bad, f"{len(pair_names())} Seifert pairs vs diagram route, mismatches: {bad}")


def test_criterion_3_torres(capsys, link_data):
    total, bad, branches, names = 0, [], set(), set()
    for name in LINKS:
        for lab in torres_reports(link_data[name]):
            total += 1
            branches.add(lab.report.branch)
            names.add(name)
            if not lab.holds:
                bad.append((name, lab.sublink, lab.deleted))
    ok = not bad and branches == {"mu=2", "mu>2"} and "borromean" in names
    report(capsys, 3, ok, f"{total} deletions over {len(names)} links, branches {sorted(branches)}, failures {bad}")


def test_criterion_4_torres_fox(capsys, link_data):
    total, bad = 0, []
    for name in LINKS:
        for lab in torres_fox_reports(link_data[name]):
            total += 1
            if not (lab.report.holds and lab.report.parity_ok):
                bad.append((name, lab.sublink))
    report(capsys, 4, not bad, f"{total} (sub)links checked with parity, failures {bad}")


def test_criterion_5_zero_multiplicity(capsys, link_data):
    total, bad = 0, []
    for name in LINKS:
        for lab in lemma7_reports(link_data[name], 3):
            total += 1
            if not lab.holds:
                bad.append((name, lab.deleted, lab.report.m))
    report(capsys, 5, not bad, f"{total} multilinks with one zero multiplicity, failures {bad[:5]}")


def test_criterion_6_reconstruction(capsys, seed):
    rng = random.Random(seed)
    B = 4
    plain = corrupted = 0
    for _ in range(200):
        mu = rng.randint(1, 3)
        while True:
            terms = {
                tuple(rng.randint(0, B) for _ in range(mu)): rng.choice([c for c in range(-9, 10) if c])
                for _ in range(rng.randint(1, 6))
            }
            target = canonicalize(LaurentPoly(mu, terms))
            if target:
                break
        oracle = lambda m, p=target.rep: canonicalize(substitute_powers(p, m))  # noqa: E731
        plain += reconstruct_lemma2(oracle, mu, B) == target
        unit = random_unit(rng, 1, 20)
        noisy = lambda m, p=target.rep, u=unit: substitute_powers(p, m) * u  # noqa: E731
        corrupted += reconstruct_lemma2(noisy, mu, B) == target
    report(capsys, 6, plain == corrupted == 200, f"exact reconstructions {plain}/200 plain, {corrupted}/200 unit-corrupted")


def test_criterion_7_nabla_conditions(capsys, link_data, seed):
    total, bad = 0, []
    for name in LINKS:
        for lab in prop8_reports(link_data[name], 3):
            total += 1
            if not lab.holds:
                bad.append((name, lab.report.m))
    rng = random.Random(seed)
    lap_ok = 0
    for _ in range(100):
        mu = rng.randint(2, 4)
        lk = LinkingMatrix(tuple(map(tuple, random_symmetric_int_matrix(rng, mu))))
        m = [rng.randint(-3, 3) for _ in range(mu)]
        try:
            laplacian_minor_D(lk, m)
            lap_ok += 1
        except ArithmeticError:
            pass
    ones_bad = []
    t_minus_one = LaurentPoly.var(1, 1) - 1
    for name in LINKS:
        data = link_data[name]
        ones = (1,) * data.mu
        rep = check_prop8(data.delta, data.lk, ones, data.proper_sublink_polys())
        lifted = canonicalize(rep.nabla.rep * t_minus_one ** (data.mu - 1)) if rep.nabla is not None else None
        if not (
            rep.holds
            and lifted == specialize_prop1(data.delta, ones)
            and abs(sum(rep.nabla.rep.terms.values())) == abs(rep.D)
        ):
            ones_bad.append(name)
    ok = not bad and lap_ok == 100 and not ones_bad
    report(
        capsys,
        7,
        ok,
        f"{total} grid points, failures {bad[:5]}; Laplacian cofactors equal {lap_ok}/100; "
        f"m = (1,...,1) mismatches {ones_bad}",
    )


def test_criterion_8_degenerate(capsys, link_data, seed):
    rng = random.Random(seed)
    nonsquare_bad = 0
    for _ in range(100):
        n, r = rng.randint(0, 4), rng.randint(1, 3)
        ap = [[rng.randint(-3, 3) for _ in range(n + r)] for _ in range(n)]
        am = [[rng.randint(-3, 3) for _ in range(n + r)] for _ in range(n)]
        nonsquare_bad += not delta_from_seifert(SeifertPair(ap, am, shape=(n, n + r))).is_zero()
    fixture_pair = delta_from_seifert(load_pair("unlink2_disk")).is_zero()
    split_bad = [n for n in SPLIT if not link_data[n].delta.is_zero()]
    ok = nonsquare_bad == 0 and fixture_pair and not split_bad
    report(capsys, 8, ok, f"r > 0 pairs nonzero: {nonsquare_bad}/100 (+ fixture ok: {fixture_pair}); split links nonzero: {split_bad}")


def test_criterion_9_property_suites(capsys, seed):
    rng = random.Random(seed)
    failures: dict[str, int] = {}

    def bump(name, cond):
        if not cond:
            failures[name] = failures.get(name, 0) + 1

    def rp(n, deg=4, c=9, terms=5):
        p = random_poly(rng, n, deg, c, terms)
        return p.shift([rng.randint(-2, 2) for _ in range(n)])

    for _ in range(150):
        n = rng.randint(1, 4)
        a, b, c = rp(n), rp(n), rp(n)
        bump("ring", (a * b) * c == a * (b * c) and a * (b + c) == a * b + a * c and a * b == b * a)
        u = random_unit(rng, n)
        ca = canonicalize(a)
        bump("canonical", canonicalize(ca) == ca and canonicalize(u * a) == ca)
        m = [rng.randint(-3, 3) for _ in range(n)]
        bump(
            "substitution",
            substitute_powers(a * b, m) == substitute_powers(a, m) * substitute_powers(b, m)
            and substitute_powers(a + b, m) == substitute_powers(a, m) + substitute_powers(b, m),
        )
        bump("exact_div", exact_div(a * b, b) == a)
    for _ in range(40):
        n = rng.randint(1, 3)
        p, q, g = rp(n, 2, 5, 3), rp(n, 2, 5, 3), rp(n, 2, 5, 3)
        h = gcd_multivar(p * g, q * g)
        bump("gcd", exact_div(h.rep, g) is not None)
    for _ in range(60):
        n, d_mu = rng.randint(0, 3), rng.randint(1, 4)
        mat = lambda r, c: [[rng.randint(-3, 3) for _ in range(c)] for _ in range(r)]  # noqa: E731
        sp = SeifertPair(mat(n, n), mat(n, n), shape=(n, n))
        got = lemma7_block_determinant(sp, d_mu, mat(d_mu, n), mat(d_mu, n))
        bump("block_det", got == canonicalize(tpow_minus_one(d_mu) * delta_from_seifert(sp).rep))
    report(capsys, 9, not failures, f"seed {seed}; failures by suite: {failures or 'none'}")
