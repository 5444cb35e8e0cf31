"""Command-line interface.

Exit codes: 0 when every requested check holds, 1 when some check fails,
2 on unreadable or invalid input.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from functools import reduce
from math import gcd
from pathlib import Path
from typing import Any, Optional, Sequence

from .fox import alexander_polynomial
from .laurent import LaurentPoly, PolyParseError, exact_div, format_poly, parse_poly
from .linkdiag import DiagramError, LinkDiagram, linking_matrix, load_diagram
from .multilink import MultilinkSpec, cable_data, multilink_polynomial, specialize_prop1, tpow_minus_one
from .seifert import SeifertError, SeifertPair, delta_from_seifert
from .sweeps import LinkData, lemma7_reports, prop8_reports, torres_fox_reports, torres_reports
from .torres import reconstruct_lemma2

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    """Bad user input; reported on stderr with exit code 2."""


@dataclass
class RunConfig:
    command: str
    fmt: str
    verbose: bool


def parse_m(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise InputError(f"multiplicity vector must be comma-separated integers, got {text!r}") from None


def _read_json(path: str) -> Any:
    try:
        return json.loads(Path(path).read_text())
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: malformed JSON: {exc}") from None


def _diagram(args) -> LinkDiagram:
    if args.pd is not None:
        doc = _read_json(args.pd)
    else:
        text = args.braid
        if not text.lstrip().startswith("{"):
            doc = _read_json(text)
        else:
            try:
                doc = json.loads(text)
            except json.JSONDecodeError as exc:
                raise InputError(f"malformed braid JSON: {exc}") from None
        if not isinstance(doc, dict) or "word" not in doc:
            raise InputError("braid input needs the keys 'strands' and 'word'")
    return load_diagram(doc)


def _emit(obj: dict) -> None:
    print(json.dumps(obj, sort_keys=True))


def _m_list(m) -> str:
    return "(" + ",".join(str(x) for x in m) + ")"


# ---------------------------------------------------------------------------
# commands


def cmd_compute(args, cfg: RunConfig) -> int:
    d = _diagram(args)
    delta = alexander_polynomial(d)
    lk = linking_matrix(d)
    doc = {"delta": format_poly(delta), "linking_matrix": lk.tolist(), "mu": d.num_components}
    if cfg.fmt == "text":
        print(format_poly(delta))
    _emit(doc)
    return EXIT_OK


def cmd_specialize(args, cfg: RunConfig) -> int:
    m = parse_m(args.m)
    if len(m) != args.mu:
        raise InputError(f"--m has {len(m)} entries but --mu is {args.mu}")
    if not any(m):
        raise InputError("the zero multiplicity vector is not allowed")
    p = parse_poly(args.poly, nvars=args.mu)
    if args.raw:
        out = format_poly(multilink_polynomial(p, m))
    else:
        out = format_poly(specialize_prop1(p, m))
    if cfg.fmt == "json":
        _emit({"m": list(m), "mu": args.mu, "poly": format_poly(p), "result": out})
    else:
        print(out)
    return EXIT_OK


def cmd_seifert(args, cfg: RunConfig) -> int:
    sp = SeifertPair.from_document(_read_json(args.pair))
    res = format_poly(delta_from_seifert(sp))
    if cfg.fmt == "json":
        _emit({"n": sp.n, "r": sp.r, "m": list(sp.m) if sp.m else None, "result": res})
    else:
        print(res)
    return EXIT_OK


def _report_row(kind: str, lab, data: LinkData) -> tuple[dict, str]:
    r = lab.report
    status = "PASS" if lab.holds else "FAIL"
    where = "sublink=" + _m_list(lab.sublink)
    if kind == "torres":
        row = {
            "sublink": list(lab.sublink),
            "deleted": lab.deleted,
            "branch": r.branch,
            "lhs": format_poly(r.lhs),
            "rhs": format_poly(r.rhs),
            "holds": lab.holds,
        }
        text = f"{status}  {where} delete={lab.deleted} [{r.branch}]  lhs={r.lhs}  rhs={r.rhs}"
    elif kind == "torres-fox":
        row = {
            "sublink": list(lab.sublink),
            "nu": list(r.nu) if r.nu is not None else None,
            "sign": r.sign,
            "parity_ok": r.parity_ok,
            "holds": lab.holds,
        }
        text = f"{status}  {where} nu={r.nu} sign={r.sign} parity_ok={r.parity_ok}"
    elif kind == "lemma7":
        row = {
            "deleted": lab.deleted,
            "m": list(r.m),
            "exponent": r.exponent,
            "lhs": format_poly(r.lhs),
            "rhs": format_poly(r.rhs),
            "holds": lab.holds,
        }
        text = f"{status}  last={lab.deleted} m={_m_list(r.m)} e={r.exponent}  lhs={r.lhs}  rhs={r.rhs}"
    else:
        row = r.to_dict()
        conds = " ".join(
            f"{name}={'-' if v is None else ('ok' if v else 'FAIL')}"
            for name, v in (
                ("i", r.condition_i),
                ("ii", r.condition_ii),
                ("iii", r.condition_iii),
                ("iv", r.condition_iv),
            )
        )
        text = f"{status}  m={_m_list(r.m)} d={r.d} D={r.D} nabla={r.nabla}  {conds}"
    return row, text


def cmd_check(args, cfg: RunConfig) -> int:
    d = _diagram(args)
    if d.num_components < 2:
        raise InputError(f"'{args.kind}' needs a link with at least two components")
    if args.m_grid < 0:
        raise InputError("--m-grid must be non-negative")
    data = LinkData(d)
    if args.kind == "torres":
        labs = torres_reports(data)
    elif args.kind == "torres-fox":
        labs = torres_fox_reports(data)
    elif args.kind == "lemma7":
        labs = lemma7_reports(data, args.m_grid)
    else:
        labs = prop8_reports(data, args.m_grid)
    rows, lines = zip(*(_report_row(args.kind, lab, data) for lab in labs)) if labs else ((), ())
    ok = all(lab.holds for lab in labs)
    failed = sum(1 for lab in labs if not lab.holds)
    if cfg.fmt == "json":
        _emit(
            {
                "check": args.kind,
                "delta": format_poly(data.delta),
                "linking_matrix": data.lk.tolist(),
                "reports": list(rows),
                "total": len(labs),
                "failed": failed,
                "holds": ok,
            }
        )
    else:
        for line, lab in zip(lines, labs):
            if cfg.verbose or not lab.holds:
                print(line)
        print(f"{args.kind}: {len(labs) - failed}/{len(labs)} passed")
    return EXIT_OK if ok else EXIT_FAIL


def cmd_reconstruct(args, cfg: RunConfig) -> int:
    raw = _read_json(args.oracle)
    if not isinstance(raw, dict):
        raise InputError("oracle file must be a JSON object mapping 'm1,m2,...' to polynomials")
    table: dict[tuple[int, ...], LaurentPoly] = {}
    for key, val in raw.items():
        m, p = parse_m(key), parse_poly(val, nvars=1)
        if not args.substituted and len(m) > 1 and any(m):
            # entries are multilink polynomials (t^d - 1) Delta(t^m)
            d = reduce(gcd, m, 0)
            q = exact_div(p, tpow_minus_one(d))
            if q is None:
                raise InputError(f"oracle entry {key!r} is not divisible by t^{d} - 1")
            p = q
        table[m] = p

    def oracle(m):
        if m not in table:
            raise InputError(f"oracle file has no entry for m = {','.join(map(str, m))}")
        return table[m]

    res = reconstruct_lemma2(oracle, args.mu, args.bound)
    if cfg.fmt == "json":
        _emit({"mu": args.mu, "bound": args.bound, "result": format_poly(res)})
    else:
        print(format_poly(res))
    return EXIT_OK


def cmd_cable(args, cfg: RunConfig) -> int:
    d = _diagram(args)
    m = parse_m(args.m)
    if len(m) != d.num_components:
        raise InputError(f"--m has {len(m)} entries for a {d.num_components}-component link")
    spec = MultilinkSpec(m, linking_matrix(d))
    rows = []
    for i in range(1, spec.mu + 1):
        di, p, q = cable_data(spec, i)
        rows.append({"component": i, "m": m[i - 1], "s": spec.s(i), "d": di, "p": p, "q": q})
    if cfg.fmt == "json":
        _emit({"m": list(m), "rows": rows})
    else:
        print(f"{'i':>3} {'m_i':>5} {'s_i':>5} {'d_i':>5} {'p_i':>5} {'q_i':>5}")
        for r in rows:
            print(f"{r['component']:>3} {r['m']:>5} {r['s']:>5} {r['d']:>5} {r['p']:>5} {r['q']:>5}")
    return EXIT_OK


# ---------------------------------------------------------------------------
# argument parsing


def _add_diagram_args(p: argparse.ArgumentParser) -> None:
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--pd", metavar="FILE", help="PD code document (JSON)")
    g.add_argument("--braid", metavar="JSON|FILE", help='braid document, e.g. \'{"strands":2,"word":[1,1,1]}\'')


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text", help="output format")
    common.add_argument("-v", "--verbose", action="store_true", help="print every report row")

    parser = argparse.ArgumentParser(
        prog="mvalexander",
        description="Multivariable Alexander polynomials, multilink specializations and checks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", parents=[common], help="Alexander polynomial of a diagram")
    _add_diagram_args(p)

    p = sub.add_parser("specialize", parents=[common], help="one-variable multilink polynomial")
    p.add_argument("--poly", required=True, help="polynomial in t1..tmu (or t)")
    p.add_argument("--mu", type=int, required=True, help="number of variables")
    p.add_argument("--m", required=True, help="multiplicities, e.g. 1,-2,0 (use --m=-1,2 for a leading minus)")
    p.add_argument("--raw", action="store_true", help="print the representative without normalizing units")

    p = sub.add_parser("seifert", parents=[common], help="det(A+ - t A-) of a Seifert pair")
    p.add_argument("--pair", required=True, metavar="FILE")

    p = sub.add_parser("check", parents=[common], help="run a family of checks on a diagram")
    p.add_argument("kind", choices=("torres", "torres-fox", "lemma7", "prop8"))
    _add_diagram_args(p)
    p.add_argument("--m-grid", type=int, default=3, metavar="B", help="sweep m over [-B, B]^mu minus 0 (default 3)")

    p = sub.add_parser("reconstruct", parents=[common], help="recover a polynomial from one specialization")
    p.add_argument("--oracle", required=True, metavar="FILE", help='JSON object {"1,5": "poly", ...}')
    p.add_argument("--mu", type=int, required=True)
    p.add_argument("--bound", type=int, required=True, help="bound on each variable's degree spread")
    p.add_argument(
        "--substituted",
        action="store_true",
        help="oracle entries are Delta(t^m1, ..., t^mmu) rather than output of 'specialize'",
    )

    p = sub.add_parser("cable", parents=[common], help="cable data (d_i, p_i, q_i) of a multilink")
    _add_diagram_args(p)
    p.add_argument("--m", required=True)
    return parser


COMMANDS = {
    "compute": cmd_compute,
    "specialize": cmd_specialize,
    "seifert": cmd_seifert,
    "check": cmd_check,
    "reconstruct": cmd_reconstruct,
    "cable": cmd_cable,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    cfg = RunConfig(args.command, args.format, args.verbose)
    try:
        return COMMANDS[args.command](args, cfg)
    except (InputError, DiagramError, SeifertError, PolyParseError, ValueError, ArithmeticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
