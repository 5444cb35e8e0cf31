from __future__ import annotations

import json
import subprocess
import sys
from importlib.resources import files

import pytest

from mvalexander import cli
from mvalexander.sweeps import Labelled
from mvalexander.torres import TorresReport
from mvalexander.laurent import canonicalize, parse_poly

DATA = files("mvalexander") / "data"
LINKS = DATA / "links"
PAIRS = DATA / "seifert"


def run(capsys, *argv):
    code = cli.main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


class TestCompute:
    def test_trefoil_braid(self, capsys):
        code, out, _ = run(capsys, "compute", "--braid", '{"strands":2,"word":[1,1,1]}')
        assert code == 0
        first, doc = out.splitlines()
        assert first == "t^2 - t + 1"
        assert json.loads(doc)["delta"] == "t^2 - t + 1"

    def test_hopf_pd(self, capsys):
        code, out, _ = run(capsys, "compute", "--pd", LINKS / "hopf.json", "--format", "json")
        assert code == 0
        doc = json.loads(out)
        assert doc == {"delta": "1", "linking_matrix": [[0, 1], [1, 0]], "mu": 2}

    def test_unlink(self, capsys):
        code, out, _ = run(capsys, "compute", "--pd", LINKS / "unlink2.json")
        assert (code, out.splitlines()[0]) == (0, "0")

    def test_braid_from_file(self, capsys):
        code, out, _ = run(capsys, "compute", "--braid", LINKS / "figure8.json")
        assert (code, out.splitlines()[0]) == (0, "t^2 - 3*t + 1")

    def test_bad_pd_names_crossing(self, capsys, tmp_path):
        bad = tmp_path / "bad.json"
        bad.write_text(json.dumps({"components": 1, "crossings": [{"under_in": 1, "over_in": 2, "under_out": 3, "sign": 1}]}))
        code, _, err = run(capsys, "compute", "--pd", bad)
        assert code == 2
        assert "crossing 1" in err

    def test_dangling_arc_named(self, capsys, tmp_path):
        doc = json.loads((LINKS / "hopf.json").read_text())
        doc["crossings"][0]["under_out"] = 9
        bad = tmp_path / "bad.json"
        bad.write_text(json.dumps(doc))
        code, _, err = run(capsys, "compute", "--pd", bad)
        assert code == 2 and "arc" in err

    def test_missing_file_and_bad_json(self, capsys, tmp_path):
        assert run(capsys, "compute", "--pd", tmp_path / "nope.json")[0] == 2
        (tmp_path / "x.json").write_text("{")
        assert run(capsys, "compute", "--pd", tmp_path / "x.json")[0] == 2
        assert run(capsys, "compute", "--braid", "{oops")[0] == 2

    def test_deterministic_json(self, capsys):
        a = run(capsys, "check", "prop8", "--braid", LINKS / "t33.json", "--m-grid", "1", "--format", "json")
        b = run(capsys, "check", "prop8", "--braid", LINKS / "t33.json", "--m-grid", "1", "--format", "json")
        assert a == b


class TestSpecialize:
    @pytest.mark.parametrize(
        "poly, mu, m, expected",
        [
            ("1", 2, "1,1", "-t + 1"),
            ("t1^2 - t1 + 1", 1, "2", "t^4 - t^2 + 1"),
            ("0", 2, "1,2", "0"),
            ("t1*t2 + 1", 2, "1,-1", "-2*t + 2"),
        ],
    )
    def test_examples(self, capsys, poly, mu, m, expected):
        code, out, _ = run(capsys, "specialize", "--poly", poly, "--mu", mu, f"--m={m}")
        assert (code, out.strip()) == (0, expected)

    def test_raw(self, capsys):
        code, out, _ = run(capsys, "specialize", "--poly", "t1*t2", "--mu", "2", "--m", "1,1", "--raw")
        assert out.strip() == "t^3 - t^2"

    @pytest.mark.parametrize(
        "args",
        [
            ["--poly", "1", "--mu", "2", "--m", "0,0"],
            ["--poly", "1", "--mu", "2", "--m", "1"],
            ["--poly", "t1 +", "--mu", "1", "--m", "1"],
            ["--poly", "1", "--mu", "2", "--m", "a,b"],
        ],
    )
    def test_input_errors(self, capsys, args):
        assert run(capsys, "specialize", *args)[0] == 2


class TestSeifert:
    def test_trefoil(self, capsys):
        code, out, _ = run(capsys, "seifert", "--pair", PAIRS / "trefoil_pair.json")
        assert (code, out.strip()) == (0, "t^2 - t + 1")

    def test_nonsquare(self, capsys, tmp_path):
        p = tmp_path / "p.json"
        p.write_text(json.dumps({"a_plus": [[1, 0]], "a_minus": [[0, 1]]}))
        code, out, _ = run(capsys, "seifert", "--pair", p, "--format", "json")
        assert code == 0 and json.loads(out)["result"] == "0"

    def test_invalid(self, capsys, tmp_path):
        p = tmp_path / "p.json"
        p.write_text(json.dumps({"a_plus": [[1, 0], [0, 1], [1, 1]], "a_minus": [[1, 0], [0, 1], [1, 1]]}))
        assert run(capsys, "seifert", "--pair", p)[0] == 2


class TestCheck:
    @pytest.mark.parametrize("kind", ["torres", "torres-fox", "lemma7", "prop8"])
    def test_hopf_all_pass(self, capsys, kind):
        code, out, _ = run(capsys, "check", kind, "--pd", LINKS / "hopf.json", "--m-grid", "3")
        assert code == 0
        assert "passed" in out.splitlines()[-1]

    def test_prop8_grid_size(self, capsys):
        code, out, _ = run(capsys, "check", "prop8", "--pd", LINKS / "hopf.json", "--format", "json")
        doc = json.loads(out)
        assert code == 0 and doc["total"] == 48 and doc["failed"] == 0 and doc["holds"]
        ms = [tuple(r["m"]) for r in doc["reports"]]
        assert ms == sorted(ms)

    def test_knot_rejected(self, capsys):
        assert run(capsys, "check", "torres", "--pd", LINKS / "trefoil.json")[0] == 2

    def test_failure_exit_code(self, capsys, monkeypatch):
        one = canonicalize(parse_poly("1"))
        bad = TorresReport(False, one, canonicalize(parse_poly("t + 1")), "mu=2")
        monkeypatch.setattr(cli, "torres_reports", lambda data: [Labelled((1, 2), 2, bad)])
        code, out, _ = run(capsys, "check", "torres", "--pd", LINKS / "hopf.json")
        assert code == 1
        assert out.startswith("FAIL")

    def test_verbose_prints_rows(self, capsys):
        code, out, _ = run(capsys, "check", "torres-fox", "--braid", LINKS / "t33.json", "-v")
        assert code == 0
        assert sum(line.startswith("PASS") for line in out.splitlines()) == 4


class TestReconstructAndCable:
    def test_reconstruct_from_specialize_output(self, capsys, tmp_path):
        target = "t1^2*t2 - 2*t1 + 3*t2^2"
        point = "1,5"  # N = 2B + 1 with B = 2
        code, out, _ = run(capsys, "specialize", "--poly", target, "--mu", "2", "--m", point)
        assert code == 0
        oracle = tmp_path / "oracle.json"
        oracle.write_text(json.dumps({point: out.strip()}))
        code, out, _ = run(capsys, "reconstruct", "--oracle", oracle, "--mu", "2", "--bound", "2")
        assert code == 0
        assert parse_poly(out.strip(), 2) == canonicalize(parse_poly(target, 2)).rep

    def test_reconstruct_substituted_oracle(self, capsys, tmp_path):
        oracle = tmp_path / "oracle.json"
        # Delta = t1 + t2 with B = 1: Delta(t, t^3) = t + t^3
        oracle.write_text(json.dumps({"1,3": "t + t^3"}))
        code, out, _ = run(capsys, "reconstruct", "--oracle", oracle, "--mu", "2", "--bound", "1", "--substituted")
        assert (code, out.strip()) == (0, "t1 + t2")

    def test_reconstruct_rejects_non_multilink_entry(self, capsys, tmp_path):
        oracle = tmp_path / "oracle.json"
        oracle.write_text(json.dumps({"1,3": "t + t^3"}))
        assert run(capsys, "reconstruct", "--oracle", oracle, "--mu", "2", "--bound", "1")[0] == 2

    def test_reconstruct_missing_entry(self, capsys, tmp_path):
        oracle = tmp_path / "oracle.json"
        oracle.write_text(json.dumps({"1,3": "t"}))
        assert run(capsys, "reconstruct", "--oracle", oracle, "--mu", "2", "--bound", "2")[0] == 2

    def test_cable_hopf(self, capsys):
        code, out, _ = run(capsys, "cable", "--pd", LINKS / "hopf.json", "--m", "2,3", "--format", "json")
        assert code == 0
        rows = [(r["d"], r["p"], r["q"]) for r in json.loads(out)["rows"]]
        assert rows == [(1, 2, -3), (1, 3, -2)]

    def test_cable_length_mismatch(self, capsys):
        assert run(capsys, "cable", "--pd", LINKS / "hopf.json", "--m", "1,2,3")[0] == 2


def test_usage_errors(capsys):
    assert run(capsys)[0] == 2
    assert run(capsys, "bogus")[0] == 2
    assert run(capsys, "compute")[0] == 2
    assert run(capsys, "--help")[0] == 0


def test_module_entry_point():
    res = subprocess.run(
        [sys.executable, "-m", "mvalexander", "specialize", "--poly", "t^2 - t + 1", "--mu", "1", "--m", "2"],
        capture_output=True,
        text=True,
    )
    assert res.returncode == 0
    assert res.stdout.strip() == "t^4 - t^2 + 1"
