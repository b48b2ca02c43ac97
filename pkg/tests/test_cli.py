import json
import subprocess
import sys
from fractions import Fraction

import pytest

import cyclicgm.gauss_manin as gm
from cyclicgm.cli import run
from cyclicgm.cli.main import EXIT_COMPUTATION, EXIT_FAILED, EXIT_OK, EXIT_USAGE
from cyclicgm.cli.verify import GM_MATRIX_64
from cyclicgm.cover import make_cover
from cyclicgm.expr import parse_ratfunc

CURVE = ["--d", "6", "--branch", "0,1,-1,u"]
SURFACE = ["--d", "6", "--branch", "0,1,a,b,c"]


def cli(capsys, *argv):
    code = run(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_genus(capsys):
    code, out, _ = cli(capsys, "genus", "--d", "6", "--n", "4")
    assert code == EXIT_OK and out.strip() == "7"


def test_connection_json_matches_the_printed_matrix(capsys):
    code, out, _ = cli(capsys, "connection", *CURVE, "--wrt", "u", "--json")
    assert code == EXIT_OK
    doc = json.loads(out)
    assert {"d", "n", "branch", "basis", "matrix"} <= set(doc)
    vars = make_cover(6, 4, [0, 1, -1, "u"]).vars
    got = [[parse_ratfunc(s, vars) for s in row] for row in doc["matrix"]]
    assert got == [[parse_ratfunc(s, vars) for s in row] for row in GM_MATRIX_64]


def test_span_determinant(capsys):
    code, out, _ = cli(capsys, "span", *SURFACE, "--section", "1", "--dirs", "a,b,c", "--scaled", "--json")
    assert code == EXIT_OK
    doc = json.loads(out)
    vars = make_cover(6, 5, [0, 1, "a", "b", "c"]).vars
    assert parse_ratfunc(doc["det"], vars) == parse_ratfunc("-91/216*(a-b)*(a-c)*(b-c)", vars)
    assert doc["ranks"] == [1, 2, 3, 4] and doc["certified"] is True


@pytest.mark.parametrize(
    "argv",
    [
        ["connection", *CURVE, "--wrt", "u", "--json"],
        ["flag-rank", *CURVE, "--section", "x^2", "--wrt", "u", "--order", "2", "--json"],
        ["divisor", *CURVE, "--section", "x^2", "--json"],
        ["monodromy", "--d", "10", "--n", "3", "--json"],
    ],
)
def test_json_is_byte_stable(capsys, argv):
    first = cli(capsys, *argv)[1]
    second = cli(capsys, *argv)[1]
    assert first == second and first.encode("utf-8") == second.encode("utf-8")


OK_CASES = [
    ["genus", "--d", "10", "--n", "3"],
    ["basis", *CURVE, "--j", "1"],
    ["divisor", "--d", "10", "--branch", "0,1,v", "--section", "1"],
    ["connection", *SURFACE, "--wrt", "b"],
    ["curvature", "--d", "5", "--branch", "0,1,p,q"],
    ["flag-rank", "--d", "10", "--branch", "0,1,v", "--section", "1", "--wrt", "v", "--order", "2"],
    ["span", *SURFACE, "--section", "1", "--dirs", "a,b,c"],
    ["monodromy", *CURVE, "--j", "3"],
    ["verify-paper", "--only", "DET-M"],
]

USAGE_CASES = [
    [],
    ["nonsense"],
    ["genus", "--d", "6"],
    ["basis", "--d", "6", "--n", "4", "--j", "9"],
    ["divisor", "--d", "6", "--branch", "0,0,1,u", "--section", "1"],
    ["divisor", *CURVE, "--section", "x^^2"],
    ["connection", *CURVE, "--wrt", "w"],
    ["connection", *CURVE, "--wrt", "0"],
    ["curvature", *SURFACE, "--wrt", "a"],
    ["flag-rank", *CURVE, "--section", "x^3", "--wrt", "u"],
    ["span", *CURVE, "--section", "1", "--dirs", "u,u"],
    ["monodromy", "--d", "6", "--n", "4", "--j", "0"],
    ["verify-paper", "--only", "NO-SUCH-CHECK"],
    ["genus", "--d", "6", "--n", "4", "--branch", "0,1"],
]

COMPUTATION_CASES = [
    ["divisor", *CURVE, "--section", "x^2 + 1"],
    ["divisor", *CURVE, "--section", "x^2 - 2"],
]


@pytest.mark.parametrize("argv", OK_CASES)
def test_exit_ok(capsys, argv):
    assert cli(capsys, *argv)[0] == EXIT_OK


@pytest.mark.parametrize("argv", USAGE_CASES)
def test_exit_usage(capsys, argv):
    assert cli(capsys, *argv)[0] == EXIT_USAGE


@pytest.mark.parametrize("argv", COMPUTATION_CASES)
def test_exit_computation(capsys, argv):
    code, _, err = cli(capsys, *argv)
    assert code == EXIT_COMPUTATION and "UnresolvedZeros" in err


def test_exit_failed_on_a_broken_connection(capsys, monkeypatch):
    original = gm._first_term
    monkeypatch.setattr(gm, "_first_term", lambda *a: original(*a).scale(Fraction(2)))
    assert cli(capsys, "curvature", "--d", "5", "--branch", "0,1,p,q")[0] == EXIT_FAILED
    code, out, _ = cli(capsys, "verify-paper", "--only", "GM-MATRIX-64")
    assert code == EXIT_FAILED and "expected:" in out


def test_verify_paper_only_runs_one_check(capsys):
    code, out, _ = cli(capsys, "verify-paper", "--only", "DET-M", "--json")
    doc = json.loads(out)
    assert code == EXIT_OK and [c["name"] for c in doc["checks"]] == ["DET-M"]


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "cyclicgm", "genus", "--d", "6", "--n", "5"], capture_output=True, text=True
    )
    assert proc.returncode == 0 and proc.stdout.strip() == "10"


def test_flipped_first_term_breaks_the_printed_matrix(monkeypatch):
    from cyclicgm.cli.verify import verify_paper

    original = gm._second_term
    monkeypatch.setattr(gm, "_second_term", lambda *a: -original(*a))
    results = {r.name: r for r in verify_paper(only=["GM-MATRIX-64", "GENUS-64"])}
    assert results["GENUS-64"].ok
    bad = results["GM-MATRIX-64"]
    assert bad.status == "fail" and bad.expected != bad.actual and bad.expected.startswith("[[")
