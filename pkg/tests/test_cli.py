import io
import json
import subprocess
import sys

import pytest

from qsymp.cli import main


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


APPLY_GOLDEN = [
    ("e(1)", "x(1)", "x(-1)"),
    ("k(1)", "x(-1)", "q^2 * x(-1)"),
    ("E(+,1,2)", "x(1)", "-q^2 * x(-2)"),
]
MUL_GOLDEN = [
    ("x(2)", "x(1)", "q * x(1)x(2)"),
    ("x(1)", "x(-1)", "q^2 * x(-1)x(1) + (q^3-q) * x(-2)x(2)"),
    ("1", "x(1)", "x(1)"),
]


@pytest.mark.parametrize("op,elem,want", APPLY_GOLDEN)
def test_apply_golden(op, elem, want):
    assert run("apply", "--n", "2", "--op", op, "--elem", elem) == (0, want + "\n")


@pytest.mark.parametrize("lhs,rhs,want", MUL_GOLDEN)
def test_mul_golden(lhs, rhs, want):
    assert run("mul", "--n", "2", lhs, rhs) == (0, want + "\n")
    assert run("mul", "--n", "2", "--lhs", lhs, "--rhs", rhs) == (0, want + "\n")


def test_structured_apply():
    code, out = run("apply", "--op", "e(1)", "--elem", "x(1)", "--output", "structured")
    assert code == 0
    assert json.loads(out) == {"command": "apply", "n": 2, "op": "e(1)", "elem": "x(1)", "result": "x(-1)"}


def test_roots():
    code, out = run("roots", "--n", "2")
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 4
    assert lines[1].split()[:2] == ["2", "E(+,1,2)"]
    code, out = run("roots", "--n", "3", "--output", "structured")
    recs = [json.loads(line) for line in out.splitlines()]
    assert [r["label"] for r in recs[-2:]] == [[-1, 3], [-2, 3]]


def test_verify_passing_suite():
    code, out = run("verify", "--n", "2", "--max-degree", "2", "--suites", "serre,root-vectors")
    assert code == 0
    assert out.rstrip().endswith("identities passed")


def test_verify_structured():
    code, out = run("verify", "--max-degree", "1", "--suites", "module-algebra", "--output", "structured")
    assert code == 0
    recs = [json.loads(line) for line in out.splitlines()]
    assert recs and all(r["suite"] == "module-algebra" and r["status"] == "pass" for r in recs)


def test_verify_failure_exit_code():
    # the literal weight statements in the lemma battery do not hold
    code, out = run("verify", "--n", "2", "--max-degree", "2", "--suites", "lemmas")
    assert code == 1
    assert "FAIL" in out and "at  " in out


def test_verify_jobs_match_serial(monkeypatch):
    serial = run("verify", "--max-degree", "2", "--suites", "root-vectors", "--output", "structured")
    monkeypatch.setenv("QSYMP_JOBS", "2")
    parallel = run("verify", "--max-degree", "2", "--suites", "root-vectors", "--output", "structured")
    assert serial == parallel


@pytest.mark.parametrize(
    "argv",
    [
        ["apply", "--n", "1", "--op", "e(1)", "--elem", "x(1)"],
        ["verify", "--suites", "nope"],
        ["verify", "--suites", "serre", "--max-degree", "1"],
        ["verify", "--jobs", "0"],
        ["mul", "x(1)"],
        ["frobnicate"],
    ],
)
def test_usage_errors(argv, capsys):
    assert run(*argv)[0] == 2
    assert "error" in capsys.readouterr().err


def test_parse_error_points_at_column(capsys):
    code, out = run("apply", "--op", "e(1)", "--elem", "x(1) + y(2)")
    assert code == 2 and out == ""
    err = capsys.readouterr().err
    assert "column 7" in err
    lines = err.splitlines()
    assert lines[-1].index("^") == lines[-2].index("y")


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "qsymp", "mul", "x(2)", "x(1)"], capture_output=True, text=True, check=False
    )
    assert proc.returncode == 0 and proc.stdout == "q * x(1)x(2)\n"
