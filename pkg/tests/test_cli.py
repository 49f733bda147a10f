import json
import subprocess
import sys
from pathlib import Path

import pytest

from picard_lab import suites
from picard_lab.cli import main

GOLDEN = Path(__file__).parent / "golden"


def run_main(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.mark.parametrize(
    "argv,name",
    [(("verify", "invariants", "--json"), "invariants.json"),
     (("verify", "cohomology", "--group", "z2-trivial", "-N", "3", "--json"), "cohomology_z2_N3.json")],
)
def test_golden(capsys, argv, name):
    code, out, _ = run_main(capsys, *argv)
    assert code == 0
    assert out == (GOLDEN / name).read_text()


def test_json_records_shape(capsys):
    code, out, _ = run_main(capsys, "verify", "transforms", "--json")
    assert code == 0
    records = json.loads(out)
    assert all(list(r) == ["check", "detail", "status", "suite"] for r in records)
    assert {r["status"] for r in records} == {"pass"}


def test_seed_is_recorded(capsys):
    _, out, _ = run_main(capsys, "verify", "transforms", "--seed", "17", "--json")
    assert "seed=17" in out


def test_deterministic_in_process(capsys):
    _, a, _ = run_main(capsys, "verify", "aut-characters", "--json")
    _, b, _ = run_main(capsys, "verify", "aut-characters", "--json")
    assert a == b


def test_text_table(capsys):
    code, out, _ = run_main(capsys, "verify", "invariants")
    assert code == 0
    lines = out.splitlines()
    assert lines[0].split()[:3] == ["suite", "check", "status"]
    assert "discriminant(y^2=x^3+x) = -64" in out
    assert any(line.startswith("invariants: ") and "passed in" in line for line in lines)


@pytest.mark.parametrize(
    "argv",
    [
        ("verify", "nonsense"),
        ("verify", "cohomology", "--group", "s3", "-N", "5"),
        ("verify", "char3-legendre", "-N", "5"),
        ("verify", "char2-hesse", "-N", "11"),
        ("verify", "cohomology", "-N", "11"),
        ("verify", "all", "-N", "11"),
        ("verify", "invariants", "-N", "0"),
    ],
)
def test_usage_errors(capsys, argv):
    code, _, err = run_main(capsys, *argv)
    assert code == 2
    assert "error" in err


def test_unknown_suite_lists_suites(capsys):
    _, _, err = run_main(capsys, "verify", "nonsense")
    for name in suites.SUITES:
        assert name in err


def test_bad_group_is_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["verify", "cohomology", "--group", "a5"])
    assert exc.value.code == 2


def test_precision_floor_accepted(capsys):
    code, _, _ = run_main(capsys, "verify", "char3-legendre", "-N", "6", "--json")
    assert code == 0
    code, _, _ = run_main(capsys, "verify", "cohomology", "--group", "s3", "-N", "6", "--json")
    assert code == 0


def test_failure_exit_code(capsys, monkeypatch):
    monkeypatch.setitem(suites.RUNNERS, "invariants", lambda opts: [suites.Check("always fails", False, "forced")])
    code, out, _ = run_main(capsys, "verify", "invariants", "--json")
    assert code == 1
    assert json.loads(out)[0]["status"] == "fail"


def test_crashing_suite_is_a_failure(capsys, monkeypatch):
    def boom(opts):
        raise RuntimeError("kaput")

    monkeypatch.setitem(suites.RUNNERS, "invariants", boom)
    code, out, _ = run_main(capsys, "verify", "invariants", "--json")
    assert code == 1
    assert "kaput" in out


def test_curve_command(capsys):
    code, out, _ = run_main(capsys, "curve", "0,0,0,1,0@Z")
    assert code == 0
    assert "discriminant  -64" in out and "j             1728" in out
    code, out, _ = run_main(capsys, "curve", "0,0,0,0,0@Z")
    assert "undefined" in out
    code, out, _ = run_main(capsys, "curve", "0,0,0,1,0@F13", "--transform", "2,1,0,3@F13")
    assert code == 0 and "j             12" in out  # 1728 = 12 mod 13


def test_curve_command_errors(capsys):
    code, _, err = run_main(capsys, "curve", "0,0,0,1@Z")
    assert code == 2 and "error" in err


def test_aut_command(capsys):
    code, out, _ = run_main(capsys, "aut", "0,0,1,0,0@F7")
    assert code == 0
    assert out.startswith("order 6 (cyclic)")
    assert "differential exponent 1" in out
    code, out, _ = run_main(capsys, "aut", "0,0,1,0,0@F4")
    assert code == 0 and "order 24" in out and "no character normalization" in out


def test_entry_point_subprocess():
    proc = subprocess.run(
        [sys.executable, "-m", "picard_lab.cli", "verify", "invariants", "--json"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0
    assert proc.stdout == (GOLDEN / "invariants.json").read_text()
