import json
import subprocess
import sys

import pytest
from conftest import load_fixture

from extdelta import __version__
from extdelta.cli import main
from extdelta.golden import check_locked
from extdelta.suites import SUITES, run_suite


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_stat(capsys):
    assert run(capsys, "stat", "1,3,4/2,6,8/5,7", "inv")[:2] == (0, "4\n")
    assert run(capsys, "stat", "2/3,4/1,3/1,3/2", "minimaj")[1] == "9\n"
    assert run(capsys, "stat", "1,2,3", "dinv")[1] == "0\n"


def test_stat_verbose_witnesses(capsys):
    _, out, _ = run(capsys, "stat", "134/268/57", "inv", "-v")
    assert "(3,2) (4,2) (6,5) (8,5)" in out
    _, out, _ = run(capsys, "stat", "134/47/23", "maj", "-v")
    assert "4*3*17*43*2" in out
    _, out, _ = run(capsys, "stat", "2/34/13/13/2", "minimaj", "-v")
    assert "2|34|13|31|2" in out
    _, out, _ = run(capsys, "stat", "134/268/57", "dinv", "-v")
    assert out.count("secondary") == 4


def test_parse_error_exit_2(capsys):
    code, _, err = run(capsys, "stat", "1,,3", "inv")
    assert code == 2 and "position 2" in err


def test_usage_error_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["stat", "1/2", "area"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["verify", "nosuch"])
    assert exc.value.code == 2
    assert run(capsys, "map", "phi-inv", "1/2")[0] == 2  # missing --beta/--k


def test_map_gamma(capsys):
    fig = load_fixture("bijection_examples.json")
    code, out, _ = run(capsys, "map", "gamma-dinv", "2,4/1,3/2,3,5")
    lines = out.splitlines()
    assert code == 0
    assert json.loads(lines[0]) == fig["gamma_dinv"]["object"]
    assert lines[1].endswith("ok")
    code, out, _ = run(capsys, "map", "gamma-minimaj", "1,3/2,3/1,4/2,3,4", "--stages")
    obj = json.loads(out.splitlines()[0])
    assert obj["stages"] == fig["gamma_minimaj"]["stages"]


def test_map_phi(capsys):
    code, out, _ = run(capsys, "map", "phi-dinv", "23/0123/012", "--U", "0,2", "--B", "3", "--beta", "2,3,2,4", "--k", "5")
    assert code == 0
    assert out.splitlines()[0] == "4/2,3,4/0,1,2,3,4/0,1,2/4"
    assert "increase 5" in out


def test_map_domain_error_exit_3(capsys):
    code, _, err = run(capsys, "map", "phi-inv", "23/0123/012", "--U", "0", "--B", "3", "--beta", "2,3,2,4", "--k", "5")
    assert code == 3 and "|U|" in err


def test_gf(capsys):
    assert run(capsys, "gf", "val", "--n", "1", "--k", "0", "--r", "0", "--content", "1")[1] == "1\n"
    locked = load_fixture("locked_polynomials.json")
    _, out, _ = run(capsys, "gf", "rise", "--n", "3", "--k", "1", "--r", "0", "--content", "1,1,1")
    assert out.strip() == locked["rise_gf(n=3,k=1,r=0,beta=(1,1,1))"]
    _, at, _ = run(capsys, "gf", "val", "--n", "3", "--k", "1", "--content", "1,1,1", "--at", "t=0")
    # Val at t=0 for k: blocks = k + r + 1
    _, dist, _ = run(capsys, "dist", "inv", "--content", "1,1,1", "--k", "2")
    assert at == dist
    assert run(capsys, "gf", "val", "--n", "2", "--k", "2", "--content", "1,1")[0] == 3
    assert run(capsys, "gf", "val", "--n", "2", "--k", "0", "--content", "1,1", "--at", "q=1")[0] == 2


def test_verify_exit_codes_and_report(capsys, tmp_path):
    path = tmp_path / "r.json"
    code, out, _ = run(capsys, "verify", "mahonian", "--max-size", "4", "--json", str(path))
    assert code == 0
    rep = json.loads(path.read_text())
    assert set(rep) >= {"suite", "params", "cases", "passed", "failed", "elapsed_ms", "version"}
    assert rep["version"] == __version__
    assert rep["passed"] + rep["failed"] == len(rep["cases"])
    assert rep["passed"] == sum(c["pass"] for c in rep["cases"])
    assert all(c["pass"] == (c["expected"] == c["actual"]) for c in rep["cases"])
    # the printed singleton-last-block identity fails once zeros are present
    assert run(capsys, "verify", "lemmas", "--max-size", "4", "--max-r", "1")[0] == 1
    assert run(capsys, "verify", "lemmas", "--max-size", "4", "--max-r", "0")[0] == 0
    # report suites exit 0 even with failing cases
    code, out, _ = run(capsys, "verify", "qstirling", "--max-size", "4")
    assert code == 0 and "failed" in out
    assert run(capsys, "verify", "mahonian", "--max-size", "-1")[0] == 3


def test_reports_are_byte_stable(tmp_path):
    a = run_suite("recursion-shape", 4, 1, timing=False).to_json()
    b = run_suite("recursion-shape", 4, 1, timing=False).to_json()
    assert a == b
    assert json.loads(a)["elapsed_ms"] is None


def test_parallel_matches_serial():
    a = run_suite("equidistribution", 4, 1, jobs=1, timing=False).to_json()
    b = run_suite("equidistribution", 4, 1, jobs=2, timing=False).to_json()
    assert a == b


@pytest.mark.parametrize("name", list(SUITES))
def test_every_suite_runs_small(name):
    rep = run_suite(name, 3, 1)
    assert rep.cases
    assert rep.passed + rep.failed == len(rep.cases)
    assert sum(g["passed"] + g["failed"] for g in rep.summary.values()) == len(rep.cases)
    keys = [c.key for c in rep.cases]
    assert len(keys) == len(set(keys))


def test_locked_polynomials_unchanged(fixtures_dir):
    assert check_locked(fixtures_dir) == []


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "extdelta.cli", "stat", "134/268/57", "maj"], capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout == "4\n"
