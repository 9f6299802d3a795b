import io
import json
import subprocess
import sys

import pytest

from samerep.cli import RunConfig, run_cli


def run(*argv):
    out = io.StringIO()
    code = run_cli(list(argv), out=out)
    return code, out.getvalue()


def test_solve_solution():
    code, text = run("solve", "--m", "8", "--removed", "4")
    assert code == 0
    assert "C = 0,3,6,7" in text and "D = 1,2,5,8" in text


def test_solve_infeasible():
    code, _ = run("solve", "--m", "8", "--removed", "3")
    assert code == 1


def test_solve_json_schema():
    code, text = run("solve", "--m", "6", "--shared", "3", "--json", "--enumerate")
    assert code == 0
    assert json.loads(text) == {
        "m": 6, "removed": [], "shared": [3], "C": "0,3,4,5", "D": "1,2,3,6", "status": "solution",
    }
    code, text = run("solve", "--m", "8", "--removed", "3", "--json")
    assert json.loads(text)["status"] == "infeasible"


@pytest.mark.parametrize(
    "argv",
    [
        ["solve", "--m", "8", "--removed", "0"],
        ["solve", "--m", "8", "--removed", "x"],
        ["solve"],
        ["repfn", "--set", "3,1"],
        ["bogus"],
        ["lemmas", "--check", "6", "--max", "10"],
    ],
)
def test_usage_errors(argv):
    assert run(*argv)[0] == 2


def test_capacity_errors():
    assert run("--universe-cap", "100", "construct", "--theorem1", "8")[0] == 3
    assert run("scan", "--kind", "punctured", "--max", "2000")[0] == 3
    assert run("--universe-cap", "50", "scan", "--kind", "full", "--max", "40")[0] == 3


def test_lemmas():
    assert run("lemmas", "--check", "5", "--max", "1000")[0] == 0
    code, text = run("lemmas", "--check", "3", "--max", "1000")
    assert code == 0 and "holds" in text
    assert run("lemmas", "--check", "7", "--max", "300")[0] == 0


def test_lemma4_reports_two():
    # M = 2 is the one counterexample to the literal statement of lemma 4
    code, text = run("lemmas", "--check", "4", "--max", "1000")
    assert code == 1
    assert text.rstrip().endswith(": 2")


def test_repfn_formats():
    code, text = run("repfn", "--set", "0,3,5,6", "--csv")
    assert code == 0
    rows = text.strip().splitlines()
    assert rows[0] == "n,R" and rows[9] == "8,1" and len(rows) == 14
    code, text = run("repfn", "--set", "0x69", "--json", "--upto", "8")
    assert json.loads(text)[8] == {"n": 8, "R": 1}
    code, text = run("repfn", "--set", "", "--upto", "2")
    assert text == "0\t0\n1\t0\n2\t0\n"


def test_construct():
    code, text = run("construct", "--theorem1", "3", "--json")
    assert json.loads(text) == {"construction": "theorem1", "m": 8, "r": 4, "C": "0,3,6,7", "D": "1,2,5,8"}
    code, text = run("construct", "--lemma6", "2")
    assert "C = 0,3" in text
    code, text = run("construct", "--problem2", "1", "--json")
    assert json.loads(text)["C"] == "0,3,4,5"


def test_scan_outputs(tmp_path):
    out_file = tmp_path / "scan.jsonl"
    code, text = run("scan", "--kind", "punctured", "--max", "16", "--jsonl", str(out_file))
    assert code == 0
    assert "[anomaly]" in text
    lines = [json.loads(x) for x in out_file.read_text().splitlines()]
    assert len(lines) == sum(m - 1 for m in range(2, 17))
    assert set(lines[0]) == {"m", "profile_kind", "r", "status", "matches_theorem", "anomaly",
                             "C", "D", "failed_at", "solve_micros"}


@pytest.mark.parametrize("fmt", ["json", "csv", "jsonl"])
def test_scan_output_stable(fmt, tmp_path):
    a = run("scan", "--kind", "shared", "--max", "12", "--format", fmt, "--no-timing")
    b = run("scan", "--kind", "shared", "--max", "12", "--format", fmt, "--no-timing", "--jobs", "3")
    assert a == b and a[0] == 0


def test_scan_cache_flag(tmp_path):
    cache = tmp_path / "cache.jsonl"
    first = run("scan", "--kind", "full", "--max", "31", "--cache", str(cache), "--format", "jsonl", "--no-timing")
    second = run("scan", "--kind", "full", "--max", "31", "--cache", str(cache), "--format", "jsonl", "--no-timing")
    assert first == second
    assert len(cache.read_text().splitlines()) == 31


def test_run_config_validation():
    with pytest.raises(ValueError):
        RunConfig(jobs=0)


def test_version_and_help():
    assert run("--version")[0] == 0
    assert run("--help")[0] == 0


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "samerep", "solve", "--m", "4", "--removed", "2"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0
    assert "C = 0,4" in proc.stdout
