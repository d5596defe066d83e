"""Command-line interface: output schema, determinism, exit codes."""

import json
import subprocess
import sys

import pytest

from seifert.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_cohomology_json_schema(capsys):
    code, out, _ = run_cli(capsys, "cohomology", "dynkin:D4", "--json",
                           "--no-timing")
    assert code == 0
    report = json.loads(out)
    assert report["forest"] == {"v": 4, "edges": [[0, 1], [0, 2], [0, 3]]}
    assert report["command"] == "cohomology"
    dims = {(d["q"], d["e"]): d["dim"] for d in report["result"]["dims"]}
    assert dims == {(0, 0): 1, (1, 1): 1, (1, 2): 1, (2, 2): 1,
                    (3, 3): 1, (4, 4): 1}


def test_json_deterministic_without_timing(capsys):
    a = run_cli(capsys, "alexander", "dynkin:E6", "--json", "--no-timing")
    b = run_cli(capsys, "alexander", "dynkin:E6", "--json", "--no-timing")
    assert a == b
    assert "timing_ms" not in json.loads(a[1])


def test_json_timing_present_by_default(capsys):
    code, out, _ = run_cli(capsys, "count", "path:4", "--json")
    assert code == 0
    assert "timing_ms" in json.loads(out)


def test_alexander_all_methods(capsys):
    code, out, _ = run_cli(capsys, "alexander", "dynkin:E8", "--json",
                           "--no-timing")
    assert code == 0
    report = json.loads(out)
    assert report["result"]["verdict"] == "OK"
    # [coef, exp] pairs of 1 - t + t^3 - t^4 + t^5 - t^7 + t^8
    assert report["result"]["delta"] == [[1, 0], [-1, 1], [1, 3], [-1, 4],
                                         [1, 5], [-1, 7], [1, 8]]


def test_stdin_and_inline_input(capsys, monkeypatch):
    import io
    monkeypatch.setattr(sys, "stdin", io.StringIO("v 2\ne 0 1\n"))
    code, out, _ = run_cli(capsys, "count", "-", "--json", "--no-timing")
    assert code == 0
    assert json.loads(out)["result"]["configurations"] == 5
    code, out, _ = run_cli(capsys, "count", "v 2\ne 0 1\n", "--json",
                           "--no-timing")
    assert json.loads(out)["result"]["configurations"] == 5


def test_spectral_and_k2_commands(capsys):
    code, out, _ = run_cli(capsys, "spectral", "dynkin:D4", "--json",
                           "--no-timing", "--max-page", "3")
    assert code == 0
    pages = {p["r"]: {(d["q"], d["e"]): d["dim"] for d in p["dims"]}
             for p in json.loads(out)["result"]["pages"]}
    assert pages[2] == {(0, 0): 1, (1, 2): 1}
    assert pages[3] == {}
    assert json.loads(out)["result"]["limit_dim"] == 0

    code, out, _ = run_cli(capsys, "k2", "dynkin:E6", "--json", "--no-timing")
    assert code == 0
    gens = [(g["q"], g["e"]) for g in json.loads(out)["result"]["generators"]]
    assert sorted(gens) == [(0, 0), (1, 1), (2, 3), (5, 5), (6, 6)]


def test_hf_command_match(capsys):
    code, out, _ = run_cli(capsys, "hf", "dynkin:E6", "--json", "--no-timing")
    assert code == 0
    result = json.loads(out)["result"]
    assert result["verdict"] == "MATCH"
    assert result["gap_exponents"] == [0, 3, 4, 6]
    assert result["hf_hat"] == [[1, 0, 0], [1, 1, 1], [1, 2, 3],
                                [1, 5, 5], [1, 6, 6]]


def test_check_command(capsys):
    code, out, _ = run_cli(capsys, "check", "dynkin:D4", "--json",
                           "--no-timing")
    assert code == 0
    checks = json.loads(out)["result"]["checks"]
    assert checks and all(checks.values())


def test_exit_codes(capsys):
    # bad input -> 1
    code, _, err = run_cli(capsys, "cohomology", "dynkin:Z9")
    assert code == 1 and err
    code, _, err = run_cli(capsys, "cohomology", "no-such-file.forest")
    assert code == 1
    code, _, err = run_cli(capsys, "cohomology", "v 3\ne 0 1\ne 1 2\ne 0 2")
    assert code == 1
    # link precondition for the comparison -> 2
    code, _, err = run_cli(capsys, "hf", "dynkin:D5")
    assert code == 2 and "link" in err
    # size guardrail -> 2, bypassed by --force
    code, _, err = run_cli(capsys, "count", "star:40")
    assert code == 2 and "--force" in err
    code, _, _ = run_cli(capsys, "count", "star:40", "--force", "--json",
                         "--no-timing")
    assert code == 0


def test_console_script_installed():
    out = subprocess.run(["seifert", "count", "path:3", "--json",
                          "--no-timing"], capture_output=True, text=True)
    assert out.returncode == 0
    assert json.loads(out.stdout)["result"]["configurations"] == 12
