import json
import subprocess
import sys

import pytest

from ltl2nba.cli import EXIT_INPUT, EXIT_MODE, EXIT_OK, EXIT_VERIFY, JobConfig, UsageError, main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_stats_for_until(capsys):
    assert run(capsys, "-f", "a U b", "--format", "stats") == (EXIT_OK, "states=2 transitions=3 accepting=1\n", "")


def test_stats_for_globally_two_untils(capsys):
    code, out, _ = run(capsys, "-f", "G(b U c & d U e)", "--format", "stats")
    assert code == EXIT_OK
    assert out.startswith("states=4 ") and out.endswith(" accepting=1\n")


def test_syntax_error_exit(capsys):
    code, out, err = run(capsys, "-f", "a U (", "--format", "stats")
    assert code == EXIT_INPUT and out == ""
    assert "1:6" in err and err.rstrip().endswith("^")


def test_mode_mismatch_exit(capsys):
    code, _, err = run(capsys, "-f", "G a", "--mode", "rf")
    assert code == EXIT_MODE
    assert "Release" in err
    assert run(capsys, "-f", "F a", "--mode", "uf")[0] == EXIT_MODE


def test_usage_errors(capsys):
    assert run(capsys, "--format", "stats")[0] == EXIT_INPUT
    assert run(capsys, "--sample", "3")[0] == EXIT_INPUT
    with pytest.raises(SystemExit) as info:
        main(["-f", "a", "--format", "svg"])
    assert info.value.code == EXIT_INPUT
    with pytest.raises(UsageError):
        JobConfig(formula="a", verify=True, max_loop=0).validate()


def test_missing_file(capsys, tmp_path):
    code, _, err = run(capsys, "--file", str(tmp_path / "nope.ltl"))
    assert code == EXIT_INPUT and "nope.ltl" in err


def test_file_input_and_output(capsys, tmp_path):
    src = tmp_path / "f.ltl"
    src.write_text("G(b U c & d U e)\n")
    out = tmp_path / "a.hoa"
    assert run(capsys, "--file", str(src), "-o", str(out)) == (EXIT_OK, "", "")
    assert "States: 4" in out.read_text()


def test_formats(capsys):
    assert run(capsys, "-f", "a U b", "--format", "dot")[1].startswith("digraph")
    assert json.loads(run(capsys, "-f", "a U b", "--format", "json")[1])["stats"]["states"] == 2
    assert run(capsys, "-f", "a U b")[1].startswith("HOA: v1")


def test_optimization_flags(capsys):
    base = run(capsys, "-f", "G(b U c & d U e)", "--format", "stats")[1]
    unmerged = run(capsys, "-f", "G(b U c & d U e)", "--format", "stats", "--no-merge")[1]
    assert base != unmerged
    for flag in ("--no-restrict-p", "--min-os", "--prune-dead", "--no-occurrence-tags"):
        assert run(capsys, "-f", "G(b U c & d U e)", "--format", "stats", flag)[0] == EXIT_OK


def test_verify_single_formula(capsys):
    code, out, err = run(capsys, "--verify", "-f", "a U b", "--max-stem", "2", "--max-loop", "2")
    assert code == EXIT_OK
    report = json.loads(out)
    result = report["results"][0]
    assert result["pass"] and set(result["checks"]) == {"oracle_equivalence", "complement_intersection", "bounds"}
    bounds = result["checks"]["bounds"]
    assert {"n", "bound_n1", "bound_2n1"} <= set(bounds)
    assert "1/1 pass" in err


def test_verify_sampled_batch(capsys):
    code, out, err = run(capsys, "--verify", "--sample", "50", "--seed", "7", "--max-size", "6", "--ap", "2")
    assert code == EXIT_OK
    assert json.loads(out)["summary"] == {"total": 50, "passed": 50}


def test_verify_reports_failures(capsys):
    code, out, _ = run(capsys, "--verify", "--no-occurrence-tags", "-f", "(a U !b) U (!a R a)",
                       "--max-stem", "0", "--max-loop", "2")
    assert code == EXIT_VERIFY
    check = json.loads(out)["results"][0]["checks"]["oracle_equivalence"]
    assert not check["pass"] and "counterexample" in check


def test_output_is_deterministic(capsys):
    outputs = {run(capsys, "-f", "G(b U c & d U e)", "--format", "json")[1] for _ in range(3)}
    assert len(outputs) == 1


def test_console_script():
    done = subprocess.run([sys.executable, "-m", "ltl2nba.cli", "-f", "a U b", "--format", "stats"],
                          capture_output=True, text=True)
    assert done.returncode == 0 and done.stdout == "states=2 transitions=3 accepting=1\n"
