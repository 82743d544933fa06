import json
import subprocess
import sys

import pytest

from jfrac.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_convergent_v1_h2(capsys):
    code, out, _ = run(capsys, "convergent", "--variant", "1", "--h", "2")
    assert code == 0
    assert "P: 1 + (1/3 - 1/3*x)*z" in out.splitlines()


def test_convergent_v2_h1(capsys):
    code, out, _ = run(capsys, "convergent", "--variant", "2", "--h", "1")
    assert code == 0 and "Q: 1 - x*z" in out.splitlines()


def test_convergent_h0(capsys):
    code, out, _ = run(capsys, "convergent", "--variant", "1", "--h", "0", "--output", "json")
    d = json.loads(out)
    assert code == 0 and d["p"] == "0" and d["q"] == "1"


def test_convergent_closed_form_verdict(capsys):
    code, out, _ = run(capsys, "convergent", "--variant", "2", "--h", "5", "--closed-form")
    assert code == 0 and "verdict: match" in out


@pytest.mark.parametrize("argv", [
    ["convergent", "--variant", "1"],
    ["convergent", "--variant", "1", "--h", "-1"],
    ["verify", "--suite", "hypergeometric", "--n-max", "0"],
    ["verify", "--suite", "enumeration", "--h-max", "1"],
    ["congruence", "--variant", "1", "--h", "1", "--m", "2", "--x", "0", "--n", "0"],
    ["congruence", "--variant", "1", "--h", "3", "--m", "2", "--x", "0", "--n", "0"],
    ["congruence", "--h", "5", "--x", "1", "--find-m", "--m-max", "4"],
    ["congruence", "--variant", "1", "--h", "3", "--m", "3", "--x", "2"],
])
def test_usage_errors_exit_2(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2 and "error" in err


def test_argparse_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["convergent", "--variant", "3", "--h", "1"])
    assert exc.value.code == 2
    capsys.readouterr()


def test_verify_hypergeometric(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "hypergeometric", "--n-max", "50")
    assert code == 0 and out.strip() == "hypergeometric: 50/50 zero-sums hold"


def test_verify_enumeration(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "enumeration", "--variant", "1",
                       "--h-max", "10")
    assert code == 0
    assert "[report only]" in out


def test_verify_addition(capsys):
    code, _, _ = run(capsys, "verify", "--suite", "addition", "--p-max", "8", "--q-max", "8")
    assert code == 0


def test_verify_json_lines(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "telescope", "--output", "json")
    rows = [json.loads(line) for line in out.splitlines()]
    assert code == 0 and rows[0]["suite"] == "telescope"
    assert rows[0]["passed"] == rows[0]["total"] == 18


def test_find_m_lists_admissible(capsys):
    code, out, _ = run(capsys, "congruence", "--variant", "1", "--h", "2", "--x", "0",
                       "--find-m", "--m-max", "5")
    rows = [json.loads(line) for line in out.splitlines()]
    assert code == 0 and [r["m"] for r in rows] == [2, 3, 4, 5]
    assert all(r["degenerate"] and r["lambda"] == "0/1" for r in rows)


def test_find_m_excludes_nonintegral_lambda(capsys):
    # lambda_3(2) = 1/3
    code, out, _ = run(capsys, "congruence", "--variant", "1", "--h", "3", "--x", "2",
                       "--find-m", "--m-max", "10")
    ms = [json.loads(line)["m"] for line in out.splitlines()]
    assert code == 0 and 3 not in ms


def test_congruence_case_json(capsys):
    code, out, _ = run(capsys, "congruence", "--variant", "1", "--h", "3", "--m", "3",
                       "--x", "2", "--n", "4")
    d = json.loads(out)
    assert code == 0
    assert d["lhs"] == "15/1" and d["lhs_mod"] == 0 and d["holds"] is True


def test_conjecture_report_json(capsys):
    code, out, _ = run(capsys, "congruence", "--conjecture", "--variant", "2", "--h", "3",
                       "--x-max", "10", "--n-max", "10")
    d = json.loads(out)
    assert code == 0 and d["points"] == 121
    assert d["pass_rate"].count("/") == 1


def test_conjecture_failures_do_not_change_exit(capsys):
    code, out, _ = run(capsys, "congruence", "--conjecture", "--variant", "2", "--h", "5",
                       "--x-max", "25", "--n-max", "25", "--form", "displayed")
    assert code == 0 and json.loads(out)["failures"]


def test_bad_thread_setting_is_usage_error(capsys, monkeypatch):
    monkeypatch.setenv("JFRAC_THREADS", "zero")
    code, _, err = run(capsys, "congruence", "--conjecture", "--variant", "1", "--h", "2",
                       "--x-max", "1", "--n-max", "3")
    assert code == 2 and "JFRAC_THREADS" in err


def test_byte_identical_across_processes():
    argv = [sys.executable, "-m", "jfrac", "congruence", "--conjecture", "--variant", "1",
            "--h", "4", "--x-max", "25", "--n-max", "25"]
    outs = {subprocess.run(argv, capture_output=True, check=True,
                           env={"JFRAC_THREADS": t, "PATH": ""}).stdout for t in ("1", "4")}
    assert len(outs) == 1
