import json
import subprocess
import sys

import pytest

from mhsums.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize(
    "argv, expected",
    [
        (("eval", "mhss", "--n", "2", "--k", "1,1"), "7/4"),
        (("eval", "stirling1", "--n", "4", "--k", "2"), "11"),
        (("eval", "mhs", "--n", "1", "--k", "1,1"), "0"),
        (("eval", "mhts", "--n", "2", "--k", "1", "--z", "1/2"), "5/8"),
        (("eval", "H", "--n", "4", "--p", "2"), "205/144"),
        (("eval", "Hbar", "--n", "3"), "5/6"),
        (("eval", "bellY", "--n", "3", "--k", "2"), "85/18"),
    ],
)
def test_eval(capsys, argv, expected):
    code, out, _ = run(capsys, *argv)
    assert code == 0 and out.strip() == expected


def test_eval_usage_errors(capsys):
    assert run(capsys, "eval", "mhss", "--n", "2")[0] == 2
    assert run(capsys, "eval", "mhts", "--n", "2", "--k", "1", "--z", "0.5")[0] == 2
    code, _, err = run(capsys, "eval", "mhss", "--n", "2", "--k", "1,x")
    assert code == 2 and "usage" in err
    with pytest.raises(SystemExit) as exc:
        main(["eval", "nonsense", "--n", "1"])
    assert exc.value.code == 2


def test_verify_pass(capsys):
    code, out, _ = run(capsys, "verify", "mneimneh", "--n", "2", "--p", "1/2")
    assert code == 0
    assert "lhs=7/8" in out and "passed=1" in out


def test_verify_domain_error_is_not_a_failure(capsys):
    code, out, _ = run(capsys, "verify", "thm2", "--x", "1", "--y", "0", "--z", "0", "--n", "3", "--p", "1", "--m", "1")
    assert code == 0
    assert "domain-error" in out and "skipped=1" in out


def test_verify_ranges_and_json(capsys):
    code, out, err = run(capsys, "verify", "thm1", "--x", "1/3", "--y", "1/2", "--z", "1/5",
                         "--n", "1..10", "--p", "1..3", "--format", "json")
    assert code == 0
    rows = [json.loads(line) for line in out.splitlines()]
    assert len(rows) == 30 and all(r["equal"] for r in rows)
    assert "passed=30" in err


def test_verify_mismatch_exit_code(capsys):
    code, out, _ = run(capsys, "verify", "gencev_printed", "--n", "3", "--r", "2", "--p", "1/3", "--z", "1/2")
    assert code == 1 and "mismatch" in out


def test_verify_usage_errors(capsys):
    assert run(capsys, "verify", "nope", "--n", "1")[0] == 2
    assert run(capsys, "verify", "thm1")[0] == 2
    assert run(capsys, "verify")[0] == 2
    assert run(capsys, "verify", "thm1", "--config", "/nonexistent.yaml")[0] == 2
    assert run(capsys, "verify", "thm1", "--n", "1.5")[0] == 2


def test_conjecture_search_is_byte_identical(tmp_path, capsys):
    outs = []
    for i in range(2):
        path = tmp_path / f"run{i}.ndjson"
        code, out, _ = run(capsys, "verify", "conjecture", "--seed", "42", "--budget", "200",
                           "--format", "json", "--output", str(path))
        assert code == 0 and "passed=200" in out
        outs.append(path.read_bytes())
    assert outs[0] == outs[1]


def test_config_file(tmp_path, capsys):
    cfg = tmp_path / "cfg.yaml"
    cfg.write_text("identity: thm3\ngrid:\n  x: 1/2\n  y: 1/2\n  n: 1..4\n  p: 1..2\n  m: 0..1\n  r: 1\n")
    out_csv = tmp_path / "out.csv"
    code, out, _ = run(capsys, "verify", "--config", str(cfg), "--format", "csv", "--output", str(out_csv))
    assert code == 0 and "passed=16" in out
    assert len(out_csv.read_text().splitlines()) == 17
    sampler = tmp_path / "sampler.json"
    sampler.write_text(json.dumps({"identity": "thm1", "seed": 3, "budget": 10,
                                   "sampler": {"n": "1..6", "p": "1..3", "x": "1/2", "y": "1/3", "z": "-1"}}))
    code, out, _ = run(capsys, "verify", "--config", str(sampler))
    assert code == 0 and "passed=10" in out


def test_numeric(capsys):
    code, out, _ = run(capsys, "numeric", "--m", "0", "--r", "1", "--y", "1/2", "--N", "2000")
    assert code == 0
    assert "1.644" in out
    code, out, _ = run(capsys, "numeric", "--m", "0", "--r", "2", "--y", "1/2", "--tol", "1e-3",
                       "--trace", "10,50,200")
    assert code == 0 and "weights=1" in out
    code, _, err = run(capsys, "numeric", "--y", "3/2")
    assert code == 2 and "y must lie" in err
    code, _, _ = run(capsys, "numeric", "--m", "0", "--r", "1", "--y", "1/2", "--N", "50", "--tol", "1e-30")
    assert code == 1


def test_list(capsys):
    code, out, _ = run(capsys, "list")
    assert code == 0
    for ident in ("mneimneh", "thm1", "thm2", "thm3", "conjecture", "prop5"):
        assert ident in out


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "mhsums", "eval", "mhss", "--n", "3", "--k", "2"],
                         capture_output=True, text=True, check=False)
    assert res.returncode == 0 and res.stdout.strip() == "49/36"
