import json

import pytest

from shifted_symfun import cli
from shifted_symfun import jack as jack_module
from shifted_symfun.scalars import RationalFunction


def run(capsys, argv):
    code = cli.main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_compute_interpolation_golden(capsys):
    code, out, _ = run(capsys, ["compute", "--what", "P", "--lambda", "1",
                                "--n", "2", "--r", "1/2"])
    assert code == 0
    assert out.strip() == "m[1,0] - 1/2 m[]"


def test_compute_jack_golden(capsys):
    code, out, _ = run(capsys, ["compute", "--what", "jackP", "--lambda", "2",
                                "--n", "2", "--symbolic"])
    assert code == 0
    assert out.strip() == "m[2,0] + (2/(α+1)) m[1,1]"


def test_non_dominant_shift_refused(capsys):
    code, out, err = run(capsys, ["compute", "--what", "P", "--lambda", "1",
                                  "--n", "3", "--r", "-1/2"])
    assert code == 2
    assert "-1/2" in err and "1" in err and "2" in err
    assert out == ""


def test_dominant_negative_shift_accepted(capsys):
    # r = -1/3 has denominator 3 > n - 1, so no node differences collide
    code, out, _ = run(capsys, ["compute", "--what", "P", "--lambda", "1",
                                "--n", "3", "--r", "-1/3"])
    assert code == 0 and out.strip()


def test_compute_whats(capsys):
    cases = [
        (["--what", "P1k", "--lambda", "1,1", "--n", "2", "--symbolic"],
         "m[1,1]"),
        (["--what", "jackJ", "--lambda", "2", "--n", "2", "--symbolic"],
         "(α+1) m[2,0] + 2 m[1,1]"),
        (["--what", "shiftedJ", "--lambda", "1", "--n", "2", "--symbolic"],
         "m[1,0] + (1/α) m[]"),
    ]
    for argv, want in cases:
        code, out, err = run(capsys, ["compute"] + argv)
        assert code == 0, err
        assert out.strip() == want


def test_compute_json_document(capsys):
    code, out, _ = run(capsys, ["compute", "--what", "jackP", "--lambda", "2",
                                "--n", "2", "--symbolic", "--output", "json"])
    assert code == 0
    doc = json.loads(out)
    assert doc["schema"] == 1
    assert doc["command"] == "compute"
    assert doc["lambda"] == [2, 0]
    assert doc["param"] == "alpha"
    assert doc["result"]["basis"] == "m"
    assert doc["result"]["terms"] == [
        {"key": [2, 0], "coeff": "1"},
        {"key": [1, 1], "coeff": [["2"], ["1", "1"]]},
    ]


def test_compute_rational_alpha_bridge(capsys):
    # r = 2 means alpha = 1/2: coefficient 2/(alpha+1) becomes 4/3
    code, out, _ = run(capsys, ["compute", "--what", "jackP", "--lambda", "2",
                                "--n", "2", "--r", "2"])
    assert code == 0
    assert out.strip() == "m[2,0] + 4/3 m[1,1]"


def test_compute_config_errors(capsys):
    bad = [
        ["compute", "--what", "P", "--lambda", "1,2", "--n", "2", "--symbolic"],
        ["compute", "--what", "P", "--lambda", "1,1,1", "--n", "2",
         "--symbolic"],
        ["compute", "--what", "P", "--lambda", "1", "--n", "0", "--symbolic"],
        ["compute", "--what", "P1k", "--lambda", "2", "--n", "2",
         "--symbolic"],
        ["compute", "--what", "one-row", "--lambda", "1,1", "--n", "2",
         "--symbolic"],
        ["compute", "--what", "factorial-schur", "--lambda", "1", "--n", "2",
         "--r", "2"],
        ["compute", "--what", "jackP", "--lambda", "1", "--n", "2",
         "--r", "0"],
        ["compute", "--what", "P", "--lambda", "1", "--n", "2",
         "--r", "1/2", "--symbolic"],
        ["compute", "--what", "P", "--lambda", "1", "--n", "2", "--r", "x"],
    ]
    for argv in bad:
        code, out, err = run(capsys, argv)
        assert code == 2, argv
        assert err.startswith("error:")


def test_verify_examples(capsys):
    code, out, _ = run(capsys, ["verify", "--check", "eigenvalue",
                                "--n", "2", "--dmax", "4", "--symbolic"])
    assert code == 0
    assert "check=eigenvalue status=pass" in out
    code, out, _ = run(capsys, ["verify", "--check", "extra-vanishing",
                                "--n", "3", "--dmax", "4", "--r", "2/3"])
    assert code == 0
    code, out, _ = run(capsys, ["verify", "--check", "pieri",
                                "--n", "2", "--dmax", "3"])
    assert code == 0


def test_verify_json_and_multiple_checks(capsys):
    code, out, _ = run(capsys, ["verify", "--check", "vanishing,cutoff",
                                "--n", "2", "--dmax", "3",
                                "--output", "json"])
    assert code == 0
    doc = json.loads(out)
    assert doc["schema"] == 1 and doc["status"] == "pass"
    assert [r["check"] for r in doc["reports"]] == ["vanishing", "cutoff"]


def test_verify_unknown_check(capsys):
    code, _, err = run(capsys, ["verify", "--check", "bogus",
                                "--n", "2", "--dmax", "2"])
    assert code == 2
    assert "bogus" in err


def test_verify_alpha_check_rejects_r(capsys):
    code, _, err = run(capsys, ["verify", "--check", "pieri",
                                "--n", "2", "--dmax", "2", "--r", "1/2"])
    assert code == 2


def test_verify_failure_exit_code(capsys, monkeypatch):
    def broken(n, dmax, r="symbolic"):
        return {"schema": 1, "check": "vanishing", "params": {"n": n},
                "status": "fail", "witness": {"kind": "synthetic"}}

    monkeypatch.setitem(cli.CHECKS, "vanishing", (broken, True))
    code, out, _ = run(capsys, ["verify", "--check", "vanishing",
                                "--n", "2", "--dmax", "2"])
    assert code == 1
    assert "witness" in out and "synthetic" in out


def brute_count(n, dmax):
    def parts(rem, maxpart, slots):
        if rem == 0:
            return 1
        if slots == 0:
            return 0
        return sum(parts(rem - p, p, slots - 1)
                   for p in range(min(rem, maxpart), 0, -1))
    return sum(parts(d, d if d else 1, n) for d in range(dmax + 1))


def test_scan_document_and_count(capsys):
    code, out, _ = run(capsys, ["scan", "--n", "2", "--dmax", "3",
                                "--output", "json"])
    assert code == 0
    lines = out.strip().split("\n")
    reports, summary = lines[:-1], json.loads(lines[-1])
    assert len(reports) == brute_count(2, 3) == 6
    assert summary["schema"] == 1 and summary["reports"] == 6
    assert summary["pass"] == 6 and summary["fail"] == 0
    first = json.loads(reports[0])
    assert first["lambda"] == [0, 0] and first["verdict"] == "pass"
    for line in reports:
        doc = json.loads(line)
        assert set(doc) == {"schema", "lambda", "n", "rows",
                            "dominance_ok", "verdict"}
        for row in doc["rows"]:
            assert set(row) == {"mu", "a", "polynomial", "integral", "nonneg"}


def test_scan_worker_determinism(capsys):
    _, out1, _ = run(capsys, ["scan", "--n", "2", "--dmax", "3",
                              "--output", "json", "--workers", "1"])
    _, out2, _ = run(capsys, ["scan", "--n", "2", "--dmax", "3",
                              "--output", "json", "--workers", "3"])
    assert out1 == out2


def test_scan_workers_from_environment(capsys, monkeypatch):
    monkeypatch.setenv("SHIFTED_SYMFUN_WORKERS", "2")
    _, out_env, _ = run(capsys, ["scan", "--n", "2", "--dmax", "2",
                                 "--output", "json"])
    monkeypatch.setenv("SHIFTED_SYMFUN_WORKERS", "1")
    _, out_one, _ = run(capsys, ["scan", "--n", "2", "--dmax", "2",
                                 "--output", "json"])
    assert out_env == out_one
    monkeypatch.setenv("SHIFTED_SYMFUN_WORKERS", "zero")
    code, _, err = run(capsys, ["scan", "--n", "2", "--dmax", "2"])
    assert code == 2 and "SHIFTED_SYMFUN_WORKERS" in err


def test_scan_rejects_rational_parameter(capsys):
    code, _, err = run(capsys, ["scan", "--n", "2", "--dmax", "2",
                                "--r", "1/2"])
    assert code == 2
    assert "symbolically" in err


def test_scan_fault_injection_strict(capsys, monkeypatch):
    real = jack_module.shifted_jack_J
    alpha = RationalFunction.gen("alpha")

    def corrupted(lam, n):
        return real(lam, n) * (1 / (alpha + 1))

    monkeypatch.setattr(jack_module, "shifted_jack_J", corrupted)
    code, out, _ = run(capsys, ["scan", "--n", "2", "--dmax", "2",
                                "--strict", "--workers", "1",
                                "--output", "json"])
    assert code == 1
    lines = out.strip().split("\n")
    summary = json.loads(lines[-1])
    assert summary["fail"] > 0 and summary["status"] == "fail"
    # without --strict the same corruption still reports but exits 0
    code, _, _ = run(capsys, ["scan", "--n", "2", "--dmax", "2",
                              "--workers", "1", "--output", "json"])
    assert code == 0


def test_scan_text_output(capsys):
    code, out, _ = run(capsys, ["scan", "--n", "2", "--dmax", "2"])
    assert code == 0
    lines = out.strip().split("\n")
    assert lines[0] == "lambda=[0, 0] verdict=pass rows=1"
    assert lines[-1] == "scanned 4 partitions: 4 pass, 0 fail"
