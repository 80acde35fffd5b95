import json

import pytest
from mpmath import mp, mpf

from cartan_gamma.cli import default_battery, main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_default_battery_contents():
    labels = [str(lb) for lb in default_battery()]
    assert len(labels) == 49
    assert labels[0] == "A1" and "E8" in labels and "G2" in labels
    assert "D2" not in labels and "B1" not in labels
    assert labels == sorted(labels, key=lambda t: (t[0], int(t[1:])))


def test_roots_text(capsys):
    code, out, _ = run(capsys, "roots", "--type", "E8")
    assert code == 0
    assert "120 positive roots" in out
    assert "h = 30" in out


def test_words_prints_expected_entries(capsys):
    code, out, _ = run(capsys, "words", "--type", "E6")
    assert code == 0
    for expected in ("-[1]+[3]-[6]-[8]",
                     "-[1]+[2]+[3]-[4]-[5]-[6]+[10]-[11]",
                     "-[4]-[5]+[6]-[9]",
                     "[1]-[2]-2[3]+[4]+[5]-[6]-[7]+[9]-[10]"):
        assert expected in out


def test_classify_text(capsys):
    code, out, _ = run(capsys, "classify", "--type", "E6")
    assert code == 0
    assert out.count("k = -1 ; antisymmetrized k = 0") == 6


def test_verify_single_type(capsys):
    code, out, _ = run(capsys, "verify", "all", "--type", "A2")
    assert code == 0
    assert "ALL PASS" in out
    assert out.count("PASS") >= 4


def test_verify_json_schema(capsys):
    code, out, _ = run(capsys, "verify", "1.1", "--type", "G2", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["pass"] is True
    report = payload["reports"][0]
    assert set(report) == {"theorem", "type", "residuals", "tolerance", "pass"}
    assert report["theorem"] == "1.1" and report["type"] == "G2"


def test_verify_failure_exit_code(capsys):
    code, out, _ = run(capsys, "verify", "1.1", "--type", "E6", "--tol", "1e-80")
    assert code == 1
    assert "FAIL" in out


def test_pf_json_values(capsys):
    code, out, _ = run(capsys, "pf", "--type", "A3", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    with mp.workdps(60):
        assert abs(mpf(payload["lambda"]) - (2 - mp.sqrt(2))) < mpf(10) ** -40
        assert abs(mpf(payload["vector"][1]) - mp.sqrt(2)) < mpf(10) ** -40
    assert payload["vector"][0] == "1.0"


def test_json_determinism(capsys):
    _, first, _ = run(capsys, "gamma", "--type", "G2", "--format", "json")
    _, second, _ = run(capsys, "gamma", "--type", "G2", "--format", "json")
    assert first == second


def test_digits_flag_and_env(capsys, monkeypatch):
    _, out30, _ = run(capsys, "gamma", "--type", "G2", "--format", "json", "--digits", "30")
    payload = json.loads(out30)
    assert len(payload["gamma"][0]) < 40
    monkeypatch.setenv("CARTAN_GAMMA_DIGITS", "25")
    _, out25, _ = run(capsys, "gamma", "--type", "G2", "--format", "json")
    assert len(json.loads(out25)["gamma"][0]) < len(payload["gamma"][0])


def test_csv_output(capsys):
    code, out, _ = run(capsys, "roots", "--type", "G2", "--format", "csv")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "type,rank,h,h_dual,positive_roots"
    assert lines[1] == "G2,2,6,4,6"


def test_out_file(tmp_path, capsys):
    target = tmp_path / "report.json"
    code, out, _ = run(capsys, "verify", "4.4", "--type", "F4",
                       "--format", "json", "--out", str(target))
    assert code == 0
    assert out == ""
    payload = json.loads(target.read_text())
    assert payload["pass"] is True


def test_jacobi_with_explicit_prime(capsys):
    code, out, _ = run(capsys, "jacobi", "--type", "E6", "--prime", "37",
                       "--format", "json", "--tol", "1e-38")
    assert code == 0
    payload = json.loads(out)
    assert payload["pass"] is True
    entry = payload["entries"][0]
    assert entry["N"] == 12 and entry["p"] == 37
    assert set(entry) >= {"N", "p", "word", "J", "psi", "cyclotomic"}


def test_jacobi_bad_prime(capsys):
    code, _, err = run(capsys, "jacobi", "--type", "E6", "--prime", "17")
    assert code == 2
    assert "error" in err


def test_selberg_subcommand(capsys):
    code, out, _ = run(capsys, "selberg", "--grid", "1")
    assert code == 0
    assert "PASS" in out


def test_identities_subcommand(capsys):
    code, out, _ = run(capsys, "identities")
    assert code == 0
    assert "PASS" in out


def test_bad_type_is_usage_error(capsys):
    code, _, err = run(capsys, "roots", "--type", "Q5")
    assert code == 2
    assert "error" in err


def test_unknown_subcommand_exits_2():
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2
