import json
import subprocess
import sys

import pytest

from seqcomplexity.cli import RunReport, main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_generate_thue_morse(capsys):
    assert run(capsys, "generate", "--seq", "thue-morse", "-n", "16") == (0, "0110100110010110\n", "")


def test_generate_pattern_and_hex(capsys):
    assert run(capsys, "generate", "--seq", "pattern", "-k", "2", "-n", "8")[1] == "00010010\n"
    assert run(capsys, "generate", "--seq", "thue-morse", "-n", "8", "--out-format", "hex")[1] == "69\n"
    assert run(capsys, "generate", "--seq", "rudin-shapiro", "-n", "8")[1] == "00010010\n"


def test_generate_squares(capsys):
    assert run(capsys, "generate", "--seq", "thue-morse", "--squares", "-n", "10")[1] == "0110110111\n"


def test_generate_to_file(capsys, tmp_path):
    out = tmp_path / "tm.txt"
    assert run(capsys, "generate", "--seq", "thue-morse", "-n", "4", "-o", str(out))[0] == 0
    assert out.read_text() == "0110\n"


@pytest.mark.parametrize(
    "argv",
    [
        ["generate", "--seq", "thue-morse", "-n", "0"],
        ["generate", "--seq", "nope", "-n", "3"],
        ["generate", "-n", "3"],
        ["measure", "--seq", "thue-morse", "--measure", "xx", "-n", "3"],
    ],
)
def test_usage_errors_exit_2(argv, capsys):
    with pytest.raises(SystemExit) as info:
        main(argv)
    assert info.value.code == 2


def test_pattern_without_k(capsys):
    code, _, err = run(capsys, "generate", "--seq", "pattern", "-n", "4")
    assert code == 2 and "-k" in err


def test_measure_moc(capsys):
    assert run(capsys, "measure", "--seq", "pattern", "-k", "2", "--measure", "moc", "-n", "24")[1] == "6\n"


def test_measure_ec_json(capsys):
    code, out, _ = run(capsys, "measure", "--seq", "thue-morse", "--measure", "ec", "-n", "64", "--witness", "--json")
    assert code == 0
    record = json.loads(out)["results"][0]
    assert record["value"] <= 5
    assert record["monomials"]


def test_measure_lc_witness(capsys):
    code, out, _ = run(capsys, "measure", "--seq", "thue-morse", "--measure", "lc", "-n", "4", "--witness")
    assert out.splitlines() == ["2", "taps: [1, 1]"]


def test_measure_file(capsys, tmp_path):
    zeros = tmp_path / "zeros.txt"
    zeros.write_text("0" * 9)
    assert run(capsys, "measure", "--file", str(zeros), "--measure", "moc", "-n", "9")[1] == "0\n"


def test_measure_bad_file(capsys, tmp_path):
    bad = tmp_path / "bad.txt"
    bad.write_text("01x1")
    code, _, err = run(capsys, "measure", "--file", str(bad), "--measure", "moc", "-n", "3")
    assert code != 0 and "offset 2" in err
    code, _, err = run(capsys, "measure", "--file", str(tmp_path / "missing"), "--measure", "moc", "-n", "3")
    assert code != 0


def test_measure_file_too_short(capsys, tmp_path):
    short = tmp_path / "s.txt"
    short.write_text("0101")
    assert run(capsys, "measure", "--file", str(short), "--measure", "lc", "-n", "5")[0] == 2


def test_profile_csv(capsys):
    code, out, _ = run(capsys, "profile", "--seq", "thue-morse", "--measure", "moc", "--nmax", "3")
    assert out == "N,value\n1,0\n2,1\n3,1\n"
    out = run(capsys, "profile", "--seq", "pattern", "-k", "2", "--measure", "moc", "--nmax", "25")[1]
    assert out.splitlines()[-2:] == ["24,6", "25,9"]


@pytest.mark.parametrize("first", ["0", "1"])
def test_profile_lc_first_row(capsys, tmp_path, first):
    path = tmp_path / "r.bits"
    path.write_text(first + "0110")
    out = run(capsys, "profile", "--file", str(path), "--measure", "lc", "--nmax", "1")[1]
    assert out == f"N,value\n1,{first}\n"


def test_profile_ec_and_deterministic(capsys, tmp_path):
    a = run(capsys, "profile", "--seq", "thue-morse", "--measure", "ec", "--nmax", "40")[1]
    b = run(capsys, "profile", "--seq", "thue-morse", "--measure", "ec", "--nmax", "40")[1]
    assert a == b
    assert "\r" not in a and not any(line.endswith(",") for line in a.splitlines())


def test_profile_write_failure(capsys, tmp_path):
    code, _, _ = run(
        capsys, "profile", "--seq", "thue-morse", "--measure", "moc", "--nmax", "3", "-o", str(tmp_path / "no" / "x.csv")
    )
    assert code != 0


@pytest.mark.parametrize(
    "argv",
    [
        ["--claims", "theorem1", "--nmax", "2000"],
        ["--claims", "witness-tm", "--nmax", "65536"],
        ["--claims", "remark2"],
        ["--claims", "shift-tm,shift-pattern", "--claims", "remark1"],
    ],
)
def test_verify_passes(capsys, argv):
    code, out, _ = run(capsys, "verify", *argv)
    assert code == 0
    assert "FAIL" not in out


def test_verify_unknown_claim(capsys):
    assert run(capsys, "verify", "--claims", "theorem9")[0] == 2


def test_verify_json_round_trip(capsys):
    code, out, _ = run(capsys, "verify", "--claims", "remark2,squares-probe", "--nmax", "300", "--json")
    report = RunReport.from_json(out)
    assert report.command == "verify"
    assert report.verdicts == [("remark2", "pass"), ("squares-probe", "exploratory")]
    assert RunReport.from_json(report.to_json()) == report


def test_verify_failure_exit_code(capsys, monkeypatch):
    from seqcomplexity import claims

    monkeypatch.setattr(claims, "check_remark2", lambda: claims.ClaimResult("remark2", False, "forced"))
    assert run(capsys, "verify", "--claims", "remark2")[0] == 1


def test_verify_parallel_workers(monkeypatch):
    monkeypatch.setenv("SEQCX_WORKERS", "2")
    proc = subprocess.run(
        [sys.executable, "-m", "seqcomplexity", "verify", "--claims", "remark2,shift-tm", "--json"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert RunReport.from_json(proc.stdout).verdicts == [("remark2", "pass"), ("shift-tm", "pass")]
