import csv

import pytest

from coprime_count import cli


def run(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_count(capsys):
    code, out, _ = run(capsys, "count", "6")
    assert code == 0
    assert out.strip() == "T3(6) = 9"
    code, out, _ = run(capsys, "count", "3")
    assert out.strip() == "T3(3) = 1"


def test_oracle(capsys):
    code, out, _ = run(capsys, "oracle", "6")
    assert code == 0
    assert out.strip() == "T3(6) = 9"


def test_usage_error_exits_2():
    with pytest.raises(SystemExit) as exc:
        cli.main(["count"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        cli.main(["bogus"])
    assert exc.value.code == 2


def test_computation_error_exits_3(capsys):
    code, _, err = run(capsys, "count", "2")
    assert code == 3
    assert "error:" in err


def test_scan_csv(capsys):
    code, out, _ = run(capsys, "--format", "csv", "scan", "3", "6")
    assert code == 0
    lines = out.strip().split("\n")
    assert lines[0] == "n,T,method,terms_evaluated"
    assert len(lines) == 5
    assert lines[1].startswith("3,1,mobius,")


def test_report_csv_roundtrip(tmp_path, capsys):
    out_file = tmp_path / "report.csv"
    code, _, _ = run(
        capsys,
        "--format", "csv", "--out", str(out_file), "--truncation", "1000",
        "report", "100", "200", "10",
    )
    assert code == 0
    text = out_file.read_text(encoding="utf-8")
    assert "\r" not in text
    rows = list(csv.DictReader(text.splitlines()))
    assert len(rows) == 11
    assert list(rows[0].keys()) == [
        "n", "T", "M", "f_half_nsq", "abs_err_M", "abs_err_f", "normalized_err",
    ]
    from coprime_count import error_report

    expected = error_report(100, 200, 10, truncation=1000)
    for row, ref in zip(rows, expected):
        assert int(row["n"]) == ref.n
        assert int(row["T"]) == ref.T
        assert float(row["M"]) == ref.M
        assert float(row["f_half_nsq"]) == ref.fn_half_nsq
        assert float(row["abs_err_M"]) == ref.abs_err_M
        assert float(row["abs_err_f"]) == ref.abs_err_f
        assert float(row["normalized_err"]) == ref.normalized_err


def test_human_format(capsys):
    code, out, _ = run(capsys, "scan", "3", "5")
    assert code == 0
    header = out.splitlines()[0].split()
    assert header == ["n", "T", "method", "terms_evaluated"]


def test_verify_passes(capsys):
    code, out, _ = run(capsys, "--oracle-limit", "40", "verify")
    assert code == 0
    assert "[FAIL]" not in out
    assert out.count("[PASS]") >= 5
