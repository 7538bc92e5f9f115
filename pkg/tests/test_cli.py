import json
import subprocess
import sys

import pytest

from hk4verify.cli import main

FOUR_PAIRS = "b2,b3\n23,0\n7,8\n6,4\n5,0\n"


@pytest.fixture
def pairs_file(tmp_path):
    path = tmp_path / "pairs.csv"
    path.write_text(FOUR_PAIRS)
    return path


def test_table1_markdown(pairs_file, capsys):
    assert main(["table1", "--candidates", str(pairs_file)]) == 0
    out = capsys.readouterr().out
    assert "| 1 | 828 | 324 | 23 | 0 |" in out
    assert "| 4 | 756 | 108 | 5 | 0 |" in out


def test_table1_csv(pairs_file, capsys):
    assert main(["table1", "--candidates", str(pairs_file), "--format", "csv"]) == 0
    assert capsys.readouterr().out.splitlines() == [
        "no,c2sq,c4,b2,b3",
        "1,828,324,23,0",
        "2,756,108,7,8",
        "3,756,108,6,4",
        "4,756,108,5,0",
    ]


def test_table1_missing_file(tmp_path, capsys):
    assert main(["table1", "--candidates", str(tmp_path / "nope.csv")]) == 1
    assert "error:" in capsys.readouterr().err


def test_table1_malformed_file(tmp_path, capsys):
    bad = tmp_path / "bad.csv"
    bad.write_text("x2,x3\n1,2\n")
    assert main(["table1", "--candidates", str(bad)]) == 1
    assert "header" in capsys.readouterr().err


def test_table1_warns_on_flagged_rows(tmp_path, capsys):
    path = tmp_path / "pairs.csv"
    path.write_text("b2,b3\n0,48\n23,0\n")
    assert main(["table1", "--candidates", str(path)]) == 0
    captured = capsys.readouterr()
    assert "skipping row 2" in captured.err
    assert "| 1 | 828 | 324 | 23 | 0 |" in captured.out


def test_bad_usage_exits_1(capsys):
    assert main(["table1"]) == 1  # --candidates required
    assert main(["nonsense"]) == 1
    assert main(["table1", "--candidates", "x", "--format", "yaml"]) == 1
    assert main([]) == 1


def test_rr_command(capsys):
    assert main(["rr", "--c4", "324", "--lambda", "-8/5"]) == 0
    assert capsys.readouterr().out.splitlines() == [
        "chi = 0/1",
        "delta = 25/64",
        "delta_sqrt = 5/8",
        "lambda_roots = -12/5, -8/5",
    ]


def test_rr_no_roots(capsys):
    assert main(["rr", "--c4", "0", "--lambda", "1/1"]) == 0
    out = capsys.readouterr().out
    assert "delta = 7/4" in out
    assert "delta_sqrt = none" in out
    assert "lambda_roots = none" in out


def test_rr_rejects_bad_rational(capsys):
    assert main(["rr", "--c4", "324", "--lambda", "0.5"]) == 1
    assert main(["rr", "--c4", "324", "--lambda", "1/0"]) == 1


def test_transport_command(capsys):
    assert main(
        ["transport", "--p", "2", "--m", "0", "--k", "1", "--t", "0",
         "--betti", "23,0"]
    ) == 0
    out = capsys.readouterr().out.splitlines()
    assert "bY = 1,0,23,0,276,0,23,0,1" in out
    assert "bW = 1,0,24,0,298,0,24,0,1" in out
    assert "salamon_defect_bW = 12" in out
    assert "euler_bW = 348" in out


def test_transport_rejects_non_prime(capsys):
    assert main(["transport", "--p", "4", "--betti", "23,0"]) == 1
    assert "prime" in capsys.readouterr().err


def test_transport_rejects_inadmissible_pair(capsys):
    assert main(["transport", "--p", "2", "--betti", "0,48"]) == 1


def test_prove_default_fixture(tmp_path, capsys):
    out = tmp_path / "report.json"
    assert main(["prove", "--out", str(out)]) == 0
    data = json.loads(out.read_bytes())
    assert len(data["certificates"]) == 4 * 6 * 21
    stdout = capsys.readouterr().out
    assert "contradicted 504" in stdout


def test_prove_flags_and_formats(tmp_path):
    src = tmp_path / "one.csv"
    src.write_text("b2,b3\n4,32\n")
    out_csv = tmp_path / "report.csv"
    assert main(
        ["prove", "--candidates", str(src), "--primes", "2,3", "--t-max", "1",
         "--out", str(out_csv), "--format", "csv"]
    ) == 0
    lines = out_csv.read_text().splitlines()
    assert len(lines) == 1 + 4  # header + 2 primes * 2 t-values
    assert all("Table1Exclusion" in line for line in lines[1:])
    out_md = tmp_path / "report.md"
    assert main(
        ["prove", "--candidates", str(src), "--primes", "2", "--t-max", "0",
         "--out", str(out_md), "--format", "md"]
    ) == 0
    assert out_md.read_text().startswith("# Contradiction certificates")


def test_prove_rejects_bad_sweep_parameters(tmp_path, capsys):
    out = tmp_path / "r.json"
    assert main(["prove", "--primes", "4", "--out", str(out)]) == 1
    assert main(["prove", "--t-max", "-1", "--out", str(out)]) == 1
    assert main(["prove", "--primes", "2;3", "--out", str(out)]) == 1


def test_prove_deterministic(tmp_path):
    out1, out2 = tmp_path / "a.json", tmp_path / "b.json"
    assert main(["prove", "--out", str(out1)]) == 0
    assert main(["prove", "--out", str(out2)]) == 0
    assert out1.read_bytes() == out2.read_bytes()


def test_filter_command(tmp_path, capsys):
    src = tmp_path / "pairs.csv"
    src.write_text("b2,b3\n23,0\n0,48\n")
    out = tmp_path / "filter.json"
    assert main(["filter", "--candidates", str(src), "--out", str(out)]) == 0
    data = json.loads(out.read_bytes())
    assert [r["accepted"] for r in data["records"]] == [True]
    assert len(data["invalid_rows"]) == 1


def test_verification_failure_exits_2(tmp_path, monkeypatch, capsys):
    import hk4verify.cli as cli_mod
    from hk4verify.pipeline import VerificationError

    def broken(*args, **kwargs):
        raise VerificationError("forced failure")

    monkeypatch.setattr(cli_mod, "prove", broken)
    assert main(["prove", "--out", str(tmp_path / "x.json")]) == 2
    assert "verification failed" in capsys.readouterr().err


def test_module_entry_point(tmp_path):
    out = tmp_path / "report.json"
    result = subprocess.run(
        [sys.executable, "-m", "hk4verify", "prove", "--primes", "2",
         "--t-max", "0", "--out", str(out)],
        capture_output=True,
        text=True,
    )
    assert result.returncode == 0
    assert out.exists()
    result = subprocess.run(
        [sys.executable, "-m", "hk4verify", "rr", "--c4", "324", "--lambda", "x"],
        capture_output=True,
        text=True,
    )
    assert result.returncode == 1
