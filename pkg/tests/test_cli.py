import json
import subprocess
import sys

import pytest

from monogen.cli import main, parse_corpus_line, worker_count, InputError
from monogen.report import from_json

FAST = ["--cubic-height", "1000", "--quartic-height", "200"]


def run(args, capsys):
    code = main(args)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_analyze_cyclotomic_json(capsys):
    code, out, _ = run(["analyze", "--coeffs", "1,1,1,1", *FAST], capsys)
    assert code == 0
    d = json.loads(out)
    assert d["discriminant"] == "125"
    assert from_json(out).generator == (1, 1, 1, 1)


def test_analyze_reports_resolvent(capsys):
    code, out, _ = run(["analyze", "--coeffs", "0,0,-1,-1", *FAST], capsys)
    d = json.loads(out)
    assert code == 0 and d["discriminant"] == "-283"
    assert d["resolvent"]["coeffs"] == ["1", "0", "4", "-1"]


def test_analyze_leading_minus(capsys):
    code, out, _ = run(["analyze", "--coeffs=-1,0,0,3", *FAST, "--format", "text"], capsys)
    assert code == 0 and "classes found" in out


@pytest.mark.parametrize(
    "argv",
    [
        ["analyze", "--coeffs", "0,0,0,0"],
        ["analyze", "--coeffs", "1,2,3"],
        ["analyze", "--coeffs", "a,b,c,d"],
        ["analyze", "--coeffs", "1,1,1,1", "--cubic-height", "0"],
        ["analyze", "--coeffs", "1,1,1,1", "--format", "xml"],
        ["bogus"],
        [],
    ],
)
def test_malformed_input_exits_2(argv, capsys):
    with pytest.raises(SystemExit) as exc:
        code = main(argv)
        raise SystemExit(code)
    assert exc.value.code == 2


def test_out_writes_file(tmp_path, capsys):
    target = tmp_path / "r.csv"
    code, out, _ = run(["analyze", "--coeffs", "1,1,1,1", *FAST, "--format", "csv", "--out", str(target)], capsys)
    assert code == 0 and out == ""
    assert target.read_text().startswith("path,value\n")


def test_thue_examples(capsys):
    code, out, _ = run(["thue", "--form", "1,0,4,-1", "--rhs", "1,-1", "--height", "1000"], capsys)
    assert code == 0 and "(1, 0)" in out and "(0, 1)" in out and "|v| <= 1000" in out
    code, out, _ = run(["thue", "--form", "1,0,0,-2", "--rhs", "1", "--height", "1000"], capsys)
    assert code == 0 and "(1, 0)" in out and "(-1, -1)" in out
    code, out, _ = run(["thue", "--form", "1,3,-2,0,5", "--rhs", "1", "--height", "50"], capsys)
    assert code == 0 and "(1, 0)" in out


def test_thue_bad_degree(capsys):
    code, _, err = run(["thue", "--form", "1,0,1", "--rhs", "1"], capsys)
    assert code == 2 and "degree" in err


def test_oracle_check_agrees(capsys):
    for coeffs in ("1,1,1,1", "0,0,-1,-1"):
        code, out, _ = run(["oracle-check", "--coeffs", coeffs, *FAST, "--oracle-box", "10"], capsys)
        assert code == 0 and "agree" in out


def test_oracle_check_reports_missing_classes(capsys):
    code, out, _ = run(
        ["oracle-check", "--coeffs", "0,0,-1,-1", "--quartic-height", "1", "--cubic-height", "1000", "--oracle-box", "10"],
        capsys,
    )
    assert code == 3
    assert "(6, 5, 4)" in out and "DISAGREE" in out


def test_corpus_runs_and_rejects_bad_lines(tmp_path, capsys):
    corpus = tmp_path / "c.txt"
    corpus.write_text(
        "# label a1 a2 a3 a4\n"
        "cyclo 1 1 1 1\n"
        "\n"
        "short 1 2 3\n"
        "x4-x-1 0 0 -1 -1  # trailing comment\n"
        "reducible 0 0 0 0\n"
    )
    outdir = tmp_path / "reports"
    code, out, _ = run(["corpus", str(corpus), *FAST, "--report-dir", str(outdir)], capsys)
    assert code == 0
    d = json.loads(out)
    status = {e["label"]: e["status"] for e in d["entries"]}
    assert status["cyclo"] == "ok" and status["x4-x-1"] == "ok"
    assert status["reducible"] == "rejected" and status["line4"] == "rejected"
    assert d["processed"] == "2" and d["rejected"] == "2" and d["total_max"] == "2760"
    assert sorted(p.name for p in outdir.iterdir()) == ["cyclo.json", "x4-x-1.json"]


def test_corpus_empty_file(tmp_path, capsys):
    corpus = tmp_path / "empty.txt"
    corpus.write_text("")
    code, out, _ = run(["corpus", str(corpus)], capsys)
    assert code == 0 and json.loads(out)["entries"] == []


def test_corpus_unreadable(tmp_path, capsys):
    code, _, _ = run(["corpus", str(tmp_path / "missing.txt")], capsys)
    assert code == 2


def test_corpus_parallel_matches_serial(tmp_path, monkeypatch, capsys):
    corpus = tmp_path / "c.txt"
    corpus.write_text("a 1 1 1 1\nb 0 0 0 -2\nc 0 0 0 1\n")
    _, serial, _ = run(["corpus", str(corpus), *FAST, "--workers", "1"], capsys)
    monkeypatch.setenv("MONOGEN_THREADS", "3")
    _, parallel, _ = run(["corpus", str(corpus), *FAST], capsys)
    assert serial == parallel


def test_worker_count_env(monkeypatch):
    monkeypatch.delenv("MONOGEN_THREADS", raising=False)
    assert worker_count(None) == 1 and worker_count(4) == 4
    monkeypatch.setenv("MONOGEN_THREADS", "2")
    assert worker_count(4) == 2
    monkeypatch.setenv("MONOGEN_THREADS", "zero")
    with pytest.raises(InputError):
        worker_count(None)


def test_parse_corpus_line():
    assert parse_corpus_line("  # nothing") is None
    assert parse_corpus_line("x 1 2 3 4").coeffs == (1, 2, 3, 4)
    with pytest.raises(InputError):
        parse_corpus_line("x 1 2 3")


def test_console_script_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "monogen.cli", "thue", "--form", "1,0,0,-2", "--rhs", "1", "--height", "20"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0 and "(1, 0)" in proc.stdout
