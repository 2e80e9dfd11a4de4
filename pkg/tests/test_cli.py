"""Command-line interface: exit codes, output stability, verification."""

import io
import os
import subprocess
import sys

import pytest

from conftest import GOLDENS_DIR, golden_argv
from vasskit import cli

LOOP_TEXT = "vass\nstates a\ninit a\nfinal a\nedge a a -1 1\nquery 2 0 -> 0 2\n"


def run_cli(argv, capsys):
    code = cli.main(argv)
    return code, capsys.readouterr().out


def test_decide_exit_codes(tmp_path, capsys):
    f = tmp_path / "loop.vas"
    f.write_text(LOOP_TEXT)
    code, out = run_cli(["decide", str(f), "--cap", "10"], capsys)
    assert code == 0
    assert out.startswith("verdict: kind=Reachable cap=10 length=2")
    f.write_text(LOOP_TEXT.replace("query 2 0 -> 0 2", "query 0 0 -> 1 0"))
    code, out = run_cli(["decide", str(f), "--cap", "10"], capsys)
    assert code == 1


def test_decide_missing_file(capsys):
    assert cli.main(["decide", "/nonexistent/x.vas"]) == 2
    capsys.readouterr()


def test_decide_trace(tmp_path, capsys):
    f = tmp_path / "loop.vas"
    f.write_text(LOOP_TEXT)
    code, out = run_cli(["decide", str(f), "--cap", "10", "--trace"], capsys)
    assert code == 0
    assert "trace: (2,0)" in out and "trace: (0,2)" in out


def test_decide_length_bound(tmp_path, capsys):
    f = tmp_path / "loop.vas"
    f.write_text(LOOP_TEXT)
    code, _ = run_cli(["decide", str(f), "--length-bound", "1"], capsys)
    assert code == 1
    code, _ = run_cli(["decide", str(f), "--length-bound", "2"], capsys)
    assert code == 0


def test_slps_decide(tmp_path, capsys):
    f = tmp_path / "up.vas"
    f.write_text("slps\nseg 0 0\ncyc 0 1\nseg 0 0\nquery 0 0 -> 0 3\n")
    code, out = run_cli(["slps-decide", str(f)], capsys)
    assert code == 0
    assert "result: reachable=true member=0 exponents=3 maxnorm=3" in out
    f.write_text("slps\nseg 0 0\ncyc 0 1\nseg 0 0\nquery 0 0 -> 1 0\n")
    code, out = run_cli(["slps-decide", str(f)], capsys)
    assert code == 1
    assert "kind=Unreachable" in out


def test_shorten_and_verify(tmp_path, capsys):
    f = tmp_path / "far.vas"
    f.write_text(
        "slps\nseg 0 0\ncyc 0 1\nseg 0 0\ncyc 0 -1\nseg 0 0\n"
        "path 60 60\nquery 6 6 -> 6 6\n"
    )
    cert = tmp_path / "far.cert"
    code, out = run_cli(["shorten", str(f), "--op", "far", "--cert", str(cert)], capsys)
    assert code == 0
    assert "shortening:" in out
    code, out = run_cli(["verify", str(cert)], capsys)
    assert code == 0 and out == "verify: ok\n"
    tampered = cert.read_text().replace("delta=0,0", "delta=0,1")
    cert.write_text(tampered)
    code, out = run_cli(["verify", str(cert)], capsys)
    assert code == 1


def test_flatten(tmp_path, capsys):
    f = tmp_path / "l.vas"
    f.write_text("lps\nseg 1,0\ncyc 1,1\nseg\n")
    code, out = run_cli(["flatten", str(f)], capsys)
    assert code == 0
    assert out.startswith("members: 3\n")
    assert out.count("# member profile=") == 3


def test_fuzz_clean_run(tmp_path, capsys, monkeypatch):
    monkeypatch.chdir(tmp_path)
    code, out = run_cli(["fuzz", "lemma1", "--iters", "30", "--seed", "5"], capsys)
    assert code == 0
    assert out == "fuzz: target=lemma1 iters=30 seed=5 failures=0\n"


def test_fuzz_injection_hook(tmp_path, capsys, monkeypatch):
    monkeypatch.chdir(tmp_path)
    monkeypatch.setenv("VASSKIT_INJECT_FAILURE", "lemma1")
    repro = tmp_path / "repro.txt"
    code, out = run_cli(
        ["fuzz", "lemma1", "--iters", "5", "--seed", "5", "--repro", str(repro)], capsys
    )
    assert code == 1
    assert "injected failure" in out
    assert repro.exists() and "minimized:" in repro.read_text()


def test_fuzz_unknown_target(capsys):
    assert cli.main(["fuzz", "nonsense"]) == 2
    capsys.readouterr()


def test_bench(tmp_path, capsys):
    (tmp_path / "a.vas").write_text(LOOP_TEXT)
    (tmp_path / "b.vas").write_text("slps\nseg 0 0\ncyc 0 1\nseg 0 0\nquery 0 0 -> 0 3\n")
    code, out = run_cli(["bench", str(tmp_path)], capsys)
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "instance\tverdict\tlength\texplored\tseconds"
    assert lines[1].startswith("a.vas\tReachable\t2\t")
    assert lines[2].startswith("b.vas\tReachable\t")


def test_bench_empty_dir(tmp_path, capsys):
    code, out = run_cli(["bench", str(tmp_path)], capsys)
    assert code == 0
    assert out == "instance\tverdict\tlength\texplored\tseconds\n"


def test_goldens_match_expected_outputs(capsys):
    for name in sorted(os.listdir(GOLDENS_DIR)):
        if not name.endswith(".vas"):
            continue
        expected = os.path.join(GOLDENS_DIR, "expected", name.replace(".vas", ".out"))
        with open(expected, "r", encoding="utf-8") as fh:
            want = fh.read()
        cli.main(golden_argv(name))
        assert capsys.readouterr().out == want, f"output drifted for {name}"


def test_console_script_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "vasskit.cli", "bench", os.path.join(GOLDENS_DIR, "expected")],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
