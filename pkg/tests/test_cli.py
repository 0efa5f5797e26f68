from __future__ import annotations

import io
import json
import shutil
import subprocess

import pytest

from injcolor.cli import main


def run(*argv: str) -> tuple[int, str]:
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def test_solve_c5_json():
    code, out = run("solve", "C5", "--json")
    doc = json.loads(out)
    assert code == 0 and doc["index_or_bound"] == 3 and doc["valid"] is True


def test_solve_tsv(tmp_path):
    f = tmp_path / "k3.edgelist"
    f.write_text("3 3\n0 1\n1 2\n2 0\n")
    code, out = run("solve", str(f))
    assert code == 0 and out.splitlines()[0] == "edge_u\tedge_v\tcolor" and len(out.splitlines()) == 4


def test_format_flag(tmp_path):
    f = tmp_path / "graph.txt"
    f.write_text("p edge 4 3\ne 1 2\ne 2 3\ne 3 4\n")
    code, out = run("solve", str(f), "--format", "dimacs", "--json")
    assert code == 0 and json.loads(out)["index_or_bound"] == 2


@pytest.mark.parametrize("method,name", [
    ("general", "petersen"), ("mad3", "fig2_sun"), ("outerplanar", "fig3_outerplanar"),
    ("subcubic-bipartite", "heawood"), ("tree", "P9"),
])
def test_json_output_verifies(tmp_path, method, name):
    code, out = run("bound", name, "--method", method, "--json")
    assert code == 0
    f = tmp_path / "result.json"
    f.write_text(out)
    code, verdict = run("verify", name, "--coloring", str(f))
    assert code == 0 and json.loads(verdict)["valid"] is True


def test_verify_invalid_witness(tmp_path):
    f = tmp_path / "c.txt"
    f.write_text("1 2 1 2\n")
    code, out = run("verify", "C4", "--coloring", str(f))
    doc = json.loads(out)
    assert code == 0 and doc["valid"] is False and len(doc["witness"]) == 3


def test_mad_fig2():
    code, out = run("mad", "fig2_sun")
    assert code == 0 and json.loads(out) == {"mad": {"num": 2, "den": 1}}


def test_transform_round(tmp_path):
    f = tmp_path / "c.txt"
    f.write_text("1 1 2 2 3\n")
    code, out = run("transform", "C5", "--coloring", str(f), "--to", "star")
    assert code == 0
    star = tmp_path / "s.json"
    star.write_text(out)
    code, out = run("transform", "C5", "--coloring", str(star), "--to", "injective")
    assert code == 0 and json.loads(out)["valid"] is True


@pytest.mark.parametrize("argv,code", [
    (("bound", "K4", "--method", "mad73"), 4),
    (("bound", "C5", "--method", "bipartite"), 4),
    (("bound", "K4", "--method", "mad3", "--trust-mad"), 4),
    (("bound", "K4", "--method", "nope"), 2),
    (("solve", "no-such-graph"), 2),
    (("frobnicate",), 2),
    (("solve", "C5", "--unknown-flag"), 2),
])
def test_exit_codes(argv, code):
    assert run(*argv)[0] == code


def test_parse_error_exit(tmp_path):
    f = tmp_path / "bad.dimacs"
    f.write_text("p edge 3 1\ne 0 1\n")
    assert run("solve", str(f))[0] == 3
    c = tmp_path / "short.txt"
    c.write_text("1 1\n")
    assert run("verify", "C5", "--coloring", str(c))[0] == 3


def test_corpus_check_and_export(tmp_path):
    code, out = run("corpus", "--check")
    assert code == 0 and "FAIL" not in out
    code, _ = run("corpus", "--export", str(tmp_path))
    assert code == 0
    code, out = run("solve", str(tmp_path / "heawood.g6"), "--json")
    assert json.loads(out)["index_or_bound"] == 4


def test_probe_small():
    code, out = run("probe", "subcubic", "--max-n", "5", "--count", "20", "--seed", "1")
    assert code == 0 and "max index 6" in out


@pytest.mark.skipif(shutil.which("inj") is None, reason="console script not installed")
def test_console_script():
    proc = subprocess.run(["inj", "mad", "fig2_sun"], capture_output=True, text=True)
    assert proc.returncode == 0 and json.loads(proc.stdout)["mad"]["den"] == 1
