from __future__ import annotations

import json
import subprocess
import sys

import pytest

from spherelink.cli import run


def test_embeddings_count(capsys):
    assert run(["embeddings", "K4uK4", "--count"]) == 0
    assert capsys.readouterr().out == "1\n"


def test_embeddings_list_and_file(tmp_path, capsys):
    f = tmp_path / "g.txt"
    f.write_text("n 4\ne 0 1\ne 1 2\ne 2 0\n")
    assert run(["embeddings", "--file", str(f), "--list"]) == 0
    out = capsys.readouterr().out
    assert out.count("# embedding") == 1 and "rot 0:" in out


def test_check_exit_codes(capsys):
    assert run(["check", "D6", "--link", "type2"]) == 0
    out = capsys.readouterr().out
    assert "intrinsically type2 linked (3 embeddings)" in out and out.count("embedding ") >= 3
    assert run(["check", "K4uK4-e", "--link", "type1"]) == 1


def test_minimal_exit_codes():
    assert run(["minimal", "K4uK4", "--link", "type1"]) == 0
    assert run(["minimal", "K4uK4uK1", "--link", "type1"]) == 1


def test_usage_and_input_errors(tmp_path, capsys):
    assert run(["embeddings"]) == 2
    assert run(["frobnicate"]) == 2
    assert run(["check", "K4", "--jobs", "0"]) == 2
    assert run(["embeddings", "Q9"]) == 3
    assert run(["embeddings", "D1"]) == 3
    assert "pending" in capsys.readouterr().err
    bad = tmp_path / "bad.txt"
    bad.write_text("n 2\ne 0 1\ne 0 1\n")
    assert run(["embeddings", "--file", str(bad)]) == 3
    assert run(["check", "K5", "--link", "2link"]) == 3


def test_minor_subcommand(capsys):
    assert run(["minor", "K5", "K4"]) == 0
    assert run(["minor", "K4", "K5"]) == 1
    assert run(["minor", "K4"]) == 0
    assert len(capsys.readouterr().out.strip().splitlines()) >= 5


def test_certificate_and_replay(tmp_path, capsys):
    cert = tmp_path / "c.json"
    assert run(["minimal", "K32uK32", "--link", "type1", "--certificate", str(cert)]) == 0
    assert json.loads(cert.read_text())["verdict"] == "minor-minimal"
    assert run(["replay", str(cert)]) == 0
    doc = json.loads(cert.read_text())
    doc["refutations"] = doc["refutations"][:1]
    cert.write_text(json.dumps(doc))
    assert run(["replay", str(cert)]) == 1
    assert run(["replay", str(tmp_path / "missing.json")]) == 3


def test_moves(capsys):
    assert run(["moves", "D9a", "--move", "vert-bar"]) == 0
    out = capsys.readouterr().out
    assert "iii   pass" in out
    assert run(["moves", "D3", "--move", "sub-dangle", "--edge", "2", "3", "--subdivisions", "5", "6"]) == 0
    assert run(["moves", "D2", "--move", "vert-bar"]) == 3


def test_search_with_stream(tmp_path, capsys):
    from spherelink.catalog import builtin
    from spherelink.graph import to_graph6

    stream = tmp_path / "in.g6"
    stream.write_text("\n".join(to_graph6(builtin(n)) for n in ["K4uK4", "K4uK4uK1", "C3"]) + "\n")
    ck = tmp_path / "ck.jsonl"
    assert run(["search", "--link", "type1", "--max-vertices", "9", "--input", str(stream),
                "--checkpoint", str(ck)]) == 0
    assert capsys.readouterr().out.count("\n") == 1
    assert ck.read_text().strip()


def test_render(tmp_path):
    out = tmp_path / "d.svg"
    assert run(["render", "D9a", "--index", "3", "--out", str(out)]) == 0
    assert out.read_text().startswith("<?xml")
    assert run(["render", "D9a", "--index", "99"]) == 3


def test_stdin_source():
    p = subprocess.run([sys.executable, "-m", "spherelink.cli", "embeddings", "--stdin", "--count"],
                       input="n 3\ne 0 1\n", capture_output=True, text=True)
    assert p.returncode == 0 and p.stdout == "1\n"


def test_output_is_deterministic(capsys):
    run(["check", "D9a", "--link", "type2"])
    first = capsys.readouterr().out
    run(["check", "D9a", "--link", "type2", "--jobs", "2"])
    assert capsys.readouterr().out == first


@pytest.mark.slow
def test_verify_paper_reports_mismatches(capsys):
    code = run(["verify-paper", "--json"])
    report = json.loads(capsys.readouterr().out)
    failed = sorted(c["name"] for c in report["claims"] if c["status"] == "fail")
    assert code == 1 and failed == ["D2", "D9a"]
    assert all(c["status"] == "skipped" for c in report["claims"] if c["name"] in ("D1", "D8a", "D13"))
