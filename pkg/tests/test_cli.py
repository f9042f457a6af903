from __future__ import annotations

import io
import json
import sys

from treewalk import (
    format_graph,
    format_tree,
    format_walk_moves,
    make_gk,
    parse_graph,
    parse_tree,
    parse_walk_moves,
    tree_from_edges,
    verify_walk,
    walk,
)
from treewalk.cli import main

import graphs

TRI_TEXT = format_graph(graphs.TRIANGLE)
STAR = tree_from_edges(3, [(0, 1), (0, 2)], root=0)
PATH = tree_from_edges(3, [(0, 1), (1, 2)], root=0)


def _write(tmp_path, name, text):
    p = tmp_path / name
    p.write_text(text)
    return str(p)


def test_stnum(tmp_path, capsys):
    g = _write(tmp_path, "g.txt", TRI_TEXT)
    assert main(["stnum", "--graph", g, "0", "1"]) == 0
    assert capsys.readouterr().out == "0 2 1\n"


def test_stnum_reads_stdin(monkeypatch, capsys):
    monkeypatch.setattr(sys, "stdin", io.StringIO(TRI_TEXT))
    assert main(["stnum", "--graph", "-", "0", "1"]) == 0
    assert capsys.readouterr().out == "0 2 1\n"


def test_walk_then_verify_round_trip(tmp_path, capsys):
    g = _write(tmp_path, "g.txt", TRI_TEXT)
    a = _write(tmp_path, "a.txt", format_tree(STAR))
    b = _write(tmp_path, "b.txt", format_tree(PATH))
    assert main(["walk", "--graph", g, "--root", "0", "--from", a, "--to", b]) == 0
    moves_text = capsys.readouterr().out
    w = _write(tmp_path, "w.txt", moves_text)
    assert main(["verify", "--graph", g, w]) == 0
    out = capsys.readouterr().out
    assert out.rstrip().endswith("result: PASS")


def test_walk_tree_format(tmp_path, capsys):
    g = _write(tmp_path, "g.txt", TRI_TEXT)
    a = _write(tmp_path, "a.txt", format_tree(STAR))
    b = _write(tmp_path, "b.txt", format_tree(PATH))
    assert main(["walk", "--graph", g, "--root", "0", "--from", a, "--to", b,
                 "--format", "trees"]) == 0
    out = capsys.readouterr().out
    seq = walk(graphs.TRIANGLE, 0, STAR, PATH)
    assert out.count("3 0\n") == len(seq.trees)


def test_verify_flags_tampered_walk(tmp_path, capsys):
    g = _write(tmp_path, "g.txt", TRI_TEXT)
    seq = walk(graphs.TRIANGLE, 0, STAR, PATH)
    first = seq.moves[0]
    tampered = format_walk_moves(seq) + f"{first.vertex} {first.old_parent} {first.new_parent}\n"
    w = _write(tmp_path, "w.txt", tampered)
    assert main(["verify", "--graph", g, w]) == 2
    assert "result: FAIL" in capsys.readouterr().out


def test_gen_gk_round_trip(tmp_path, capsys):
    out_dir = tmp_path / "inst"
    assert main(["gen-gk", "--k", "2", "--out-dir", str(out_dir)]) == 0
    assert len(capsys.readouterr().out.splitlines()) == 3
    inst = make_gk(2)
    assert parse_graph((out_dir / "graph.txt").read_text()) == inst.graph
    assert parse_tree((out_dir / "tree_a.txt").read_text()) == inst.tree_a
    assert parse_tree((out_dir / "tree_b.txt").read_text()) == inst.tree_b


def test_gen_gk_rejects_huge_k(tmp_path, capsys):
    assert main(["gen-gk", "--k", "99999", "--out-dir", str(tmp_path)]) == 1
    assert "error:" in capsys.readouterr().err


def test_lower_bound(capsys):
    assert main(["lower-bound", "--k", "3"]) == 0
    assert capsys.readouterr().out == "12\n"


def test_oracle_distance_and_path(tmp_path, capsys):
    g = _write(tmp_path, "g.txt", TRI_TEXT)
    a = _write(tmp_path, "a.txt", format_tree(STAR))
    b = _write(tmp_path, "b.txt", format_tree(PATH))
    assert main(["oracle", "distance", "--graph", g, "--root", "0",
                 "--from", a, "--to", b]) == 0
    assert capsys.readouterr().out == "1\n"
    path_file = tmp_path / "shortest.txt"
    assert main(["oracle", "distance", "--graph", g, "--root", "0",
                 "--from", a, "--to", b, "--path", str(path_file)]) == 0
    seq = parse_walk_moves(path_file.read_text())
    assert verify_walk(graphs.TRIANGLE, 0, seq, source=STAR, target=PATH).ok


def test_oracle_diameter(tmp_path, capsys):
    g = _write(tmp_path, "g.txt", TRI_TEXT)
    assert main(["oracle", "diameter", "--graph", g, "--root", "0"]) == 0
    assert capsys.readouterr().out == "2\n"


def test_oracle_count(tmp_path, capsys):
    g = _write(tmp_path, "g.txt", TRI_TEXT)
    assert main(["oracle", "count", "--graph", g]) == 0
    assert capsys.readouterr().out == "3 3\n"


def test_cap_flag_exceeded(tmp_path, capsys):
    g = _write(tmp_path, "g.txt", format_graph(graphs.K5))
    assert main(["oracle", "count", "--graph", g, "--cap", "10"]) == 3
    assert "ERROR cap-exceeded" in capsys.readouterr().err


def test_cap_env_var(tmp_path, capsys, monkeypatch):
    g = _write(tmp_path, "g.txt", format_graph(graphs.K5))
    monkeypatch.setenv("TREEWALK_CAP", "10")
    assert main(["oracle", "count", "--graph", g]) == 3
    monkeypatch.setenv("TREEWALK_CAP", "not-a-number")
    assert main(["oracle", "count", "--graph", g]) == 1
    assert "TREEWALK_CAP" in capsys.readouterr().err


def test_partition_output(tmp_path, capsys):
    g = _write(tmp_path, "g.txt", TRI_TEXT)
    assert main(["partition", "--graph", g, "--u1", "0", "--u2", "1", "--n1", "1"]) == 0
    captured = capsys.readouterr()
    assert captured.out == "0\n1 2\n"
    assert "strategy: direct-edge" in captured.err


def test_experiment_table(capsys):
    assert main(["experiment", "--kmax", "2"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0].split("\t") == ["k", "n", "lower_bound", "oracle_distance",
                                    "walk_moves", "walk_bound"]
    assert len(lines) == 3
    assert lines[1].split("\t")[0] == "1"


def test_experiment_json(capsys):
    assert main(["experiment", "--kmax", "2", "--json"]) == 0
    rows = [json.loads(line) for line in capsys.readouterr().out.splitlines()]
    assert len(rows) == 2
    assert set(rows[0]) == {"k", "n", "lower_bound", "oracle_distance",
                            "walk_moves", "walk_bound"}


def test_usage_errors(capsys):
    assert main([]) == 1
    assert main(["walk", "--graph", "g.txt"]) == 1
    capsys.readouterr()


def test_missing_file_is_reported(capsys):
    assert main(["stnum", "--graph", "/no/such/file", "0", "1"]) == 1
    assert "error:" in capsys.readouterr().err


def test_validation_errors(tmp_path, capsys):
    bad = _write(tmp_path, "bad.txt", "3 3\n0 1\n1 2\n")
    assert main(["stnum", "--graph", bad, "0", "1"]) == 2
    path_graph = _write(tmp_path, "p.txt", format_graph(graphs.PATH3))
    assert main(["stnum", "--graph", path_graph, "0", "2"]) == 2
    capsys.readouterr()
