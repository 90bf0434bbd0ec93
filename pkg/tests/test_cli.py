import json
import subprocess
import sys

import pytest

from temporal_disjoint.cli import run
from temporal_disjoint.core import parse_graph
from temporal_disjoint.generators import named_example
from temporal_disjoint.strictify import map_cut_back, strictify


def call(capsys, *argv):
    code = run(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_min_cut_fig2(capsys):
    code, out, _ = call(capsys, "min-cut", "--graph", "fig2", "--from", "s", "--to", "t", "--max", "5")
    lines = out.splitlines()
    assert code == 0 and lines[0] == "h*=3" and len(lines) == 4


def test_min_cut_exceeded(capsys):
    code, out, _ = call(capsys, "min-cut", "--graph", "fig2", "--from", "s", "--to", "t", "--max", "2")
    assert code == 1 and out.strip() == "h* > 2"


def test_two_paths_fig1_negative(capsys):
    code, out, _ = call(capsys, "two-paths", "--graph", "fig1", "--from", "s", "--to", "t")
    assert code == 1 and out.strip() == "tp <= 1"


def test_two_paths_trace(capsys):
    code, out, _ = call(capsys, "two-paths", "--graph", "fig2", "--from", "s", "--to", "t", "--trace")
    lines = out.splitlines()
    assert code == 0
    assert sum(1 for x in lines if x.startswith("removed ")) == 8
    assert sum(1 for x in lines if x.startswith("s -(")) == 2


def test_validate(capsys, tmp_path):
    bad = tmp_path / "bad.txt"
    bad.write_text("graph undirected\nedge a b 3 1\n")
    code, _, err = call(capsys, "validate", "--graph", str(bad))
    assert code == 2 and "labels not ascending" in err
    good = tmp_path / "good.txt"
    good.write_text("graph undirected\nedge a b 1 3\n")
    assert call(capsys, "validate", "--graph", str(good))[0] == 0


def test_usage_errors(capsys):
    assert call(capsys, "reach", "--graph", "fig1")[0] == 2
    assert call(capsys, "reach", "--graph", "fig1", "--from", "s", "--to", "nope")[0] == 2
    assert call(capsys, "walks", "--graph", "fig1", "--from", "s", "--to", "u")[0] == 2
    assert call(capsys, "gen", "--kind", "random")[0] == 2
    assert call(capsys, "reach", "--graph", "/no/such/file", "--from", "s", "--to", "t")[0] == 2


def test_reach(capsys):
    code, out, _ = call(capsys, "reach", "--graph", "fig1", "--from", "s", "--to", "t")
    assert code == 0 and out.splitlines()[0] == "arrival=2"
    code, out, _ = call(capsys, "reach", "--graph", "fig1", "--from", "t", "--to", "x", "--strict")
    assert code in (0, 1)


def test_walks_json(capsys):
    code, out, _ = call(capsys, "walks", "--graph", "fig2", "--from", "s", "--to", "t", "--json")
    env = json.loads(out)
    assert set(env) == {"command", "params", "result", "witnesses"}
    assert env["command"] == "walks" and env["result"]["tw"] == 3 and len(env["witnesses"]["cut"]) == 3


def test_verify_cut(capsys, tmp_path):
    code, out, _ = call(capsys, "verify-cut", "--graph", "fig2", "--from", "s", "--to", "t", "--cut", "x:1,x:2,y:1")
    assert code == 0 and out.strip() == "cut"
    f = tmp_path / "cut.txt"
    f.write_text("x 2\ny 2\n")
    code, out, _ = call(capsys, "verify-cut", "--graph", "fig2", "--from", "s", "--to", "t", "--cut", str(f))
    assert code == 1 and "witness s -(1)- y -(1)- u -(3)- x -(3)- t" in out


def test_oracle(capsys):
    code, out, _ = call(capsys, "oracle", "--graph", "fig2", "--from", "s", "--to", "t")
    assert code == 0 and "tp=2" in out.splitlines() and "tpc=3" in out.splitlines()
    code, out, _ = call(capsys, "oracle", "--graph", "fig3kkk", "--from", "s", "--to", "t", "--param", "c")
    assert out.strip() == "c=2"


def test_strictify_files(capsys, tmp_path):
    g_out, m_out = tmp_path / "img.txt", tmp_path / "map.txt"
    code, out, _ = call(
        capsys, "strictify", "--graph", "fig3kkk", "--from", "s", "--to", "t", "--out", str(g_out), "--map", str(m_out)
    )
    assert code == 0 and "vertices=19" in out and "lifetime=15" in out
    assert parse_graph(g_out.read_text()).n == 19
    assert len(m_out.read_text().splitlines()) == 7


def test_gen_kinds(capsys, tmp_path):
    for argv in (
        ["--kind", "fig2"],
        ["--kind", "kcopies", "--k", "2"],
        ["--kind", "random", "--seed", "3", "--n", "5"],
        ["--kind", "sat", "--formula", "unsat"],
        ["--kind", "sat", "--strict-split"],
        ["--kind", "linkage", "--seed", "2", "--n", "3"],
    ):
        out_file = tmp_path / "g.txt"
        code, _, err = call(capsys, "gen", *argv, "--out", str(out_file))
        assert code == 0, err
        parse_graph(out_file.read_text())
    cnf = tmp_path / "f.cnf"
    cnf.write_text("p cnf 2 4\n1 2 0\n1 2 0\n-1 -2 0\n-1 -2 0\n")
    cut_file = tmp_path / "s.cut"
    code, out, _ = call(capsys, "gen", "--kind", "sat", "--cnf", str(cnf), "--cut-out", str(cut_file))
    assert code == 0 and "# k=16" in out and len(cut_file.read_text().splitlines()) == 15


def test_deterministic_output(capsys):
    argv = ["two-paths", "--graph", "fig2", "--from", "s", "--to", "t", "--trace"]
    assert call(capsys, *argv) == call(capsys, *argv)
    argv = ["gen", "--kind", "random", "--seed", "9", "--n", "6"]
    assert call(capsys, *argv) == call(capsys, *argv)


def test_strict_matches_image(capsys, tmp_path):
    """--strict answers equal the non-strict answers on the transformed graph."""
    g, s, t = named_example("fig4strict")
    image, mapping = strictify(g, s, t)
    img = tmp_path / "img.txt"
    call(capsys, "strictify", "--graph", "fig4strict", "--from", s, "--to", t, "--out", str(img))
    strict = call(capsys, "min-cut", "--graph", "fig4strict", "--from", s, "--to", t, "--max", "4", "--strict")
    plain = call(capsys, "min-cut", "--graph", str(img), "--from", s, "--to", t, "--max", "4")
    assert strict[1].splitlines()[0] == plain[1].splitlines()[0]
    image_cut = [tuple(line.split()) for line in plain[1].splitlines()[1:]]
    back = map_cut_back(mapping, [(v, int(i)) for v, i in image_cut])
    code, _, _ = call(capsys, "verify-cut", "--graph", "fig4strict", "--from", s, "--to", t, "--strict",
                      "--cut", ",".join(f"{v}:{i}" for v, i in back))
    assert code == 0
    a = call(capsys, "two-paths", "--graph", "fig4strict", "--from", s, "--to", t, "--strict")[0]
    b = call(capsys, "two-paths", "--graph", str(img), "--from", s, "--to", t)[0]
    assert a == b


def test_module_entry_point():
    res = subprocess.run(
        [sys.executable, "-m", "temporal_disjoint", "min-cut", "--graph", "fig2", "--from", "s", "--to", "t", "--max", "4"],
        capture_output=True, text=True,
    )
    assert res.returncode == 0 and res.stdout.startswith("h*=3")
