import json

import pytest

from conftest import WORKED_X
from dichroma import io
from dichroma.cli import main
from dichroma.digraph import is_valid_acyclic_coloring


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.fixture
def files(tmp_path):
    (tmp_path / "x.cwx").write_text("# worked example\n" + WORKED_X + "\n")
    (tmp_path / "c3.dg").write_text("3 3\n1 2\n2 3\n3 1\n")
    (tmp_path / "mono.col").write_text("1 1\n2 1\n3 1\n")
    (tmp_path / "k3.dce").write_text("series(v(a),series(v(b),v(c)))\n")
    return tmp_path


def test_solve_cw(files, capsys):
    code, out, _ = run(capsys, "solve-cw", "--expr", str(files / "x.cwx"))
    assert code == 0
    assert "dichromatic_number: 2" in out.splitlines()


def test_solve_cw_decision_and_outputs(files, capsys):
    w, d, dot = files / "w.col", files / "d.txt", files / "g.dot"
    code, out, _ = run(capsys, "solve-cw", "--expr", str(files / "x.cwx"), "--r", "1",
                       "--witness", str(w), "--dump-sigsets", str(d), "--dot", str(dot))
    assert code == 1 and "feasible: false" in out
    assert io.read_col(w, 3).r == 2
    assert d.read_text().count("node ") == 9
    assert dot.read_text().startswith('digraph "G" {')


def test_check_reports_cycle(files, capsys):
    code, out, _ = run(capsys, "check", "--graph", str(files / "c3.dg"), "--coloring", str(files / "mono.col"))
    assert code == 1
    assert "valid: false" in out and "cycle: 1 2 3" in out


def test_gen_then_solve_cactus(files, capsys):
    g, w = files / "g.dg", files / "w.col"
    assert run(capsys, "gen", "cactus", "--n", "20", "--seed", "7", "--out", str(g))[0] == 0
    code, out, _ = run(capsys, "solve-cactus", "--graph", str(g), "--witness", str(w))
    assert code == 0
    value = int(out.split(":")[1])
    assert value in (1, 2)
    assert run(capsys, "check", "--graph", str(g), "--coloring", str(w))[0] == 0


def test_solve_cograph_json(files, capsys):
    code, out, _ = run(capsys, "solve-cograph", "--expr", str(files / "k3.dce"), "--clique-number", "--json")
    assert code == 0
    assert json.loads(out) == {"dichromatic_number": 3, "clique_number": 3}


def test_solve_and_brute(files, capsys):
    assert "dichromatic_number: 2" in run(capsys, "solve", "--graph", str(files / "c3.dg"))[1]
    assert "dichromatic_number: 2" in run(capsys, "solve", "--graph", str(files / "c3.dg"), "--strategy", "brute")[1]
    code, _, err = run(capsys, "brute", "--graph", str(files / "c3.dg"), "--max-r", "1")
    assert code == 1 and "error" in err


def test_classify(files, capsys):
    code, out, _ = run(capsys, "classify", "--graph", str(files / "c3.dg"))
    assert code == 0
    assert "cactus_forest: true" in out and "dag: false" in out


def test_export_ilp(files, capsys):
    lp = files / "c3.lp"
    assert run(capsys, "export-ilp", "--graph", str(files / "c3.dg"), "--out", str(lp))[0] == 0
    assert lp.read_text().count("order_") == 9


@pytest.mark.parametrize("kind, suffix", [("digraph", "dg"), ("cactus", "dg"), ("cw-expr", "cwx"), ("dico-expr", "dce")])
def test_gen_is_deterministic(files, capsys, kind, suffix):
    a, b = files / f"a.{suffix}", files / f"b.{suffix}"
    for out in (a, b):
        assert run(capsys, "gen", kind, "--n", "6", "--k", "3", "--seed", "11", "--out", str(out))[0] == 0
    assert a.read_bytes() == b.read_bytes()


def test_solve_outputs_deterministic(files, capsys):
    first = run(capsys, "solve-cw", "--expr", str(files / "x.cwx"), "--json")
    second = run(capsys, "solve-cw", "--expr", str(files / "x.cwx"), "--json")
    assert first == second


def test_usage_errors(files, capsys):
    with pytest.raises(SystemExit) as info:
        main(["solve"])
    assert info.value.code == 2
    bad = files / "bad.cwx"
    bad.write_text("add(1,1,v(x,1))")
    code, _, err = run(capsys, "solve-cw", "--expr", str(bad))
    assert code == 2 and "distinct labels" in err
    assert run(capsys, "solve", "--graph", str(files / "missing.dg"))[0] == 2


def test_sig_cap_env(files, capsys, monkeypatch):
    monkeypatch.setenv("DICHROMA_SIG_CAP", "1")
    code, _, err = run(capsys, "solve-cw", "--expr", str(files / "x.cwx"))
    assert code == 1 and "cap" in err


def test_check_accepts_valid(files, capsys):
    (files / "ok.col").write_text("1 1\n2 1\n3 2\n")
    code, out, _ = run(capsys, "check", "--graph", str(files / "c3.dg"), "--coloring", str(files / "ok.col"))
    assert code == 0 and "valid: true" in out
    g = io.read_dg(files / "c3.dg")
    assert is_valid_acyclic_coloring(g, io.read_col(files / "ok.col", 3))
