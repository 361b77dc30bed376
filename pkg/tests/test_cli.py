import json
import random

import pytest

from dichroma.cli import (
    format_digraph,
    format_multigraph,
    main,
    parse_digraph_file,
    parse_multigraph_file,
    run_command,
)
from dichroma.errors import FileSemanticError, FileSyntaxError
from dichroma.families import dicycle, shannon_multigraph, sym_complete

import helpers


def test_parse_digraph_examples():
    d = parse_digraph_file("digraph 3\n0 1\n1 2\n2 0\n")
    assert d.arcs == dicycle(3).arcs
    digon = parse_digraph_file("digraph 2\n0 1\n1 0\n")
    assert not digon.is_oriented
    with pytest.raises(FileSemanticError) as exc:
        parse_digraph_file("digraph 2\n0 0\n")
    assert exc.value.line == 2
    with pytest.raises(FileSemanticError):
        parse_digraph_file("digraph 2\n0 1\n0 1\n")
    with pytest.raises(FileSyntaxError) as exc2:
        parse_digraph_file("digraph x\n")
    assert exc2.value.line == 1
    with pytest.raises(FileSyntaxError):
        parse_digraph_file("digraph 2\n0 1 2\n")


def test_parse_multigraph_examples():
    g = parse_multigraph_file("multigraph 3\n0 1\n0 1\n1 2\n")
    assert g.multiplicity(0, 1) == 2
    empty = parse_multigraph_file("multigraph 3\n")
    assert empty.m() == 0
    with pytest.raises(FileSyntaxError):
        parse_multigraph_file("graph 3\n0 1\n")


def test_round_trip_corpus():
    rng = random.Random(2)
    for _ in range(25):
        d = helpers.random_digraph(rng, rng.randrange(1, 9), 0.4)
        assert parse_digraph_file(format_digraph(d)).arcs == d.arcs
        g = helpers.random_regular_multigraph(rng, 6, 4)
        back = parse_multigraph_file(format_multigraph(g))
        assert sorted(back.edges) == sorted(g.edges)
    # comments and blank lines are ignored
    d2 = parse_digraph_file("# header comment\n\ndigraph 2\n0 1  # trailing\n")
    assert d2.arcs == frozenset({(0, 1)})


@pytest.fixture
def files(tmp_path):
    c3 = tmp_path / "c3.dg"
    c3.write_text("digraph 3\n0 1\n1 2\n2 0\n")
    k4 = tmp_path / "k4.dg"
    k4.write_text(format_digraph(sym_complete(4)))
    sh4 = tmp_path / "sh4.mg"
    sh4.write_text(format_multigraph(shannon_multigraph(4)))
    return {"c3": str(c3), "k4": str(k4), "sh4": str(sh4)}


def test_chi_command(files):
    rep, code = run_command(["chi", files["c3"]])
    assert code == 0 and rep["chi"] == 2 and rep["colouring"] == [1, 1, 2]
    assert rep["command"] == "chi" and "wall_ms" in rep and "digest" in rep


def test_verify_command(files):
    rep, code = run_command(["verify", files["c3"], "--colours", "1,1,2"])
    assert code == 0 and rep["valid"]
    rep2, _ = run_command(["verify", files["c3"], "--colours", "1,1,1"])
    assert not rep2["valid"] and set(rep2["witness"]["cycle"]) == {0, 1, 2}
    rep3, _ = run_command(["verify", files["sh4"], "--colours", "1,1,1,1,1,1", "--d", "3"])
    assert not rep3["valid"]


def test_brooks_lambda_king_round(files):
    rep, _ = run_command(["brooks", files["k4"]])
    assert rep["tight"] and rep["components"][0]["exception"] == "SymmetricComplete"
    rep2, _ = run_command(["lambda", files["k4"]])
    assert rep2["lambda"] == 3
    rep3, _ = run_command(["king", files["c3"]])
    assert rep3["king"] == 0
    rep4, _ = run_command(["round", files["c3"]])
    assert rep4["in_round"] and rep4["order"] == [0, 1, 2]


def test_extremal_exit_codes(files):
    rep, code = run_command(["extremal", "--k", "3", files["k4"]])
    assert code == 0 and rep["extremal"]
    assert rep["certificate"]["kind"] == "BaseSymmetricComplete"
    rep2, code2 = run_command(["extremal", "--k", "3", files["c3"]])
    assert code2 == 1 and not rep2["extremal"]


def test_free_exit_codes(files):
    rep, code = run_command(["free", "--pattern-name", "tt3", files["c3"]])
    assert code == 0 and rep["free"]
    rep2, code2 = run_command(["free", "--pattern-name", "c3", files["c3"]])
    assert code2 == 1 and not rep2["free"] and rep2["embedding"] == [0, 1, 2]


def test_defective_command(files):
    rep, code = run_command(["defective", "--d", "3", files["sh4"]])
    assert code == 0 and rep["colours"] == 2
    rep2, _ = run_command(["defective", "--d", "3", "--exact", files["sh4"]])
    assert rep2["colours"] == 2 and rep2["exact"]


def test_gen_and_gadget_commands(files, tmp_path):
    rep, _ = run_command(["gen", "fk", "--l", "3", "--k", "3"])
    assert rep["n"] == 7 and rep["claimed_chi"] == 3
    d = parse_digraph_file(rep["graph"])
    assert d.n == 7
    rep2, _ = run_command(["gen", "shannon", "--k", "5"])
    g = parse_multigraph_file(rep2["graph"])
    assert g.delta == 5
    rep3, _ = run_command(["gadget", "deltamin", "--k", "2", files["c3"]])
    assert rep3["n"] == 9
    rep4, _ = run_command(["dicolour2", files["c3"], "--tt", "0,1"])
    assert len(rep4["colouring"]) == 3
    rep5, _ = run_command(["hubs", files["c3"]])
    assert rep5["hubs"] == [[0], [1], [2]]
    rep6, _ = run_command(["structure", files["k4"]])
    assert rep6["case"] == "UniversalVertex"


def test_main_json_and_exit(files, capsys):
    code = main(["chi", files["c3"]])
    out = capsys.readouterr().out
    rep = json.loads(out)
    assert code == 0 and rep["chi"] == 2
    assert list(rep) == sorted(rep)  # alphabetical key order
    code2 = main(["chi", "/nonexistent/file"])
    err = json.loads(capsys.readouterr().out)
    assert code2 == 2 and err["error"]["type"] == "UsageError"
    bad = files["c3"] + ".bad"
    with open(bad, "w") as fh:
        fh.write("digraph 2\n0 0\n")
    code3 = main(["chi", bad])
    err3 = json.loads(capsys.readouterr().out)
    assert code3 == 2 and err3["error"]["type"] == "FileSemanticError"


def test_budget_env(files, monkeypatch):
    monkeypatch.setenv("DICHROMA_BUDGET", "1000000")
    rep, code = run_command(["chi", files["k4"]])
    assert code == 0 and rep["chi"] == 4


def test_gen_wheel_command():
    rep, code = run_command(["gen", "wheel", "--children", "[[1,2,3],[],[],[]]"])
    assert code == 0
    d = parse_digraph_file(rep["graph"])
    assert d.n == 4 and len(d.arcs) == 9


def test_chi_budget_bounds(files, tmp_path):
    from dichroma.heroes import gen_fk

    hard = tmp_path / "f3.dg"
    hard.write_text(format_digraph(gen_fk(3, 3).digraph))
    rep, code = run_command(["--budget", "2", "chi", str(hard)])
    assert code == 0 and "bounds" in rep
    rep2, code2 = run_command(["chi", str(hard)])
    assert code2 == 0 and rep2["chi"] == 3
