import io
import json
import subprocess
import sys

import pytest

from graceful_lab.cli import export_dot, run
from graceful_lab.fixtures import P6, S, T
from graceful_lab.labeling import weight_report
from graceful_lab.tree import Tree, parse_tree


def call(capsys, *argv, stdin=None, monkeypatch=None):
    if stdin is not None:
        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = run(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_fixtures_roundtrip(capsys):
    for name, tree in {"T": T, "S": S, "P6": P6}.items():
        code, out = call(capsys, "fixtures", name)
        assert code == 0 and parse_tree(out) == tree


def test_search_from_stdin(capsys, monkeypatch):
    code, out = call(capsys, "search", "--zero-on", "3", "--mode", "first",
                     stdin=T.to_edge_list(), monkeypatch=monkeypatch)
    assert code == 0 and json.loads(out)["status"] == "UNSAT"


def test_pipeline_subprocess():
    fixtures = subprocess.run([sys.executable, "-m", "graceful_lab", "fixtures", "T"],
                              capture_output=True, text=True, check=True)
    search = subprocess.run([sys.executable, "-m", "graceful_lab", "search", "--zero-on", "3", "--mode", "first"],
                            input=fixtures.stdout, capture_output=True, text=True)
    assert search.returncode == 0
    assert json.loads(search.stdout)["status"] == "UNSAT"


def test_verify_matches_library(capsys):
    code, out = call(capsys, "verify", "fixtures/P6", "[1,3,2,5,0,4]")
    data = json.loads(out)
    assert code == 0 and data["graceful"] and data["alpha"] == 2
    assert data == weight_report(P6, (1, 3, 2, 5, 0, 4))


def test_verify_labeling_file(capsys, tmp_path):
    f = tmp_path / "lab.json"
    f.write_text('{"labels": [0, 2, 1]}')
    tree = tmp_path / "p3.txt"
    tree.write_text("3\n0 1\n1 2\n")
    code, out = call(capsys, "verify", str(tree), str(f))
    assert code == 0 and json.loads(out)["graceful"]


def test_gen_n4(capsys):
    code, out = call(capsys, "gen", "--n", "4")
    lines = out.splitlines()
    assert code == 0 and len(lines) == 2
    assert {parse_tree(l).profile.diameter for l in lines} == {2, 3}


def test_gen_with_filter(capsys):
    code, out = call(capsys, "gen", "--n", "6", "--diameter", "5")
    assert [parse_tree(l).code for l in out.splitlines()] == [P6.code]


def test_search_alpha_flags(capsys):
    code, out = call(capsys, "search", "P6", "--alpha", "--critical-on", "2", "--max-on", "3",
                     "--mode", "all", "--oracle")
    data = json.loads(out)
    assert data["status"] == "SAT" and [1, 3, 2, 5, 0, 4] in data["witnesses"]
    assert data["oracle_checked"] and data["forced_critical"] == 2


def test_search_fix_and_count(capsys):
    code, out = call(capsys, "search", "3;0 1;1 2", "--fix", "1=0", "--mode", "count")
    assert json.loads(out)["count"] == 2


def test_expect_mode(capsys):
    assert call(capsys, "search", "T", "--max-on", "3", "--expect", "sat")[0] == 1
    assert call(capsys, "search", "T", "--max-on", "3", "--expect", "unsat")[0] == 0
    assert call(capsys, "search", "T", "--max-on", "3")[0] == 0
    assert call(capsys, "probe", "q1", "P6", "--expect", "sat")[0] == 0
    assert call(capsys, "probe", "q1", "S", "--expect", "sat")[0] == 1


def test_probe_zero_T(capsys):
    code, out = call(capsys, "probe", "zero", "T")
    data = json.loads(out)
    cert = data["certificates"]["zero=3"]
    assert data["failed"] and cert["status"] == "UNSAT" and cert["oracle_assignments"] == 720


def test_hunt_exit_status(capsys):
    code, out = call(capsys, "hunt", "--n-max", "7", "--probe", "q1", "--diameter", "5",
                     "--max-k", "2", "--centers", "2", "--summary")
    assert code == 1 and len(json.loads(out)["failures"]) == 1
    code, _ = call(capsys, "hunt", "--n-max", "6", "--probe", "q1", "--diameter", "5")
    assert code == 0


@pytest.mark.parametrize(
    "argv",
    [
        ["search", "nosuchtree"],
        ["search", "T", "--fix", "0=1", "--fix", "2=1"],
        ["search", "4;0 1;2 3"],
        ["verify", "T", "[0,1]"],
        ["verify", "T", "not json"],
    ],
)
def test_errors_exit_2(capsys, argv):
    assert run(argv) == 2
    assert "error" in capsys.readouterr().err


def test_bad_flags_exit_2():
    with pytest.raises(SystemExit) as exc:
        run(["search", "T", "--mode", "maybe"])
    assert exc.value.code == 2


def test_byte_stable(capsys):
    outs = {call(capsys, "--threads", k, "search", "S", "--alpha", "--mode", "all")[1] for k in ("1", "1", "2")}
    assert len(outs) == 1


def test_dot_export():
    p2 = export_dot(Tree.path(2))
    assert p2.count("label=") == 2 and p2.count("--") == 1
    labeled = export_dot(T, (4, 5, 0, 3, 1, 2))
    assert '3 [label="3:3"]' in labeled and '2 [label="2:0"]' in labeled
    s = export_dot(S)
    assert s.count("[label=") == 7 and s.count(" -- ") == 6
    assert export_dot(S) == s


def test_dot_command(capsys):
    code, out = call(capsys, "dot", "T", "--labeling", "[4,5,0,3,1,2]")
    assert code == 0 and out == export_dot(T, (4, 5, 0, 3, 1, 2))
