import json
import subprocess
import sys

import pytest

from misnormal import solver
from misnormal.cli import main
from misnormal.families import generate
from misnormal.io import read_graph, write_graph


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, [json.loads(line) for line in out.splitlines() if line.strip()]


@pytest.mark.parametrize(
    "spec, expect",
    [("cycle:5", {"alpha": 2, "ratio": "2/5", "num_mis": 5, "r": 2}),
     ("complete:4", {"alpha": 1, "ratio": "1/4", "num_mis": 4, "r": 1}),
     ("kneser:5,2", {"alpha": 4, "ratio": "2/5", "num_mis": 5, "r": 2})],
)
def test_alpha_command(capsys, spec, expect):
    code, [row] = run(capsys, "alpha", spec)
    assert code == 0
    assert {k: row[k] for k in expect} == expect


def test_check_commands(capsys):
    code, [rep] = run(capsys, "check", "normal", "cycle:5", "cycle:5")
    assert code == 0 and rep["verdict"] == "normal"
    code, [rep] = run(capsys, "check", "primitive", "copies:2xcomplete:3")
    assert code == 1 and rep["verdict"] == "imprimitive" and rep["witness"] == [0]
    code, [rep] = run(capsys, "check", "theorem:power", "complete:3", "--n", "3")
    assert code == 0 and rep["verdict"] == "verified"
    code, [rep] = run(capsys, "check", "normal", "copies:2xcomplete:3", "complete:3")
    assert code == 1 and rep["verdict"] == "not_normal"
    code, [rep] = run(capsys, "check", "theorem:induced-ratio", "cycle:5", "--subset", "4,0,1")
    assert code == 0
    code, [rep] = run(capsys, "check", "theorem:trichotomy", "copies:2xcomplete:3", "complete:3", "--subset", "0,1,2")
    assert code == 0


def test_power_spec_syntax(capsys):
    code, [row] = run(capsys, "alpha", "complete:3^3")
    assert code == 0 and row["n"] == 27 and row["alpha"] == 9 and row["num_mis"] == 9


@pytest.mark.parametrize(
    "argv",
    [("alpha", "bogus:3"), ("alpha", "kneser:3,2"), ("check", "normal", "cycle:5"),
     ("check", "theorem:nope", "cycle:5"), ("product", "cycle:5", "cycle:5", "--max-vertices", "10"),
     ("alpha", "@/nonexistent/file.g6")],
)
def test_parse_errors_exit_2(capsys, argv):
    assert main(list(argv)) == 2


def test_budget_exit_3(capsys):
    solver.clear_caches()
    assert main(["alpha", "cycle:5^3", "--budget-secs", "1e-9"]) == 3


def test_incomplete_enumeration_exit_3(capsys):
    solver.clear_caches()
    code, [rep] = run(capsys, "check", "normal", "complete:3", "complete:3", "--max-sets", "2")
    assert code == 3 and rep["verdict"] == "inconclusive"


def test_file_inputs_and_product(tmp_path, capsys):
    path = tmp_path / "p.g6"
    write_graph(generate("kneser:5,2"), path)
    code, [row] = run(capsys, "alpha", f"@{path}")
    assert code == 0 and row["alpha"] == 4
    out = tmp_path / "prod.txt"
    code, [info] = run(capsys, "product", "complete:2", "complete:2", "--out", str(out))
    assert code == 0 and info["n"] == 4 and info["edges"] == 2
    assert read_graph(out).num_edges == 2
    code, [info] = run(capsys, "info", "copies:2xcomplete:3")
    assert info["aut_order"] == 72 and info["vertex_transitive"] and not info["aut_primitive"]


def test_corpus_command(capsys):
    code, [doc] = run(capsys, "corpus", "10", "--suite", "bipartite-corollary")
    assert code == 0
    assert doc["summary"]["bipartite-corollary"]["fail"] == 0
    code, [doc] = run(capsys, "corpus", "5", "--suite", "eq1-pairs")
    assert code == 0 and doc["summary"]["eq1-pairs"]["pass"] > 0


def cli(*argv):
    return subprocess.run([sys.executable, "-m", "misnormal", *argv], capture_output=True, text=True)


def test_worker_count_does_not_change_output():
    args = ("corpus", "8", "--suite", "ratio-bound", "--suite", "counting-identity", "--suite", "eq1-pairs")
    one, four = cli(*args, "--workers", "1"), cli(*args, "--workers", "4")
    assert one.returncode == four.returncode == 0
    assert one.stdout == four.stdout


def test_json_is_byte_stable():
    a = cli("check", "primitivity", "cycle:5", "cycle:5")
    b = cli("check", "theorem:primitivity", "cycle:5", "cycle:5")
    c = cli("check", "theorem:primitivity", "cycle:5", "cycle:5")
    assert a.returncode == 2
    assert b.returncode == 0 and b.stdout == c.stdout


def test_table_format(capsys):
    assert main(["alpha", "cycle:5", "--format", "table"]) == 0
    out = capsys.readouterr().out
    assert out.splitlines()[0].split()[:3] == ["input", "n", "alpha"]
