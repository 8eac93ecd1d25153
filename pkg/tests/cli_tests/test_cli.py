import json

import pytest
from typer.testing import CliRunner

from coverenc.cnf.dimacs import parse_dimacs, to_dimacs
from coverenc.cnf.varmap import VarMap, write_varmap
from coverenc.encoders.isp import encode_direct_isp, vertex_literals
from coverenc.graphs.graph import cycle_graph
from coverenc.graphs.graph_io import read_graph, write_graph
from coverenc.main import EXIT_IO, EXIT_OK, EXIT_USAGE, EXIT_VERIFY_FAILED, app, run
from coverenc.problems.scheduling import SchedulingInstance, Task, dump_instance

runner = CliRunner()


def invoke(*args):
    return runner.invoke(app, [str(arg) for arg in args])


@pytest.fixture
def interval_graph_file(tmp_path):
    path = tmp_path / "i5.graph"
    result = invoke("gen-graph", "interval", "--n", 5, "-o", path)
    assert result.exit_code == EXIT_OK
    return path


@pytest.fixture
def broken_c5(tmp_path):
    graph = cycle_graph(5)
    pool = VarMap()
    lits = vertex_literals(graph, pool)
    formula = encode_direct_isp(graph, lits)
    formula.remove_clause((-lits[1], -lits[2]))
    paths = tmp_path / "c5.graph", tmp_path / "c5.cnf", tmp_path / "c5.map"
    paths[0].write_text(write_graph(graph))
    paths[1].write_text(to_dimacs(formula, pool))
    paths[2].write_text(write_varmap(pool))
    return paths


def test_gen_graph(interval_graph_file):
    graph = read_graph(interval_graph_file.read_text())
    assert graph.n == 10 and graph.num_edges == 40


def test_gen_graph_to_stdout():
    result = invoke("gen-graph", "cycle", "--n", 4)
    assert result.exit_code == EXIT_OK
    assert read_graph(result.stdout).num_edges == 4


def test_random_graph_needs_seed():
    assert invoke("gen-graph", "random", "--n", 6).exit_code == EXIT_USAGE
    assert invoke("gen-graph", "random", "--n", 6, "--seed", 3).exit_code == EXIT_OK


def test_encode_and_verify(tmp_path, interval_graph_file):
    cnf = tmp_path / "i5.cnf"
    result = invoke("encode", "--n", 5, "-o", cnf)
    assert result.exit_code == EXIT_OK
    assert "vars=10 clauses=40 strategy=direct n=5 variant=I" in result.stdout
    assert (tmp_path / "i5.map").exists()
    result = invoke("verify", "isp", "--graph", interval_graph_file, "--cnf", cnf, "--map", tmp_path / "i5.map")
    assert result.exit_code == EXIT_OK
    assert "PASS" in result.stdout


def test_encode_recursive_blocks(tmp_path):
    cnf = tmp_path / "i8.cnf"
    result = invoke("encode", "--n", 8, "--variant", "I0", "--strategy", "recursiveBlocks", "--blocks", 3, "-o", cnf)
    assert result.exit_code == EXIT_OK
    assert "strategy=recursiveBlocks n=8 k=3 variant=I0" in result.stdout


def test_encode_problem_needs_size(tmp_path, interval_graph_file):
    result = invoke("encode", "--graph", interval_graph_file, "--problem", "coloring", "-o", tmp_path / "x.cnf")
    assert result.exit_code == EXIT_USAGE
    result = invoke("encode", "--graph", interval_graph_file, "--problem", "coloring", "--size", 3,
                    "--strategy", "cliqueCover", "-o", tmp_path / "x.cnf", "--map", tmp_path / "names.txt")
    assert result.exit_code == EXIT_OK
    assert (tmp_path / "names.txt").exists()


def test_encode_with_cover_file(tmp_path):
    graph_file, cover_file = tmp_path / "k4.graph", tmp_path / "k4.cover"
    invoke("gen-graph", "complete", "--n", 4, "-o", graph_file)
    assert invoke("cover", "kn-biclique", "--n", 4, "-o", cover_file).exit_code == EXIT_OK
    result = invoke("encode", "--graph", graph_file, "--strategy", "bicliqueCover", "--cover", cover_file,
                    "-o", tmp_path / "k4.cnf")
    assert result.exit_code == EXIT_OK
    assert "strategy=bicliqueCover n=4" in result.stdout


def test_cover_to_stdout():
    result = invoke("cover", "kn-biclique", "--n", 4)
    assert result.stdout.splitlines()[0] == "b | A: 1 2 | B: 3 4"
    assert invoke("cover", "interval-clique").exit_code == EXIT_USAGE


def test_verify_reports_witness(broken_c5):
    graph, cnf, names = broken_c5
    result = invoke("verify", "isp", "--graph", graph, "--cnf", cnf, "--map", names)
    assert result.exit_code == EXIT_VERIFY_FAILED
    assert "witness" in result.stdout


def test_sampled_verification_needs_seed(broken_c5):
    graph, cnf, names = broken_c5
    args = ["verify", "isp", "--graph", graph, "--cnf", cnf, "--map", names, "--mode", "sampled"]
    assert invoke(*args).exit_code == EXIT_USAGE
    assert invoke(*args, "--seed", 1, "--samples", 500).exit_code == EXIT_VERIFY_FAILED


def test_bva_and_equisat(tmp_path):
    graph_file, cnf = tmp_path / "k33.graph", tmp_path / "k33.cnf"
    invoke("gen-graph", "bipartite", "--a", 3, "--b", 3, "-o", graph_file)
    invoke("encode", "--graph", graph_file, "-o", cnf)
    out = tmp_path / "k33-bva.cnf"
    result = invoke("bva", "--input", cnf, "--map", tmp_path / "k33.map", "-o", out)
    assert result.exit_code == EXIT_OK
    assert len(parse_dimacs(out.read_text())) == 6
    result = invoke("verify", "isp", "--graph", graph_file, "--cnf", out, "--map", tmp_path / "k33-bva.map")
    assert result.exit_code == EXIT_OK
    assert invoke("verify", "equisat", "--cnf1", cnf, "--cnf2", out, "--shared", 6).exit_code == EXIT_OK


def test_equisat_failure(tmp_path):
    first, second = tmp_path / "a.cnf", tmp_path / "b.cnf"
    first.write_text("p cnf 1 1\n1 0\n")
    second.write_text("p cnf 1 1\n-1 0\n")
    assert invoke("verify", "equisat", "--cnf1", first, "--cnf2", second).exit_code == EXIT_VERIFY_FAILED


def test_stats(interval_graph_file):
    result = invoke("stats", "--graph", interval_graph_file)
    assert result.exit_code == EXIT_OK
    for name in ("direct", "cliqueCover", "bicliqueCover", "recursiveBlocks", "block83"):
        assert name in result.stdout
    result = invoke("stats", "--n", 12, "--variant", "I0", "--blocks", 3)
    assert result.exit_code == EXIT_OK


@pytest.mark.parametrize("variant", ["I", "I0"])
def test_stats_for_both_variants(variant):
    result = invoke("stats", "--n", 6, "--variant", variant)
    assert result.exit_code == EXIT_OK, result.output
    assert "cliqueCover" in result.stdout


def test_strict_interval_clique_cover_command():
    result = invoke("cover", "interval-clique", "--n", 4, "--variant", "I0")
    assert result.exit_code == EXIT_OK
    assert len(result.stdout.splitlines()) == 3


@pytest.fixture
def instance_file(tmp_path):
    path = tmp_path / "instance.json"
    dump_instance(SchedulingInstance(1, 5, [Task(2, 1, 3), Task(2, 3, 5)]), path)
    return path


def test_schedule(tmp_path, instance_file):
    result = invoke("schedule", "--instance", instance_file, "-o", tmp_path / "s.cnf", "--solve")
    assert result.exit_code == EXIT_OK
    assert "strategy=recursiveBlocks n=2" in result.stdout
    assert (tmp_path / "s.map").exists()
    result = invoke("schedule", "--instance", instance_file, "--per-time-amo")
    assert "strategy=perTimeAmo n=2" in result.stdout


def test_verify_schedule(instance_file):
    assert invoke("verify", "schedule", "--instance", instance_file).exit_code == EXIT_OK
    assert invoke("verify", "schedule", "--instance", instance_file, "--per-time-amo").exit_code == EXIT_OK


def test_config_commands(tmp_path):
    result = invoke("get-setting", "intervals.recursion_base")
    assert result.exit_code == EXIT_OK
    assert "32" in result.stdout
    assert invoke("get-setting", "intervals.nothing").exit_code == EXIT_USAGE
    path = tmp_path / "conf" / "config.json"
    assert invoke("new-config", "--path", path).exit_code == EXIT_OK
    assert json.loads(path.read_text())["amo"]["product_base"] == 4


def test_run_exit_codes(tmp_path, broken_c5):
    graph, cnf, names = broken_c5
    assert run(["gen-graph", "petersen", "-o", str(tmp_path / "p.graph")]) == EXIT_OK
    assert run(["encode", "--n", "5", "--strategy", "greedy", "-o", str(tmp_path / "x.cnf")]) == EXIT_USAGE
    assert run(["encode", "--n", "5", "--no-such-option"]) == EXIT_USAGE
    assert run(["verify", "isp", "--graph", str(graph), "--cnf", str(cnf), "--map", str(names)]) == EXIT_VERIFY_FAILED
    missing = str(tmp_path / "missing.cnf")
    assert run(["verify", "isp", "--graph", str(graph), "--cnf", missing, "--map", str(names)]) == EXIT_IO
    (tmp_path / "bad.cnf").write_text("p cnf 2 5\n1 0\n")
    assert run(["verify", "equisat", "--cnf1", str(tmp_path / "bad.cnf"), "--cnf2", str(cnf)]) == EXIT_IO
