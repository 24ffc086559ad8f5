import json
import subprocess
import sys


from kuratowski_duality import generators
from kuratowski_duality.cli import main
from kuratowski_duality.graph import K5, complete_graph, cycle_graph, dump_graph, load_graph, petersen_graph
from kuratowski_duality.hypergraph import Hypergraph
from kuratowski_duality.society import Society
from kuratowski_duality.survey import survey_rows


def _write(tmp_path, name, data):
    p = tmp_path / name
    p.write_bytes(data if isinstance(data, bytes) else data.encode())
    return str(p)


def _run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def _graph_file(tmp_path, g, fmt="graph6"):
    return _write(tmp_path, f"g{g.n}_{g.m}.{fmt}", dump_graph(g, fmt))


def test_planarity_and_witness(tmp_path, capsys):
    path = _graph_file(tmp_path, K5())
    code, out, _ = _run(capsys, "planarity", "--input", path)
    assert code == 0 and json.loads(out) == {"planar": False}
    code, out, _ = _run(capsys, "witness", "--input", path)
    data = json.loads(out)
    assert code == 0 and data["planar"] is False and data["witness"]["kind"] == "K5"
    code, out, _ = _run(capsys, "witness", "--input", _graph_file(tmp_path, cycle_graph(5), "json"), "--format", "json")
    assert json.loads(out) == {"planar": True, "witness": None}


def test_genus_and_budget_exit_code(tmp_path, capsys):
    code, out, _ = _run(capsys, "genus", "--input", _graph_file(tmp_path, complete_graph(7)), "--nonorientable")
    data = json.loads(out)
    assert code == 0 and data["genus"] == 1 and data["nonorientable_per_component"] == [3]
    code, out, err = _run(capsys, "genus", "--input", _graph_file(tmp_path, complete_graph(8)), "--budget-schemes", "5")
    assert code == 2 and out == "" and "budget" in err


def test_pack_cover_apex_duality(tmp_path, capsys):
    two = _graph_file(tmp_path, generators.kuratowski(2, ["K5", "K33"]))
    code, out, _ = _run(capsys, "pack", "--input", two)
    assert code == 0 and json.loads(out)["k_number"] == 2
    code, out, _ = _run(capsys, "pack", "--input", two, "--mode", "lower")
    assert json.loads(out)["mode"] == "lower"
    code, out, _ = _run(capsys, "cover", "--input", _graph_file(tmp_path, petersen_graph()))
    cover = json.loads(out)
    assert cover["optimal"] and len(cover["apex_set"]) == 2
    code, out, _ = _run(capsys, "apex", "--input", _graph_file(tmp_path, K5()), "--k", "1")
    assert code == 0 and json.loads(out)["certificate"]["apex_set"] == []
    code, out, _ = _run(capsys, "duality", "--input", two, "--k", "1")
    assert code == 0 and json.loads(out)["outcome"] == "packing"


def test_hypergraph_society_tangle(tmp_path, capsys):
    tri = _write(tmp_path, "h.json", json.dumps(Hypergraph(3, ((0, 1), (0, 2), (1, 2))).to_json()))
    code, out, _ = _run(capsys, "hypergraph-verify", "--input", tri)
    assert code == 0 and json.loads(out) == {"tau": 2, "nu": 1, "lambda": 3, "ding_bound": 11088, "pass": True}
    soc = _write(tmp_path, "s.json", json.dumps(Society(complete_graph(4), (0, 1, 2, 3)).to_json()))
    code, out, _ = _run(capsys, "society-cross", "--input", soc)
    assert code == 0 and json.loads(out)["cross"] is not None
    code, out, _ = _run(capsys, "society-rural", "--input", soc)
    assert json.loads(out) == {"rural": False}
    code, out, _ = _run(capsys, "tangle", "--input", _graph_file(tmp_path, cycle_graph(4)), "--theta", "1")
    assert code == 0 and json.loads(out)["outcome"] == "axiom_violation"


def test_usage_and_parse_errors(tmp_path, capsys):
    assert _run(capsys, "nonsense")[0] == 1
    assert _run(capsys, "apex", "--input", _graph_file(tmp_path, K5()))[0] == 1
    assert _run(capsys, "planarity", "--input", _write(tmp_path, "bad.el", "3 1\n0 0\n"), "--format", "edge_list")[0] == 1
    assert _run(capsys, "planarity", "--input", str(tmp_path / "missing"))[0] == 1
    assert _run(capsys, "generate", "random", "--n", "5", "--p", "0.5")[0] == 1
    assert _run(capsys, "generate", "random", "--n", "5", "--p", "2", "--seed", "1")[0] == 1
    assert _run(capsys, "hypergraph-verify", "--input", _write(tmp_path, "x.json", "{"))[0] == 1


def test_generate_roundtrip_and_determinism(tmp_path, capsys):
    code, out, _ = _run(capsys, "generate", "kuratowski", "--kinds", "K5,K33")
    g = load_graph(out.encode(), "graph6")
    assert code == 0 and (g.n, g.m) == (11, 19)
    for argv in (
        ["generate", "random", "--n", "9", "--p", "0.4", "--seed", "7", "--format", "json"],
        ["generate", "apex_planar", "--base-size", "8", "--apex-count", "1", "--seed", "3"],
        ["generate", "society", "--n", "7", "--boundary-size", "4", "--seed", "5"],
        ["generate", "hypergraph", "--n", "6", "--m", "4", "--max-edge", "3", "--seed", "5"],
    ):
        first = _run(capsys, *argv)
        assert first[0] == 0 and first == _run(capsys, *argv)


def test_out_file(tmp_path, capsys):
    target = tmp_path / "out.json"
    code, out, _ = _run(capsys, "planarity", "--input", _graph_file(tmp_path, K5()), "--out", str(target))
    assert code == 0 and out == "" and json.loads(target.read_text()) == {"planar": False}


def test_survey_outputs(tmp_path, capsys):
    argv = ["survey", "--seed", "11", "--count", "6", "--max-n", "9", "--k", "0,1"]
    code, out, _ = _run(capsys, *argv)
    assert code == 0 and _run(capsys, *argv)[1] == out
    lines = out.splitlines()
    assert len(lines) == 1 + 12 + 1 and lines[-1].startswith("# max apex_size per k:")
    corpus = b"\n".join(dump_graph(generators.kuratowski(2, ["K5", "K33"]), "graph6") for _ in range(2))
    code, out, _ = _run(capsys, "survey", "--input", _write(tmp_path, "c.g6", corpus), "--k", "1")
    assert code == 0 and all(",packing," in line for line in out.splitlines()[1:-1])


def test_survey_random_corpus_reverifies():
    corpus = [generators.random_graph(n, 0.5, seed) for seed, n in enumerate([4, 5, 6, 7, 8, 9, 10] * 8)][:50]
    rows = survey_rows(corpus, [1])
    assert len(rows) == 50 and all(r.status == "ok" and r.verified for r in rows)


def test_console_script_entry():
    proc = subprocess.run(
        [sys.executable, "-m", "kuratowski_duality.cli", "planarity"],
        input=dump_graph(K5(), "graph6"),
        capture_output=True,
    )
    assert proc.returncode == 0 and json.loads(proc.stdout) == {"planar": False}
