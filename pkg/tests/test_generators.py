import pytest

from kuratowski_duality import generators
from kuratowski_duality.graph import dump_graph, load_graph
from kuratowski_duality.hypergraph import Hypergraph
from kuratowski_duality.packing import planar_deletion_set
from kuratowski_duality.planarity import is_planar
from kuratowski_duality.society import Society
from kuratowski_duality.survey import COLUMNS, max_apex_by_k, mixed_corpus, render_csv, survey_rows


def test_kuratowski_generator():
    g = generators.kuratowski(2, ["K5", "K33"])
    assert (g.n, g.m, len(g.components)) == (11, 19, 2)
    assert generators.kuratowski(0).n == 0
    assert generators.kuratowski(2).m == 20
    with pytest.raises(ValueError):
        generators.kuratowski(2, ["K5"])
    with pytest.raises(ValueError):
        generators.kuratowski(1, ["K7"])


def test_random_graph():
    assert generators.random_graph(6, 0.0, 1).m == 0
    assert generators.random_graph(6, 1.0, 1).m == 15
    assert generators.random_graph(9, 0.5, 42) == generators.random_graph(9, 0.5, 42)
    with pytest.raises(ValueError):
        generators.random_graph(5, 1.5, 0)


def test_apex_planar():
    for seed in range(10):
        g = generators.apex_planar(8, 1, seed)
        assert g.n == 9
        rest, _ = g.delete_vertices([8])
        assert is_planar(rest)
        assert len(planar_deletion_set(g).apex_set) <= 1


def test_society_and_hypergraph_generators():
    s = generators.society(8, 5, 3)
    assert isinstance(s, Society) and len(s.boundary) == 5
    assert generators.society(8, 5, 3) == s
    h = generators.hypergraph(6, 5, 3, 9)
    assert isinstance(h, Hypergraph) and h.m == 5 and all(1 <= len(e) <= 3 for e in h.hyperedges)
    with pytest.raises(ValueError):
        generators.society(3, 4, 0)
    with pytest.raises(ValueError):
        generators.hypergraph(3, 2, 5, 0)


def test_roundtrip_of_generated_graphs():
    graphs = [generators.random_graph(10, 0.4, s) for s in range(5)] + [generators.kuratowski(3)]
    for g in graphs:
        for fmt in ("graph6", "edge_list", "json"):
            assert load_graph(dump_graph(g, fmt), fmt) == g


def test_mixed_corpus_is_deterministic():
    a = mixed_corpus(12, 5, max_n=10)
    assert a == mixed_corpus(12, 5, max_n=10)
    assert all(g.n <= 10 for g in a)


def test_survey_rows_and_csv():
    corpus = [generators.kuratowski(1), generators.kuratowski(2, ["K5", "K33"]), generators.random_graph(6, 0.3, 1)]
    rows = survey_rows(corpus, [0, 1])
    assert len(rows) == 6 and all(r.verified and r.status == "ok" for r in rows)
    assert [r.outcome for r in rows if r.index == 1] == ["packing", "packing"]
    text = render_csv(rows)
    lines = text.splitlines()
    assert lines[0] == ",".join(COLUMNS)
    assert lines[-1].startswith("# max apex_size per k:")
    assert max_apex_by_k(rows) == {0: 0, 1: 0}


def test_planar_corpus_needs_no_apex():
    corpus = [generators.apex_planar(7, 0, s) for s in range(6)]
    rows = survey_rows(corpus, [0])
    assert all(r.apex_size == 0 for r in rows)
