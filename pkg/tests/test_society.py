import dataclasses
import random
from itertools import combinations

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from kuratowski_duality import generators
from kuratowski_duality.errors import BudgetExceeded, GraphError, HypothesisViolation
from kuratowski_duality.graph import K5, Graph, complete_graph, cycle_graph
from kuratowski_duality.society import (
    Cross,
    CrossConfig,
    Society,
    alternate,
    check_cross_config,
    extremal_cross_config,
    find_cross,
    is_disc_embeddable,
    is_rural,
    two_disjoint_paths,
    verify_cross,
    verify_cross_config_nonplanar,
)

from . import oracles

TWO_EDGES = Graph(4, frozenset({(0, 2), (1, 3)}))
STAR = Graph(5, frozenset({(0, i) for i in range(1, 5)}))


def _brute_cross_exists(s: Society) -> bool:
    b = s.boundary
    for i, j, k, l in combinations(range(len(b)), 4):
        if oracles.brute_two_paths(s.graph.n, s.graph.edges, b[i], b[k], b[j], b[l]):
            return True
    return False


def test_society_validation():
    with pytest.raises(GraphError):
        Society(cycle_graph(4), (0, 0, 1))
    with pytest.raises(GraphError):
        Society(cycle_graph(4), (0, 7))
    s = Society(cycle_graph(4), (0, 1, 2, 3))
    assert Society.from_json(s.to_json()) == s
    assert s.rotated(1).boundary == (1, 2, 3, 0)
    assert s.reflected().boundary == (3, 2, 1, 0)


def test_alternation():
    b = (0, 1, 2, 3)
    assert alternate(b, 0, 2, 1, 3)
    assert alternate(b, 2, 0, 3, 1)
    assert not alternate(b, 0, 1, 2, 3)
    assert not alternate(b, 0, 2, 1, 9)


def test_two_disjoint_paths_examples():
    p = two_disjoint_paths(TWO_EDGES, 0, 2, 1, 3)
    assert p == ((0, 2), (1, 3))
    assert two_disjoint_paths(STAR, 1, 3, 2, 4) is None
    k4 = complete_graph(4)
    for s1, t1, s2, t2 in [(0, 1, 2, 3), (0, 2, 1, 3), (0, 3, 1, 2)]:
        found = two_disjoint_paths(k4, s1, t1, s2, t2)
        assert found is not None
        assert oracles.brute_two_paths(4, k4.edges, s1, t1, s2, t2) is not None


def test_two_disjoint_paths_guards():
    with pytest.raises(ValueError):
        two_disjoint_paths(TWO_EDGES, 0, 2, 0, 3)
    with pytest.raises(BudgetExceeded):
        two_disjoint_paths(Graph(41), 0, 1, 2, 3)


def test_two_disjoint_paths_against_brute_force():
    rng = random.Random(99)
    for _ in range(300):
        n = rng.randint(4, 8)
        h = nx.gnp_random_graph(n, rng.uniform(0.2, 0.7), seed=rng.randrange(1 << 30))
        g = Graph.from_edges(n, h.edges())
        s1, t1, s2, t2 = rng.sample(range(n), 4)
        found = two_disjoint_paths(g, s1, t1, s2, t2)
        expect = oracles.brute_two_paths(n, g.edges, s1, t1, s2, t2)
        assert (found is None) == (expect is None)
        if found is not None:
            p1, p2 = found
            assert (p1[0], p1[-1], p2[0], p2[-1]) == (s1, t1, s2, t2)
            assert not set(p1) & set(p2)
            assert all(g.has_edge(a, b) for p in found for a, b in zip(p, p[1:]))


def test_find_cross_examples():
    s = Society(TWO_EDGES, (0, 1, 2, 3))
    c = find_cross(s)
    assert c is not None and verify_cross(s, c)
    assert find_cross(Society(complete_graph(4), (0, 1, 2))) is None
    k4 = Society(complete_graph(4), (0, 1, 2, 3))
    assert verify_cross(k4, find_cross(k4))
    assert not verify_cross(k4, Cross((0, 1), (2, 3)))


def test_is_rural_examples():
    c5 = cycle_graph(5)
    assert is_rural(Society(c5, (0, 1, 2, 3, 4)))
    assert not is_rural(Society(complete_graph(4), (0, 1, 2, 3)))
    assert is_rural(Society(complete_graph(4), ()))
    assert not is_rural(Society(c5, (0, 2, 1, 3)))
    assert is_rural(Society(STAR, (1, 2, 3, 4)))


def test_nonplanar_cells_allowed():
    # K5 with an empty boundary has no cross; the rural drawing puts it in one cell
    s = Society(K5(), ())
    assert find_cross(s) is None and is_rural(s)
    # but it is not drawable in a disc outright
    assert not is_disc_embeddable(K5(), ())


@settings(max_examples=150, deadline=None)
@given(st.integers(4, 8), st.integers(0, 6), st.integers(0, 2**62))
def test_cross_iff_rural_and_brute_force(n, b, seed):
    s = generators.society(n, min(b, n), seed)
    cross = find_cross(s)
    assert (cross is None) == is_rural(s)
    assert (cross is not None) == _brute_cross_exists(s)


@settings(max_examples=60, deadline=None)
@given(st.integers(4, 9), st.integers(4, 6), st.integers(0, 2**62), st.integers(0, 5))
def test_find_cross_invariant_under_rotation_and_reflection(n, b, seed, k):
    s = generators.society(n, min(b, n), seed)
    present = find_cross(s) is not None
    for t in (s.rotated(k), s.reflected(), s.rotated(k).reflected()):
        c = find_cross(t)
        assert (c is not None) == present
        if c is not None:
            assert verify_cross(t, c)


# -- five-path configurations -----------------------------------------------------------


def test_extremal_configuration():
    cfg = extremal_cross_config()
    check_cross_config(cfg)
    assert (cfg.t, len(cfg.boundary), cfg.a, cfg.b, cfg.c, cfg.d) == (8, 10, 3, 4, 5, 6)
    assert verify_cross_config_nonplanar(cfg) is False
    assert CrossConfig.from_json(cfg.to_json()) == cfg


@pytest.mark.parametrize(
    "change,bullet",
    [
        ({"a": 4, "b": 3}, 5),
        ({"q": None}, 5),
        ({"t": 7}, 2),
        ({"p1": None}, 3),
        ({"p3": None}, 3),
    ],
)
def test_violations_name_the_bullet(change, bullet):
    cfg = extremal_cross_config()
    fix = {}
    for key, value in change.items():
        if value is None and key == "q":
            value = cfg.r  # Q = R: not disjoint, wrong ends
        elif value is None and key == "p1":
            value = tuple(reversed(cfg.p1))[:-1]
        elif value is None and key == "p3":
            value = cfg.p3[:-1]
        fix[key] = value
    with pytest.raises(HypothesisViolation) as exc:
        check_cross_config(dataclasses.replace(cfg, **fix))
    assert exc.value.bullet == bullet


def test_interface_off_p1_violates_bullet_4():
    cfg = extremal_cross_config()
    # a new isolated interface vertex appended to the rim as v_11
    w = cfg.graph.n
    g = Graph(w + 1, cfg.graph.edges)
    sep = dataclasses.replace(
        cfg.separation,
        left_vertices=cfg.separation.left_vertices | {w},
        right_vertices=cfg.separation.right_vertices | {w},
    )
    bad = dataclasses.replace(cfg, graph=g, separation=sep, boundary=cfg.boundary + (w,))
    with pytest.raises(HypothesisViolation) as exc:
        check_cross_config(bad)
    assert exc.value.bullet == 4


def test_generated_configurations():
    for seed in range(20):
        cfg = generators.cross_config(seed)
        check_cross_config(cfg)
        assert verify_cross_config_nonplanar(cfg) is False
        assert CrossConfig.from_json(cfg.to_json()) == cfg
    sizes = {generators.cross_config(s).graph.n for s in range(20)}
    assert len(sizes) > 3
