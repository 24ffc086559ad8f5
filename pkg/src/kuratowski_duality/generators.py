"""Seeded instance generators.

Every generator takes a ``seed`` and draws from ``numpy.random.default_rng``,
so an instance is a pure function of its parameters.
"""

from __future__ import annotations

from typing import Sequence

import numpy as np

from .errors import HypothesisViolation
from .graph import K5, K33, Graph, Separation, _edge, disjoint_union
from .hypergraph import Hypergraph
from .society import CrossConfig, Society, check_cross_config, extremal_cross_config

KINDS = {"K5": K5, "K33": K33}


def _rng(seed: int) -> np.random.Generator:
    return np.random.default_rng(int(seed) % (1 << 64))


def kuratowski(k: int, kinds: Sequence[str] | None = None) -> Graph:
    """Disjoint union of k copies of K5 / K3,3, in the order given (default all K5)."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    kinds = ["K5"] * k if kinds is None else list(kinds)
    if len(kinds) != k:
        raise ValueError(f"expected {k} component kinds, got {len(kinds)}")
    for x in kinds:
        if x not in KINDS:
            raise ValueError(f"unknown component kind {x!r}; use K5 or K33")
    return disjoint_union(*(KINDS[x]() for x in kinds)) if kinds else Graph(0)


def random_graph(n: int, p: float, seed: int) -> Graph:
    """G(n, p)."""
    if n < 0 or not (0.0 <= p <= 1.0):
        raise ValueError("need n >= 0 and 0 <= p <= 1")
    rng = _rng(seed)
    iu = np.triu_indices(n, 1)
    keep = rng.random(len(iu[0])) < p
    return Graph(n, frozenset((int(u), int(v)) for u, v, k in zip(iu[0], iu[1], keep) if k))


def stacked_triangulation(n: int, rng: np.random.Generator) -> Graph:
    """A random planar triangulation built by repeatedly splitting a face with a new vertex."""
    if n < 3:
        return Graph(n, frozenset(_edge(i, j) for i in range(n) for j in range(i + 1, n)))
    edges = {(0, 1), (0, 2), (1, 2)}
    faces = [(0, 1, 2), (0, 1, 2)]
    for v in range(3, n):
        a, b, c = faces.pop(int(rng.integers(len(faces))))
        edges.update({_edge(a, v), _edge(b, v), _edge(c, v)})
        faces.extend([(a, b, v), (b, c, v), (a, c, v)])
    return Graph(n, frozenset(edges))


def apex_planar(base_size: int, apex_count: int, seed: int, density: float = 0.5, keep: float = 0.8) -> Graph:
    """Planar base plus ``apex_count`` extra vertices; deleting the extras leaves the base.

    The base is a stacked triangulation with each edge kept with probability
    ``keep``; each apex joins each base vertex with probability ``density``.
    """
    if base_size < 0 or apex_count < 0:
        raise ValueError("sizes must be nonnegative")
    rng = _rng(seed)
    base = stacked_triangulation(base_size, rng)
    edges = {e for e in base.sorted_edges if rng.random() < keep}
    for i in range(apex_count):
        a = base_size + i
        for v in range(base_size + i):
            if rng.random() < density:
                edges.add(_edge(v, a))
    return Graph(base_size + apex_count, frozenset(edges))


def society(n: int, boundary_size: int, seed: int, p: float | None = None) -> Society:
    """Random graph with a random boundary of the given size in random cyclic order."""
    if not (0 <= boundary_size <= n):
        raise ValueError("need 0 <= boundary_size <= n")
    rng = _rng(seed)
    if p is None:
        p = float(rng.uniform(0.2, 0.7))
    iu = np.triu_indices(n, 1)
    keep = rng.random(len(iu[0])) < p
    g = Graph(n, frozenset((int(u), int(v)) for u, v, k in zip(iu[0], iu[1], keep) if k))
    boundary = tuple(int(x) for x in rng.permutation(n)[:boundary_size])
    return Society(g, boundary)


def hypergraph(n: int, m: int, max_edge: int, seed: int) -> Hypergraph:
    """m hyperedges over n vertices, sizes uniform in 1..max_edge."""
    if n < 1 or m < 0 or not (1 <= max_edge <= n):
        raise ValueError("need n >= 1, m >= 0 and 1 <= max_edge <= n")
    rng = _rng(seed)
    edges = []
    for _ in range(m):
        size = int(rng.integers(1, max_edge + 1))
        edges.append(tuple(sorted(int(x) for x in rng.choice(n, size=size, replace=False))))
    return Hypergraph(n, tuple(edges))


# -- configurations of the five-path lemma ---------------------------------------


class _Config:
    """Mutable working copy of a CrossConfig."""

    def __init__(self, cfg: CrossConfig):
        self.n = cfg.graph.n
        self.a_edges = set(cfg.separation.left_edges)
        self.b_edges = set(cfg.separation.right_edges)
        self.a_vertices = set(cfg.separation.left_vertices)
        self.b_vertices = set(cfg.separation.right_vertices)
        self.boundary = list(cfg.boundary)
        self.t = cfg.t
        self.paths = {k: list(getattr(cfg, k)) for k in ("p1", "p2", "p3", "q", "r")}
        self.abcd = [cfg.a, cfg.b, cfg.c, cfg.d]

    def freeze(self) -> CrossConfig:
        g = Graph(self.n, frozenset(self.a_edges | self.b_edges))
        sep = Separation(
            frozenset(self.a_vertices), frozenset(self.b_vertices), frozenset(self.a_edges), frozenset(self.b_edges)
        )
        return CrossConfig(
            g, sep, tuple(self.boundary), self.t, *(tuple(self.paths[k]) for k in ("p1", "p2", "p3", "q", "r")),
            *self.abcd,
        )

    def has_edge(self, u, v) -> bool:
        e = _edge(u, v)
        return e in self.a_edges or e in self.b_edges

    def subdivide(self, e, on_boundary_after: int | None = None) -> int:
        """Split edge e with a new vertex; paths through e pass through it too."""
        u, v = e
        w = self.n
        self.n += 1
        if e in self.a_edges:
            self.a_edges.discard(e)
            self.a_edges.update({_edge(u, w), _edge(w, v)})
            self.a_vertices.add(w)
        else:
            self.b_edges.discard(e)
            self.b_edges.update({_edge(u, w), _edge(w, v)})
            self.b_vertices.add(w)
        for p in self.paths.values():
            for i in range(len(p) - 1):
                if _edge(p[i], p[i + 1]) == e:
                    p.insert(i + 1, w)
                    break
        return w

    def insert_rim_vertex(self, before: int) -> int:
        """New B vertex on the rim just before v_before (1-based, 4 <= before <= t - 2)."""
        w = self.n
        self.n += 1
        self.b_vertices.add(w)
        self.boundary.insert(before - 1, w)
        self.t += 1
        self.abcd = [x + 1 if x >= before else x for x in self.abcd]
        return w


def cross_config(seed: int, moves: int | None = None, max_attempts: int = 200) -> CrossConfig:
    """A random configuration satisfying every hypothesis of the five-path lemma.

    Starts from :func:`extremal_cross_config` and applies random moves:
    subdividing edges, growing extra structure on the A side, adding edges
    inside B, inserting rim vertices between v_4 and v_{t-2}, and splitting an
    interface edge of P_1 with a new interface vertex.  A move that breaks a
    hypothesis is undone.  Labels are shuffled at the end.
    """
    rng = _rng(seed)
    if moves is None:
        moves = int(rng.integers(1, 12))
    cur = _Config(extremal_cross_config())
    attempts = 0
    done = 0
    while done < moves:
        attempts += 1
        if attempts > max_attempts:
            break
        trial = _Config(cur.freeze())
        kind = int(rng.integers(6))
        if kind == 0:
            edges = sorted(trial.a_edges | trial.b_edges)
            trial.subdivide(edges[int(rng.integers(len(edges)))])
        elif kind == 1:
            w = trial.n
            trial.n += 1
            trial.a_vertices.add(w)
            pool = sorted(trial.a_vertices - {w})
            k = int(rng.integers(1, min(3, len(pool)) + 1))
            for x in rng.choice(pool, size=k, replace=False):
                trial.a_edges.add(_edge(int(x), w))
        elif kind == 2:
            pool = sorted(trial.a_vertices)
            u, v = (int(x) for x in rng.choice(pool, size=2, replace=False))
            if trial.has_edge(u, v):
                continue
            trial.a_edges.add(_edge(u, v))
        elif kind == 3:
            pool = sorted(trial.b_vertices)
            u, v = (int(x) for x in rng.choice(pool, size=2, replace=False))
            if trial.has_edge(u, v):
                continue
            trial.b_edges.add(_edge(u, v))
        elif kind == 4:
            before = int(rng.integers(4, trial.t - 1))
            left = trial.boundary[before - 2]
            w = trial.insert_rim_vertex(before)
            if rng.random() < 0.5:
                trial.b_edges.add(_edge(left, w))
        else:
            # split a B edge of P_1 joining rim-consecutive interface vertices
            bd = trial.boundary
            T = len(bd)
            cands = []
            for j in range(trial.t - 1, T):
                x, y = bd[j], bd[(j + 1) % T]
                if _edge(x, y) in trial.b_edges and _edge(x, y) in {
                    _edge(p, q) for p, q in zip(trial.paths["p1"], trial.paths["p1"][1:])
                }:
                    cands.append((j, x, y))
            if not cands:
                continue
            j, x, y = cands[int(rng.integers(len(cands)))]
            w = trial.subdivide(_edge(x, y))
            trial.a_vertices.add(w)
            bd.insert(j + 1, w)
        try:
            check_cross_config(trial.freeze())
        except HypothesisViolation:
            continue
        cur = trial
        done += 1

    perm = [int(x) for x in rng.permutation(cur.n)]
    relabel = {old: perm[old] for old in range(cur.n)}
    out = _Config(cur.freeze())
    out.a_edges = {_edge(relabel[u], relabel[v]) for u, v in cur.a_edges}
    out.b_edges = {_edge(relabel[u], relabel[v]) for u, v in cur.b_edges}
    out.a_vertices = {relabel[v] for v in cur.a_vertices}
    out.b_vertices = {relabel[v] for v in cur.b_vertices}
    out.boundary = [relabel[v] for v in cur.boundary]
    out.paths = {k: [relabel[v] for v in p] for k, p in cur.paths.items()}
    cfg = out.freeze()
    check_cross_config(cfg)
    return cfg
