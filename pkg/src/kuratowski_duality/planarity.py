"""Planarity decisions and certified Kuratowski subdivisions.

The yes/no planarity test is networkx's left-right algorithm.  Witnesses are
extracted by edge minimisation: drop every edge whose removal keeps the graph
nonplanar.  What survives is an edge-minimal nonplanar graph, which by
Kuratowski's theorem is a subdivision of K5 or K3,3, and the branch vertices
and paths are then read off directly.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Mapping

import networkx as nx

from .graph import Graph, _edge

K5_MODEL_EDGES = tuple(combinations(range(5), 2))
K33_MODEL_EDGES = tuple((i, j) for i in range(3) for j in range(3, 6))


def planar_edge_set(edges: Iterable) -> bool:
    """Planarity of the graph spanned by ``edges`` (isolated vertices are irrelevant)."""
    return _planar_cached(frozenset(_edge(*e) for e in edges))


@lru_cache(maxsize=1 << 18)
def _planar_cached(edges: frozenset) -> bool:
    if len(edges) < 9:
        return True
    verts = set()
    for u, v in edges:
        verts.add(u)
        verts.add(v)
    if len(verts) < 5:
        return True
    if len(edges) > 3 * len(verts) - 6:
        return False
    g = nx.Graph()
    g.add_edges_from(edges)
    return nx.check_planarity(g)[0]


def is_planar(g: Graph) -> bool:
    """True iff ``g`` has a plane embedding."""
    return planar_edge_set(g.edges)


@dataclass(frozen=True)
class KGraphWitness:
    """A subdivision of K5 or K3,3 inside a host graph.

    For ``K33`` the first three branch vertices form one side.  ``paths`` has one
    vertex path per model edge, in the order of ``K5_MODEL_EDGES`` /
    ``K33_MODEL_EDGES``, running from the first to the second branch vertex.
    """

    kind: str
    branch_vertices: tuple
    paths: tuple

    @property
    def model_edges(self):
        return K5_MODEL_EDGES if self.kind == "K5" else K33_MODEL_EDGES

    @property
    def vertices(self) -> frozenset:
        return frozenset(v for p in self.paths for v in p) | frozenset(self.branch_vertices)

    @property
    def edges(self) -> frozenset:
        return frozenset(_edge(p[i], p[i + 1]) for p in self.paths for i in range(len(p) - 1))

    def relabel(self, mapping: Mapping[int, int]) -> "KGraphWitness":
        return KGraphWitness(
            self.kind,
            tuple(mapping[v] for v in self.branch_vertices),
            tuple(tuple(mapping[v] for v in p) for p in self.paths),
        )

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "branch_vertices": list(self.branch_vertices),
            "paths": [list(p) for p in self.paths],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "KGraphWitness":
        return cls(
            str(data["kind"]),
            tuple(int(v) for v in data["branch_vertices"]),
            tuple(tuple(int(v) for v in p) for p in data["paths"]),
        )


def verify_kgraph_witness(g: Graph, w: KGraphWitness) -> bool:
    """Check every witness invariant against the host graph."""
    if w.kind == "K5":
        nb, model = 5, K5_MODEL_EDGES
    elif w.kind == "K33":
        nb, model = 6, K33_MODEL_EDGES
    else:
        return False
    branch = tuple(w.branch_vertices)
    if len(branch) != nb or len(set(branch)) != nb or len(w.paths) != len(model):
        return False
    if any(not (0 <= v < g.n) for v in branch):
        return False
    branch_set = set(branch)
    used_internal = set()
    for (i, j), path in zip(model, w.paths):
        if len(path) < 2 or len(set(path)) != len(path):
            return False
        ends = {path[0], path[-1]}
        if ends != {branch[i], branch[j]}:
            return False
        for a, b in zip(path, path[1:]):
            if not (0 <= a < g.n and 0 <= b < g.n) or not g.has_edge(a, b):
                return False
        for v in path[1:-1]:
            if v in branch_set or v in used_internal:
                return False
            used_internal.add(v)
    return True


def _minimal_nonplanar_edges(edges: list) -> list:
    """Greedy edge minimisation of a nonplanar edge set."""
    current = list(edges)
    i = 0
    while i < len(current):
        trial = current[:i] + current[i + 1:]
        if not planar_edge_set(trial):
            current = trial
        else:
            i += 1
    return current


def _witness_from_subdivision(edges: list) -> KGraphWitness:
    adj = {}
    for u, v in edges:
        adj.setdefault(u, []).append(v)
        adj.setdefault(v, []).append(u)
    branch = sorted(v for v, nb in adj.items() if len(nb) >= 3)

    # Walk from every branch vertex along each incident edge to the next branch vertex.
    branch_set = set(branch)
    route = {}
    for b in branch:
        for first in sorted(adj[b]):
            path = [b, first]
            while path[-1] not in branch_set:
                prev, cur = path[-2], path[-1]
                nxt = adj[cur][0] if adj[cur][0] != prev else adj[cur][1]
                path.append(nxt)
            key = (b, path[-1])
            route[key] = path

    if len(branch) == 5:
        kind = "K5"
        order = branch
        model = K5_MODEL_EDGES
    elif len(branch) == 6:
        kind = "K33"
        # 2-colour the branch graph
        colour = {branch[0]: 0}
        stack = [branch[0]]
        while stack:
            x = stack.pop()
            for (a, b) in route:
                if a == x and b not in colour:
                    colour[b] = 1 - colour[x]
                    stack.append(b)
        side0 = sorted(v for v in branch if colour[v] == 0)
        side1 = sorted(v for v in branch if colour[v] == 1)
        order = side0 + side1
        model = K33_MODEL_EDGES
    else:
        raise AssertionError(f"minimal nonplanar graph with {len(branch)} branch vertices")
    paths = tuple(tuple(route[(order[i], order[j])]) for i, j in model)
    return KGraphWitness(kind, tuple(order), paths)


def kuratowski_witness(g: Graph) -> KGraphWitness | None:
    """A K5 or K3,3 subdivision in ``g``, or ``None`` when ``g`` is planar."""
    if is_planar(g):
        return None
    edges = _minimal_nonplanar_edges(list(g.sorted_edges))
    return _witness_from_subdivision(edges)
