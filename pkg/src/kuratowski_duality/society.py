"""Societies, crosses and rural drawings.

A society is a graph with a cyclic order on some of its vertices (the
boundary).  A cross is a pair of disjoint paths whose four ends alternate
around the boundary.  Two independent decisions live here:

* :func:`find_cross` searches for a cross directly, via exact two disjoint
  paths search.
* :func:`is_rural` looks for a drawing in a disc with the boundary vertices on
  the rim in order, where each piece hanging off at most three chosen nodes may
  be drawn inside a small disc of its own (and need not be planar itself).

The two should disagree on no society; the test suite checks that.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Mapping, Sequence

import networkx as nx

from .errors import BudgetExceeded, GraphError, HypothesisViolation
from .graph import Graph, Separation, _edge, graph_from_json, graph_to_json
from .planarity import is_planar

MAX_PATH_VERTICES = 40
DEFAULT_PATH_BUDGET = 2_000_000
MAX_RURAL_FREE_VERTICES = 14


@dataclass(frozen=True)
class Society:
    graph: Graph
    boundary: tuple

    def __post_init__(self):
        b = tuple(int(v) for v in self.boundary)
        if len(set(b)) != len(b):
            raise GraphError("boundary vertices must be distinct")
        for v in b:
            if not (0 <= v < self.graph.n):
                raise GraphError(f"boundary vertex {v} is not a vertex of the graph")
        object.__setattr__(self, "boundary", b)

    def rotated(self, k: int) -> "Society":
        b = self.boundary
        k %= max(1, len(b))
        return Society(self.graph, b[k:] + b[:k])

    def reflected(self) -> "Society":
        return Society(self.graph, tuple(reversed(self.boundary)))

    def to_json(self) -> dict:
        return {"graph": graph_to_json(self.graph), "boundary": list(self.boundary)}

    @classmethod
    def from_json(cls, data: Mapping) -> "Society":
        return cls(graph_from_json(data["graph"]), tuple(data["boundary"]))


@dataclass(frozen=True)
class Cross:
    p1: tuple
    p2: tuple

    def to_json(self) -> dict:
        return {"p1": list(self.p1), "p2": list(self.p2)}


def alternate(boundary: Sequence, s1, t1, s2, t2) -> bool:
    """Do the pairs {s1,t1} and {s2,t2} alternate around the cyclic order?"""
    pos = {v: i for i, v in enumerate(boundary)}
    if any(v not in pos for v in (s1, t1, s2, t2)) or len({s1, t1, s2, t2}) != 4:
        return False
    a, b = sorted((pos[s1], pos[t1]))
    inside = [a < pos[x] < b for x in (s2, t2)]
    return inside[0] != inside[1]


def _is_path(g: Graph, p: Sequence) -> bool:
    return (
        len(p) >= 1
        and len(set(p)) == len(p)
        and all(0 <= v < g.n for v in p)
        and all(g.has_edge(a, b) for a, b in zip(p, p[1:]))
    )


def verify_cross(s: Society, c: Cross) -> bool:
    """Both paths valid, vertex disjoint, ends on the boundary and alternating."""
    g = s.graph
    if not (_is_path(g, c.p1) and _is_path(g, c.p2)):
        return False
    if set(c.p1) & set(c.p2):
        return False
    return alternate(s.boundary, c.p1[0], c.p1[-1], c.p2[0], c.p2[-1])


# -- two disjoint paths --------------------------------------------------------------


def _bfs_path(adj, src, dst, blocked) -> tuple | None:
    if src in blocked or dst in blocked:
        return None
    parent = {src: None}
    queue = deque([src])
    while queue:
        x = queue.popleft()
        if x == dst:
            out = []
            while x is not None:
                out.append(x)
                x = parent[x]
            return tuple(reversed(out))
        for y in adj[x]:
            if y not in parent and y not in blocked:
                parent[y] = x
                queue.append(y)
    return None


def two_disjoint_paths(g: Graph, s1: int, t1: int, s2: int, t2: int, budget: int = DEFAULT_PATH_BUDGET):
    """Vertex-disjoint paths s1..t1 and s2..t2, or ``None`` if there are none.

    The first path ranges over induced s1-t1 paths avoiding s2 and t2, shortest
    first and lexicographic within a length (any solution can be shortcut to
    one whose first path is induced).  The second path is a BFS in what remains.
    """
    if len({s1, t1, s2, t2}) != 4:
        raise ValueError("the four terminals must be distinct")
    if g.n > MAX_PATH_VERTICES:
        raise BudgetExceeded(f"two_disjoint_paths is limited to {MAX_PATH_VERTICES} vertices")
    adj = [sorted(a) for a in g.adjacency]
    comp = {}
    for i, c in enumerate(g.components):
        for v in c:
            comp[v] = i
    if comp[s1] != comp[t1] or comp[s2] != comp[t2]:
        return None
    forbidden = {s2, t2}
    spent = 0

    def extend(path, on_path, depth):
        nonlocal spent
        spent += 1
        if spent > budget:
            raise BudgetExceeded(f"two_disjoint_paths exceeded budget of {budget} nodes", used=spent)
        last = path[-1]
        if depth == 0:
            if last == t1:
                p2 = _bfs_path(adj, s2, t2, on_path)
                if p2 is not None:
                    return tuple(path), p2
            return None
        for y in adj[last]:
            if y in on_path or y in forbidden:
                continue
            if y != t1 and depth == 1:
                continue
            if y == t1 and depth > 1:
                continue
            # induced: y may touch the path only at its last vertex
            if any(z in on_path and z != last for z in adj[y]):
                continue
            path.append(y)
            on_path.add(y)
            found = extend(path, on_path, depth - 1)
            path.pop()
            on_path.discard(y)
            if found is not None:
                return found
        return None

    for length in range(1, g.n):
        found = extend([s1], {s1}, length)
        if found is not None:
            return found
    return None


def find_cross(s: Society, budget: int = DEFAULT_PATH_BUDGET) -> Cross | None:
    """The cross on the lexicographically first alternating quadruple of boundary positions."""
    b = s.boundary
    for i, j, k, l in combinations(range(len(b)), 4):
        found = two_disjoint_paths(s.graph, b[i], b[k], b[j], b[l], budget)
        if found is not None:
            return Cross(*found)
    return None


# -- rural drawings -----------------------------------------------------------------


def _hub_rim_planar(n: int, edges, boundary: Sequence) -> bool:
    """Planarity after adding a cycle through the boundary in order and a hub joined to it."""
    h = nx.Graph()
    h.add_nodes_from(range(n))
    h.add_edges_from(edges)
    hub = ("hub",)
    for v in boundary:
        h.add_edge(hub, v)
    if len(boundary) >= 3:
        for a, b in zip(boundary, boundary[1:] + tuple(boundary[:1])):
            h.add_edge(a, b)
    return nx.check_planarity(h)[0]


def is_disc_embeddable(g: Graph, boundary: Sequence) -> bool:
    """Can ``g`` be drawn in a closed disc with exactly ``boundary`` on the rim, in this cyclic order?"""
    return _hub_rim_planar(g.n, g.edges, tuple(boundary))


def _bridges(g: Graph, nodes: frozenset):
    """Attachment sets of the bridges of ``nodes``: edges inside it, and components of the rest."""
    out = []
    for u, v in g.edges:
        if u in nodes and v in nodes:
            out.append(frozenset((u, v)))
    adj = g.adjacency
    seen = set()
    for start in range(g.n):
        if start in nodes or start in seen:
            continue
        seen.add(start)
        stack = [start]
        attach = set()
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if y in nodes:
                    attach.add(y)
                elif y not in seen:
                    seen.add(y)
                    stack.append(y)
        out.append(frozenset(attach))
    return out


def _skeleton_rural(g: Graph, nodes: frozenset, boundary: tuple) -> bool:
    attachments = _bridges(g, nodes)
    if any(len(a) > 3 for a in attachments):
        return False
    triples = {a for a in attachments if len(a) == 3}
    pairs = {a for a in attachments if len(a) == 2 and not any(a <= t for t in triples)}
    edges = [tuple(p) for p in pairs]
    n = g.n
    for t in sorted(triples, key=sorted):
        centre = n
        n += 1
        edges.extend((centre, x) for x in t)
    return _hub_rim_planar(n, edges, boundary)


def is_rural(s: Society) -> bool:
    """Is there a rural drawing of the society?

    Searches over node sets N containing the boundary.  Every N-bridge must
    attach to at most three nodes; each becomes a star (three attachments) or
    an edge (two) in a skeleton, bridges with at most one attachment vanish,
    and the skeleton must be drawable in a disc with the boundary on the rim.
    """
    g = s.graph
    boundary = s.boundary
    bset = frozenset(boundary)
    free = [v for v in range(g.n) if v not in bset and g.degree(v) > 0]
    if len(free) > MAX_RURAL_FREE_VERTICES:
        raise BudgetExceeded(f"is_rural is limited to {MAX_RURAL_FREE_VERTICES} non-boundary vertices")
    # all vertices as nodes first (an ordinary disc drawing), then smaller node sets
    for size in range(len(free), -1, -1):
        for extra in combinations(free, size):
            if _skeleton_rural(g, bset | frozenset(extra), boundary):
                return True
    return False


# -- the nonplanar cross configuration ------------------------------------------------


@dataclass(frozen=True)
class CrossConfig:
    """Objects of the five-path nonplanarity lemma.

    ``separation`` is (A, B) with A on the left.  ``boundary`` lists v_1..v_T,
    the vertices of B on the rim of the disc in which B is drawn.  Paths are
    vertex tuples; the labels a < b < c < d are 1-based boundary indices.
    """

    graph: Graph
    separation: Separation
    boundary: tuple
    t: int
    p1: tuple
    p2: tuple
    p3: tuple
    q: tuple
    r: tuple
    a: int
    b: int
    c: int
    d: int

    def v(self, i: int) -> int:
        return self.boundary[i - 1]

    def union_graph(self) -> Graph:
        edges = set()
        for p in (self.p1, self.p2, self.p3, self.q, self.r):
            edges.update(_edge(x, y) for x, y in zip(p, p[1:]))
        return Graph(self.graph.n, frozenset(edges))

    def to_json(self) -> dict:
        return {
            "graph": graph_to_json(self.graph),
            "separation": self.separation.to_json(self.graph),
            "boundary": list(self.boundary),
            "t": self.t,
            "paths": {k: list(getattr(self, k)) for k in ("p1", "p2", "p3", "q", "r")},
            "abcd": [self.a, self.b, self.c, self.d],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "CrossConfig":
        g = graph_from_json(data["graph"])
        paths = data["paths"]
        return cls(
            g,
            Separation.from_json(g, data["separation"]),
            tuple(data["boundary"]),
            int(data["t"]),
            *(tuple(paths[k]) for k in ("p1", "p2", "p3", "q", "r")),
            *(int(x) for x in data["abcd"]),
        )


def _ends(p) -> set:
    return {p[0], p[-1]}


def check_cross_config(cfg: CrossConfig) -> None:
    """Raise :class:`HypothesisViolation` naming the first failed hypothesis (1 to 5)."""
    g = cfg.graph
    sep = cfg.separation
    if not sep.is_valid(g):
        raise HypothesisViolation(0, "(A, B) is not a separation of G")
    b_side, b_map = sep.right_graph(g)
    bd = cfg.boundary
    T = len(bd)
    if len(set(bd)) != T or any(v not in sep.right_vertices for v in bd):
        raise HypothesisViolation(1, "boundary must list distinct vertices of B")

    # 1: B drawn in a disc with exactly v_1..v_T on the rim, in order
    if not is_disc_embeddable(b_side, tuple(b_map[v] for v in bd)):
        raise HypothesisViolation(1, "B has no disc drawing with v_1..v_T on the rim in order")

    # 2: the interface is v_t..v_T, v_1
    if not (1 <= cfg.t <= T):
        raise HypothesisViolation(2, f"t={cfg.t} outside 1..T={T}")
    expected = set(bd[cfg.t - 1:]) | {bd[0]}
    if set(sep.interface) != expected:
        raise HypothesisViolation(2, "V(A ∩ B) differs from {v_t, ..., v_T, v_1}")

    # 3: three disjoint paths with the prescribed ends
    paths = (cfg.p1, cfg.p2, cfg.p3)
    t = cfg.t
    if t < 6:
        raise HypothesisViolation(3, f"t={t} leaves no room for P_3")
    for i, p in enumerate(paths, start=1):
        if not _is_path(g, p):
            raise HypothesisViolation(3, f"P_{i} is not a path of G")
        if _ends(p) != {cfg.v(i), cfg.v(t + 1 - i)}:
            raise HypothesisViolation(3, f"P_{i} must have ends v_{i} and v_{t + 1 - i}")
    for i, j in combinations(range(3), 2):
        if set(paths[i]) & set(paths[j]):
            raise HypothesisViolation(3, f"P_{i + 1} and P_{j + 1} share a vertex")
    for i in (1, 2):
        p = paths[i]
        if any(v not in b_map for v in p) or not _is_path(b_side, [b_map[v] for v in p]):
            raise HypothesisViolation(3, f"P_{i + 1} is not a path of B")

    # 4: the interface lies on P_1
    if not set(sep.interface) <= set(cfg.p1):
        raise HypothesisViolation(4, "some vertex of A ∩ B is not on P_1")

    # 5: indices and the crossing pair Q, R
    if not (3 <= cfg.a < cfg.b < cfg.c < cfg.d <= t - 2):
        raise HypothesisViolation(5, "need 3 <= a < b < c < d <= t - 2")
    if not (_is_path(g, cfg.q) and _is_path(g, cfg.r)):
        raise HypothesisViolation(5, "Q and R must be paths of G")
    if set(cfg.q) & set(cfg.r):
        raise HypothesisViolation(5, "Q and R share a vertex")
    if _ends(cfg.q) != {cfg.v(cfg.a), cfg.v(cfg.c)} or _ends(cfg.r) != {cfg.v(cfg.b), cfg.v(cfg.d)}:
        raise HypothesisViolation(5, "Q must join v_a, v_c and R must join v_b, v_d")


def verify_cross_config_nonplanar(cfg: CrossConfig) -> bool:
    """Check every hypothesis, then return the planarity of the union of the five paths.

    The expected answer is always ``False``.
    """
    check_cross_config(cfg)
    return is_planar(cfg.union_graph())


def extremal_cross_config() -> CrossConfig:
    """The tight case: t = 8, a, b, c, d = 3, 4, 5, 6, every path as short as allowed.

    Vertices 0..9 are v_1..v_10 (so T = 10), 10 and 11 lie only in A, and
    12..15 are the interior vertices q1, r1, q2, r2 of B.
    """
    v = {i: i - 1 for i in range(1, 11)}
    a1, a2, q1, r1, q2, r2 = 10, 11, 12, 13, 14, 15
    p1 = (v[1], a1, v[9], v[10], a2, v[8])
    p2 = (v[2], q1, r1, q2, r2, v[7])
    p3 = (v[3], v[4], v[5], v[6])
    q = (v[3], q1, v[1], a1, v[9], q2, v[5])
    r = (v[4], r1, v[10], a2, v[8], r2, v[6])
    a_edges = {_edge(v[1], a1), _edge(a1, v[9]), _edge(v[10], a2), _edge(a2, v[8])}
    edges = set(a_edges)
    for p in (p1, p2, p3, q, r):
        edges.update(_edge(x, y) for x, y in zip(p, p[1:]))
    g = Graph(16, frozenset(edges))
    interface = {v[8], v[9], v[10], v[1]}
    left = frozenset(interface | {a1, a2})
    right = frozenset(range(16)) - {a1, a2}
    sep = Separation(left, right, frozenset(a_edges), frozenset(edges - a_edges))
    return CrossConfig(g, sep, tuple(v[i] for i in range(1, 11)), 8, p1, p2, p3, q, r, 3, 4, 5, 6)
