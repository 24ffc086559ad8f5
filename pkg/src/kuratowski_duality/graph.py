"""Simple undirected graphs on dense integer vertices, plus their serial formats.

Vertices are ``0..n-1``.  Edges are stored as sorted pairs ``(u, v)`` with ``u < v``.
Graphs are immutable; every operation that changes the vertex set returns a new
graph together with an old-to-new vertex map so that certificates can be
translated back to the host.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable, Mapping

from .errors import GraphError, ParseError


def _edge(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    n: int
    edges: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        if self.n < 0:
            raise GraphError("vertex count must be nonnegative")
        normalized = set()
        for e in self.edges:
            u, v = e
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise GraphError(f"edge {e} has an endpoint outside 0..{self.n - 1}")
            normalized.add(_edge(u, v))
        object.__setattr__(self, "edges", frozenset(normalized))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable, *, strict: bool = True) -> "Graph":
        """Build a graph; with ``strict`` a repeated edge is an error rather than merged."""
        seen = set()
        for u, v in edges:
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            e = _edge(u, v)
            if e in seen and strict:
                raise GraphError(f"parallel edge {e}")
            seen.add(e)
        return cls(n, frozenset(seen))

    # -- basic structure -------------------------------------------------

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def sorted_edges(self) -> tuple:
        return tuple(sorted(self.edges))

    @cached_property
    def adjacency(self) -> tuple:
        adj = [set() for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return tuple(frozenset(a) for a in adj)

    def neighbors(self, v: int) -> frozenset:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return _edge(u, v) in self.edges

    @cached_property
    def components(self) -> tuple:
        """Connected components as sorted vertex tuples, ordered by smallest vertex."""
        seen = [False] * self.n
        comps = []
        for s in range(self.n):
            if seen[s]:
                continue
            seen[s] = True
            comp = [s]
            queue = deque([s])
            while queue:
                x = queue.popleft()
                for y in self.adjacency[x]:
                    if not seen[y]:
                        seen[y] = True
                        comp.append(y)
                        queue.append(y)
            comps.append(tuple(sorted(comp)))
        return tuple(comps)

    def is_connected(self) -> bool:
        return len(self.components) <= 1

    # -- derived graphs --------------------------------------------------

    def induced(self, vertices: Iterable[int]) -> tuple["Graph", dict]:
        """Induced subgraph on ``vertices`` relabelled densely in increasing order."""
        keep = sorted(set(vertices))
        index = {v: i for i, v in enumerate(keep)}
        edges = [(index[u], index[v]) for u, v in self.edges if u in index and v in index]
        return Graph(len(keep), frozenset(edges)), index

    def delete_vertices(self, vertices: Iterable[int]) -> tuple["Graph", dict]:
        gone = set(vertices)
        return self.induced(v for v in range(self.n) if v not in gone)

    def delete_edges(self, edges: Iterable) -> "Graph":
        gone = {_edge(*e) for e in edges}
        return Graph(self.n, self.edges - gone)

    def add_edges(self, edges: Iterable) -> "Graph":
        return Graph(self.n, self.edges | {_edge(*e) for e in edges})

    def edge_subgraph(self, edges: Iterable) -> "Graph":
        """Same vertex set, only the given edges (which must belong to the graph)."""
        chosen = {_edge(*e) for e in edges}
        if not chosen <= self.edges:
            raise GraphError("edge_subgraph: edges not in graph")
        return Graph(self.n, frozenset(chosen))

    def relabel(self, mapping: Mapping[int, int], n: int | None = None) -> "Graph":
        size = self.n if n is None else n
        return Graph(size, frozenset(_edge(mapping[u], mapping[v]) for u, v in self.edges))

    def to_networkx(self):
        import networkx as nx

        g = nx.Graph()
        g.add_nodes_from(range(self.n))
        g.add_edges_from(self.sorted_edges)
        return g

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"


def disjoint_union(*graphs: Graph) -> Graph:
    """Disjoint union; the vertices of the i-th graph follow those of graphs before it."""
    offset = 0
    edges = []
    for g in graphs:
        edges.extend((u + offset, v + offset) for u, v in g.edges)
        offset += g.n
    return Graph(offset, frozenset(edges))


# -- named graphs -------------------------------------------------------------


def complete_graph(n: int) -> Graph:
    return Graph(n, frozenset(combinations(range(n), 2)))


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph(a + b, frozenset((i, a + j) for i in range(a) for j in range(b)))


def cycle_graph(n: int) -> Graph:
    return Graph(n, frozenset(_edge(i, (i + 1) % n) for i in range(n)))


def path_graph(n: int) -> Graph:
    return Graph(n, frozenset((i, i + 1) for i in range(n - 1)))


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)


def K5() -> Graph:
    return complete_graph(5)


def K33() -> Graph:
    return complete_bipartite(3, 3)


# -- separations --------------------------------------------------------------


@dataclass(frozen=True)
class Separation:
    """A pair of subgraphs (A, B) with A ∪ B = G and no edge in both.

    ``left_edges`` / ``right_edges`` carry the edge assignment; every host edge
    appears in exactly one of them.
    """

    left_vertices: frozenset
    right_vertices: frozenset
    left_edges: frozenset
    right_edges: frozenset

    @property
    def interface(self) -> frozenset:
        return self.left_vertices & self.right_vertices

    @property
    def order(self) -> int:
        return len(self.left_vertices & self.right_vertices)

    def reversed(self) -> "Separation":
        return Separation(self.right_vertices, self.left_vertices, self.right_edges, self.left_edges)

    def left_graph(self, g: Graph) -> tuple[Graph, dict]:
        return _side_graph(self.left_vertices, self.left_edges)

    def right_graph(self, g: Graph) -> tuple[Graph, dict]:
        return _side_graph(self.right_vertices, self.right_edges)

    def is_valid(self, g: Graph) -> bool:
        if self.left_vertices | self.right_vertices != frozenset(range(g.n)):
            return False
        if self.left_edges & self.right_edges or self.left_edges | self.right_edges != g.edges:
            return False
        for side_v, side_e in ((self.left_vertices, self.left_edges), (self.right_vertices, self.right_edges)):
            if any(u not in side_v or v not in side_v for u, v in side_e):
                return False
        return True

    def edge_side_bitmap(self, g: Graph) -> str:
        """One character per host edge in sorted order: '1' if the edge is on the left."""
        return "".join("1" if e in self.left_edges else "0" for e in g.sorted_edges)

    def sort_key(self):
        return (
            tuple(sorted(self.left_vertices)),
            tuple(sorted(self.right_vertices)),
            tuple(sorted(self.left_edges)),
        )

    def to_json(self, g: Graph) -> dict:
        return {
            "left": sorted(self.left_vertices),
            "interface": sorted(self.interface),
            "right": sorted(self.right_vertices),
            "edge_side": self.edge_side_bitmap(g),
        }

    @classmethod
    def from_json(cls, g: Graph, data: Mapping) -> "Separation":
        bitmap = data["edge_side"]
        if len(bitmap) != g.m:
            raise GraphError("edge_side bitmap length does not match edge count")
        left_e = frozenset(e for e, bit in zip(g.sorted_edges, bitmap) if bit == "1")
        return cls(frozenset(data["left"]), frozenset(data["right"]), left_e, g.edges - left_e)


def _side_graph(vertices: frozenset, edges: frozenset) -> tuple[Graph, dict]:
    keep = sorted(vertices)
    index = {v: i for i, v in enumerate(keep)}
    return Graph(len(keep), frozenset((index[u], index[v]) for u, v in edges)), index


# -- serial formats -----------------------------------------------------------

GRAPH6_HEADER = b">>graph6<<"
SPARSE6_HEADER = b">>sparse6<<"


def _decode_size(data: bytes, pos: int) -> tuple[int, int]:
    """Decode the N(n) size field starting at ``pos``; returns (n, next position)."""

    def sixbits(i):
        if i >= len(data):
            raise ParseError("truncated size field", i)
        c = data[i]
        if not 63 <= c <= 126:
            raise ParseError(f"byte {c!r} outside the printable range 63..126", i)
        return c - 63

    first = sixbits(pos)
    if first < 63:
        return first, pos + 1
    if sixbits(pos + 1) < 63:
        value = 0
        for i in range(pos + 1, pos + 4):
            value = (value << 6) | sixbits(i)
        return value, pos + 4
    value = 0
    for i in range(pos + 2, pos + 8):
        value = (value << 6) | sixbits(i)
    return value, pos + 8


def _encode_size(n: int) -> bytes:
    if n < 63:
        return bytes([n + 63])
    if n < 258048:
        return bytes([126] + [((n >> s) & 63) + 63 for s in (12, 6, 0)])
    if n < 2**36:
        return bytes([126, 126] + [((n >> s) & 63) + 63 for s in (30, 24, 18, 12, 6, 0)])
    raise GraphError("graph too large for graph6")


def _parse_graph6(data: bytes, base: int) -> Graph:
    n, pos = _decode_size(data, 0)
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    body = data[pos:]
    if len(body) != nbytes:
        raise ParseError(f"expected {nbytes} data bytes for n={n}, found {len(body)}", base + pos + min(len(body), nbytes))
    edges = []
    bit = 0
    for j in range(1, n):
        for i in range(j):
            byte_index = bit // 6
            c = body[byte_index]
            if not 63 <= c <= 126:
                raise ParseError(f"byte {c!r} outside the printable range 63..126", base + pos + byte_index)
            if (c - 63) >> (5 - bit % 6) & 1:
                edges.append((i, j))
            bit += 1
    for k, c in enumerate(body):
        if not 63 <= c <= 126:
            raise ParseError(f"byte {c!r} outside the printable range 63..126", base + pos + k)
    return Graph(n, frozenset(edges))


def _parse_sparse6(data: bytes, base: int) -> Graph:
    # data starts after ':'
    n, pos = _decode_size(data, 0)
    k = (n - 1).bit_length() if n > 1 else 0
    bits = []
    for off in range(pos, len(data)):
        c = data[off]
        if not 63 <= c <= 126:
            raise ParseError(f"byte {c!r} outside the printable range 63..126", base + off)
        value = c - 63
        bits.extend((value >> s) & 1 for s in range(5, -1, -1))
    edges = []
    v = 0
    i = 0
    while i + 1 + k <= len(bits):
        b = bits[i]
        x = 0
        for t in bits[i + 1 : i + 1 + k]:
            x = (x << 1) | t
        i += 1 + k
        if b:
            v += 1
        if x >= n or v >= n:
            break
        if x > v:
            v = x
        else:
            edges.append((x, v))
    return Graph.from_edges(n, edges, strict=True)


def to_graph6(g: Graph) -> bytes:
    out = bytearray(_encode_size(g.n))
    value = 0
    count = 0
    for j in range(1, g.n):
        for i in range(j):
            value = (value << 1) | (1 if (i, j) in g.edges else 0)
            count += 1
            if count == 6:
                out.append(value + 63)
                value = count = 0
    if count:
        out.append((value << (6 - count)) + 63)
    return bytes(out)


def _parse_edge_list(data: bytes, n: int | None) -> Graph:
    lines = []  # (offset, [tokens with offsets])
    offset = 0
    for raw in data.split(b"\n"):
        line = raw.split(b"#", 1)[0]
        tokens = []
        col = 0
        for tok in line.split():
            col = line.index(tok, col)
            try:
                tokens.append((int(tok), offset + col))
            except ValueError:
                raise ParseError(f"not an integer: {tok.decode(errors='replace')!r}", offset + col) from None
            col += len(tok)
        if tokens:
            if len(tokens) != 2:
                raise ParseError("expected two integers per line", offset)
            lines.append((offset, tokens))
        offset += len(raw) + 1

    header = None
    if lines:
        (_, ((a, _), (b, _))) = lines[0]
        # A first line "n m" is a header when the remaining line count matches m
        # and every later label is below n.  "0 0" stays an edge (a loop).
        rest_max = max((x for _, toks in lines[1:] for x, _ in toks), default=-1)
        if len(lines) - 1 == b and a > 0 and rest_max < a and (n is None or a == n):
            header = (a, b)
            lines = lines[1:]
    if header is not None:
        n = header[0]
    edges = []
    seen = set()
    max_label = -1
    for line_offset, ((u, uo), (v, vo)) in lines:
        if u < 0 or v < 0:
            raise ParseError("negative vertex label", uo if u < 0 else vo)
        if u == v:
            raise GraphError(f"loop at vertex {u} (line at byte {line_offset})")
        e = _edge(u, v)
        if e in seen:
            raise GraphError(f"parallel edge {e} (line at byte {line_offset})")
        seen.add(e)
        edges.append(e)
        max_label = max(max_label, u, v)
    if n is None:
        n = max_label + 1
    if max_label >= n:
        raise GraphError(f"vertex {max_label} out of range for n={n}")
    return Graph(n, frozenset(edges))


def _parse_json(data: bytes) -> Graph:
    try:
        obj = json.loads(data)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.pos) from None
    return graph_from_json(obj)


def graph_from_json(obj: Mapping) -> Graph:
    if not isinstance(obj, Mapping) or "n" not in obj or "edges" not in obj:
        raise ParseError('graph JSON needs keys "n" and "edges"', 0)
    return Graph.from_edges(int(obj["n"]), (tuple(e) for e in obj["edges"]), strict=True)


def graph_to_json(g: Graph) -> dict:
    return {"n": g.n, "edges": [list(e) for e in g.sorted_edges]}


def load_graph(source: bytes | str, format: str = "graph6", n: int | None = None) -> Graph:
    """Parse one graph.

    ``format`` is ``"graph6"`` (sparse6 is recognised by its leading ``:``),
    ``"edge_list"`` (also ``"edgelist"``) or ``"json"``.  For edge lists the
    vertex count comes from an ``n m`` header line, from ``n``, or from the
    largest label.
    """
    if isinstance(source, str):
        source = source.encode()
    if format in ("graph6", "sparse6"):
        base = 0
        data = source.strip()
        lead = len(source) - len(source.lstrip())
        base += lead
        for header in (GRAPH6_HEADER, SPARSE6_HEADER):
            if data.startswith(header):
                data = data[len(header):]
                base += len(header)
        if not data:
            raise ParseError("empty graph6 string", base)
        if data[:1] == b":":
            return _parse_sparse6(data[1:], base + 1)
        if data[:1] == b"&":
            raise ParseError("digraph6 is not supported", base)
        return _parse_graph6(data, base)
    if format in ("edge_list", "edgelist"):
        return _parse_edge_list(source, n)
    if format == "json":
        return _parse_json(source)
    raise ValueError(f"unknown graph format {format!r}")


def load_graphs(source: bytes | str, format: str = "graph6") -> list[Graph]:
    """Parse a multi-graph file: one graph6 string per line, or a JSON list."""
    if isinstance(source, str):
        source = source.encode()
    if format == "json":
        obj = json.loads(source)
        return [graph_from_json(o) for o in (obj if isinstance(obj, list) else [obj])]
    if format in ("graph6", "sparse6"):
        graphs = []
        offset = 0
        for line in source.split(b"\n"):
            if line.strip():
                try:
                    graphs.append(load_graph(line, "graph6"))
                except ParseError as exc:
                    raise ParseError(str(exc).rsplit(" (at byte", 1)[0], offset + exc.offset) from None
            offset += len(line) + 1
        return graphs
    return [load_graph(source, format)]


def dump_graph(g: Graph, format: str = "graph6") -> bytes:
    if format in ("graph6",):
        return to_graph6(g)
    if format in ("edge_list", "edgelist"):
        if g.n == 0:
            # "0 0" would read back as a loop; an empty file loads as the empty graph
            return b""
        lines = [f"{g.n} {g.m}"] + [f"{u} {v}" for u, v in g.sorted_edges]
        return ("\n".join(lines) + "\n").encode()
    if format == "json":
        return json.dumps(graph_to_json(g), sort_keys=True).encode()
    raise ValueError(f"unknown graph format {format!r}")
