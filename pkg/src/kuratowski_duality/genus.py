"""Exact orientable, nonorientable and Euler genus of small graphs.

Embeddings are combinatorial: a rotation (cyclic order of neighbours) at each
vertex plus a sign on each edge.  Faces are the orbits of the usual
face-tracing walk, where crossing a ``-1`` edge flips the direction in which
the next rotation step is taken.

The minimisation does not enumerate complete schemes.  It grows the embedding
one edge at a time: a new vertex is hung off an existing corner, and an edge
between two placed vertices is routed through one corner at each end with one
sign.  Euler genus never decreases as edges are added, so a branch is cut as
soon as its partial Euler genus passes the target, and a branch is also cut
when some pending edge has no two corners on a common face while the target
leaves no room for the +2 a face-merging edge costs.  Every signed rotation
system is reachable (signs on the edges that introduce a vertex are fixed to
+1, which loses nothing up to local switching), so the search is exact.

The budget counts face traces, one per search node tried.  Exhausting it raises
:class:`BudgetExceeded`; it never produces an answer.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from itertools import product
from typing import Iterable, Mapping

from .errors import BudgetExceeded
from .graph import Graph, _edge, disjoint_union
from .planarity import is_planar

DEFAULT_BUDGET = 10**8

ORIENTABLE = "orientable"
EULER = "euler"
NONORIENTABLE = "nonorientable"


# -- embedding schemes ------------------------------------------------------------


@dataclass(frozen=True)
class EmbeddingScheme:
    """Rotation system plus edge signature.

    ``rotation[v]`` lists the neighbours of ``v`` in cyclic order.  ``signature``
    maps each edge ``(u, v)`` with ``u < v`` to +1 or -1; missing edges count as +1.
    """

    rotation: tuple
    signature: Mapping = field(default_factory=dict)

    def sign(self, u: int, v: int) -> int:
        return self.signature.get(_edge(u, v), 1)

    def validate(self, g: Graph) -> None:
        if len(self.rotation) != g.n:
            raise ValueError(f"rotation covers {len(self.rotation)} vertices, graph has {g.n}")
        for v, rot in enumerate(self.rotation):
            if len(rot) != len(set(rot)) or set(rot) != set(g.neighbors(v)):
                raise ValueError(f"rotation at vertex {v} is not a cyclic order of its neighbours")
        for e, s in self.signature.items():
            if _edge(*e) not in g.edges:
                raise ValueError(f"signature on non-edge {e}")
            if s not in (1, -1):
                raise ValueError(f"signature of {e} must be +1 or -1, got {s}")

    def switched(self, v: int) -> "EmbeddingScheme":
        """Local switch at ``v``: reverse its rotation and negate its edge signs."""
        rot = list(self.rotation)
        rot[v] = tuple(reversed(rot[v]))
        sig = dict(self.signature)
        for x in self.rotation[v]:
            e = _edge(v, x)
            sig[e] = -sig.get(e, 1)
        return EmbeddingScheme(tuple(rot), sig)


def spanning_forest(g: Graph) -> list:
    """BFS spanning forest edges, roots at the smallest vertex of each component."""
    seen = [False] * g.n
    tree = []
    for root in range(g.n):
        if seen[root]:
            continue
        seen[root] = True
        queue = deque([root])
        while queue:
            x = queue.popleft()
            for y in sorted(g.neighbors(x)):
                if not seen[y]:
                    seen[y] = True
                    tree.append((x, y))
                    queue.append(y)
    return tree


def normalize_scheme(g: Graph, s: EmbeddingScheme) -> EmbeddingScheme:
    """Equivalent scheme with +1 on every edge of :func:`spanning_forest`."""
    for parent, child in spanning_forest(g):
        if s.sign(parent, child) == -1:
            s = s.switched(child)
    return s


def is_orientable_scheme(g: Graph, s: EmbeddingScheme) -> bool:
    """True iff no cycle carries an odd number of -1 edges."""
    t = normalize_scheme(g, s)
    return all(t.sign(u, v) == 1 for u, v in g.edges)


def _face_orbits(rotation, sign) -> tuple:
    """Count face-tracing orbits.

    ``sign`` maps edges ``(u, v)`` with ``u < v`` to -1 (absent means +1).
    Darts leaving ``v`` are numbered ``base[v] + i`` for ``rotation[v][i]``.
    Returns (number of faces, base, rev, lam, orbit), where ``orbit`` gives the
    orbit id of each state ``2 * dart + o`` with o in {0: +1, 1: -1}.
    """
    base = []
    pos = []
    nd = 0
    for rot in rotation:
        base.append(nd)
        pos.append({x: i for i, x in enumerate(rot)})
        nd += len(rot)
    if nd == 0:
        return 0, base, [], [], []
    nxt = [0] * nd
    prv = [0] * nd
    rev = [0] * nd
    lam = [0] * nd
    get = sign.get
    for v, rot in enumerate(rotation):
        d = len(rot)
        b = base[v]
        for i, x in enumerate(rot):
            a = b + i
            nxt[a] = b + (i + 1) % d
            prv[a] = b + (i - 1) % d
            rev[a] = base[x] + pos[x][v]
            lam[a] = 1 if get((v, x) if v < x else (x, v), 1) == -1 else 0

    orbit = [-1] * (2 * nd)
    count = 0
    for start in range(2 * nd):
        if orbit[start] != -1:
            continue
        state = start
        while orbit[state] == -1:
            orbit[state] = count
            d = state >> 1
            o2 = (state & 1) ^ lam[d]
            back = rev[d]
            state = ((nxt[back] if o2 == 0 else prv[back]) << 1) | o2
        count += 1
    return count // 2, base, rev, lam, orbit


def trace_faces(g: Graph, s: EmbeddingScheme) -> int:
    """Number of faces of the embedding defined by ``s``.

    Each face is traced once in each direction, so this is half the number of
    orbits of the tracing walk.  For a disconnected graph the count is summed
    over components.
    """
    s.validate(g)
    sign = {_edge(*e): v for e, v in s.signature.items() if v == -1}
    faces = _face_orbits(s.rotation, sign)[0]
    # An isolated vertex has no darts but bounds one face of its own sphere.
    faces += sum(1 for v in range(g.n) if g.degree(v) == 0)
    return faces


def scheme_euler_genus(g: Graph, s: EmbeddingScheme) -> int:
    """Euler genus 2c - V + E - F of the (per-component cellular) embedding."""
    c = len(g.components)
    return 2 * c - g.n + g.m - trace_faces(g, s)


def iter_schemes(g: Graph, orientable: bool = False):
    """Every scheme with signature +1 on :func:`spanning_forest` (brute force)."""
    from itertools import permutations

    per_vertex = []
    for v in range(g.n):
        nb = sorted(g.neighbors(v))
        if len(nb) <= 2:
            per_vertex.append([tuple(nb)])
        else:
            first = nb[0]
            per_vertex.append([(first,) + p for p in permutations(nb[1:])])
    tree = {_edge(*e) for e in spanning_forest(g)}
    cotree = [e for e in g.sorted_edges if e not in tree]
    sign_choices = [(1,)] * len(cotree) if orientable else [(1, -1)] * len(cotree)
    for rot in product(*per_vertex):
        for signs in product(*sign_choices):
            yield EmbeddingScheme(tuple(rot), dict(zip(cotree, signs)))


# -- reduction ----------------------------------------------------------------------


def _reduce(n: int, edges: Iterable) -> tuple[int, frozenset]:
    """Strip vertices of degree <= 1 and suppress degree-2 vertices.

    A degree-2 vertex is only suppressed when its neighbours are not already
    adjacent, so the result stays simple.  Both genera are unchanged.
    """
    adj = {v: set() for v in range(n)}
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    changed = True
    while changed:
        changed = False
        for v in sorted(adj):
            if v not in adj:
                continue
            d = len(adj[v])
            if d <= 1:
                for x in adj[v]:
                    adj[x].discard(v)
                del adj[v]
                changed = True
            elif d == 2:
                a, b = sorted(adj[v])
                if b not in adj[a]:
                    adj[a].discard(v)
                    adj[b].discard(v)
                    adj[a].add(b)
                    adj[b].add(a)
                    del adj[v]
                    changed = True
    keep = sorted(adj)
    index = {v: i for i, v in enumerate(keep)}
    out = frozenset(_edge(index[u], index[v]) for u in adj for v in adj[u] if u < v)
    return len(keep), out


def _girth(n: int, adj) -> int:
    best = None
    for s in range(n):
        dist = {s: 0}
        parent = {s: -1}
        queue = deque([s])
        while queue:
            x = queue.popleft()
            for y in adj[x]:
                if y not in dist:
                    dist[y] = dist[x] + 1
                    parent[y] = x
                    queue.append(y)
                elif parent[x] != y:
                    cyc = dist[x] + dist[y] + 1
                    if best is None or cyc < best:
                        best = cyc
    return best if best is not None else 0


# -- the insertion search ------------------------------------------------------------


class _Budget:
    def __init__(self, limit: int):
        self.limit = limit
        self.used = 0

    def spend(self):
        self.used += 1
        if self.used > self.limit:
            raise BudgetExceeded(f"genus search exceeded budget of {self.limit} face traces", used=self.used)


class _InsertionSearch:
    """Decide whether a connected simple graph embeds with Euler genus <= target."""

    def __init__(self, n: int, edges: frozenset, mode: str, target: int, budget: _Budget):
        self.n = n
        self.adj = [[] for _ in range(n)]
        for u, v in sorted(edges):
            self.adj[u].append(v)
            self.adj[v].append(u)
        self.m = len(edges)
        self.mode = mode
        self.target = target
        self.budget = budget
        self.signs = (1,) if mode == ORIENTABLE else (1, -1)

    def run(self) -> bool:
        if self.n == 0:
            return self.mode != NONORIENTABLE and self.target >= 0
        rotation = [[] for _ in range(self.n)]
        placed = [False] * self.n
        placed[0] = True
        pending = set()
        return self._search(rotation, {}, placed, 1, pending, 0, 0)

    def _trace(self, rotation, sign):
        self.budget.spend()
        return _face_orbits(rotation, sign)

    def _search(self, rotation, sign, placed, n_placed, pending, e_placed, twisted) -> bool:
        if e_placed == self.m and self.mode == NONORIENTABLE and twisted == 0:
            return False
        if not pending and e_placed < self.m:
            return self._hang_vertex(rotation, sign, placed, n_placed, e_placed, twisted)

        faces, base, rev, lam, orbit = self._trace(rotation, sign)
        eg = 2 - n_placed + e_placed - faces
        if eg > self.target:
            return False
        if e_placed == self.m:
            return True
        slack = self.target - eg

        corner_face = self._corner_faces(rotation, base, rev, lam, orbit)
        best = None
        for (u, w) in sorted(pending):
            fu = corner_face[u]
            fw = corner_face[w]
            same = sum(1 for a in fu for b in fw if a == b)
            if same == 0 and slack < 2:
                return False
            key = (same, len(fu) * len(fw))
            if best is None or key < best[0]:
                best = (key, (u, w))
        u, w = best[1]
        fu, fw = corner_face[u], corner_face[w]
        pairs = [(i, j) for i in range(len(fu)) for j in range(len(fw))]
        pairs.sort(key=lambda ij: fu[ij[0]] != fw[ij[1]])
        pending.discard((u, w))
        try:
            for i, j in pairs:
                if fu[i] != fw[j] and slack < 2:
                    continue
                for s in self.signs:
                    rotation[u].insert(i + 1, w)
                    rotation[w].insert(j + 1, u)
                    if s == -1:
                        sign[(u, w)] = -1
                    ok = self._search(rotation, sign, placed, n_placed, pending, e_placed + 1, twisted + (s == -1))
                    del rotation[u][i + 1]
                    del rotation[w][j + 1]
                    sign.pop((u, w), None)
                    if ok:
                        return True
        finally:
            pending.add((u, w))
        return False

    @staticmethod
    def _corner_faces(rotation, base, rev, lam, orbit):
        """For each vertex, the face id of each corner (corner i follows rotation[v][i])."""
        pair = {}
        result = []
        for v, rot in enumerate(rotation):
            faces_here = []
            b = base[v]
            for i in range(len(rot)):
                a = b + i
                t = lam[a]
                # arriving along the reverse dart with orientation lam turns positively at v
                orb = orbit[(rev[a] << 1) | t]
                if orb not in pair:
                    # the reverse of state (rev[a], t) is (a, t ^ 1 ^ t) = (a, 1)
                    pair[orb] = orbit[(a << 1) | 1]
                faces_here.append(min(orb, pair[orb]))
            result.append(faces_here)
        return result

    def _hang_vertex(self, rotation, sign, placed, n_placed, e_placed, twisted) -> bool:
        # choose the unplaced vertex with most placed neighbours
        best = None
        for x in range(self.n):
            if placed[x]:
                continue
            k = sum(1 for y in self.adj[x] if placed[y])
            if k and (best is None or k > best[0]):
                best = (k, x)
        if best is None:
            raise AssertionError("search graph is disconnected")
        x = best[1]
        u = min(y for y in self.adj[x] if placed[y])
        new_pending = {_edge(x, y) for y in self.adj[x] if placed[y] and y != u}
        placed[x] = True
        positions = max(1, len(rotation[u]))
        try:
            for i in range(positions):
                rotation[u].insert(i + 1 if rotation[u] else 0, x)
                rotation[x].append(u)
                ok = self._search(rotation, sign, placed, n_placed + 1, set(new_pending), e_placed + 1, twisted)
                rotation[x].pop()
                del rotation[u][i + 1 if len(rotation[u]) > 1 else 0]
                if ok:
                    return True
        finally:
            placed[x] = False
        return False


# -- exact genera of connected graphs ---------------------------------------------------

_cache: dict = {}
_refuted: dict = {}  # key -> smallest target not yet ruled out


def _connected_min_euler(n: int, edges: frozenset, mode: str, budget: _Budget, limit: int | None = None):
    """Minimum Euler genus over embeddings of the given kind; ``None`` if above ``limit``.

    For ``NONORIENTABLE`` the minimum is over schemes with an orientation
    reversing cycle (none exist for forests, which return ``None``).
    """
    key = (n, edges, mode)
    if key in _cache:
        value = _cache[key]
        return value if limit is None or (value is not None and value <= limit) else None

    rn, redges = _reduce(n, edges)
    if mode == NONORIENTABLE and len(edges) - n + 1 <= 0:
        _cache[key] = None
        return None
    if rn == 0 or not redges:
        if mode == NONORIENTABLE:
            value = 1
        else:
            value = 0
        _cache[key] = value
        return value if limit is None or value <= limit else None

    adj = [set() for _ in range(rn)]
    for u, v in redges:
        adj[u].add(v)
        adj[v].add(u)
    m = len(redges)
    girth = _girth(rn, adj) or 3
    lower = max(0, m - rn + 2 - (2 * m) // girth)
    graph = Graph(rn, redges)
    if lower == 0 and not is_planar(graph):
        lower = 1
    if mode == NONORIENTABLE:
        lower = max(lower, 1)
    step = 2 if mode == ORIENTABLE else 1
    if mode == ORIENTABLE and lower % 2:
        lower += 1
    cycle_rank = m - rn + 1
    # a spanning tree plus one face-merging edge at a time never exceeds the cycle rank
    upper = cycle_rank + (1 if mode == NONORIENTABLE else 0)
    t = max(lower, _refuted.get(key, lower))
    while t <= upper + 1:
        if limit is not None and t > limit:
            return None
        if _InsertionSearch(rn, redges, mode, t, budget).run():
            _cache[key] = t
            return t
        t += step
        _refuted[key] = t
    raise AssertionError("no embedding found below the cycle-rank bound")


def _component_graphs(g: Graph):
    for comp in g.components:
        sub, _ = g.induced(comp)
        yield sub


def _value(g: Graph, mode: str, budget: int, limit: int | None = None):
    b = _Budget(budget)
    return [_connected_min_euler(c.n, c.edges, mode, b, limit) for c in _component_graphs(g)]


def euler_genus_exact(g: Graph, budget: int = DEFAULT_BUDGET) -> int:
    """Minimum Euler genus, summed over connected components."""
    return sum(_value(g, EULER, budget))


def orientable_genus_exact(g: Graph, budget: int = DEFAULT_BUDGET) -> int:
    """Minimum orientable genus, summed over connected components."""
    return sum(v // 2 for v in _value(g, ORIENTABLE, budget))


def nonorientable_genus_connected(g: Graph, budget: int = DEFAULT_BUDGET) -> int:
    """Fewest crosscaps of a nonorientable surface hosting the connected graph ``g``.

    Planar graphs (and trees) report 1: they embed in the projective plane.
    """
    if not g.is_connected():
        raise ValueError("nonorientable_genus_connected needs a connected graph")
    if g.m == 0 or is_planar(g):
        return 1
    eg = euler_genus_exact(g, budget)
    orient = orientable_genus_exact(g, budget)
    if eg < 2 * orient:
        return eg
    # eg == 2 * orientable genus: some nonorientable embedding reaches eg, or eg + 1 does
    b = _Budget(budget)
    got = _connected_min_euler(g.n, g.edges, NONORIENTABLE, b, limit=eg)
    return eg if got is not None else eg + 1


# -- reports and surfaces ----------------------------------------------------------


@dataclass(frozen=True)
class GenusReport:
    euler_genus: int
    orientable_genus: int
    per_component: tuple  # ((euler, orientable), ...) in component order

    @property
    def genus(self) -> int:
        """Smallest total genus (handles or crosscaps, summed) of a surface hosting the graph."""
        return sum(min(o, e) for e, o in self.per_component)

    def to_json(self) -> dict:
        return {
            "euler_genus": self.euler_genus,
            "orientable_genus": self.orientable_genus,
            "genus": self.genus,
            "per_component": [list(p) for p in self.per_component],
        }


def genus_report(g: Graph, budget: int = DEFAULT_BUDGET) -> GenusReport:
    b = _Budget(budget)
    per = []
    for c in _component_graphs(g):
        e = _connected_min_euler(c.n, c.edges, EULER, b)
        o = _connected_min_euler(c.n, c.edges, ORIENTABLE, b) // 2
        per.append((e, o))
    return GenusReport(sum(e for e, _ in per), sum(o for _, o in per), tuple(per))


def surface_genus_at_most(g: Graph, k: int, budget: int = DEFAULT_BUDGET) -> bool:
    """Can ``g`` be drawn in some (possibly disconnected) surface of total genus <= k?

    Each component goes on its own surface component, orientable or not,
    whichever needs fewer handles/crosscaps; that is never worse than sharing.
    """
    b = _Budget(budget)
    remaining = k
    comps = [c for c in _component_graphs(g) if c.m >= 9 and not is_planar(c)]
    if len(comps) > k:
        return False
    for c in comps:
        # min(orientable genus, euler genus) <= remaining
        e = _connected_min_euler(c.n, c.edges, EULER, b, limit=remaining)
        best = e
        if best is None or best > 1:
            o = _connected_min_euler(c.n, c.edges, ORIENTABLE, b, limit=2 * remaining)
            if o is not None:
                best = o // 2 if best is None else min(best, o // 2)
        if best is None or best > remaining:
            return False
        remaining -= best
    return True


@dataclass(frozen=True)
class SurfaceSpec:
    """A possibly disconnected closed surface: (orientable, genus) per component."""

    components: tuple

    def __post_init__(self):
        comps = tuple((bool(o), int(gn)) for o, gn in self.components)
        if not comps:
            raise ValueError("a surface needs at least one component")
        for o, gn in comps:
            if gn < 0 or (not o and gn < 1):
                raise ValueError(f"invalid surface component {(o, gn)}")
        object.__setattr__(self, "components", comps)

    @property
    def genus(self) -> int:
        return sum(gn for _, gn in self.components)

    def to_json(self) -> dict:
        return {"components": [{"orientable": o, "genus": gn} for o, gn in self.components]}

    @classmethod
    def from_json(cls, data: Mapping) -> "SurfaceSpec":
        return cls(tuple((bool(c["orientable"]), int(c["genus"])) for c in data["components"]))

    def __str__(self):
        return " + ".join(("S" if o else "N") + str(gn) for o, gn in self.components)


def surface_catalog(total_genus: int, max_components: int) -> list:
    """Every surface with the given total genus and 1..max_components components."""
    parts = [(True, gn) for gn in range(total_genus + 1)] + [(False, gn) for gn in range(1, total_genus + 1)]
    out = []

    def extend(prefix, start, remaining, slots):
        if prefix and remaining == 0:
            out.append(SurfaceSpec(tuple(prefix)))
        if slots == 0:
            return
        for idx in range(start, len(parts)):
            o, gn = parts[idx]
            if gn <= remaining:
                extend(prefix + [(o, gn)], idx, remaining - gn, slots - 1)

    if total_genus >= 0:
        extend([], 0, total_genus, max_components)
    return out


def can_draw(h: Graph, spec: SurfaceSpec, budget: int = DEFAULT_BUDGET) -> bool:
    """Is there a drawing of ``h`` in the surface ``spec``?

    Components of ``h`` are distributed over the surface components.  A bundle
    fits an orientable component of genus g when its orientable genera sum to at
    most g.  It fits a nonorientable component with g crosscaps when, for some
    member, that member's nonorientable genus plus the other members' Euler
    genera is at most g.
    """
    b = _Budget(budget)
    comps = [c for c in _component_graphs(h) if c.m >= 9 and not is_planar(c)]
    info = []
    for c in comps:
        e = _connected_min_euler(c.n, c.edges, EULER, b)
        o = _connected_min_euler(c.n, c.edges, ORIENTABLE, b) // 2
        info.append((c, e, o))
    nonor = {}

    def crosscaps(i):
        if i not in nonor:
            nonor[i] = nonorientable_genus_connected(info[i][0], budget)
        return nonor[i]

    slots = spec.components
    assignment = [[] for _ in slots]

    def fits(slot_index):
        orientable, cap = slots[slot_index]
        members = assignment[slot_index]
        if not members:
            return True
        if orientable:
            return sum(info[i][2] for i in members) <= cap
        total_e = sum(info[i][1] for i in members)
        if total_e > cap:
            return False
        return any(crosscaps(i) + total_e - info[i][1] <= cap for i in members)

    def place(i):
        if i == len(info):
            return all(fits(s) for s in range(len(slots)))
        for s in range(len(slots)):
            assignment[s].append(i)
            orientable, cap = slots[s]
            partial = sum(info[j][2] if orientable else info[j][1] for j in assignment[s])
            if partial <= cap and place(i + 1):
                assignment[s].pop()
                return True
            assignment[s].pop()
        return False

    return place(0)


@dataclass(frozen=True)
class KuratowskiGenusReport:
    k: int
    passed: bool
    checked: int
    counterexample: tuple | None = None  # (component kinds, surface, expected, got)

    def to_json(self) -> dict:
        ce = None
        if self.counterexample is not None:
            kinds, spec, expected, got = self.counterexample
            ce = {"components": list(kinds), "surface": spec.to_json(), "expected": expected, "got": got}
        return {"k": self.k, "passed": self.passed, "checked": self.checked, "counterexample": ce}


def verify_kuratowski_genus(k: int, budget: int = DEFAULT_BUDGET) -> KuratowskiGenusReport:
    """Check, for every k-component Kuratowski graph, drawability at total genus k-1 and k.

    Surfaces come from :func:`surface_catalog` with up to k+1 components; every
    one of total genus k-1 must refuse the graph and every one of total genus k
    must accept it.
    """
    from itertools import combinations_with_replacement

    from .graph import K5, K33

    if k > 3:
        raise ValueError("verify_kuratowski_genus is limited to k <= 3")
    if k < 0:
        raise ValueError("k must be nonnegative")
    builders = {"K5": K5, "K33": K33}
    checked = 0
    for kinds in combinations_with_replacement(("K5", "K33"), k):
        h = disjoint_union(*(builders[x]() for x in kinds)) if kinds else Graph(0)
        for total, expected in ((k - 1, False), (k, True)):
            for spec in surface_catalog(total, k + 1):
                got = can_draw(h, spec, budget)
                checked += 1
                if got != expected:
                    return KuratowskiGenusReport(k, False, checked, (kinds, spec, expected, got))
    return KuratowskiGenusReport(k, True, checked)
