"""Low-order separations, the planar-side tangle, and tangle axiom checks.

A separation with interface I is fixed by sending each component of G - I to
one side and each edge with both ends in I to one side, so enumeration walks
interfaces of size < theta and then those choices.  This lists every
separation, not only those with a minimal interface.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product
from typing import Iterable, Mapping

from .errors import BudgetExceeded
from .graph import Graph, Separation
from .planarity import planar_edge_set

MAX_THETA = 4
MAX_EDGES = 24
MAX_SEPARATIONS = 2_000_000


def _check_caps(g: Graph, theta: int, max_theta: int, max_edges: int) -> None:
    if theta > max_theta:
        raise BudgetExceeded(f"theta={theta} exceeds the cap of {max_theta}")
    if g.m > max_edges:
        raise BudgetExceeded(f"{g.m} edges exceed the cap of {max_edges}")


def iter_oriented_separations(g: Graph, theta: int, max_theta: int = MAX_THETA, max_edges: int = MAX_EDGES):
    """Every ordered separation (A, B) of order < theta, interface by interface."""
    _check_caps(g, theta, max_theta, max_edges)
    produced = 0
    for size in range(min(theta, g.n + 1)):
        for interface in combinations(range(g.n), size):
            iset = frozenset(interface)
            rest, back = g.delete_vertices(iset)
            inverse = {new: old for old, new in back.items()}
            comps = [frozenset(inverse[v] for v in c) for c in rest.components]
            comp_edges = [frozenset(e for e in g.edges if e[0] in c or e[1] in c) for c in comps]
            inner = [e for e in g.sorted_edges if e[0] in iset and e[1] in iset]
            for sides in product((0, 1), repeat=len(comps)):
                lv, rv = set(iset), set(iset)
                le, re = set(), set()
                for c, ce, s in zip(comps, comp_edges, sides):
                    (lv if s == 0 else rv).update(c)
                    (le if s == 0 else re).update(ce)
                for esides in product((0, 1), repeat=len(inner)):
                    produced += 1
                    if produced > MAX_SEPARATIONS:
                        raise BudgetExceeded(f"more than {MAX_SEPARATIONS} separations")
                    le2 = set(le)
                    re2 = set(re)
                    for e, s in zip(inner, esides):
                        (le2 if s == 0 else re2).add(e)
                    yield Separation(frozenset(lv), frozenset(rv), frozenset(le2), frozenset(re2))


def enumerate_separations(
    g: Graph, theta: int, oriented: bool = False, max_theta: int = MAX_THETA, max_edges: int = MAX_EDGES
) -> list:
    """All separations of order < theta in a fixed order.

    Unoriented output keeps each unordered pair once, in the orientation whose
    sort key is smaller; ``oriented=True`` lists both orientations.
    """
    if theta <= 0:
        return []
    seps = set(iter_oriented_separations(g, theta, max_theta, max_edges))
    if not oriented:
        seps = {min(s, s.reversed(), key=Separation.sort_key) for s in seps}
    return sorted(seps, key=Separation.sort_key)


def _is_planar_side(vertices: frozenset, edges: frozenset) -> bool:
    return planar_edge_set(edges)


@dataclass(frozen=True)
class Tangle:
    order: int
    members: tuple

    def __post_init__(self):
        object.__setattr__(self, "members", tuple(sorted(set(self.members), key=Separation.sort_key)))

    def to_json(self, g: Graph) -> dict:
        return {"order": self.order, "members": [s.to_json(g) for s in self.members]}

    @classmethod
    def from_json(cls, g: Graph, data: Mapping) -> "Tangle":
        return cls(int(data["order"]), tuple(Separation.from_json(g, s) for s in data["members"]))


@dataclass(frozen=True)
class TangleCheck:
    passed: bool
    axiom: int | None = None  # first failed axiom, 0 for a malformed member
    witness: tuple = ()  # offending separation(s)
    matted: bool = False

    def to_json(self, g: Graph) -> dict:
        return {
            "pass": self.passed,
            "axiom": self.axiom,
            "witness": [s.to_json(g) for s in self.witness],
            "matted": self.matted,
        }


@dataclass(frozen=True)
class TangleResult:
    outcome: str  # "tangle", "both_sides_nonplanar" or "axiom_violation"
    tangle: Tangle | None = None
    separation: Separation | None = None
    violation: TangleCheck | None = None

    def to_json(self, g: Graph) -> dict:
        out = {"outcome": self.outcome}
        if self.tangle is not None:
            out["tangle"] = self.tangle.to_json(g)
        if self.separation is not None:
            out["separation"] = self.separation.to_json(g)
        if self.violation is not None:
            out["violation"] = self.violation.to_json(g)
        return out


def _side_mask(g: Graph, s: Separation, edge_bit: Mapping) -> int:
    mask = 0
    for v in s.left_vertices:
        mask |= 1 << v
    for e in s.left_edges:
        mask |= edge_bit[e]
    return mask


def _find_covering_triple(g: Graph, members: list):
    """Three members (repeats allowed) whose A sides together are all of G, or None."""
    edge_bit = {e: 1 << (g.n + i) for i, e in enumerate(g.sorted_edges)}
    full = (1 << (g.n + g.m)) - 1
    masks = {}
    for s in members:
        masks.setdefault(_side_mask(g, s, edge_bit), s)
    # only inclusion-maximal sides matter
    ordered = sorted(masks, key=lambda m: (-bin(m).count("1"), m))
    maximal = []
    for m in ordered:
        if not any(m & k == m for k in maximal):
            maximal.append(m)
    for i, mi in enumerate(maximal):
        for j in range(i, len(maximal)):
            mij = mi | maximal[j]
            missing = full & ~mij
            for k in range(j, len(maximal)):
                if maximal[k] & missing == missing:
                    return masks[mi], masks[maximal[j]], masks[maximal[k]]
    return None


def verify_tangle_axioms(g: Graph, t: Tangle, max_theta: int = MAX_THETA, max_edges: int = MAX_EDGES) -> TangleCheck:
    """Check the axioms exhaustively (axiom 3 first, then 1, then 2) and report mattedness."""
    members = list(t.members)
    matted = all(_is_planar_side(s.left_vertices, s.left_edges) for s in members)
    for s in members:
        if not s.is_valid(g) or s.order >= t.order:
            return TangleCheck(False, 0, (s,), matted)
    everything = frozenset(range(g.n))
    for s in members:
        if s.left_vertices == everything:
            return TangleCheck(False, 3, (s,), matted)
    member_set = set(members)
    for s in enumerate_separations(g, t.order, max_theta=max_theta, max_edges=max_edges):
        if s not in member_set and s.reversed() not in member_set:
            return TangleCheck(False, 1, (s,), matted)
    triple = _find_covering_triple(g, members)
    if triple is not None:
        return TangleCheck(False, 2, triple, matted)
    return TangleCheck(True, None, (), matted)


def planar_side_tangle(g: Graph, theta: int, max_theta: int = MAX_THETA, max_edges: int = MAX_EDGES) -> TangleResult:
    """Orient each separation of order < theta towards its planar side.

    If some separation has two nonplanar sides it is returned instead.
    Otherwise the set of all (A, B) with A planar (both orientations when both
    sides are planar) is checked against the axioms.
    """
    seps = enumerate_separations(g, theta, oriented=True, max_theta=max_theta, max_edges=max_edges)
    planar = {s: _is_planar_side(s.left_vertices, s.left_edges) for s in seps}
    for s in seps:
        if not planar[s] and not planar[s.reversed()]:
            return TangleResult("both_sides_nonplanar", separation=s)
    tangle = Tangle(theta, tuple(s for s in seps if planar[s]))
    check = verify_tangle_axioms(g, tangle, max_theta, max_edges)
    if not check.passed:
        return TangleResult("axiom_violation", tangle=tangle, violation=check)
    return TangleResult("tangle", tangle=tangle)


def _restrict(s: Separation, keep: dict) -> Separation:
    return Separation(
        frozenset(keep[v] for v in s.left_vertices if v in keep),
        frozenset(keep[v] for v in s.right_vertices if v in keep),
        frozenset((keep[u], keep[v]) for u, v in s.left_edges if u in keep and v in keep),
        frozenset((keep[u], keep[v]) for u, v in s.right_edges if u in keep and v in keep),
    )


def tangle_minus(g: Graph, t: Tangle, z: Iterable[int]) -> tuple[Graph, Tangle, dict]:
    """The induced tangle in G minus Z, of order theta - |Z| (requires |Z| < theta).

    Its members are the (A - Z, B - Z) for members (A, B) with Z inside the
    interface, kept when their order drops below the new order.
    """
    zset = frozenset(z)
    if len(zset) >= t.order:
        raise ValueError("|Z| must be smaller than the tangle order")
    h, keep = g.delete_vertices(zset)
    order = t.order - len(zset)
    members = []
    for s in t.members:
        if zset <= s.interface:
            r = _restrict(s, keep)
            if r.order < order:
                members.append(r)
    return h, Tangle(order, tuple(members)), keep
