"""Packing K-graphs, planarizing and genus-targeted apex sets, and the duality report.

A vertex set S carries a K-graph exactly when G[S] is nonplanar, so packing
vertex-disjoint K-graphs is maximum set packing over the inclusion-minimal
nonplanar vertex sets.  Those are enumerated by the usual dualization
recursion: find one minimal set S inside the allowed vertices U, then recurse
on U - v for every v in S.  Any other minimal set misses some v in S and is
found below that branch.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

from .errors import BudgetExceeded
from .genus import DEFAULT_BUDGET, GenusReport, genus_report, surface_genus_at_most
from .graph import Graph
from .planarity import KGraphWitness, kuratowski_witness, planar_edge_set, verify_kgraph_witness

DEFAULT_CAP = 5000
DEFAULT_NODE_BUDGET = 200_000


def _planar_on(g: Graph, vertices: frozenset) -> bool:
    return planar_edge_set(e for e in g.edges if e[0] in vertices and e[1] in vertices)


def minimal_nonplanar_set(g: Graph, vertices: frozenset | None = None) -> frozenset | None:
    """An inclusion-minimal vertex set inducing a nonplanar graph, or None."""
    current = frozenset(range(g.n)) if vertices is None else frozenset(vertices)
    if _planar_on(g, current):
        return None
    # greedy shrink, smallest labels first
    for v in sorted(current):
        trial = current - {v}
        if not _planar_on(g, trial):
            current = trial
    return current


def witness_on(g: Graph, vertices: frozenset) -> KGraphWitness:
    """A K-graph of ``g`` using only ``vertices`` (which must induce a nonplanar graph)."""
    sub, index = g.induced(vertices)
    w = kuratowski_witness(sub)
    if w is None:
        raise ValueError("vertex set induces a planar graph")
    back = {new: old for old, new in index.items()}
    return w.relabel(back)


@dataclass(frozen=True)
class KGraphFamily:
    sets: tuple  # sorted by (size, labels)
    exhaustive: bool

    def witnesses(self, g: Graph) -> list:
        return [witness_on(g, s) for s in self.sets]


def enumerate_minimal_kgraph_sets(g: Graph, cap: int = DEFAULT_CAP) -> KGraphFamily:
    """Up to ``cap`` minimal nonplanar vertex sets; ``exhaustive`` says whether all were found."""
    found = set()
    visited = set()
    exhaustive = True

    def recurse(allowed: frozenset):
        nonlocal exhaustive
        if allowed in visited or not exhaustive:
            return
        visited.add(allowed)
        # reuse a known set when one fits
        s = next((f for f in found if f <= allowed), None)
        if s is None:
            s = minimal_nonplanar_set(g, allowed)
            if s is None:
                return
            found.add(s)
            if len(found) > cap:
                exhaustive = False
                return
        for v in sorted(s):
            recurse(allowed - {v})

    recurse(frozenset(range(g.n)))
    sets = sorted(found, key=lambda s: (len(s), sorted(s)))
    if not exhaustive:
        sets = sets[:cap]
    return KGraphFamily(tuple(sets), exhaustive)


def enumerate_minimal_kgraphs(g: Graph, cap: int = DEFAULT_CAP) -> tuple[list, bool]:
    """Witnesses on the minimal nonplanar vertex sets, plus the exhaustiveness flag."""
    fam = enumerate_minimal_kgraph_sets(g, cap)
    return fam.witnesses(g), fam.exhaustive


# -- packing ----------------------------------------------------------------------


@dataclass(frozen=True)
class PackingCertificate:
    witnesses: tuple

    def verify(self, g: Graph) -> bool:
        used = set()
        for w in self.witnesses:
            if not verify_kgraph_witness(g, w):
                return False
            if used & w.vertices:
                return False
            used |= w.vertices
        return True

    def to_json(self) -> dict:
        return {"size": len(self.witnesses), "witnesses": [w.to_json() for w in self.witnesses]}


def max_disjoint(sets: Sequence[frozenset], n: int, stop_at: int | None = None) -> list:
    """A maximum pairwise disjoint subfamily (first in include-before-exclude order)."""
    sets = list(sets)
    masks = [sum(1 << v for v in s) for s in sets]
    min_size = min((len(s) for s in sets), default=1)
    best: list = []

    def search(i: int, chosen: list, used: int, free: int):
        nonlocal best
        if len(chosen) > len(best):
            best = list(chosen)
            if stop_at is not None and len(best) >= stop_at:
                return True
        if i == len(sets):
            return False
        if len(chosen) + free // min_size <= len(best):
            return False
        if masks[i] & used == 0:
            chosen.append(i)
            if search(i + 1, chosen, used | masks[i], free - len(sets[i])):
                return True
            chosen.pop()
        return search(i + 1, chosen, used, free)

    search(0, [], 0, n)
    return [sets[i] for i in best]


def greedy_packing(g: Graph) -> list:
    """Repeatedly take a minimal nonplanar set and delete it."""
    out = []
    remaining = frozenset(range(g.n))
    while True:
        s = minimal_nonplanar_set(g, remaining)
        if s is None:
            return out
        out.append(s)
        remaining = remaining - s


def k_number(g: Graph, mode: str = "exact", cap: int = DEFAULT_CAP, stop_at: int | None = None):
    """(K-number, certificate).  ``lower`` mode is a greedy lower bound.

    In exact mode a non-exhaustive enumeration raises :class:`BudgetExceeded`.
    ``stop_at`` ends the search once a packing of that size is found.
    """
    if mode == "lower":
        sets = greedy_packing(g)
    elif mode == "exact":
        fam = enumerate_minimal_kgraph_sets(g, cap)
        if not fam.exhaustive:
            raise BudgetExceeded(
                f"more than {cap} minimal K-graph vertex sets; raise the cap or use lower mode"
            )
        sets = max_disjoint(fam.sets, g.n, stop_at)
    else:
        raise ValueError(f"unknown mode {mode!r}")
    sets = sorted(sets, key=lambda s: sorted(s))
    return len(sets), PackingCertificate(tuple(witness_on(g, s) for s in sets))


# -- apex sets ---------------------------------------------------------------------


@dataclass(frozen=True)
class PlanarDeletion:
    apex_set: tuple
    optimal: bool

    def to_json(self) -> dict:
        return {"apex_set": list(self.apex_set), "optimal": self.optimal}


def _greedy_planarizer(g: Graph) -> tuple:
    deleted = set()
    remaining = frozenset(range(g.n))
    while True:
        s = minimal_nonplanar_set(g, remaining)
        if s is None:
            return tuple(sorted(deleted))
        v = max(sorted(s), key=lambda x: len(g.neighbors(x) & remaining))
        deleted.add(v)
        remaining = remaining - {v}


def planar_deletion_set(g: Graph, budget_nodes: int = DEFAULT_NODE_BUDGET) -> PlanarDeletion:
    """Smallest X with G - X planar, lexicographically first among the smallest.

    Iterative deepening, branching on the vertices of a minimal nonplanar set
    of the current graph.  Running out of nodes returns a greedy X flagged
    non-optimal.
    """
    spent = 0
    all_v = frozenset(range(g.n))

    def too_dense(remaining: frozenset, depth: int) -> bool:
        # even deleting the `depth` highest degrees leaves more than 3n - 6 edges
        degs = sorted((len(g.neighbors(v) & remaining) for v in remaining), reverse=True)
        m = sum(degs) // 2
        n_left = len(remaining) - depth
        return n_left >= 3 and m - sum(degs[:depth]) > 3 * n_left - 6

    def collect(remaining: frozenset, depth: int, out: set, seen: set):
        nonlocal spent
        if remaining in seen:
            return
        seen.add(remaining)
        spent += 1
        if spent > budget_nodes:
            raise BudgetExceeded("planar deletion search ran out of nodes")
        s = minimal_nonplanar_set(g, remaining)
        if s is None:
            out.add(tuple(sorted(all_v - remaining)))
            return
        if depth == 0 or too_dense(remaining, depth):
            return
        if depth < 3 and len(greedy_packing(g.induced(remaining)[0])) > depth:
            return
        for v in sorted(s):
            collect(remaining - {v}, depth - 1, out, seen)

    try:
        for size in range(len(greedy_packing(g)), g.n + 1):
            solutions: set = set()
            collect(all_v, size, solutions, set())
            if solutions:
                return PlanarDeletion(min(solutions), True)
    except BudgetExceeded:
        return PlanarDeletion(_greedy_planarizer(g), False)
    raise AssertionError("deleting every vertex leaves a planar graph")


@dataclass(frozen=True)
class ApexCertificate:
    apex_set: tuple
    target_genus: int
    achieved: GenusReport

    def verify(self, g: Graph, budget: int = DEFAULT_BUDGET) -> bool:
        rest, _ = g.delete_vertices(self.apex_set)
        return surface_genus_at_most(rest, self.target_genus, budget) and self.achieved.genus <= self.target_genus

    def to_json(self) -> dict:
        return {
            "apex_set": list(self.apex_set),
            "target_genus": self.target_genus,
            "achieved": self.achieved.to_json(),
        }


def apex_to_genus(
    g: Graph, k: int, budget: int = DEFAULT_BUDGET, budget_nodes: int = DEFAULT_NODE_BUDGET
) -> ApexCertificate | None:
    """Smallest X, then lexicographically first, with G - X drawable in a surface of genus <= k.

    Sizes start at (greedy packing size) - k, since each surviving disjoint
    K-graph costs one unit of genus, and stop at the planar deletion size.
    Returns None only when the planar deletion search itself gave up.
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    lower = max(0, len(greedy_packing(g)) - k)
    pd = planar_deletion_set(g, budget_nodes)
    upper = len(pd.apex_set)
    checked = 0
    for size in range(lower, upper + 1):
        for x in combinations(range(g.n), size):
            checked += 1
            if checked > budget_nodes:
                raise BudgetExceeded("apex search ran out of candidate sets")
            rest, _ = g.delete_vertices(x)
            if len(greedy_packing(rest)) > k:
                continue
            if surface_genus_at_most(rest, k, budget):
                return ApexCertificate(tuple(x), k, genus_report(rest, budget))
    if pd.optimal:
        raise AssertionError("planar deletion set failed the genus test")
    return None


# -- duality ------------------------------------------------------------------------


@dataclass(frozen=True)
class DualityReport:
    k: int
    outcome: str  # "packing", "apex" or "apex_not_found"
    packing: PackingCertificate | None = None
    apex: ApexCertificate | None = None

    def verify(self, g: Graph, budget: int = DEFAULT_BUDGET) -> bool:
        if self.outcome == "packing":
            return (
                self.apex is None
                and self.packing is not None
                and len(self.packing.witnesses) == self.k + 1
                and self.packing.verify(g)
            )
        if self.outcome == "apex":
            return self.packing is None and self.apex is not None and self.apex.verify(g, budget)
        return False

    def to_json(self) -> dict:
        out = {"k": self.k, "outcome": self.outcome}
        if self.packing is not None:
            out["packing"] = self.packing.to_json()
        if self.apex is not None:
            out["apex"] = self.apex.to_json()
        return out


def duality_report(
    g: Graph,
    k: int,
    budget: int = DEFAULT_BUDGET,
    budget_nodes: int = DEFAULT_NODE_BUDGET,
    cap: int = DEFAULT_CAP,
) -> DualityReport:
    """Either k+1 disjoint K-graphs or an apex set X with G - X of genus <= k."""
    size, cert = k_number(g, "exact", cap, stop_at=k + 1)
    if size >= k + 1:
        return DualityReport(k, "packing", packing=PackingCertificate(cert.witnesses[: k + 1]))
    apex = apex_to_genus(g, k, budget, budget_nodes)
    if apex is None:
        return DualityReport(k, "apex_not_found")
    return DualityReport(k, "apex", apex=apex)
