"""Transversal number, matching number and the pairwise-private parameter of hypergraphs.

``lambda_exact`` uses this reading of the definition: hyperedges A_1..A_k
qualify when every pair A_i, A_j shares a vertex lying in no other A_h among
the k selected ones.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Mapping, Sequence


@dataclass(frozen=True)
class Hypergraph:
    n: int
    hyperedges: tuple

    def __post_init__(self):
        edges = tuple(frozenset(int(v) for v in e) for e in self.hyperedges)
        for i, e in enumerate(edges):
            if not e:
                raise ValueError(f"hyperedge {i} is empty")
            bad = [v for v in e if not (0 <= v < self.n)]
            if bad:
                raise ValueError(f"hyperedge {i} has vertex {bad[0]} outside 0..{self.n - 1}")
        object.__setattr__(self, "hyperedges", edges)

    @property
    def m(self) -> int:
        return len(self.hyperedges)

    def to_json(self) -> dict:
        return {"n": self.n, "edges": [sorted(e) for e in self.hyperedges]}

    @classmethod
    def from_json(cls, data: Mapping) -> "Hypergraph":
        return cls(int(data["n"]), tuple(tuple(e) for e in data["edges"]))


def tau_exact(h: Hypergraph) -> int:
    """Minimum hitting set size, by branch and bound with iterative deepening."""
    return len(min_hitting_set(h))


def min_hitting_set(h: Hypergraph) -> tuple:
    """A lexicographically early minimum hitting set."""
    edges = sorted(set(h.hyperedges), key=lambda e: (len(e), sorted(e)))
    if not edges:
        return ()

    def search(chosen: list, limit: int):
        unhit = next((e for e in edges if not e.intersection(chosen)), None)
        if unhit is None:
            return list(chosen)
        if len(chosen) == limit:
            return None
        # disjoint unhit edges each need their own vertex
        need, used = 0, set()
        for e in edges:
            if not e.intersection(chosen) and not e & used:
                need += 1
                used |= e
        if len(chosen) + need > limit:
            return None
        for v in sorted(unhit):
            chosen.append(v)
            found = search(chosen, limit)
            chosen.pop()
            if found is not None:
                return found
        return None

    for limit in range(len(edges) + 1):
        found = search([], limit)
        if found is not None:
            return tuple(sorted(found))
    raise AssertionError("unreachable: one vertex per edge always hits")


def max_matching(h: Hypergraph) -> tuple:
    """Indices of a maximum family of pairwise disjoint hyperedges."""
    edges = list(h.hyperedges)
    best: list = []

    def search(i: int, chosen: list, covered: frozenset):
        nonlocal best
        if len(chosen) > len(best):
            best = list(chosen)
        if i == len(edges):
            return
        # optimistic bound: every remaining edge disjoint from the cover
        rest = sum(1 for e in edges[i:] if not e & covered)
        if len(chosen) + rest <= len(best):
            return
        if not edges[i] & covered:
            chosen.append(i)
            search(i + 1, chosen, covered | edges[i])
            chosen.pop()
        search(i + 1, chosen, covered)

    search(0, [], frozenset())
    return tuple(best)


def nu_exact(h: Hypergraph) -> int:
    return len(max_matching(h))


@dataclass(frozen=True)
class LambdaCertificate:
    """Selected hyperedge indices and, per pair (i, j), a private shared vertex."""

    indices: tuple
    private: dict

    def to_json(self) -> dict:
        return {
            "indices": list(self.indices),
            "private": [[i, j, v] for (i, j), v in sorted(self.private.items())],
        }


def private_vertices(sets: Sequence[frozenset]) -> dict | None:
    """Map each pair (i, j) to its smallest private common vertex, or None if a pair has none."""
    out = {}
    for i, j in combinations(range(len(sets)), 2):
        common = sets[i] & sets[j]
        for h, s in enumerate(sets):
            if h != i and h != j:
                common = common - s
        if not common:
            return None
        out[(i, j)] = min(common)
    return out


def lambda_certificate(h: Hypergraph) -> LambdaCertificate | None:
    """A largest qualifying selection, or None for the empty hypergraph.

    Selections are grown in index order.  The property is closed under taking
    subfamilies (removing a set only enlarges private intersections), so a
    qualifying family of size k+1 always extends one of size k and the search
    can prune any prefix that already fails.
    """
    # Repeated sets are collapsed: taken literally, two copies of {a} would
    # qualify as a pair and push lambda up with no change to tau or nu.
    first = {}
    for idx, e in enumerate(h.hyperedges):
        first.setdefault(e, idx)
    distinct = sorted(first.values())
    if not distinct:
        return None
    best = ([distinct[0]], {})

    def search(pos: int, chosen: list):
        nonlocal best
        if len(chosen) + (len(distinct) - pos) <= len(best[0]):
            return
        for p in range(pos, len(distinct)):
            idx = distinct[p]
            trial = chosen + [idx]
            priv = private_vertices([h.hyperedges[i] for i in trial])
            if priv is None:
                continue
            if len(trial) > len(best[0]):
                best = (trial, {(trial[a], trial[b]): v for (a, b), v in priv.items()})
            search(p + 1, trial)

    search(0, [])
    return LambdaCertificate(tuple(best[0]), best[1])


def lambda_exact(h: Hypergraph) -> int:
    cert = lambda_certificate(h)
    return 0 if cert is None else len(cert.indices)


def ding_bound(lam: int, nu: int) -> int:
    """11 λ² (λ + ν + 3) C(λ + ν, ν)², in exact integer arithmetic."""
    if lam < 0 or nu < 0:
        raise ValueError("lambda and nu must be nonnegative")
    return 11 * lam * lam * (lam + nu + 3) * comb(lam + nu, nu) ** 2


@dataclass(frozen=True)
class PackCoverMetrics:
    tau: int
    nu: int
    lam: int
    ding_bound: int

    @property
    def passed(self) -> bool:
        return self.nu <= self.tau <= self.ding_bound

    def to_json(self) -> dict:
        return {
            "tau": self.tau,
            "nu": self.nu,
            "lambda": self.lam,
            "ding_bound": self.ding_bound,
            "pass": self.passed,
        }


def verify_ding_bound(h: Hypergraph) -> PackCoverMetrics:
    """Exact metrics; ``.passed`` says whether tau <= ding_bound(lambda, nu) held."""
    tau, nu, lam = tau_exact(h), nu_exact(h), lambda_exact(h)
    return PackCoverMetrics(tau, nu, lam, ding_bound(lam, nu))
