"""Corpus runs of the packing/apex duality, reported as CSV."""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from typing import Iterable, Sequence

from . import generators
from .errors import BudgetExceeded
from .genus import DEFAULT_BUDGET
from .graph import Graph
from .packing import DEFAULT_CAP, DEFAULT_NODE_BUDGET, duality_report, k_number, planar_deletion_set

COLUMNS = (
    "index",
    "n",
    "m",
    "k",
    "k_number",
    "outcome",
    "apex_size",
    "achieved_genus",
    "planar_deletion",
    "verified",
    "status",
)


def mixed_corpus(count: int, seed: int, max_n: int = 12) -> list:
    """Random graphs, apex-over-planar graphs and Kuratowski graphs, in rotation."""
    rng = generators._rng(seed)
    out = []
    for i in range(count):
        sub = int(rng.integers(1 << 62))
        kind = i % 4
        if kind == 0:
            n = int(rng.integers(5, max_n + 1))
            out.append(generators.random_graph(n, float(rng.uniform(0.15, 0.5)), sub))
        elif kind == 1:
            apex = int(rng.integers(1, 3))
            base = int(rng.integers(4, max_n - apex + 1))
            out.append(generators.apex_planar(base, apex, sub, density=float(rng.uniform(0.3, 0.8))))
        elif kind == 2:
            k = int(rng.integers(1, 3)) if max_n >= 10 else 1
            kinds = [("K5", "K33")[int(x)] for x in rng.integers(0, 2, size=k)]
            if sum(5 if x == "K5" else 6 for x in kinds) > max_n:
                kinds = kinds[:1]
            out.append(generators.kuratowski(len(kinds), kinds))
        else:
            n = int(rng.integers(6, max_n + 1))
            out.append(generators.random_graph(n, float(rng.uniform(0.3, 0.6)), sub))
    return out


@dataclass(frozen=True)
class SurveyRow:
    index: int
    n: int
    m: int
    k: int
    k_number: int | None
    outcome: str
    apex_size: int | None
    achieved_genus: int | None
    planar_deletion: int | None
    verified: bool
    status: str

    def as_list(self) -> list:
        return ["" if getattr(self, c) is None else getattr(self, c) for c in COLUMNS]


def survey_rows(
    graphs: Sequence[Graph],
    ks: Iterable[int],
    budget: int = DEFAULT_BUDGET,
    budget_nodes: int = DEFAULT_NODE_BUDGET,
    cap: int = DEFAULT_CAP,
) -> list:
    """One row per (graph, k).  Budget failures become rows with status ``budget``."""
    ks = list(ks)
    rows = []
    for idx, g in enumerate(graphs):
        try:
            knum, _ = k_number(g, "exact", cap)
            pd = planar_deletion_set(g, budget_nodes)
            pd_size = len(pd.apex_set) if pd.optimal else None
        except BudgetExceeded:
            for k in ks:
                rows.append(SurveyRow(idx, g.n, g.m, k, None, "", None, None, None, False, "budget"))
            continue
        for k in ks:
            try:
                rep = duality_report(g, k, budget, budget_nodes, cap)
            except BudgetExceeded:
                rows.append(SurveyRow(idx, g.n, g.m, k, knum, "", None, None, pd_size, False, "budget"))
                continue
            ok = rep.verify(g, budget)
            apex_size = len(rep.apex.apex_set) if rep.apex is not None else None
            genus = rep.apex.achieved.genus if rep.apex is not None else None
            rows.append(SurveyRow(idx, g.n, g.m, k, knum, rep.outcome, apex_size, genus, pd_size, ok, "ok"))
    return rows


def max_apex_by_k(rows: Sequence[SurveyRow]) -> dict:
    out = {}
    for r in rows:
        if r.apex_size is not None:
            out[r.k] = max(out.get(r.k, 0), r.apex_size)
    return out


def render_csv(rows: Sequence[SurveyRow]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(COLUMNS)
    for r in rows:
        w.writerow(r.as_list())
    ks = sorted({r.k for r in rows})
    best = max_apex_by_k(rows)
    footer = "; ".join(f"k={k}: {best.get(k, 'n/a')}" for k in ks)
    buf.write(f"# max apex_size per k: {footer}\n")
    return buf.getvalue()
