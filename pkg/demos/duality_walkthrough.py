"""Packing Kuratowski subdivisions against deleting apex vertices.

For each graph the script prints the K-number (most vertex-disjoint K5/K3,3
subdivisions), the smallest planarizing vertex set, and the duality report for
a few target genera.  Run: python demos/duality_walkthrough.py
"""

from kuratowski_duality import duality_report, k_number, planar_deletion_set
from kuratowski_duality import generators
from kuratowski_duality.graph import complete_graph, petersen_graph

GRAPHS = {
    "K6": complete_graph(6),
    "Petersen": petersen_graph(),
    "K5+K3,3": generators.kuratowski(2, ["K5", "K33"]),
    "3 x K5": generators.kuratowski(3, ["K5", "K5", "K5"]),
    "apex over planar": generators.apex_planar(8, 1, seed=4),
}

for name, g in GRAPHS.items():
    knum, cert = k_number(g)
    cover = planar_deletion_set(g)
    print(f"== {name}: n={g.n} m={g.m}")
    print(f"   K-number {knum}; planarizing set {list(cover.apex_set)}")
    for w in cert.witnesses:
        print(f"   packed {w.kind} on branch vertices {list(w.branch_vertices)}")
    for k in (0, 1, 2):
        rep = duality_report(g, k)
        if rep.outcome == "packing":
            print(f"   k={k}: {k + 1} disjoint K-graph{'s' if k else ''}")
        else:
            print(f"   k={k}: delete {list(rep.apex.apex_set)} to reach genus {rep.apex.achieved.genus}")
