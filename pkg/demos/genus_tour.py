"""Exact genus of a few classic graphs, and what fits on which surface.

Run: python demos/genus_tour.py
"""

from kuratowski_duality import SurfaceSpec, can_draw, genus_report, nonorientable_genus_connected
from kuratowski_duality.graph import K5, K33, complete_bipartite, complete_graph, disjoint_union, petersen_graph

GRAPHS = {
    "K5": K5(),
    "K3,3": K33(),
    "Petersen": petersen_graph(),
    "K6": complete_graph(6),
    "K7": complete_graph(7),
    "K4,4": complete_bipartite(4, 4),
}

print(f"{'graph':10} {'euler':>6} {'handles':>8} {'crosscaps':>10}")
for name, g in GRAPHS.items():
    rep = genus_report(g)
    print(f"{name:10} {rep.euler_genus:>6} {rep.orientable_genus:>8} {nonorientable_genus_connected(g):>10}")

# K7 triangulates the torus but needs three crosscaps on the nonorientable side
k7 = complete_graph(7)
for spec in (SurfaceSpec(((True, 1),)), SurfaceSpec(((False, 2),)), SurfaceSpec(((False, 3),))):
    print(spec.components, "->", can_draw(k7, spec))

# two disjoint K5s need total genus 2, which a pair of tori or a double torus provides
two = disjoint_union(K5(), K5())
print("K5+K5 on one torus:", can_draw(two, SurfaceSpec(((True, 1),))))
print("K5+K5 on two tori:", can_draw(two, SurfaceSpec(((True, 1), (True, 1)))))
