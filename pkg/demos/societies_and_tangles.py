"""Crosses in societies, the five-path configuration, and a matted tangle in K6.

Run: python demos/societies_and_tangles.py
"""

from kuratowski_duality import Society, find_cross, is_rural, verify_cross_config_nonplanar
from kuratowski_duality.graph import complete_graph, cycle_graph
from kuratowski_duality.society import check_cross_config, extremal_cross_config
from kuratowski_duality.tangles import planar_side_tangle, verify_tangle_axioms

# a cycle with its vertices on the boundary in order is rural; shuffle the order and a cross appears
c5 = cycle_graph(5)
for boundary in ((0, 1, 2, 3, 4), (0, 2, 1, 3)):
    s = Society(c5, boundary)
    print(f"C5 boundary {boundary}: cross={find_cross(s)} rural={is_rural(s)}")

cfg = extremal_cross_config()
check_cross_config(cfg)
print(f"extremal configuration: t={cfg.t}, {cfg.graph.n} vertices, planar={verify_cross_config_nonplanar(cfg)}")

k6 = complete_graph(6)
res = planar_side_tangle(k6, 4)
check = verify_tangle_axioms(k6, res.tangle)
print(f"K6, order 4: {res.outcome} with {len(res.tangle.members)} members, matted={check.matted}")
print("C4, order 1:", planar_side_tangle(cycle_graph(4), 1).outcome)
