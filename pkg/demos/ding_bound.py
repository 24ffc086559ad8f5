"""Transversal and matching numbers against the Ding bound on random hypergraphs.

Run: python demos/ding_bound.py
"""

from kuratowski_duality import generators, verify_ding_bound

print(f"{'seed':>4} {'tau':>4} {'nu':>3} {'lambda':>7} {'bound':>12}")
for seed in range(8):
    h = generators.hypergraph(8, 7, 4, seed)
    r = verify_ding_bound(h)
    print(f"{seed:>4} {r.tau:>4} {r.nu:>3} {r.lam:>7} {r.ding_bound:>12} {'ok' if r.passed else 'FAIL'}")
