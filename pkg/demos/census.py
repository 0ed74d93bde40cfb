"""
A census of dual-graph types
============================

Every simplex of bounded degree in the simplicial closure of Auter space is,
up to the group action, one of finitely many genus-labelled graphs. This
script lists them for small rank and checks the collapse lemma on all of
them.
"""

from spheredeg import enumerate_types, verify_suite
from spheredeg.enumeration import census_rows, pillar_arithmetic

print(" n  d  types")
for n in range(1, 5):
    counts = [len(enumerate_types(n=n, d=d)) for d in range(4)]
    print(f"{n:2d}", "  ".join(f"d{d}:{c:3d}" for d, c in enumerate(counts)))

# Degree zero means every vertex but the basepoint is gone: only roses remain.
for g in enumerate_types(n=3, d=0):
    print("rose: basepoint genus", g.basepoint.genus, "with", len(g.edges), "loops")

# Rows of the CSV census: (n, d, dim, degree, count).
for row in census_rows(3, 2, enumerate_types(n=3, d=2)):
    print(row)

# Every suite is an exhaustive loop over the same census.
for name in ("collapse-lemma", "pillar-identity", "rank-identity", "pillar-arithmetic"):
    rep = verify_suite(name, 4, 3)
    print(f"{name:18s} graphs={rep.graphs_checked:4d} pairs={rep.pairs_checked:5d} passed={rep.passed}")

# The arithmetic behind the connectivity count of a pillar's low link.
for n in range(1, 5):
    for g in enumerate_types(n=n, d=3):
        info = pillar_arithmetic(g)
        if info:
            print({k: info[k] for k in ("n", "k", "dim", "degree", "join_connectivity")})
