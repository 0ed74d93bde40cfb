"""
Degree of a dual graph and what collapsing does to it
=====================================================

A sphere system in a doubled handlebody with one boundary sphere is recorded
by its dual graph: one vertex per complementary component, labelled by that
component's genus, and one edge per sphere. The basepoint vertex is the
component holding the boundary sphere.
"""

from spheredeg import GenusGraph, collapse_edge, degree, graph_stats, pillar_edges, pillar_graph

# Two parallel edges from a genus-0 basepoint to a genus-1 vertex.
g = GenusGraph.build([(0, 0, True), (1, 1, False)], [(0, 0, 1), (1, 0, 1)])
print("degree:", degree(g))            # valence 2 + 2*1 - 2 = 2
print("stats: ", graph_stats(g))

# Both edges touch the basepoint, so both belong to the pillar. Collapsing a
# pillar edge lowers the degree; here the survivor is a rose with one loop.
print("pillar:", sorted(pillar_edges(g)))
h = collapse_edge(g, 0)
print("after collapsing edge 0:", degree(h), "(rose)" if h.is_rose else "")

# %%
# A chain: basepoint -- v1 -- v2. Only the first edge is a pillar edge, and
# collapsing the rest leaves the degree alone.
chain = GenusGraph.build(
    [(0, 1, True), (1, 1, False), (2, 1, False)],
    [(0, 0, 1), (1, 1, 2)],
)
for e in chain.edges:
    kind = "pillar" if e.id in pillar_edges(chain) else "other"
    print(f"edge {e.id} ({kind}): degree {degree(chain)} -> {degree(collapse_edge(chain, e.id))}")

p = pillar_graph(chain)
print("pillar graph has", len(p.vertices), "vertices and degree", degree(p))
