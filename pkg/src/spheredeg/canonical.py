"""Canonical labelling of genus graphs up to based isomorphism.

Individualisation-refinement search: colour refinement on
(basepoint, genus, loop count, neighbour multiset), then branch on the first
smallest non-singleton cell, keeping the lexicographically least encoding of
the resulting vertex order. Children that are *twins* (same colour, same
multiplicities to every other vertex) are swapped by an automorphism, so only
one per twin class is explored; this keeps stars with many equal leaves cheap.
"""
from __future__ import annotations

from .graph import GenusGraph, _require_valid


def _matrix(g: GenusGraph):
    idx = {v.id: i for i, v in enumerate(g.vertices)}
    k = len(g.vertices)
    m = [[0] * k for _ in range(k)]
    for e in g.edges:
        a, b = idx[e.ends[0]], idx[e.ends[1]]
        m[a][b] += 1
        if a != b:
            m[b][a] += 1
    labels = [(0 if v.basepoint else 1, v.genus) for v in g.vertices]
    return labels, m


def _rank(sigs):
    order = {s: r for r, s in enumerate(sorted(set(sigs)))}
    return [order[s] for s in sigs]


def _refine(colours, m):
    k = len(colours)
    while True:
        sigs = [
            (colours[i], m[i][i], tuple(sorted((colours[j], m[i][j]) for j in range(k) if j != i and m[i][j])))
            for i in range(k)
        ]
        new = _rank(sigs)
        if len(set(new)) == len(set(colours)):
            return new
        colours = new


def _twin_classes(cell, m):
    k = len(m)
    classes: list[list[int]] = []
    for v in cell:
        for cls in classes:
            u = cls[0]
            if m[u][u] == m[v][v] and all(m[u][x] == m[v][x] for x in range(k) if x not in (u, v)):
                cls.append(v)
                break
        else:
            classes.append([v])
    return classes


def _encode(order, labels, m):
    k = len(order)
    head = tuple(labels[i] for i in order)
    body = tuple(m[order[a]][order[b]] for a in range(k) for b in range(a, k))
    return head, body


def canonical_order(g: GenusGraph) -> list[int]:
    """Vertex ids in canonical order (basepoint first)."""
    _require_valid(g)
    labels, m = _matrix(g)
    best: list = [None, None]

    def search(colours):
        colours = _refine(colours, m)
        k = len(colours)
        if len(set(colours)) == k:
            order = sorted(range(k), key=colours.__getitem__)
            code = _encode(order, labels, m)
            if best[0] is None or code < best[0]:
                best[0], best[1] = code, order
            return
        cells: dict[int, list[int]] = {}
        for i, c in enumerate(colours):
            cells.setdefault(c, []).append(i)
        target = min((c for c in cells.values() if len(c) > 1), key=lambda c: (len(c), colours[c[0]]))
        for cls in _twin_classes(target, m):
            v = cls[0]
            search(_rank([(c, 0 if i == v else 1) for i, c in enumerate(colours)]))

    search(_rank(labels))
    return [g.vertices[i].id for i in best[1]]


def canonical_form(g: GenusGraph) -> bytes:
    """Byte string equal for two graphs iff they are based-isomorphic.

    Layout: ``V:`` genus of each vertex in canonical order (basepoint marked
    with ``*``), then ``E:`` the upper triangle of the multiplicity matrix.
    """
    order = canonical_order(g)
    genus = {v.id: v.genus for v in g.vertices}
    pos = {vid: i for i, vid in enumerate(order)}
    k = len(order)
    m = [[0] * k for _ in range(k)]
    for e in g.edges:
        a, b = pos[e.ends[0]], pos[e.ends[1]]
        m[a][b] += 1
        if a != b:
            m[b][a] += 1
    head = ",".join(("*" if i == 0 else "") + str(genus[vid]) for i, vid in enumerate(order))
    body = ",".join(
        f"{a}-{b}x{m[a][b]}" for a in range(k) for b in range(a, k) if m[a][b]
    )
    return f"V:{head};E:{body}".encode("ascii")


def canonical_graph(g: GenusGraph) -> GenusGraph:
    """Representative with vertices 0..k-1 in canonical order and edges sorted."""
    order = canonical_order(g)
    pos = {vid: i for i, vid in enumerate(order)}
    genus = {v.id: v.genus for v in g.vertices}
    vs = [(i, genus[vid], i == 0) for i, vid in enumerate(order)]
    ends = sorted(tuple(sorted((pos[e.ends[0]], pos[e.ends[1]]))) for e in g.edges)
    return GenusGraph.build(vs, [(i, a, b) for i, (a, b) in enumerate(ends)])
