"""Recognition of combinatorial spheres and balls in dimensions 0, 1, 2.

Answers are ``True``/``False`` for ``dim <= 2``. Above that, ``False`` is
returned when a necessary homological condition fails and ``None``
("unverified") otherwise: PL recognition is not attempted there.
"""
from __future__ import annotations

from collections import Counter

from .simplicial import SimplicialComplex, from_faces, link, reduced_homology


def _pure(K: SimplicialComplex, dim: int) -> bool:
    return not K.is_empty and all(len(f) == dim + 1 for f in K.facets)


def _connected(K: SimplicialComplex) -> bool:
    vs = K.vertices
    if not vs:
        return False
    adj = {v: set() for v in vs}
    for f in K.facets:
        for v in f:
            adj[v] |= f - {v}
    seen = {vs[0]}
    stack = [vs[0]]
    while stack:
        for w in adj[stack.pop()]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == len(vs)


def _graph_degrees(K: SimplicialComplex) -> Counter:
    deg: Counter = Counter({v: 0 for v in K.vertices})
    for f in K.facets:
        for v in f:
            deg[v] += 1
    return deg


def _is_cycle(K) -> bool:
    return _pure(K, 1) and _connected(K) and all(c == 2 for c in _graph_degrees(K).values())


def _is_path(K) -> bool:
    if K.is_empty:
        return False
    if len(K.vertices) == 1 and K.dim == 0:
        return False
    if not (_pure(K, 1) and _connected(K)):
        return False
    degs = sorted(_graph_degrees(K).values())
    return len(K.facets) == len(K.vertices) - 1 and degs[-1] <= 2


def _edge_triangle_counts(K) -> Counter:
    counts: Counter = Counter()
    for f in K.facets:
        for v in f:
            counts[f - {v}] += 1
    return counts


def _surface_checks(K, allow_boundary: bool):
    """Return the boundary edges of a connected combinatorial surface, or None."""
    if not (_pure(K, 2) and _connected(K)):
        return None
    counts = _edge_triangle_counts(K)
    boundary = [e for e, c in counts.items() if c == 1]
    if any(c > 2 for c in counts.values()):
        return None
    if boundary and not allow_boundary:
        return None
    for v in K.vertices:
        lk = link(K, {v})
        if not (_is_cycle(lk) or (allow_boundary and _is_path(lk))):
            return None
    return boundary


def is_combinatorial_sphere(K: SimplicialComplex, dim: int) -> bool | None:
    if dim == -1:
        return K.is_empty
    if dim == 0:
        return len(K.facets) == 2 and K.dim == 0
    if dim == 1:
        return _is_cycle(K)
    if dim == 2:
        boundary = _surface_checks(K, allow_boundary=False)
        return boundary is not None and K.euler_characteristic() == 2
    if not _pure(K, dim):
        return False
    h = reduced_homology(K)
    if any(h.rank(i) or h.torsion(i) for i in range(dim)) or h.rank(dim) != 1:
        return False
    return None


def is_combinatorial_ball(K: SimplicialComplex, dim: int) -> bool | None:
    if dim == 0:
        return len(K.facets) == 1 and K.dim == 0
    if dim == 1:
        return _is_path(K)
    if dim == 2:
        boundary = _surface_checks(K, allow_boundary=True)
        if not boundary:
            return False
        return _is_cycle(from_faces(boundary)) and K.euler_characteristic() == 1
    if not _pure(K, dim):
        return False
    if not reduced_homology(K).is_trivial:
        return False
    return None


def ball_boundary(K: SimplicialComplex, dim: int) -> SimplicialComplex:
    """Boundary subcomplex of a pure ``dim``-complex: codim-1 faces in one facet."""
    if dim == 0:
        return SimplicialComplex.empty()
    counts = _edge_triangle_counts(K)
    return from_faces(f for f, c in counts.items() if c == 1)
