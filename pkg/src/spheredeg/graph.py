"""Genus-labelled based multigraphs.

A :class:`GenusGraph` is the dual graph of a sphere system in the manifold
``#_n S^1 x S^2`` minus one ball: one vertex per complementary component
(labelled by its genus), one edge per sphere. Exactly one vertex carries the
basepoint. Parallel edges and self-loops are ordinary edges.

Everything here is a pure function of immutable values.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable

from .errors import InvalidGraphError, NoSuchEdgeError


@dataclass(frozen=True, order=True)
class Vertex:
    id: int
    genus: int = 0
    basepoint: bool = False


@dataclass(frozen=True, order=True)
class Edge:
    id: int
    ends: tuple[int, int]

    def __post_init__(self):
        u, w = self.ends
        if u > w:
            object.__setattr__(self, "ends", (w, u))

    @property
    def is_loop(self) -> bool:
        return self.ends[0] == self.ends[1]


@dataclass(frozen=True)
class GenusGraph:
    vertices: tuple[Vertex, ...]
    edges: tuple[Edge, ...] = ()

    @classmethod
    def build(cls, vertices, edges=()) -> "GenusGraph":
        """Convenience constructor.

        ``vertices`` is an iterable of ``(id, genus, basepoint)`` triples or
        :class:`Vertex` objects; ``edges`` of ``(id, u, w)`` triples, ``(u, w)``
        pairs (ids assigned in order) or :class:`Edge` objects.
        """
        vs = tuple(v if isinstance(v, Vertex) else Vertex(*v) for v in vertices)
        es = []
        for i, e in enumerate(edges):
            if isinstance(e, Edge):
                es.append(e)
            elif len(e) == 2:
                es.append(Edge(i, (e[0], e[1])))
            else:
                es.append(Edge(e[0], (e[1], e[2])))
        return cls(vs, tuple(es))

    def vertex(self, vid: int) -> Vertex:
        for v in self.vertices:
            if v.id == vid:
                return v
        raise KeyError(vid)

    def edge(self, eid: int) -> Edge:
        for e in self.edges:
            if e.id == eid:
                return e
        raise NoSuchEdgeError(eid)

    @property
    def basepoint(self) -> Vertex:
        (v0,) = [v for v in self.vertices if v.basepoint]
        return v0

    @property
    def edge_ids(self) -> frozenset[int]:
        return frozenset(e.id for e in self.edges)

    @property
    def is_rose(self) -> bool:
        return len(self.vertices) == 1


@dataclass(frozen=True)
class GraphStats:
    valences: dict[int, int]
    rank_pi1: int
    total_genus: int
    n: int
    dim: int


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple[str, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self) -> bool:
        return self.ok


def valences(g: GenusGraph) -> dict[int, int]:
    """Half-edge count at each vertex; a self-loop contributes 2."""
    val = {v.id: 0 for v in g.vertices}
    for e in g.edges:
        u, w = e.ends
        val[u] += 1
        val[w] += 1
    return val


def _is_connected(g: GenusGraph) -> bool:
    if not g.vertices:
        return False
    adj: dict[int, set[int]] = {v.id: set() for v in g.vertices}
    for e in g.edges:
        u, w = e.ends
        adj[u].add(w)
        adj[w].add(u)
    start = g.vertices[0].id
    seen = {start}
    stack = [start]
    while stack:
        for w in adj[stack.pop()]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == len(adj)


def validate_graph(g: GenusGraph) -> ValidationReport:
    """Check every dual-graph invariant; violations are returned, not raised."""
    out: list[str] = []
    vids = [v.id for v in g.vertices]
    eids = [e.id for e in g.edges]
    for vid, c in Counter(vids).items():
        if c > 1:
            out.append(f"duplicate vertex id {vid}")
    for eid, c in Counter(eids).items():
        if c > 1:
            out.append(f"duplicate edge id {eid}")
    known = set(vids)
    for e in g.edges:
        for end in e.ends:
            if end not in known:
                out.append(f"edge {e.id}: unknown endpoint {end}")
    for v in g.vertices:
        if v.genus < 0:
            out.append(f"vertex {v.id}: negative genus {v.genus}")
    base = [v.id for v in g.vertices if v.basepoint]
    if len(base) != 1:
        out.append(f"expected exactly one basepoint, found {len(base)}")
    if out:
        # structural damage; the remaining checks would be meaningless
        return ValidationReport(tuple(out))

    if not _is_connected(g):
        out.append("graph is disconnected")
    val = valences(g)
    for v in g.vertices:
        if v.basepoint:
            continue
        if val[v.id] + 2 * v.genus < 3:
            out.append(
                f"vertex {v.id}: valence {val[v.id]} + 2*genus {v.genus} < 3"
            )
    v0 = g.basepoint
    if v0.genus == 0 and val[v0.id] == 1 and len(g.vertices) >= 2:
        out.append(
            f"basepoint {v0.id}: genus 0 and valence 1 (boundary-parallel sphere)"
        )
    total = sum(v.genus for v in g.vertices) + len(g.edges) - len(g.vertices) + 1
    if total < 1:
        out.append(f"total genus + rank(pi1) = {total} < 1")
    return ValidationReport(tuple(out))


def _require_valid(g: GenusGraph) -> None:
    report = validate_graph(g)
    if not report.ok:
        raise InvalidGraphError(report.violations)


def graph_stats(g: GenusGraph) -> GraphStats:
    _require_valid(g)
    rank = len(g.edges) - len(g.vertices) + 1
    total_genus = sum(v.genus for v in g.vertices)
    return GraphStats(
        valences=valences(g),
        rank_pi1=rank,
        total_genus=total_genus,
        n=total_genus + rank,
        dim=len(g.edges) - 1,
    )


def degree(g: GenusGraph) -> int:
    """Sum of ``valence + 2*genus - 2`` over the non-basepoint vertices."""
    _require_valid(g)
    val = valences(g)
    return sum(val[v.id] + 2 * v.genus - 2 for v in g.vertices if not v.basepoint)


def pillar_edges(g: GenusGraph) -> frozenset[int]:
    """Edges joining the basepoint to a different vertex."""
    _require_valid(g)
    b = g.basepoint.id
    return frozenset(
        e.id for e in g.edges if not e.is_loop and b in e.ends
    )


def _collapse(g: GenusGraph, e: Edge) -> GenusGraph:
    u, w = e.ends
    rest = tuple(x for x in g.edges if x.id != e.id)
    if u == w:
        vs = tuple(
            Vertex(v.id, v.genus + 1, v.basepoint) if v.id == u else v
            for v in g.vertices
        )
        return GenusGraph(vs, rest)
    vu, vw = g.vertex(u), g.vertex(w)
    # The basepoint keeps its id; otherwise the smaller id survives, which
    # makes repeated collapses independent of their order.
    if vw.basepoint:
        keep, gone = vw, vu
    elif vu.basepoint:
        keep, gone = vu, vw
    else:
        keep, gone = (vu, vw) if vu.id < vw.id else (vw, vu)
    merged = Vertex(keep.id, keep.genus + gone.genus, keep.basepoint or gone.basepoint)
    vs = tuple(merged if v.id == keep.id else v for v in g.vertices if v.id != gone.id)
    es = tuple(
        Edge(x.id, tuple(keep.id if end == gone.id else end for end in x.ends))
        for x in rest
    )
    return GenusGraph(vs, es)


def collapse_edge(g: GenusGraph, eid: int) -> GenusGraph:
    """Contract edge ``eid``.

    A self-loop is removed and its vertex gains one genus; an edge between
    distinct vertices merges them, adding genera. All other ids are kept, so
    the edges of the result are literally a subset of the edges of ``g``.
    """
    _require_valid(g)
    return _collapse(g, g.edge(eid))


def collapse_edges(g: GenusGraph, eids: Iterable[int]) -> GenusGraph:
    """Contract several edges in the given order."""
    _require_valid(g)
    for eid in eids:
        g = _collapse(g, g.edge(eid))
    return g


def restrict_to(g: GenusGraph, keep: Iterable[int]) -> GenusGraph:
    """Dual graph of the face spanned by the edges ``keep``.

    Collapses every other edge. The result does not depend on the order in
    which they are collapsed.
    """
    keep = set(keep)
    missing = keep - g.edge_ids
    if missing:
        raise NoSuchEdgeError(min(missing))
    return collapse_edges(g, sorted(g.edge_ids - keep))


def pillar_graph(g: GenusGraph) -> GenusGraph:
    """Collapse non-pillar edges until only pillar edges remain."""
    _require_valid(g)
    while True:
        b = g.basepoint.id
        todo = [e for e in g.edges if e.is_loop or b not in e.ends]
        if not todo:
            return g
        g = _collapse(g, todo[0])


def is_pillar(g: GenusGraph) -> bool:
    return pillar_edges(g) == g.edge_ids


def relabel(g: GenusGraph, vmap: dict[int, int], emap: dict[int, int] | None = None) -> GenusGraph:
    """Rename vertex ids (and optionally edge ids); orders are preserved."""
    emap = emap or {}
    vs = tuple(Vertex(vmap.get(v.id, v.id), v.genus, v.basepoint) for v in g.vertices)
    es = tuple(
        Edge(emap.get(e.id, e.id), (vmap.get(e.ends[0], e.ends[0]), vmap.get(e.ends[1], e.ends[1])))
        for e in g.edges
    )
    return GenusGraph(vs, es)


def normalized(g: GenusGraph) -> GenusGraph:
    """Sort vertices and edges by id; handy for comparing collapse results."""
    return GenusGraph(tuple(sorted(g.vertices)), tuple(sorted(g.edges)))


def rose(genus: int = 0, loops: int = 0) -> GenusGraph:
    return GenusGraph.build([(0, genus, True)], [(0, 0)] * loops)
