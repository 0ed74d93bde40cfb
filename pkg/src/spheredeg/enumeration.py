"""Exhaustive census of dual-graph types of bounded degree.

For fixed ``n`` and degree bound ``d`` there are finitely many
basepoint/genus-preserving isomorphism classes of valid dual graphs: each
non-basepoint vertex contributes at least 1 to the degree, so there are at
most ``d`` of them, and ``n = total_genus + #edges - #non_basepoint`` caps the
edge count at ``n + d``.

The generator works leaf-weight first. Each non-basepoint vertex ``v`` gets a
weight ``valence(v) + 2*genus(v) >= 3`` with ``sum(weight - 2) <= d``; then a
genus split, then the multiplicities of edges among non-basepoint vertices
(the rest of each valence goes to pillar edges), and finally the basepoint
genus and loops are fixed by ``n``. Candidates are validated, canonicalised
and deduplicated.
"""
from __future__ import annotations

import itertools
import os
import time
from collections import Counter
from dataclasses import dataclass

from .canonical import canonical_form, canonical_graph
from .errors import ResourceLimitError
from .reports import VerificationReport
from .graph import (
    GenusGraph,
    collapse_edge,
    degree,
    graph_stats,
    is_pillar,
    pillar_edges,
    pillar_graph,
    validate_graph,
)

DEFAULT_CAP = 12
CAP_OVERRIDE_ENV = "SPHEREDEG_ALLOW_LARGE"


@dataclass(frozen=True)
class EnumerationRequest:
    n: int
    d: int
    include_empty: bool = False

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"n must be >= 1, got {self.n}")
        if self.d < 0:
            raise ValueError(f"d must be >= 0, got {self.d}")


def _cap_overridden() -> bool:
    return os.environ.get(CAP_OVERRIDE_ENV, "").lower() in ("1", "true", "yes")


def check_cap(n: int, d: int, cap: int = DEFAULT_CAP, allow_large: bool = False) -> None:
    if n + d > cap and not (allow_large or _cap_overridden()):
        raise ResourceLimitError(
            f"n + d = {n + d} exceeds the cap {cap}; pass allow_large=True "
            f"or set {CAP_OVERRIDE_ENV}=1"
        )


def _symmetric_fills(valence, k):
    """All symmetric multiplicity matrices among ``k`` leaves whose row sums
    (loops counted twice) stay within ``valence``."""
    pairs = [(i, j) for i in range(k) for j in range(i, k)]
    used = [0] * k
    m = {}

    def rec(t):
        if t == len(pairs):
            yield dict(m)
            return
        i, j = pairs[t]
        cost_i = 2 if i == j else 1
        limit = (valence[i] - used[i]) // cost_i
        if i != j:
            limit = min(limit, valence[j] - used[j])
        for c in range(limit + 1):
            m[(i, j)] = c
            used[i] += c * cost_i
            if i != j:
                used[j] += c
            yield from rec(t + 1)
            used[i] -= c * cost_i
            if i != j:
                used[j] -= c
        del m[(i, j)]

    yield from rec(0)


def _candidates(n: int, d: int):
    """Yield candidate graphs (not yet deduplicated) with stats.n == n, degree <= d."""
    for k in range(0, d + 1):
        # leaf weights w >= 3 with sum(w - 2) <= d, non-increasing
        for excess in itertools.combinations_with_replacement(range(d, 0, -1), k):
            if sum(excess) > d:
                continue
            weights = [e + 2 for e in excess]
            genus_choices = [range(0, (w - 1) // 2 + 1) for w in weights]
            for genera in itertools.product(*genus_choices):
                val = [w - 2 * gg for w, gg in zip(weights, genera)]
                for fill in _symmetric_fills(val, k):
                    inner = sum(fill.values())
                    rowsum = [0] * k
                    for (i, j), c in fill.items():
                        if i == j:
                            rowsum[i] += 2 * c
                        else:
                            rowsum[i] += c
                            rowsum[j] += c
                    pillars = [val[i] - rowsum[i] for i in range(k)]
                    n_edges_known = inner + sum(pillars)
                    slack = n + k - sum(genera) - n_edges_known  # = g0 + loops at v0
                    if slack < 0:
                        continue
                    for g0 in range(slack + 1):
                        loops0 = slack - g0
                        verts = [(0, g0, True)] + [(i + 1, genera[i], False) for i in range(k)]
                        edges = [(0, 0)] * loops0
                        for i in range(k):
                            edges += [(0, i + 1)] * pillars[i]
                        for (i, j), c in sorted(fill.items()):
                            edges += [(i + 1, j + 1)] * c
                        yield GenusGraph.build(verts, edges)


def enumerate_types(
    req: EnumerationRequest | None = None,
    *,
    n: int | None = None,
    d: int | None = None,
    include_empty: bool = False,
    cap: int = DEFAULT_CAP,
    allow_large: bool = False,
) -> list[GenusGraph]:
    """One canonical representative per isomorphism class, deterministically sorted.

    Sorted by ``(dim, degree, canonical_form)``. The edgeless graph is only
    included when ``include_empty`` is set.
    """
    if req is None:
        req = EnumerationRequest(n, d, include_empty)
    check_cap(req.n, req.d, cap, allow_large)
    seen: dict[bytes, GenusGraph] = {}
    for g in _candidates(req.n, req.d):
        if not validate_graph(g).ok:
            continue
        if not g.edges and not req.include_empty:
            continue
        key = canonical_form(g)
        if key not in seen:
            seen[key] = canonical_graph(g)
    out = [(len(g.edges) - 1, degree(g), key, g) for key, g in seen.items()]
    out.sort(key=lambda t: t[:3])
    return [t[3] for t in out]


def census_rows(n: int, d: int, graphs: list[GenusGraph]) -> list[tuple[int, int, int, int, int]]:
    """(n, d, dim, degree, count) rows for the CSV census, sorted."""
    counts = Counter((len(g.edges) - 1, degree(g)) for g in graphs)
    return [(n, d, dim, deg, c) for (dim, deg), c in sorted(counts.items())]


# --- verification suites ---------------------------------------------------

SUITES = (
    "collapse-lemma",
    "pillar-identity",
    "rank-identity",
    "degree-zero-roses",
    "pillar-arithmetic",
)


def _gjson(g):
    from .io import graph_to_dict

    return graph_to_dict(g)


def _check_collapse_lemma(g, rep):
    deg = degree(g)
    pil = pillar_edges(g)
    for e in g.edges:
        rep.pairs_checked += 1
        h = collapse_edge(g, e.id)
        dh = degree(h)
        ok = dh < deg if e.id in pil else dh == deg
        if not ok:
            rep.counterexamples.append(
                {"graph": _gjson(g), "edge": e.id, "pillar": e.id in pil,
                 "degree_before": deg, "degree_after": dh}
            )


def _check_pillar_identity(g, rep):
    rep.pairs_checked += 1
    p = pillar_graph(g)
    if degree(p) != degree(g) or not is_pillar(p):
        rep.counterexamples.append(
            {"graph": _gjson(g), "pillar_graph": _gjson(p),
             "degree": degree(g), "pillar_degree": degree(p)}
        )


def _check_rank_identity(g, rep):
    n = graph_stats(g).n
    for e in g.edges:
        rep.pairs_checked += 1
        h = collapse_edge(g, e.id)
        st = graph_stats(h)
        direct = st.total_genus + len(h.edges) - len(h.vertices) + 1
        if st.n != n or direct != n:
            rep.counterexamples.append({"graph": _gjson(g), "edge": e.id, "n_before": n, "n_after": st.n})


def _check_degree_zero(g, rep):
    rep.pairs_checked += 1
    if degree(g) == 0 and not g.is_rose:
        rep.counterexamples.append({"graph": _gjson(g), "reason": "degree 0 but not a rose"})
    if g.is_rose and degree(g) != 0:
        rep.counterexamples.append({"graph": _gjson(g), "reason": "rose with nonzero degree"})


def pillar_arithmetic(g: GenusGraph) -> dict | None:
    """Bookkeeping for a pillar whose leaves all have genus 0.

    Returns the quantities entering the join-connectivity count, or ``None``
    when ``g`` is not such a pillar.
    """
    if not is_pillar(g) or any(v.genus for v in g.vertices if not v.basepoint):
        return None
    st = graph_stats(g)
    b = g.basepoint
    leaves = [v for v in g.vertices if not v.basepoint]
    k = len(leaves)
    dim = st.dim
    deg = degree(g)
    bs = [st.valences[v.id] for v in leaves]
    g_base = st.n - st.rank_pi1
    join_conn = (g_base - 2) + sum(bi - 5 for bi in bs) + 2 * (k + 1) - 2
    return {
        "n": st.n, "k": k, "dim": dim, "degree": deg, "rank_pi1": st.rank_pi1,
        "basepoint_genus": b.genus, "genus_from_rank": g_base, "leaf_boundaries": bs,
        "join_connectivity": join_conn,
        "checks": {
            "degree": deg == dim + 1 - 2 * k,
            "rank": st.rank_pi1 == dim + 1 - k,
            "boundaries": sum(bs) == dim + 1,
            "genus": g_base == b.genus,
            "connectivity": join_conn == st.n + deg - dim - 3,
        },
    }


def _check_pillar_arithmetic(g, rep):
    info = pillar_arithmetic(g)
    if info is None:
        return
    rep.pairs_checked += 1
    if not all(info["checks"].values()):
        rep.counterexamples.append({"graph": _gjson(g), **info})


_CHECKS = {
    "collapse-lemma": _check_collapse_lemma,
    "pillar-identity": _check_pillar_identity,
    "rank-identity": _check_rank_identity,
    "degree-zero-roses": _check_degree_zero,
    "pillar-arithmetic": _check_pillar_arithmetic,
}


def verify_suite(
    suite: str,
    n_max: int,
    d_max: int,
    *,
    cap: int = DEFAULT_CAP,
    allow_large: bool = False,
) -> VerificationReport:
    """Run one exhaustive check over every type with ``n <= n_max``, ``d <= d_max``.

    Types are enumerated with degree bound ``d_max`` directly, which covers all
    smaller bounds.
    """
    if suite not in _CHECKS:
        raise ValueError(f"unknown suite {suite!r}; choose from {', '.join(SUITES)}")
    check_cap(n_max, d_max, cap, allow_large)
    check = _CHECKS[suite]
    rep = VerificationReport(suite)
    t0 = time.perf_counter()
    for n in range(1, n_max + 1):
        for g in enumerate_types(n=n, d=d_max, cap=cap, allow_large=allow_large):
            rep.graphs_checked += 1
            check(g, rep)
    rep.duration = time.perf_counter() - t0
    return rep
