"""Seeded generators of small filtrations and disk maps for property tests.

Filtrations are built on ``Cone_h(K0)`` for a random complex ``K0`` whose
vertices split into pillar-capable ones ``P`` and neutral ones ``Q``. The
degree of a face depends only on its ``P``-part through a strictly monotone
set function (positive weights plus positive pair bonuses), so the derived
pillar of a face is its ``P``-part. The hub ``h`` is neutral and a cone point
of every low link, which plants a common-neighbour filling for every step of
the descent. Instances are still run through the validator and rejected if
they fail.
"""
from __future__ import annotations

import itertools
import random

from .filtration import DegreeFilteredComplex, from_function, from_graph, validate_filtration
from .manifolds import ball_boundary
from .simplicial import SimplicialComplex, build_complex, cone, label_key
from .surgery import DiskMap, disk_map_violations

HUB = "h"


def random_filtration(rng: random.Random, n_pillar: int = 3, n_neutral: int = 4,
                      n_facets: int = 6) -> DegreeFilteredComplex:
    P = [f"p{i}" for i in range(n_pillar)]
    Q = [f"q{i}" for i in range(n_neutral)]
    verts = P + Q
    while True:
        facets = [rng.sample(verts, rng.choice((2, 3))) for _ in range(n_facets)]
        covered = set().union(*map(set, facets))
        facets += [[v] for v in verts if v not in covered]
        K = cone(build_complex(facets), HUB)
        weight = {p: rng.randint(1, 2) for p in P}
        bonus = {frozenset(pair): rng.randint(0, 1) for pair in itertools.combinations(P, 2)}

        def deg(face, weight=weight, bonus=bonus):
            ps = [v for v in face if v in weight]
            return sum(weight[p] for p in ps) + sum(
                bonus[frozenset(pair)] for pair in itertools.combinations(ps, 2)
            )

        F = from_function(K, deg)
        if validate_filtration(F).ok:
            return F


def random_disk(rng: random.Random, dim: int, size: int) -> tuple[SimplicialComplex, SimplicialComplex]:
    """A random combinatorial ``dim``-disk with about ``size`` vertices, and its boundary."""
    if dim == 1:
        L = max(2, size)
        vs = [f"v{i}" for i in range(L)]
        disk = build_complex(zip(vs, vs[1:]))
        return disk, ball_boundary(disk, 1)
    if dim != 2:
        raise ValueError("only 1- and 2-disks are generated")
    tris = [frozenset({"v0", "v1", "v2"})]
    nxt = 3
    while nxt < size:
        new = f"v{nxt}"
        nxt += 1
        if rng.random() < 0.5:
            # stellar subdivision of a triangle
            t = rng.choice(sorted(tris, key=lambda f: sorted(f)))
            tris.remove(t)
            tris += [frozenset((t - {x}) | {new}) for x in t]
        else:
            # glue a triangle onto a boundary edge
            K = build_complex(tris)
            edges = sorted(ball_boundary(K, 2).facets, key=lambda f: sorted(f))
            e = rng.choice(edges)
            tris.append(frozenset(e | {new}))
    disk = build_complex(tris)
    return disk, ball_boundary(disk, 2)


def random_map(rng: random.Random, disk: SimplicialComplex, boundary: SimplicialComplex,
               F: DegreeFilteredComplex, d: int, p_bias: float = 0.6, tries: int = 200):
    """Random simplicial map with boundary in ``K^{<=d}``; backtracking search."""
    target = F.complex
    tv = list(target.vertices)
    order = list(disk.vertices)
    bverts = set(boundary.vertices)
    facets_of = {v: [f for f in disk.facets if v in f] for v in order}
    bfaces_of = {v: [f for f in boundary.faces() if v in f] for v in order}

    for _ in range(tries):
        rng.shuffle(order)
        assign: dict = {}

        def ok(v):
            for f in facets_of[v]:
                img = frozenset(assign[u] for u in f if u in assign)
                if img not in target:
                    return False
            for f in bfaces_of[v]:
                if all(u in assign for u in f) and F.degree(frozenset(assign[u] for u in f)) > d:
                    return False
            return True

        def rec(i):
            if i == len(order):
                return True
            v = order[i]
            cands = list(tv)
            rng.shuffle(cands)
            if v not in bverts and rng.random() < p_bias:
                cands.sort(key=lambda w: F.degree({w}) == 0)
            for w in cands:
                assign[v] = w
                if ok(v) and rec(i + 1):
                    return True
                del assign[v]
            return False

        if rec(0):
            f = DiskMap(disk, boundary, F, dict(sorted(assign.items(), key=lambda kv: label_key(kv[0]))))
            assert not disk_map_violations(f, d)
            return f
    return None


def planted_instance(rng: random.Random, d: int | None = None) -> tuple[DiskMap, int]:
    """A valid disk map into a hub-coned filtration, with ``d`` in ``{0, 1}``."""
    while True:
        F = random_filtration(rng, rng.randint(2, 3), rng.randint(2, 4), rng.randint(4, 7))
        dd = rng.choice((0, 1)) if d is None else d
        dim = rng.choice((1, 2, 2))
        disk, bd = random_disk(rng, dim, rng.randint(4, 9))
        f = random_map(rng, disk, bd, F, dd)
        if f is not None:
            return f, dd


def graph_instance(rng: random.Random, graphs, d: int = 0) -> tuple[DiskMap, int] | None:
    """Disk map into the filtration of a random dual graph's full simplex."""
    g = rng.choice([g for g in graphs if g.edges])
    F = from_graph(g)
    dim = rng.choice((1, 2))
    disk, bd = random_disk(rng, dim, rng.randint(4, 8))
    f = random_map(rng, disk, bd, F, d)
    return (f, d) if f is not None else None
