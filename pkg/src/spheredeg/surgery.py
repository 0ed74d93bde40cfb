"""Star-replacement descent for simplicial disk maps into a degree filtration.

A :class:`DiskMap` sends a triangulated m-disk (m <= 2) into a
:class:`~spheredeg.filtration.DegreeFilteredComplex` with its boundary inside
the sublevel complex ``K^{<=d}``. An interior face is *bad* when its image is
a pillar face of degree greater than ``d``. One surgery step takes a bad face
``omega`` of maximal degree ``x`` and, among those, maximal dimension ``y``.
It fills the image of ``link(omega)`` inside the low link of ``c = f(omega)``
with a disk ``B``, and replaces ``star(omega)`` by ``B * boundary(omega)``.
Every new face then maps either below degree ``x`` or to a non-pillar.
So the measure ``(x, y, #bad faces at (x, y))`` drops lexicographically, and
descent stops once the image lies in ``K^{<=d}``.

Fillings come from a *filler*: a callable
``filler(target, sphere, sphere_map, fresh) -> (B, g)`` where ``target`` is
the low link, ``sphere`` is ``link(omega)`` (empty, S^0 or S^1), ``fresh``
yields unused vertex labels, ``B`` is a disk with boundary ``sphere`` and
``g`` maps every vertex of ``B`` into ``target`` extending ``sphere_map``.
Fillers raise :class:`FillerFailure` instead of improvising.
"""
from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass, field
from typing import Callable, Iterator

from .errors import FillerFailure, InvalidDiskMapError
from .filtration import DegreeFilteredComplex, is_pillar_face, low_link
from .manifolds import ball_boundary, is_combinatorial_ball
from .simplicial import (
    SimplicialComplex,
    boundary_of_simplex,
    build_complex,
    cone,
    face_key,
    from_faces,
    label_key,
    link,
)


@dataclass(frozen=True)
class DiskMap:
    disk: SimplicialComplex
    boundary: SimplicialComplex
    target: DegreeFilteredComplex
    vertex_map: dict

    @property
    def dim(self) -> int:
        return self.disk.dim

    def image(self, face) -> frozenset:
        return frozenset(self.vertex_map[v] for v in face)

    def interior_faces(self) -> list:
        return [f for f in self.disk.faces() if f not in self.boundary]

    def max_image_degree(self) -> int:
        return max((self.target.degree(self.image(f)) for f in self.disk.facets), default=0)


def disk_map_violations(f: DiskMap, d: int | None = None) -> list[str]:
    out = []
    m = f.disk.dim
    if m > 2:
        out.append(f"disk dimension {m} > 2")
        return out
    if not is_combinatorial_ball(f.disk, m):
        out.append(f"disk is not a combinatorial {m}-ball")
    elif ball_boundary(f.disk, m) != f.boundary:
        out.append("designated boundary differs from the disk's boundary")
    if set(f.vertex_map) != set(f.disk.vertices):
        out.append("vertex map domain differs from the disk vertices")
        return out
    tv = set(f.target.complex.vertices)
    for v, w in f.vertex_map.items():
        if w not in tv:
            out.append(f"vertex {v!r} maps to {w!r}, not a target vertex")
    if out:
        return out
    for facet in f.disk.sorted_facets():
        if f.image(facet) not in f.target.complex:
            out.append(f"facet {sorted(facet, key=label_key)} does not map to a face")
    if d is not None and not out:
        for face in f.boundary.faces():
            if f.target.degree(f.image(face)) > d:
                out.append(f"boundary face {sorted(face, key=label_key)} maps above degree {d}")
    return out


def validate_disk_map(f: DiskMap, d: int | None = None) -> None:
    problems = disk_map_violations(f, d)
    if problems:
        raise InvalidDiskMapError("; ".join(problems))


@dataclass(frozen=True)
class BadSimplex:
    omega: frozenset
    image: frozenset
    degree: int
    dim: int


def bad_simplices(f: DiskMap, d: int) -> list[BadSimplex]:
    """Interior faces mapping onto pillars of degree > d, worst first.

    Sorted by degree (descending), dimension (descending), then vertex
    labels; the head is the face a surgery step acts on.
    """
    out = []
    for face in f.interior_faces():
        img = f.image(face)
        x = f.target.degree(img)
        if x > d and is_pillar_face(f.target, img):
            out.append(BadSimplex(face, img, x, len(face) - 1))
    out.sort(key=lambda b: (-b.degree, -b.dim, face_key(b.omega)))
    return out


def measure(bad: list[BadSimplex]) -> tuple[int, int, int] | None:
    if not bad:
        return None
    x, y = bad[0].degree, bad[0].dim
    return (x, y, sum(1 for b in bad if b.degree == x and b.dim == y))


# --- fillers -----------------------------------------------------------------

def fresh_labels(taken, prefix: str = "s") -> Iterator[str]:
    taken = set(taken)
    for i in itertools.count():
        lab = f"{prefix}{i}"
        if lab not in taken:
            taken.add(lab)
            yield lab


def _cycle_order(sphere: SimplicialComplex) -> list:
    adj = {v: [] for v in sphere.vertices}
    for e in sphere.facets:
        a, b = tuple(e)
        adj[a].append(b)
        adj[b].append(a)
    start = sphere.vertices[0]
    order = [start]
    prev, cur = None, start
    while True:
        nxt = min((w for w in adj[cur] if w != prev), key=label_key)
        if nxt == start:
            return order
        order.append(nxt)
        prev, cur = cur, nxt


def star_filler(target, sphere, sphere_map, fresh):
    """Cone the sphere off a single target vertex adjacent to its whole image."""
    faces = [frozenset(sphere_map[v] for v in s) for s in sphere.sorted_facets()]
    for v in target.vertices:
        if all(s | {v} in target for s in faces):
            apex = next(fresh)
            g = dict(sphere_map)
            g[apex] = v
            return cone(sphere, apex), g
    raise FillerFailure("no common neighbour for the sphere image",
                        instance={"target": target, "sphere": sphere, "map": sphere_map})


def _shortest_path(target: SimplicialComplex, a, b) -> list | None:
    if a == b:
        return [a]
    adj = {v: set() for v in target.vertices}
    for f in target.faces(1):
        x, y = tuple(f)
        adj[x].add(y)
        adj[y].add(x)
    prev = {a: None}
    queue = deque([a])
    while queue:
        u = queue.popleft()
        for w in sorted(adj.get(u, ()), key=label_key):
            if w not in prev:
                prev[w] = u
                if w == b:
                    path = [b]
                    while prev[path[-1]] is not None:
                        path.append(prev[path[-1]])
                    return path[::-1]
                queue.append(w)
    return None


def path_filler(target, sphere, sphere_map, fresh):
    """Fill an S^0 by a shortest edge path between its two images."""
    if not (len(sphere.facets) == 2 and sphere.dim == 0):
        raise FillerFailure("path filler only fills 0-spheres",
                            instance={"target": target, "sphere": sphere, "map": sphere_map})
    s0, s1 = sphere.vertices
    path = _shortest_path(target, sphere_map[s0], sphere_map[s1])
    if path is None:
        raise FillerFailure("sphere images lie in different components",
                            instance={"target": target, "sphere": sphere, "map": sphere_map})
    inner = [next(fresh) for _ in path[1:-1]]
    chain = [s0] + inner + [s1]
    g = dict(sphere_map)
    g.update(zip(inner, path[1:-1]))
    return build_complex(zip(chain, chain[1:])), g


def _fill_cycle(target: SimplicialComplex, cycle: list, images: dict, fresh, max_area: int):
    """Bounded search for a triangulated disk spanning ``cycle``.

    Moves on the unfilled hole: cone the whole hole off one vertex, close a
    final triangle, cut an ear (one triangle, hole shrinks), or cone a run of
    consecutive hole vertices off a new interior vertex. The hole never has
    chords (every edge between hole vertices is a hole edge), so the state is
    just the cyclic word of images, which makes failures memoisable.
    Iterative deepening on area returns a minimal-area filling.
    """
    tverts = target.vertices
    face_cache: dict = {}

    def is_face(ws) -> bool:
        key = frozenset(ws)
        if key not in face_cache:
            face_cache[key] = key in target
        return face_cache[key]

    def common(ws) -> list:
        return [v for v in tverts if all(is_face((ws[i], ws[i + 1], v)) for i in range(len(ws) - 1))]

    failed: set = set()

    def canon(word):
        k = len(word)
        rots = [tuple(word[i:] + word[:i]) for i in range(k)]
        rev = list(reversed(word))
        rots += [tuple(rev[i:] + rev[:i]) for i in range(k)]
        return min(rots, key=lambda t: [label_key(x) for x in t])

    def dfs(hole, img, budget):
        L = len(hole)
        word = [img[v] for v in hole]
        key = (canon(word), budget)
        if budget < L - 2 or key in failed:
            return None
        closed = word + word[:1]
        if L <= budget:
            for v in common(closed):
                return [("cone", list(hole), v)]
        if L == 3 and is_face(word):
            return [("tri", list(hole))]
        if L > 3:
            for i in range(L):
                a, b, c = hole[i - 1], hole[i], hole[(i + 1) % L]
                if is_face((img[a], img[b], img[c])):
                    rest = dfs([v for v in hole if v != b], img, budget - 1)
                    if rest is not None:
                        return [("tri", [a, b, c])] + rest
        for r in range(L - 2, 0, -1):
            if r + 1 > budget:
                continue
            for i in range(L):
                run = [hole[(i + t) % L] for t in range(r)]
                left, right = hole[i - 1], hole[(i + r) % L]
                ws = [img[left]] + [img[v] for v in run] + [img[right]]
                for v in common(ws):
                    u = ("new", len(img))
                    img2 = dict(img)
                    img2[u] = v
                    hole2 = []
                    for w in hole:
                        if w == run[0]:
                            hole2.append(u)
                        elif w not in run:
                            hole2.append(w)
                    rest = dfs(hole2, img2, budget - (r + 1))
                    if rest is not None:
                        return [("conerun", [left] + run + [right], u, v)] + rest
        failed.add(key)
        return None

    img0 = dict(images)
    for area in range(len(cycle) - 2, max_area + 1):
        plan = dfs(list(cycle), img0, area)
        if plan is not None:
            break
    else:
        return None

    names: dict = {}
    g = dict(images)
    tris = []

    def name(v):
        if isinstance(v, tuple) and v and v[0] == "new":
            if v not in names:
                names[v] = next(fresh)
            return names[v]
        return v

    for move in plan:
        if move[0] == "tri":
            tris.append([name(v) for v in move[1]])
        elif move[0] == "cone":
            apex = next(fresh)
            g[apex] = move[2]
            hole = [name(v) for v in move[1]]
            tris += [[hole[i], hole[(i + 1) % len(hole)], apex] for i in range(len(hole))]
        else:
            _, path, u, v = move
            un = name(u)
            g[un] = v
            path = [name(w) for w in path]
            tris += [[path[i], path[i + 1], un] for i in range(len(path) - 1)]
    return build_complex(tris), g


DEFAULT_MAX_AREA = 12


def fill_sphere_map(target: SimplicialComplex, sphere: SimplicialComplex, sphere_map: dict,
                    fresh=None, max_area: int = DEFAULT_MAX_AREA):
    """Disk ``B`` with boundary ``sphere`` and a simplicial extension into ``target``.

    The empty sphere is filled by one vertex, ``S^0`` by a breadth-first
    shortest path, ``S^1`` by a cone when the image has a common neighbour and
    otherwise by the bounded-area search in :func:`_fill_cycle`.
    """
    if fresh is None:
        fresh = fresh_labels(set(sphere.vertices) | set(target.vertices))
    instance = {"target": target, "sphere": sphere, "map": sphere_map}
    for s in sphere.facets:
        if frozenset(sphere_map[v] for v in s) not in target:
            raise FillerFailure("sphere map is not simplicial into the target", instance=instance)
    if sphere.is_empty:
        if target.is_empty:
            raise FillerFailure("target is empty", instance=instance)
        apex = next(fresh)
        B, g = build_complex([[apex]]), {apex: target.vertices[0]}
        dim = 0
    elif sphere.dim == 0 and len(sphere.facets) == 2:
        B, g = path_filler(target, sphere, sphere_map, fresh)
        dim = 1
    elif sphere.dim == 1:
        from .manifolds import is_combinatorial_sphere

        if not is_combinatorial_sphere(sphere, 1):
            raise FillerFailure("1-dimensional input is not a cycle", instance=instance)
        # a common neighbour of the whole image gives a cone; search otherwise
        try:
            found = star_filler(target, sphere, sphere_map, fresh)
        except FillerFailure:
            found = _fill_cycle(target, _cycle_order(sphere), sphere_map, fresh, max_area)
        if found is None:
            raise FillerFailure(f"no filling of area <= {max_area}", instance=instance)
        B, g = found
        dim = 2
    else:
        raise FillerFailure("only spheres of dimension <= 1 can be filled", instance=instance)
    assert is_combinatorial_ball(B, dim) and ball_boundary(B, dim) == sphere
    return B, g


def disk_filler(target, sphere, sphere_map, fresh, max_area: int = DEFAULT_MAX_AREA):
    return fill_sphere_map(target, sphere, sphere_map, fresh, max_area)


def auto_filler(target, sphere, sphere_map, fresh):
    """Star filler when a common neighbour exists, else the search filler."""
    try:
        return star_filler(target, sphere, sphere_map, fresh)
    except FillerFailure:
        return fill_sphere_map(target, sphere, sphere_map, fresh)


FILLERS: dict[str, Callable] = {
    "auto": auto_filler,
    "star": star_filler,
    "path": path_filler,
    "disk": disk_filler,
}


# --- surgery -------------------------------------------------------------------

@dataclass(frozen=True)
class TraceStep:
    step: int
    measure: tuple[int, int, int]
    omega: frozenset
    image: frozenset


@dataclass
class DescentResult:
    disk_map: DiskMap
    trace: list[TraceStep] = field(default_factory=list)


def surgery_step(f: DiskMap, omega, filler: Callable = auto_filler) -> DiskMap:
    """Replace ``star(omega)`` by ``B * boundary(omega)``.

    ``omega`` must be interior, map onto a pillar ``c`` of the current maximal
    image degree, and have maximal dimension among faces mapping onto pillars
    of that degree. Then ``link(omega)`` maps into ``low_link(c)``.
    """
    omega = frozenset(omega)
    if omega not in f.disk or not omega:
        raise InvalidDiskMapError(f"{sorted(omega, key=label_key)} is not a face of the disk")
    if omega in f.boundary:
        raise InvalidDiskMapError("omega lies on the boundary")
    F = f.target
    c = f.image(omega)
    if not is_pillar_face(F, c):
        raise InvalidDiskMapError(f"image {sorted(c, key=label_key)} is not a pillar")
    x = F.degree(c)
    if x < f.max_image_degree():
        raise InvalidDiskMapError(f"image degree {x} is not the maximal degree {f.max_image_degree()}")
    for face in f.disk.faces():
        img = f.image(face)
        if len(face) > len(omega) and F.degree(img) == x and is_pillar_face(F, img):
            raise InvalidDiskMapError("omega is not of maximal dimension among degree-x pillar preimages")

    lk = link(f.disk, omega)
    smap = {v: f.vertex_map[v] for v in lk.vertices}
    low = low_link(F, c)
    for s in lk.facets:
        if frozenset(smap[v] for v in s) not in low:
            raise InvalidDiskMapError("link of omega does not map into the low link")
    fresh = fresh_labels(set(f.disk.vertices) | set(low.vertices) | set(f.target.complex.vertices))
    B, g = filler(low, lk, smap, fresh)

    sphere_dim = lk.dim if not lk.is_empty else -1
    if not is_combinatorial_ball(B, sphere_dim + 1) or ball_boundary(B, sphere_dim + 1) != lk:
        raise FillerFailure("filler returned something other than a disk spanning the link",
                            instance={"omega": omega, "link": lk})
    if any(g[v] != smap[v] for v in lk.vertices):
        raise FillerFailure("filler changed the map on the link", instance={"omega": omega})
    for s in B.facets:
        if frozenset(g[v] for v in s) not in low:
            raise FillerFailure("filler map leaves the low link", instance={"omega": omega})

    d_omega = boundary_of_simplex(omega)
    alphas = d_omega.facets if not d_omega.is_empty else [frozenset()]
    kept = [F_ for F_ in f.disk.facets if not omega <= F_]
    new = [beta | alpha for beta in B.facets for alpha in alphas]
    disk = from_faces(kept + new)
    vmap = {v: (g[v] if v in g else f.vertex_map[v]) for v in disk.vertices}
    return DiskMap(disk, f.boundary, F, vmap)


def surgery_descent(f: DiskMap, d: int, filler: Callable = auto_filler,
                    max_steps: int = 10_000, check_invariants: bool = False) -> DescentResult:
    """Iterate :func:`surgery_step` until no interior face maps above degree ``d``.

    With ``check_invariants`` every intermediate map is re-validated
    (combinatorial ball, unchanged boundary, simplicial, boundary in
    ``K^{<=d}``), and the measure is asserted to drop strictly.
    """
    validate_disk_map(f, d)
    trace: list[TraceStep] = []
    prev = None
    for step in range(max_steps):
        bad = bad_simplices(f, d)
        mu = measure(bad)
        if mu is None:
            return DescentResult(f, trace)
        if prev is not None and not mu < prev:
            raise AssertionError(f"measure did not decrease: {prev} -> {mu}")
        head = bad[0]
        trace.append(TraceStep(step, mu, head.omega, head.image))
        try:
            g = surgery_step(f, head.omega, filler)
        except FillerFailure as exc:
            exc.trace = list(trace)
            raise
        if check_invariants:
            validate_disk_map(g, d)
            if g.boundary != f.boundary or any(g.vertex_map[v] != f.vertex_map[v] for v in f.boundary.vertices):
                raise AssertionError("surgery changed the boundary map")
        f, prev = g, mu
    raise FillerFailure(f"descent did not finish within {max_steps} steps", trace=trace)
