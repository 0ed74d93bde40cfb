"""Degree-filtered complexes and their derived pillars.

A :class:`DegreeFilteredComplex` is a finite complex with a degree on every
nonempty face (the empty face has degree 0) that is

* face-monotone: ``sigma <= tau`` implies ``deg(sigma) <= deg(tau)``;
* pillar-consistent: the *derived pillar* of ``tau`` -- the vertices whose
  removal strictly lowers the degree -- has the same degree as ``tau`` and is
  its own derived pillar.

Dual graphs give the motivating instance (:func:`from_graph`): the faces of a
sphere system are the subsets of its edges, and the degree of a face is the
degree of the graph obtained by collapsing the other edges.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .errors import FaceNotInComplexError, NotAPillarError
from .graph import GenusGraph, degree, restrict_to
from .simplicial import SimplicialComplex, face_key, from_faces, label_key, link, simplex


@dataclass(frozen=True)
class DegreeFilteredComplex:
    complex: SimplicialComplex
    deg: dict  # frozenset face -> int, every nonempty face

    def degree(self, face) -> int:
        face = frozenset(face)
        if not face:
            return 0
        try:
            return self.deg[face]
        except KeyError:
            raise FaceNotInComplexError(sorted(face, key=label_key)) from None

    def sorted_faces(self) -> list:
        return sorted(self.deg, key=face_key)

    @cached_property
    def max_degree(self) -> int:
        return max(self.deg.values(), default=0)

    def sublevel(self, d: int) -> SimplicialComplex:
        """``K^{<=d}``; a subcomplex whenever the degree is monotone."""
        return from_faces(f for f, x in self.deg.items() if x <= d)


@dataclass(frozen=True)
class FiltrationReport:
    violations: tuple = ()

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self):
        return self.ok


def derived_pillar(F: DegreeFilteredComplex, tau) -> frozenset:
    """Vertices of ``tau`` whose removal strictly lowers its degree."""
    tau = frozenset(tau)
    if tau and tau not in F.deg:
        raise FaceNotInComplexError(sorted(tau, key=label_key))
    d = F.degree(tau)
    return frozenset(s for s in tau if F.degree(tau - {s}) < d)


def is_pillar_face(F: DegreeFilteredComplex, tau) -> bool:
    tau = frozenset(tau)
    return derived_pillar(F, tau) == tau


def validate_filtration(F: DegreeFilteredComplex) -> FiltrationReport:
    """Check that every face has a degree, then both axioms on every face."""
    out = []
    faces = F.complex.faces()
    extra = set(F.deg) - set(faces)
    for f in sorted(extra, key=face_key):
        out.append(("unknown-face", sorted(f, key=label_key)))
    for f in faces:
        if f not in F.deg:
            out.append(("missing-degree", sorted(f, key=label_key)))
    if out:
        return FiltrationReport(tuple(out))
    for f in faces:
        x = F.deg[f]
        if x < 0:
            out.append(("negative-degree", sorted(f, key=label_key), x))
        for s in f:
            sub = f - {s}
            if F.degree(sub) > x:
                out.append(("monotonicity", sorted(sub, key=label_key), sorted(f, key=label_key)))
    for f in faces:
        p = derived_pillar(F, f)
        if F.degree(p) != F.deg[f]:
            out.append(("pillar-degree", sorted(f, key=label_key), sorted(p, key=label_key)))
        elif derived_pillar(F, p) != p:
            out.append(("pillar-idempotence", sorted(f, key=label_key), sorted(p, key=label_key)))
    return FiltrationReport(tuple(out))


def low_link(F: DegreeFilteredComplex, c) -> SimplicialComplex:
    """Faces ``sigma`` of ``link(c)`` with ``deg(sigma | c) == deg(c)``.

    Monotonicity makes this a subcomplex of the link; every face of it has
    ``c`` as the derived pillar of ``sigma | c``.
    """
    c = frozenset(c)
    if derived_pillar(F, c) != c:
        raise NotAPillarError(sorted(c, key=label_key))
    target = F.degree(c)
    lk = link(F.complex, c)
    return from_faces(s for s in lk.faces() if F.degree(s | c) == target)


def from_graph(g: GenusGraph) -> DegreeFilteredComplex:
    """Filtration on the full simplex spanned by the edges of ``g``."""
    edges = sorted(g.edge_ids)
    if not edges:
        raise ValueError("the edgeless graph spans no simplex")
    K = simplex(edges)
    deg = {f: degree(restrict_to(g, f)) for f in K.faces()}
    return DegreeFilteredComplex(K, deg)


def from_function(K: SimplicialComplex, fn) -> DegreeFilteredComplex:
    return DegreeFilteredComplex(K, {f: fn(f) for f in K.faces()})
