"""Finite abstract simplicial complexes stored by facets.

Faces are ``frozenset`` objects of vertex labels (strings or integers).
Homology is exact over the integers: boundary matrices go through
:func:`spheredeg.snf.invariant_factors`, so torsion is reported, not lost.

Connectivity here is always *homological*: a complex is called
homologically k-connected (k >= 0) when its reduced integral homology
vanishes through degree k; reduced H_0 = 0 already forces it to be nonempty
and connected. That is weaker than vanishing
homotopy groups (nothing here computes pi_1).
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Hashable, Iterable

from .errors import EmptyInputError, FaceNotInComplexError, LabelCollisionError, ResourceLimitError
from .snf import invariant_factors

FACE_CAP = 200_000

Face = frozenset


def label_key(x):
    """Total order on mixed int/str labels: ints first, then strings."""
    if isinstance(x, int):
        return (0, x, "")
    return (1, 0, str(x))


def face_key(face):
    return (len(face), [label_key(x) for x in sorted(face, key=label_key)])


@dataclass(frozen=True)
class SimplicialComplex:
    facets: frozenset  # frozenset of frozensets; no facet contains another

    @staticmethod
    def empty() -> "SimplicialComplex":
        return SimplicialComplex(frozenset())

    @property
    def is_empty(self) -> bool:
        return not self.facets

    @cached_property
    def vertices(self) -> tuple:
        return tuple(sorted(set().union(*self.facets), key=label_key)) if self.facets else ()

    @cached_property
    def dim(self) -> int:
        return max((len(f) for f in self.facets), default=0) - 1

    def sorted_facets(self) -> list:
        return sorted(self.facets, key=face_key)

    @cached_property
    def _faces_by_dim(self) -> list[list[frozenset]]:
        count = sum(2 ** len(f) - 1 for f in self.facets)
        if count > FACE_CAP * 4:
            # upper bound on face count; cheap guard before expanding
            raise ResourceLimitError(f"complex may have up to {count} faces (cap {FACE_CAP})")
        layers: list[set] = [set() for _ in range(self.dim + 1)]
        for f in self.facets:
            items = sorted(f, key=label_key)
            for k in range(1, len(items) + 1):
                layers[k - 1].update(frozenset(c) for c in itertools.combinations(items, k))
        total = sum(map(len, layers))
        if total > FACE_CAP:
            raise ResourceLimitError(f"complex has {total} faces (cap {FACE_CAP})")
        return [sorted(layer, key=face_key) for layer in layers]

    def faces(self, dim: int | None = None) -> list[frozenset]:
        """Nonempty faces, deterministically ordered; all of them if ``dim`` is None."""
        layers = self._faces_by_dim
        if dim is None:
            return [f for layer in layers for f in layer]
        if 0 <= dim < len(layers):
            return list(layers[dim])
        return []

    def __contains__(self, face) -> bool:
        face = frozenset(face)
        if not face:
            return True
        return any(face <= f for f in self.facets)

    def f_vector(self) -> list[int]:
        return [len(layer) for layer in self._faces_by_dim]

    def euler_characteristic(self) -> int:
        return sum((-1) ** i * c for i, c in enumerate(self.f_vector()))

    def relabel(self, mapping) -> "SimplicialComplex":
        if callable(mapping):
            f = mapping
        else:
            f = lambda x: mapping.get(x, x)  # noqa: E731
        return build_complex([[f(x) for x in face] for face in self.facets]) if self.facets else self

    def __repr__(self):
        shown = [sorted(f, key=label_key) for f in self.sorted_facets()]
        return f"SimplicialComplex({shown})"


def _prune(facets: Iterable[frozenset]) -> frozenset:
    fs = sorted(set(facets), key=len, reverse=True)
    kept: list[frozenset] = []
    for f in fs:
        if not any(f <= g for g in kept):
            kept.append(f)
    return frozenset(kept)


def build_complex(facets: Iterable[Iterable[Hashable]]) -> SimplicialComplex:
    """Complex generated by ``facets``; contained faces are dropped."""
    fs = [frozenset(f) for f in facets]
    if not fs or any(not f for f in fs):
        raise EmptyInputError("need a nonempty list of nonempty facets")
    return SimplicialComplex(_prune(fs))


def from_faces(faces: Iterable[Iterable[Hashable]]) -> SimplicialComplex:
    """Like :func:`build_complex` but returns the empty complex for no faces."""
    fs = [frozenset(f) for f in faces]
    fs = [f for f in fs if f]
    return SimplicialComplex(_prune(fs)) if fs else SimplicialComplex.empty()


def simplex(vertices) -> SimplicialComplex:
    return build_complex([vertices])


def boundary_of_simplex(vertices) -> SimplicialComplex:
    """The boundary of the simplex on ``vertices``; ``{a}`` gives the empty complex."""
    vs = list(vertices)
    if len(vs) == 1:
        return SimplicialComplex.empty()
    return build_complex(itertools.combinations(vs, len(vs) - 1))


def _check_face(K, sigma):
    sigma = frozenset(sigma)
    if sigma not in K:
        raise FaceNotInComplexError(sorted(sigma, key=label_key))
    return sigma


def link(K: SimplicialComplex, sigma) -> SimplicialComplex:
    sigma = _check_face(K, sigma)
    return from_faces(f - sigma for f in K.facets if sigma <= f)


def star(K: SimplicialComplex, sigma) -> SimplicialComplex:
    """Closed star: every face whose union with ``sigma`` is a face."""
    sigma = _check_face(K, sigma)
    return from_faces(f for f in K.facets if sigma <= f)


def deletion(K: SimplicialComplex, sigma) -> SimplicialComplex:
    """Faces of ``K`` not containing ``sigma`` (the complement of the open star)."""
    sigma = _check_face(K, sigma)
    out = []
    for f in K.facets:
        if sigma <= f:
            out.extend(f - {v} for v in sigma)
        else:
            out.append(f)
    return from_faces(out)


def cone(K: SimplicialComplex, apex) -> SimplicialComplex:
    if apex in K.vertices:
        raise LabelCollisionError(f"apex {apex!r} is already a vertex")
    if K.is_empty:
        return build_complex([[apex]])
    return SimplicialComplex(frozenset(f | {apex} for f in K.facets))


def join(K1: SimplicialComplex, K2: SimplicialComplex) -> SimplicialComplex:
    """Simplicial join; the empty complex is the unit."""
    clash = set(K1.vertices) & set(K2.vertices)
    if clash:
        raise LabelCollisionError(f"shared labels {sorted(clash, key=label_key)}")
    if K1.is_empty:
        return K2
    if K2.is_empty:
        return K1
    return SimplicialComplex(frozenset(a | b for a in K1.facets for b in K2.facets))


def disjoint_union(K1: SimplicialComplex, K2: SimplicialComplex) -> SimplicialComplex:
    clash = set(K1.vertices) & set(K2.vertices)
    if clash:
        raise LabelCollisionError(f"shared labels {sorted(clash, key=label_key)}")
    return SimplicialComplex(K1.facets | K2.facets)


def tagged(K: SimplicialComplex, tag: str) -> SimplicialComplex:
    """Relabel every vertex ``v`` as ``f"{tag}{v}"`` (to make joins legal)."""
    return K.relabel(lambda v: f"{tag}{v}")


def skeleton(K: SimplicialComplex, k: int) -> SimplicialComplex:
    return from_faces(f for f in K.faces() if len(f) <= k + 1)


def barycentric_subdivision(K: SimplicialComplex) -> SimplicialComplex:
    """Vertices are the faces of ``K`` (as sorted tuples); simplices are chains."""
    def lab(face):
        return "|".join(str(x) for x in sorted(face, key=label_key))

    out = []
    for f in K.facets:
        items = sorted(f, key=label_key)
        for perm in itertools.permutations(items):
            out.append([lab(perm[: i + 1]) for i in range(len(perm))])
    return from_faces(out)


# --- homology ---------------------------------------------------------------

def _ordered(face):
    return tuple(sorted(face, key=label_key))


def boundary_matrix(K: SimplicialComplex, k: int) -> dict:
    """Sparse matrix of the boundary map from k-chains to (k-1)-chains.

    Rows index (k-1)-faces, columns k-faces, in :meth:`SimplicialComplex.faces`
    order. For ``k = 0`` this is the augmentation (a single row of ones).
    """
    cols = K.faces(k)
    if k == 0:
        return {0: {j: 1 for j in range(len(cols))}} if cols else {}
    index = {f: i for i, f in enumerate(K.faces(k - 1))}
    rows: dict[int, dict[int, int]] = {}
    for j, face in enumerate(cols):
        verts = _ordered(face)
        for i in range(len(verts)):
            r = index[frozenset(verts[:i] + verts[i + 1:])]
            rows.setdefault(r, {})[j] = -1 if i % 2 else 1
    return rows


@dataclass(frozen=True)
class HomologyProfile:
    """Reduced integral homology: ``groups[i] = (free rank, torsion factors)``.

    Trailing zero groups are kept up to the complex dimension, so ``groups``
    always has ``dim + 1`` entries (none for the empty complex).
    """

    groups: tuple[tuple[int, tuple[int, ...]], ...]

    def rank(self, i: int) -> int:
        return self.groups[i][0] if 0 <= i < len(self.groups) else 0

    def torsion(self, i: int) -> tuple[int, ...]:
        return self.groups[i][1] if 0 <= i < len(self.groups) else ()

    def vanishes_through(self, k: int) -> bool:
        return all(self.rank(i) == 0 and not self.torsion(i) for i in range(0, k + 1))

    @property
    def is_trivial(self) -> bool:
        return self.vanishes_through(len(self.groups))

    def betti(self) -> list[int]:
        return [r for r, _ in self.groups]


def reduced_homology(K: SimplicialComplex) -> HomologyProfile:
    """Exact reduced homology over Z via Smith normal form."""
    if K.is_empty:
        return HomologyProfile(())
    top = K.dim
    factors = [invariant_factors(boundary_matrix(K, k)) for k in range(top + 2)]
    groups = []
    for i in range(top + 1):
        n_i = len(K.faces(i))
        rank_out = len(factors[i])
        incoming = factors[i + 1] if i + 1 <= top else []
        free = n_i - rank_out - len(incoming)
        torsion = tuple(x for x in incoming if x > 1)
        groups.append((free, torsion))
    return HomologyProfile(tuple(groups))


def is_homologically_k_connected(K: SimplicialComplex, k: int) -> bool:
    """Homological proxy for k-connectivity (no pi_1 check).

    Every complex is (-2)-connected; (-1)-connected means nonempty; for
    ``k >= 0`` the reduced homology must vanish in degrees ``0..k``.
    """
    if k <= -2:
        return True
    if K.is_empty:
        return False
    if k == -1:
        return True
    return reduced_homology(K).vanishes_through(k)


def homological_connectivity(K: SimplicialComplex) -> float:
    """Largest k with :func:`is_homologically_k_connected`; ``inf`` if acyclic."""
    if K.is_empty:
        return -2
    h = reduced_homology(K)
    for i in range(len(h.groups)):
        if h.rank(i) or h.torsion(i):
            return i - 1
    return float("inf")


def iterated_join(complexes) -> SimplicialComplex:
    out = SimplicialComplex.empty()
    for K in complexes:
        out = join(out, K)
    return out


def verify_join_connectivity(instances):
    """Check the join connectivity bound homologically.

    Each instance is ``(name, [(complex, n_i), ...])`` where complex ``i`` is
    claimed (homologically) ``n_i``-connected; ``n_i = None`` means acyclic.
    The join of ``q`` such complexes must be
    ``(n_1 + ... + n_q + 2q - 2)``-connected; for an acyclic factor the join
    must be acyclic. Labels must already be disjoint across factors.
    """
    import time

    from .reports import VerificationReport

    rep = VerificationReport("join-connectivity")
    t0 = time.perf_counter()
    for name, parts in instances:
        rep.graphs_checked += 1
        problems = []
        for idx, (K, n_i) in enumerate(parts):
            if n_i is None:
                if K.is_empty or not reduced_homology(K).is_trivial:
                    problems.append(f"factor {idx} is not acyclic")
            elif not is_homologically_k_connected(K, n_i):
                problems.append(f"factor {idx} is not {n_i}-connected")
        J = iterated_join(K for K, _ in parts)
        q = len(parts)
        if any(n_i is None for _, n_i in parts):
            bound = None
            ok = not J.is_empty and reduced_homology(J).is_trivial
        else:
            bound = sum(n_i for _, n_i in parts) + 2 * q - 2
            ok = is_homologically_k_connected(J, bound)
        rep.pairs_checked += 1
        if not ok:
            problems.append(f"join is not {bound if bound is not None else 'acyclic'}-connected")
        if problems:
            rep.counterexamples.append({"instance": name, "bound": bound, "problems": problems})
    rep.duration = time.perf_counter() - t0
    return rep
