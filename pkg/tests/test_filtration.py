import pytest

from spheredeg.enumeration import enumerate_types
from spheredeg.errors import FaceNotInComplexError, NotAPillarError
from spheredeg.filtration import (
    DegreeFilteredComplex,
    derived_pillar,
    from_function,
    from_graph,
    is_pillar_face,
    low_link,
    validate_filtration,
)
from spheredeg.graph import GenusGraph, pillar_edges, restrict_to
from spheredeg.simplicial import build_complex, link, simplex


def b_filtration():
    """Full simplex on a, b, c; degree 1 exactly on faces containing b."""
    return from_function(simplex("abc"), lambda s: 1 if "b" in s else 0)


def with_changes(F, **changes):
    deg = dict(F.deg)
    for key, value in changes.items():
        deg[frozenset(key)] = value
    return DegreeFilteredComplex(F.complex, deg)


def test_b_filtration_is_valid():
    F = b_filtration()
    assert validate_filtration(F).ok
    assert derived_pillar(F, "abc") == {"b"}


def test_pillar_without_degree_is_caught():
    F = with_changes(b_filtration(), b=0, ab=1)
    # {a, b} is still its own pillar; the top face's pillar {b} lost its degree
    assert validate_filtration(F).violations == (("pillar-degree", ["a", "b", "c"], ["b"]),)


def test_monotonicity_violation():
    F = DegreeFilteredComplex(simplex("ab"), {frozenset("a"): 2, frozenset("b"): 0, frozenset("ab"): 1})
    tags = [v[0] for v in validate_filtration(F).violations]
    assert "monotonicity" in tags


def test_missing_and_unknown_faces():
    K = simplex("ab")
    F = DegreeFilteredComplex(K, {frozenset("a"): 0, frozenset("ab"): 0, frozenset("z"): 0})
    tags = {v[0] for v in validate_filtration(F).violations}
    assert tags == {"missing-degree", "unknown-face"}


def test_sublevel():
    F = b_filtration()
    assert F.sublevel(0) == build_complex([["a", "c"]])
    assert F.sublevel(1) == F.complex
    assert F.max_degree == 1


def test_constant_degree_has_empty_pillar():
    F = from_function(simplex("abcd"), lambda s: 3)
    for face in F.complex.faces():
        if len(face) > 1:
            assert derived_pillar(F, face) == frozenset()


def test_vertex_pillar_convention():
    F = b_filtration()
    assert derived_pillar(F, "b") == {"b"}
    assert derived_pillar(F, "a") == frozenset()


def test_derived_pillar_unknown_face():
    with pytest.raises(FaceNotInComplexError):
        derived_pillar(b_filtration(), "az")


def test_low_link_examples():
    F = b_filtration()
    assert low_link(F, "b") == build_complex([["a", "c"]])
    G = with_changes(F, bc=2, abc=2)
    assert low_link(G, "b") == build_complex([["a"]])
    single = from_function(simplex("b"), lambda s: 1)
    assert low_link(single, "b").is_empty


def test_low_link_requires_pillar():
    with pytest.raises(NotAPillarError):
        low_link(b_filtration(), "ab")


# --- graph-derived filtrations ---------------------------------------------

GRAPHS = [g for n in range(1, 5) for g in enumerate_types(n=n, d=3)]


def test_star_graph_pillar():
    star = GenusGraph.build([(0, 0, True), (1, 1, False), (2, 2, False)],
                            [(0, 0, 0), (1, 0, 1), (2, 0, 2), (3, 0, 2)])
    F = from_graph(star)
    assert derived_pillar(F, star.edge_ids) == pillar_edges(star) == {1, 2, 3}


def test_graph_filtrations_satisfy_the_axioms():
    for g in GRAPHS:
        assert validate_filtration(from_graph(g)).ok


def test_derived_pillar_is_geometric_pillar_on_every_face():
    for g in GRAPHS:
        F = from_graph(g)
        for face in F.complex.faces():
            assert derived_pillar(F, face) == pillar_edges(restrict_to(g, face))


def test_low_link_properties():
    for g in GRAPHS:
        if len(g.edges) > 5:
            continue
        F = from_graph(g)
        for c in F.complex.faces():
            if not is_pillar_face(F, c):
                continue
            low = low_link(F, c)
            x = F.degree(c)
            low_faces = set(low.faces())
            for s in link(F.complex, c).faces():
                if s in low_faces:
                    assert F.degree(s | c) == x
                    assert derived_pillar(F, s | c) == c
                else:
                    assert F.degree(s | c) > x


def test_from_graph_rejects_edgeless():
    with pytest.raises(ValueError):
        from_graph(GenusGraph.build([(0, 2, True)], []))
