import itertools
import json
import os

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from spheredeg import io as sio
from spheredeg.errors import EmptyInputError, FaceNotInComplexError, LabelCollisionError
from spheredeg.manifolds import ball_boundary, is_combinatorial_ball, is_combinatorial_sphere
from spheredeg.simplicial import (
    SimplicialComplex,
    barycentric_subdivision,
    boundary_matrix,
    boundary_of_simplex,
    build_complex,
    cone,
    deletion,
    homological_connectivity,
    is_homologically_k_connected,
    join,
    link,
    reduced_homology,
    simplex,
    skeleton,
    star,
    tagged,
    verify_join_connectivity,
)

FIX = os.path.join(os.path.dirname(__file__), "fixtures")


def fixture(name):
    with open(os.path.join(FIX, name)) as fh:
        return sio.complex_from_dict(json.load(fh))


S0 = build_complex([["a"], ["b"]])


def cycle(k, tag="c"):
    return build_complex([[f"{tag}{i}", f"{tag}{(i + 1) % k}"] for i in range(k)])


def nonzero(profile):
    return {i: g for i, g in enumerate(profile.groups) if g != (0, ())}


# --- construction -----------------------------------------------------------

def test_containment_pruning():
    K = build_complex([["a", "b"], ["b", "c"], ["a", "b", "c"]])
    assert K.facets == {frozenset("abc")}


def test_two_points():
    assert S0.dim == 0 and len(S0.facets) == 2


def test_set_semantics():
    assert build_complex([["a", "b"], ["b", "a"]]).facets == {frozenset("ab")}


def test_empty_input_rejected():
    with pytest.raises(EmptyInputError):
        build_complex([])


def test_f_vector_and_faces():
    K = simplex("abcd")
    assert K.f_vector() == [4, 6, 4, 1]
    assert frozenset("ac") in K and frozenset("ae") not in K
    assert K.euler_characteristic() == 1


# --- operations -------------------------------------------------------------

def test_link_in_tetrahedron_boundary():
    K = boundary_of_simplex(range(4))
    L = link(K, [0])
    assert L.facets == boundary_of_simplex([1, 2, 3]).facets


def test_link_of_missing_face():
    with pytest.raises(FaceNotInComplexError):
        link(simplex("ab"), ["c"])


def test_star_and_deletion():
    K = cycle(5)
    assert set(star(K, ["c0"]).vertices) == {"c4", "c0", "c1"}
    D = deletion(K, ["c0"])
    assert "c0" not in D.vertices and len(D.facets) == 3


def test_join_of_two_s0_is_square():
    J = join(S0, build_complex([["x"], ["y"]]))
    assert len(J.facets) == 4 and J.dim == 1
    assert is_combinatorial_sphere(J, 1)


def test_join_label_collision():
    with pytest.raises(LabelCollisionError):
        join(S0, S0)
    with pytest.raises(LabelCollisionError):
        cone(S0, "a")


def test_join_with_empty_is_identity():
    assert join(SimplicialComplex.empty(), S0) == S0


def test_cone_is_acyclic():
    for K in (S0, cycle(4), fixture("rp2.json"), fixture("torus.json")):
        assert reduced_homology(cone(K, "apex")).is_trivial


# --- homology ---------------------------------------------------------------

@pytest.mark.parametrize("k", range(1, 6))
def test_simplex_boundaries(k):
    h = reduced_homology(boundary_of_simplex(range(k + 1)))
    assert nonzero(h) == {k - 1: (1, ())}


def test_rp2():
    assert nonzero(reduced_homology(fixture("rp2.json"))) == {1: (0, (2,))}


def test_torus():
    assert reduced_homology(fixture("torus.json")).groups == ((0, ()), (2, ()), (1, ()))


def test_klein_bottle():
    assert nonzero(reduced_homology(fixture("klein.json"))) == {1: (1, (2,))}


def test_three_sphere_fixture():
    assert nonzero(reduced_homology(fixture("sphere3.json"))) == {3: (1, ())}


def test_join_of_triangle_boundaries_is_three_sphere():
    J = join(boundary_of_simplex("abc"), boundary_of_simplex("xyz"))
    assert nonzero(reduced_homology(J)) == {3: (1, ())}


def test_point_has_zero_profile():
    assert reduced_homology(simplex("a")).groups == ((0, ()),)


def test_empty_complex_profile():
    assert reduced_homology(SimplicialComplex.empty()).groups == ()


def test_boundary_squares_to_zero():
    K = fixture("torus.json")
    for k in range(1, K.dim + 1):
        d_k, d_km1 = boundary_matrix(K, k), boundary_matrix(K, k - 1)
        # (d_{k-1} d_k)[r][c] = sum_m d_{k-1}[r][m] d_k[m][c]
        for r, row in d_km1.items():
            acc = {}
            for m, v in row.items():
                for c, w in d_k.get(m, {}).items():
                    acc[c] = acc.get(c, 0) + v * w
            assert not any(acc.values())


def euler_from_homology(K):
    h = reduced_homology(K)
    return 1 + sum((-1) ** i * h.rank(i) for i in range(K.dim + 1))


@pytest.mark.parametrize("name", ["rp2.json", "torus.json", "klein.json", "sphere3.json"])
def test_euler_characteristic_cross_check(name):
    K = fixture(name)
    assert K.euler_characteristic() == euler_from_homology(K)


def test_subdivision_invariance():
    for K in (fixture("rp2.json"), cycle(3), boundary_of_simplex(range(4))):
        assert reduced_homology(barycentric_subdivision(K)) == reduced_homology(K)


# --- connectivity -----------------------------------------------------------

def test_connectivity_conventions():
    assert is_homologically_k_connected(S0, -1)
    assert not is_homologically_k_connected(S0, 0)
    assert is_homologically_k_connected(cycle(4), 0)
    assert not is_homologically_k_connected(cycle(4), 1)
    assert is_homologically_k_connected(SimplicialComplex.empty(), -2)
    assert not is_homologically_k_connected(SimplicialComplex.empty(), -1)


def test_cone_any_k():
    C = cone(cycle(5), "p")
    assert all(is_homologically_k_connected(C, k) for k in range(-3, 6))
    assert homological_connectivity(C) == float("inf")


def test_homological_connectivity_values():
    assert homological_connectivity(S0) == -1
    assert homological_connectivity(boundary_of_simplex(range(4))) == 1
    assert homological_connectivity(SimplicialComplex.empty()) == -2


def test_join_connectivity_examples():
    x = build_complex([["x"], ["y"]])
    instances = [
        ("S0*S0", [(S0, -1), (x, -1)]),
        ("tri*tri", [(boundary_of_simplex("abc"), 0), (boundary_of_simplex("xyz"), 0)]),
        ("pt*rp2", [(simplex("p"), None), (tagged(fixture("rp2.json"), "r"), -1)]),
    ]
    rep = verify_join_connectivity(instances)
    assert rep.passed and rep.graphs_checked == 3


def test_join_connectivity_detects_false_claim():
    rep = verify_join_connectivity([("bad", [(S0, 0), (build_complex([["x"], ["y"]]), -1)])])
    assert not rep.passed


# --- random complexes -------------------------------------------------------

@st.composite
def random_complexes(draw, n_vertices=6):
    verts = list(range(n_vertices))
    faces = draw(st.lists(st.sets(st.sampled_from(verts), min_size=1, max_size=4), min_size=1, max_size=8))
    return build_complex(faces)


@settings(max_examples=80, deadline=None)
@given(random_complexes())
def test_random_euler_characteristic(K):
    assert K.euler_characteristic() == euler_from_homology(K)


@settings(max_examples=60, deadline=None)
@given(random_complexes(), random_complexes())
def test_join_commutes_and_euler_multiplies(K, L):
    A, B = tagged(K, "k"), tagged(L, "l")
    assert reduced_homology(join(A, B)).betti() == reduced_homology(join(B, A)).betti()
    # reduced Euler characteristics multiply up to sign: chi~(A*B) = -chi~(A) chi~(B)
    chi = lambda X: X.euler_characteristic() - 1  # noqa: E731
    assert chi(join(A, B)) == -chi(A) * chi(B)


@settings(max_examples=40, deadline=None)
@given(random_complexes(5))
def test_random_subdivision_invariance(K):
    assert reduced_homology(barycentric_subdivision(K)) == reduced_homology(K)


@settings(max_examples=60, deadline=None)
@given(random_complexes())
def test_skeleton_keeps_lower_homology(K):
    if K.dim < 2:
        return
    S = skeleton(K, K.dim - 1)
    for i in range(K.dim - 1):
        assert reduced_homology(S).groups[i] == reduced_homology(K).groups[i]


# --- manifold recognition ---------------------------------------------------

def test_tetrahedron_boundary_is_2_sphere():
    assert is_combinatorial_sphere(boundary_of_simplex(range(4)), 2)


def test_five_cycle_is_circle():
    assert is_combinatorial_sphere(cycle(5), 1)


def test_bowtie_is_not_a_sphere():
    K = build_complex([["o", "a", "b"], ["o", "c", "d"]])
    assert not is_combinatorial_sphere(K, 2)
    assert not is_combinatorial_ball(K, 2)


@pytest.mark.parametrize("name", ["rp2.json", "torus.json", "klein.json"])
def test_closed_surfaces_that_are_not_spheres(name):
    assert is_combinatorial_sphere(fixture(name), 2) is False


def test_low_dimensional_spheres():
    assert is_combinatorial_sphere(SimplicialComplex.empty(), -1)
    assert is_combinatorial_sphere(S0, 0)
    assert not is_combinatorial_sphere(simplex("a"), 0)
    assert not is_combinatorial_sphere(disjoint_cycles(), 1)


def disjoint_cycles():
    return build_complex([[*e] for e in cycle(3, "p").facets] + [[*e] for e in cycle(3, "q").facets])


def test_balls_and_boundaries():
    assert is_combinatorial_ball(simplex("a"), 0)
    path = build_complex([["a", "b"], ["b", "c"]])
    assert is_combinatorial_ball(path, 1)
    assert ball_boundary(path, 1) == build_complex([["a"], ["c"]])
    disk = cone(cycle(6), "m")
    assert is_combinatorial_ball(disk, 2)
    assert ball_boundary(disk, 2) == cycle(6)
    assert not is_combinatorial_ball(cycle(6), 1)
    annulus = build_complex(
        [[f"o{i}", f"o{(i + 1) % 3}", f"i{i}"] for i in range(3)]
        + [[f"i{i}", f"i{(i + 1) % 3}", f"o{(i + 1) % 3}"] for i in range(3)]
    )
    assert not is_combinatorial_ball(annulus, 2)


def test_high_dimension_is_unverified():
    assert is_combinatorial_sphere(boundary_of_simplex(range(5)), 3) is None


def test_every_simplex_is_a_ball():
    for k in range(3):
        for verts in itertools.combinations("abcd", k + 1):
            assert is_combinatorial_ball(simplex(verts), k)
