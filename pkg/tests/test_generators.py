"""Canonical complexes and the complex-building operators."""

import itertools
from math import comb

import pytest

from eulerian_kit import (
    InputError,
    SimplicialComplex,
    check_main_formula,
    euler_characteristic,
    f_poly_eval,
    f_vector,
    h_vector,
    is_eulerian,
)
from eulerian_kit import generators as gen

import oracles


def test_simplex_boundary_f_vectors():
    assert f_vector(gen.simplex_boundary(2)) == [3, 3]
    assert f_vector(gen.simplex_boundary(3)) == [4, 6, 4]
    assert f_vector(gen.simplex_boundary(5)) == [6, 15, 20, 15, 6]
    # alternating sum of (6,15,20,15,6); boundary of an odd simplex is an
    # even-dimensional sphere
    assert euler_characteristic(gen.simplex_boundary(5)) == 2
    assert euler_characteristic(gen.simplex_boundary(4)) == 0


@pytest.mark.parametrize("n", range(2, 7))
def test_simplex_boundary_counts_are_binomials(n):
    fv = f_vector(gen.simplex_boundary(n))
    assert fv == [comb(n + 1, i + 1) for i in range(n)]


def test_simplex_boundary_rejects_n_below_one():
    with pytest.raises(InputError):
        gen.simplex_boundary(0)


def test_cross_polytope_small_cases():
    assert f_vector(gen.cross_polytope_boundary(2)) == [4, 4]
    K = gen.cross_polytope_boundary(3)
    assert f_vector(K) == [6, 12, 8]
    assert euler_characteristic(K) == 2
    with pytest.raises(InputError):
        gen.cross_polytope_boundary(0)


@pytest.mark.parametrize("n", range(1, 6))
def test_cross_polytope_counts_match_formula(n):
    fv = f_vector(gen.cross_polytope_boundary(n))
    assert fv == [comb(n, i + 1) * 2 ** (i + 1) for i in range(n)]


def test_cross_polytope_has_no_antipodal_faces():
    K = gen.cross_polytope_boundary(3)
    for face in K.faces():
        labels = K.labels_of(face)
        axes = [lab[1:] for lab in labels]
        assert len(set(axes)) == len(axes)


def test_cross_polytope_is_flag():
    for n in range(1, 5):
        assert gen.cross_polytope_boundary(n).is_flag().holds


def test_polygon_triangle_equals_simplex_boundary_2():
    assert oracles.complex_faces(gen.polygon(3)) == oracles.complex_faces(
        gen.simplex_boundary(2)
    )
    with pytest.raises(InputError):
        gen.polygon(2)


def test_polygon_formula_check_fails_in_odd_dimension():
    rep = check_main_formula(gen.polygon(6))
    assert not rep.holds
    assert rep.values["rhs"] == 3


def test_torus7_construction():
    K = gen.torus7()
    assert f_vector(K) == [7, 21, 14]
    assert euler_characteristic(K) == 0
    assert is_eulerian(K).holds


def test_torus7_every_edge_in_exactly_two_facets():
    K = gen.torus7()
    counts = {}
    for facet in K.facets:
        for e in itertools.combinations(facet, 2):
            counts[e] = counts.get(e, 0) + 1
    assert set(counts.values()) == {2}
    assert len(counts) == 21


def test_projective_plane6_construction():
    K = gen.projective_plane6()
    assert f_vector(K) == [6, 15, 10]
    assert euler_characteristic(K) == 1
    assert is_eulerian(K).holds
    # 2-neighborly: every vertex pair is an edge
    assert len(K.faces_of_dim(1)) == comb(6, 2)


def test_projective_plane6_vertex_links_are_5_cycles():
    K = gen.projective_plane6()
    for v in range(6):
        L = K.link((v,))
        assert f_vector(L) == [5, 5]
        degrees = {}
        for a, b in L.faces_of_dim(1):
            degrees[a] = degrees.get(a, 0) + 1
            degrees[b] = degrees.get(b, 0) + 1
        assert set(degrees.values()) == {2}


def test_cone_examples():
    pt = gen.cone(SimplicialComplex.from_facets([]))
    assert f_vector(pt) == [1]
    C = gen.cone(gen.polygon(3))
    assert f_vector(C) == [4, 6, 3]
    for t in (-2, -1, 0, 1, 2):
        assert f_poly_eval(C, t) == f_poly_eval(gen.polygon(3), t) * (t + 1)


def test_cone_chi_is_one_for_every_nonempty_input():
    for K in (gen.polygon(8), gen.torus7(), gen.simplex_boundary(2)):
        assert euler_characteristic(gen.cone(K)) == 1


def test_suspension_of_square_is_octahedron():
    S = gen.suspension(gen.polygon(4))
    assert f_vector(S) == [6, 12, 8]
    assert oracles.complex_faces(S) == {
        frozenset(m) for m in map(set, _octahedron_faces(S))
    }


def _octahedron_faces(S):
    # the suspension's faces, recomputed by brute force from its facets
    return [set(f) for f in oracles.closure_of([S.labels_of(f) for f in S.facets])]


def test_suspension_of_spheres_is_eulerian():
    for n in range(2, 5):
        assert is_eulerian(gen.suspension(gen.simplex_boundary(n))).holds


def test_suspension_of_torus_is_not_eulerian():
    rep = is_eulerian(gen.suspension(gen.torus7()))
    assert not rep.holds


def test_join_of_points_is_edge():
    pt = lambda name: SimplicialComplex.from_facets([[name]])
    J = gen.join(pt("a"), pt("b"))
    assert f_vector(J) == [2, 1]


def test_join_of_two_triangle_boundaries_is_a_3_sphere():
    J = gen.join(gen.simplex_boundary(2), gen.simplex_boundary(2))
    assert f_vector(J) == [6, 15, 18, 9]
    assert is_eulerian(J).holds
    assert euler_characteristic(J) == 0


def test_join_relabels_the_right_side_with_primes():
    J = gen.join(gen.simplex_boundary(2), gen.simplex_boundary(2))
    assert J.vertex_table.labels == ("0", "1", "2", "0'", "1'", "2'")


def test_join_with_empty_is_identity():
    K = gen.torus7()
    E = SimplicialComplex.from_facets([])
    assert gen.join(K, E) is K
    assert gen.join(E, K) is K


def test_join_face_count_matches_brute_force():
    A, B = gen.polygon(3), gen.simplex_boundary(2)
    J = gen.join(A, B)
    # brute force: unions of (possibly empty) faces of each side
    fa = list(oracles.complex_faces(A)) + [frozenset()]
    fb = [frozenset(lab + "'" for lab in f) for f in oracles.complex_faces(B)]
    fb.append(frozenset())
    want = {a | b for a in fa for b in fb} - {frozenset()}
    assert oracles.complex_faces(J) == want


def test_disjoint_union_adds_f_vectors_componentwise():
    D = gen.disjoint_union(gen.simplex_boundary(3), gen.simplex_boundary(3))
    assert f_vector(D) == [8, 12, 8]
    assert euler_characteristic(D) == 4
    D2 = gen.disjoint_union(gen.torus7(), gen.polygon(4))
    assert f_vector(D2) == [7 + 4, 21 + 4, 14]


def test_disjoint_union_with_empty_is_identity():
    K = gen.polygon(5)
    E = SimplicialComplex.from_facets([])
    assert gen.disjoint_union(K, E) is K
    assert gen.disjoint_union(E, K) is K


def test_disjoint_union_of_mixed_dimensions_is_impure():
    D = gen.disjoint_union(gen.simplex_boundary(3), gen.polygon(3))
    assert not D.is_pure()
    assert not is_eulerian(D).holds


def test_subdivision_of_an_edge_is_a_two_edge_path():
    K = SimplicialComplex.from_facets([["a", "b"]])
    S = gen.barycentric_subdivision(K)
    assert f_vector(S) == [3, 2]
    assert S.vertex_table.labels == ("b{0}", "b{1}", "b{0.1}")


def test_subdivision_of_tetra_boundary():
    S = gen.barycentric_subdivision(gen.simplex_boundary(3))
    assert f_vector(S) == [14, 36, 24]
    assert euler_characteristic(S) == 2
    assert is_eulerian(S).holds
    rep = check_main_formula(S)
    assert rep.holds
    assert rep.values["rhs"] == 14 - 18 + 6 == 2


def test_subdivision_of_empty_complex_is_empty():
    E = SimplicialComplex.from_facets([])
    assert gen.barycentric_subdivision(E).is_empty()


def test_subdivision_counts_chains():
    # face counts of the subdivision are chain counts of the face poset
    K = gen.torus7()
    S = gen.barycentric_subdivision(K)
    faces = list(oracles.complex_faces(K))
    n_chains_2 = sum(
        1 for a in faces for b in faces if a < b
    )
    n_chains_3 = sum(
        1 for a in faces for b in faces for c in faces if a < b < c
    )
    assert f_vector(S) == [len(faces), n_chains_2, n_chains_3]


def test_subdivision_preserves_eulerian_verdicts():
    positives = [gen.simplex_boundary(3), gen.cross_polytope_boundary(2), gen.torus7()]
    for K in positives:
        assert is_eulerian(gen.barycentric_subdivision(K)).holds
    negatives = [SimplicialComplex.from_facets([["a", "b", "c"], ["a", "b", "d"]])]
    for K in negatives:
        assert not is_eulerian(gen.barycentric_subdivision(K)).holds


def test_generator_registry_dispatch():
    spec = gen.GeneratorSpec("suspension", (), (gen.GeneratorSpec("torus7"),))
    K = gen.build(spec)
    assert f_vector(K) == [9, 35, 56, 28]
    assert spec.to_expr() == "suspension(torus7)"
    with pytest.raises(InputError):
        gen.build(gen.GeneratorSpec("nonesuch"))
    with pytest.raises(InputError):
        gen.build(gen.GeneratorSpec("torus7", (3,)))
    with pytest.raises(InputError):
        gen.build(gen.GeneratorSpec("join", (), (gen.GeneratorSpec("torus7"),)))
