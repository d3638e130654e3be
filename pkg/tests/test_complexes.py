"""Simplicial complexes: construction, faces, f/h-vectors, flagness."""

import itertools

import pytest
from hypothesis import given, strategies as st

from subdiv.complexes import (
    SchemaError,
    SimplicialComplex,
    complex_from_json,
    complex_to_json,
    f_vector_from_h,
    face,
    from_facets,
    full_simplex,
    h_polynomial,
    is_flag,
)
from subdiv.poly import eval_at, parse_poly

P = parse_poly


def sd_triangle() -> SimplicialComplex:
    """Order complex of the nonempty subsets of {1,2,3}, built by hand.

    Subset ids: 1,2,3 = vertices, 4 = {1,2}, 5 = {1,3}, 6 = {2,3},
    7 = {1,2,3}.  Facets are the maximal chains vertex < edge < top.
    """
    return from_facets(
        [(1, 4, 7), (2, 4, 7), (1, 5, 7), (3, 5, 7), (2, 6, 7), (3, 6, 7)]
    )


def figure_complex() -> SimplicialComplex:
    # three triangles glued along a path: 5 vertices, 7 edges
    return from_facets([(1, 3, 4), (3, 4, 5), (2, 4, 5)])


class TestFaceHelper:
    def test_sorts_and_dedupes(self):
        assert face([3, 1, 2, 1]) == (1, 2, 3)

    def test_empty(self):
        assert face([]) == ()

    def test_rejects_non_integers(self):
        with pytest.raises(TypeError):
            face(["a"])


class TestConstruction:
    def test_duplicate_facets_merge(self):
        K = from_facets([(1, 2), (2, 3), (2, 1)])
        assert K.facets == ((1, 2), (2, 3))

    def test_dominated_facet_dropped(self):
        K = from_facets([(1, 2, 3), (1, 2)])
        assert K.facets == ((1, 2, 3),)

    def test_void_versus_empty(self):
        void = from_facets([])
        empty = from_facets([()])
        assert void.is_void and not empty.is_void
        assert void.f_vector() == ()
        assert empty.f_vector() == (1,)
        assert list(empty.faces()) == [()]
        assert list(void.faces()) == []

    def test_canonical_facet_order(self):
        K = from_facets([(2, 3), (1, 2), (4,)])
        assert K.facets == ((4,), (1, 2), (2, 3))

    def test_vertices(self):
        assert figure_complex().vertices == (1, 2, 3, 4, 5)

    def test_equality_ignores_input_order(self):
        a = from_facets([(1, 2), (2, 3)])
        b = from_facets([(2, 3), (1, 2), (2,)])
        assert a == b
        assert hash(a) == hash(b)


class TestFaces:
    def test_simplex_counts(self):
        K = full_simplex((1, 2, 3))
        assert K.f_vector() == (1, 3, 3, 1)
        assert len(list(K.faces())) == 8

    def test_figure_f_vector(self):
        assert figure_complex().f_vector() == (1, 5, 7, 3)

    def test_sd_f_vector(self):
        assert sd_triangle().f_vector() == (1, 7, 12, 6)

    def test_contains(self):
        K = figure_complex()
        assert (3, 4) in K
        assert () in K
        assert (1, 5) not in K

    def test_face_count_matches_f_vector(self):
        for K in (figure_complex(), sd_triangle(), full_simplex(range(1, 5))):
            assert len(list(K.faces())) == sum(K.f_vector())

    @given(
        st.lists(
            st.lists(st.integers(1, 8), min_size=1, max_size=4),
            min_size=1,
            max_size=6,
        )
    )
    def test_closed_under_subsets(self, raw):
        K = from_facets(raw)
        fs = set(K.faces())
        for G in fs:
            for v in G:
                assert tuple(x for x in G if x != v) in fs


class TestDimensionPurity:
    def test_dimension(self):
        assert full_simplex((1, 2, 3)).dimension() == 2
        assert from_facets([()]).dimension() == -1
        assert from_facets([]).dimension() == -2

    def test_pure(self):
        assert figure_complex().is_pure()
        assert not from_facets([(1, 2), (3,)]).is_pure()


class TestHPolynomial:
    @pytest.mark.parametrize("n", range(1, 6))
    def test_simplex_is_one(self, n):
        K = full_simplex(range(1, n + 1))
        assert h_polynomial(K, n) == (1,)

    def test_defaults_to_dimension(self):
        assert h_polynomial(sd_triangle()) == P("1+4x+x^2")

    def test_figure(self):
        assert h_polynomial(figure_complex()) == P("1+2x")

    def test_empty_complex(self):
        assert h_polynomial(from_facets([()])) == (1,)

    def test_ambient_degree_too_small(self):
        with pytest.raises(ValueError):
            h_polynomial(full_simplex((1, 2, 3)), 2)

    def test_at_one_counts_facets(self):
        for K in (figure_complex(), sd_triangle()):
            h = h_polynomial(K)
            assert eval_at(h, 1) == len(K.facets)

    @pytest.mark.parametrize("size", [2, 3, 4])
    @given(data=st.data())
    def test_f_vector_round_trip(self, size, data):
        pool = list(itertools.combinations(range(1, 8), size))
        raw = data.draw(st.lists(st.sampled_from(pool), min_size=1, max_size=8))
        K = from_facets(raw)
        n = K.dimension() + 1
        h = h_polynomial(K, n)
        fv = K.f_vector() + (0,) * (n + 1 - len(K.f_vector()))
        assert f_vector_from_h(h, n) == fv
        assert eval_at(h, 1) == len(K.facets)


class TestFlag:
    def test_hollow_triangle(self):
        assert not is_flag(from_facets([(1, 2), (2, 3), (1, 3)]))

    def test_full_simplex(self):
        assert is_flag(full_simplex((1, 2, 3, 4)))

    def test_barycentric_complex(self):
        assert is_flag(sd_triangle())

    def test_two_hollow_triangles(self):
        K = from_facets([(1, 2), (2, 3), (1, 3), (3, 4), (4, 5), (3, 5)])
        assert not is_flag(K)

    def test_void_and_empty(self):
        assert is_flag(from_facets([]))
        assert is_flag(from_facets([()]))


class TestJson:
    def test_round_trip(self):
        K = figure_complex()
        assert complex_from_json(complex_to_json(K)) == K

    def test_labels_survive(self):
        K = from_facets([(1, 2)], labels={1: "left", 2: "right"})
        out = complex_to_json(K)
        assert out["labels"] == {"1": "left", "2": "right"}
        assert complex_from_json(out).labels[2] == "right"

    def test_void_and_empty(self):
        assert complex_to_json(from_facets([])) == {"vertices": [], "facets": []}
        back = complex_from_json({"vertices": [], "facets": [[]]})
        assert back.f_vector() == (1,)

    def test_rejects_bad_shapes(self):
        with pytest.raises(SchemaError) as err:
            complex_from_json({"vertices": [1], "facets": [[1], "x"]})
        assert err.value.path == "/facets/1"
        with pytest.raises(SchemaError) as err:
            complex_from_json({"vertices": [1, 2], "facets": [[1, 2.5]]})
        assert err.value.path == "/facets/0/1"
        with pytest.raises(SchemaError) as err:
            complex_from_json([1, 2])
        assert err.value.path == ""

    def test_rejects_vertex_mismatch(self):
        with pytest.raises(SchemaError) as err:
            complex_from_json({"vertices": [1, 2, 3], "facets": [[1, 2]]})
        assert err.value.path == "/vertices"

    def test_rejects_unknown_facet_vertex(self):
        with pytest.raises(SchemaError) as err:
            complex_from_json({"vertices": [1], "facets": [[1, 9]]})
        assert err.value.path == "/facets/0"
