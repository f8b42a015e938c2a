import pytest
from hypothesis import given, strategies as st

from conftest import cubic, cubic_upto
from strongembed.catalog import cube, dodecahedron, prism, split_example, tetrahedron
from strongembed.embeddings import TORUS, apply_twist, is_orientable, is_strong, surface_of
from strongembed.graphs import Graph, GraphError, is_even_subgraph
from strongembed.orientable import (MAX_CYCLE_DIMENSION, DimensionError, cycle_basis, even_face_construction,
                                    even_subgraphs, has_strong_orientable_embedding, odd_pair_construction,
                                    orientable_pipeline, orientable_witnesses_by_chi, strong_even_twists)
from strongembed.patterns import enumerate_for_surface
from strongembed.structure import is_apollonian_dual, is_cyclically_k_edge_connected


def test_even_subgraphs_of_tree_and_k4():
    tree = Graph(4, [(1, 2), (2, 3), (2, 4)])
    assert [h.edges for h in even_subgraphs(tree)] == [frozenset()]
    k4 = tetrahedron().graph
    subs = list(even_subgraphs(k4))
    assert len(subs) == 8
    assert len({h.edges for h in subs}) == 8
    assert all(is_even_subgraph(k4, h) for h in subs)


def test_cycle_space_dimension_for_ten_vertices():
    gstar = cubic(10)[0].planar_dual.embedding
    assert len(cycle_basis(gstar.graph)) == 9
    assert sum(1 for _ in even_subgraphs(gstar)) == 512


def test_dimension_cap():
    from itertools import combinations

    big = Graph(9, combinations(range(1, 10), 2))   # dimension 28
    with pytest.raises(DimensionError):
        next(even_subgraphs(big))
    assert MAX_CYCLE_DIMENSION == 24


@given(st.sampled_from(cubic_upto(10)), st.data())
def test_even_twists_are_orientable(planar, data):
    subs = list(even_subgraphs(planar.planar_dual.embedding))
    h = data.draw(st.sampled_from(subs))
    assert is_orientable(apply_twist(planar, h))


@pytest.mark.parametrize("planar", cubic_upto(10), ids=lambda g: f"n{g.graph.n}")
def test_scan_matches_direct_enumeration(planar):
    direct = set()
    for h in even_subgraphs(planar.planar_dual.embedding):
        if h.edges and is_strong(apply_twist(planar, h)):
            direct.add(h.edges)
    assert {e for e, _ in strong_even_twists(planar)} == direct


def test_cube_has_torus_witness():
    found, wit = has_strong_orientable_embedding(cube())
    assert found and wit.surface == TORUS and is_strong(wit.embedding)


def test_apollonian_duals_have_none():
    for planar in cubic_upto(12):
        if is_apollonian_dual(planar):
            assert has_strong_orientable_embedding(planar) == (False, None)
            assert orientable_pipeline(planar) is None


def test_dodecahedron_witnesses():
    wits = orientable_witnesses_by_chi(dodecahedron())
    assert {-2, -4} <= set(wits)
    for chi in (-2, -4):
        w = wits[chi]
        assert w.surface.orientable and is_strong(w.embedding)
        assert surface_of(w.embedding).euler_characteristic == chi


def test_even_face_on_cube():
    planar = cube()
    for v in planar.planar_dual.embedding.graph.vertices:
        h = even_face_construction(planar, v)
        emb = apply_twist(planar, h)
        assert surface_of(emb) == TORUS and is_strong(emb)


def test_even_face_rejects_odd_degree():
    with pytest.raises(GraphError):
        even_face_construction(tetrahedron(), 1)


def _even_face_cases(max_n):
    for planar in cubic_upto(max_n):
        if planar.graph.n > 4 and is_cyclically_k_edge_connected(planar, 4):
            g = planar.planar_dual.embedding.graph
            for v in g.vertices:
                if g.degree(v) % 2 == 0:
                    yield planar, v


@pytest.mark.parametrize("planar,v", list(_even_face_cases(12)), ids=str)
def test_even_face_construction_genus(planar, v):
    k = planar.planar_dual.embedding.graph.degree(v) // 2
    emb = apply_twist(planar, even_face_construction(planar, v))
    assert is_strong(emb) and is_orientable(emb)
    assert surface_of(emb).euler_characteristic == 4 - 2 * k


def test_odd_pair_on_dodecahedron():
    planar = dodecahedron()
    g = planar.planar_dual.embedding.graph
    for v, w in g.sorted_edges():
        h = odd_pair_construction(planar, v, w)
        assert len(h.edges) == 6
        emb = apply_twist(planar, h)
        assert is_strong(emb) and is_orientable(emb)
        assert surface_of(emb).euler_characteristic == -2


def test_odd_pair_preconditions():
    planar = cube()
    with pytest.raises(GraphError):
        odd_pair_construction(planar, 1, 2)


@pytest.mark.parametrize("planar", cubic_upto(12), ids=lambda g: f"n{g.graph.n}")
def test_pipeline_agrees_with_oracle(planar):
    found, _ = has_strong_orientable_embedding(planar)
    wit = orientable_pipeline(planar)
    assert found == (wit is not None)
    assert found != is_apollonian_dual(planar)
    if wit is not None:
        assert is_strong(wit.embedding) and wit.surface.orientable
        assert wit.surface.euler_characteristic < 2


def test_pipeline_lifts_through_splits():
    wit = orientable_pipeline(split_example())
    assert "lifted" in wit.method
    assert is_strong(wit.embedding) and wit.surface == TORUS


def test_pipeline_on_dodecahedron():
    wit = orientable_pipeline(dodecahedron())
    assert wit.method == "odd pair"
    assert wit.euler_characteristic == -2


def test_prism_has_none():
    assert orientable_pipeline(prism()) is None


@pytest.mark.parametrize("planar", cubic_upto(12), ids=lambda g: f"n{g.graph.n}")
def test_no_witness_has_degree_two_on_a_degree_three_dual_vertex(planar):
    gstar = planar.planar_dual.embedding.graph
    for edges, _ in strong_even_twists(planar):
        deg = {}
        for u, v in edges:
            deg[u] = deg.get(u, 0) + 1
            deg[v] = deg.get(v, 0) + 1
        assert not any(d == 2 and gstar.degree(x) == 3 for x, d in deg.items())
    for s in ("projective", "torus", "klein"):
        for h in enumerate_for_surface(gstar, s):
            assert not any(h.subgraph.degree(x) == 2 and gstar.degree(x) == 3 for x in h.vertices)
