import random
from itertools import combinations

import pytest
from hypothesis import given, strategies as st

from conftest import cubic, cubic_upto
from strongembed.catalog import cube, dodecahedron, icosahedron, octahedron, prism, tetrahedron
from strongembed.graphs import (Graph, GraphError, Subgraph, all_automorphisms_bruteforce, are_isomorphic,
                                automorphism_group, canonical_form, check_subgraph, common_neighbors,
                                components, is_even_subgraph, is_k_connected, subgraph_orbits)


def test_graph_rejects_loops_and_bad_vertices():
    with pytest.raises(GraphError):
        Graph(3, [(1, 1)])
    with pytest.raises(GraphError):
        Graph(3, [(1, 4)])


def test_basic_queries():
    g = Graph(4, [(1, 2), (2, 3), (3, 4)])
    assert g.degree(2) == 2
    assert g.has_edge(3, 2) and not g.has_edge(1, 3)
    assert g.is_connected()
    assert components(g, [2]) == [{1}, {3, 4}]
    assert common_neighbors(g, 1, 3) == {2}


def test_connectivity():
    assert is_k_connected(tetrahedron().graph, 3)
    assert not is_k_connected(Graph(4, [(1, 2), (2, 3), (3, 4), (4, 1)]), 3)
    assert is_k_connected(icosahedron().graph, 5)


@pytest.mark.parametrize("make,order", [
    (tetrahedron, 24), (cube, 48), (octahedron, 48), (prism, 12), (dodecahedron, 120), (icosahedron, 120),
])
def test_automorphism_group_orders(make, order):
    assert automorphism_group(make().graph).order == order


@pytest.mark.parametrize("g", cubic_upto(8), ids=lambda g: f"n{g.graph.n}")
def test_group_matches_bruteforce(g):
    brute = all_automorphisms_bruteforce(g.graph)
    grp = automorphism_group(g.graph)
    assert grp.order == len(brute)
    for s in grp.generators:
        assert tuple(s) in set(brute)


def _shuffle(g: Graph, seed: int) -> Graph:
    perm = list(g.vertices)
    random.Random(seed).shuffle(perm)
    return g.relabel(perm)


@given(st.integers(0, 10**6), st.sampled_from(cubic_upto(12)))
def test_canonical_form_is_invariant(seed, emb):
    g = emb.graph
    assert canonical_form(_shuffle(g, seed))[0] == canonical_form(g)[0]


def test_canonical_form_separates_classes():
    codes = [canonical_form(g.graph)[0] for g in cubic(12)]
    assert len(set(codes)) == len(codes) == 14


def test_canonical_relabel_reproduces_code():
    g = _shuffle(cube().graph, 3)
    code, lab = canonical_form(g)
    h = g.relabel(lab)
    assert canonical_form(h)[0] == code


def test_are_isomorphic():
    assert are_isomorphic(cube().graph, _shuffle(cube().graph, 1))
    assert not are_isomorphic(cube().graph, cubic(8)[0].graph)


def test_subgraph_checks():
    g = tetrahedron().graph
    tri = Subgraph.from_edges([(1, 2), (2, 3), (1, 3)])
    check_subgraph(g, tri)
    assert is_even_subgraph(g, tri)
    assert not is_even_subgraph(g, Subgraph.from_edges([(1, 2)]))
    with pytest.raises(GraphError):
        check_subgraph(Graph(4, [(1, 2)]), tri)


def _orbits_bruteforce(g, subs):
    perms = all_automorphisms_bruteforce(g)
    parts = []
    seen = set()
    for h in subs:
        if h in seen:
            continue
        orbit = {h.image(p) for p in perms}
        part = [x for x in subs if x in orbit]
        seen |= set(part)
        parts.append(part)
    return parts


@pytest.mark.parametrize("make", [tetrahedron, octahedron, cube, prism])
def test_subgraph_orbits_match_bruteforce(make):
    g = make().graph
    subs = [Subgraph.from_edges(p) for p in combinations(g.sorted_edges(), 2)]
    assert subgraph_orbits(g, subs) == _orbits_bruteforce(g, subs)


def test_orbits_of_triangles_in_octahedron():
    g = octahedron().graph
    tris = [Subgraph.from_edges([(a, b), (b, c), (a, c)])
            for a, b, c in combinations(g.vertices, 3)
            if g.has_edge(a, b) and g.has_edge(b, c) and g.has_edge(a, c)]
    assert len(tris) == 8
    assert len(subgraph_orbits(g, tris)) == 1
