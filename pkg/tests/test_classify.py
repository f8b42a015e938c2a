import pytest
from hypothesis import given, strategies as st

from conftest import cubic, cubic_upto
from strongembed.catalog import cube, dodecahedron, prism, split_example, tetrahedron
from strongembed.classify import (SURFACE_NAMES, ValidationError, classify_graph, exhaustive_signature_census,
                                  format_tsv, parallel_map, projective_upper_bound_check, surface_tables)
from strongembed.embeddings import EmbeddedGraph, apply_twist, facial_cycle_set
from strongembed.graphs import automorphism_group


def test_k4_has_one_projective_class():
    rep = classify_graph(tetrahedron())
    assert rep["projective"].classes == 1
    assert rep["torus"].classes == rep["klein"].classes == 0


def test_prism():
    rep = classify_graph(prism())
    assert rep["projective"].inequivalent == 2
    assert rep["projective"].classes == 1
    assert rep["klein"].classes == 1


def test_cube_counts():
    rep = classify_graph(cube())
    assert rep["projective"].classes == 0
    assert (rep["torus"].inequivalent, rep["torus"].classes) == (7, 3)
    assert (rep["klein"].inequivalent, rep["klein"].classes) == (18, 2)


def test_dodecahedron_has_none():
    rep = classify_graph(dodecahedron())
    assert all(rep[s].classes == 0 for s in SURFACE_NAMES)


def test_representatives_are_orbit_minima():
    rep = classify_graph(split_example())
    for s in SURFACE_NAMES:
        c = rep[s]
        assert sum(len(o) for o in c.orbits) == c.inequivalent
        for r, orb in zip(c.representatives, c.orbits):
            assert r in orb
            assert r.key() == min(h.key() for h in orb)


def test_validation():
    with pytest.raises(ValidationError):
        classify_graph(tetrahedron().with_twisted([(1, 2)]))
    # a 4-cycle with chords missing: not cubic
    sq = EmbeddedGraph.from_rotation([(2, 4), (3, 1), (4, 2), (1, 3)])
    with pytest.raises(ValidationError):
        classify_graph(sq)


def test_surface_tables_reject_duplicates():
    g = cube()
    with pytest.raises(ValidationError):
        surface_tables([g, g])


def test_table_rows_small():
    rows = surface_tables(cubic_upto(10))
    got = {r.n: (r["p"], r["t"], r["k"]) for r in rows}
    assert got == {4: (1, 0, 0), 6: (1, 0, 1), 8: (2, 3, 4), 10: (7, 5, 19)}
    assert "n\tstatistic\tvalue" in format_tsv(rows)


@pytest.mark.slow
def test_table_row_16():
    (row,) = surface_tables(cubic(16))
    assert (row["p"], row["t"], row["k"]) == (917, 1084, 4253)
    assert (row["g"], row["p'"], row["t'"], row["k'"]) == (233, 11, 93, 0)


def test_parallel_map_matches_serial(monkeypatch):
    monkeypatch.setenv("STRONGEMBED_THREADS", "2")
    assert parallel_map(abs, [-3, 1, -2]) == [3, 1, 2]


def test_orbit_sizes_divide_group_order():
    for planar in cubic_upto(12):
        rep = classify_graph(planar)
        order = rep.group.order
        for s in SURFACE_NAMES:
            for orb in rep[s].orbits:
                assert order % len(orb) == 0


@pytest.mark.parametrize("planar", cubic_upto(8), ids=lambda g: f"n{g.graph.n}")
def test_census_matches_patterns(planar):
    census = exhaustive_signature_census(planar)
    rep = classify_graph(planar)
    for s in SURFACE_NAMES:
        assert census.inequivalent(s) == rep[s].inequivalent
        assert census.classes[s] == rep[s].classes
        assert {facial_cycle_set(apply_twist(planar, h)) for h in rep[s].subgraphs} == census.cycle_sets[s]


@pytest.mark.parametrize("planar", cubic(10), ids=str)
def test_census_matches_patterns_n10(planar):
    census = exhaustive_signature_census(planar, with_classes=False)
    rep = classify_graph(planar)
    for s in SURFACE_NAMES:
        sets = [facial_cycle_set(apply_twist(planar, h)) for h in rep[s].subgraphs]
        # distinct subgraphs give distinct embeddings
        assert len(set(sets)) == len(sets)
        assert set(sets) == census.cycle_sets[s]


@given(st.sampled_from(cubic_upto(14)))
def test_projective_upper_bound(planar):
    assert projective_upper_bound_check(planar)


@given(st.sampled_from(cubic_upto(12)))
def test_classes_bounded_by_inequivalent(planar):
    rep = classify_graph(planar)
    for s in SURFACE_NAMES:
        c = rep[s]
        assert c.classes <= c.inequivalent
        assert c.inequivalent <= c.classes * automorphism_group(planar.planar_dual.embedding.graph).order
