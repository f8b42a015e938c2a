"""Acceptance criteria 1-10.

Each test records a one-line verdict; the lines are printed at the end of
the pytest run (see ``conftest.py``) and when this file is run directly.
"""

import time
from math import comb

import pytest

from conftest import cubic, cubic_upto
from strongembed.catalog import dodecahedron
from strongembed.classify import (SURFACE_NAMES, apollonian_tables, classify_graph, exhaustive_signature_census,
                                  projective_upper_bound_check, surface_tables)
from strongembed.embeddings import apply_twist, facial_cycle_set, is_orientable, is_strong, surface_of
from strongembed.families import build_tn, count_k2m_in_tn, theorem_bounds, tn_embedding_counts
from strongembed.generate import generate_cubic_planar
from strongembed.graphs import automorphism_group
from strongembed.orientable import even_face_construction, has_strong_orientable_embedding, orientable_witnesses_by_chi
from strongembed.structure import (generate_apollonian_networks, is_apollonian_dual, is_cyclically_k_edge_connected,
                                   k4_count, separating_triangles, triangles)

RESULTS: dict[int, tuple[bool, str]] = {}


def record(num: int, ok: bool, detail: str) -> None:
    RESULTS[num] = (ok, detail)
    assert ok, f"criterion {num}: {detail}"


def test_criterion_01_table1():
    start = time.perf_counter()
    graphs = [g for n in range(4, 13, 2) for g in generate_cubic_planar(n)]
    rows = surface_tables(graphs)
    elapsed = time.perf_counter() - start
    got = {r.n: (r["p"], r["t"], r["k"]) for r in rows}
    want = {4: (1, 0, 0), 6: (1, 0, 1), 8: (2, 3, 4), 10: (7, 5, 19), 12: (31, 33, 103)}
    record(1, got == want and elapsed < 300, f"(p,t,k) n<=12 {got} in {elapsed:.1f}s")


def test_criterion_02_table2():
    start = time.perf_counter()
    graphs = [g for n in range(4, 15, 2) for g in generate_cubic_planar(n)]
    rows = surface_tables(graphs)
    elapsed = time.perf_counter() - start
    got = {k: tuple(r[k] for r in rows) for k in ("g", "p'", "t'", "k'")}
    want = {"g": (1, 1, 2, 5, 14, 50), "p'": (0, 0, 1, 1, 2, 5),
            "t'": (1, 1, 1, 3, 7, 24), "k'": (1, 0, 0, 0, 0, 0)}
    record(2, got == want and elapsed < 900, f"g,p',t',k' n<=14 {got} in {elapsed:.1f}s")


def test_criterion_03_apollonian_equals_no_torus():
    a = tuple(len(generate_apollonian_networks(n // 2 + 2)) for n in range(4, 15, 2))
    by_flag = tuple(sum(is_apollonian_dual(g) for g in cubic(n)) for n in range(4, 15, 2))
    rows = surface_tables(cubic_upto(14))
    t_prime = tuple(r["t'"] for r in rows)
    ok = a == (1, 1, 1, 3, 7, 24) and a == t_prime and a == by_flag
    record(3, ok, f"a_n {a}, t'_n {t_prime}, recognised duals {by_flag}")


def test_criterion_04_apollonian_tables():
    rows = apollonian_tables(14)
    p = tuple(r["pA"] for r in rows)
    k = tuple(r["kA"] for r in rows)
    ok = p == (1, 1, 2, 6, 25, 111) and k == (0, 1, 2, 10, 47, 283)
    record(4, ok, f"pA {p}, kA {k}")


def test_criterion_05_signature_oracle():
    start = time.perf_counter()
    bad = []
    for planar in cubic_upto(8):
        census = exhaustive_signature_census(planar)
        rep = classify_graph(planar)
        for s in SURFACE_NAMES:
            sets = {facial_cycle_set(apply_twist(planar, h)) for h in rep[s].subgraphs}
            if (census.inequivalent(s) != rep[s].inequivalent or census.classes[s] != rep[s].classes
                    or sets != census.cycle_sets[s]):
                bad.append((planar.graph.n, s))
    elapsed = time.perf_counter() - start
    record(5, not bad and elapsed < 600, f"all 2^(3n/2) signatures, n<=8, mismatches {bad}, {elapsed:.1f}s")


def test_criterion_06_dichotomy():
    bad = []
    graphs = cubic_upto(12)
    for planar in graphs:
        found, _ = has_strong_orientable_embedding(planar)
        if found == is_apollonian_dual(planar):
            bad.append(planar.graph.n)
    record(6, not bad, f"{len(graphs)} graphs n<=12, violations {bad}")


def test_criterion_07_constructions():
    checked = 0
    bad = []
    for planar in cubic_upto(14):
        if planar.graph.n == 4 or not is_cyclically_k_edge_connected(planar, 4):
            continue
        g = planar.planar_dual.embedding.graph
        for v in g.vertices:
            if g.degree(v) % 2:
                continue
            k = g.degree(v) // 2
            emb = apply_twist(planar, even_face_construction(planar, v))
            checked += 1
            if not (is_strong(emb) and is_orientable(emb) and surface_of(emb).euler_characteristic == 4 - 2 * k):
                bad.append((planar.graph.n, v))
    wits = orientable_witnesses_by_chi(dodecahedron())
    dodeca = all(chi in wits and is_strong(wits[chi].embedding) and wits[chi].surface.orientable
                 for chi in (-2, -4))
    record(7, not bad and checked > 0 and dodeca,
           f"{checked} even-face constructions, failures {bad}; dodecahedron chi -2/-4: {dodeca}")


def test_criterion_08_apollonian_structure():
    bad = []
    total = 0
    for v in range(4, 12):
        for t in generate_apollonian_networks(v):
            total += 1
            if (len(triangles(t)), len(separating_triangles(t)), k4_count(t)) != (3 * v - 8, v - 4, v - 3):
                bad.append(v)
    record(8, not bad, f"{total} networks on 4..11 vertices, failures {bad}")


def test_criterion_09_tn_family():
    parts = []
    ok = True
    for n in (4, 5):
        t = build_tn(n)
        g = t.embedding.graph
        order = automorphism_group(g).order
        fixed = [count_k2m_in_tn(t, m, fixed_pair=True) for m in (n - 1, n)]
        torus, klein = tn_embedding_counts(t)
        bt, bk = theorem_bounds(n)
        ok &= (g.n == 2 * n + 5 and order == 1 and fixed == [comb(2 * n, n - 1), comb(2 * n, n)]
               and torus >= bt and klein >= bk)
        parts.append(f"T_{n}: |V|={g.n} |Aut|={order} K2,m={fixed} torus {torus}>={bt} klein {klein}>={bk}")
    record(9, ok, "; ".join(parts))


def test_criterion_10_projective_bound():
    graphs = cubic_upto(14)
    bad = [g.graph.n for g in graphs if not projective_upper_bound_check(g)]
    record(10, not bad, f"{len(graphs)} graphs n<=14, violations {bad}")


def summary_lines() -> list[str]:
    lines = []
    for num in range(1, 11):
        if num in RESULTS:
            ok, detail = RESULTS[num]
            lines.append(f"criterion {num:2d}: {'PASS' if ok else 'FAIL'}  {detail}")
        else:
            lines.append(f"criterion {num:2d}: NOT RUN")
    return lines


if __name__ == "__main__":
    import subprocess
    import sys

    sys.exit(subprocess.call([sys.executable, "-m", "pytest", __file__, "-q", "-p", "no:cacheprovider"]))
