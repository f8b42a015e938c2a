"""Named sphere embeddings used throughout the tests and the CLI."""

from __future__ import annotations

from itertools import combinations, product

import numpy as np

from .embeddings import EmbeddedGraph, rotation_from_coordinates


def _polyhedron(points) -> EmbeddedGraph:
    pts = [np.asarray(p, dtype=float) for p in points]
    dist = {(i, j): np.linalg.norm(pts[i] - pts[j]) for i, j in combinations(range(len(pts)), 2)}
    short = min(dist.values())
    edges = [(i + 1, j + 1) for (i, j), d in dist.items() if abs(d - short) < 1e-9]
    return rotation_from_coordinates({i + 1: p for i, p in enumerate(pts)}, edges)


def tetrahedron() -> EmbeddedGraph:
    return _polyhedron([(1, 1, 1), (1, -1, -1), (-1, 1, -1), (-1, -1, 1)])


def octahedron() -> EmbeddedGraph:
    return _polyhedron([(1, 0, 0), (-1, 0, 0), (0, 1, 0), (0, -1, 0), (0, 0, 1), (0, 0, -1)])


def cube() -> EmbeddedGraph:
    return _polyhedron(list(product((-1, 1), repeat=3)))


def icosahedron() -> EmbeddedGraph:
    phi = (1 + 5 ** 0.5) / 2
    pts = []
    for a, b in product((-1, 1), repeat=2):
        pts += [(0, a, b * phi), (a, b * phi, 0), (b * phi, 0, a)]
    return _polyhedron(pts)


def dodecahedron() -> EmbeddedGraph:
    return icosahedron().planar_dual.embedding


def prism(k: int = 3) -> EmbeddedGraph:
    """The ``k``-gonal prism; ``prism(3)`` is the 6-vertex cubic graph."""
    pts = []
    for z in (-1, 1):
        for i in range(k):
            t = 2 * np.pi * i / k
            pts.append((np.cos(t), np.sin(t), z * 0.7))
    edges = []
    for i in range(k):
        edges += [(i + 1, (i + 1) % k + 1), (k + i + 1, k + (i + 1) % k + 1), (i + 1, k + i + 1)]
    return rotation_from_coordinates({i + 1: p for i, p in enumerate(pts)}, edges)


def split_example() -> EmbeddedGraph:
    """10-vertex cubic graph with one cyclic 3-edge cut separating a
    triangle; splitting it gives K4 and the cube."""
    coords = {
        1: (0, 0.5), 2: (0.5, 0), 3: (0, -0.5), 4: (-0.5, 0), 5: (0, 1),
        6: (1.12, 0), 7: (0, -1), 8: (-1, 0), 9: (2, 0.5), 10: (2, -0.5),
    }
    edges = [(1, 2), (2, 3), (3, 4), (1, 4), (1, 5), (2, 6), (3, 7), (4, 8),
             (9, 6), (10, 6), (10, 9), (9, 5), (10, 7), (8, 7), (5, 8)]
    return rotation_from_coordinates(coords, edges)
