"""Generation of simple planar triangulations by vertex splitting, and of
3-connected cubic planar graphs as their duals."""

from __future__ import annotations

import logging
from typing import Iterator

from .catalog import tetrahedron
from .embeddings import EmbeddedGraph, canonical_embedded_code, canonical_embedding

log = logging.getLogger(__name__)

ROUTINE_MAX_CUBIC = 16


def split_vertex(t: EmbeddedGraph, u: int, i: int, j: int) -> EmbeddedGraph:
    """Split ``u`` along the neighbours at rotation positions ``i != j``.

    With rotation ``(a, x_1..x_p, b, y_1..y_q)`` at ``u`` (``a`` at position
    ``i``, ``b`` at ``j``), ``u`` keeps ``(a, x.., b, u'')`` and the new
    vertex ``u''`` gets ``(b, y.., a, u)``.  This is the inverse of
    contracting the edge ``u u''``.
    """
    rot = [list(r) for r in t.rotation]
    r = rot[u - 1]
    d = len(r)
    if i == j:
        raise ValueError("split needs two distinct neighbours")
    arc1 = [r[(i + k) % d] for k in range((j - i) % d + 1)]   # a .. b
    arc2 = [r[(j + k) % d] for k in range((i - j) % d + 1)]   # b .. a
    a, b = arc1[0], arc1[-1]
    w = t.graph.n + 1
    rot[u - 1] = arc1 + [w]
    rot.append(arc2 + [u])
    for x in arc2[1:-1]:
        rx = rot[x - 1]
        rx[rx.index(u)] = w
    ra = rot[a - 1]
    k = ra.index(u)
    ra[k:k + 1] = [u, w]
    rb = rot[b - 1]
    k = rb.index(u)
    rb[k:k + 1] = [w, u]
    return EmbeddedGraph.from_rotation(rot)


def _children(t: EmbeddedGraph) -> Iterator[EmbeddedGraph]:
    for u in t.graph.vertices:
        d = len(t.rotation[u - 1])
        for i in range(d):
            for j in range(i + 1, d):
                yield split_vertex(t, u, i, j)


def triangulations(v: int) -> list[EmbeddedGraph]:
    """All simple planar triangulations on ``v >= 4`` vertices, one per
    isomorphism class (reflections identified), canonically labeled."""
    if v < 4:
        raise ValueError("triangulations need at least 4 vertices")
    level = {canonical_embedded_code(tetrahedron()): canonical_embedding(tetrahedron())}
    for size in range(5, v + 1):
        nxt: dict[bytes, EmbeddedGraph] = {}
        for t in level.values():
            for c in _children(t):
                if min(len(r) for r in c.rotation) < 3:
                    continue
                code = canonical_embedded_code(c)
                if code not in nxt:
                    nxt[code] = canonical_embedding(c)
        level = nxt
        log.debug("triangulations on %d vertices: %d", size, len(level))
    return [level[k] for k in sorted(level)]


def generate_cubic_planar(n: int, allow_large: bool = False) -> list[EmbeddedGraph]:
    """All 3-connected cubic planar graphs on ``n`` vertices with their sphere
    rotations, one per isomorphism class."""
    if n % 2 or n < 4:
        raise ValueError("n must be even and at least 4")
    if n > ROUTINE_MAX_CUBIC and not allow_large:
        raise ValueError(f"n > {ROUTINE_MAX_CUBIC} needs allow_large=True")
    return [canonical_embedding(t.planar_dual.embedding) for t in triangulations(n // 2 + 2)]
