"""The triangulations ``T_n``: a double wheel with three extra stacked
vertices that kill every symmetry, so their cubic duals have exponentially
many non-isomorphic strong embeddings on the torus and the Klein bottle."""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .embeddings import EmbeddedGraph
from .graphs import common_neighbors
from .patterns import enumerate_k2m
from .structure import subdivide_triangle


@dataclass(frozen=True)
class TnTriangulation:
    n: int
    embedding: EmbeddedGraph

    def v(self, i: int) -> int:
        """Rim vertices ``v_1..v_2n`` and apexes ``v_{2n+1}``, ``v_{2n+2}``."""
        if not 1 <= i <= 2 * self.n + 2:
            raise IndexError(i)
        return i

    def w(self, i: int) -> int:
        if i not in (1, 2, 3):
            raise IndexError(i)
        return 2 * self.n + 2 + i

    @property
    def apexes(self) -> tuple[int, int]:
        return 2 * self.n + 1, 2 * self.n + 2


def double_wheel(k: int) -> EmbeddedGraph:
    """Rim cycle ``1..k`` with apexes ``k+1`` (top) and ``k+2`` (bottom)."""
    top, bottom = k + 1, k + 2
    rot = []
    for i in range(1, k + 1):
        prev, nxt = (i - 2) % k + 1, i % k + 1
        rot.append((prev, top, nxt, bottom))
    rot.append(tuple(range(k, 0, -1)))
    rot.append(tuple(range(1, k + 1)))
    return EmbeddedGraph.from_rotation(rot)


def build_tn(n: int) -> TnTriangulation:
    if n < 4:
        raise ValueError("T_n is defined for n >= 4")
    t = double_wheel(2 * n)
    top = 2 * n + 1
    t = subdivide_triangle(t, (1, 2, top))            # w1
    w1 = 2 * n + 3
    t = subdivide_triangle(t, (1, 2, w1))             # w2
    t = subdivide_triangle(t, (2, 3, top))            # w3
    return TnTriangulation(n, t)


def count_k2m_in_tn(t: TnTriangulation, m: int, fixed_pair: bool = False) -> int:
    """Number of ``K_{2,m}`` with a non-adjacent 2-part; with ``fixed_pair``
    only those whose 2-part is the apex pair."""
    g = t.embedding.graph
    if fixed_pair:
        a, b = t.apexes
        if g.has_edge(a, b):
            return 0
        return comb(len(common_neighbors(g, a, b)), m)
    if m == 2:
        return len([h for h in enumerate_k2m(g, "even") if h.kind.m == 1])
    total = 0
    for a in g.vertices:
        for b in g.vertices:
            if a < b and not g.has_edge(a, b):
                total += comb(len(common_neighbors(g, a, b)), m)
    return total


def theorem_bounds(n: int) -> tuple[int, int]:
    """Lower bounds for the torus and Klein bottle class counts."""
    i = n % 2
    return comb(2 * n, n - i), comb(2 * n, n - 1 + i)


def tn_embedding_counts(t: TnTriangulation) -> tuple[int, int]:
    """(torus classes, Klein bottle classes) of the cubic dual of ``t``."""
    from .classify import classify_graph

    planar = t.embedding.planar_dual.embedding
    rep = classify_graph(planar, ("torus", "klein"))
    return rep["torus"].classes, rep["klein"].classes
