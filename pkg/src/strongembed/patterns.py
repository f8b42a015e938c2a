"""Twisted subgraphs of the dual triangulation that yield strong embeddings
on the projective plane, torus and Klein bottle, plus the visited-edges
strongness test.

All enumerators take the dual graph ``gstar`` (a planar triangulation, as a
:class:`Graph` or :class:`EmbeddedGraph`) and return
:class:`TwistedSubgraph` objects in a reproducible order: vertex pairs in
lexicographic order, subsets by size and then lexicographically.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from .embeddings import KLEIN, PROJECTIVE, TORUS, EmbeddedGraph, SurfaceId
from .graphs import Edge, Graph, Subgraph, check_subgraph, common_neighbors, edge


@dataclass(frozen=True, order=True)
class PatternKind:
    family: str  # K4, K222, K2M, K2M_ODD, A3, A5, A6, CYCLE
    m: int = 0

    def __str__(self) -> str:
        if self.family == "K2M":
            return f"K2,{2 * self.m}"
        if self.family == "K2M_ODD":
            return f"K2,{2 * self.m - 1}"
        if self.family == "K222":
            return "K2,2,2"
        if self.family == "CYCLE":
            return f"C{self.m}"
        return self.family

    @classmethod
    def parse(cls, text: str) -> "PatternKind":
        if text == "K2,2,2":
            return cls("K222")
        if text.startswith("K2,"):
            part = int(text[3:])
            return cls("K2M", part // 2) if part % 2 == 0 else cls("K2M_ODD", (part + 1) // 2)
        if text.startswith("C") and text[1:].isdigit():
            return cls("CYCLE", int(text[1:]))
        return cls(text)


K4_KIND = PatternKind("K4")
K222_KIND = PatternKind("K222")


@dataclass(frozen=True)
class TwistedSubgraph:
    kind: PatternKind
    vertices: frozenset[int]
    edges: frozenset[Edge]

    @classmethod
    def make(cls, kind: PatternKind, edges: Iterable[Edge]) -> "TwistedSubgraph":
        es = frozenset(edge(*e) for e in edges)
        return cls(kind, frozenset(x for e in es for x in e), es)

    @property
    def subgraph(self) -> Subgraph:
        return Subgraph(self.vertices, self.edges)

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def key(self) -> tuple:
        return (tuple(sorted(self.vertices)), tuple(sorted(self.edges)))


def _graph(gstar) -> Graph:
    return gstar.graph if isinstance(gstar, EmbeddedGraph) else gstar


def _complete(vs) -> list[Edge]:
    return [edge(a, b) for a, b in combinations(sorted(vs), 2)]


def _bipartite(left, right) -> list[Edge]:
    return [edge(a, b) for a in left for b in right]


def k4_cliques(g: Graph) -> list[tuple[int, int, int, int]]:
    out = []
    for a in g.vertices:
        for b in sorted(x for x in g.adj[a] if x > a):
            ab = g.adj[a] & g.adj[b]
            for c in sorted(x for x in ab if x > b):
                for d in sorted(x for x in ab & g.adj[c] if x > c):
                    out.append((a, b, c, d))
    return out


def enumerate_k4(gstar) -> list[TwistedSubgraph]:
    g = _graph(gstar)
    return [TwistedSubgraph.make(K4_KIND, _complete(q)) for q in k4_cliques(g)]


def enumerate_k2m(gstar, parity: str) -> list[TwistedSubgraph]:
    """Complete bipartite ``K_{2,s}`` with a non-adjacent 2-part and ``s`` of
    the given parity (even: ``s >= 2``; odd: ``s >= 3``).  For ``K_{2,2}``
    both parts must be non-adjacent pairs."""
    if parity not in ("even", "odd"):
        raise ValueError("parity must be 'even' or 'odd'")
    g = _graph(gstar)
    out = []
    seen = set()
    for a, c in combinations(g.vertices, 2):
        if g.has_edge(a, c):
            continue
        common = sorted(common_neighbors(g, a, c))
        start = 2 if parity == "even" else 3
        for size in range(start, len(common) + 1, 2):
            for s in combinations(common, size):
                if size == 2 and g.has_edge(*s):
                    continue
                if parity == "even":
                    kind = PatternKind("K2M", size // 2)
                else:
                    kind = PatternKind("K2M_ODD", (size + 1) // 2)
                h = TwistedSubgraph.make(kind, _bipartite((a, c), s))
                if size == 2:
                    if h.edges in seen:
                        continue
                    seen.add(h.edges)
                out.append(h)
    return out


def enumerate_k222(gstar) -> list[TwistedSubgraph]:
    """Octahedral subgraphs: three disjoint vertex pairs, all 12 cross edges."""
    g = _graph(gstar)
    pairs = list(combinations(g.vertices, 2))
    out = []

    def linked(p, q):
        return all(g.has_edge(x, y) for x in p for y in q)

    for i, p in enumerate(pairs):
        for j in range(i + 1, len(pairs)):
            q = pairs[j]
            if set(p) & set(q) or not linked(p, q):
                continue
            for r in pairs[j + 1:]:
                if set(r) & (set(p) | set(q)) or not linked(p, r) or not linked(q, r):
                    continue
                es = _bipartite(p, q) + _bipartite(p, r) + _bipartite(q, r)
                out.append(TwistedSubgraph.make(K222_KIND, es))
    return out


def enumerate_a_graphs(gstar) -> list[TwistedSubgraph]:
    """A3 (two disjoint K4), A5 (two K4 sharing a vertex) and A6.

    A6 has two degree-4 vertices ``c, d`` and two disjoint adjacent pairs
    ``{a, b}``, ``{e, f}`` of their common neighbours; the edge ``cd`` is
    never part of it, whether or not ``gstar`` contains it.
    """
    g = _graph(gstar)
    cliques = k4_cliques(g)
    out = []
    for q1, q2 in combinations(cliques, 2):
        shared = len(set(q1) & set(q2))
        if shared == 0:
            out.append(TwistedSubgraph.make(PatternKind("A3"), _complete(q1) + _complete(q2)))
        elif shared == 1:
            out.append(TwistedSubgraph.make(PatternKind("A5"), _complete(q1) + _complete(q2)))
    for c, d in combinations(g.vertices, 2):
        common = sorted(common_neighbors(g, c, d))
        links = [p for p in combinations(common, 2) if g.has_edge(*p)]
        for p1, p2 in combinations(links, 2):
            if set(p1) & set(p2):
                continue
            es = [p1, p2] + _bipartite((c, d), p1 + p2)
            out.append(TwistedSubgraph.make(PatternKind("A6"), es))
    return out


def enumerate_for_surface(gstar, surface: SurfaceId | str) -> list[TwistedSubgraph]:
    if isinstance(surface, str):
        from .embeddings import SURFACES

        if surface not in SURFACES:
            raise ValueError(f"unsupported surface {surface!r}")
        surface = SURFACES[surface]
    if surface == PROJECTIVE:
        return enumerate_k4(gstar)
    if surface == TORUS:
        return enumerate_k222(gstar) + enumerate_k2m(gstar, "even")
    if surface == KLEIN:
        return enumerate_a_graphs(gstar) + enumerate_k2m(gstar, "odd")
    raise ValueError(f"unsupported surface {surface}")


# ---------------------------------------------------------------------------
# visited edges


def visited_edges(gstar: EmbeddedGraph, h) -> list[list[tuple[int, frozenset[Edge]]]]:
    """For every facial walk of ``h`` with the rotation inherited from
    ``gstar`` and all edges twisted, the visited dual edges at each vertex
    occurrence, in walk order."""
    g = gstar.graph
    if hasattr(h, "edges"):
        edges = frozenset(h.edges)
    else:
        edges = frozenset(edge(*e) for e in h)
    check_subgraph(g, Subgraph.from_edges(edges))
    hadj: dict[int, set[int]] = {}
    for u, v in edges:
        hadj.setdefault(u, set()).add(v)
        hadj.setdefault(v, set()).add(u)
    rot = {v: [x for x in gstar.rotation[v - 1] if x in hadj[v]] for v in hadj}

    def step(u, v, s):
        # arrive at v from u on side s; all edges are twisted so the side flips
        s2 = -s
        full = gstar.rotation[v - 1]
        k = full.index(u)
        swept = []
        j = 1
        while True:
            x = full[(k + s2 * j) % len(full)]
            if x in hadj[v]:
                return (v, x, s2), frozenset(swept), x
            swept.append(edge(v, x))
            j += 1

    states = sorted((u, v, s) for u in hadj for v in hadj[u] for s in (1, -1))
    seen = set()
    walks = []
    for st in states:
        if st in seen:
            continue
        mirror_seen = (st[1], st[0], st[2]) in seen
        orbit = []
        cur = st
        while cur not in seen:
            seen.add(cur)
            nxt, swept, _ = step(*cur)
            orbit.append((cur[1], swept))
            cur = nxt
        if not mirror_seen:
            walks.append(orbit)
    return walks


def strong_by_visited_edges(gstar: EmbeddedGraph, h) -> bool:
    for walk in visited_edges(gstar, h):
        used: set[Edge] = set()
        for _, swept in walk:
            if used & swept:
                return False
            used |= swept
    return True
