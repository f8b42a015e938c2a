"""Cyclic edge cuts, splitting and the C4C decomposition of cubic graphs, and
Apollonian networks (stacked triangulations) with their separating
triangles."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from itertools import combinations
from typing import Mapping

from .catalog import tetrahedron
from .embeddings import (EmbeddedGraph, EmbeddingError, canonical_embedded_code, canonical_embedding,
                         euler_characteristic)
from .graphs import Edge, Graph, GraphError, canonical_form, common_neighbors, components, edge
from .patterns import PatternKind, TwistedSubgraph, k4_cliques

log = logging.getLogger(__name__)


def _graph(g) -> Graph:
    return g.graph if isinstance(g, EmbeddedGraph) else g


def _require_cubic(g: Graph) -> None:
    if any(g.degree(v) != 3 for v in g.vertices):
        raise GraphError("graph is not cubic")


# ---------------------------------------------------------------------------
# cyclic edge cuts


@dataclass(frozen=True)
class CyclicEdgeCut:
    edges: frozenset[Edge]
    sides: tuple[frozenset[int], frozenset[int]]


def _components_without(g: Graph, removed: frozenset[Edge]) -> list[set[int]]:
    seen: set[int] = set()
    out = []
    for s in g.vertices:
        if s in seen:
            continue
        comp = {s}
        stack = [s]
        while stack:
            x = stack.pop()
            for y in g.adj[x]:
                if y not in comp and edge(x, y) not in removed:
                    comp.add(y)
                    stack.append(y)
        seen |= comp
        out.append(comp)
    return out


def _has_cycle(g: Graph, side: set[int], removed: frozenset[Edge]) -> bool:
    # a connected piece has a cycle iff it has at least as many edges as vertices
    m = sum(1 for u in side for v in g.adj[u] if u < v and v in side and edge(u, v) not in removed)
    return m >= len(side)


def cyclic_edge_cuts(g, size: int) -> list[CyclicEdgeCut]:
    """All edge sets of the given size whose removal leaves exactly two
    components that both contain a cycle."""
    g = _graph(g)
    # in a 3-edge-connected cubic graph a cyclic 3-cut is a matching: two cut
    # edges at v would leave a 2-edge cut after moving v across
    matching_only = size == 3 and all(g.degree(v) == 3 for v in g.vertices)
    out = []
    for es in combinations(g.sorted_edges(), size):
        if matching_only and len({x for e in es for x in e}) < 6:
            continue
        removed = frozenset(es)
        comps = _components_without(g, removed)
        if len(comps) != 2:
            continue
        if all(_has_cycle(g, c, removed) for c in comps):
            a, b = sorted(comps, key=min)
            out.append(CyclicEdgeCut(removed, (frozenset(a), frozenset(b))))
    return out


def is_cyclically_k_edge_connected(g, k: int) -> bool:
    g = _graph(g)
    _require_cubic(g)
    if k not in (4, 5):
        raise ValueError("k must be 4 or 5")
    # 3-connected cubic graphs have no cyclic cut below 3
    return not any(cyclic_edge_cuts(g, s) for s in range(3, k))


# ---------------------------------------------------------------------------
# splitting


@dataclass(frozen=True)
class Piece:
    """One side of a split, plus how its edges sit in the graph it came from.

    ``edge_map`` sends every edge of the piece to an edge of the source
    graph; the three edges at the new vertex go to the cut edges.
    """

    graph: Graph
    embedding: EmbeddedGraph | None
    vertex_map: Mapping[int, int]
    edge_map: Mapping[Edge, Edge]


def _check_cut(g: Graph, cut: CyclicEdgeCut) -> None:
    if len(cut.edges) != 3 or not cut.edges <= g.edges:
        raise GraphError("cut must be three edges of the graph")
    comps = _components_without(g, cut.edges)
    if len(comps) != 2 or not all(_has_cycle(g, c, cut.edges) for c in comps):
        raise GraphError("edges do not form a cyclic edge cut")
    if {frozenset(c) for c in comps} != set(cut.sides):
        raise GraphError("cut sides do not match the graph")


def _piece(g, side: frozenset[int], cut: CyclicEdgeCut) -> Piece:
    graph = _graph(g)
    order = sorted(side)
    new = {v: i for i, v in enumerate(order, 1)}
    x = len(order) + 1
    inner = {}        # endpoint in side -> endpoint outside
    for u, v in cut.edges:
        if u in side:
            inner[u] = v
        else:
            inner[v] = u
    edges = []
    emap = {}
    for u, v in graph.sorted_edges():
        if u in side and v in side:
            e = edge(new[u], new[v])
            edges.append(e)
            emap[e] = (u, v)
    for s in sorted(inner):
        e = edge(new[s], x)
        edges.append(e)
        emap[e] = edge(s, inner[s])
    vmap = {new[v]: v for v in order}
    pg = Graph(x, edges)
    if not isinstance(g, EmbeddedGraph):
        return Piece(pg, None, vmap, emap)
    rot = []
    for v in order:
        rot.append(tuple(x if y == inner.get(v) else new[y] for y in g.rotation[v - 1] if y in side or y == inner.get(v)))
    ends = [new[s] for s in sorted(inner)]
    for order3 in (ends, ends[::-1]):
        emb = EmbeddedGraph(pg, tuple(rot) + (tuple(order3),))
        if euler_characteristic(emb) == 2:
            return Piece(pg, emb, vmap, emap)
    raise EmbeddingError("split piece has no sphere rotation")


def split(g, cut: CyclicEdgeCut) -> tuple[Piece, Piece]:
    """Split a cyclic 3-edge cut: each side plus a new vertex on its three
    cut endpoints.  Rotations are carried along when ``g`` is embedded."""
    graph = _graph(g)
    _check_cut(graph, cut)
    return _piece(g, cut.sides[0], cut), _piece(g, cut.sides[1], cut)


@dataclass
class Decomposition:
    indecomposables: list[Piece]
    trace: list[CyclicEdgeCut] = field(default_factory=list)

    @property
    def graphs(self) -> list[Graph]:
        return [p.graph for p in self.indecomposables]


def _compose(outer: Mapping[Edge, Edge], inner: Mapping[Edge, Edge]) -> dict[Edge, Edge]:
    return {e: outer[f] for e, f in inner.items()}


def c4c_decomposition(g, choose=None) -> Decomposition:
    """Split cyclic 3-edge cuts until every piece is K4 or cyclically
    4-edge connected.  ``choose`` picks a cut from the list of candidates
    (first one by default); the result is the same up to isomorphism."""
    graph = _graph(g)
    _require_cubic(graph)
    identity = {e: e for e in graph.sorted_edges()}
    root = Piece(graph, g if isinstance(g, EmbeddedGraph) else None,
                 {v: v for v in graph.vertices}, identity)
    out = Decomposition([])
    todo = [root]
    while todo:
        p = todo.pop()
        cuts = cyclic_edge_cuts(p.graph, 3)
        if not cuts:
            out.indecomposables.append(p)
            continue
        cut = choose(cuts) if choose else cuts[0]
        out.trace.append(cut)
        src = p.embedding if p.embedding is not None else p.graph
        for q in split(src, cut):
            vmap = {v: p.vertex_map[w] for v, w in q.vertex_map.items() if w in p.vertex_map}
            todo.append(Piece(q.graph, q.embedding, vmap, _compose(p.edge_map, q.edge_map)))
    out.indecomposables.sort(key=lambda p: (p.graph.n, canonical_form(p.graph)[0]))
    return out


def is_apollonian_dual(g) -> bool:
    return all(p.graph.n == 4 for p in c4c_decomposition(_graph(g)).indecomposables)


# ---------------------------------------------------------------------------
# triangulations


def facial_triangles(t: EmbeddedGraph) -> list[tuple[int, int, int]]:
    """Faces of a sphere triangulation as oriented triples, smallest first."""
    out = set()
    for u in t.graph.vertices:
        for v in t.rotation[u - 1]:
            w = t.successor(v, u)
            if t.successor(w, v) != u:
                raise EmbeddingError("embedding is not a triangulation")
            k = min((u, v, w), (v, w, u), (w, u, v))
            out.add(k)
    return sorted(out)


def triangles(t) -> list[tuple[int, int, int]]:
    g = _graph(t)
    return [(a, b, c) for a in g.vertices for b in g.adj[a] if b > a
            for c in g.adj[a] & g.adj[b] if c > b]


def subdivide_triangle(t: EmbeddedGraph, face) -> EmbeddedGraph:
    """Put a new vertex inside a facial triangle, joined to its corners."""
    key = frozenset(face)
    for tri in facial_triangles(t):
        if frozenset(tri) == key:
            a, b, c = tri
            break
    else:
        raise EmbeddingError(f"{tuple(face)} is not a facial triangle")
    x = t.graph.n + 1
    rot = [list(r) for r in t.rotation]
    # face walk a -> b -> c: at b, c follows a; x goes between them
    for p, q in ((b, c), (c, a), (a, b)):
        r = rot[p - 1]
        r.insert(r.index(q), x)
    rot.append([b, a, c])
    return EmbeddedGraph.from_rotation(rot)


def delete_degree3_vertex(t, w: int):
    """Remove a degree-3 vertex; higher labels shift down by one."""
    g = _graph(t)
    if g.degree(w) != 3:
        raise GraphError(f"vertex {w} has degree {g.degree(w)}, not 3")

    def lab(v):
        return v - 1 if v > w else v

    if isinstance(t, EmbeddedGraph):
        rot = [[lab(y) for y in t.rotation[v - 1] if y != w] for v in g.vertices if v != w]
        return EmbeddedGraph.from_rotation(rot)
    return Graph(g.n - 1, [(lab(u), lab(v)) for u, v in g.sorted_edges() if w not in (u, v)])


def generate_apollonian_networks(v: int) -> list[EmbeddedGraph]:
    """Apollonian networks on ``v`` vertices, one per isomorphism class."""
    if v < 4:
        raise ValueError("Apollonian networks have at least 4 vertices")
    start = canonical_embedding(tetrahedron())
    level = {canonical_embedded_code(start): start}
    for size in range(5, v + 1):
        nxt: dict[bytes, EmbeddedGraph] = {}
        for t in level.values():
            for face in facial_triangles(t):
                c = subdivide_triangle(t, face)
                code = canonical_embedded_code(c)
                if code not in nxt:
                    nxt[code] = canonical_embedding(c)
        abstract = {canonical_form(t.graph)[0] for t in nxt.values()}
        if len(abstract) != len(nxt):
            raise RuntimeError("embedded and abstract deduplication disagree")
        level = nxt
        log.debug("Apollonian networks on %d vertices: %d", size, len(level))
    return [level[k] for k in sorted(level)]


def is_apollonian_network(t) -> bool:
    g = _graph(t)
    while g.n > 4:
        w = next((x for x in g.vertices if g.degree(x) == 3), None)
        if w is None:
            return False
        g = delete_degree3_vertex(g, w)
    return g.n == 4 and len(g.edges) == 6


def separating_triangles(t) -> list[tuple[int, int, int]]:
    g = _graph(t)
    return [tri for tri in triangles(g) if len(components(g, tri)) > 1]


def k23_from_separating_triangle(t, tri) -> TwistedSubgraph:
    """The K2,3 on a separating triangle and its two common neighbours."""
    g = _graph(t)
    tri = tuple(sorted(tri))
    if len(tri) != 3 or tri not in separating_triangles(g):
        raise GraphError(f"{tri} is not a separating triangle")
    a, b, c = tri
    common = sorted(common_neighbors(g, a, b) & g.adj[c])
    if len(common) != 2:
        raise GraphError("triangle does not have exactly two common neighbours")
    v, w = common
    if g.has_edge(v, w):
        raise GraphError("common neighbours are adjacent")
    return TwistedSubgraph.make(PatternKind("K2M_ODD", 2), [(x, y) for x in (v, w) for y in tri])


def k4_count(t) -> int:
    return len(k4_cliques(_graph(t)))
