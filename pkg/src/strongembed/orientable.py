"""Strong embeddings on orientable surfaces of positive genus.

Twisting the dual edges of an even subgraph of ``G*`` keeps the embedding
orientable, so scanning the cycle space of the dual is an exhaustive
oracle.  The constructive route handles cyclically 4-edge-connected graphs
directly and lifts witnesses through the C4C decomposition otherwise.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

import numpy as np

from . import _kernels
from .embeddings import EmbeddedGraph, EmbeddingError, SurfaceId, apply_twist, is_strong, surface_of
from .graphs import Edge, Graph, GraphError, Subgraph, edge
from .patterns import PatternKind, TwistedSubgraph, enumerate_for_surface
from .structure import c4c_decomposition, is_apollonian_dual, is_cyclically_k_edge_connected

MAX_CYCLE_DIMENSION = 24


class DimensionError(ValueError):
    pass


def _graph(g) -> Graph:
    return g.graph if isinstance(g, EmbeddedGraph) else g


def cycle_basis(g: Graph) -> list[frozenset[Edge]]:
    """Fundamental cycles (as edge sets) of a BFS spanning forest."""
    parent: dict[int, int] = {}
    depth: dict[int, int] = {}
    tree: set[Edge] = set()
    for root in g.vertices:
        if root in parent:
            continue
        parent[root], depth[root] = 0, 0
        queue = [root]
        for x in queue:
            for y in sorted(g.adj[x]):
                if y not in parent:
                    parent[y], depth[y] = x, depth[x] + 1
                    tree.add(edge(x, y))
                    queue.append(y)
    basis = []
    for u, v in g.sorted_edges():
        if (u, v) in tree:
            continue
        cyc = {(u, v)}
        a, b = u, v
        while a != b:
            if depth[a] < depth[b]:
                a, b = b, a
            cyc.add(edge(a, parent[a]))
            a = parent[a]
        basis.append(frozenset(cyc))
    return basis


def _check_dimension(g: Graph) -> list[frozenset[Edge]]:
    basis = cycle_basis(g)
    if len(basis) > MAX_CYCLE_DIMENSION:
        raise DimensionError(f"cycle space dimension {len(basis)} exceeds {MAX_CYCLE_DIMENSION}")
    return basis


def even_subgraphs(gstar) -> Iterator[Subgraph]:
    """Every element of the cycle space, the empty subgraph first."""
    g = _graph(gstar)
    basis = _check_dimension(g)
    cur: set[Edge] = set()
    yield Subgraph.from_edges(())
    for step in range(1, 1 << len(basis)):
        cur ^= basis[(step & -step).bit_length() - 1]
        yield Subgraph.from_edges(cur)


@dataclass(frozen=True)
class OrientableWitness:
    dual_edges: frozenset[Edge]
    embedding: EmbeddedGraph
    surface: SurfaceId
    method: str

    @property
    def euler_characteristic(self) -> int:
        return self.surface.euler_characteristic


def _witness(planar: EmbeddedGraph, dual_edges, method: str) -> OrientableWitness:
    emb = apply_twist(planar, dual_edges)
    return OrientableWitness(frozenset(dual_edges), emb, surface_of(emb), method)


def strong_even_twists(planar: EmbeddedGraph) -> list[tuple[frozenset[Edge], int]]:
    """All nonempty even subgraphs of the dual whose twist is strong, with
    the Euler characteristic of the resulting embedding."""
    d = planar.planar_dual
    basis = _check_dimension(d.embedding.graph)
    t = planar.darts
    masks = [t.mask(d.to_primal[e] for e in cyc) for cyc in basis]
    found, orbits = _kernels.scan_masks(t.succ, t.pred, t.edge_of, t.head, t.nverts,
                                        len(t.edges), np.asarray(masks, dtype=np.uint64))
    g = planar.graph
    out = []
    for mask, orb in zip(found.tolist(), orbits.tolist()):
        if mask == 0:
            continue
        dual_edges = frozenset(d.to_dual[e] for e in t.edges_of_mask(mask))
        out.append((dual_edges, g.n - len(g.edges) + orb // 2))
    out.sort(key=lambda p: (len(p[0]), sorted(p[0])))
    return out


def has_strong_orientable_embedding(planar: EmbeddedGraph) -> tuple[bool, OrientableWitness | None]:
    """Exhaustive oracle over the cycle space of the dual."""
    found = strong_even_twists(planar)
    if not found:
        return False, None
    return True, _witness(planar, found[0][0], "oracle")


def orientable_witnesses_by_chi(planar: EmbeddedGraph) -> dict[int, OrientableWitness]:
    """One oracle witness per attained Euler characteristic."""
    out: dict[int, OrientableWitness] = {}
    for dual_edges, chi in strong_even_twists(planar):
        if chi not in out:
            out[chi] = _witness(planar, dual_edges, "oracle")
    return out


# ---------------------------------------------------------------------------
# constructions


def _cycle_subgraph(gstar: Graph, cycle: list[int]) -> TwistedSubgraph:
    edges = []
    for a, b in zip(cycle, cycle[1:] + cycle[:1]):
        if not gstar.has_edge(a, b):
            raise GraphError(f"consecutive neighbours {a}, {b} are not adjacent in the dual")
        edges.append(edge(a, b))
    return TwistedSubgraph.make(PatternKind("CYCLE", len(cycle)), edges)


def even_face_construction(planar: EmbeddedGraph, v: int) -> TwistedSubgraph:
    """The cycle through the neighbours of an even-degree dual vertex."""
    gstar = planar.planar_dual.embedding
    deg = gstar.graph.degree(v)
    if deg % 2 or deg < 4:
        raise GraphError(f"dual vertex {v} has degree {deg}; need an even degree of at least 4")
    return _cycle_subgraph(gstar.graph, list(gstar.rotation[v - 1]))


def odd_pair_construction(planar: EmbeddedGraph, v: int, w: int) -> TwistedSubgraph:
    """The cycle around two adjacent odd-degree dual vertices, both of degree
    at least 5."""
    gstar = planar.planar_dual.embedding
    g = gstar.graph
    if not g.has_edge(v, w):
        raise GraphError(f"dual vertices {v} and {w} are not adjacent")
    for x in (v, w):
        if g.degree(x) % 2 == 0 or g.degree(x) < 5:
            raise GraphError(f"dual vertex {x} needs odd degree of at least 5")
    rv = list(gstar.rotation[v - 1])
    k = rv.index(w)
    around_v = rv[k + 1:] + rv[:k]
    rw = list(gstar.rotation[w - 1])
    start, stop = around_v[-1], around_v[0]
    i = rw.index(start)
    step = -1 if rw[(i + 1) % len(rw)] == v else 1
    around_w = []
    j = (i + step) % len(rw)
    while rw[j] != stop:
        if rw[j] == v:
            raise EmbeddingError("rotation at the pair is inconsistent")
        around_w.append(rw[j])
        j = (j + step) % len(rw)
    return _cycle_subgraph(g, around_v + around_w)


def _verified(planar: EmbeddedGraph, h, method: str) -> OrientableWitness:
    wit = _witness(planar, h.edges if hasattr(h, "edges") else h, method)
    if not (wit.surface.orientable and is_strong(wit.embedding)):
        raise EmbeddingError(f"{method} did not produce a strong orientable embedding")
    return wit


def _four_connected_witness(planar: EmbeddedGraph) -> OrientableWitness:
    gstar = planar.planar_dual.embedding
    g = gstar.graph
    if not is_cyclically_k_edge_connected(planar.graph, 5):
        torus = [h for h in enumerate_for_surface(gstar, "torus")]
        if torus:
            return _verified(planar, torus[0], "torus pattern")
    even = [v for v in g.vertices if g.degree(v) % 2 == 0]
    if even:
        return _verified(planar, even_face_construction(planar, even[0]), "even face")
    for v, w in g.sorted_edges():
        if g.degree(v) >= 5 and g.degree(w) >= 5:
            return _verified(planar, odd_pair_construction(planar, v, w), "odd pair")
    raise EmbeddingError("no construction applies")


def lift_witness(planar: EmbeddedGraph, piece, wit: OrientableWitness) -> OrientableWitness:
    """Carry a witness on an indecomposable back to ``planar``."""
    pd = piece.embedding.planar_dual
    primal = [piece.edge_map[pd.to_primal[e]] for e in wit.dual_edges]
    d = planar.planar_dual
    lifted = _witness(planar, [d.to_dual[e] for e in primal], wit.method + " (lifted)")
    if not is_strong(lifted.embedding) or lifted.surface != wit.surface:
        raise EmbeddingError("lifted witness does not re-verify")
    return lifted


def orientable_pipeline(planar: EmbeddedGraph) -> OrientableWitness | None:
    """A strong orientable witness, or ``None`` for Apollonian duals."""
    if is_apollonian_dual(planar):
        return None
    if is_cyclically_k_edge_connected(planar.graph, 4):
        return _four_connected_witness(planar)
    for piece in c4c_decomposition(planar).indecomposables:
        if piece.graph.n > 4:
            return lift_witness(planar, piece, _four_connected_witness(piece.embedding))
    raise EmbeddingError("decomposition has no piece other than K4")
