"""Cellular embeddings given by a rotation system and a signature.

A rotation is stored per vertex as the cyclic sequence of its neighbours
(graphs are simple, so a neighbour names the dart).  The signature is kept
as the set of twisted edges; every other edge has sign +1.

Face tracing works on (dart, side) states.  From ``((u, v), s)`` the new side
is ``s' = s * sign({u, v})`` and the next dart leaves ``v`` at the rotation
successor of ``u`` when ``s' = +1`` and at its predecessor otherwise.
"""

from __future__ import annotations

import logging
import warnings
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Mapping, Sequence

import numpy as np

from . import _kernels
from .graphs import Edge, Graph, GraphError, Subgraph, edge

log = logging.getLogger(__name__)

Dart = tuple[int, int]
FacialWalk = tuple[Dart, ...]


class EmbeddingError(ValueError):
    pass


@dataclass(frozen=True)
class SurfaceId:
    euler_characteristic: int
    orientable: bool

    def __post_init__(self):
        if self.orientable and self.euler_characteristic % 2:
            raise EmbeddingError("orientable surfaces have even Euler characteristic")
        if not self.orientable and self.euler_characteristic > 1:
            raise EmbeddingError("non-orientable surfaces have Euler characteristic <= 1")

    @property
    def genus(self) -> int:
        """Orientable genus, or crosscap number for non-orientable surfaces."""
        if self.orientable:
            return (2 - self.euler_characteristic) // 2
        return 2 - self.euler_characteristic

    @property
    def name(self) -> str:
        chi, o = self.euler_characteristic, self.orientable
        if o and chi == 2:
            return "sphere"
        if not o and chi == 1:
            return "projective"
        if o and chi == 0:
            return "torus"
        if not o and chi == 0:
            return "klein"
        return f"orientable-genus-{self.genus}" if o else f"nonorientable-genus-{self.genus}"

    def __str__(self) -> str:
        return self.name


SPHERE = SurfaceId(2, True)
PROJECTIVE = SurfaceId(1, False)
TORUS = SurfaceId(0, True)
KLEIN = SurfaceId(0, False)
SURFACES = {"projective": PROJECTIVE, "torus": TORUS, "klein": KLEIN}


class DartTable:
    """Integer arrays describing the darts of an embedding.

    ``succ[d]``/``pred[d]`` are the darts leaving ``head[d]`` right after /
    before ``reverse(d)`` in the rotation there.
    """

    def __init__(self, graph: Graph, rotation: Sequence[Sequence[int]]):
        self.darts: list[Dart] = [(u, v) for u in graph.vertices for v in rotation[u - 1]]
        self.index = {d: i for i, d in enumerate(self.darts)}
        self.edges: list[Edge] = graph.sorted_edges()
        self.edge_index = {e: i for i, e in enumerate(self.edges)}
        nd = len(self.darts)
        head = np.empty(nd, dtype=np.int32)
        rev = np.empty(nd, dtype=np.int32)
        succ = np.empty(nd, dtype=np.int32)
        pred = np.empty(nd, dtype=np.int32)
        edge_of = np.empty(nd, dtype=np.int32)
        idx = self.index
        for i, (u, v) in enumerate(self.darts):
            rot = rotation[v - 1]
            k = rot.index(u)
            head[i] = v
            rev[i] = idx[(v, u)]
            succ[i] = idx[(v, rot[(k + 1) % len(rot)])]
            pred[i] = idx[(v, rot[(k - 1) % len(rot)])]
            edge_of[i] = self.edge_index[edge(u, v)]
        self.head, self.rev, self.succ, self.pred, self.edge_of = head, rev, succ, pred, edge_of
        self.nverts = graph.n

    def signs(self, twisted: Iterable[Edge]) -> np.ndarray:
        s = np.ones(len(self.edges), dtype=np.int8)
        for e in twisted:
            s[self.edge_index[e]] = -1
        return s

    def mask(self, edges: Iterable[Edge]) -> int:
        m = 0
        for e in edges:
            m |= 1 << self.edge_index[e]
        return m

    def edges_of_mask(self, mask: int) -> frozenset[Edge]:
        return frozenset(e for i, e in enumerate(self.edges) if mask >> i & 1)


@dataclass(frozen=True)
class EmbeddedGraph:
    graph: Graph
    rotation: tuple[tuple[int, ...], ...]
    twisted: frozenset[Edge] = frozenset()

    def __post_init__(self):
        rot = tuple(tuple(r) for r in self.rotation)
        object.__setattr__(self, "rotation", rot)
        object.__setattr__(self, "twisted", frozenset(edge(*e) for e in self.twisted))
        g = self.graph
        if len(rot) != g.n:
            raise EmbeddingError("rotation must list every vertex")
        for v in g.vertices:
            r = rot[v - 1]
            if len(r) != len(set(r)) or set(r) != g.adj[v]:
                raise EmbeddingError(f"rotation at {v} does not cover its incident edges")
        if not self.twisted <= g.edges:
            raise EmbeddingError("twisted edge not in graph")

    @classmethod
    def from_rotation(
        cls, rotation: Sequence[Sequence[int]] | Mapping[int, Sequence[int]], twisted=()
    ) -> "EmbeddedGraph":
        """Build from neighbour lists; a mapping is keyed by 1-based vertex."""
        if isinstance(rotation, Mapping):
            n = max(rotation)
            rotation = [rotation[v] for v in range(1, n + 1)]
        n = len(rotation)
        g = Graph(n, ((u, v) for u in range(1, n + 1) for v in rotation[u - 1]))
        return cls(g, tuple(tuple(r) for r in rotation), frozenset(twisted))

    @cached_property
    def darts(self) -> DartTable:
        return DartTable(self.graph, self.rotation)

    @property
    def signature(self) -> dict[Edge, int]:
        return {e: (-1 if e in self.twisted else 1) for e in self.graph.sorted_edges()}

    def sign(self, u: int, v: int) -> int:
        return -1 if edge(u, v) in self.twisted else 1

    def with_twisted(self, twisted: Iterable[Sequence[int]]) -> "EmbeddedGraph":
        emb = EmbeddedGraph(self.graph, self.rotation, frozenset(edge(*e) for e in twisted))
        # darts depend only on graph and rotation
        emb.__dict__["darts"] = self.darts
        return emb

    def successor(self, v: int, u: int, step: int = 1) -> int:
        r = self.rotation[v - 1]
        return r[(r.index(u) + step) % len(r)]

    @cached_property
    def planar_dual(self) -> "DualData":
        return _build_dual(self)

    def __repr__(self) -> str:
        return (f"EmbeddedGraph(n={self.graph.n}, m={len(self.graph.edges)}, "
                f"twisted={len(self.twisted)})")


# ---------------------------------------------------------------------------
# face traversal


def _orbits(emb: EmbeddedGraph) -> list[list[tuple[int, int]]]:
    t = emb.darts
    sign = t.signs(emb.twisted)
    nstates = 2 * len(t.darts)
    seen = [False] * nstates
    out = []
    for st in range(nstates):
        if seen[st]:
            continue
        orbit = []
        cur = st
        while True:
            seen[cur] = True
            d, side = cur >> 1, (-1 if cur & 1 else 1)
            orbit.append((int(d), side))
            if side * sign[t.edge_of[d]] > 0:
                cur = 2 * int(t.succ[d])
            else:
                cur = 2 * int(t.pred[d]) + 1
            if cur == st:
                break
        out.append(orbit)
    return out


def face_traversal(emb: EmbeddedGraph) -> list[FacialWalk]:
    """One facial walk per mirror pair of state orbits, as a tuple of darts.

    Each returned walk starts at the smallest state (dart index, side +1
    first) of its mirror pair, and pairs are listed in order of that state.
    """
    t = emb.darts
    sign = t.signs(emb.twisted)
    orbits = _orbits(emb)
    where = {}
    for k, orb in enumerate(orbits):
        for s in orb:
            where[s] = k
    taken = set()
    walks = []
    for k, orb in enumerate(orbits):
        if k in taken:
            continue
        d, s = orb[0]
        mirror = (int(t.rev[d]), -s * int(sign[t.edge_of[d]]))
        m = where[mirror]
        if m == k:
            warnings.warn("facial orbit equal to its own mirror; counted once", RuntimeWarning)
        taken.update((k, m))
        walks.append(tuple(t.darts[d] for d, _ in orb))
    return walks


def walk_vertices(walk: FacialWalk) -> tuple[int, ...]:
    return tuple(d[0] for d in walk)


def face_count(emb: EmbeddedGraph) -> int:
    t = emb.darts
    orbits, _ = _kernels.face_stats(t.succ, t.pred, t.edge_of, t.head,
                                    t.signs(emb.twisted), t.nverts)
    if orbits % 2:
        return len(face_traversal(emb))
    return orbits // 2


def euler_characteristic(emb: EmbeddedGraph) -> int:
    if not emb.graph.is_connected():
        raise EmbeddingError("embedding of a disconnected graph")
    return emb.graph.n - len(emb.graph.edges) + face_count(emb)


def is_orientable(emb: EmbeddedGraph) -> bool:
    """Switching test: some vertex signs multiply to the signature on every edge."""
    g = emb.graph
    sigma = {}
    for root in g.vertices:
        if root in sigma:
            continue
        sigma[root] = 1
        stack = [root]
        while stack:
            x = stack.pop()
            for y in g.adj[x]:
                want = sigma[x] * emb.sign(x, y)
                if y not in sigma:
                    sigma[y] = want
                    stack.append(y)
                elif sigma[y] != want:
                    return False
    return True


def surface_of(emb: EmbeddedGraph) -> SurfaceId:
    return SurfaceId(euler_characteristic(emb), is_orientable(emb))


def is_strong(emb: EmbeddedGraph) -> bool:
    t = emb.darts
    _, strong = _kernels.face_stats(t.succ, t.pred, t.edge_of, t.head,
                                    t.signs(emb.twisted), t.nverts)
    return bool(strong)


def normalize_cycle(cycle: Sequence[int]) -> tuple[int, ...]:
    """Smallest vertex first, then the direction with the smaller second vertex."""
    k = min(range(len(cycle)), key=cycle.__getitem__)
    fwd = tuple(cycle[k:]) + tuple(cycle[:k])
    back = (fwd[0],) + tuple(reversed(fwd[1:]))
    return min(fwd, back)


def facial_cycle_set(emb: EmbeddedGraph) -> frozenset[tuple[int, ...]]:
    walks = face_traversal(emb)
    out = set()
    for w in walks:
        vs = walk_vertices(w)
        if len(set(vs)) != len(vs):
            raise EmbeddingError("embedding is not strong")
        out.add(normalize_cycle(vs))
    return frozenset(out)


# ---------------------------------------------------------------------------
# duality and twisting


@dataclass(frozen=True)
class DualData:
    """The dual of a sphere embedding together with the edge bijection."""

    embedding: EmbeddedGraph
    faces: tuple[tuple[int, ...], ...]       # face i+1 as a primal vertex cycle
    to_dual: Mapping[Edge, Edge]
    to_primal: Mapping[Edge, Edge]


def _build_dual(emb: EmbeddedGraph) -> DualData:
    if emb.twisted:
        raise EmbeddingError("dual requires the all-positive signature")
    t = emb.darts
    face_of = [0] * len(t.darts)
    cycles: list[list[int]] = []
    for d0 in range(len(t.darts)):
        if face_of[d0]:
            continue
        fid = len(cycles) + 1
        cyc = []
        d = d0
        while not face_of[d]:
            face_of[d] = fid
            cyc.append(d)
            d = int(t.succ[d])
        cycles.append(cyc)
    g = emb.graph
    if g.n - len(g.edges) + len(cycles) != 2:
        raise EmbeddingError("dual requires a sphere embedding")
    rotation = []
    for cyc in cycles:
        rotation.append(tuple(face_of[int(t.rev[d])] for d in cyc))
    for f, r in enumerate(rotation, 1):
        if f in r or len(set(r)) != len(r):
            raise EmbeddingError("dual graph is not simple")
    to_dual = {}
    for i, (u, v) in enumerate(t.darts):
        if u < v:
            to_dual[(u, v)] = edge(face_of[i], face_of[int(t.rev[i])])
    dual_emb = EmbeddedGraph.from_rotation(rotation)
    faces = tuple(tuple(t.darts[d][0] for d in cyc) for cyc in cycles)
    return DualData(dual_emb, faces, to_dual, {b: a for a, b in to_dual.items()})


def dual(emb: EmbeddedGraph) -> tuple[EmbeddedGraph, Mapping[Edge, Edge]]:
    d = emb.planar_dual
    return d.embedding, d.to_dual


def apply_twist(planar: EmbeddedGraph, h) -> EmbeddedGraph:
    """Twist exactly the primal edges whose dual edges lie in ``h``."""
    d = planar.planar_dual
    if hasattr(h, "edges"):
        dual_edges = h.edges
    else:
        dual_edges = frozenset(edge(*e) for e in h)
    try:
        twisted = [d.to_primal[e] for e in dual_edges]
    except KeyError as exc:
        raise GraphError(f"edge {exc.args[0]} is not in the dual graph") from None
    return planar.with_twisted(twisted)


# ---------------------------------------------------------------------------
# canonical codes of embedded graphs


def _bfs_code(emb: EmbeddedGraph, u: int, v: int, step: int, bound: list[int] | None):
    rot = emb.rotation
    number = {u: 1}
    order = [u]
    entry = {u: v}
    code: list[int] = []
    pos = 0
    i = 0
    while i < len(order):
        x = order[i]
        r = rot[x - 1]
        k = r.index(entry[x])
        deg = len(r)
        for j in range(deg):
            y = r[(k + step * j) % deg]
            if y not in number:
                number[y] = len(order) + 1
                order.append(y)
                entry[y] = x
            c = number[y]
            if bound is not None:
                b = bound[pos]
                if c > b:
                    return None, None
                if c < b:
                    bound = None
            code.append(c)
            pos += 1
        if bound is not None:
            if bound[pos] != 0:
                # our list ended while the bound continues: code is smaller
                bound = None
        code.append(0)
        pos += 1
        i += 1
    return code, order


def _canonical(emb: EmbeddedGraph):
    if emb.twisted:
        raise EmbeddingError("canonical codes need the all-positive signature")
    g = emb.graph
    # restrict roots by an invariant: lexicographically smallest (deg u, deg v)
    deg = [0] + [g.degree(v) for v in g.vertices]
    key = min((deg[u], deg[v]) for u in g.vertices for v in g.adj[u])
    best = None
    best_order = None
    for u in g.vertices:
        if deg[u] != key[0]:
            continue
        for v in emb.rotation[u - 1]:
            if deg[v] != key[1]:
                continue
            for step in (1, -1):
                code, order = _bfs_code(emb, u, v, step, best)
                if code is not None and (best is None or code < best):
                    best, best_order = code, (order, step)
    return best, best_order


def canonical_embedded_code(emb: EmbeddedGraph) -> bytes:
    """Plantri-style code: equal iff the embedded graphs are isomorphic,
    allowing a global reflection.  Vertex numbers must stay below 256."""
    code, _ = _canonical(emb)
    if emb.graph.n >= 256:
        raise EmbeddingError("canonical_embedded_code supports fewer than 256 vertices")
    return bytes([emb.graph.n] + code)


def embedding_from_code(code: bytes) -> EmbeddedGraph:
    """Decode a :func:`canonical_embedded_code` back into an embedding."""
    n = code[0]
    rotation: list[list[int]] = [[] for _ in range(n)]
    v = 0
    for c in code[1:]:
        if c == 0:
            v += 1
        else:
            rotation[v].append(c)
    return EmbeddedGraph.from_rotation(rotation)


def canonical_embedding(emb: EmbeddedGraph) -> EmbeddedGraph:
    """The relabeled embedding whose plain code is the canonical code."""
    return embedding_from_code(canonical_embedded_code(emb))


def rotation_from_coordinates(
    coords: Mapping[int, Sequence[float]], edges: Iterable[Sequence[int]]
) -> EmbeddedGraph:
    """Rotation of a straight-line plane drawing (2-D) or of a convex
    polyhedron (3-D, centred at the origin) read off counterclockwise."""
    g = Graph(len(coords), edges)
    pts = {v: np.asarray(coords[v], dtype=float) for v in g.vertices}
    rotation = []
    for v in g.vertices:
        p = pts[v]
        nbrs = sorted(g.adj[v])
        if len(p) == 2:
            ang = {w: np.arctan2(*(pts[w] - p)[::-1]) for w in nbrs}
        else:
            normal = p / np.linalg.norm(p)
            ref = pts[nbrs[0]] - p
            e1 = ref - normal * (ref @ normal)
            e1 /= np.linalg.norm(e1)
            e2 = np.cross(normal, e1)
            ang = {w: np.arctan2((pts[w] - p) @ e2, (pts[w] - p) @ e1) for w in nbrs}
        rotation.append(tuple(sorted(nbrs, key=ang.__getitem__)))
    return EmbeddedGraph(g, tuple(rotation))
