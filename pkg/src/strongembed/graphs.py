"""Simple undirected graphs, automorphism groups and canonical labeling.

Vertices are the integers ``1..n``.  Edges are stored as sorted pairs
``(u, v)`` with ``u < v``.

Automorphisms and canonical forms come from one individualization /
refinement search: ordered partitions are refined to equitable ones, the
first non-singleton cell is individualized, and leaves of the search tree
are discrete partitions, i.e. relabelings.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

Edge = tuple[int, int]


def edge(u: int, v: int) -> Edge:
    """Return the normalized (sorted) edge between ``u`` and ``v``."""
    return (u, v) if u < v else (v, u)


class GraphError(ValueError):
    pass


@dataclass(frozen=True)
class Graph:
    n: int
    edges: frozenset[Edge]

    def __init__(self, n: int, edges: Iterable[Sequence[int]]):
        norm = set()
        for e in edges:
            u, v = e
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            if not (1 <= u <= n and 1 <= v <= n):
                raise GraphError(f"edge {e} references a vertex outside 1..{n}")
            norm.add(edge(u, v))
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", frozenset(norm))

    @cached_property
    def adj(self) -> tuple[frozenset[int], ...]:
        """``adj[v]`` is the neighbourhood of ``v``; index 0 is unused."""
        nb: list[set[int]] = [set() for _ in range(self.n + 1)]
        for u, v in self.edges:
            nb[u].add(v)
            nb[v].add(u)
        return tuple(frozenset(s) for s in nb)

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return edge(u, v) in self.edges

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        return len(_reach(self.adj, 1, set())) == self.n

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Image of the graph under ``v -> perm[v-1]``."""
        return Graph(self.n, ((perm[u - 1], perm[v - 1]) for u, v in self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={len(self.edges)})"


def _reach(adj, start, removed) -> set[int]:
    seen = {start}
    stack = [start]
    while stack:
        x = stack.pop()
        for y in adj[x]:
            if y not in seen and y not in removed:
                seen.add(y)
                stack.append(y)
    return seen


def components(g: Graph, removed: Iterable[int] = ()) -> list[set[int]]:
    removed = set(removed)
    left = set(g.vertices) - removed
    out = []
    while left:
        comp = _reach(g.adj, min(left), removed)
        out.append(comp)
        left -= comp
    return out


def is_k_connected(g: Graph, k: int = 3) -> bool:
    """Vertex connectivity test by deleting every vertex set of size ``k - 1``."""
    from itertools import combinations

    if g.n <= k or not g.is_connected():
        return False
    for cut in combinations(g.vertices, k - 1):
        if len(components(g, cut)) != 1:
            return False
    return True


@dataclass(frozen=True)
class Subgraph:
    vertices: frozenset[int]
    edges: frozenset[Edge]

    def __init__(self, vertices: Iterable[int], edges: Iterable[Sequence[int]]):
        es = frozenset(edge(u, v) for u, v in edges)
        vs = frozenset(vertices)
        for u, v in es:
            if u not in vs or v not in vs:
                raise GraphError(f"edge {(u, v)} has an endpoint outside the vertex set")
        object.__setattr__(self, "vertices", vs)
        object.__setattr__(self, "edges", es)

    @classmethod
    def from_edges(cls, edges: Iterable[Sequence[int]]) -> "Subgraph":
        es = [edge(u, v) for u, v in edges]
        return cls({x for e in es for x in e}, es)

    def key(self) -> tuple:
        """Total order used to pick deterministic representatives."""
        return (tuple(sorted(self.vertices)), tuple(sorted(self.edges)))

    def degree(self, v: int) -> int:
        return sum(1 for e in self.edges if v in e)

    def image(self, perm: Sequence[int]) -> "Subgraph":
        return Subgraph(
            (perm[v - 1] for v in self.vertices),
            ((perm[u - 1], perm[v - 1]) for u, v in self.edges),
        )


def check_subgraph(g: Graph, h: Subgraph) -> None:
    if any(not 1 <= v <= g.n for v in h.vertices):
        raise GraphError("subgraph vertex outside the host graph")
    if not h.edges <= g.edges:
        raise GraphError("subgraph edge not in the host graph")


def is_even_subgraph(g: Graph, h: Subgraph) -> bool:
    check_subgraph(g, h)
    deg = dict.fromkeys(h.vertices, 0)
    for u, v in h.edges:
        deg[u] += 1
        deg[v] += 1
    return all(d % 2 == 0 for d in deg.values())


def common_neighbors(g: Graph, u: int, v: int) -> frozenset[int]:
    if u == v:
        raise GraphError("common_neighbors needs two distinct vertices")
    for x in (u, v):
        if not 1 <= x <= g.n:
            raise GraphError(f"invalid vertex id {x}")
    return g.adj[u] & g.adj[v]


# ---------------------------------------------------------------------------
# partition refinement


def _refine(adj, cells: list[list[int]]) -> tuple[list[list[int]], tuple]:
    """Refine an ordered partition to the coarsest equitable refinement.

    Every vertex gets the multiset of (cell index, neighbour count) pairs;
    cells are split by that key and the pieces ordered by key.  The key
    depends only on cell positions, so the result commutes with relabeling.
    The returned trace records the split keys and is an isomorphism
    invariant of the (graph, partition) pair.
    """
    trace = []
    while True:
        cell_of = {}
        for i, c in enumerate(cells):
            for v in c:
                cell_of[v] = i
        new_cells = []
        split = False
        for i, c in enumerate(cells):
            if len(c) == 1:
                new_cells.append(c)
                continue
            keyed = {}
            for v in c:
                counts: dict[int, int] = {}
                for w in adj[v]:
                    j = cell_of[w]
                    counts[j] = counts.get(j, 0) + 1
                k = tuple(sorted(counts.items()))
                keyed.setdefault(k, []).append(v)
            if len(keyed) == 1:
                new_cells.append(c)
                continue
            split = True
            for k in sorted(keyed):
                new_cells.append(keyed[k])
                trace.append((i, k, len(keyed[k])))
        cells = new_cells
        if not split:
            return cells, tuple(trace)


def _individualize(cells: list[list[int]], idx: int, v: int) -> list[list[int]]:
    c = cells[idx]
    rest = [x for x in c if x != v]
    return cells[:idx] + [[v], rest] + cells[idx + 1:]


def _first_nonsingleton(cells) -> int:
    for i, c in enumerate(cells):
        if len(c) > 1:
            return i
    return -1


def _root(g: Graph) -> tuple[list[list[int]], tuple]:
    return _refine(g.adj, [list(g.vertices)] if g.n else [])


def _is_automorphism(g: Graph, perm: Sequence[int]) -> bool:
    return all(edge(perm[u - 1], perm[v - 1]) in g.edges for u, v in g.edges)


def _extend(g: Graph, p: list[list[int]], q: list[list[int]]) -> list[int] | None:
    """Find an automorphism mapping partition ``p`` onto ``q`` cellwise."""
    i = _first_nonsingleton(p)
    if i < 0:
        perm = [0] * g.n
        for a, b in zip(p, q):
            perm[a[0] - 1] = b[0]
        return perm if _is_automorphism(g, perm) else None
    x = p[i][0]
    p2, tp = _refine(g.adj, _individualize(p, i, x))
    shape = [len(c) for c in p2]
    for y in q[i]:
        q2, tq = _refine(g.adj, _individualize(q, i, y))
        if tq != tp or [len(c) for c in q2] != shape:
            continue
        found = _extend(g, p2, q2)
        if found is not None:
            return found
    return None


def _orbit(point: int, gens: Sequence[Sequence[int]]) -> set[int]:
    seen = {point}
    todo = [point]
    while todo:
        x = todo.pop()
        for s in gens:
            y = s[x - 1]
            if y not in seen:
                seen.add(y)
                todo.append(y)
    return seen


@dataclass(frozen=True)
class AutomorphismGroup:
    """Generators plus order of ``Aut(g)``.  ``base`` and ``orbit_sizes``
    describe the stabilizer chain the order was computed from."""

    generators: tuple[tuple[int, ...], ...]
    order: int
    base: tuple[int, ...] = field(default=())
    orbit_sizes: tuple[int, ...] = field(default=())


def automorphism_group(g: Graph) -> AutomorphismGroup:
    # leftmost path of the search tree gives the base b_1, b_2, ...
    path = []
    cells, _ = _root(g)
    while (i := _first_nonsingleton(cells)) >= 0:
        b = cells[i][0]
        path.append((cells, i, b))
        cells, _ = _refine(g.adj, _individualize(cells, i, b))

    gens: list[tuple[int, ...]] = []
    sizes = []
    # deepest level first: generators found at level j fix b_1..b_{j-1}
    for cells, i, b in reversed(path):
        target, tb = _refine(g.adj, _individualize(cells, i, b))
        shape = [len(c) for c in target]
        orbit = _orbit(b, gens)
        for y in cells[i]:
            if y in orbit:
                continue
            q, tq = _refine(g.adj, _individualize(cells, i, y))
            if tq != tb or [len(c) for c in q] != shape:
                continue
            perm = _extend(g, target, q)
            if perm is not None:
                gens.append(tuple(perm))
                orbit = _orbit(b, gens)
        sizes.append(len(orbit))
    order = 1
    for s in sizes:
        order *= s
    return AutomorphismGroup(
        tuple(gens), order, tuple(b for _, _, b in path), tuple(reversed(sizes))
    )


def all_automorphisms_bruteforce(g: Graph) -> list[tuple[int, ...]]:
    """Filter all ``n!`` permutations.  Test oracle only; keep ``n`` small."""
    from itertools import permutations

    deg = [g.degree(v) for v in g.vertices]
    out = []
    for p in permutations(g.vertices):
        if any(deg[p[v] - 1] != deg[v] for v in range(g.n)):
            continue
        if _is_automorphism(g, p):
            out.append(tuple(p))
    return out


# ---------------------------------------------------------------------------
# canonical form


def _leaf_code(g: Graph, cells) -> tuple[int, list[int]]:
    # relabel: vertex in cell k gets label k+1
    lab = [0] * (g.n + 1)
    for k, c in enumerate(cells):
        lab[c[0]] = k + 1
    bits = 0
    n = g.n
    for u, v in g.edges:
        a, b = lab[u] - 1, lab[v] - 1
        # row-major n*n matrix, first entry most significant
        bits |= 1 << (n * n - 1 - (a * n + b))
        bits |= 1 << (n * n - 1 - (b * n + a))
    # minimal matrix string corresponds to minimal integer
    return bits, lab[1:]


def canonical_form(g: Graph) -> tuple[bytes, tuple[int, ...]]:
    """Canonical code and the relabeling ``v -> relabel[v-1]`` achieving it.

    The code is ``n`` (two bytes) followed by the row-major adjacency
    bit-matrix of the canonically relabeled graph.  Among the children of a
    search node only those with the smallest refinement trace are explored;
    this keeps the explored leaf set invariant under relabeling.
    """
    best: tuple[int, list[int]] | None = None

    def visit(cells):
        nonlocal best
        i = _first_nonsingleton(cells)
        if i < 0:
            bits, lab = _leaf_code(g, cells)
            if best is None or bits < best[0]:
                best = (bits, lab)
            return
        children = []
        for y in cells[i]:
            c2, tr = _refine(g.adj, _individualize(cells, i, y))
            children.append((tr, [len(c) for c in c2], c2))
        low = min((tr, sh) for tr, sh, _ in children)
        for tr, sh, c2 in children:
            if (tr, sh) == low:
                visit(c2)

    cells, _ = _root(g)
    if g.n == 0:
        return b"\x00\x00", ()
    visit(cells)
    bits, lab = best
    nbytes = (g.n * g.n + 7) // 8
    code = g.n.to_bytes(2, "big") + (bits << (nbytes * 8 - g.n * g.n)).to_bytes(nbytes, "big")
    return code, tuple(lab)


def are_isomorphic(g1: Graph, g2: Graph) -> bool:
    if g1.n != g2.n or len(g1.edges) != len(g2.edges):
        return False
    if sorted(map(g1.degree, g1.vertices)) != sorted(map(g2.degree, g2.vertices)):
        return False
    return canonical_form(g1)[0] == canonical_form(g2)[0]


# ---------------------------------------------------------------------------
# orbits on subgraphs


def subgraph_orbits(
    g: Graph,
    subgraphs: Sequence[Subgraph],
    group: AutomorphismGroup | None = None,
) -> list[list[Subgraph]]:
    """Partition ``subgraphs`` into ``Aut(g)``-orbits.

    Parts keep the input order, and parts are ordered by first member.
    Orbits are closed under the generators, so members of the collection
    connected only through subgraphs outside it are still grouped together.
    """
    for h in subgraphs:
        check_subgraph(g, h)
    if not subgraphs:
        return []
    if group is None:
        group = automorphism_group(g)
    gens = group.generators
    orbit_id: dict[Subgraph, int] = {}
    next_id = 0
    for h in subgraphs:
        if h in orbit_id:
            continue
        orbit_id[h] = next_id
        todo = deque([h])
        while todo:
            x = todo.popleft()
            for s in gens:
                y = x.image(s)
                if y not in orbit_id:
                    orbit_id[y] = next_id
                    todo.append(y)
        next_id += 1
    parts: dict[int, list[Subgraph]] = {}
    for h in subgraphs:
        parts.setdefault(orbit_id[h], []).append(h)
    return list(parts.values())
