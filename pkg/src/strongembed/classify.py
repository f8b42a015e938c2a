"""Counting strong embeddings up to equivalence and up to isomorphism.

Inequivalent strong embeddings on a surface correspond to the twisted
subgraphs enumerated in :mod:`strongembed.patterns`; isomorphism classes are
the ``Aut(G*)``-orbits of those subgraphs.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

import numpy as np

from . import _kernels
from .embeddings import (SURFACES, EmbeddedGraph, canonical_embedded_code, euler_characteristic,
                         facial_cycle_set, normalize_cycle, surface_of)
from .graphs import (AutomorphismGroup, all_automorphisms_bruteforce, automorphism_group, canonical_form,
                     is_k_connected, subgraph_orbits)
from .patterns import TwistedSubgraph, enumerate_for_surface

SURFACE_NAMES = ("projective", "torus", "klein")


class ValidationError(ValueError):
    pass


@dataclass
class SurfaceClassification:
    subgraphs: list[TwistedSubgraph]
    orbits: list[list[TwistedSubgraph]]

    @property
    def inequivalent(self) -> int:
        return len(self.subgraphs)

    @property
    def classes(self) -> int:
        return len(self.orbits)

    @property
    def representatives(self) -> list[TwistedSubgraph]:
        return [min(orb, key=TwistedSubgraph.key) for orb in self.orbits]


@dataclass
class ClassificationReport:
    graph_id: str
    planar: EmbeddedGraph
    group: AutomorphismGroup
    surfaces: dict[str, SurfaceClassification] = field(default_factory=dict)

    @property
    def n(self) -> int:
        return self.planar.graph.n

    def __getitem__(self, surface: str) -> SurfaceClassification:
        return self.surfaces[surface]


def validate_cubic_planar(planar: EmbeddedGraph) -> None:
    g = planar.graph
    if any(g.degree(v) != 3 for v in g.vertices):
        raise ValidationError("graph is not cubic")
    if not is_k_connected(g, 3):
        raise ValidationError("graph is not 3-connected")
    if planar.twisted or euler_characteristic(planar) != 2:
        raise ValidationError("rotation is not a sphere embedding")


def classify_graph(
    planar: EmbeddedGraph, surfaces: Sequence[str] = SURFACE_NAMES, validate: bool = True
) -> ClassificationReport:
    if validate:
        validate_cubic_planar(planar)
    gstar = planar.planar_dual.embedding
    group = automorphism_group(gstar.graph)
    report = ClassificationReport(canonical_embedded_code(planar).hex(), planar, group)
    for name in surfaces:
        subs = enumerate_for_surface(gstar, SURFACES[name])
        by_sub = {h.subgraph: h for h in subs}
        parts = subgraph_orbits(gstar.graph, [h.subgraph for h in subs], group)
        orbits = [[by_sub[s] for s in part] for part in parts]
        report.surfaces[name] = SurfaceClassification(subs, orbits)
    return report


def projective_upper_bound_check(planar: EmbeddedGraph) -> bool:
    """At most ``(|V| - 2) / 2`` isomorphism classes on the projective plane."""
    rep = classify_graph(planar, ("projective",))
    return 2 * rep["projective"].classes <= planar.graph.n - 2


# ---------------------------------------------------------------------------
# tables


@dataclass
class TableRow:
    n: int
    values: dict[str, int]

    def __getitem__(self, key: str) -> int:
        return self.values[key]


def worker_count() -> int:
    try:
        return max(1, int(os.environ.get("STRONGEMBED_THREADS", "1")))
    except ValueError:
        return 1


def parallel_map(fn: Callable, items: Sequence) -> list:
    """Ordered map; fans out to processes when STRONGEMBED_THREADS > 1."""
    workers = min(worker_count(), len(items))
    if workers <= 1:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(workers) as pool:
        return list(pool.map(fn, items, chunksize=max(1, len(items) // (4 * workers))))


def _counts(planar: EmbeddedGraph) -> dict[str, int]:
    rep = classify_graph(planar)
    return {name: rep[name].classes for name in SURFACE_NAMES}


def surface_tables(graphs: Iterable[EmbeddedGraph]) -> list[TableRow]:
    """Table rows ``p, t, k`` (class counts), ``g`` and ``p', t', k'``
    (graphs without any strong embedding on the surface) per vertex count."""
    by_n: dict[int, list[EmbeddedGraph]] = {}
    for g in graphs:
        by_n.setdefault(g.graph.n, []).append(g)
    rows = []
    for n in sorted(by_n):
        group = by_n[n]
        codes = [canonical_form(g.graph)[0] for g in group]
        if len(set(codes)) != len(codes):
            raise ValidationError(f"duplicate graphs among the inputs with n = {n}")
        counts = parallel_map(_counts, group)
        vals = {"g": len(group)}
        for key, name in zip("ptk", SURFACE_NAMES):
            vals[key] = sum(c[name] for c in counts)
            vals[key + "'"] = sum(1 for c in counts if c[name] == 0)
        rows.append(TableRow(n, vals))
    return rows


def apollonian_tables(max_n: int, min_n: int = 4) -> list[TableRow]:
    """``a`` (number of Apollonian duals), ``pA`` and ``kA`` per dual size."""
    from .structure import generate_apollonian_networks

    rows = []
    for n in range(min_n, max_n + 1, 2):
        duals = [t.planar_dual.embedding for t in generate_apollonian_networks(n // 2 + 2)]
        counts = parallel_map(_counts, duals)
        rows.append(TableRow(n, {
            "a": len(duals),
            "pA": sum(c["projective"] for c in counts),
            "kA": sum(c["klein"] for c in counts),
        }))
    return rows


def format_tsv(rows: Iterable[TableRow]) -> str:
    lines = ["n\tstatistic\tvalue"]
    for row in rows:
        for k, v in row.values.items():
            lines.append(f"{row.n}\t{k}\t{v}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# exhaustive oracle over all signatures

ORACLE_MAX_EDGES = 24


@dataclass
class SignatureCensus:
    """Distinct facial-cycle sets of strong embeddings, per surface name,
    and the number of Aut(G)-classes among them (empty when skipped)."""

    cycle_sets: dict[str, set[frozenset[tuple[int, ...]]]]
    classes: dict[str, int]

    def inequivalent(self, surface: str) -> int:
        return len(self.cycle_sets.get(surface, ()))


def _image(cycles: frozenset[tuple[int, ...]], perm) -> frozenset[tuple[int, ...]]:
    return frozenset(normalize_cycle([perm[v] for v in c]) for c in cycles)


def exhaustive_signature_census(
    planar: EmbeddedGraph, surfaces: Sequence[str] = SURFACE_NAMES, with_classes: bool = True
) -> SignatureCensus:
    """Twist every subset of edges, keep the strong embeddings and group
    them by facial-cycle set; isomorphism classes come from the brute-force
    automorphism list of the graph."""
    g = planar.graph
    t = planar.darts
    if len(t.edges) > ORACLE_MAX_EDGES:
        raise ValidationError(f"{len(t.edges)} edges is too many for the signature oracle")
    basis = np.asarray([1 << i for i in range(len(t.edges))], dtype=np.uint64)
    masks, _ = _kernels.scan_masks(t.succ, t.pred, t.edge_of, t.head, t.nverts, len(t.edges), basis)
    wanted = {SURFACES[s]: s for s in surfaces}
    sets: dict[str, set] = {s: set() for s in surfaces}
    for mask in masks.tolist():
        emb = planar.with_twisted(t.edges_of_mask(mask))
        name = wanted.get(surface_of(emb))
        if name is not None:
            sets[name].add(facial_cycle_set(emb))
    classes: dict[str, int] = {}
    if not with_classes:
        return SignatureCensus(sets, classes)
    perms = [(0,) + p for p in all_automorphisms_bruteforce(g)]
    for s, cs in sets.items():
        classes[s] = len({min(tuple(sorted(_image(c, p))) for p in perms) for c in cs})
    return SignatureCensus(sets, classes)
