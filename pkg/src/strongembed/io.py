"""planar_code files and the TSV database of classified embeddings."""

from __future__ import annotations

import csv
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Sequence

from .embeddings import (SURFACES, EmbeddedGraph, EmbeddingError, apply_twist, embedding_from_code,
                         is_strong, surface_of)
from .graphs import Edge, edge

HEADER = b">>planar_code<<"


class FormatError(ValueError):
    pass


def read_planar_code(data: bytes) -> list[EmbeddedGraph]:
    if data.startswith(HEADER):
        data = data[len(HEADER):]
    out = []
    pos = 0
    while pos < len(data):
        n = data[pos]
        pos += 1
        if n == 0:
            raise FormatError(f"record at byte {pos - 1} has n = 0")
        rot = []
        for v in range(1, n + 1):
            end = data.find(0, pos)
            if end < 0:
                raise FormatError(f"truncated record: vertex {v} of {n} has no terminator")
            nbrs = list(data[pos:end])
            pos = end + 1
            if any(x < 1 or x > n for x in nbrs):
                raise FormatError(f"vertex {v} lists a neighbour outside 1..{n}")
            if v in nbrs or len(set(nbrs)) != len(nbrs):
                raise FormatError(f"vertex {v} has a loop or a repeated neighbour")
            rot.append(nbrs)
        for v, nbrs in enumerate(rot, 1):
            for x in nbrs:
                if v not in rot[x - 1]:
                    raise FormatError(f"asymmetric adjacency between {v} and {x}")
        out.append(EmbeddedGraph.from_rotation(rot))
    return out


def write_planar_code(graphs: Iterable[EmbeddedGraph], header: bool = True) -> bytes:
    buf = bytearray(HEADER if header else b"")
    for g in graphs:
        n = g.graph.n
        if n >= 256:
            raise FormatError("planar_code needs fewer than 256 vertices")
        buf.append(n)
        for r in g.rotation:
            buf.extend(r)
            buf.append(0)
    return bytes(buf)


def load_graphs(path: str | Path) -> list[EmbeddedGraph]:
    return read_planar_code(Path(path).read_bytes())


def save_graphs(path: str | Path, graphs: Iterable[EmbeddedGraph]) -> None:
    Path(path).write_bytes(write_planar_code(graphs))


# ---------------------------------------------------------------------------
# database


COLUMNS = ("graph", "n", "surface", "pattern", "dual_vertices", "dual_edges", "class", "representative")


@dataclass(frozen=True)
class EmbeddingRecord:
    graph: str             # hex canonical embedded code
    n: int
    surface: str
    pattern: str
    dual_vertices: tuple[int, ...]
    dual_edges: tuple[Edge, ...]
    class_id: int
    representative: bool

    def row(self) -> list[str]:
        return [self.graph, str(self.n), self.surface, self.pattern,
                ",".join(map(str, self.dual_vertices)),
                ",".join(f"{u}-{v}" for u, v in self.dual_edges),
                str(self.class_id), "yes" if self.representative else "no"]

    @classmethod
    def from_row(cls, row: Sequence[str]) -> "EmbeddingRecord":
        if len(row) != len(COLUMNS):
            raise FormatError(f"expected {len(COLUMNS)} columns, got {len(row)}")
        g, n, surface, pattern, vs, es, cid, rep = row
        edges = tuple(edge(*map(int, p.split("-"))) for p in es.split(",") if p)
        return cls(g, int(n), surface, pattern, tuple(int(x) for x in vs.split(",") if x),
                   edges, int(cid), rep == "yes")


def _canonical_report(report):
    from .classify import classify_graph

    canon = embedding_from_code(bytes.fromhex(report.graph_id))
    if canon.rotation == report.planar.rotation:
        return report
    return classify_graph(canon, tuple(report.surfaces), validate=False)


def records_for(report, mode: str = "isomorphism") -> list[EmbeddingRecord]:
    """Records of one classification; ``mode`` is ``isomorphism`` (orbit
    representatives only) or ``equivalence`` (every twisted subgraph)."""
    if mode not in ("isomorphism", "equivalence"):
        raise ValueError("mode must be 'isomorphism' or 'equivalence'")
    report = _canonical_report(report)
    out = []
    for surface, cls in report.surfaces.items():
        reps = cls.representatives
        order = sorted(range(len(reps)), key=lambda i: (reps[i].kind, reps[i].sorted_edges()))
        for cid, i in enumerate(order):
            members = cls.orbits[i] if mode == "equivalence" else [reps[i]]
            for h in members:
                out.append(EmbeddingRecord(report.graph_id, report.n, surface, str(h.kind),
                                           tuple(sorted(h.vertices)), tuple(h.sorted_edges()),
                                           cid, h == reps[i]))
    return out


def emit_database(reports, out_dir: str | Path, mode: str = "isomorphism") -> list[Path]:
    """Write one TSV per (n, surface); returns the paths written."""
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    buckets: dict[tuple[int, str], list[EmbeddingRecord]] = {}
    for rep in reports:
        for surface in rep.surfaces:
            buckets.setdefault((rep.n, surface), [])
        for rec in records_for(rep, mode):
            buckets[(rec.n, rec.surface)].append(rec)
    paths = []
    for (n, surface), recs in sorted(buckets.items()):
        recs.sort(key=lambda r: (r.graph, r.class_id, r.pattern, r.dual_edges))
        path = out_dir / f"n{n:02d}_{surface}.tsv"
        with path.open("w", newline="", encoding="utf-8") as fh:
            w = csv.writer(fh, delimiter="\t", lineterminator="\n")
            w.writerow(COLUMNS)
            for r in recs:
                w.writerow(r.row())
        paths.append(path)
    return paths


def load_database(path: str | Path) -> list[EmbeddingRecord]:
    with Path(path).open(encoding="utf-8", newline="") as fh:
        rows = list(csv.reader(fh, delimiter="\t"))
    if not rows or tuple(rows[0]) != COLUMNS:
        raise FormatError(f"{path}: missing or wrong header")
    return [EmbeddingRecord.from_row(r) for r in rows[1:]]


def verify_record(rec: EmbeddingRecord) -> bool:
    """Decode the graph, twist the listed dual edges and re-check the embedding."""
    try:
        planar = embedding_from_code(bytes.fromhex(rec.graph))
        emb = apply_twist(planar, rec.dual_edges)
    except (ValueError, EmbeddingError):
        return False
    return planar.graph.n == rec.n and is_strong(emb) and surface_of(emb) == SURFACES[rec.surface]
