"""Command-line entry point: ``strongembed <command> ...``."""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path

from . import _kernels
from .classify import (SURFACE_NAMES, ValidationError, apollonian_tables, classify_graph,
                       exhaustive_signature_census, surface_tables)
from .embeddings import EmbeddingError
from .generate import ROUTINE_MAX_CUBIC, generate_cubic_planar
from .graphs import GraphError
from .io import (FormatError, emit_database, load_database, load_graphs, save_graphs, verify_record,
                 write_planar_code)

log = logging.getLogger("strongembed")


def _surfaces(arg: str) -> tuple[str, ...]:
    return SURFACE_NAMES if arg == "all" else (arg,)


def cmd_generate(args) -> int:
    graphs = generate_cubic_planar(args.vertices, allow_large=args.allow_large)
    if args.out:
        save_graphs(args.out, graphs)
    else:
        sys.stdout.buffer.write(write_planar_code(graphs))
    log.info("%d graphs on %d vertices", len(graphs), args.vertices)
    return 0


def cmd_classify(args) -> int:
    graphs = load_graphs(args.input)
    reports = [classify_graph(g, _surfaces(args.surface)) for g in graphs]
    for rep in reports:
        counts = " ".join(
            f"{s}={len(c.subgraphs) if args.mode == 'equivalence' else c.classes}"
            for s, c in rep.surfaces.items())
        print(f"{rep.graph_id}\tn={rep.n}\t{counts}")
    if args.out:
        paths = emit_database(reports, args.out, args.mode)
        log.info("wrote %d files to %s", len(paths), args.out)
    return 0


def cmd_tables(args) -> int:
    top = args.max_n
    if top > 14 and not args.slow:
        print("n > 14 needs --slow", file=sys.stderr)
        return 2
    if top > ROUTINE_MAX_CUBIC:
        print(f"n > {ROUTINE_MAX_CUBIC} is out of range", file=sys.stderr)
        return 2
    graphs = [g for n in range(4, top + 1, 2) for g in generate_cubic_planar(n)]
    rows = surface_tables(graphs)
    cols = ["p", "t", "k", "g", "p'", "t'", "k'"]
    print("\t".join(["n"] + cols))
    for r in rows:
        print("\t".join([str(r.n)] + [str(r[c]) for c in cols]))
    return 0


def cmd_decompose(args) -> int:
    from .structure import c4c_decomposition, is_apollonian_dual

    for i, g in enumerate(load_graphs(args.input), 1):
        dec = c4c_decomposition(g)
        sizes = ",".join(str(p.graph.n) for p in dec.indecomposables)
        tag = "apollonian-dual" if is_apollonian_dual(g) else "-"
        print(f"{i}\tn={g.graph.n}\tcuts={len(dec.trace)}\tpieces={sizes}\t{tag}")
    return 0


def cmd_apollonian(args) -> int:
    from .structure import generate_apollonian_networks

    n = args.vertices
    if n % 2 or n < 4:
        print("--vertices is the cubic dual size: even and at least 4", file=sys.stderr)
        return 2
    if args.tables:
        print("n\ta\tpA\tkA")
        for r in apollonian_tables(n, min_n=n if args.only else 4):
            print(f"{r.n}\t{r['a']}\t{r['pA']}\t{r['kA']}")
        return 0
    nets = generate_apollonian_networks(n // 2 + 2)
    duals = [t.planar_dual.embedding for t in nets]
    if args.out:
        save_graphs(args.out, duals)
    print(f"{len(duals)} Apollonian duals on {n} vertices")
    return 0


def cmd_orientable(args) -> int:
    from .orientable import has_strong_orientable_embedding, orientable_pipeline

    status = 0
    for i, g in enumerate(load_graphs(args.input), 1):
        wit = orientable_pipeline(g)
        line = f"{i}\tn={g.graph.n}\t"
        line += "none" if wit is None else f"{wit.surface.name}\t{wit.method}\t{len(wit.dual_edges)} twisted"
        if args.oracle:
            found, owit = has_strong_orientable_embedding(g)
            agree = found == (wit is not None)
            line += f"\toracle={'yes' if found else 'no'}"
            if owit is not None:
                line += f" ({owit.surface.name})"
            if not agree:
                line += "\tDISAGREE"
                status = 1
        print(line)
    return status


def cmd_families(args) -> int:
    from .families import build_tn, count_k2m_in_tn, theorem_bounds, tn_embedding_counts
    from .graphs import automorphism_group

    t = build_tn(args.tn)
    g = t.embedding.graph
    order = automorphism_group(g).order
    print(f"T_{args.tn}: {g.n} vertices, |Aut| = {order}")
    for m in (args.tn - 1, args.tn):
        print(f"K2,{m} on the apex pair: {count_k2m_in_tn(t, m, fixed_pair=True)}; "
              f"all: {count_k2m_in_tn(t, m)}")
    torus, klein = tn_embedding_counts(t)
    bt, bk = theorem_bounds(args.tn)
    print(f"torus classes {torus} (bound {bt}), klein classes {klein} (bound {bk})")
    return 0 if order == 1 and torus >= bt and klein >= bk else 1


def cmd_verify(args) -> int:
    status = 0
    if args.db:
        for path in sorted(Path(args.db).glob("*.tsv")):
            recs = load_database(path)
            bad = sum(not verify_record(r) for r in recs)
            print(f"{path.name}\t{len(recs)} records\t{bad} failed")
            status |= bad > 0
    if args.input:
        for i, g in enumerate(load_graphs(args.input), 1):
            if args.exhaustive and g.graph.n > 8:
                print(f"{i}: n = {g.graph.n} exceeds 8 for --exhaustive", file=sys.stderr)
                return 2
            rep = classify_graph(g)
            parts = []
            census = exhaustive_signature_census(g) if args.exhaustive else None
            for s in SURFACE_NAMES:
                c = rep[s]
                text = f"{s}: {c.classes} classes / {c.inequivalent} embeddings"
                if census is not None:
                    ok = census.inequivalent(s) == c.inequivalent and census.classes[s] == c.classes
                    text += f" [oracle {census.classes[s]}/{census.inequivalent(s)} {'ok' if ok else 'MISMATCH'}]"
                    status |= not ok
                parts.append(text)
            print(f"{i}\tn={g.graph.n}\t" + "; ".join(parts))
    return int(status)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="strongembed", description=__doc__)
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("generate", help="3-connected cubic planar graphs as planar_code")
    s.add_argument("--vertices", type=int, required=True)
    s.add_argument("--out")
    s.add_argument("--allow-large", action="store_true")
    s.set_defaults(func=cmd_generate)

    s = sub.add_parser("classify", help="classify strong embeddings of graphs in a file")
    s.add_argument("--in", dest="input", required=True)
    s.add_argument("--surface", choices=SURFACE_NAMES + ("all",), default="all")
    s.add_argument("--mode", choices=("equivalence", "isomorphism"), default="isomorphism")
    s.add_argument("--out", help="directory for the TSV database")
    s.set_defaults(func=cmd_classify)

    s = sub.add_parser("tables", help="class counts per surface and vertex count")
    s.add_argument("--max-n", type=int, default=12)
    s.add_argument("--slow", action="store_true", help="allow n = 16")
    s.set_defaults(func=cmd_tables)

    s = sub.add_parser("decompose", help="C4C decomposition of graphs in a file")
    s.add_argument("--in", dest="input", required=True)
    s.set_defaults(func=cmd_decompose)

    s = sub.add_parser("apollonian", help="Apollonian duals on N vertices")
    s.add_argument("--vertices", type=int, required=True, help="vertex count of the cubic dual")
    s.add_argument("--tables", action="store_true")
    s.add_argument("--only", action="store_true", help="with --tables, just the row for N")
    s.add_argument("--out")
    s.set_defaults(func=cmd_apollonian)

    s = sub.add_parser("orientable", help="orientable strong embedding witnesses")
    s.add_argument("--in", dest="input", required=True)
    s.add_argument("--oracle", action="store_true", help="cross-check with the cycle-space scan")
    s.set_defaults(func=cmd_orientable)

    s = sub.add_parser("families", help="check the T_n family")
    s.add_argument("--tn", type=int, required=True)
    s.set_defaults(func=cmd_families)

    s = sub.add_parser("verify", help="re-check a database or classify against the signature oracle")
    s.add_argument("--in", dest="input")
    s.add_argument("--exhaustive", action="store_true")
    s.add_argument("--db", help="database directory to re-verify")
    s.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(message)s")
    log.debug("kernel backend: %s", _kernels.BACKEND)
    try:
        return args.func(args)
    except (FormatError, ValidationError, GraphError, EmbeddingError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
