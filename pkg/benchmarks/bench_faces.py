"""Compare the compiled face-tracing kernel with the pure-Python fallback.

    python benchmarks/bench_faces.py [--repeat N] [--dim K]

Three workloads:
  face_stats   one random signature of the dodecahedron, traced repeatedly
  signatures   every edge signature of the cube (2^12 traces)
  cycles       the first K vectors of the dodecahedron's dual cycle basis
"""

import argparse
import random
import sys
import time

import numpy as np

from strongembed._kernels import _faces_py
from strongembed.catalog import cube, dodecahedron
from strongembed.orientable import cycle_basis

try:
    from strongembed._kernels import _faces as _faces_c
except ImportError:
    _faces_c = None


def timed(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - start)
    return best, out


def arrays(emb):
    t = emb.darts
    return t, (t.succ, t.pred, t.edge_of, t.head)


def workloads(dim):
    rng = random.Random(0)
    dodeca = dodecahedron()
    t, arr = arrays(dodeca)
    sign = np.asarray([rng.choice((-1, 1)) for _ in t.edges], dtype=np.int8)
    yield "face_stats x1000", lambda k: [k.face_stats(*arr, sign, t.nverts) for _ in range(1000)]

    c = cube()
    tc, arr_c = arrays(c)
    unit = np.asarray([1 << i for i in range(len(tc.edges))], dtype=np.uint64)
    yield "signatures (cube, 2^12)", lambda k: k.scan_masks(*arr_c, tc.nverts, len(tc.edges), unit)

    d = dodeca.planar_dual
    basis = cycle_basis(d.embedding.graph)[:dim]
    masks = np.asarray([t.mask(d.to_primal[e] for e in cyc) for cyc in basis], dtype=np.uint64)
    yield f"cycles (dodecahedron, 2^{len(masks)})", lambda k: k.scan_masks(*arr, t.nverts, len(t.edges), masks)


def same(a, b):
    if isinstance(a, tuple) and len(a) == 2 and isinstance(a[0], np.ndarray):
        return np.array_equal(a[0], b[0]) and np.array_equal(a[1], b[1])
    return a == b


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--dim", type=int, default=14, help="cycle-space dimension for the third workload")
    args = ap.parse_args(argv)
    if _faces_c is None:
        print("compiled kernel not built; run `pip install --no-build-isolation -e .` first")
        return 1
    print(f"{'workload':36s}{'python':>10s}{'cython':>10s}{'speedup':>9s}")
    for name, run in workloads(args.dim):
        tp, out_p = timed(lambda: run(_faces_py), args.repeat)
        tc, out_c = timed(lambda: run(_faces_c), args.repeat)
        if not same(out_p, out_c):
            print(f"{name}: kernels disagree")
            return 1
        print(f"{name:36s}{tp:10.4f}{tc:10.4f}{tp / tc:8.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
