"""Pure-Python face tracing; same contract as the compiled ``_faces``."""

from __future__ import annotations

import numpy as np


def _trace(succ, pred, edge_of, head, sign, nverts):
    nstates = 2 * len(succ)
    seen = [False] * nstates
    vstamp = [0] * (nverts + 1)
    orbits = 0
    strong = True
    for st in range(nstates):
        if seen[st]:
            continue
        orbits += 1
        cur = st
        while True:
            seen[cur] = True
            d = cur >> 1
            v = head[d]
            if vstamp[v] == orbits:
                strong = False
            vstamp[v] = orbits
            s = -1 if cur & 1 else 1
            if s * sign[edge_of[d]] > 0:
                cur = 2 * succ[d]
            else:
                cur = 2 * pred[d] + 1
            if cur == st:
                break
    return orbits, strong


def face_stats(succ, pred, edge_of, head, sign, nverts):
    """Return ``(orbits, strong)`` for one signature."""
    return _trace(list(succ), list(pred), list(edge_of), list(head), list(sign), nverts)


def scan_masks(succ, pred, edge_of, head, nverts, nedges, basis):
    """Gray-code walk over the span of ``basis``; see the compiled twin."""
    if nedges > 64:
        raise ValueError("at most 64 edges supported")
    k = len(basis)
    if k > 40:
        raise ValueError("span too large")
    succ, pred, edge_of, head = list(succ), list(pred), list(edge_of), list(head)
    basis = [int(b) for b in basis]
    sign = [1] * max(nedges, 1)
    mask = 0
    masks, counts = [], []
    for step in range(1 << k):
        if step:
            flip = (step & -step).bit_length() - 1
            changed = basis[flip]
            mask ^= changed
            e = 0
            while changed:
                if changed & 1:
                    sign[e] = -sign[e]
                changed >>= 1
                e += 1
        orbits, strong = _trace(succ, pred, edge_of, head, sign, nverts)
        if strong:
            masks.append(mask)
            counts.append(orbits)
    return np.asarray(masks, dtype=np.uint64), np.asarray(counts, dtype=np.int32)
