# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled face tracing over (dart, side) states.

State ``2*d`` is dart ``d`` on side +1, ``2*d + 1`` the same dart on side -1.
From state (d, s): s' = s * sign[edge_of[d]]; the next dart is succ[d] when
s' = +1 and pred[d] otherwise.  ``succ[d]``/``pred[d]`` are the rotation
successor/predecessor of reverse(d) at the head of d.
"""

import numpy as np
cimport numpy as cnp
from libc.stdint cimport uint64_t, int32_t, int8_t

cnp.import_array()


cdef void _trace(const int32_t[::1] succ, const int32_t[::1] pred,
                 const int32_t[::1] edge_of, const int32_t[::1] head,
                 const int8_t[::1] sign, int32_t[::1] seen,
                 int32_t[::1] vstamp, int *orbits, int *strong) noexcept nogil:
    # seen[] and vstamp[] must be all zero on entry and are zeroed on exit
    cdef Py_ssize_t nstates = 2 * succ.shape[0]
    cdef Py_ssize_t st, cur
    cdef int d, s, v
    cdef int32_t orbit_id = 0
    orbits[0] = 0
    strong[0] = 1
    for st in range(nstates):
        if seen[st] != 0:
            continue
        orbit_id += 1
        cur = st
        while True:
            seen[cur] = 1
            d = <int>(cur >> 1)
            s = 1 - 2 * <int>(cur & 1)
            v = head[d]
            if vstamp[v] == orbit_id:
                strong[0] = 0
            vstamp[v] = orbit_id
            if s * sign[edge_of[d]] > 0:
                cur = 2 * succ[d]
            else:
                cur = 2 * pred[d] + 1
            if cur == st:
                break
    orbits[0] = orbit_id
    for st in range(nstates):
        seen[st] = 0
    for st in range(vstamp.shape[0]):
        vstamp[st] = 0


def face_stats(const int32_t[::1] succ, const int32_t[::1] pred,
               const int32_t[::1] edge_of, const int32_t[::1] head,
               const int8_t[::1] sign, int nverts):
    """Return ``(orbits, strong)`` for one signature."""
    cdef int32_t[::1] seen = np.zeros(2 * succ.shape[0], dtype=np.int32)
    cdef int32_t[::1] vst = np.zeros(nverts + 1, dtype=np.int32)
    cdef int orbits = 0, strong = 1
    _trace(succ, pred, edge_of, head, sign, seen, vst, &orbits, &strong)
    return orbits, bool(strong)


def scan_masks(const int32_t[::1] succ, const int32_t[::1] pred,
               const int32_t[::1] edge_of, const int32_t[::1] head,
               int nverts, int nedges, const uint64_t[::1] basis):
    """Walk the span of ``basis`` (edge bitmasks) in Gray-code order.

    Returns ``(masks, orbits)`` arrays restricted to the strong signatures;
    an edge is twisted iff its bit is set in the mask.
    """
    cdef Py_ssize_t k = basis.shape[0]
    cdef Py_ssize_t e
    if nedges > 64:
        raise ValueError("at most 64 edges supported")
    if k > 40:
        raise ValueError("span too large")
    cdef int8_t[::1] sign = np.ones(max(nedges, 1), dtype=np.int8)
    cdef int32_t[::1] seen = np.zeros(2 * succ.shape[0], dtype=np.int32)
    cdef int32_t[::1] vst = np.zeros(nverts + 1, dtype=np.int32)
    cdef uint64_t mask = 0, changed
    cdef uint64_t total = (<uint64_t>1) << k
    cdef uint64_t step, bit
    cdef int orbits = 0, strong = 1
    cdef int flip
    masks = []
    counts = []
    for step in range(total):
        if step > 0:
            flip = 0
            bit = step
            while (bit & 1) == 0:
                bit >>= 1
                flip += 1
            changed = basis[flip]
            mask ^= changed
            for e in range(nedges):
                if (changed >> e) & 1:
                    sign[e] = -sign[e]
        _trace(succ, pred, edge_of, head, sign, seen, vst, &orbits, &strong)
        if strong:
            masks.append(mask)
            counts.append(orbits)
    return (np.asarray(masks, dtype=np.uint64), np.asarray(counts, dtype=np.int32))
