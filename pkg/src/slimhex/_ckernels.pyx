# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled F2 elimination and BFS kernels (same contracts as _pykernels)."""

import numpy as np
cimport numpy as cnp
from libc.stdint cimport uint64_t, int16_t, int32_t

cnp.import_array()

UNREACHABLE = np.int16(32767)


cdef inline Py_ssize_t _nwords(Py_ssize_t ncols):
    return (ncols + 63) >> 6


def _pack(rows, Py_ssize_t ncols):
    cdef Py_ssize_t w = _nwords(ncols)
    if w == 0:
        w = 1
    mask = (1 << int(ncols)) - 1  # Python int shift; a C shift overflows past 31
    nbytes = 8 * w
    buf = b"".join([(int(r) & mask).to_bytes(nbytes, "little") for r in rows])
    arr = np.frombuffer(buf, dtype="<u8").reshape(len(rows), w).copy()
    return arr


def _unpack_row(cnp.ndarray arr_row):
    return int.from_bytes(arr_row.astype("<u8").tobytes(), "little")


cdef list _eliminate(uint64_t[:, ::1] m, Py_ssize_t ncols, bint reduced):
    cdef Py_ssize_t nrows = m.shape[0]
    cdef Py_ssize_t nw = m.shape[1]
    cdef Py_ssize_t pr = 0, col, r, i, k, w
    cdef uint64_t bit, tmp
    pivots = []
    for col in range(ncols):
        if pr >= nrows:
            break
        w = col >> 6
        bit = (<uint64_t>1) << (col & 63)
        r = pr
        while r < nrows and (m[r, w] & bit) == 0:
            r += 1
        if r == nrows:
            continue
        if r != pr:
            for k in range(nw):
                tmp = m[r, k]
                m[r, k] = m[pr, k]
                m[pr, k] = tmp
        for i in range(0 if reduced else pr + 1, nrows):
            if i != pr and (m[i, w] & bit) != 0:
                for k in range(w, nw):
                    m[i, k] ^= m[pr, k]
        pivots.append(col)
        pr += 1
    return pivots


def rref(rows, ncols):
    rows = list(rows)
    if not rows or ncols == 0:
        return [], []
    arr = _pack(rows, ncols)
    pivots = _eliminate(arr, ncols, True)
    return [_unpack_row(arr[i]) for i in range(len(pivots))], pivots


def rank(rows, ncols):
    rows = list(rows)
    if not rows or ncols == 0:
        return 0
    arr = _pack(rows, ncols)
    return len(_eliminate(arr, ncols, False))


def distances(Py_ssize_t n, indptr, indices):
    cdef int32_t[::1] ip = np.ascontiguousarray(indptr, dtype=np.int32)
    cdef int32_t[::1] ix = np.ascontiguousarray(indices, dtype=np.int32)
    out = np.full((n, n), UNREACHABLE, dtype=np.int16)
    cdef int16_t[:, ::1] d = out
    cdef int32_t[::1] queue = np.empty(max(n, 1), dtype=np.int32)
    cdef Py_ssize_t s, head, tail, u, e, v
    cdef int16_t du
    for s in range(n):
        d[s, s] = 0
        queue[0] = <int32_t>s
        head = 0
        tail = 1
        while head < tail:
            u = queue[head]
            head += 1
            du = d[s, u]
            for e in range(ip[u], ip[u + 1]):
                v = ix[e]
                if d[s, v] == 32767:
                    d[s, v] = du + 1
                    queue[tail] = <int32_t>v
                    tail += 1
    return out
