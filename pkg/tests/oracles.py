"""Independent reference implementations used only by the tests.

They work on dense numpy 0/1 arrays and plain Python sets, sharing no code
with the package's bitset routines.
"""

from collections import deque
from itertools import product

import numpy as np


def gf2_rank(a):
    a = np.array(a, dtype=np.uint8) % 2
    if a.size == 0:
        return 0
    a = a.copy()
    r = 0
    rows, cols = a.shape
    for c in range(cols):
        piv = next((i for i in range(r, rows) if a[i, c]), None)
        if piv is None:
            continue
        a[[r, piv]] = a[[piv, r]]
        for i in range(rows):
            if i != r and a[i, c]:
                a[i] ^= a[r]
        r += 1
        if r == rows:
            break
    return r


def to_dense(rows, ncols):
    return np.array([[(r >> j) & 1 for j in range(ncols)] for r in rows], dtype=np.uint8).reshape(len(rows), ncols)


def bfs_distances(n, lines):
    adj = [set() for _ in range(n)]
    for ln in lines:
        for x in ln:
            adj[x].update(p for p in ln if p != x)
    out = np.full((n, n), -1, dtype=int)
    for s in range(n):
        out[s, s] = 0
        q = deque([s])
        while q:
            u = q.popleft()
            for v in adj[u]:
                if out[s, v] < 0:
                    out[s, v] = out[s, u] + 1
                    q.append(v)
    return out


def quad_form_value(upper_dense, v):
    v = np.array(v, dtype=np.int64)
    return int(v @ upper_dense @ v) % 2


def singular_count_bruteforce(upper_dense):
    n = upper_dense.shape[0]
    return sum(1 for v in product((0, 1), repeat=n) if quad_form_value(upper_dense, v) == 0)


def universal_dim(n, lines):
    """dim V(S) = |P| - rank of the line/point incidence matrix."""
    inc = np.zeros((len(lines), n), dtype=np.uint8)
    for i, ln in enumerate(lines):
        inc[i, list(ln)] = 1
    return n - gf2_rank(inc)


def np_dim_dense(dist):
    return gf2_rank((dist == 3).astype(np.uint8))
