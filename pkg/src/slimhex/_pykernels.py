"""Reference kernels used when the compiled extension is unavailable.

Rows of F2 matrices are Python ints (bit j = column j).  Distances use
numpy boolean frontier expansion.
"""

import numpy as np

UNREACHABLE = np.int16(32767)


def rref(rows, ncols):
    """Reduced row echelon form over F2.

    Returns ``(basis, pivots)``: the nonzero reduced rows sorted by pivot
    column, and the pivot columns (ascending).
    """
    mask = (1 << ncols) - 1
    by_pivot = {}
    for r in rows:
        r &= mask
        while r:
            p = (r & -r).bit_length() - 1
            other = by_pivot.get(p)
            if other is None:
                by_pivot[p] = r
                break
            r ^= other
    pivots = sorted(by_pivot)
    # back-substitution: clear each pivot column from rows with a smaller pivot
    for idx in range(len(pivots) - 1, -1, -1):
        p = pivots[idx]
        row = by_pivot[p]
        bit = 1 << p
        for q in pivots[:idx]:
            if by_pivot[q] & bit:
                by_pivot[q] ^= row
    return [by_pivot[p] for p in pivots], pivots


def rank(rows, ncols):
    mask = (1 << ncols) - 1
    by_pivot = {}
    for r in rows:
        r &= mask
        while r:
            p = (r & -r).bit_length() - 1
            other = by_pivot.get(p)
            if other is None:
                by_pivot[p] = r
                break
            r ^= other
    return len(by_pivot)


def distances(n, indptr, indices):
    """All-pairs graph distances; unreachable pairs get ``UNREACHABLE``."""
    indptr = np.asarray(indptr)
    indices = np.asarray(indices)
    adj = np.zeros((n, n), dtype=np.float32)
    src = np.repeat(np.arange(n), np.diff(indptr))
    adj[src, indices] = 1.0
    dist = np.full((n, n), UNREACHABLE, dtype=np.int16)
    np.fill_diagonal(dist, 0)
    seen = np.eye(n, dtype=bool)
    frontier = np.eye(n, dtype=np.float32)
    d = 0
    while frontier.any():
        d += 1
        reach = (frontier @ adj) > 0
        new = reach & ~seen
        if not new.any():
            break
        dist[new] = d
        seen |= new
        frontier = new.astype(np.float32)
    return dist
