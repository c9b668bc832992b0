"""The three slim generalized quadrangles and their arcs, ovoids and spreads.

Point sets inside the search routines are int bitmasks over point ids.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .f2linalg import bits_of, popcount
from .geometry import IncidenceGeometry, build_geometry, is_near_2n_gon, uniform_line_count


@dataclass(frozen=True)
class GqModel:
    geometry: IncidenceGeometry
    t: int
    labels: tuple

    def label(self, x: int):
        return self.labels[x]

    def describe(self, points) -> list:
        return [self.labels[p] for p in points]


@dataclass(frozen=True)
class Arc:
    points: tuple[int, ...]
    complete: bool


def grid_gq() -> GqModel:
    labels = tuple((a, b) for a in range(3) for b in range(3))
    index = {lab: i for i, lab in enumerate(labels)}
    lines = [[index[a, b] for b in range(3)] for a in range(3)]
    lines += [[index[a, b] for a in range(3)] for b in range(3)]
    return GqModel(build_geometry(9, lines, name="gq21"), 1, labels)


def _duads():
    return [d for d in combinations(range(1, 7), 2)]


def _factors():
    out = []
    for d1 in _duads():
        if d1[0] != 1:
            continue
        rest = [i for i in range(1, 7) if i not in d1]
        for d2 in combinations(rest, 2):
            if d2[0] != rest[0]:
                continue
            d3 = tuple(i for i in rest if i not in d2)
            out.append((d1, d2, d3))
    return sorted(out)


def duad_factor_gq() -> GqModel:
    labels = tuple(_duads())
    index = {lab: i for i, lab in enumerate(labels)}
    lines = [[index[d] for d in f] for f in _factors()]
    return GqModel(build_geometry(15, lines, name="gq22"), 2, labels)


def q24_gq() -> GqModel:
    """Points: duads, then 1..6, then 1'..6'; lines: factors and ``{i, {i,j}, j'}``."""
    labels = tuple(_duads()) + tuple(range(1, 7)) + tuple(f"{i}'" for i in range(1, 7))
    index = {lab: i for i, lab in enumerate(labels)}
    lines = [[index[d] for d in f] for f in _factors()]
    for i in range(1, 7):
        for j in range(1, 7):
            if i != j:
                lines.append([index[i], index[tuple(sorted((i, j)))], index[f"{j}'"]])
    return GqModel(build_geometry(27, lines, name="gq24"), 4, labels)


def model_for(g: IncidenceGeometry, labels=None) -> GqModel:
    """Wrap an arbitrary slim GQ (e.g. an ingested file) as a model."""
    if not is_near_2n_gon(g, 2):
        raise ValueError("geometry is not a generalized quadrangle")
    lc = uniform_line_count(g)
    if lc is None:
        raise ValueError("generalized quadrangle without uniform line count")
    return GqModel(g, lc - 1, tuple(labels) if labels else tuple(range(g.num_points)))


# -- bitmask helpers -----------------------------------------------------------------


def _masks(g: IncidenceGeometry):
    cache = g._cache.get("gq_masks")
    if cache is None:
        full = (1 << g.num_points) - 1
        nbr = [sum(1 << y for y in g.neighbours[x]) for x in range(g.num_points)]
        noncol = [full ^ nbr[x] ^ (1 << x) for x in range(g.num_points)]
        lines = [(1 << a) | (1 << b) | (1 << c) for a, b, c in g.lines]
        cache = (full, nbr, noncol, lines)
        g._cache["gq_masks"] = cache
    return cache


def closure_mask(g: IncidenceGeometry, s: int) -> int:
    """Subspace generated by the point set ``s`` (bitmask)."""
    _, _, _, lines = _masks(g)
    while True:
        before = s
        for lm in lines:
            inter = s & lm
            if inter and inter & (inter - 1) and inter != lm:
                s |= lm
        if s == before:
            return s


def to_mask(points) -> int:
    m = 0
    for p in points:
        m |= 1 << p
    return m


# -- arcs ----------------------------------------------------------------------------


def is_arc(m: GqModel, points) -> bool:
    return all(not m.geometry.collinear(x, y) for x, y in combinations(points, 2))


def extension_candidates(m: GqModel, points) -> int:
    """Bitmask of points that can be added to the arc ``points``."""
    full, _, noncol, _ = _masks(m.geometry)
    cand = full
    for p in points:
        cand &= noncol[p]
    return cand


def centers(m: GqModel, arc) -> list[int]:
    _, nbr, _, _ = _masks(m.geometry)
    pts = list(arc)
    c = nbr[pts[0]]
    for p in pts[1:]:
        c &= nbr[p]
    return list(bits_of(c))


def iter_arcs(m: GqModel, k: int):
    """All k-arcs as ascending tuples, by ordered backtracking."""
    full, _, noncol, _ = _masks(m.geometry)

    def rec(prefix, cand):
        if len(prefix) == k:
            yield tuple(prefix)
            return
        while cand:
            low = cand & -cand
            x = low.bit_length() - 1
            cand ^= low
            # only larger ids may follow x
            yield from rec(prefix + [x], cand & noncol[x])

    if k == 0:
        yield ()
        return
    yield from rec([], full)


def arcs(m: GqModel, k: int) -> list[Arc]:
    out = []
    for pts in iter_arcs(m, k):
        out.append(Arc(pts, extension_candidates(m, pts) == 0))
    return out


def max_arc_size(m: GqModel) -> int:
    k = 0
    while next(iter_arcs(m, k + 1), None) is not None:
        k += 1
    return k


def ovoids(m: GqModel) -> list[tuple[int, ...]]:
    g = m.geometry
    _, _, _, lines = _masks(g)
    out = []
    for pts in iter_arcs(m, 1 + 2 * m.t):
        s = to_mask(pts)
        if all(popcount(s & lm) == 1 for lm in lines):
            out.append(pts)
    return out


def spreads(m: GqModel) -> list[tuple[int, ...]]:
    """Sets of lines partitioning the points, as ascending line-index tuples."""
    g = m.geometry
    full, _, _, lines = _masks(g)
    out = []

    def rec(chosen, covered):
        if covered == full:
            out.append(tuple(sorted(chosen)))
            return
        free = full & ~covered
        x = (free & -free).bit_length() - 1
        for li in g.lines_through[x]:
            if lines[li] & covered == 0:
                rec(chosen + [li], covered | lines[li])

    rec([], 0)
    return sorted(set(out))


# -- subGQs ----------------------------------------------------------------------------


def classify_subspace(m: GqModel, points) -> str:
    pts = sorted(points)
    if len(pts) == m.geometry.num_points:
        return "whole"
    sub = m.geometry.induced(pts)
    if is_near_2n_gon(sub, 2):
        lc = uniform_line_count(sub)
        if lc is not None:
            return f"(2,{lc - 1})"
    return "other"


def subgq_generated(m: GqModel, seed) -> tuple[list[int], str]:
    """Subspace generated by ``seed`` and what it induces: "(2,1)", "(2,2)", "whole" or "other"."""
    s = closure_mask(m.geometry, to_mask(seed))
    pts = list(bits_of(s))
    return pts, classify_subspace(m, pts)


def subgqs(m: GqModel, t_sub: int) -> list[tuple[int, ...]]:
    """All proper (2, t_sub)-subGQs, as sorted point tuples."""
    g = m.geometry
    key = ("subgqs", t_sub)
    if key in g._cache:
        return g._cache[key]
    found = set()
    if t_sub == 1:
        for x, y in combinations(range(g.num_points), 2):
            if g.collinear(x, y):
                continue
            for a, b in combinations(g.common_neighbours(x, y), 2):
                s = closure_mask(g, to_mask((x, y, a, b)))
                if popcount(s) == 9:
                    found.add(s)
    elif t_sub == 2:
        for grid in subgqs(m, 1):
            gm = to_mask(grid)
            for p in range(g.num_points):
                if gm >> p & 1:
                    continue
                s = closure_mask(g, gm | (1 << p))
                if popcount(s) == 15 and s != (1 << g.num_points) - 1:
                    found.add(s)
    else:
        raise ValueError("only (2,1) and (2,2) subGQs are proper in slim GQs")
    out = []
    for s in found:
        pts = tuple(bits_of(s))
        if classify_subspace(m, pts) == f"(2,{t_sub})":
            out.append(pts)
    out.sort()
    g._cache[key] = out
    return out


def subgqs_containing(m: GqModel, points, t_sub: int) -> list[tuple[int, ...]]:
    want = to_mask(points)
    return [s for s in subgqs(m, t_sub) if to_mask(s) & want == want]


def generating_sets(m: GqModel, k: int):
    """k-subsets (ascending order) whose generated subspace is everything."""
    g = m.geometry
    full = (1 << g.num_points) - 1
    for pts in combinations(range(g.num_points), k):
        if closure_mask(g, to_mask(pts)) == full:
            yield pts


def min_generating_size(m: GqModel, lower_bound: int = 1) -> tuple[int, tuple[int, ...]]:
    """Smallest k (searched from ``lower_bound``) with a generating k-set, plus the first such set."""
    k = lower_bound
    while True:
        hit = next(generating_sets(m, k), None)
        if hit is not None:
            return k, hit
        k += 1
