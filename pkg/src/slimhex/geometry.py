"""Slim partial linear spaces, near-polygon axioms and quads.

Points are integers ``0..num_points-1``; every line is a sorted triple.
Distances in the collinearity graph are computed once per geometry (BFS
from every point) and cached as an ``int16`` matrix, with
``UNREACHABLE`` marking pairs in different components.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable, Sequence

import numpy as np

from . import _kernels
from .errors import (
    AxiomViolation,
    BadLine,
    NotBig,
    NotCollinear,
    NotDisjoint,
    NotDistanceTwo,
    NotPartialLinear,
    TooFewCommonNeighbours,
)

UNREACHABLE = _kernels.UNREACHABLE


@dataclass(frozen=True, eq=False)
class IncidenceGeometry:
    num_points: int
    lines: tuple[tuple[int, int, int], ...]
    name: str | None = None
    _cache: dict = field(default_factory=dict, repr=False, compare=False)

    def __eq__(self, other):
        if not isinstance(other, IncidenceGeometry):
            return NotImplemented
        return self.num_points == other.num_points and self.lines == other.lines

    def __hash__(self):
        return hash((self.num_points, self.lines))

    def __repr__(self):
        label = f" {self.name!r}" if self.name else ""
        return f"<IncidenceGeometry{label}: {self.num_points} points, {len(self.lines)} lines>"

    @cached_property
    def line_array(self) -> np.ndarray:
        arr = np.array(self.lines, dtype=np.int64).reshape(-1, 3)
        arr.setflags(write=False)
        return arr

    @cached_property
    def lines_through(self) -> tuple[tuple[int, ...], ...]:
        acc = [[] for _ in range(self.num_points)]
        for i, line in enumerate(self.lines):
            for p in line:
                acc[p].append(i)
        return tuple(tuple(a) for a in acc)

    @cached_property
    def neighbours(self) -> tuple[tuple[int, ...], ...]:
        acc = [[] for _ in range(self.num_points)]
        for a, b, c in self.lines:
            acc[a] += (b, c)
            acc[b] += (a, c)
            acc[c] += (a, b)
        return tuple(tuple(sorted(a)) for a in acc)

    @cached_property
    def _third(self) -> dict[tuple[int, int], int]:
        out = {}
        for a, b, c in self.lines:
            out[a, b] = out[b, a] = c
            out[a, c] = out[c, a] = b
            out[b, c] = out[c, b] = a
        return out

    @cached_property
    def _line_index(self) -> dict[tuple[int, int], int]:
        out = {}
        for i, (a, b, c) in enumerate(self.lines):
            for x, y in ((a, b), (a, c), (b, c)):
                out[x, y] = out[y, x] = i
        return out

    @cached_property
    def dist(self) -> np.ndarray:
        nbrs = self.neighbours
        indptr = np.zeros(self.num_points + 1, dtype=np.int32)
        indptr[1:] = np.cumsum([len(n) for n in nbrs])
        indices = np.fromiter((y for n in nbrs for y in n), dtype=np.int32, count=int(indptr[-1]))
        d = _kernels.distances(self.num_points, indptr, indices)
        d.setflags(write=False)
        return d

    @cached_property
    def connected(self) -> bool:
        return bool((self.dist != UNREACHABLE).all())

    @cached_property
    def diameter(self) -> int | None:
        """Graph diameter, or ``None`` when disconnected."""
        if not self.connected:
            return None
        return int(self.dist.max())

    def collinear(self, x: int, y: int) -> bool:
        return (x, y) in self._third

    def third_point(self, x: int, y: int) -> int:
        try:
            return self._third[x, y]
        except KeyError:
            raise NotCollinear(f"points {x} and {y} are not collinear") from None

    def line_of(self, x: int, y: int) -> tuple[int, int, int]:
        try:
            return self.lines[self._line_index[x, y]]
        except KeyError:
            raise NotCollinear(f"points {x} and {y} are not collinear") from None

    def perp(self, x: int) -> set[int]:
        return {x, *self.neighbours[x]}

    def common_neighbours(self, x: int, y: int) -> list[int]:
        ny = set(self.neighbours[y])
        return [z for z in self.neighbours[x] if z in ny]

    def gamma(self, x: int, i: int) -> np.ndarray:
        return np.flatnonzero(self.dist[x] == i)

    def induced(self, points: Iterable[int], name: str | None = None) -> "IncidenceGeometry":
        """Subgeometry on ``points`` (relabelled ascending) with the lines contained in it."""
        pts = sorted(set(points))
        index = {p: i for i, p in enumerate(pts)}
        candidates = {li for p in pts for li in self.lines_through[p]}
        inner = []
        for li in candidates:
            line = self.lines[li]
            if line[0] in index and line[1] in index and line[2] in index:
                inner.append(tuple(index[p] for p in line))
        return build_geometry(len(pts), inner, name=name)

    def to_json_dict(self) -> dict:
        out = {"num_points": self.num_points, "lines": [list(l) for l in self.lines]}
        if self.name is not None:
            out["name"] = self.name
        return out


def build_geometry(num_points: int, lines: Iterable[Sequence[int]], name: str | None = None) -> IncidenceGeometry:
    """Validate and canonicalise a slim partial linear space."""
    if num_points < 1:
        raise BadLine("a geometry needs at least one point")
    canon = set()
    pair_owner: dict[tuple[int, int], tuple[int, int, int]] = {}
    for raw in lines:
        line = tuple(sorted(int(p) for p in raw))
        if len(line) != 3:
            raise BadLine(f"line {list(raw)} does not have exactly 3 points")
        if line[0] == line[1] or line[1] == line[2]:
            raise BadLine(f"line {list(raw)} repeats a point")
        if line[0] < 0 or line[2] >= num_points:
            raise BadLine(f"line {list(raw)} has a point id outside 0..{num_points - 1}")
        if line in canon:
            continue
        for pair in ((line[0], line[1]), (line[0], line[2]), (line[1], line[2])):
            other = pair_owner.get(pair)
            if other is not None:
                raise NotPartialLinear(f"points {pair} lie on lines {list(other)} and {list(line)}")
            pair_owner[pair] = line
        canon.add(line)
    return IncidenceGeometry(num_points, tuple(sorted(canon)), name)


# -- near-polygon axioms -------------------------------------------------------


def _line_distance_blocks(g: IncidenceGeometry, chunk: int = 512):
    """Yield ``(offset, D)`` with ``D[x, k, :]`` the distances from x to line ``offset+k``."""
    la = g.line_array
    for start in range(0, len(la), chunk):
        yield start, g.dist[:, la[start:start + chunk]]


def is_near_2n_gon(g: IncidenceGeometry, n: int) -> bool:
    if not g.lines or not g.connected or g.diameter != n:
        return False
    if g.num_points > 1 and max(len(nb) for nb in g.neighbours) == g.num_points - 1:
        return False  # some point is collinear with all others: P-perp nonempty
    for _, d in _line_distance_blocks(g):
        m = d.min(axis=2)
        if ((d == m[:, :, None]).sum(axis=2) != 1).any():
            return False
    return True


def line_distance_violation(g: IncidenceGeometry) -> tuple[int, tuple[int, int, int]] | None:
    """First ``(point, line)`` whose distance multiset is not ``{d, d+1, d+1}``."""
    for start, d in _line_distance_blocks(g):
        s = np.sort(d.astype(np.int32), axis=2)
        bad = (s[:, :, 1] != s[:, :, 0] + 1) | (s[:, :, 2] != s[:, :, 0] + 1)
        if bad.any():
            x, k = np.argwhere(bad)[0]
            return int(x), g.lines[start + int(k)]
    return None


def distance_three_parity_violation(g: IncidenceGeometry) -> tuple[int, tuple[int, int, int]] | None:
    """First ``(w, line)`` where the line has an odd number of points at distance 3 from w."""
    for start, d in _line_distance_blocks(g):
        odd = ((d == 3).sum(axis=2) % 2) == 1
        if odd.any():
            x, k = np.argwhere(odd)[0]
            return int(x), g.lines[start + int(k)]
    return None


# -- closures ------------------------------------------------------------------


def subspace_closure(g: IncidenceGeometry, seed: Iterable[int]) -> list[int]:
    """Smallest subspace containing ``seed`` (lines with two points inside are added)."""
    inside = np.zeros(g.num_points, dtype=bool)
    inside[list(seed)] = True
    la = g.line_array
    while True:
        grow = inside[la].sum(axis=1) >= 2
        pts = la[grow].ravel()
        if inside[pts].all():
            return np.flatnonzero(inside).tolist()
        inside[pts] = True


def convex_closure(g: IncidenceGeometry, seed: Iterable[int]) -> list[int]:
    """Smallest convex subspace containing ``seed``.

    Worklist fixpoint over pairs of current points: a collinear pair adds
    its third point (line closure), a pair at distance k >= 2 adds every
    point on a geodesic between them.
    """
    dist = g.dist
    members = sorted(set(seed))
    inside = set(members)
    nbr = g.neighbours
    i = 0
    # pairs (members[a], members[b]) with b < i were handled already
    while i < len(members):
        u = members[i]
        for v in members[:i]:
            d = int(dist[u, v])
            if d == 1:
                new = (g._third[u, v],)
            elif d == 2:
                nv = set(nbr[v])
                new = [w for w in nbr[u] if w in nv]
            else:
                row = dist[u].astype(np.int32) + dist[v]
                new = np.flatnonzero(row == d).tolist()
            for w in new:
                if w not in inside:
                    inside.add(w)
                    members.append(w)
        i += 1
    return sorted(inside)


# -- quads ---------------------------------------------------------------------


@dataclass(frozen=True)
class Quad:
    points: tuple[int, ...]
    t2: int
    big: bool

    def __contains__(self, x: int) -> bool:
        return x in self._members

    @cached_property
    def _members(self) -> frozenset[int]:
        return frozenset(self.points)

    def __len__(self) -> int:
        return len(self.points)


@dataclass(frozen=True)
class PointQuadClass:
    kind: str  # "classical" | "ovoidal"
    gate: int | None = None
    ovoid: tuple[int, ...] | None = None
    distance: int = 0


def _is_big(g: IncidenceGeometry, pts: Sequence[int]) -> bool:
    ext = np.ones(g.num_points, dtype=bool)
    ext[list(pts)] = False
    if not ext.any():
        return True
    sub = g.dist[np.ix_(ext, np.asarray(pts))]
    return bool((sub.min(axis=1) == 1).all() and ((sub == 1).sum(axis=1) == 1).all())


def _lines_inside(g: IncidenceGeometry, pts: Sequence[int]) -> list[int]:
    members = set(pts)
    out = set()
    for p in members:
        for li in g.lines_through[p]:
            a, b, c = g.lines[li]
            if a in members and b in members and c in members:
                out.add(li)
    return sorted(out)


def quad_of(g: IncidenceGeometry, x: int, y: int) -> Quad:
    if g.dist[x, y] != 2:
        raise NotDistanceTwo(f"d({x},{y}) = {int(g.dist[x, y])}")
    if len(g.common_neighbours(x, y)) < 2:
        raise TooFewCommonNeighbours(f"points {x},{y} have fewer than two common neighbours")
    pts = convex_closure(g, (x, y))
    sub = g.induced(pts)
    if not is_near_2n_gon(sub, 2):
        raise AxiomViolation(f"convex closure of {x},{y} ({len(pts)} points) is not a generalized quadrangle")
    inner = set(_lines_inside(g, pts))
    t2 = sum(1 for li in g.lines_through[x] if li in inner) - 1
    return Quad(tuple(pts), t2, _is_big(g, pts))


def quads(g: IncidenceGeometry) -> tuple[Quad, ...]:
    """Every quad of ``g``, sorted by point tuple.

    Each quad through a point ``x`` is generated by two lines through ``x``;
    a (point, line pair) already covered by a known quad is skipped, so each
    quad is closed exactly once.
    """
    cached = g._cache.get("quads")
    if cached is not None:
        return cached
    covered: set[tuple[int, int, int]] = set()
    found: dict[tuple[int, ...], Quad] = {}
    for x in range(g.num_points):
        through = g.lines_through[x]
        for la, lb in combinations(through, 2):
            if (x, la, lb) in covered:
                continue
            y = next(p for p in g.lines[la] if p != x)
            z = next(p for p in g.lines[lb] if p != x)
            if g.dist[y, z] != 2 or len(g.common_neighbours(y, z)) < 2:
                continue
            q = quad_of(g, y, z)
            found[q.points] = q
            inner = set(_lines_inside(g, q.points))
            for p in q.points:
                mine = [li for li in g.lines_through[p] if li in inner]
                for pair in combinations(mine, 2):
                    covered.add((p, *pair))
    out = tuple(found[k] for k in sorted(found))
    g._cache["quads"] = out
    return out


def quads_through(g: IncidenceGeometry, x: int) -> list[Quad]:
    table = g._cache.get("quads_through")
    if table is None:
        table = [[] for _ in range(g.num_points)]
        for q in quads(g):
            for p in q.points:
                table[p].append(q)
        g._cache["quads_through"] = table
    return table[x]


def find_quad(g: IncidenceGeometry, pts: Iterable[int]) -> Quad | None:
    key = tuple(sorted(pts))
    index = g._cache.get("quad_index")
    if index is None:
        index = {q.points: q for q in quads(g)}
        g._cache["quad_index"] = index
    return index.get(key)


def classify_point_quad(g: IncidenceGeometry, x: int, q: Quad) -> PointQuadClass:
    if x in q:
        raise ValueError(f"point {x} lies in the quad")
    pts = np.asarray(q.points)
    d = g.dist[x, pts].astype(np.int32)
    m = int(d.min())
    nearest = pts[d == m]
    if len(nearest) == 1:
        y = int(nearest[0])
        if (d == m + g.dist[y, pts]).all():
            return PointQuadClass("classical", gate=y, distance=m)
        raise AxiomViolation(f"point {x}: unique nearest {y} in quad but distances are not additive")
    near = set(nearest.tolist())
    for li in _lines_inside(g, q.points):
        if sum(1 for p in g.lines[li] if p in near) != 1:
            raise AxiomViolation(f"point {x}: nearest points of quad do not form an ovoid")
    return PointQuadClass("ovoidal", ovoid=tuple(sorted(near)), distance=m)


def point_quad_dichotomy_violation(g: IncidenceGeometry, q: Quad) -> int | None:
    """Vectorised :func:`classify_point_quad` over all external points; first failing point."""
    pts = np.asarray(q.points)
    ext = np.ones(g.num_points, dtype=bool)
    ext[pts] = False
    ext_ids = np.flatnonzero(ext)
    if not len(ext_ids):
        return None
    sub = g.dist[np.ix_(ext_ids, pts)].astype(np.int32)
    m = sub.min(axis=1)
    near = sub == m[:, None]
    count = near.sum(axis=1)
    bad = np.zeros(len(ext_ids), dtype=bool)
    uniq = count == 1
    if uniq.any():
        gate_pos = near[uniq].argmax(axis=1)
        gate_rows = g.dist[np.ix_(pts[gate_pos], pts)].astype(np.int32)
        additive = (sub[uniq] == m[uniq][:, None] + gate_rows).all(axis=1)
        bad[np.flatnonzero(uniq)[~additive]] = True
    multi = ~uniq
    if multi.any():
        local = {p: i for i, p in enumerate(q.points)}
        inner = _lines_inside(g, q.points)
        inc = np.zeros((len(pts), len(inner)), dtype=np.int32)
        for j, li in enumerate(inner):
            for p in g.lines[li]:
                inc[local[p], j] = 1
        hits = near[multi].astype(np.int32) @ inc
        bad[np.flatnonzero(multi)[~(hits == 1).all(axis=1)]] = True
    if bad.any():
        return int(ext_ids[np.argmax(bad)])
    return None


def verify_big_quad_inequality(g: IncidenceGeometry, q: Quad, t: int | None = None) -> dict:
    if t is None:
        t = uniform_line_count(g)
        if t is None:
            raise ValueError("geometry has no uniform line count")
        t -= 1
    lhs = g.num_points
    rhs = len(q) * (1 + 2 * (t - q.t2))
    equality = lhs == rhs
    return {
        "lhs": lhs,
        "rhs": rhs,
        "inequality_holds": lhs >= rhs,
        "equality": equality,
        "big": q.big,
        "consistent": lhs >= rhs and equality == q.big,
    }


def nearest_in_big_quad(g: IncidenceGeometry, q: Quad, points: Iterable[int]) -> dict[int, int]:
    """``x -> `` the unique point of ``q`` at distance at most one from ``x``."""
    pts = np.asarray(q.points)
    out = {}
    for x in points:
        hits = pts[g.dist[x, pts] <= 1]
        if x in q:
            out[x] = x
            continue
        if len(hits) != 1:
            raise NotBig(f"point {x} has {len(hits)} points of the quad within distance one")
        out[x] = int(hits[0])
    return out


def glue_map(g: IncidenceGeometry, q1: Quad, q2: Quad) -> dict[int, int]:
    """``x -> z_x``, the unique point of ``q2`` collinear with ``x`` in ``q1``."""
    if set(q1.points) & set(q2.points):
        raise NotDisjoint("quads share a point")
    if not (q1.big and q2.big):
        raise NotBig("both quads must be big")
    return nearest_in_big_quad(g, q2, q1.points)


def glue_quads(g: IncidenceGeometry, q1: Quad, q2: Quad) -> Quad:
    pi = glue_map(g, q1, q2)
    for x, y in combinations(q1.points, 2):
        if g.collinear(x, y) != g.collinear(pi[x], pi[y]):
            raise AxiomViolation(f"x -> z_x does not preserve collinearity on ({x},{y})")
    if len(set(pi.values())) != len(pi):
        raise AxiomViolation("x -> z_x is not injective")
    pts = sorted(g.third_point(x, z) for x, z in pi.items())
    q = find_quad(g, pts)
    if q is None:
        raise AxiomViolation("the glued point set is not a quad")
    if not q.big:
        raise AxiomViolation("the glued quad is not big")
    return q


# -- hyperplanes and parameters --------------------------------------------------


def special_hyperplane(g: IncidenceGeometry, x: int) -> list[int]:
    """``Gamma_{<= n-1}(x)`` for a near 2n-gon (n = diameter)."""
    n = g.diameter
    if n is None:
        raise ValueError("geometry is disconnected")
    return np.flatnonzero(g.dist[x] <= n - 1).tolist()


def is_geometric_hyperplane(g: IncidenceGeometry, h: Iterable[int]) -> bool:
    inside = np.zeros(g.num_points, dtype=bool)
    inside[list(h)] = True
    count = int(inside.sum())
    if count == 0 or count == g.num_points:
        return False
    per_line = inside[g.line_array].sum(axis=1)
    return bool((per_line >= 1).all() and not (per_line == 2).any())


def uniform_line_count(g: IncidenceGeometry) -> int | None:
    """``t + 1`` when every point is on the same number of lines."""
    counts = {len(l) for l in g.lines_through}
    return counts.pop() if len(counts) == 1 else None


def quad_type_counts(g: IncidenceGeometry, x: int) -> dict[int, int]:
    return dict(sorted(Counter(q.t2 for q in quads_through(g, x)).items()))


def quad_type_set(g: IncidenceGeometry) -> set[tuple[int, bool]]:
    return {(q.t2, q.big) for q in quads(g)}
