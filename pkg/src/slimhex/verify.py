"""Machine checks of the structural statements, one certificate per (check, geometry).

Every check is exhaustive over the objects its statement quantifies over,
except where noted in the check's docstring.  Checks about "every
representation" run on the canonical cocycle group and its minimal quotient
(hexagons) or on every faithful quotient of V(S) (generalized quadrangles).
"""

from __future__ import annotations

import json
import random
import time
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Callable

import numpy as np

from . import catalog, gq
from .errors import InconsistentSystem, SlimhexError
from .f2linalg import BitMatrix, QuadraticFormData, arf_type, bits_of, nullspace_rows, rank_rows, rref_rows, span_elements
from .geometry import (
    IncidenceGeometry,
    Quad,
    quad_of,
    glue_map,
    glue_quads,
    is_near_2n_gon,
    point_quad_dichotomy_violation,
    quads,
    subspace_closure,
    uniform_line_count,
    verify_big_quad_inequality,
)
from .repgroup import (
    CocycleGroup,
    abelian_span,
    build_representation,
    center,
    central_decomposition,
    default_pair,
    faithful_quotients,
    good_subset_search,
    minimal_quotient,
    neighbour_set_A,
    representation_obstruction,
    universal_module,
)

PASS, FAIL, SKIPPED = "pass", "fail", "skipped"


@dataclass(frozen=True)
class Status:
    kind: str
    witness: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.kind == PASS


@dataclass(frozen=True)
class Certificate:
    check: str
    geometry: str
    status: Status
    millis: int = 0

    def to_json_dict(self, timings: bool = False) -> dict:
        out = {"check": self.check, "geometry": self.geometry, "status": self.status.kind, "witness": self.status.witness}
        if timings:
            out["millis"] = self.millis
        return out


def _elem(e) -> list:
    v, c = e
    return [list(bits_of(v)), c]


# -- per-geometry context ---------------------------------------------------------------------


class Context:
    """Lazily computed objects shared by the checks on one geometry (read-only use)."""

    def __init__(self, g: IncidenceGeometry):
        self.g = g

    @cached_property
    def is_gq(self) -> bool:
        return self.g.diameter == 2 and is_near_2n_gon(self.g, 2) and uniform_line_count(self.g) is not None

    @cached_property
    def is_hexagon(self) -> bool:
        return self.g.diameter == 3 and is_near_2n_gon(self.g, 3) and uniform_line_count(self.g) is not None

    @cached_property
    def t(self) -> int:
        return uniform_line_count(self.g) - 1

    @cached_property
    def model(self) -> gq.GqModel:
        return gq.model_for(self.g)

    @cached_property
    def rs(self):
        return universal_module(self.g)

    @cached_property
    def quads(self) -> tuple[Quad, ...]:
        return quads(self.g)

    @cached_property
    def big_quads(self) -> list[Quad]:
        return [q for q in self.quads if q.big]

    @cached_property
    def group_or_reason(self):
        try:
            return build_representation(self.rs), None
        except InconsistentSystem:
            ob = representation_obstruction(self.g)
            return None, {"reason": "no non-abelian representation exists", "obstruction": None if ob is None else ob.to_json_dict()}

    @property
    def group(self) -> CocycleGroup | None:
        return self.group_or_reason[0]

    @cached_property
    def minimal(self):
        return minimal_quotient(self.group)

    @cached_property
    def groups(self) -> list[tuple[str, CocycleGroup]]:
        out = [("canonical", self.group)]
        if self.minimal.kernel_basis:
            out.append(("minimal", self.minimal.group))
        return out

    @cached_property
    def faithful(self):
        return faithful_quotients(self.rs)

    @cached_property
    def disjoint_big_pairs(self) -> list[tuple[Quad, Quad]]:
        out = []
        for q1, q2 in combinations(self.big_quads, 2):
            if not set(q1.points) & set(q2.points):
                out.append((q1, q2))
        return out

    @cached_property
    def proper_y_pairs(self) -> list[tuple[Quad, Quad, list[int]]]:
        """Disjoint big quad pairs whose generated subspace is proper, with that subspace."""
        out = []
        for q1, q2 in self.disjoint_big_pairs:
            y = subspace_closure(self.g, q1.points + q2.points)
            if len(y) < self.g.num_points:
                out.append((q1, q2, y))
        return out

    @cached_property
    def distance_three_pair(self):
        return default_pair(self.g)

    @cached_property
    def good_subset(self):
        a, b = self.distance_three_pair
        return good_subset_search(self.rs, a, b)

    @cached_property
    def vi_setup(self):
        return _vi_setup(self)


# -- scopes ---------------------------------------------------------------------------------------


def _need_gq(ctx):
    return None if ctx.is_gq else {"reason": "not a slim generalized quadrangle"}


def _need_t(*ts):
    def scope(ctx):
        if not ctx.is_gq:
            return {"reason": "not a slim generalized quadrangle"}
        return None if ctx.t in ts else {"reason": f"needs t in {list(ts)}"}

    return scope


def _need_hexagon(ctx):
    return None if ctx.is_hexagon else {"reason": "not a slim dense near hexagon"}


def _need_group(ctx):
    r = _need_hexagon(ctx)
    if r is not None:
        return r
    return ctx.group_or_reason[1]


def _need_disjoint_big(ctx):
    r = _need_hexagon(ctx)
    if r is not None:
        return r
    return None if ctx.disjoint_big_pairs else {"reason": "no two disjoint big quads"}


def _need_proper_y(ctx):
    r = _need_disjoint_big(ctx)
    if r is not None:
        return r
    return None if ctx.proper_y_pairs else {"reason": "two disjoint big quads always generate the whole geometry"}


def _need_vi(ctx):
    r = _need_vii_subspace(ctx)
    if r is not None:
        return r
    return None if _table_row(ctx) == "vi" else {"reason": "statement is about the hexagon (vi)"}


def _need_vii_subspace(ctx):
    r = _need_group(ctx)
    if r is not None:
        return r
    setup = ctx.vi_setup
    return None if setup is not None else {"reason": "no proper subspace generated by two disjoint big (2,4)-quads"}


# -- near hexagon geometry -----------------------------------------------------------------------------


def check_dichotomy(ctx):
    """Every point outside a quad is classical (unique gate) or ovoidal w.r.t. it."""
    for i, q in enumerate(ctx.quads):
        bad = point_quad_dichotomy_violation(ctx.g, q)
        if bad is not None:
            return False, {"quad": list(q.points), "point": bad}
    return True, {"quads": len(ctx.quads)}


def check_lemma_2_1(ctx):
    """``|P| >= |Q|(1 + 2(t - t2))`` with equality exactly for big quads."""
    seen = {}
    for q in ctx.quads:
        r = verify_big_quad_inequality(ctx.g, q, ctx.t)
        if not r["consistent"]:
            return False, {"quad": list(q.points), **r}
        key = (q.t2, q.big)
        seen[key] = seen.get(key, 0) + 1
        if (q.t2, not q.big) in seen:
            return False, {"quad": list(q.points), "reason": "quads of one type differ in bigness"}
    return True, {"types": [[t2, big, n] for (t2, big), n in sorted(seen.items())]}


def check_lemma_2_2(ctx):
    """For disjoint big quads, ``x -> z_x`` is an isomorphism and ``{x * z_x}`` is a big quad."""
    for q1, q2 in ctx.disjoint_big_pairs:
        for a, b in ((q1, q2), (q2, q1)):
            try:
                glue_quads(ctx.g, a, b)
            except SlimhexError as exc:
                return False, {"q1": list(a.points), "q2": list(b.points), "error": str(exc)}
    return True, {"pairs": len(ctx.disjoint_big_pairs)}


def _projections(g, q1, q2, outside):
    """``x -> (x^1, x^2)``: the points of ``q1``/``q2`` collinear with ``x``."""
    p1, p2 = np.asarray(q1.points), np.asarray(q2.points)
    out = {}
    for x in outside:
        a = p1[g.dist[x, p1] == 1]
        b = p2[g.dist[x, p2] == 1]
        out[x] = (int(a[0]), int(b[0]))
    return out


def _y_data(ctx, q1, q2, y):
    g = ctx.g
    outside = [x for x in range(g.num_points) if x not in set(y)]
    z12 = glue_map(g, q1, q2)  # x in q1 -> z_x in q2
    z21 = glue_map(g, q2, q1)
    return outside, _projections(g, q1, q2, outside), z12, z21


def check_prop_2_3(ctx):
    """For ``x`` outside ``Y``: ``{x^1, z_{x^1}, x^2, z_{x^2}}`` is a quadrangle."""
    g = ctx.g
    count = 0
    for q1, q2, y in ctx.proper_y_pairs:
        outside, proj, z12, z21 = _y_data(ctx, q1, q2, y)
        for x in outside:
            x1, x2 = proj[x]
            zx1, zx2 = z12[x1], z21[x2]
            ok = g.dist[zx1, x2] == 1 and g.dist[zx2, x1] == 1 and g.dist[zx1, zx2] == 2 and g.dist[x1, x2] == 2
            if not ok:
                return False, {"q1": list(q1.points), "q2": list(q2.points), "x": x}
            count += 1
    return True, {"pairs": len(ctx.proper_y_pairs), "points_checked": count}


def _lines_disjoint_from(g, y):
    ys = set(y)
    return [li for li, ln in enumerate(g.lines) if not ys.intersection(ln)]


def check_prop_2_4(ctx):
    """On a line disjoint from ``Y``: ``x^1y^1 = x^1 z_{x^2}`` iff ``x^2y^2 = x^2 z_{x^1}``, with the stated ``(y^1, y^2)``."""
    g = ctx.g
    count = 0
    for q1, q2, y in ctx.proper_y_pairs:
        outside, proj, z12, z21 = _y_data(ctx, q1, q2, y)
        for li in _lines_disjoint_from(g, y):
            for x, w in ((a, b) for a in g.lines[li] for b in g.lines[li] if a != b):
                x1, x2 = proj[x]
                w1, w2 = proj[w]
                zx1, zx2 = z12[x1], z21[x2]
                left = w1 in g.line_of(x1, zx2)
                right = w2 in g.line_of(x2, zx1)
                ok = left == right
                if ok and left:
                    ok = (w1, w2) in ((zx2, g.third_point(x2, zx1)), (g.third_point(x1, zx2), zx1))
                if not ok:
                    return False, {"q1": list(q1.points), "q2": list(q2.points), "x": x, "y": w}
                count += 1
    return True, {"ordered_pairs": count}


def check_cor_2_5(ctx):
    """On a line disjoint from ``Y``: ``d(z_{x^i}, z_{y^j}) <= 2`` iff ``x^j y^j = x^j z_{x^i}``, else 3."""
    g = ctx.g
    count = 0
    for q1, q2, y in ctx.proper_y_pairs:
        outside, proj, z12, z21 = _y_data(ctx, q1, q2, y)
        zmap = (z12, z21)
        for li in _lines_disjoint_from(g, y):
            for x, w in ((a, b) for a in g.lines[li] for b in g.lines[li] if a != b):
                for i, j in ((0, 1), (1, 0)):
                    zxi = zmap[i][proj[x][i]]
                    zwj = zmap[j][proj[w][j]]
                    same = proj[w][j] in g.line_of(proj[x][j], zxi)
                    d = int(g.dist[zxi, zwj])
                    if (same and d > 2) or (not same and d != 3):
                        return False, {"q1": list(q1.points), "q2": list(q2.points), "x": x, "y": w, "i": i + 1}
                    count += 1
    return True, {"cases": count}


def check_prop_2_6(ctx):
    """Big quad ``Q`` disjoint from ``Y``, ``x`` not collinear with ``y`` in ``Q``: distance pair is (2,3) or (3,2)."""
    g = ctx.g
    count = 0
    for q1, q2, y in ctx.proper_y_pairs:
        ys = set(y)
        outside, proj, z12, z21 = _y_data(ctx, q1, q2, y)
        for q in ctx.big_quads:
            if ys.intersection(q.points):
                continue
            for x, w in combinations(q.points, 2):
                if g.collinear(x, w):
                    continue
                pair = (int(g.dist[z12[proj[x][0]], z21[proj[w][1]]]), int(g.dist[z21[proj[x][1]], z12[proj[w][0]]]))
                if pair not in ((2, 3), (3, 2)):
                    return False, {"quad": list(q.points), "x": x, "y": w, "distances": list(pair)}
                count += 1
    if not count:
        return True, {"cases": 0, "note": "no big quad disjoint from Y"}
    return True, {"cases": count}


# -- generalized quadrangles ----------------------------------------------------------------------------


def check_gq_ovoid_spread_sizes(ctx):
    m = ctx.model
    ovs, sps = gq.ovoids(m), gq.spreads(m)
    want = 1 + 2 * ctx.t
    for o in ovs:
        if len(o) != want:
            return False, {"ovoid": list(o)}
    for s in sps:
        if len(s) != want:
            return False, {"spread": list(s)}
    return True, {"ovoids": len(ovs), "spreads": len(sps), "size": want}


def check_gq_grid_through_pairs(ctx):
    """Each pair of non-collinear points lies in a (2,1)-subGQ."""
    g = ctx.g
    for x, y in combinations(range(g.num_points), 2):
        if g.collinear(x, y):
            continue
        a, b = g.common_neighbours(x, y)[:2]
        pts, kind = gq.subgq_generated(ctx.model, (x, y, a, b))
        if len(pts) != 9 or kind not in ("(2,1)", "whole"):
            return False, {"x": x, "y": y}
    return True, {}


def check_gq_subgq_extension(ctx):
    """A (2,t')-subGQ plus an outside point generates a (2,2t')-subGQ."""
    m = ctx.model
    n = 0
    for t_sub in (1, 2):
        if 2 * t_sub > ctx.t:
            continue
        want = "whole" if 2 * t_sub == ctx.t else f"(2,{2 * t_sub})"
        for sub in gq.subgqs(m, t_sub):
            for p in range(ctx.g.num_points):
                if p in sub:
                    continue
                _, kind = gq.subgq_generated(m, sub + (p,))
                if kind != want:
                    return False, {"subgq": list(sub), "point": p, "got": kind}
                n += 1
    return True, {"extensions": n}


def check_gq_min_generators(ctx):
    """Fewest generating points is 4, 5, 6 for t = 1, 2, 4; any generating set spans V(S), so ``dim V`` is a lower bound."""
    want = {1: 4, 2: 5, 4: 6}[ctx.t]
    k, witness = gq.min_generating_size(ctx.model, lower_bound=ctx.rs.dim_v)
    return k == want, {"size": k, "set": list(witness), "lower_bound": ctx.rs.dim_v}


def check_gq22_arc_facts(ctx):
    m, g = ctx.model, ctx.g
    n = g.num_points
    ovs = [frozenset(o) for o in gq.ovoids(m)]
    grids = [frozenset(s) for s in gq.subgqs(m, 1)]
    if len(ovs) != 6 or gq.max_arc_size(m) != 5:
        return False, {"ovoids": len(ovs)}
    for p in range(n):
        if sum(p in o for o in ovs) != 2:
            return False, {"point_in_ovoids": p}
    for o1, o2 in combinations(ovs, 2):
        if len(o1 & o2) != 1:
            return False, {"ovoids_meet": [sorted(o1), sorted(o2)]}
    complete3 = []
    for arc in gq.iter_arcs(m, 3):
        perp = gq.centers(m, arc)
        in_grids = sum(1 for s in grids if set(arc) <= s)
        complete = gq.extension_candidates(m, arc) == 0
        if len(perp) not in (1, 3) or (len(perp) == 1) != (in_grids == 1) or (len(perp) == 3) != complete:
            return False, {"arc": list(arc), "perp": perp}
        if complete:
            complete3.append(frozenset(arc))
        elif sum(1 for o in ovs if set(arc) <= o) != 1:
            return False, {"incomplete_arc_not_in_unique_ovoid": list(arc)}
    for x, y in combinations(range(n), 2):
        if g.collinear(x, y):
            continue
        if sum(1 for o in ovs if {x, y} <= o) != 1 or sum(1 for c in complete3 if {x, y} <= c) != 1:
            return False, {"pair": [x, y]}
    for arc in gq.iter_arcs(m, 4):
        if gq.extension_candidates(m, arc) == 0 or sum(1 for o in ovs if set(arc) <= o) != 1:
            return False, {"four_arc": list(arc)}
    for c1, c2 in combinations(complete3, 2):
        if len(c1 & c2) > 1:
            return False, {"complete_arcs": [sorted(c1), sorted(c2)]}
    return True, {"ovoids": 6, "complete_3_arcs": len(complete3)}


def check_gq24_arc_facts(ctx):
    m = ctx.model
    grids = [frozenset(s) for s in gq.subgqs(m, 1)]
    gq22s = [frozenset(s) for s in gq.subgqs(m, 2)]
    if gq.ovoids(m) or gq.max_arc_size(m) != 6:
        return False, {"reason": "ovoid or arc size"}
    six = [frozenset(a) for a in gq.iter_arcs(m, 6)]
    if not any(not (a & b) for a, b in combinations(six, 2)):
        return False, {"reason": "no two disjoint 6-arcs"}
    for arc in gq.iter_arcs(m, 3):
        if len(gq.centers(m, arc)) != 3 or sum(1 for s in grids if set(arc) <= s) != 1:
            return False, {"three_arc": list(arc)}
    complete5 = []
    for arc in gq.iter_arcs(m, 5):
        complete = gq.extension_candidates(m, arc) == 0
        n22 = sum(1 for s in gq22s if set(arc) <= s)
        ncent = len(gq.centers(m, arc))
        if complete != (n22 == 1) or ncent != (2 if complete else 1):
            return False, {"five_arc": list(arc), "complete": complete, "subgqs": n22, "centers": ncent}
        if complete:
            complete5.append(frozenset(arc))
    for arc in gq.iter_arcs(m, 4):
        s = set(arc)
        ok = (
            len(gq.centers(m, arc)) == 2
            and sum(1 for q in gq22s if s <= q) == 1
            and sum(1 for c in complete5 if s <= c) == 1
            and sum(1 for c in six if s <= c) == 1
        )
        if not ok:
            return False, {"four_arc": list(arc)}
    return True, {"six_arcs": len(six), "complete_5_arcs": len(complete5)}


def _quotient_rows(ctx):
    return [(fq, set(fq.images)) for fq in ctx.faithful]


def check_prop_3_1(ctx):
    """Representations of a slim GQ are abelian; mechanism: the grid identity on each non-collinear pair."""
    g = ctx.g
    if any(ctx.rs.beta.rows) or not build_representation(ctx.rs).abelian:
        return False, {"reason": "canonical representation is not abelian"}
    for x, y in combinations(range(g.num_points), 2):
        if g.collinear(x, y):
            continue
        a, b = g.common_neighbours(x, y)[:2]
        u = g.third_point(g.third_point(a, x), g.third_point(b, y))
        w = g.third_point(g.third_point(a, y), g.third_point(b, x))
        if u != w:
            return False, {"x": x, "y": y}
    return True, {"faithful_quotients": len(ctx.faithful)}


def check_prop_3_2(ctx):
    dims = sorted({fq.dim for fq in ctx.faithful})
    want = {1: [4], 2: [4, 5], 4: [6]}[ctx.t]
    return dims == want, {"dims": dims}


def check_prop_3_3(ctx):
    """``r_x r_y`` in ``R_psi`` for ``x != y`` forces ``x ~ y``, unless ``(t, |R|) = (2, 2^4)``."""
    g = ctx.g
    checked = []
    for fq, images in _quotient_rows(ctx):
        if (ctx.t, fq.dim) == (2, 4):
            continue
        for x, y in combinations(range(g.num_points), 2):
            if fq.reduce(fq.images[x] ^ fq.images[y]) in images and not g.collinear(x, y):
                return False, {"dim": fq.dim, "x": x, "y": y}
        checked.append(fq.dim)
    return True, {"dims_checked": checked}


def check_cor_3_4(ctx):
    out = []
    for fq in ctx.faithful:
        for s in gq.subgqs(ctx.model, 2):
            d = rank_rows([fq.images[x] for x in s], ctx.rs.dim_v)
            if d != 5:
                return False, {"subgq": list(s), "span_dim": d}
        out.append(fq.dim)
    return True, {"dims_checked": out}


def _complete_3_arcs(m):
    return [a for a in gq.iter_arcs(m, 3) if gq.extension_candidates(m, a) == 0]


def check_prop_3_5(ctx):
    """For t = 2: ``|R| = 2^4`` iff ``r_a r_b r_c = 1`` for every complete 3-arc."""
    arcs = _complete_3_arcs(ctx.model)
    rows = []
    for fq in ctx.faithful:
        all_trivial = all(fq.prod(a) == 0 for a in arcs)
        if (fq.dim == 4) != all_trivial:
            return False, {"dim": fq.dim}
        rows.append([fq.dim, all_trivial])
    return True, {"dim_vs_trivial": rows}


def check_cor_3_6(ctx):
    """For ``(t, |R|) = (2, 2^4)``: ``r_a r_b r_c = 1`` only for lines and complete 3-arcs."""
    g, m = ctx.g, ctx.model
    complete = set(_complete_3_arcs(m))
    n = 0
    for fq in ctx.faithful:
        if fq.dim != 4:
            continue
        for tri in combinations(range(g.num_points), 3):
            if fq.prod(tri) == 0 and tri not in complete and tri not in set(g.lines):
                return False, {"triple": list(tri)}
        n += 1
    return (n > 0), {"quotients": n}


def check_lemma_3_7(ctx):
    """A 3-arc with ``r_a r_b r_c`` in ``R_psi`` forces ``(t, |R|) = (2, 2^4)`` and an incomplete arc."""
    m = ctx.model
    hits = 0
    for fq, images in _quotient_rows(ctx):
        for arc in gq.iter_arcs(m, 3):
            if fq.prod(arc) in images:
                if (ctx.t, fq.dim) != (2, 4) or gq.extension_candidates(m, arc) == 0:
                    return False, {"dim": fq.dim, "arc": list(arc)}
                hits += 1
    return True, {"arcs_with_point_product": hits}


def check_lemma_3_8(ctx):
    """``|A cap B| = t + 2`` for ``A = {r_a r_x : x !~ a}``, ``B = {r_b r_x : x !~ b}``, ``a !~ b``."""
    g = ctx.g
    noncol = [[x for x in range(g.num_points) if x != a and not g.collinear(a, x)] for a in range(g.num_points)]
    for fq in ctx.faithful:
        for a, b in combinations(range(g.num_points), 2):
            if g.collinear(a, b):
                continue
            sa = {fq.reduce(fq.images[a] ^ fq.images[x]) for x in noncol[a]}
            sb = {fq.reduce(fq.images[b] ^ fq.images[x]) for x in noncol[b]}
            if len(sa & sb) != ctx.t + 2:
                return False, {"dim": fq.dim, "a": a, "b": b, "size": len(sa & sb)}
    return True, {"size": ctx.t + 2, "quotients": len(ctx.faithful)}


def check_prop_3_9(ctx):
    """Elements outside ``R_psi`` are ``r_y r_z`` (``y !~ z``), except one ``alpha`` when ``(t, |R|) = (2, 2^5)``."""
    g, m = ctx.g, ctx.model
    rows = []
    for fq, images in _quotient_rows(ctx):
        if (ctx.t, fq.dim) == (2, 4):
            continue
        elems = set(fq.elements(ctx.rs.dim_v))
        k = elems - images - {0}
        pair_products = {
            fq.reduce(fq.images[y] ^ fq.images[z])
            for y, z in combinations(range(g.num_points), 2)
            if not g.collinear(y, z)
        }
        rest = sorted(k - pair_products)
        if (ctx.t, fq.dim) == (2, 5):
            if len(rest) != 1:
                return False, {"dim": fq.dim, "unexpressed": rest}
            alpha = rest[0]
            for arc in _complete_3_arcs(m):
                if fq.prod(arc) != alpha:
                    return False, {"dim": fq.dim, "complete_arc": list(arc)}
        elif rest:
            return False, {"dim": fq.dim, "unexpressed": rest}
        rows.append([fq.dim, len(k), len(rest)])
    return True, {"dim_K_exceptions": rows}


# -- representations of near hexagons ---------------------------------------------------------------


def _pairs_by_distance(g):
    d = g.dist
    iu = np.triu_indices(g.num_points, 1)
    return iu[0], iu[1], d[iu]


def check_prop_4_1_commutation(ctx):
    """``[r_x, r_y] != 1`` iff ``d(x, y) = 3``, and then ``<r_x, r_y>`` is dihedral of order 8."""
    g = ctx.g
    xs, ys, ds = _pairs_by_distance(g)
    for label, gr in ctx.groups:
        for x, y, d in zip(xs.tolist(), ys.tolist(), ds.tolist()):
            c = gr.commutator(gr.r(x), gr.r(y))
            if (c != gr.identity) != (d == 3) or (c != gr.identity and c != gr.theta):
                return False, {"group": label, "x": x, "y": y}
            if d == 3 and gr.element_order(gr.mul(gr.r(x), gr.r(y))) != 4:
                return False, {"group": label, "x": x, "y": y, "reason": "product does not have order 4"}
    return True, {"pairs": len(xs), "groups": [lab for lab, _ in ctx.groups]}


def check_prop_4_1_exponent(ctx, samples: int = 2000):
    """Exponent 4, ``|R'| = 2`` and ``R' = Phi(R)`` central.

    Squares are ``(0, q(v))`` and commutators ``(0, beta)``, so ``Phi(R)`` and
    ``R'`` are both ``{1, theta}`` once ``q`` and ``beta`` are nonzero; the
    exponent is confirmed on a seeded sample of elements.
    """
    rng = random.Random(12345)
    for label, gr in ctx.groups:
        if not any(gr.beta_rows):
            return False, {"group": label, "reason": "abelian"}
        if not (gr.is_central(gr.theta) and gr.element_order(gr.theta) == 2):
            return False, {"group": label, "reason": "theta"}
        has4 = False
        for _ in range(samples):
            e = gr.random_element(rng)
            if gr.power(e, 4) != gr.identity:
                return False, {"group": label, "element": _elem(e)}
            sq = gr.mul(e, e)
            if sq not in (gr.identity, gr.theta):
                return False, {"group": label, "square": _elem(sq)}
            has4 |= sq == gr.theta
        if not has4:
            return False, {"group": label, "reason": "no element of order 4 sampled"}
    return True, {"samples": samples, "groups": [lab for lab, _ in ctx.groups]}


def check_prop_4_1_faithful(ctx):
    """``r_x`` is never central and distinct points have distinct images."""
    for label, gr in ctx.groups:
        seen = {}
        for x in range(ctx.g.num_points):
            r = gr.r(x)
            if gr.element_order(r) != 2:
                return False, {"group": label, "point": x, "reason": "not an involution"}
            if gr.is_central(r):
                return False, {"group": label, "central_point": x}
            if r in seen:
                return False, {"group": label, "points": [seen[r], x]}
            seen[r] = x
    return True, {}


def check_cor_4_2(ctx):
    """``|R| <= 2^{1 + dim V}``, attained by the canonical group."""
    rows = [[lab, gr.log2_order] for lab, gr in ctx.groups]
    ok = all(o <= 1 + ctx.rs.dim_v for _, o in rows) and rows[0][1] == 1 + ctx.rs.dim_v
    return ok, {"log2_orders": rows, "bound": 1 + ctx.rs.dim_v}


def check_prop_4_3(ctx):
    """``R = E o Z(R)`` with ``E`` extraspecial."""
    rows = []
    for label, gr in ctx.groups:
        cd = central_decomposition(gr)
        if not cd.ok:
            return False, {"group": label}
        rows.append([label, cd.e_log2_order, cd.z_log2_order])
    return True, {"E_Z_log2": rows}


def _m_q(gr, q):
    return abelian_span(gr, (gr.r(x) for x in q.points))


def _avoid_center(gr, elems):
    """Largest log2-order of a subgroup of the elementary abelian ``elems`` meeting ``Z(R)`` trivially."""
    vs = [e[0] for e in elems]
    rad = list(center(gr).radical_basis)
    r_all = rank_rows(vs + rad, gr.dim)
    return r_all - len(rad)


def check_cor_4_4(ctx):
    """Abelian ``M`` with ``M cap Z(R) = 1`` gives ``|R| >= 2^{2m+1}``; equality only when ``R`` is extraspecial."""
    rows = []
    for label, gr in ctx.groups:
        extraspecial = not center(gr).radical_basis
        best = 0
        for q in ctx.big_quads or ctx.quads:
            m = _avoid_center(gr, _m_q(gr, q))
            best = max(best, m)
            if 2 * m + 1 > gr.log2_order or (2 * m + 1 == gr.log2_order and not extraspecial):
                return False, {"group": label, "quad": list(q.points), "m": m}
        rows.append([label, best, gr.log2_order, extraspecial])
    return True, {"group_best_m_order_extraspecial": rows}


def check_lemma_4_5(ctx, points: int = 4, triples: int = 500):
    """``[r_x, prod_{y in Y} r_y] = 1`` iff ``|Y|`` even, for ``Y`` inside ``Gamma_3(x)``.

    Exhaustive for ``|Y| <= 2`` on a spread of sample points; ``|Y| = 3`` is
    sampled (seeded).
    """
    g = ctx.g
    rng = random.Random(4242)
    sample = sorted({(k * g.num_points) // points for k in range(points)})
    n = 0
    for label, gr in ctx.groups:
        for x in sample:
            far = np.flatnonzero(g.dist[x] == 3).tolist()
            subsets = [(y,) for y in far] + list(combinations(far, 2))
            subsets += [tuple(rng.sample(far, 3)) for _ in range(triples)] if len(far) >= 3 else []
            for ys in subsets:
                prod = gr.prod(gr.r(y) for y in ys)
                trivial = gr.commutator(gr.r(x), prod) == gr.identity
                if trivial != (len(ys) % 2 == 0):
                    return False, {"group": label, "x": x, "Y": list(ys)}
                n += 1
    return True, {"sample_points": sample, "subsets": n}


def _ovoidal(g, q: Quad) -> bool:
    pts = np.asarray(q.points)
    ext = np.setdiff1d(np.arange(g.num_points), pts)
    if not len(ext):
        return False
    sub = g.dist[np.ix_(ext, pts)]
    m = sub.min(axis=1)
    return bool(((sub == m[:, None]).sum(axis=1) > 1).any())


def check_prop_4_6(ctx):
    """``M_Q cap Z(R) != 1`` forces type (2,2), ``|M_Q| = 2^5`` and ``M_Q cap Z(R) = {1, r_a r_b r_c}`` for every complete 3-arc."""
    g = ctx.g
    hits = 0
    for label, gr in ctx.groups:
        z = center(gr)
        for q in ctx.quads:
            elems = _m_q(gr, q)
            inter = sorted(e for e in elems if z.contains(e))
            if len(inter) == 1:
                continue
            hits += 1
            if q.t2 != 2 or len(elems) != 32 or len(inter) != 2:
                return False, {"group": label, "quad": list(q.points), "order": len(elems), "center_part": [_elem(e) for e in inter]}
            alpha = inter[1]
            qm = set(q.points)
            for a, b, c in combinations(q.points, 3):
                if g.collinear(a, b) or g.collinear(a, c) or g.collinear(b, c):
                    continue
                complete = not any(
                    all(not g.collinear(p, w) for w in (a, b, c)) for p in qm if p not in (a, b, c)
                )
                if complete and gr.prod((gr.r(a), gr.r(b), gr.r(c))) != alpha:
                    return False, {"group": label, "quad": list(q.points), "arc": [a, b, c]}
    return True, {"quads_meeting_center": hits, "groups": [lab for lab, _ in ctx.groups]}


def check_cor_4_7(ctx):
    """Disjoint big quads of type other than (2,2) generate subgroups meeting trivially."""
    n = 0
    for label, gr in ctx.groups:
        for q1, q2 in ctx.disjoint_big_pairs:
            if q1.t2 == 2 or q2.t2 == 2:
                continue
            inter = _m_q(gr, q1) & _m_q(gr, q2)
            if inter != {gr.identity}:
                return False, {"group": label, "q1": list(q1.points), "q2": list(q2.points)}
            n += 1
    return True, {"pairs": n}


def check_prop_4_8(ctx):
    """A (2,2)-quad is ovoidal iff ``|M_Q| = 2^5`` and ``M_Q cap Z(R) = 1``."""
    g = ctx.g
    counts = {}
    for label, gr in ctx.groups:
        z = center(gr)
        for q in ctx.quads:
            if q.t2 != 2:
                continue
            elems = _m_q(gr, q)
            trivial = all(not z.contains(e) for e in elems if e != gr.identity)
            ovoidal = _ovoidal(g, q)
            if ovoidal != (len(elems) == 32 and trivial):
                return False, {"group": label, "quad": list(q.points), "ovoidal": ovoidal, "order": len(elems)}
            counts[ovoidal] = counts.get(ovoidal, 0) + 1
    return True, {"ovoidal": counts.get(True, 0), "classical": counts.get(False, 0)}


# -- lower bounds -------------------------------------------------------------------------------------------


def check_prop_5_1(ctx):
    """A good ``X`` gives ``|M| = 2^{|X|+1}``, ``M cap Z(R) = 1`` and ``|R| >= 2^{2|X|+3}``."""
    w = ctx.good_subset
    rows = []
    for label, gr in ctx.groups:
        gens = [gr.r(x) for x in w.X] + [gr.r(w.b)]
        elems = abelian_span(gr, gens)
        z = center(gr)
        if len(elems) != 1 << (w.size + 1) or any(z.contains(e) for e in elems if e != gr.identity):
            return False, {"group": label, "X": list(w.X), "order": len(elems)}
        if gr.log2_order < 2 * w.size + 3:
            return False, {"group": label, "bound": 2 * w.size + 3}
        rows.append([label, gr.log2_order])
    return True, {"X": list(w.X), "bound_log2": w.lower_bound_log2, "groups": rows}


def check_lemma_5_2(ctx):
    """For products ``prod_{k in B'} r_{x_k}`` landing in ``Z(R)``: ``|B'| >= 3`` and ``|B'|`` has the parity of every ``|A_{i,j}|``."""
    g = ctx.g
    a, b = ctx.distance_three_pair
    big_a = neighbour_set_A(g, a, b)
    quad_of_pair = {}
    for i, j in combinations(range(len(big_a)), 2):
        q = quad_of(g, big_a[i], big_a[j])
        quad_of_pair[i, j] = {k for k, x in enumerate(big_a) if x in q}
    n = 0
    for label, gr in ctx.groups:
        rad = list(center(gr).radical_basis)
        rows = [gr.r(x)[0] for x in big_a]
        # B' runs over the kernel of F2^A -> V / radical
        kernel = _kernel_mod(rows, rad, gr.dim)
        for mask in span_elements(kernel):
            if not mask:
                continue
            bprime = set(bits_of(mask))
            if len(bprime) < 3:
                return False, {"group": label, "B'": sorted(bprime)}
            for (i, j), members in quad_of_pair.items():
                if len(bprime) % 2 != len(bprime & members) % 2:
                    return False, {"group": label, "B'": sorted(bprime), "i": i, "j": j}
            n += 1
    return True, {"a": a, "b": b, "central_products": n}


def _kernel_mod(rows, rad, dim):
    """Coefficient vectors ``c`` with ``sum c_k rows[k]`` in the span of ``rad``."""
    basis, pivots = rref_rows(rad, dim)
    k = len(rows)
    reduced = []
    for r in rows:
        for row, p in zip(basis, pivots):
            if (r >> p) & 1:
                r ^= row
        reduced.append(r)
    cols = [sum(((reduced[i] >> bit) & 1) << i for i in range(k)) for bit in range(dim)]
    return nullspace_rows(cols, k)


_GOOD_SIZE_BY_ROW = {"i": 10, "ii": 11, "iii": 9, "iv": 9, "v": 9, "vi": 7}


def _table_row(ctx) -> str | None:
    g = ctx.g
    for row, p in catalog.TABLE.items():
        if p.num_points == g.num_points and p.t == ctx.t and p.dim_v == ctx.rs.dim_v and p.npdim == ctx.rs.npdim:
            return row
    return None


def _need_good_row(ctx):
    r = _need_hexagon(ctx)
    if r is not None:
        return r
    row = _table_row(ctx)
    return None if row in _GOOD_SIZE_BY_ROW else {"reason": "good-subset bound not used for this hexagon"}


def check_good_subset_sizes(ctx):
    """Largest good subset: 10 for (i), 11 for (ii), 9 for (iii)-(v), 7 for (vi)."""
    row = _table_row(ctx)
    w = ctx.good_subset
    want = _GOOD_SIZE_BY_ROW[row]
    out = {"row": row, "a": w.a, "b": w.b, "X": list(w.X), "size": w.size, "expected": want, "bound_log2": w.lower_bound_log2}
    return w.size == want, out


def _need_big_quad_row(ctx):
    r = _need_group(ctx)
    if r is not None:
        return r
    row = _table_row(ctx)
    return None if row in ("vii", "viii", "ix", "x", "xi") else {"reason": "big-quad bound applies to (vii)-(xi)"}


def check_big_quad_bound(ctx):
    """A big quad yields an elementary abelian subgroup of order ``2^{NPdim/2}`` avoiding ``Z(R)``."""
    rows = []
    for label, gr in ctx.groups:
        best = None
        for q in ctx.big_quads:
            elems = _m_q(gr, q)
            m = _avoid_center(gr, elems)
            z = center(gr)
            inter = sum(1 for e in elems if z.contains(e))
            want = {1: (16, 1), 4: (64, 1)}.get(q.t2)
            if want is not None and (len(elems), inter) != want:
                return False, {"group": label, "quad": list(q.points), "order": len(elems), "center_part": inter}
            if q.t2 == 2 and not (len(elems) == 16 and inter == 1 or len(elems) == 32 and inter == 2):
                return False, {"group": label, "quad": list(q.points), "order": len(elems), "center_part": inter}
            best = m if best is None else max(best, m)
        if 2 * best != ctx.rs.npdim:
            return False, {"group": label, "m": best, "npdim": ctx.rs.npdim}
        rows.append([label, best])
    return True, {"m": rows}


# -- the exceptional hexagon ----------------------------------------------------------------------------------


@dataclass
class _ViSetup:
    families: list[list[Quad]]
    q1: Quad
    q2: Quad
    q3: Quad
    y: list[int]
    q: Quad
    m_span: list[int]  # v-parts spanning M = <psi(Y)>
    n_basis: list[int]  # v-space of N = C_R(M)


def _vi_setup(ctx) -> _ViSetup | None:
    g = ctx.g
    big = [q for q in ctx.big_quads if q.t2 == 4]
    for q1, q2 in combinations(big, 2):
        if set(q1.points) & set(q2.points):
            continue
        y = subspace_closure(g, q1.points + q2.points)
        if len(y) == g.num_points:
            continue
        ys = set(y)
        q3 = glue_quads(g, q1, q2)
        rest = [q for q in big if not ys.intersection(q.points)]
        if not rest:
            continue
        families = _families(big)
        gr = ctx.group
        m_span = [gr.r(x)[0] for x in y]
        # N's v-space: vectors orthogonal to span(v_Y)
        perp_rows = []
        for v in m_span:
            r = 0
            for i in range(gr.dim):
                if gr.beta(v, 1 << i):
                    r |= 1 << i
            perp_rows.append(r)
        n_basis = nullspace_rows(perp_rows, gr.dim)
        return _ViSetup(families, q1, q2, q3, y, rest[0], m_span, n_basis)
    return None


def _families(big: list[Quad]) -> list[list[Quad]]:
    """Classes of the 'equal or disjoint' relation on big quads."""
    out: list[list[Quad]] = []
    for q in big:
        for fam in out:
            if all(not set(q.points) & set(p.points) for p in fam):
                fam.append(q)
                break
        else:
            out.append([q])
    return out


def check_sec_5_3_fischer(ctx):
    """18 big quads in two families of 9; each family partitions the points and is an affine plane of order 3."""
    g = ctx.g
    fams = ctx.vi_setup.families
    sizes = sorted(len(f) for f in fams)
    if len(ctx.big_quads) != 18 or sizes != [9, 9]:
        return False, {"big_quads": len(ctx.big_quads), "families": sizes}
    for fam in fams:
        cover = sorted(p for q in fam for p in q.points)
        if cover != list(range(g.num_points)):
            return False, {"family": [q.points[0] for q in fam], "reason": "not a partition"}
        idx = {q.points: i for i, q in enumerate(fam)}
        lines = set()
        for a, b in combinations(fam, 2):
            c = glue_quads(g, a, b)
            if c.points not in idx:
                return False, {"reason": "glued quad leaves the family"}
            lines.add(tuple(sorted((idx[a.points], idx[b.points], idx[c.points]))))
        pair_count = {}
        for ln in lines:
            for pr in combinations(ln, 2):
                pair_count[pr] = pair_count.get(pr, 0) + 1
        if len(lines) != 12 or len(pair_count) != 36 or set(pair_count.values()) != {1}:
            return False, {"reason": "not an affine plane of order 3", "lines": len(lines)}
    return True, {"families": sizes}


def check_sec_5_3_subspace(ctx):
    """``Y = Q1 u Q2 u Q1*Q2`` is a subspace isomorphic to GQ(2,4) x line (the hexagon (vii))."""
    g = ctx.g
    s = ctx.vi_setup
    y = set(s.y)
    if y != set(s.q1.points) | set(s.q2.points) | set(s.q3.points) or len(y) != 81:
        return False, {"reason": "Y is not the union of the three quads"}
    z12 = glue_map(g, s.q1, s.q2)
    # explicit isomorphism: (x, 0) -> x, (x, 1) -> z_x, (x, 2) -> x * z_x
    label = {}
    for x in s.q1.points:
        label[x] = (x, 0)
        label[z12[x]] = (x, 1)
        label[g.third_point(x, z12[x])] = (x, 2)
    q1_lines = {ln for ln in g.lines if set(ln) <= set(s.q1.points)}
    want = set()
    for ln in q1_lines:
        for level in range(3):
            want.add(frozenset((p, level) for p in ln))
    for x in s.q1.points:
        want.add(frozenset((x, level) for level in range(3)))
    have = {frozenset(label[p] for p in ln) for ln in g.lines if set(ln) <= y}
    ok = have == want and len(label) == 81
    return ok, {"lines_in_Y": len(have)}


def _m_parts(ctx, x, proj, z12, z21):
    gr = ctx.group
    x1, x2 = proj[x]
    m1 = gr.r(z21[x2])  # in M_1
    m2 = gr.r(z12[x1])  # in M_2
    return m1, m2


def _n_of(ctx, x, proj, z12, z21):
    gr = ctx.group
    m1, m2 = _m_parts(ctx, x, proj, z12, z21)
    return gr.mul(gr.inv(gr.mul(m1, m2)), gr.r(x))


def _in_n(ctx, e):
    gr = ctx.group
    return all(gr.beta(e[0], v) == 0 for v in ctx.vi_setup.m_span)


def check_prop_5_3(ctx):
    """``r_x = m_1 m_2 n_x`` with ``m_j = r_{z_{x^i}}``, ``n_x`` an involution of ``N = C_R(M)`` outside ``Z(R)``; ``r_x`` not in ``M``."""
    gr, s = ctx.group, ctx.vi_setup
    outside, proj, z12, z21 = _y_data(ctx, s.q1, s.q2, s.y)
    z = center(gr)
    m_dim = rank_rows(s.m_span, gr.dim)
    # V splits directly as span(v_Q1) + span(v_Q2) + N, so the m-parts are forced
    d1 = rank_rows([gr.r(p)[0] for p in s.q1.points], gr.dim)
    d2 = rank_rows([gr.r(p)[0] for p in s.q2.points], gr.dim)
    direct = rank_rows(s.m_span + s.n_basis, gr.dim) == gr.dim == m_dim + len(s.n_basis)
    if d1 + d2 != m_dim or not direct:
        return False, {"dims": [d1, d2, m_dim, len(s.n_basis)]}
    for x in outside:
        m1, m2 = _m_parts(ctx, x, proj, z12, z21)
        n = _n_of(ctx, x, proj, z12, z21)
        if not _in_n(ctx, n) or gr.mul(n, n) != gr.identity or z.contains(n) or n == gr.identity:
            return False, {"x": x, "n": _elem(n)}
        if rank_rows(s.m_span + [gr.r(x)[0]], gr.dim) == m_dim:
            return False, {"x": x, "reason": "r_x lies in M"}
    return True, {"points": len(outside), "dim_M": m_dim, "dim_N": len(s.n_basis)}


def _delta(ctx, q):
    s = ctx.vi_setup
    outside, proj, z12, z21 = _y_data(ctx, s.q1, s.q2, s.y)
    return {x: _n_of(ctx, x, proj, z12, z21) for x in q.points}


def check_prop_5_4(ctx):
    """On a big quad disjoint from ``Y``: ``[n_x, n_y] = 1`` iff ``x = y`` or ``x ~ y``; a unique line ``l_x`` has ``n_{x*y} = n_x n_y``."""
    g, gr, s = ctx.g, ctx.group, ctx.vi_setup
    ys = set(s.y)
    count = 0
    for q in ctx.big_quads:
        if ys.intersection(q.points):
            continue
        delta = _delta(ctx, q)
        for x, w in combinations(q.points, 2):
            c = gr.commutator(delta[x], delta[w])
            if (c == gr.identity) != g.collinear(x, w):
                return False, {"quad": list(q.points), "x": x, "y": w}
        inner = [ln for ln in g.lines if set(ln) <= set(q.points)]
        for x in q.points:
            good = []
            for ln in inner:
                if x not in ln:
                    continue
                w, v = [p for p in ln if p != x]
                prod = gr.mul(delta[x], delta[w])
                if delta[v] == prod:
                    good.append(ln)
                elif delta[v] != gr.mul(prod, gr.theta):
                    return False, {"quad": list(q.points), "line": list(ln)}
            if len(good) != 1:
                return False, {"quad": list(q.points), "x": x, "lines": [list(l) for l in good]}
        count += 1
    return True, {"quads": count}


def check_cor_5_5(ctx):
    """``delta`` is injective and the lines with ``delta(x*y) = delta(x)delta(y)`` form a spread."""
    g, gr, s = ctx.g, ctx.group, ctx.vi_setup
    delta = _delta(ctx, s.q)
    if len(set(delta.values())) != len(delta):
        return False, {"reason": "delta not injective"}
    inner = [ln for ln in g.lines if set(ln) <= set(s.q.points)]
    spread = [ln for ln in inner if delta[ln[2]] == gr.mul(delta[ln[0]], delta[ln[1]])]
    covered = sorted(p for ln in spread for p in ln)
    ok = covered == sorted(s.q.points)
    return ok, {"spread": [list(l) for l in spread]}


def check_sec_5_3_q8(ctx):
    """``N = H o K`` with ``K = C_N(H)`` quaternion of order 8, hence ``N`` of minus type."""
    g, gr, s = ctx.g, ctx.group, ctx.vi_setup
    delta = _delta(ctx, s.q)
    pts = s.q.points
    a1 = pts[0]
    a2 = next(p for p in pts if p != a1 and not g.collinear(a1, p))
    common = [p for p in pts if g.collinear(a1, p) and g.collinear(a2, p)]
    b1 = common[0]
    b2 = next(p for p in common if p != b1 and not g.collinear(b1, p))
    ws = [p for p in common if p not in (b1, b2)]
    h_basis = [delta[p][0] for p in (a1, a2, b1, b2)]
    n_span = s.n_basis
    # K = elements of N commuting with H
    rows = []
    for v in n_span:
        rows.append(sum(gr.beta(v, h) << i for i, h in enumerate(h_basis)))
    coeffs = nullspace_rows(_transpose(rows, len(h_basis)), len(n_span))
    k_vs = [sum_vec(n_span, c) for c in coeffs]
    k_elems = [(v, c) for v in span_elements(k_vs) for c in (0, 1)]
    orders = sorted(gr.element_order(e) for e in k_elems)
    q8 = orders == [1, 2, 4, 4, 4, 4, 4, 4]
    ks = [gr.mul(gr.inv(gr.mul(delta[b1], delta[b2])), delta[w]) for w in ws]
    ks_ok = (
        len(ws) == 3
        and all(gr.element_order(k) == 4 and (k[0] in set(span_elements(k_vs))) for k in ks)
        and all(gr.commutator(x, y) != gr.identity for x, y in combinations(ks, 2))
    )
    n_form = _restricted_form(gr, n_span)
    n_type = arf_type(n_form).value if n_form is not None else None
    ok = q8 and ks_ok and n_type == "minus" and len(n_span) == 6
    return ok, {"K_orders": orders, "k_i_distinct_order_4": ks_ok, "N_log2_order": len(n_span) + 1, "N_type": n_type,
                "quadrangle": [a1, a2, b1, b2]}


def _transpose(rows, ncols):
    return [sum(((r >> j) & 1) << i for i, r in enumerate(rows)) for j in range(ncols)]


def sum_vec(basis, coeff):
    v = 0
    for i in bits_of(coeff):
        v ^= basis[i]
    return v


def _restricted_form(gr, basis):
    k = len(basis)
    upper = []
    for i in range(k):
        r = gr.q(basis[i]) << i
        for j in range(i + 1, k):
            if gr.beta(basis[i], basis[j]):
                r |= 1 << j
        upper.append(r)
    q = QuadraticFormData(k, BitMatrix(tuple(upper), k))
    if rank_rows(q.polar.rows, k) != k:
        return None
    return q


def check_minimal_type(ctx):
    """The minimal quotient reaches ``2^{1+NPdim}``; its type is minus exactly for the hexagon (vi)."""
    mq = ctx.minimal
    row = _table_row(ctx)
    want = "minus" if row == "vi" else "plus"
    ok = mq.log2_order == 1 + ctx.rs.npdim and mq.type == want and mq.maximal
    return ok, {"log2_order": mq.log2_order, "type": mq.type, "expected": want, "row": row}


# -- registry ----------------------------------------------------------------------------------------------------


@dataclass(frozen=True)
class Check:
    id: str
    scope: Callable
    run: Callable
    summary: str


CHECKS: list[Check] = [
    Check("sy1_point_quad_dichotomy", _need_hexagon, check_dichotomy, "points are classical or ovoidal w.r.t. each quad"),
    Check("lemma_2_1_big_quad", _need_hexagon, check_lemma_2_1, "big-quad inequality with equality iff big"),
    Check("lemma_2_2_glue_isomorphism", _need_disjoint_big, check_lemma_2_2, "gluing disjoint big quads"),
    Check("prop_2_3_quadrangle", _need_proper_y, check_prop_2_3, "projections onto two big quads form a quadrangle"),
    Check("prop_2_4_line_transfer", _need_proper_y, check_prop_2_4, "line projections agree on both quads"),
    Check("cor_2_5_distance_pattern", _need_proper_y, check_cor_2_5, "distances between glued images"),
    Check("prop_2_6_distance_pattern", _need_proper_y, check_prop_2_6, "(2,3) or (3,2) on a disjoint big quad"),
    Check("gq_ovoid_spread_sizes", _need_gq, check_gq_ovoid_spread_sizes, "ovoids and spreads have 1+2t members"),
    Check("gq_grid_through_pairs", _need_gq, check_gq_grid_through_pairs, "non-collinear pairs lie in a grid"),
    Check("gq_subgq_extension", _need_gq, check_gq_subgq_extension, "subGQ plus a point doubles t"),
    Check("gq_min_generators", _need_gq, check_gq_min_generators, "minimum number of generating points"),
    Check("gq22_arc_facts", _need_t(2), check_gq22_arc_facts, "arcs and ovoids of GQ(2,2)"),
    Check("gq24_arc_facts", _need_t(4), check_gq24_arc_facts, "arcs of GQ(2,4)"),
    Check("prop_3_1_abelian", _need_gq, check_prop_3_1, "GQ representations are abelian"),
    Check("prop_3_2_orders", _need_gq, check_prop_3_2, "orders of faithful representations"),
    Check("prop_3_3_converse", _need_gq, check_prop_3_3, "r_x r_y a point image forces collinearity"),
    Check("cor_3_4_subgq_span", _need_t(4), check_cor_3_4, "(2,2)-subGQs of GQ(2,4) span 2^5"),
    Check("prop_3_5_triad", _need_t(2), check_prop_3_5, "|R| = 2^4 iff complete 3-arcs multiply to 1"),
    Check("cor_3_6_line_or_complete", _need_t(2), check_cor_3_6, "trivial triple products are lines or complete arcs"),
    Check("lemma_3_7_arc_product", _need_gq, check_lemma_3_7, "3-arc products that are point images"),
    Check("lemma_3_8_to_use", _need_gq, check_lemma_3_8, "|A cap B| = t+2"),
    Check("prop_3_9_expression", _need_gq, check_prop_3_9, "non-image elements are pair products"),
    Check("prop_4_1_commutation", _need_group, check_prop_4_1_commutation, "commutation iff distance at most 2"),
    Check("prop_4_1_exponent", _need_group, check_prop_4_1_exponent, "exponent 4 and |R'| = 2"),
    Check("prop_4_1_faithful", _need_group, check_prop_4_1_faithful, "point images are faithful and non-central"),
    Check("cor_4_2_upper_bound", _need_group, check_cor_4_2, "|R| <= 2^{1+dim V}"),
    Check("prop_4_3_central_product", _need_group, check_prop_4_3, "R = E o Z(R)"),
    Check("cor_4_4_lower_bound", _need_group, check_cor_4_4, "abelian subgroups avoiding the center bound |R|"),
    Check("lemma_4_5_parity", _need_group, check_lemma_4_5, "commutator with products from Gamma_3"),
    Check("prop_4_6_center_intersection", _need_group, check_prop_4_6, "quad subgroups meeting the center"),
    Check("cor_4_7_disjoint_big_quads", _need_group, check_cor_4_7, "disjoint big quads generate disjoint subgroups"),
    Check("prop_4_8_ovoidal", _need_group, check_prop_4_8, "ovoidal (2,2)-quads"),
    Check("prop_5_1_good_subset_bound", _need_group, check_prop_5_1, "good subsets bound |R|"),
    Check("lemma_5_2_necessary", _need_group, check_lemma_5_2, "necessary conditions on central products"),
    Check("sec_5_2_good_subsets", _need_good_row, check_good_subset_sizes, "good-subset sizes"),
    Check("sec_5_1_big_quad_bound", _need_big_quad_row, check_big_quad_bound, "big quads give the lower bound"),
    Check("minimal_quotient_type", _need_group, check_minimal_type, "extraspecial quotient and its type"),
    Check("sec_5_3_fischer_families", _need_vi, check_sec_5_3_fischer, "two families of nine big quads"),
    Check("sec_5_3_subspace_y", _need_vii_subspace, check_sec_5_3_subspace, "Y is the hexagon (vii)"),
    Check("prop_5_3_decomposition", _need_vii_subspace, check_prop_5_3, "r_x = m_1 m_2 n_x"),
    Check("prop_5_4_n_relations", _need_vii_subspace, check_prop_5_4, "relations among the n_x"),
    Check("cor_5_5_spread", _need_vii_subspace, check_cor_5_5, "delta injective with a spread"),
    Check("sec_5_3_q8", _need_vi, check_sec_5_3_q8, "K is quaternion, N is of minus type"),
]
CHECK_IDS = [c.id for c in CHECKS]
_BY_ID = {c.id: c for c in CHECKS}


def run_check(check_id: str, g: IncidenceGeometry, ctx: Context | None = None) -> Certificate:
    if check_id not in _BY_ID:
        raise KeyError(f"unknown check {check_id!r}")
    check = _BY_ID[check_id]
    ctx = ctx or Context(g)
    start = time.perf_counter()
    reason = check.scope(ctx)
    if reason is not None:
        status = Status(SKIPPED, reason)
    else:
        ok, witness = check.run(ctx)
        status = Status(PASS if ok else FAIL, witness)
    millis = int(round((time.perf_counter() - start) * 1000))
    return Certificate(check_id, g.name or "unnamed", status, millis)


def run_suite(g: IncidenceGeometry, ids=None) -> list[Certificate]:
    ctx = Context(g)
    return [run_check(i, g, ctx) for i in (ids or CHECK_IDS)]


def skipped_suite(name: str, reason: str, ids=None) -> list[Certificate]:
    return [Certificate(i, name, Status(SKIPPED, {"reason": reason})) for i in (ids or CHECK_IDS)]


def full_report(keys=None, budget_secs: float = 60.0, timings: bool = False) -> dict:
    """Every check on every catalog entry (the glued hexagon gets ``budget_secs``)."""
    certs = []
    for key in keys or catalog.CATALOG:
        entry = catalog.CATALOG[key]
        g = catalog.build(key, budget_secs=budget_secs) if entry.optional else catalog.build(key)
        if g is None:
            certs += skipped_suite(key, f"{key.removesuffix('_glued')} not constructed")
        else:
            certs += run_suite(g)
    return report_json(certs, timings)


def report_json(certs: list[Certificate], timings: bool = False) -> dict:
    counts = {PASS: 0, FAIL: 0, SKIPPED: 0}
    for c in certs:
        counts[c.status.kind] += 1
    return {"certificates": [c.to_json_dict(timings) for c in certs], "summary": counts}


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))
