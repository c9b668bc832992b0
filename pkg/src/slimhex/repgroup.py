"""Universal representation module, NPdim and cocycle models of representation groups.

A non-abelian representation group is modelled as ``F2^n x F2`` with product
``(v, c)(w, d) = (v + w, c + d + phi(v, w))`` for a bilinear cocycle
``phi(v, w) = v^T C w`` (``C`` upper-triangular).  Its commutator form is
``beta = C + C^T`` and squaring is ``(v, c)^2 = (0, q(v))`` with
``q(v) = phi(v, v)``.  Group elements are plain ``(v, c)`` int pairs.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable, Sequence

import numpy as np

from .errors import InconsistentSystem, NotDistanceThree, ParityViolation
from .f2linalg import (
    BitMatrix,
    PlusMinus,
    QuadraticFormData,
    arf_type,
    bilinear,
    bits_of,
    nullspace_rows,
    rank_rows,
    reduce_against,
    rref_rows,
    solve_rows,
    span_elements,
    symplectic_split,
)
from .geometry import IncidenceGeometry, Quad, distance_three_parity_violation

Element = tuple[int, int]


def _express(basis: Sequence[int], targets: Iterable[int]) -> list[int]:
    """Coefficients of each target in the (independent) ``basis``, as bitmasks over basis indices."""
    table = {}  # pivot -> (vector, tag)
    for i, b in enumerate(basis):
        tag = 1 << i
        while b:
            p = (b & -b).bit_length() - 1
            if p not in table:
                table[p] = (b, tag)
                break
            vb, vt = table[p]
            b ^= vb
            tag ^= vt
        else:
            raise ValueError("basis is dependent")
    out = []
    for t in targets:
        tag = 0
        while t:
            p = (t & -t).bit_length() - 1
            if p not in table:
                raise ValueError("target outside span")
            vb, vt = table[p]
            t ^= vb
            tag ^= vt
        out.append(tag)
    return out


class _Echelon:
    """Incremental independence test over F2."""

    def __init__(self, vectors: Iterable[int] = ()):
        self.rows: dict[int, int] = {}
        for v in vectors:
            self.add(v)

    def reduce(self, v: int) -> int:
        while v:
            p = (v & -v).bit_length() - 1
            r = self.rows.get(p)
            if r is None:
                return v
            v ^= r
        return 0

    def add(self, v: int) -> bool:
        v = self.reduce(v)
        if not v:
            return False
        self.rows[(v & -v).bit_length() - 1] = v
        return True

    def copy(self) -> "_Echelon":
        e = _Echelon()
        e.rows = dict(self.rows)
        return e

    def __len__(self) -> int:
        return len(self.rows)


# -- universal representation module -------------------------------------------------------


@dataclass(frozen=True, eq=False)
class RepSpace:
    """V(S) in coordinates where the ``basis_points`` map to the standard basis."""

    geometry: IncidenceGeometry
    dim_v: int
    coords: tuple[int, ...]
    basis_points: tuple[int, ...]

    @cached_property
    def a3_rows(self) -> list[int]:
        return _a3_rows(self.geometry)

    @cached_property
    def npdim(self) -> int:
        return np_dim(self.geometry)

    @cached_property
    def beta(self) -> BitMatrix:
        """Commutator form on V(S): ``beta(v_x, v_y) = 1`` iff ``d(x, y) = 3``."""
        g = self.geometry
        if g.diameter is not None and g.diameter >= 3:
            bad = distance_three_parity_violation(g)
            if bad is not None:
                w, line = bad
                raise ParityViolation(f"line {list(line)} has an odd number of points at distance 3 from {w}")
        a3 = self.a3_rows
        rows = []
        for bi in self.basis_points:
            r = 0
            for j, bj in enumerate(self.basis_points):
                if (a3[bi] >> bj) & 1:
                    r |= 1 << j
            rows.append(r)
        beta = BitMatrix(tuple(rows), self.dim_v)
        if rank_rows(beta.rows, self.dim_v) != self.npdim:
            raise ParityViolation("rank of the lifted form differs from NPdim")
        return beta

    @cached_property
    def radical(self) -> list[int]:
        return nullspace_rows(self.beta.rows, self.dim_v)

    def v(self, x: int) -> int:
        return self.coords[x]


def universal_module(g: IncidenceGeometry) -> RepSpace:
    """V(S) via the functionals that sum to zero on every line.

    Those functionals form the dual of V(S); evaluating a basis of them at a
    point gives coordinates for ``v_x``, which are then changed so that the
    greedy (ascending id) basis points become unit vectors.
    """
    cached = g._cache.get("repspace")
    if cached is not None:
        return cached
    n = g.num_points
    relations = [(1 << a) | (1 << b) | (1 << c) for a, b, c in g.lines]
    functionals = nullspace_rows(relations, n)
    d = len(functionals)
    raw = [0] * n
    for i, f in enumerate(functionals):
        for x in bits_of(f):
            raw[x] |= 1 << i
    ech = _Echelon()
    basis_points = []
    for x in range(n):
        if len(ech) == d:
            break
        if ech.add(raw[x]):
            basis_points.append(x)
    coords = _express([raw[b] for b in basis_points], raw)
    rs = RepSpace(g, d, tuple(coords), tuple(basis_points))
    g._cache["repspace"] = rs
    return rs


def _a3_rows(g: IncidenceGeometry) -> list[int]:
    cached = g._cache.get("a3")
    if cached is not None:
        return cached
    rows = []
    for x in range(g.num_points):
        r = 0
        for y in np.flatnonzero(g.dist[x] == 3):
            r |= 1 << int(y)
        rows.append(r)
    g._cache["a3"] = rows
    return rows


def np_dim(g: IncidenceGeometry) -> int:
    """F2-rank of the distance-3 indicator matrix."""
    cached = g._cache.get("npdim")
    if cached is None:
        cached = rank_rows(_a3_rows(g), g.num_points)
        g._cache["npdim"] = cached
    return cached


def beta_form(rs: RepSpace) -> BitMatrix:
    return rs.beta


# -- cocycle groups ----------------------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class CocycleGroup:
    """``F2^dim x F2`` twisted by ``phi(v, w) = v^T upper w``.

    With ``central=False`` the group is the elementary abelian ``F2^dim``
    (every element has ``c = 0``) and ``upper`` must be zero.
    """

    dim: int
    upper: tuple[int, ...]
    point_images: tuple[Element, ...]
    central: bool = True
    geometry: IncidenceGeometry | None = field(default=None, compare=False)

    identity: Element = (0, 0)
    theta: Element = (0, 1)

    def phi(self, v: int, w: int) -> int:
        return bilinear(self.upper, v, w)

    def q(self, v: int) -> int:
        return bilinear(self.upper, v, v)

    def beta(self, v: int, w: int) -> int:
        return bilinear(self.upper, v, w) ^ bilinear(self.upper, w, v)

    @cached_property
    def beta_rows(self) -> tuple[int, ...]:
        out = []
        for i in range(self.dim):
            r = 0
            for j in range(self.dim):
                if i != j and self.beta(1 << i, 1 << j):
                    r |= 1 << j
            out.append(r)
        return tuple(out)

    @cached_property
    def quadratic_form(self) -> QuadraticFormData:
        return QuadraticFormData(self.dim, BitMatrix(self.upper, self.dim))

    @property
    def log2_order(self) -> int:
        return self.dim + (1 if self.central else 0)

    @property
    def abelian(self) -> bool:
        return not any(self.beta_rows)

    def mul(self, g: Element, h: Element) -> Element:
        return (g[0] ^ h[0], g[1] ^ h[1] ^ self.phi(g[0], h[0]))

    def prod(self, elements: Iterable[Element]) -> Element:
        acc = self.identity
        for e in elements:
            acc = self.mul(acc, e)
        return acc

    def inv(self, g: Element) -> Element:
        return (g[0], g[1] ^ self.q(g[0]))

    def power(self, g: Element, k: int) -> Element:
        acc = self.identity
        for _ in range(k):
            acc = self.mul(acc, g)
        return acc

    def commutator(self, g: Element, h: Element) -> Element:
        """``g^-1 h^-1 g h``; always central, equal to ``(0, beta(v, w))``."""
        return self.mul(self.mul(self.inv(g), self.inv(h)), self.mul(g, h))

    def element_order(self, g: Element) -> int:
        k, acc = 1, g
        while acc != self.identity:
            acc = self.mul(acc, g)
            k += 1
        return k

    def is_central(self, g: Element) -> bool:
        return all(self.beta(g[0], 1 << i) == 0 for i in range(self.dim))

    def in_group(self, g: Element) -> bool:
        return 0 <= g[0] < (1 << self.dim) and (g[1] in (0, 1) if self.central else g[1] == 0)

    def random_element(self, rng) -> Element:
        return (rng.getrandbits(self.dim) if self.dim else 0, rng.getrandbits(1) if self.central else 0)

    def r(self, x: int) -> Element:
        return self.point_images[x]


def _lift_points(dim: int, upper: Sequence[int], vectors: Sequence[int], lines, pin: Sequence[int]) -> list[int]:
    """Central bits ``c_x`` making every line a Klein four group, with ``c = 0`` on ``pin``.

    Needs ``q(v_x) = 0`` for all points; equations are
    ``c_x + c_y + c_z = phi(v_x, v_y)`` for every line ``x < y < z``.
    """
    n = len(vectors)
    for x, v in enumerate(vectors):
        if bilinear(upper, v, v):
            raise InconsistentSystem(f"no non-abelian representation of this shape: r_{x} would have order 4")
    rows, rhs = [], 0
    for i, (x, y, z) in enumerate(lines):
        rows.append((1 << x) | (1 << y) | (1 << z))
        if bilinear(upper, vectors[x], vectors[y]):
            rhs |= 1 << i
    for p in pin:
        rows.append(1 << p)
    sol = solve_rows(rows, n, rhs)
    if sol is None:
        raise InconsistentSystem("no non-abelian representation of this shape: central-bit system is inconsistent")
    return [(sol >> x) & 1 for x in range(n)]


def build_representation(rs: RepSpace) -> CocycleGroup:
    """The canonical cocycle group realising V(S) with the distance-3 commutator form."""
    g = rs.geometry
    cached = g._cache.get("cocycle_group")
    if cached is not None:
        return cached
    beta = rs.beta.rows
    if not any(beta):
        gr = CocycleGroup(rs.dim_v, (0,) * rs.dim_v, tuple((v, 0) for v in rs.coords), central=False, geometry=g)
    else:
        # strictly upper half of beta; zero diagonal makes the basis points involutions
        upper = tuple(beta[i] & ~((1 << (i + 1)) - 1) for i in range(rs.dim_v))
        cbits = _lift_points(rs.dim_v, upper, rs.coords, g.lines, rs.basis_points)
        gr = CocycleGroup(rs.dim_v, upper, tuple(zip(rs.coords, cbits)), geometry=g)
    for line in g.lines:
        if gr.prod(gr.r(p) for p in line) != gr.identity:
            raise InconsistentSystem(f"line {list(line)} does not give a Klein four group")
    g._cache["cocycle_group"] = gr
    return gr


@dataclass(frozen=True)
class Obstruction:
    """Lines whose point sets cancel mod 2 but whose twisted product is the commutator ``theta``.

    Works in ``F2^P x F2`` with ``phi(e_x, e_y) = A3(x, y)`` for ``x < y``;
    every non-abelian representation is a quotient of it in which all
    line elements die, so such a witness forces ``theta = 1``.
    """

    lines: tuple[int, ...]

    def to_json_dict(self) -> dict:
        return {"lines": list(self.lines), "size": len(self.lines)}


def _point_cocycle(g: IncidenceGeometry) -> list[int]:
    a3 = _a3_rows(g)
    return [a3[x] & ~((1 << (x + 1)) - 1) for x in range(g.num_points)]


def twisted_line_product(g: IncidenceGeometry, line_ids: Iterable[int]) -> tuple[int, int]:
    """``(sum of point sets, central bit)`` of the ordered product of the line elements."""
    up = _point_cocycle(g)
    acc = bit = 0
    for li in line_ids:
        a, b, c = g.lines[li]
        lm = (1 << a) | (1 << b) | (1 << c)
        bit ^= bilinear(up, acc, lm)
        acc ^= lm
    return acc, bit


def representation_obstruction(g: IncidenceGeometry) -> Obstruction | None:
    """A lightest obstructing cycle among a basis of line cycles, or ``None`` if there is none.

    Needs the line-parity property (line elements are then central, so the
    central bit is linear on cycles and testing a basis decides existence).
    """
    if "obstruction" in g._cache:
        return g._cache["obstruction"]
    n = g.num_points
    cols = [0] * n
    for li, line in enumerate(g.lines):
        for p in line:
            cols[p] |= 1 << li
    found = None
    for lam in nullspace_rows(cols, len(g.lines)):
        ids = tuple(bits_of(lam))
        if twisted_line_product(g, ids)[1] and (found is None or len(ids) < len(found)):
            found = ids
    out = None if found is None else Obstruction(found)
    g._cache["obstruction"] = out
    return out


# -- structure of the group --------------------------------------------------------------------


@dataclass(frozen=True)
class CenterInfo:
    radical_basis: tuple[int, ...]
    log2_order: int

    def contains(self, g: Element) -> bool:
        return _Echelon(self.radical_basis).reduce(g[0]) == 0


def center(gr: CocycleGroup) -> CenterInfo:
    """``Z(R) = {(v, c) : v in radical(beta)}``."""
    rad, _ = rref_rows(nullspace_rows(gr.beta_rows, gr.dim), gr.dim)
    return CenterInfo(tuple(rad), len(rad) + (1 if gr.central else 0))


@dataclass(frozen=True)
class CentralDecomposition:
    hyperbolic_pairs: tuple[tuple[int, int], ...]
    radical_basis: tuple[int, ...]
    e_log2_order: int
    z_log2_order: int
    e_extraspecial: bool
    product_is_whole: bool
    intersection_is_derived: bool

    @property
    def ok(self) -> bool:
        return self.e_extraspecial and self.product_is_whole and self.intersection_is_derived


def central_decomposition(gr: CocycleGroup) -> CentralDecomposition:
    """``R = E o Z(R)`` with ``E`` the preimage of a non-degenerate complement of the radical."""
    pairs, _ = symplectic_split([1 << i for i in range(gr.dim)], gr.beta_rows)
    w = [v for pair in pairs for v in pair]
    zinfo = center(gr)
    restricted = [sum(gr.beta(a, b) << j for j, b in enumerate(w)) for a in w]
    e_nondeg = rank_rows(restricted, len(w)) == len(w)
    total = rank_rows(w + list(zinfo.radical_basis), gr.dim)
    return CentralDecomposition(
        tuple(pairs),
        zinfo.radical_basis,
        len(w) + 1,
        zinfo.log2_order,
        e_nondeg and len(w) > 0,
        total == gr.dim,
        total == len(w) + len(zinfo.radical_basis),
    )


def abelian_span(gr: CocycleGroup, gens: Iterable[Element]) -> set[Element]:
    """Subgroup generated by pairwise-commuting involutions (and central elements)."""
    gens = list(gens)
    for a, b in combinations(gens, 2):
        if gr.beta(a[0], b[0]):
            raise ValueError("generators do not commute")
    for a in gens:
        if gr.mul(a, a) != gr.identity:
            raise ValueError("generator is not an involution")
    elems = {gr.identity}
    for s in gens:
        if s in elems:
            continue
        elems |= {gr.mul(e, s) for e in elems}
    return elems


def generated_subgroup(gr: CocycleGroup, gens: Iterable[Element], limit: int = 1 << 12) -> set[Element]:
    gens = list(gens)
    elems = {gr.identity}
    frontier = [gr.identity]
    while frontier:
        nxt = []
        for e in frontier:
            for s in gens:
                h = gr.mul(e, s)
                if h not in elems:
                    elems.add(h)
                    nxt.append(h)
        if len(elems) > limit:
            raise ValueError("subgroup larger than limit")
        frontier = nxt
    return elems


@dataclass(frozen=True)
class QuotientReport:
    group: CocycleGroup
    kernel_basis: tuple[int, ...]  # U inside the radical of the original V
    log2_order: int
    radical_dim: int
    type: str  # "plus" | "minus" | "not_extraspecial"
    maximal: bool


def _quotient_group(gr: CocycleGroup, kernel: Sequence[int], geometry: IncidenceGeometry) -> CocycleGroup:
    basis, pivots = rref_rows(kernel, gr.dim)
    keep = [j for j in range(gr.dim) if j not in set(pivots)]
    pos = {j: k for k, j in enumerate(keep)}

    def project(v):
        v = reduce_against(v, basis, pivots)
        out = 0
        for j in bits_of(v):
            out |= 1 << pos[j]
        return out

    m = len(keep)
    upper = []
    for a, ja in enumerate(keep):
        r = gr.q(1 << ja) << a
        for b in range(a + 1, m):
            if gr.beta(1 << ja, 1 << keep[b]):
                r |= 1 << b
        upper.append(r)
    vectors = [project(v) for v, _ in gr.point_images]
    ech = _Echelon()
    pin = []
    for x, v in enumerate(vectors):
        if ech.add(v):
            pin.append(x)
    cbits = _lift_points(m, upper, vectors, geometry.lines, pin)
    return CocycleGroup(m, tuple(upper), tuple(zip(vectors, cbits)), geometry=geometry)


def minimal_quotient(gr: CocycleGroup) -> QuotientReport:
    """Quotient by a maximal totally singular subspace ``U`` of the radical.

    ``q`` is additive on the radical, so ``U`` is greedily built from the
    radical basis (pairing each non-singular vector with the first one);
    maximality is then confirmed by running through every radical vector.
    """
    if gr.abelian:
        raise ValueError("minimal_quotient needs a non-abelian group")
    geometry = gr.geometry
    rad = list(center(gr).radical_basis)
    u, first_bad = [], None
    for r in rad:
        if gr.q(r) == 0:
            u.append(r)
        elif first_bad is None:
            first_bad = r
        else:
            u.append(r ^ first_bad)
    span_u = _Echelon(u)
    maximal = True
    for mask in range(1, 1 << len(rad)):
        vec = 0
        for i in bits_of(mask):
            vec ^= rad[i]
        if span_u.reduce(vec) and gr.q(vec) == 0:
            maximal = False
            break
    if u:
        quotient = _quotient_group(gr, u, geometry)
    else:
        quotient = gr
    qrad = nullspace_rows(quotient.beta_rows, quotient.dim)
    if qrad:
        kind = "not_extraspecial"
    else:
        kind = arf_type(quotient.quadratic_form).value
    return QuotientReport(quotient, tuple(u), quotient.log2_order, len(qrad), kind, maximal)


def quad_subgroup(gr: CocycleGroup, q: Quad) -> tuple[int, list[Element]]:
    """``(|M_Q|, M_Q cap Z(R))`` for the subgroup generated by the quad's point images."""
    elems = abelian_span(gr, (gr.r(x) for x in q.points))
    z = center(gr)
    inter = sorted(e for e in elems if z.contains(e))
    return len(elems), inter


# -- good subsets --------------------------------------------------------------------------------


@dataclass(frozen=True)
class GoodSubsetWitness:
    a: int
    b: int
    A: tuple[int, ...]
    X: tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.X)

    @property
    def lower_bound_log2(self) -> int:
        return 2 * len(self.X) + 3

    def to_json_dict(self) -> dict:
        return {"a": self.a, "b": self.b, "X": list(self.X)}


def neighbour_set_A(g: IncidenceGeometry, a: int, b: int) -> tuple[int, ...]:
    """For each line through ``a`` (in line order) the point at distance 2 from ``b``."""
    if g.dist[a, b] != 3:
        raise NotDistanceThree(f"d({a},{b}) = {int(g.dist[a, b])}")
    out = []
    for li in g.lines_through[a]:
        hits = [p for p in g.lines[li] if g.dist[b, p] == 2]
        if len(hits) != 1:
            raise NotDistanceThree(f"line {list(g.lines[li])} has {len(hits)} points at distance 2 from {b}")
        out.append(hits[0])
    return tuple(out)


def is_good(rs: RepSpace, subset: Iterable[int]) -> bool:
    ech = _Echelon(rs.radical)
    return all(ech.add(rs.v(x)) for x in subset)


def good_subset_search(rs: RepSpace, a: int, b: int, radical: Sequence[int] | None = None) -> GoodSubsetWitness:
    """Largest good subset of ``A``: independent images whose span avoids the radical.

    Depth-first over ``A`` in line order, including before excluding, pruned
    when the remaining points cannot beat the best so far.  Stops early at
    ``NPdim/2 - 1``, the most any good subset can reach.
    """
    g = rs.geometry
    big_a = neighbour_set_A(g, a, b)
    rad = rs.radical if radical is None else radical
    bound = min(len(big_a), rs.npdim // 2 - 1)
    best: list[int] = []

    def rec(i, chosen, ech):
        nonlocal best
        if len(chosen) > len(best):
            best = list(chosen)
        if len(best) >= bound or i == len(big_a) or len(chosen) + len(big_a) - i <= len(best):
            return
        x = big_a[i]
        nxt = ech.copy()
        if nxt.add(rs.v(x)):
            rec(i + 1, chosen + [x], nxt)
        if len(best) < bound:
            rec(i + 1, chosen, ech)

    rec(0, [], _Echelon(rad))
    return GoodSubsetWitness(a, b, big_a, tuple(best))


def default_pair(g: IncidenceGeometry) -> tuple[int, int]:
    hits = np.flatnonzero(g.dist[0] == 3)
    if not len(hits):
        raise NotDistanceThree("no point at distance 3 from point 0")
    return 0, int(hits[0])


# -- faithful quotients of V(S) (used for GQs) ---------------------------------------------------------


@dataclass(frozen=True)
class FaithfulQuotient:
    """``V(S)/U``; elements are canonical coset representatives inside V(S)."""

    dim: int
    kernel_basis: tuple[int, ...]
    pivots: tuple[int, ...]
    images: tuple[int, ...]

    @property
    def log2_order(self) -> int:
        return self.dim

    def reduce(self, v: int) -> int:
        return reduce_against(v, self.kernel_basis, self.pivots)

    def prod(self, points: Iterable[int]) -> int:
        acc = 0
        for x in points:
            acc ^= self.images[x]
        return self.reduce(acc)

    def elements(self, ambient_dim: int) -> list[int]:
        return sorted({self.reduce(v) for v in range(1 << ambient_dim)})


def faithful_quotients(rs: RepSpace) -> list[FaithfulQuotient]:
    """Every quotient ``V(S)/U`` in which distinct points keep distinct nonzero images.

    ``U`` must avoid every ``v_x`` and ``v_x + v_y``; that property passes to
    subspaces, so the candidates are grown one dimension at a time.
    """
    forbidden = set(rs.coords)
    for x, y in combinations(range(len(rs.coords)), 2):
        forbidden.add(rs.coords[x] ^ rs.coords[y])
    dim = rs.dim_v
    seen = {()}
    frontier: list[tuple[int, ...]] = [()]
    out = []
    while frontier:
        nxt = []
        for basis in frontier:
            span = span_elements(basis)
            rbasis, pivots = rref_rows(list(basis), dim)
            images = tuple(reduce_against(v, rbasis, pivots) for v in rs.coords)
            out.append(FaithfulQuotient(dim - len(basis), tuple(rbasis), tuple(pivots), images))
            members = set(span)
            for v in range(1, 1 << dim):
                if v in members or any((s ^ v) in forbidden for s in span):
                    continue
                key = tuple(rref_rows(list(basis) + [v], dim)[0])
                if key not in seen:
                    seen.add(key)
                    nxt.append(key)
        frontier = sorted(nxt)
    return out


# -- reporting -------------------------------------------------------------------------------------


def group_report(g: IncidenceGeometry) -> dict:
    """Report JSON; group fields are ``None`` (with an ``obstruction``) when no non-abelian representation exists."""
    rs = universal_module(g)
    out = {"dim_v": rs.dim_v, "npdim": rs.npdim}
    if not any(rs.beta.rows):
        gr = build_representation(rs)
        out.update({"group_order_log2": gr.log2_order, "minimal_order_log2": gr.log2_order,
                    "type": "not_extraspecial", "good_subset": None})
        return out
    try:
        gr = build_representation(rs)
    except InconsistentSystem:
        ob = representation_obstruction(g)
        out.update({"group_order_log2": None, "minimal_order_log2": None, "type": None,
                    "obstruction": None if ob is None else ob.to_json_dict()})
    else:
        mq = minimal_quotient(gr)
        out.update({"group_order_log2": gr.log2_order, "minimal_order_log2": mq.log2_order, "type": mq.type})
    a, b = default_pair(g)
    out["good_subset"] = good_subset_search(rs, a, b).to_json_dict()
    return out


__all__ = [
    "CocycleGroup",
    "GoodSubsetWitness",
    "PlusMinus",
    "RepSpace",
    "abelian_span",
    "beta_form",
    "build_representation",
    "center",
    "central_decomposition",
    "faithful_quotients",
    "generated_subgroup",
    "good_subset_search",
    "group_report",
    "minimal_quotient",
    "np_dim",
    "representation_obstruction",
    "twisted_line_product",
    "quad_subgroup",
    "universal_module",
]
