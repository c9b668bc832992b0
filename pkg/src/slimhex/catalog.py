"""Built-in near hexagons and GQs, their expected parameters, and geometry file I/O."""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from itertools import combinations, product
from pathlib import Path
from typing import Callable

from . import gq
from .errors import GeometryError, InternalError, ParseError, ValidationError
from .geometry import (
    IncidenceGeometry,
    build_geometry,
    is_near_2n_gon,
    quad_type_counts,
    quad_type_set,
    quads_through,
    uniform_line_count,
)


@dataclass(frozen=True)
class ExpectedParams:
    num_points: int
    t: int
    t2_set: frozenset | None  # {(t2, big)}; None for GQs
    dim_v: int
    npdim: int
    a1: int | None = None
    a2: int | None = None
    a4: int | None = None

    def to_json_dict(self) -> dict:
        return {
            "num_points": self.num_points,
            "t": self.t,
            "t2_set": None if self.t2_set is None else [list(p) for p in sorted(self.t2_set)],
            "dim_v": self.dim_v,
            "npdim": self.npdim,
            "a1": self.a1,
            "a2": self.a2,
            "a4": self.a4,
        }


def _row(n, t, t2, dim_v, npdim, a1=None, a2=None, a4=None):
    return ExpectedParams(n, t, frozenset(t2), dim_v, npdim, a1, a2, a4)


# Classification table of the slim dense near hexagons, star = big.
TABLE: dict[str, ExpectedParams] = {
    "i": _row(759, 14, {(2, False)}, 23, 22, a2=35),
    "ii": _row(729, 11, {(1, False)}, 24, 24, a1=66),
    "iii": _row(891, 20, {(4, True)}, 22, 20, a4=21),
    "iv": _row(567, 14, {(2, False), (4, True)}, 21, 20, a2=15, a4=6),
    "v": _row(405, 11, {(1, False), (2, False), (4, True)}, 20, 20, a1=9, a2=9, a4=3),
    "vi": _row(243, 8, {(1, False), (4, True)}, 18, 18, a1=16, a4=2),
    "vii": _row(81, 5, {(1, False), (4, True)}, 12, 12, a1=5, a4=1),
    "viii": _row(135, 6, {(2, True)}, 15, 8, a2=7),
    "ix": _row(105, 5, {(1, False), (2, True)}, 14, 8, a1=3, a2=4),
    "x": _row(45, 3, {(1, False), (2, True)}, 10, 8, a1=3, a2=1),
    "xi": _row(27, 2, {(1, True)}, 8, 8, a1=3),
}

GQ_EXPECTED: dict[str, ExpectedParams] = {
    "gq21": ExpectedParams(9, 1, None, 4, 0),
    "gq22": ExpectedParams(15, 2, None, 5, 0),
    "gq24": ExpectedParams(27, 4, None, 6, 0),
}

INGEST_ONLY_ROWS = ("iii", "iv", "v", "ix")


# -- constructions ---------------------------------------------------------------------


def product_with_line(g: IncidenceGeometry, name: str | None = None) -> IncidenceGeometry:
    """``g x L3``: point ``(x, c)`` has id ``3x + c``."""
    lines = [(3 * x, 3 * x + 1, 3 * x + 2) for x in range(g.num_points)]
    for a, b, c in g.lines:
        for k in range(3):
            lines.append((3 * a + k, 3 * b + k, 3 * c + k))
    return build_geometry(3 * g.num_points, lines, name=name)


# generator [I | B] of the extended binary Golay code
_GOLAY_B = [
    0b110111000101, 0b101110001011, 0b011100010111, 0b111000101101,
    0b110001011011, 0b100010110111, 0b000101101111, 0b001011011101,
    0b010110111001, 0b101101110001, 0b011011100011, 0b111111111110,
]


def binary_golay_codewords() -> list[int]:
    gens = [(1 << (23 - i)) | _GOLAY_B[i] for i in range(12)]
    words = [0]
    for gword in gens:
        words += [w ^ gword for w in words]
    return words


def octad_hexagon() -> IncidenceGeometry:
    octads = sorted(w for w in binary_golay_codewords() if bin(w).count("1") == 8)
    if len(octads) != 759:
        raise InternalError(f"Golay generator produced {len(octads)} octads, expected 759")
    index = {w: i for i, w in enumerate(octads)}
    full = (1 << 24) - 1
    lines = set()
    for i, a in enumerate(octads):
        for b in octads[i + 1:]:
            if a & b:
                continue
            c = full ^ a ^ b
            lines.add(tuple(sorted((i, index[b], index[c]))))
    return build_geometry(759, lines, name="hex_i")


_TERNARY_B = [
    [0, 1, 1, 1, 1, 1],
    [1, 0, 1, 2, 2, 1],
    [1, 1, 0, 1, 2, 2],
    [1, 2, 1, 0, 1, 2],
    [1, 2, 2, 1, 0, 1],
    [1, 1, 2, 2, 1, 0],
]


def ternary_golay_codewords() -> list[tuple[int, ...]]:
    gens = [tuple([int(i == j) for j in range(6)] + _TERNARY_B[i]) for i in range(6)]
    out = []
    for coeffs in product(range(3), repeat=6):
        out.append(tuple(sum(c * g[k] for c, g in zip(coeffs, gens)) % 3 for k in range(12)))
    return out


def ternary_golay_coset_hexagon() -> IncidenceGeometry:
    """Cosets of the extended ternary Golay code, labelled by syndrome.

    Parity check ``H = [-B^T | I]``; coset ``v + C`` has id = syndrome ``H v``
    read as a base-3 number.  Line ``{v, v + e_i, v + 2 e_i}`` becomes
    ``{s, s + h_i, s + 2 h_i}`` with ``h_i`` column i of H.
    """
    cols = []
    for i in range(12):
        if i < 6:
            cols.append(tuple((-_TERNARY_B[i][r]) % 3 for r in range(6)))
        else:
            cols.append(tuple(int(r == i - 6) for r in range(6)))
    weights = [sum(1 for x in w if x) for w in ternary_golay_codewords()]
    if min(w for w in weights if w) != 6:
        raise InternalError("ternary generator does not give minimum distance 6")

    def sid(s):
        return sum(x * 3 ** k for k, x in enumerate(s))

    syndromes = list(product(range(3), repeat=6))
    if len({sid(s) for s in syndromes}) != 729:
        raise InternalError("coset count is not 729")
    lines = set()
    for s in syndromes:
        for h in cols:
            s1 = tuple((a + b) % 3 for a, b in zip(s, h))
            s2 = tuple((a + 2 * b) % 3 for a, b in zip(s, h))
            lines.add(tuple(sorted((sid(s), sid(s1), sid(s2)))))
    return build_geometry(729, lines, name="hex_ii")


def _symp(u: int, v: int) -> int:
    # pairs (0,3), (1,4), (2,5)
    x = (u & 0b111) & (v >> 3) ^ (u >> 3) & (v & 0b111)
    return bin(x).count("1") & 1


def _span(vs) -> frozenset:
    out = {0}
    for v in vs:
        out |= {x ^ v for x in out}
    return frozenset(out - {0})


def dq62_hexagon() -> IncidenceGeometry:
    """Maximal totally isotropic subspaces of symplectic F2^6; lines are the isotropic 2-spaces."""
    vecs = range(1, 64)
    planes = set()
    tlines = set()
    for u, v in combinations(vecs, 2):
        if _symp(u, v):
            continue
        tlines.add(_span((u, v)))
    for ln in tlines:
        base = sorted(ln)[:2]
        for w in vecs:
            if w in ln:
                continue
            if _symp(w, base[0]) or _symp(w, base[1]):
                continue
            planes.add(_span((*base, w)))
    planes = sorted(planes, key=lambda p: tuple(sorted(p)))
    if len(planes) != 135 or len(tlines) != 315:
        raise InternalError(f"got {len(planes)} planes and {len(tlines)} isotropic lines")
    lines = []
    for ln in tlines:
        on = [i for i, p in enumerate(planes) if ln <= p]
        if len(on) != 3:
            raise InternalError("isotropic line not in exactly three planes")
        lines.append(on)
    return build_geometry(135, lines, name="hex_viii")


def _spread_symmetries(m: gq.GqModel):
    """Yield ``(spread, perm)``: ``perm`` an automorphism of order 3 cycling every spread line."""
    g = m.geometry
    line_set = set(g.lines)
    for spread in gq.spreads(m):
        slines = [g.lines[i] for i in spread]
        for orient in range(1 << (len(slines) - 1)):
            perm = [0] * g.num_points
            for k, (a, b, c) in enumerate(slines):
                if k and (orient >> (k - 1)) & 1:
                    perm[a], perm[c], perm[b] = c, b, a
                else:
                    perm[a], perm[b], perm[c] = b, c, a
            if all(tuple(sorted(perm[p] for p in ln)) in line_set for ln in g.lines):
                yield spread, perm


def _glue(m: gq.GqModel, perm1, perm2) -> IncidenceGeometry | None:
    n = m.geometry.num_points
    orbit_id = {}
    reps = []
    for x1 in range(n):
        for x2 in range(n):
            if (x1, x2) in orbit_id:
                continue
            k = len(reps)
            reps.append((x1, x2))
            a, b = x1, x2
            for _ in range(3):
                orbit_id[a, b] = k
                a, b = perm1[a], perm2[b]
    lines = set()
    for ln in m.geometry.lines:
        for other in range(n):
            lines.add(tuple(sorted(orbit_id[p, other] for p in ln)))
            lines.add(tuple(sorted(orbit_id[other, p] for p in ln)))
    try:
        return build_geometry(len(reps), lines, name="hex_vi_glued")
    except GeometryError:
        return None


def glued_hexagon_vi(budget_secs: float = 30.0) -> IncidenceGeometry | None:
    """Glue two copies of GQ(2,4) along a spread of symmetry; ``None`` if nothing validates in time.

    Each candidate is the quotient of GQ(2,4) x GQ(2,4) by a diagonal
    order-3 group cycling the lines of a spread in both factors.  Candidates
    are accepted only if they are near hexagons with the row-(vi) parameters.
    """
    deadline = time.monotonic() + budget_secs
    m = gq.q24_gq()
    expected = TABLE["vi"]
    for _, perm in _spread_symmetries(m):
        inverse = [0] * len(perm)
        for x, y in enumerate(perm):
            inverse[y] = x
        for second in (perm, inverse):
            if time.monotonic() > deadline:
                return None
            cand = _glue(m, perm, second)
            if cand is None or cand.num_points != expected.num_points:
                continue
            if uniform_line_count(cand) != expected.t + 1 or not is_near_2n_gon(cand, 3):
                continue
            if quad_type_set(cand) == set(expected.t2_set):
                return cand
        if time.monotonic() > deadline:
            return None
    return None


# -- catalog -------------------------------------------------------------------------


@dataclass(frozen=True)
class CatalogEntry:
    key: str
    expected: ExpectedParams
    generator: Callable[..., IncidenceGeometry | None]
    n: int  # diameter: 2 for GQs, 3 for hexagons
    optional: bool = False


def _gq_geometry(factory):
    return lambda: factory().geometry


CATALOG: dict[str, CatalogEntry] = {
    "gq21": CatalogEntry("gq21", GQ_EXPECTED["gq21"], _gq_geometry(gq.grid_gq), 2),
    "gq22": CatalogEntry("gq22", GQ_EXPECTED["gq22"], _gq_geometry(gq.duad_factor_gq), 2),
    "gq24": CatalogEntry("gq24", GQ_EXPECTED["gq24"], _gq_geometry(gq.q24_gq), 2),
    "hex_xi": CatalogEntry("hex_xi", TABLE["xi"], lambda: product_with_line(gq.grid_gq().geometry, "hex_xi"), 3),
    "hex_x": CatalogEntry("hex_x", TABLE["x"], lambda: product_with_line(gq.duad_factor_gq().geometry, "hex_x"), 3),
    "hex_vii": CatalogEntry("hex_vii", TABLE["vii"], lambda: product_with_line(gq.q24_gq().geometry, "hex_vii"), 3),
    "hex_viii": CatalogEntry("hex_viii", TABLE["viii"], dq62_hexagon, 3),
    "hex_ii": CatalogEntry("hex_ii", TABLE["ii"], ternary_golay_coset_hexagon, 3),
    "hex_i": CatalogEntry("hex_i", TABLE["i"], octad_hexagon, 3),
    "hex_vi_glued": CatalogEntry("hex_vi_glued", TABLE["vi"], glued_hexagon_vi, 3, optional=True),
}

HEXAGON_KEYS = ("hex_i", "hex_ii", "hex_vii", "hex_viii", "hex_x", "hex_xi")
GQ_KEYS = ("gq21", "gq22", "gq24")

_built: dict[str, IncidenceGeometry | None] = {}


def build(key: str, **kwargs) -> IncidenceGeometry | None:
    """Generate (and memoise) a catalog geometry; optional entries may return ``None``."""
    if key not in CATALOG:
        raise KeyError(f"unknown catalog key {key!r}; choose from {', '.join(CATALOG)}")
    if key not in _built:
        g = CATALOG[key].generator(**kwargs)
        if g is not None and g.name != key:
            g = IncidenceGeometry(g.num_points, g.lines, key)
        if g is None:
            return None  # absence is not cached: a later call may get a larger budget
        _built[key] = g
    return _built[key]


def expected_for(key_or_row: str) -> ExpectedParams:
    if key_or_row in CATALOG:
        return CATALOG[key_or_row].expected
    row = key_or_row.removeprefix("hex_")
    if row in TABLE:
        return TABLE[row]
    raise KeyError(f"no expected parameters for {key_or_row!r}")


def table_json() -> dict:
    return {row: p.to_json_dict() for row, p in TABLE.items()}


# -- I/O -------------------------------------------------------------------------------


def to_json(g: IncidenceGeometry) -> str:
    return json.dumps(g.to_json_dict(), separators=(",", ":"))


def save(g: IncidenceGeometry, path) -> None:
    Path(path).write_text(to_json(g) + "\n")


def from_json_dict(data) -> IncidenceGeometry:
    if not isinstance(data, dict) or "num_points" not in data or "lines" not in data:
        raise ParseError("geometry JSON needs 'num_points' and 'lines'")
    n = data["num_points"]
    lines = data["lines"]
    name = data.get("name")
    if not isinstance(n, int) or isinstance(n, bool) or not isinstance(lines, list):
        raise ParseError("'num_points' must be an integer and 'lines' a list")
    if name is not None and not isinstance(name, str):
        raise ParseError("'name' must be a string")
    triples = []
    for ln in lines:
        if not isinstance(ln, list) or not all(isinstance(p, int) and not isinstance(p, bool) for p in ln):
            raise ParseError(f"line {ln!r} is not a list of integers")
        if ln != sorted(ln):
            raise ValidationError(f"line {ln} is not a sorted triple")
        triples.append(tuple(ln))
    if triples != sorted(triples) or len(set(triples)) != len(triples):
        raise ValidationError("line list must be sorted without duplicates")
    try:
        g = build_geometry(n, triples, name=name)
    except GeometryError as exc:
        raise ValidationError(str(exc)) from exc
    return g


def load(path) -> IncidenceGeometry:
    try:
        data = json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: {exc}") from exc
    return from_json_dict(data)


# -- parameter verification -------------------------------------------------------------


def measure_params(g: IncidenceGeometry) -> dict:
    from .repgroup import np_dim, universal_module

    lc = uniform_line_count(g)
    out = {"num_points": g.num_points, "t": None if lc is None else lc - 1}
    diameter = g.diameter
    if diameter == 3:
        out["t2_set"] = [list(p) for p in sorted(quad_type_set(g))]
        per_point = {}
        for x in range(g.num_points):
            per_point.setdefault(tuple(sorted(quad_type_counts(g, x).items())), x)
        if len(per_point) == 1:
            counts = dict(next(iter(per_point)))
            for r in (1, 2, 4):
                out[f"a{r}"] = counts.get(r)
        else:
            for r in (1, 2, 4):
                out[f"a{r}"] = "non-uniform"
    else:
        out["t2_set"] = None
        for r in (1, 2, 4):
            out[f"a{r}"] = None
    out["dim_v"] = universal_module(g).dim_v
    out["npdim"] = np_dim(g) if diameter == 3 else 0
    return out


def verify_params(g: IncidenceGeometry, expected: ExpectedParams) -> dict:
    """Measured vs expected, one entry per field, plus an overall ``ok`` flag."""
    measured = measure_params(g)
    want = expected.to_json_dict()
    fields = {}
    for k in ("num_points", "t", "t2_set", "dim_v", "npdim", "a1", "a2", "a4"):
        fields[k] = {"expected": want[k], "measured": measured[k], "pass": want[k] == measured[k]}
    return {"fields": fields, "ok": all(f["pass"] for f in fields.values())}
