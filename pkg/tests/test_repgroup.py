import random
from itertools import combinations

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import gf2_rank, np_dim_dense, universal_dim
from slimhex import catalog, gq
from slimhex.errors import InconsistentSystem
from slimhex.f2linalg import rank_rows
from slimhex.geometry import quads
from slimhex.repgroup import (
    abelian_span,
    build_representation,
    center,
    central_decomposition,
    faithful_quotients,
    good_subset_search,
    group_report,
    minimal_quotient,
    neighbour_set_A,
    quad_subgroup,
    representation_obstruction,
    twisted_line_product,
    universal_module,
)

# (dim V, NPdim, log2 |R|, log2 |minimal quotient|, type, good-subset size)
FROZEN = {
    "hex_xi": (8, 8, 9, 9, "plus", 3),
    "hex_x": (10, 8, 11, 9, "plus", 3),
    "hex_vii": (12, 12, 13, 13, "plus", 5),
    "hex_viii": (15, 8, 16, 9, "plus", 3),
    "hex_ii": (24, 24, 25, 25, "plus", 11),
    "hex_vi_glued": (18, 18, 19, 19, "minus", 7),
}
SMALL = ["hex_xi", "hex_x", "hex_vii", "hex_viii"]


def _get(geometry, key):
    g = geometry(key)
    if g is None:
        pytest.skip(f"{key} not constructed")
    return g


@pytest.mark.parametrize("key", list(catalog.CATALOG))
def test_dimensions_match_dense_oracle(geometry, key):
    g = _get(geometry, key)
    rs = universal_module(g)
    assert rs.dim_v == universal_dim(g.num_points, g.lines)
    if g.diameter == 3:
        assert rs.npdim == np_dim_dense(np.asarray(g.dist))


@pytest.mark.parametrize("key", list(FROZEN))
def test_frozen_group_values(geometry, key):
    g = _get(geometry, key)
    dim_v, npdim, order, minimal, kind, good = FROZEN[key]
    rep = group_report(g)
    assert (rep["dim_v"], rep["npdim"]) == (dim_v, npdim)
    assert (rep["group_order_log2"], rep["minimal_order_log2"], rep["type"]) == (order, minimal, kind)
    assert len(rep["good_subset"]["X"]) == good


@pytest.mark.parametrize("key", SMALL)
def test_group_axioms_exhaustive_on_points(geometry, key):
    g = geometry(key)
    gr = build_representation(universal_module(g))
    assert not gr.abelian
    imgs = [gr.r(x) for x in range(g.num_points)]
    assert len(set(imgs)) == g.num_points and gr.identity not in imgs
    for x in range(g.num_points):
        assert gr.mul(imgs[x], imgs[x]) == gr.identity
    for a, b, c in g.lines:
        assert gr.mul(imgs[a], imgs[b]) == imgs[c]
    d = np.asarray(g.dist)
    for x, y in combinations(range(g.num_points), 2):
        comm = gr.commutator(imgs[x], imgs[y])
        assert comm == (gr.theta if d[x, y] == 3 else gr.identity)


@settings(max_examples=300, deadline=None)
@given(st.sampled_from(SMALL), st.integers(0, 2**32))
def test_group_law_properties(geometry, key, seed):
    gr = build_representation(universal_module(geometry(key)))
    rng = random.Random(seed)
    a, b, c = (gr.random_element(rng) for _ in range(3))
    assert gr.mul(gr.mul(a, b), c) == gr.mul(a, gr.mul(b, c))
    assert gr.mul(a, gr.inv(a)) == gr.identity
    assert gr.commutator(a, b) == (0, gr.beta(a[0], b[0]))
    assert gr.power(a, 4) == gr.identity
    assert gr.element_order(a) in (1, 2, 4)


@pytest.mark.parametrize("key", SMALL + ["hex_vi_glued"])
def test_minimal_quotient_is_extraspecial(geometry, key):
    g = _get(geometry, key)
    rs = universal_module(g)
    gr = build_representation(rs)
    mq = minimal_quotient(gr)
    assert mq.maximal and mq.radical_dim == 0
    assert mq.log2_order == 1 + rs.npdim
    z = center(mq.group)
    assert z.log2_order == 1
    dec = central_decomposition(gr)
    assert dec.ok and dec.e_log2_order == 1 + rs.npdim


def test_faithful_quotient_dimensions(geometry):
    dims = {k: sorted({q.dim for q in faithful_quotients(universal_module(geometry(k)))}) for k in catalog.GQ_KEYS}
    assert dims == {"gq21": [4], "gq22": [4, 5], "gq24": [6]}


def test_gq22_has_one_faithful_quotient_of_order_16(geometry):
    # of the 31 nonzero vectors of V, 15 are point images and 15 are sums of two
    # non-collinear points; the remaining one spans the only admissible kernel
    rs = universal_module(geometry("gq22"))
    forbidden = set(rs.coords) | {a ^ b for a, b in combinations(rs.coords, 2)}
    free = [v for v in range(1, 1 << rs.dim_v) if v not in forbidden]
    four = [q for q in faithful_quotients(rs) if q.dim == 4]
    assert len(free) == 1 and len(four) == 1
    assert four[0].kernel_basis == tuple(free)


def test_hex_i_has_no_nonabelian_representation(geometry):
    g = geometry("hex_i")
    with pytest.raises(InconsistentSystem):
        build_representation(universal_module(g))
    ob = representation_obstruction(g)
    assert ob is not None and len(ob.lines) == 24
    assert twisted_line_product(g, ob.lines) == (0, 1)


def test_hex_i_obstruction_with_dense_oracle(geometry):
    """Recompute the witness product in F2^P x F2 with numpy, independently of the bitset code."""
    g = geometry("hex_i")
    lines = representation_obstruction(g).lines
    n = g.num_points
    a3 = (np.asarray(g.dist) == 3).astype(np.int64)
    upper = np.triu(a3, 1)
    acc = np.zeros(n, dtype=np.int64)
    bit = 0
    for li in lines:
        e = np.zeros(n, dtype=np.int64)
        e[list(g.lines[li])] = 1
        bit ^= int(acc @ upper @ e) % 2
        acc ^= e
    assert not acc.any() and bit == 1
    # removing any single line breaks the cycle condition, so the witness is not a sum of smaller cycles plus junk
    inc = np.zeros((len(lines), n), dtype=np.uint8)
    for i, li in enumerate(lines):
        inc[i, list(g.lines[li])] = 1
    assert gf2_rank(inc) == len(lines) - 1


@pytest.mark.parametrize("key,size", [("hex_i", 10), ("hex_ii", 11)])
def test_good_subsets_on_large_hexagons(geometry, key, size):
    g = geometry(key)
    rs = universal_module(g)
    a = 0
    b = int(np.flatnonzero(np.asarray(g.dist[0]) == 3)[0])
    w = good_subset_search(rs, a, b)
    assert w.size == size == rs.npdim // 2 - 1
    assert w.lower_bound_log2 == 1 + rs.npdim
    # independent check: images independent and span avoids the radical
    ims = [rs.v(x) for x in w.X]
    assert rank_rows(ims, rs.dim_v) == size
    assert rank_rows(ims + list(rs.radical), rs.dim_v) == size + len(rs.radical)
    assert set(w.X) <= set(neighbour_set_A(g, a, b))


def test_quad_subgroups(geometry):
    g = geometry("hex_viii")
    gr = build_representation(universal_module(g))
    for q in quads(g):
        order, inter = quad_subgroup(gr, q)
        assert order == 2**5 and len(inter) == 2
        # the nontrivial central element is r_a r_b r_c for every complete 3-arc {a, b, c} of Q
        sub = g.induced(q.points)
        m = gq.model_for(sub)
        for arc in gq.arcs(m, 3):
            if arc.complete:
                prod = gr.prod(gr.r(q.points[i]) for i in arc.points)
                assert prod == inter[1]
    g7 = geometry("hex_vii")
    gr7 = build_representation(universal_module(g7))
    for q in quads(g7):
        if q.t2 == 4:
            assert quad_subgroup(gr7, q) == (2**6, [gr7.identity])


def test_abelian_span_rejects_noncommuting(geometry):
    g = geometry("hex_xi")
    gr = build_representation(universal_module(g))
    x, y = 0, int(np.flatnonzero(np.asarray(g.dist[0]) == 3)[0])
    with pytest.raises(ValueError):
        abelian_span(gr, [gr.r(x), gr.r(y)])
