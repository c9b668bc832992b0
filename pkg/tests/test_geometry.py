import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import bfs_distances
from slimhex import catalog
from slimhex.errors import BadLine, NotPartialLinear
from slimhex.geometry import (
    build_geometry,
    convex_closure,
    is_near_2n_gon,
    line_distance_violation,
    point_quad_dichotomy_violation,
    quad_of,
    quads,
    subspace_closure,
    verify_big_quad_inequality,
)

ALL_KEYS = list(catalog.GQ_KEYS) + list(catalog.HEXAGON_KEYS) + ["hex_vi_glued"]


def _get(geometry, key):
    g = geometry(key)
    if g is None:
        pytest.skip(f"{key} not constructed")
    return g


@pytest.mark.parametrize("key", ALL_KEYS)
def test_line_distance_pattern_exhaustive(geometry, key):
    """Every point sees each line as distances {d, d+1, d+1}."""
    g = _get(geometry, key)
    d = bfs_distances(g.num_points, g.lines)
    assert np.array_equal(d, np.asarray(g.dist))
    la = np.array(g.lines)
    per_line = np.sort(d[:, la], axis=2)  # (points, lines, 3)
    assert np.array_equal(per_line[:, :, 1], per_line[:, :, 2])
    assert np.array_equal(per_line[:, :, 1], per_line[:, :, 0] + 1)
    assert line_distance_violation(g) is None
    assert is_near_2n_gon(g, catalog.CATALOG[key].n)


def test_bad_lines_rejected():
    with pytest.raises(BadLine):
        build_geometry(3, [(0, 0, 1)])
    with pytest.raises(BadLine):
        build_geometry(3, [(0, 1, 5)])
    with pytest.raises(NotPartialLinear):
        build_geometry(4, [(0, 1, 2), (0, 1, 3)])


def test_triangle_is_not_a_quadrangle():
    g = build_geometry(6, [(0, 1, 2), (2, 3, 4), (4, 5, 0)])
    assert not is_near_2n_gon(g, 2)
    assert line_distance_violation(g) is not None


@pytest.mark.parametrize("key", ["hex_xi", "hex_x", "hex_vii", "hex_viii"])
def test_quads_are_convex_subgqs_obeying_dichotomy(geometry, key):
    g = _get(geometry, key)
    qs = quads(g)
    assert qs
    for q in qs:
        assert sorted(convex_closure(g, q.points)) == sorted(q.points)
        assert point_quad_dichotomy_violation(g, q) is None
        if q.big:
            assert verify_big_quad_inequality(g, q)["equality"]


def test_quad_counts_of_products_with_a_line(geometry):
    # Q x L has the |L| = 3 copies of Q plus one grid per line of Q
    for key, gq_key in (("hex_xi", "gq21"), ("hex_x", "gq22"), ("hex_vii", "gq24")):
        g, base = geometry(key), geometry(gq_key)
        assert len(quads(g)) == 3 + len(base.lines)


@settings(max_examples=200, deadline=None)
@given(st.data())
def test_quad_of_distance_two_pair_is_the_closure(geometry, data):
    g = geometry("hex_x")
    x = data.draw(st.integers(0, g.num_points - 1))
    ys = np.flatnonzero(np.asarray(g.dist[x]) == 2)
    y = int(data.draw(st.sampled_from(list(ys))))
    q = quad_of(g, x, y)
    assert x in q and y in q
    assert sorted(subspace_closure(g, q.points)) == sorted(q.points)
