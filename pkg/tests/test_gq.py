from collections import Counter
from itertools import combinations

import networkx as nx
import pytest

from slimhex import gq


@pytest.fixture(scope="module")
def models():
    return {1: gq.grid_gq(), 2: gq.duad_factor_gq(), 4: gq.q24_gq()}


def _noncollinearity(m):
    g = m.geometry
    h = nx.complete_graph(g.num_points)
    for ln in g.lines:
        h.remove_edges_from(combinations(ln, 2))
    return h


def _oracle_arcs(m):
    """k-arcs as cliques of the non-collinearity graph, grouped by size."""
    out = {}
    for c in nx.enumerate_all_cliques(_noncollinearity(m)):
        out.setdefault(len(c), set()).add(tuple(sorted(c)))
    return out


def _oracle_spreads(m):
    g = m.geometry
    h = nx.Graph()
    h.add_nodes_from(range(len(g.lines)))
    for i, j in combinations(range(len(g.lines)), 2):
        if not set(g.lines[i]) & set(g.lines[j]):
            h.add_edge(i, j)
    size = 1 + 2 * m.t
    return {tuple(sorted(c)) for c in nx.find_cliques(h) if len(c) == size}


@pytest.mark.parametrize("t,points,lines", [(1, 9, 6), (2, 15, 15), (4, 27, 45)])
def test_model_parameters(models, t, points, lines):
    m = models[t]
    g = m.geometry
    assert (g.num_points, len(g.lines), m.t) == (points, lines, t)
    assert all(len(lt) == t + 1 for lt in g.lines_through)
    assert gq.model_for(g).t == t


@pytest.mark.parametrize("t", [1, 2, 4])
def test_arcs_match_clique_oracle(models, t):
    m = models[t]
    oracle = _oracle_arcs(m)
    assert gq.max_arc_size(m) == max(oracle)
    for k in range(1, max(oracle) + 1):
        found = gq.arcs(m, k)
        assert {a.points for a in found} == oracle[k]
        bigger = oracle.get(k + 1, set())
        for a in found:
            extendable = any(set(a.points) < set(b) for b in bigger)
            assert a.complete == (not extendable)


@pytest.mark.parametrize("t", [1, 2, 4])
def test_ovoids_and_spreads_match_oracles(models, t):
    m = models[t]
    size = 1 + 2 * t
    oracle_ovoids = {a for a in _oracle_arcs(m).get(size, ())}
    ovs = gq.ovoids(m)
    assert set(ovs) == oracle_ovoids
    sps = gq.spreads(m)
    assert set(sps) == _oracle_spreads(m)
    assert all(len(o) == size for o in ovs)
    assert all(len(s) == size for s in sps)


def test_frozen_counts(models):
    assert (len(gq.ovoids(models[1])), len(gq.spreads(models[1]))) == (6, 2)
    assert len(gq.ovoids(models[2])) == 6
    assert len(gq.spreads(models[2])) == 6
    assert len(gq.ovoids(models[4])) == 0
    assert len(gq.spreads(models[4])) == 200
    assert gq.max_arc_size(models[2]) == 5
    assert gq.max_arc_size(models[4]) == 6


def test_gq22_ovoid_structure(models):
    m = models[2]
    ovs = gq.ovoids(m)
    per_point = Counter(p for o in ovs for p in o)
    assert set(per_point.values()) == {2} and len(per_point) == 15
    assert all(len(set(a) & set(b)) == 1 for a, b in combinations(ovs, 2))
    for a in gq.arcs(m, 4):
        assert not a.complete
        assert sum(set(a.points) <= set(o) for o in ovs) == 1
    for a in gq.arcs(m, 3):
        n = len(gq.centers(m, a.points))
        assert n in (1, 3) and (n == 3) == a.complete


def test_gq24_arc_structure(models):
    m = models[4]
    grids = [set(s) for s in gq.subgqs(m, 1)]
    gq22s = [set(s) for s in gq.subgqs(m, 2)]
    for a in gq.arcs(m, 3):
        assert len(gq.centers(m, a.points)) == 3
        assert sum(set(a.points) <= s for s in grids) == 1
    for a in gq.arcs(m, 4):
        assert len(gq.centers(m, a.points)) == 2
        assert sum(set(a.points) <= s for s in gq22s) == 1
    for a in gq.arcs(m, 5):
        in_sub = any(set(a.points) <= s for s in gq22s)
        assert a.complete == in_sub
        assert len(gq.centers(m, a.points)) == (2 if a.complete else 1)


def test_subgq_counts(models):
    # GQ(2,2) has 10 grids; GQ(2,4) has 120 grids and 36 (2,2)-subGQs
    assert len(gq.subgqs(models[2], 1)) == 10
    assert len(gq.subgqs(models[4], 1)) == 120
    assert len(gq.subgqs(models[4], 2)) == 36


def test_min_generating_sizes(models):
    # generated subspaces need at least dim V(S) points: 4, 5, 6
    for t, k in ((1, 4), (2, 5), (4, 6)):
        size, pts = gq.min_generating_size(models[t], 1)
        assert size == k
        assert gq.subgq_generated(models[t], pts)[1] == "whole"
