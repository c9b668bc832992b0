import random

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import gf2_rank, quad_form_value, singular_count_bruteforce, to_dense
from slimhex.errors import DegenerateForm
from slimhex.f2linalg import (
    BitMatrix,
    BitVector,
    PlusMinus,
    QuadraticFormData,
    arf_invariant,
    arf_type,
    bilinear,
    count_singular,
    nullspace,
    nullspace_rows,
    rank,
    rank_rows,
    reduce_against,
    rref_rows,
    solve,
    solve_rows,
    span_elements,
    symplectic_split,
    transpose_rows,
)


@st.composite
def matrices(draw, max_rows=12, max_cols=12):
    nrows = draw(st.integers(0, max_rows))
    ncols = draw(st.integers(1, max_cols))
    rows = draw(st.lists(st.integers(0, (1 << ncols) - 1), min_size=nrows, max_size=nrows))
    return rows, ncols


@st.composite
def quadratic_forms(draw, max_dim=8):
    dim = draw(st.integers(1, max_dim))
    rows = []
    for i in range(dim):
        r = draw(st.integers(0, (1 << dim) - 1))
        rows.append(r & ~((1 << i) - 1))
    return QuadraticFormData(dim, BitMatrix(tuple(rows), dim))


def _hyperbolic(m, minus=False):
    """Standard form sum x_{2i} x_{2i+1} (+ x_0^2 + x_1^2 for minus type)."""
    rows = [0] * (2 * m)
    for i in range(m):
        rows[2 * i] |= 1 << (2 * i + 1)
    if minus:
        rows[0] |= 1
        rows[1] |= 1 << 1
    return QuadraticFormData(2 * m, BitMatrix(tuple(rows), 2 * m))


def _random_invertible(n, rng):
    while True:
        rows = [rng.getrandbits(n) for _ in range(n)]
        if rank_rows(rows, n) == n:
            return BitMatrix(tuple(rows), n)


# -- frozen oracle values ------------------------------------------------------------------


def test_rank_of_identity_and_zero():
    assert rank(BitMatrix.identity(37)) == 37
    assert rank(BitMatrix.zeros(5, 40)) == 0


def test_rref_known_example():
    # rows 011, 110, 101  (bit j = column j): rank 2, pivots 0 and 1
    basis, pivots = rref_rows([0b110, 0b011, 0b101], 3)
    assert pivots == [0, 1]
    assert basis == [0b101, 0b110]


def test_solve_inconsistent_returns_none():
    m = BitMatrix.from_lists([[1, 1], [1, 1]])
    assert solve(m, BitVector.from_list([1, 0])) is None
    assert solve(m, BitVector.from_list([1, 1])).to_list() in ([1, 0], [0, 1])


def test_bitvector_length_is_checked():
    with pytest.raises(ValueError):
        BitVector(0b100, 2)


def test_standard_hyperbolic_and_elliptic_types():
    for m in range(1, 5):
        plus, minus = _hyperbolic(m), _hyperbolic(m, minus=True)
        assert arf_type(plus) is PlusMinus.PLUS
        assert arf_type(minus) is PlusMinus.MINUS
        assert count_singular(plus) == 2 ** (2 * m - 1) + 2 ** (m - 1)
        assert count_singular(minus) == 2 ** (2 * m - 1) - 2 ** (m - 1)


def test_quaternion_form_is_minus():
    # Q8 = 2_-^{1+2}: x^2 + xy + y^2 is anisotropic
    q = QuadraticFormData(2, BitMatrix((0b11, 0b10), 2))
    assert arf_type(q) is PlusMinus.MINUS
    assert count_singular(q) == 1


def test_degenerate_form_raises():
    q = QuadraticFormData(3, BitMatrix((0b010, 0, 0), 3))
    with pytest.raises(DegenerateForm):
        arf_invariant(q)


# -- properties (each run at least 1000 instances) -------------------------------------------


@settings(max_examples=1000, deadline=None)
@given(matrices())
def test_rank_matches_dense_oracle_and_transpose(m):
    rows, ncols = m
    r = rank_rows(rows, ncols)
    assert r == gf2_rank(to_dense(rows, ncols))
    assert r == rank_rows(transpose_rows(rows, ncols), len(rows)) if rows else r == 0
    assert r <= min(len(rows), ncols)


@settings(max_examples=1000, deadline=None)
@given(matrices())
def test_nullspace_is_kernel_of_full_dimension(m):
    rows, ncols = m
    ns = nullspace_rows(rows, ncols)
    assert len(ns) == ncols - rank_rows(rows, ncols)
    for x in ns:
        assert all(bin(r & x).count("1") % 2 == 0 for r in rows)
    assert rank_rows(ns, ncols) == len(ns)
    assert [v.bits for v in nullspace(BitMatrix(tuple(rows), ncols))] == ns


@settings(max_examples=1000, deadline=None)
@given(matrices(), st.integers(0, (1 << 12) - 1))
def test_solve_agrees_with_consistency(m, b):
    rows, ncols = m
    b &= (1 << len(rows)) - 1
    x = solve_rows(rows, ncols, b)
    aug = [r | (((b >> i) & 1) << ncols) for i, r in enumerate(rows)]
    consistent = rank_rows(aug, ncols + 1) == rank_rows(rows, ncols)
    assert (x is not None) == consistent
    if x is not None:
        assert all(bin(r & x).count("1") % 2 == (b >> i) & 1 for i, r in enumerate(rows))


@settings(max_examples=1000, deadline=None)
@given(matrices(), st.integers(0, (1 << 12) - 1))
def test_rref_reduction_is_a_canonical_coset_representative(m, v):
    rows, ncols = m
    v &= (1 << ncols) - 1
    basis, pivots = rref_rows(rows, ncols)
    red = reduce_against(v, basis, pivots)
    assert all(not (red >> p) & 1 for p in pivots)
    # v - red lies in the row space
    assert rank_rows(list(basis) + [v ^ red], ncols) == len(basis)
    assert len(set(span_elements(basis))) == 1 << len(basis)


@settings(max_examples=1000, deadline=None)
@given(quadratic_forms(), st.integers(0, 255), st.integers(0, 255))
def test_polarization_identity(q, v, w):
    mask = (1 << q.dim) - 1
    v, w = v & mask, w & mask
    polar = q.polar.rows
    assert q.value(v ^ w) == q.value(v) ^ q.value(w) ^ bilinear(polar, v, w)
    assert bilinear(polar, v, v) == 0
    upper = to_dense(q.upper.rows, q.dim)
    bits = [(v >> i) & 1 for i in range(q.dim)]
    assert q.value(v) == quad_form_value(upper, bits)


@settings(max_examples=1000, deadline=None)
@given(st.integers(1, 4), st.booleans(), st.integers(0, 2**32))
def test_arf_is_basis_invariant(m, minus, seed):
    rng = random.Random(seed)
    q = _hyperbolic(m, minus)
    qt = q.compose(_random_invertible(2 * m, rng))
    assert arf_type(qt) is arf_type(q)
    assert count_singular(qt) == count_singular(q)


@settings(max_examples=1000, deadline=None)
@given(quadratic_forms(max_dim=6))
def test_singular_count_matches_arf_and_bruteforce(q):
    upper = to_dense(q.upper.rows, q.dim)
    n0 = count_singular(q)
    assert n0 == singular_count_bruteforce(upper)
    if rank_rows(q.polar.rows, q.dim) == q.dim:
        m = q.dim // 2
        sign = 1 if arf_type(q) is PlusMinus.PLUS else -1
        assert n0 == 2 ** (2 * m - 1) + sign * 2 ** (m - 1)


@settings(max_examples=1000, deadline=None)
@given(quadratic_forms())
def test_symplectic_split_gives_hyperbolic_pairs(q):
    polar = q.polar.rows
    pairs, rest = symplectic_split([1 << i for i in range(q.dim)], polar)
    r = rank_rows(polar, q.dim)
    assert 2 * len(pairs) == r
    vecs = [x for p in pairs for x in p]
    for i, (e, f) in enumerate(pairs):
        assert bilinear(polar, e, f) == 1
        for j, (e2, f2) in enumerate(pairs):
            if i != j:
                assert not any(bilinear(polar, a, b) for a in (e, f) for b in (e2, f2))
    for w in rest:
        assert not any(bilinear(polar, w, x) for x in vecs)


def test_dense_oracle_self_check():
    rng = np.random.default_rng(7)
    a = rng.integers(0, 2, size=(30, 30))
    assert gf2_rank(a) == gf2_rank(a.T)
