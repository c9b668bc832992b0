"""Dense linear algebra over F2.

Vectors and matrix rows are bit-packed into Python ints (bit ``j`` is
coordinate ``j``).  :class:`BitVector` and :class:`BitMatrix` are thin
immutable carriers around that representation; the module-level helpers
working on raw ints are what the rest of the package uses in inner loops.
"""

from __future__ import annotations

import enum
import random
from dataclasses import dataclass
from typing import Iterable, Sequence

from . import _kernels
from .errors import DegenerateForm


def parity(x: int) -> int:
    return bin(x).count("1") & 1


def popcount(x: int) -> int:
    return bin(x).count("1")


def bits_of(x: int):
    """Yield the indices of the set bits of ``x`` in ascending order."""
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


def bits_to_list(x: int, n: int) -> list[int]:
    return [(x >> i) & 1 for i in range(n)]


def list_to_bits(entries: Iterable[int]) -> int:
    out = 0
    for i, e in enumerate(entries):
        if e & 1:
            out |= 1 << i
    return out


@dataclass(frozen=True)
class BitVector:
    bits: int
    len: int

    def __post_init__(self):
        if self.bits < 0 or self.bits >> self.len:
            raise ValueError("bits exceed vector length")

    @classmethod
    def from_list(cls, entries: Sequence[int]) -> "BitVector":
        return cls(list_to_bits(entries), len(entries))

    @classmethod
    def zero(cls, n: int) -> "BitVector":
        return cls(0, n)

    @classmethod
    def unit(cls, i: int, n: int) -> "BitVector":
        return cls(1 << i, n)

    def __add__(self, other: "BitVector") -> "BitVector":
        if other.len != self.len:
            raise ValueError("length mismatch")
        return BitVector(self.bits ^ other.bits, self.len)

    __sub__ = __add__

    def __getitem__(self, i: int) -> int:
        if not 0 <= i < self.len:
            raise IndexError(i)
        return (self.bits >> i) & 1

    def __len__(self) -> int:
        return self.len

    def dot(self, other: "BitVector") -> int:
        return parity(self.bits & other.bits)

    def weight(self) -> int:
        return popcount(self.bits)

    def is_zero(self) -> bool:
        return self.bits == 0

    def to_list(self) -> list[int]:
        return bits_to_list(self.bits, self.len)

    def support(self) -> list[int]:
        return list(bits_of(self.bits))


@dataclass(frozen=True)
class BitMatrix:
    rows: tuple[int, ...]
    ncols: int

    def __post_init__(self):
        limit = 1 << self.ncols
        for r in self.rows:
            if r < 0 or r >= limit:
                raise ValueError("row exceeds column count")

    @classmethod
    def from_rows(cls, rows: Iterable[int], ncols: int) -> "BitMatrix":
        return cls(tuple(rows), ncols)

    @classmethod
    def from_lists(cls, lists: Sequence[Sequence[int]], ncols: int | None = None) -> "BitMatrix":
        if ncols is None:
            ncols = len(lists[0]) if lists else 0
        return cls(tuple(list_to_bits(r) for r in lists), ncols)

    @classmethod
    def from_vectors(cls, vectors: Sequence[BitVector]) -> "BitMatrix":
        ncols = vectors[0].len if vectors else 0
        return cls(tuple(v.bits for v in vectors), ncols)

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> "BitMatrix":
        return cls((0,) * nrows, ncols)

    @classmethod
    def identity(cls, n: int) -> "BitMatrix":
        return cls(tuple(1 << i for i in range(n)), n)

    @classmethod
    def random(cls, nrows: int, ncols: int, rng: random.Random) -> "BitMatrix":
        return cls(tuple(rng.getrandbits(ncols) if ncols else 0 for _ in range(nrows)), ncols)

    @property
    def nrows(self) -> int:
        return len(self.rows)

    def row(self, i: int) -> BitVector:
        return BitVector(self.rows[i], self.ncols)

    def entry(self, i: int, j: int) -> int:
        return (self.rows[i] >> j) & 1

    def transpose(self) -> "BitMatrix":
        return BitMatrix(tuple(transpose_rows(self.rows, self.ncols)), self.nrows)

    def mul_vec(self, v: BitVector) -> BitVector:
        if v.len != self.ncols:
            raise ValueError("dimension mismatch")
        return BitVector(mat_vec(self.rows, v.bits), self.nrows)

    def __matmul__(self, other: "BitMatrix") -> "BitMatrix":
        if other.nrows != self.ncols:
            raise ValueError("dimension mismatch")
        return BitMatrix(tuple(vec_mat(r, other.rows) for r in self.rows), other.ncols)

    def to_lists(self) -> list[list[int]]:
        return [bits_to_list(r, self.ncols) for r in self.rows]


def transpose_rows(rows: Sequence[int], ncols: int) -> list[int]:
    out = [0] * ncols
    for i, r in enumerate(rows):
        bit = 1 << i
        for j in bits_of(r):
            out[j] |= bit
    return out


def mat_vec(rows: Sequence[int], v: int) -> int:
    """``M v`` with ``M`` given by its rows; result bit ``i`` is ``row_i . v``."""
    out = 0
    for i, r in enumerate(rows):
        if parity(r & v):
            out |= 1 << i
    return out


def vec_mat(v: int, rows: Sequence[int]) -> int:
    """``v^T M``: XOR of the rows selected by ``v``."""
    out = 0
    for i in bits_of(v):
        out ^= rows[i]
    return out


def bilinear(rows: Sequence[int], v: int, w: int) -> int:
    """``v^T M w`` for the matrix with the given rows."""
    acc = 0
    for i in bits_of(v):
        acc ^= rows[i] & w
    return parity(acc)


# -- elimination -------------------------------------------------------------


def rref_rows(rows: Sequence[int], ncols: int) -> tuple[list[int], list[int]]:
    """Reduced echelon basis of the row space, plus pivot columns."""
    return _kernels.rref(rows, ncols)


def rank_rows(rows: Sequence[int], ncols: int) -> int:
    return _kernels.rank(rows, ncols)


def reduce_against(v: int, basis: Sequence[int], pivots: Sequence[int]) -> int:
    """Reduce ``v`` modulo the span of an RREF basis (canonical coset representative)."""
    for row, p in zip(basis, pivots):
        if (v >> p) & 1:
            v ^= row
    return v


def nullspace_rows(rows: Sequence[int], ncols: int) -> list[int]:
    """Basis of ``{x : M x = 0}``, one vector per free column (ascending)."""
    basis, pivots = rref_rows(rows, ncols)
    pivot_set = set(pivots)
    out = []
    for f in range(ncols):
        if f in pivot_set:
            continue
        x = 1 << f
        for row, p in zip(basis, pivots):
            if (row >> f) & 1:
                x |= 1 << p
        out.append(x)
    return out


def solve_rows(rows: Sequence[int], ncols: int, b: int) -> int | None:
    """Some ``x`` with ``M x = b`` (free variables zero), or ``None``."""
    aug = [r | (((b >> i) & 1) << ncols) for i, r in enumerate(rows)]
    basis, pivots = rref_rows(aug, ncols + 1)
    if pivots and pivots[-1] == ncols:
        return None
    x = 0
    for row, p in zip(basis, pivots):
        if (row >> ncols) & 1:
            x |= 1 << p
    return x


def span_elements(basis: Sequence[int]) -> list[int]:
    out = [0]
    for b in basis:
        out += [x ^ b for x in out]
    return out


def rank(m: BitMatrix) -> int:
    return rank_rows(m.rows, m.ncols)


def nullspace(m: BitMatrix) -> list[BitVector]:
    return [BitVector(x, m.ncols) for x in nullspace_rows(m.rows, m.ncols)]


def solve(m: BitMatrix, b: BitVector) -> BitVector | None:
    if b.len != m.nrows:
        raise ValueError("right-hand side length must equal nrows")
    x = solve_rows(m.rows, m.ncols, b.bits)
    return None if x is None else BitVector(x, m.ncols)


def radical(polar: BitMatrix) -> list[BitVector]:
    """Basis of the radical of a symmetric bilinear form."""
    return nullspace(polar)


# -- quadratic forms -----------------------------------------------------------


class PlusMinus(enum.Enum):
    PLUS = "plus"
    MINUS = "minus"


@dataclass(frozen=True)
class QuadraticFormData:
    """``q(v) = sum_{i<=j} upper[i][j] v_i v_j``; the polar form is derived."""

    dim: int
    upper: BitMatrix

    def __post_init__(self):
        if self.upper.nrows != self.dim or self.upper.ncols != self.dim:
            raise ValueError("upper must be dim x dim")
        for i, r in enumerate(self.upper.rows):
            if r & ((1 << i) - 1):
                raise ValueError("upper must be upper-triangular")

    @classmethod
    def from_polar(cls, polar_rows: Sequence[int], diagonal: int, dim: int) -> "QuadraticFormData":
        """Form with the given polar (symmetric, zero diagonal) and ``q(e_i) = diagonal_i``."""
        rows = []
        for i in range(dim):
            above = polar_rows[i] & ~((1 << (i + 1)) - 1)
            rows.append(above | (((diagonal >> i) & 1) << i))
        return cls(dim, BitMatrix(tuple(rows), dim))

    @property
    def polar(self) -> BitMatrix:
        u = self.upper.rows
        ut = transpose_rows(u, self.dim)
        rows = []
        for i in range(self.dim):
            rows.append((u[i] ^ ut[i]) & ~(1 << i))
        return BitMatrix(tuple(rows), self.dim)

    def value(self, v: int | BitVector) -> int:
        if isinstance(v, BitVector):
            v = v.bits
        return bilinear(self.upper.rows, v, v)

    def compose(self, t: BitMatrix) -> "QuadraticFormData":
        """``q o T`` where ``T`` acts on column vectors (``v -> T v``)."""
        cols = transpose_rows(t.rows, t.ncols)  # cols[j] = T e_j
        polar = self.polar.rows
        rows = []
        for i in range(self.dim):
            r = self.value(cols[i]) << i
            for j in range(i + 1, self.dim):
                if bilinear(polar, cols[i], cols[j]):
                    r |= 1 << j
            rows.append(r)
        return QuadraticFormData(self.dim, BitMatrix(tuple(rows), self.dim))


def symplectic_split(vectors: Sequence[int], form: Sequence[int]):
    """Split a spanning set into hyperbolic pairs plus radical vectors.

    Repeatedly takes the first vector ``e`` having a partner ``f`` with
    ``B(e, f) = 1`` and projects the rest onto ``<e, f>^perp``.  Returns
    ``(pairs, rest)``; ``rest`` spans the radical of the form restricted to
    the span (it may contain dependent or zero vectors).
    """
    pool = [v for v in vectors if v]
    pairs = []
    while True:
        found = None
        for i, e in enumerate(pool):
            for j in range(i + 1, len(pool)):
                if bilinear(form, e, pool[j]):
                    found = (i, j)
                    break
            if found:
                break
        if found is None:
            return pairs, pool
        i, j = found
        e, f = pool[i], pool[j]
        pairs.append((e, f))
        nxt = []
        for k, w in enumerate(pool):
            if k in (i, j):
                continue
            if bilinear(form, w, f):
                w ^= e
            if bilinear(form, w, e):
                w ^= f
            if w:
                nxt.append(w)
        pool = nxt


def arf_invariant(q: QuadraticFormData) -> int:
    polar = q.polar.rows
    if rank_rows(polar, q.dim) != q.dim:
        raise DegenerateForm(f"polar form has radical of dimension {q.dim - rank_rows(polar, q.dim)}")
    pairs, _ = symplectic_split([1 << i for i in range(q.dim)], polar)
    arf = 0
    for e, f in pairs:
        arf ^= q.value(e) & q.value(f)
    return arf


def arf_type(q: QuadraticFormData) -> PlusMinus:
    """Plus iff the Arf invariant vanishes (a totally singular half-dimensional subspace exists)."""
    return PlusMinus.PLUS if arf_invariant(q) == 0 else PlusMinus.MINUS


def count_singular(q: QuadraticFormData) -> int:
    """Number of ``v`` (zero included) with ``q(v) = 0``; exhaustive."""
    return sum(1 for v in range(1 << q.dim) if q.value(v) == 0)
