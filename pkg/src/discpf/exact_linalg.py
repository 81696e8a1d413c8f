"""Exact integer matrices: determinant, adjugate, pfaffian, unimodular helpers.

All arithmetic is on Python ints; the heavy loops go through
:mod:`discpf.kernels`, which may use a compiled 64-bit fast path that falls back
to big integers on overflow.
"""
from __future__ import annotations

import math
import operator
from typing import Iterable, Sequence

from . import kernels
from .errors import DimensionMismatch, GcdNotOne, NotSkewSymmetric, NotSquare, NotUnimodular


class IntMatrix:
    """Immutable dense matrix of arbitrary-precision integers.

    Build it from a sequence of rows; every entry must be an ``int`` (``bool``
    and floats are rejected rather than coerced).
    """

    __slots__ = ("_rows", "n_rows", "n_cols")

    def __init__(self, rows: Iterable[Iterable[int]], n_cols: int | None = None):
        data = tuple(tuple(_as_int(x) for x in row) for row in rows)
        if n_cols is None:
            n_cols = len(data[0]) if data else 0
        for row in data:
            if len(row) != n_cols:
                raise DimensionMismatch("ragged rows")
        object.__setattr__(self, "_rows", data)
        object.__setattr__(self, "n_rows", len(data))
        object.__setattr__(self, "n_cols", n_cols)

    def __setattr__(self, name, value):
        raise AttributeError("IntMatrix is immutable")

    @classmethod
    def from_entries(cls, n_rows: int, n_cols: int, entries: Sequence[int]) -> IntMatrix:
        if len(entries) != n_rows * n_cols:
            raise DimensionMismatch(f"{len(entries)} entries for a {n_rows}x{n_cols} matrix")
        return cls((entries[i * n_cols:(i + 1) * n_cols] for i in range(n_rows)), n_cols)

    @classmethod
    def identity(cls, n: int) -> IntMatrix:
        return cls(([int(i == j) for j in range(n)] for i in range(n)), n)

    @classmethod
    def zeros(cls, n_rows: int, n_cols: int | None = None) -> IntMatrix:
        n_cols = n_rows if n_cols is None else n_cols
        return cls(([0] * n_cols for _ in range(n_rows)), n_cols)

    @classmethod
    def diag(cls, values: Sequence[int]) -> IntMatrix:
        n = len(values)
        return cls(([values[i] if i == j else 0 for j in range(n)] for i in range(n)), n)

    @classmethod
    def block_diag(cls, *blocks: IntMatrix) -> IntMatrix:
        n = sum(b.n_rows for b in blocks)
        m = sum(b.n_cols for b in blocks)
        out = [[0] * m for _ in range(n)]
        r = c = 0
        for b in blocks:
            for i, row in enumerate(b._rows):
                out[r + i][c:c + b.n_cols] = row
            r += b.n_rows
            c += b.n_cols
        return cls(out, m)

    @property
    def rows(self) -> tuple[tuple[int, ...], ...]:
        return self._rows

    @property
    def entries(self) -> tuple[int, ...]:
        """Row-major flat entries."""
        return tuple(x for row in self._rows for x in row)

    @property
    def shape(self) -> tuple[int, int]:
        return (self.n_rows, self.n_cols)

    def tolist(self) -> list[list[int]]:
        return [list(r) for r in self._rows]

    def row(self, i: int) -> tuple[int, ...]:
        return self._rows[i]

    def col(self, j: int) -> tuple[int, ...]:
        return tuple(r[j] for r in self._rows)

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self._rows[i][j]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, IntMatrix):
            return NotImplemented
        return self.n_cols == other.n_cols and self._rows == other._rows

    def __hash__(self) -> int:
        return hash((self.n_cols, self._rows))

    def __repr__(self) -> str:
        return f"IntMatrix({self.tolist()!r})"

    def __str__(self) -> str:
        if not self._rows:
            return "[]"
        width = max(len(str(x)) for row in self._rows for x in row)
        return "\n".join("[" + " ".join(str(x).rjust(width) for x in row) + "]" for row in self._rows)

    # -- arithmetic ---------------------------------------------------------

    def _check_same_shape(self, other: IntMatrix) -> None:
        if self.shape != other.shape:
            raise DimensionMismatch(f"shapes {self.shape} and {other.shape}")

    def __add__(self, other: IntMatrix) -> IntMatrix:
        self._check_same_shape(other)
        return IntMatrix(([x + y for x, y in zip(r, s)] for r, s in zip(self._rows, other._rows)), self.n_cols)

    def __sub__(self, other: IntMatrix) -> IntMatrix:
        self._check_same_shape(other)
        return IntMatrix(([x - y for x, y in zip(r, s)] for r, s in zip(self._rows, other._rows)), self.n_cols)

    def __neg__(self) -> IntMatrix:
        return self.scale(-1)

    def scale(self, c: int) -> IntMatrix:
        c = _as_int(c)
        return IntMatrix(([c * x for x in r] for r in self._rows), self.n_cols)

    def __mul__(self, c: int) -> IntMatrix:
        if isinstance(c, IntMatrix):
            return NotImplemented
        return self.scale(c)

    __rmul__ = __mul__

    def __matmul__(self, other: IntMatrix) -> IntMatrix:
        if self.n_cols != other.n_rows:
            raise DimensionMismatch(f"cannot multiply {self.shape} by {other.shape}")
        return IntMatrix(kernels.matmul(self._rows, other._rows), other.n_cols)

    def apply(self, vec: Sequence[int]) -> tuple[int, ...]:
        """Matrix times column vector."""
        if len(vec) != self.n_cols:
            raise DimensionMismatch("vector length")
        return tuple(sum(x * y for x, y in zip(r, vec)) for r in self._rows)

    @property
    def T(self) -> IntMatrix:
        return IntMatrix(zip(*self._rows), self.n_rows) if self._rows else IntMatrix([], 0)

    # -- predicates and slicing ---------------------------------------------

    def is_square(self) -> bool:
        return self.n_rows == self.n_cols

    def is_symmetric(self) -> bool:
        return self.is_square() and all(
            self._rows[i][j] == self._rows[j][i] for i in range(self.n_rows) for j in range(i)
        )

    def is_skew_symmetric(self) -> bool:
        n = self.n_rows
        return self.is_square() and all(
            self._rows[i][j] == -self._rows[j][i] for i in range(n) for j in range(i + 1)
        )

    def submatrix(self, rows: Sequence[int], cols: Sequence[int] | None = None) -> IntMatrix:
        """Keep the given rows and columns (columns default to ``rows``)."""
        cols = rows if cols is None else cols
        return IntMatrix(([self._rows[i][j] for j in cols] for i in rows), len(cols))

    def minor_matrix(self, i: int, j: int) -> IntMatrix:
        """Delete row ``i`` and column ``j``."""
        keep_r = [r for r in range(self.n_rows) if r != i]
        keep_c = [c for c in range(self.n_cols) if c != j]
        return self.submatrix(keep_r, keep_c)


def _as_int(x) -> int:
    if isinstance(x, bool):
        raise TypeError("bool is not an integer entry")
    return operator.index(x)


def _require_square(m: IntMatrix) -> None:
    if not m.is_square():
        raise NotSquare(f"expected a square matrix, got {m.n_rows}x{m.n_cols}")


def det(m: IntMatrix) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    _require_square(m)
    return kernels.det(m.rows)


def adjugate(m: IntMatrix) -> IntMatrix:
    """Transpose of the cofactor matrix, so that ``m @ adj(m) == det(m) * I``."""
    _require_square(m)
    n = m.n_rows
    if n == 1:
        return IntMatrix([[1]])
    rows = m.rows
    cof = [[0] * n for _ in range(n)]
    for i in range(n):
        sub_rows = rows[:i] + rows[i + 1:]
        for j in range(n):
            minor = [r[:j] + r[j + 1:] for r in sub_rows]
            d = kernels.det(minor)
            # adj[j][i] = (-1)^(i+j) det(minor_ij)
            cof[j][i] = -d if (i + j) % 2 else d
    return IntMatrix(cof, n)


def pfaffian(m: IntMatrix) -> int:
    """Pfaffian of a skew-symmetric matrix; 0 for odd size, pf([[0,1],[-1,0]]) == 1."""
    _require_square(m)
    if not m.is_skew_symmetric():
        raise NotSkewSymmetric("pfaffian needs M^T == -M")
    return kernels.pfaffian(m.rows)


def trace(m: IntMatrix) -> int:
    _require_square(m)
    return sum(m.rows[i][i] for i in range(m.n_rows))


def ext_gcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, x, y) with a*x + b*y == g == gcd(a, b) >= 0."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def unimodular_completion(a: Sequence[int]) -> IntMatrix:
    """Unimodular Q with ``a Q = (1, 0, ..., 0)`` for a row vector of gcd 1.

    Collapses the last two live coordinates with a 2x2 Bezout block of
    determinant 1, working from the right, until one coordinate remains.
    """
    a = [_as_int(x) for x in a]
    n = len(a)
    if n == 0:
        raise GcdNotOne("empty vector")
    if math.gcd(*a) != 1:
        raise GcdNotOne(f"gcd of {a} is {math.gcd(*a)}, need 1")
    q = [[int(i == j) for j in range(n)] for i in range(n)]
    v = list(a)
    for m in range(n - 1, 0, -1):
        u, w = v[m - 1], v[m]
        if w == 0:
            continue
        g, x, y = ext_gcd(u, w)
        # P = [[x, -w/g], [y, u/g]], det P = 1; right-multiply columns m-1, m
        p00, p01, p10, p11 = x, -w // g, y, u // g
        for row in q:
            c0, c1 = row[m - 1], row[m]
            row[m - 1] = c0 * p00 + c1 * p10
            row[m] = c0 * p01 + c1 * p11
        v[m - 1], v[m] = g, 0
    if v[0] == -1:
        for row in q:
            row[0] = -row[0]
    return IntMatrix(q, n)


def inverse_unimodular(q: IntMatrix) -> IntMatrix:
    """Exact inverse of a matrix with determinant +-1, as det(Q) * adj(Q)."""
    _require_square(q)
    d = det(q)
    if d not in (1, -1):
        raise NotUnimodular(f"det = {d}")
    adj = adjugate(q)
    return adj if d == 1 else -adj
