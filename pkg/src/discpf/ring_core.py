"""Rings of rank n given by multiplication tables.

Storage convention: ``products[i][k]`` is the coefficient vector of
``e_i * e_k``, so its ``j``-th entry is the structure constant c_{ijk}. The
left regular representation then has ``lambda(e_i)[j][k] == products[i][k][j]``:
column ``k`` of ``lambda(e_i)`` is ``products[i][k]``.

Basis changes take a unimodular matrix whose *columns* are the new basis
vectors written in the old basis. Under such a ``Q`` the Gram matrix becomes
``Q.T @ B @ Q`` and coordinates transform by ``Q^-1``.
"""
from __future__ import annotations

import json
import math
import re
from dataclasses import dataclass
from typing import Sequence

from . import kernels
from .errors import (
    DimensionMismatch,
    FormatError,
    InternalGcdViolation,
    NotAssociative,
    NotIdentity,
)
from .exact_linalg import IntMatrix, det, inverse_unimodular, unimodular_completion

Vector = tuple[int, ...]


@dataclass(frozen=True)
class MultiplicationTable:
    rank: int
    products: tuple[tuple[Vector, ...], ...]

    def __post_init__(self):
        n = self.rank
        if n < 1:
            raise DimensionMismatch("rank must be at least 1")
        prods = tuple(tuple(tuple(int(x) for x in v) for v in row) for row in self.products)
        if len(prods) != n or any(len(row) != n for row in prods):
            raise DimensionMismatch(f"table must be {n}x{n} products")
        for row in prods:
            for v in row:
                if len(v) != n:
                    raise DimensionMismatch(f"every product needs {n} coefficients")
        object.__setattr__(self, "products", prods)

    @classmethod
    def from_lists(cls, products) -> MultiplicationTable:
        return cls(len(products), products)

    def constant(self, i: int, j: int, k: int) -> int:
        """c_{ijk}: coefficient of e_j in e_i e_k."""
        return self.products[i][k][j]

    def basis_matrix(self, i: int) -> IntMatrix:
        """lambda(e_i), whose (j, k) entry is c_{ijk}."""
        return IntMatrix(zip(*self.products[i]), self.rank)


class FramedRing:
    """A validated multiplication table with the coordinates of 1.

    Construction runs the full associativity and identity checks, so every
    instance is a genuine ring in a genuine basis.
    """

    __slots__ = ("table", "one_coords", "unital")

    def __init__(self, table: MultiplicationTable, one_coords: Sequence[int]):
        one = tuple(int(x) for x in one_coords)
        if len(one) != table.rank:
            raise DimensionMismatch(f"one_coords has length {len(one)}, rank is {table.rank}")
        _check_ring(table, one)
        self.table = table
        self.one_coords = one
        self.unital = one == unit_vector(table.rank, 0)

    @property
    def rank(self) -> int:
        return self.table.rank

    @property
    def products(self):
        return self.table.products

    def __eq__(self, other):
        if not isinstance(other, FramedRing):
            return NotImplemented
        return self.table == other.table and self.one_coords == other.one_coords

    def __hash__(self):
        return hash((self.table, self.one_coords))

    def __repr__(self):
        return f"FramedRing(rank={self.rank}, one={list(self.one_coords)}, unital={self.unital})"

    def basis(self, i: int) -> Vector:
        return unit_vector(self.rank, i)

    def one(self) -> Vector:
        return self.one_coords

    def mul(self, a: Sequence[int], b: Sequence[int]) -> Vector:
        """Product of two elements given in coordinates."""
        n = self.rank
        if len(a) != n or len(b) != n:
            raise DimensionMismatch("element length must equal rank")
        out = [0] * n
        prods = self.products
        for i, x in enumerate(a):
            if not x:
                continue
            row = prods[i]
            for k, y in enumerate(b):
                if not y:
                    continue
                xy = x * y
                for j, c in enumerate(row[k]):
                    if c:
                        out[j] += xy * c
        return tuple(out)

    def add(self, a: Sequence[int], b: Sequence[int]) -> Vector:
        if len(a) != self.rank or len(b) != self.rank:
            raise DimensionMismatch("element length must equal rank")
        return tuple(x + y for x, y in zip(a, b))

    def basis_traces(self) -> Vector:
        """Tr(lambda(e_l)) for every basis element."""
        return tuple(sum(self.products[l][k][k] for k in range(self.rank)) for l in range(self.rank))


def unit_vector(n: int, i: int) -> Vector:
    return tuple(int(j == i) for j in range(n))


def _check_ring(table: MultiplicationTable, one: Vector) -> None:
    n = table.rank
    prods = table.products
    defect = kernels.assoc_defect(prods)
    if defect is not None:
        raise NotAssociative(*defect)
    for i in range(n):
        e_i = unit_vector(n, i)
        # one * e_i
        left = [0] * n
        # e_i * one
        right = [0] * n
        for k, a in enumerate(one):
            if a:
                for j in range(n):
                    left[j] += a * prods[k][i][j]
                    right[j] += a * prods[i][k][j]
        if tuple(left) != e_i:
            raise NotIdentity("left", i)
        if tuple(right) != e_i:
            raise NotIdentity("right", i)


def validate(table: MultiplicationTable, one_coords: Sequence[int]) -> FramedRing:
    """Check associativity and the identity, returning the framed ring."""
    return FramedRing(table, one_coords)


def lambda_rep(ring: FramedRing, a: Sequence[int]) -> IntMatrix:
    """Matrix of left multiplication by ``a``: column k holds the coordinates of a*e_k."""
    n = ring.rank
    if len(a) != n:
        raise DimensionMismatch("element length must equal rank")
    out = [[0] * n for _ in range(n)]
    for i, x in enumerate(a):
        if not x:
            continue
        for k, v in enumerate(ring.products[i]):
            for j, c in enumerate(v):
                if c:
                    out[j][k] += x * c
    return IntMatrix(out, n)


def trace_pairing(ring: FramedRing, a: Sequence[int], b: Sequence[int]) -> int:
    ab = ring.mul(a, b)
    return sum(x * t for x, t in zip(ab, ring.basis_traces()))


def gram_matrix(ring: FramedRing) -> IntMatrix:
    """Gram matrix of the trace pairing on the framing basis."""
    t = ring.basis_traces()
    rows = [[sum(c * tl for c, tl in zip(v, t)) for v in row] for row in ring.products]
    return IntMatrix(rows, ring.rank)


def discriminant(ring: FramedRing) -> int:
    return det(gram_matrix(ring))


def change_basis(ring: FramedRing, q: IntMatrix) -> FramedRing:
    """Re-express ``ring`` in the basis given by the columns of ``q``."""
    n = ring.rank
    if q.shape != (n, n):
        raise DimensionMismatch(f"change of basis must be {n}x{n}")
    q_inv = inverse_unimodular(q)  # raises NotUnimodular
    prods = ring.products
    qr = q.rows
    # t[a][k] = sum_i q[i][a] * (e_i e_k)
    t = []
    for a in range(n):
        row = []
        for k in range(n):
            acc = [0] * n
            for i in range(n):
                c = qr[i][a]
                if c:
                    for j, x in enumerate(prods[i][k]):
                        if x:
                            acc[j] += c * x
            row.append(acc)
        t.append(row)
    # s[a][b] = sum_k q[k][b] * t[a][k], then back to new coordinates
    new = []
    for a in range(n):
        row = []
        for b in range(n):
            acc = [0] * n
            for k in range(n):
                c = qr[k][b]
                if c:
                    for j, x in enumerate(t[a][k]):
                        if x:
                            acc[j] += c * x
            row.append(q_inv.apply(acc))
        new.append(tuple(row))
    return FramedRing(MultiplicationTable(n, tuple(new)), q_inv.apply(ring.one_coords))


def make_unital(ring: FramedRing) -> tuple[FramedRing, IntMatrix]:
    """Rebase so the first basis element is 1; also return the basis change used.

    The returned matrix ``P`` satisfies ``change_basis(ring, P) == new_ring``.
    """
    n = ring.rank
    if ring.unital:
        return ring, IntMatrix.identity(n)
    a = ring.one_coords
    if math.gcd(*a) != 1:
        raise InternalGcdViolation(f"coordinates of 1 have gcd {math.gcd(*a)}")
    completion = unimodular_completion(a)
    # rows of completion^-1 are the new basis vectors; change_basis wants columns
    p = inverse_unimodular(completion).T
    new = change_basis(ring, p)
    if not new.unital:
        raise InternalGcdViolation("rebased ring is not unitally framed")
    return new, p


def product_table(a: MultiplicationTable, b: MultiplicationTable) -> MultiplicationTable:
    """Component-wise multiplication on the concatenated basis of A x B."""
    n, m = a.rank, b.rank
    zero = (0,) * (n + m)
    rows = []
    for i in range(n):
        rows.append(tuple(a.products[i][k] + (0,) * m for k in range(n)) + (zero,) * m)
    for i in range(m):
        rows.append((zero,) * n + tuple((0,) * n + b.products[i][k] for k in range(m)))
    return MultiplicationTable(n + m, tuple(rows))


_Z = MultiplicationTable(1, (((1,),),))


def pad_with_Z(ring: FramedRing, m: int) -> FramedRing:
    """Z^m x A, each step in the basis ((1, e_1), (0, e_1), ..., (0, e_n))."""
    if m < 0:
        raise ValueError("padding count must be non-negative")
    for _ in range(m):
        n = ring.rank
        table = product_table(_Z, ring.table)
        one = (1,) + ring.one_coords
        # columns: g_0 + g_1, then g_1, ..., g_n
        p = [[int(i == j) for j in range(n + 1)] for i in range(n + 1)]
        p[1][0] = 1
        ring = change_basis(FramedRing(table, one), IntMatrix(p, n + 1))
    return ring


def format_table(ring: FramedRing) -> str:
    """Human-readable multiplication table, one product per line."""
    lines = []
    n = ring.rank
    for i in range(n):
        for k in range(n):
            terms = []
            for j, c in enumerate(ring.products[i][k]):
                if c:
                    terms.append(f"{c}*e{j}" if c != 1 else f"e{j}")
            rhs = " + ".join(terms).replace("+ -", "- ") if terms else "0"
            lines.append(f"e{i}*e{k} = {rhs}")
    return "\n".join(lines)


# -- JSON ring files ---------------------------------------------------------

_JSON_INT_LIMIT = 10**15
_INT_STR = re.compile(r"-?\d+\Z")


def encode_int(x: int) -> int | str:
    """JSON-safe integer: a number up to 15 digits, a decimal string beyond."""
    return x if -_JSON_INT_LIMIT < x < _JSON_INT_LIMIT else str(x)


def decode_int(x) -> int:
    if isinstance(x, bool):
        raise FormatError(f"expected an integer, got {x!r}")
    if isinstance(x, int):
        return x
    if isinstance(x, str) and _INT_STR.match(x):
        return int(x)
    raise FormatError(f"expected an integer or decimal string, got {x!r}")


def encode_matrix(m: IntMatrix) -> list[list[int | str]]:
    return [[encode_int(x) for x in row] for row in m.rows]


def decode_matrix(obj) -> IntMatrix:
    if not isinstance(obj, list) or not all(isinstance(r, list) for r in obj):
        raise FormatError("matrix must be a list of rows")
    try:
        return IntMatrix([[decode_int(x) for x in row] for row in obj])
    except DimensionMismatch as exc:
        raise FormatError(str(exc)) from exc


def ring_to_json(ring: FramedRing) -> dict:
    return {
        "rank": ring.rank,
        "one": [encode_int(x) for x in ring.one_coords],
        "table": [[[encode_int(x) for x in v] for v in row] for row in ring.products],
    }


def ring_from_json(obj) -> FramedRing:
    """Parse and validate. Shape problems raise FormatError; ring axioms fail loudly."""
    if not isinstance(obj, dict) or not {"rank", "one", "table"} <= obj.keys():
        raise FormatError('ring file needs "rank", "one" and "table"')
    n = decode_int(obj["rank"])
    one, table = obj["one"], obj["table"]
    if not isinstance(one, list) or not isinstance(table, list):
        raise FormatError('"one" and "table" must be arrays')
    try:
        prods = tuple(
            tuple(tuple(decode_int(x) for x in v) for v in row) for row in table
        )
        mt = MultiplicationTable(n, prods)
    except (TypeError, DimensionMismatch) as exc:
        raise FormatError(f"bad table shape: {exc}") from exc
    if len(one) != n:
        raise FormatError(f'"one" has length {len(one)}, rank is {n}')
    return FramedRing(mt, [decode_int(x) for x in one])


def dumps_ring(ring: FramedRing) -> str:
    return json.dumps(ring_to_json(ring)) + "\n"


def loads_ring(text: str) -> FramedRing:
    return ring_from_json(json.loads(text))


def save_ring(ring: FramedRing, path) -> None:
    with open(path, "w") as fh:
        fh.write(dumps_ring(ring))


def load_ring(path) -> FramedRing:
    with open(path) as fh:
        return loads_ring(fh.read())
