"""Example rings and seeded random corpora of rings of finite rank."""
from __future__ import annotations

import random
from fractions import Fraction
from typing import Sequence

from .errors import NotAGroup, NotMonic
from .exact_linalg import IntMatrix
from .ring_core import FramedRing, MultiplicationTable, change_basis, product_table, unit_vector


def monogenic_ring(coeffs: Sequence[int]) -> FramedRing:
    """Z[x]/(f) in the basis 1, x, ..., x^(n-1).

    ``coeffs[k]`` is the coefficient of x^k; the last one must be 1.
    """
    coeffs = [int(c) for c in coeffs]
    n = len(coeffs) - 1
    if n < 1 or coeffs[-1] != 1:
        raise NotMonic(f"need a monic polynomial of degree >= 1, got {coeffs}")
    # powers[p] = coordinates of x^p reduced mod f, for p < 2n - 1
    powers = [unit_vector(n, p) for p in range(n)]
    for p in range(n, 2 * n - 1):
        prev = powers[-1]
        # x * prev: shift up, then replace x^n by -(c_0 + ... + c_{n-1} x^{n-1})
        top = prev[-1]
        shifted = (0,) + prev[:-1]
        powers.append(tuple(s - top * coeffs[j] for j, s in enumerate(shifted)))
    table = tuple(tuple(powers[i + k] for k in range(n)) for i in range(n))
    return FramedRing(MultiplicationTable(n, table), unit_vector(n, 0))


def quadratic_ring(b: int, c: int) -> FramedRing:
    """Z[x]/(x^2 - b x + c) in the basis (1, e); its discriminant is b^2 - 4c."""
    return monogenic_ring([c, -b, 1])


def sqrt_ring(d: int) -> FramedRing:
    """Z[e] with e^2 = d, basis (1, e)."""
    return quadratic_ring(0, -d)


def matrix_ring(m: int) -> FramedRing:
    """M_m(Z) in the matrix-unit basis E_11, E_12, ..., E_mm (row-major).

    This framing is not unital for m > 1: 1 = sum of the E_ii.
    """
    if m < 1:
        raise ValueError("matrix size must be positive")
    n = m * m
    zero = (0,) * n
    rows = []
    for a in range(m):
        for b in range(m):
            row = []
            for c in range(m):
                for d in range(m):
                    # E_ab E_cd = [b == c] E_ad
                    row.append(unit_vector(n, a * m + d) if b == c else zero)
            rows.append(tuple(row))
    one = tuple(int(i % (m + 1) == 0) for i in range(n))
    return FramedRing(MultiplicationTable(n, tuple(rows)), one)


def _qmul(p, q):
    a1, b1, c1, d1 = p
    a2, b2, c2, d2 = q
    return (
        a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
        a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
        a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
        a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
    )


def hurwitz_quaternions() -> FramedRing:
    """Hurwitz order in the basis 1, i, j, w with w = (-1 + i + j + k)/2."""
    h = Fraction(1, 2)
    basis = [(1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (-h, h, h, h)]

    def coords(q):
        t, x, y, z = q
        # q = a + b i + c j + d w  =>  d = 2z, a = t + z, b = x - z, c = y - z
        out = (t + z, x - z, y - z, 2 * z)
        assert all(v.denominator == 1 for v in map(Fraction, out))
        return tuple(int(v) for v in out)

    table = tuple(tuple(coords(_qmul(p, q)) for q in basis) for p in basis)
    return FramedRing(MultiplicationTable(4, table), unit_vector(4, 0))


def direct_product(a: FramedRing, b: FramedRing) -> FramedRing:
    """A x B on the concatenated basis, with 1 = (1_A, 1_B)."""
    return FramedRing(product_table(a.table, b.table), a.one_coords + b.one_coords)


def check_group(cayley: Sequence[Sequence[int]]) -> int:
    """Validate a Cayley table (``cayley[g][h]`` = index of g*h); return the identity index."""
    m = len(cayley)
    if m == 0:
        raise NotAGroup("empty table")
    if any(len(row) != m for row in cayley):
        raise NotAGroup("table is not square")
    elems = set(range(m))
    for g, row in enumerate(cayley):
        if set(row) != elems:
            raise NotAGroup(f"row {g} is not a permutation of the elements")
        if {cayley[h][g] for h in range(m)} != elems:
            raise NotAGroup(f"column {g} is not a permutation of the elements")
    ids = [e for e in range(m) if all(cayley[e][g] == g and cayley[g][e] == g for g in range(m))]
    if not ids:
        raise NotAGroup("no identity element")
    for g in range(m):
        for h in range(m):
            gh = cayley[g][h]
            for k in range(m):
                if cayley[gh][k] != cayley[g][cayley[h][k]]:
                    raise NotAGroup(f"not associative at ({g}, {h}, {k})")
    return ids[0]


def group_ring(cayley: Sequence[Sequence[int]]) -> FramedRing:
    """Z[G] with basis the group elements, e_g e_h = e_{gh}."""
    e = check_group(cayley)
    m = len(cayley)
    table = tuple(tuple(unit_vector(m, cayley[g][h]) for h in range(m)) for g in range(m))
    return FramedRing(MultiplicationTable(m, table), unit_vector(m, e))


# -- small groups ------------------------------------------------------------

def _table_from_elements(elems, op):
    index = {x: i for i, x in enumerate(elems)}
    return [[index[op(x, y)] for y in elems] for x in elems]


def cyclic_cayley(m: int) -> list[list[int]]:
    return [[(g + h) % m for h in range(m)] for g in range(m)]


def abelian_cayley(*orders: int) -> list[list[int]]:
    """Z/o_1 x ... x Z/o_r."""
    elems = [()]
    for o in orders:
        elems = [e + (x,) for e in elems for x in range(o)]
    return _table_from_elements(
        elems, lambda x, y: tuple((a + b) % o for a, b, o in zip(x, y, orders))
    )


def dihedral_cayley(m: int) -> list[list[int]]:
    """Dihedral group of order 2m as pairs (rotation, flip)."""
    elems = [(r, s) for s in range(2) for r in range(m)]

    def op(x, y):
        r1, s1 = x
        r2, s2 = y
        return ((r1 + (-r2 if s1 else r2)) % m, s1 ^ s2)

    return _table_from_elements(elems, op)


def quaternion_group_cayley() -> list[list[int]]:
    units = [(1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)]
    elems = units + [tuple(-x for x in u) for u in units]
    return _table_from_elements(elems, _qmul)


def symmetric_cayley(k: int) -> list[list[int]]:
    from itertools import permutations

    elems = list(permutations(range(k)))
    return _table_from_elements(elems, lambda p, q: tuple(p[q[i]] for i in range(k)))


NAMED_GROUPS = {
    "trivial": lambda: cyclic_cayley(1),
    "C2": lambda: cyclic_cayley(2),
    "C3": lambda: cyclic_cayley(3),
    "C4": lambda: cyclic_cayley(4),
    "C5": lambda: cyclic_cayley(5),
    "C6": lambda: cyclic_cayley(6),
    "C7": lambda: cyclic_cayley(7),
    "C8": lambda: cyclic_cayley(8),
    "C2xC2": lambda: abelian_cayley(2, 2),
    "C2xC4": lambda: abelian_cayley(2, 4),
    "C2xC2xC2": lambda: abelian_cayley(2, 2, 2),
    "S3": lambda: symmetric_cayley(3),
    "D4": lambda: dihedral_cayley(4),
    "Q8": quaternion_group_cayley,
}


# -- random corpora ----------------------------------------------------------

def random_unimodular(rng: random.Random, n: int, steps: int | None = None, bound: int = 2) -> IntMatrix:
    """Product of elementary matrices (shears, swaps, sign flips)."""
    q = [[int(i == j) for j in range(n)] for i in range(n)]
    if n == 1:
        if rng.random() < 0.5:
            q[0][0] = -1
        return IntMatrix(q, 1)
    for _ in range(2 * n if steps is None else steps):
        kind = rng.random()
        i, j = rng.sample(range(n), 2)
        if kind < 0.7:
            c = rng.choice([x for x in range(-bound, bound + 1) if x])
            # column op: col_j += c * col_i
            for row in q:
                row[j] += c * row[i]
        elif kind < 0.9:
            for row in q:
                row[i], row[j] = row[j], row[i]
        else:
            for row in q:
                row[i] = -row[i]
    return IntMatrix(q, n)


def _random_factor(rng: random.Random, budget: int) -> FramedRing:
    kinds = ["quadratic", "monogenic", "group"]
    if budget >= 4:
        kinds.append("matrix")
    kind = rng.choice(kinds)
    if kind == "quadratic" and budget >= 2:
        return quadratic_ring(rng.randint(-10, 10), rng.randint(-10, 10))
    if kind == "matrix":
        m = rng.choice([m for m in (1, 2, 3) if m * m <= budget])
        return matrix_ring(m)
    if kind == "group":
        names = [k for k, f in NAMED_GROUPS.items() if len(f()) <= budget]
        return group_ring(NAMED_GROUPS[rng.choice(names)]())
    deg = rng.randint(1, min(budget, 6))
    return monogenic_ring([rng.randint(-5, 5) for _ in range(deg)] + [1])


def random_ring(seed: int, max_rank: int = 12, rebase: bool = True) -> FramedRing:
    """Deterministic random ring of rank <= max_rank.

    Built from closed constructions (quadratic, monogenic, matrix and group
    rings, and direct products of them), then moved to a random basis. With
    ``rebase=False`` the same draw is returned before the final basis change.
    """
    if max_rank < 1:
        raise ValueError("max_rank must be positive")
    rng = random.Random(seed)
    ring = _random_factor(rng, max_rank)
    while ring.rank < max_rank and rng.random() < 0.35:
        ring = direct_product(ring, _random_factor(rng, max_rank - ring.rank))
    q = random_unimodular(rng, ring.rank)
    return change_basis(ring, q) if rebase else ring


def random_tracelike(rng: random.Random, n: int, bound: int = 9) -> IntMatrix:
    """Random tracelike n x n matrix, no ring realization attempted.

    b_1i, c_i and the off-diagonal b_ij are uniform in [-bound, bound];
    b_11 = n and b_ii = b_1i^2 + 2 c_i.
    """
    rows = [[0] * n for _ in range(n)]
    rows[0][0] = n
    for i in range(1, n):
        b1i = rng.randint(-bound, bound)
        rows[0][i] = rows[i][0] = b1i
        rows[i][i] = b1i * b1i + 2 * rng.randint(-bound, bound)
    for i in range(1, n):
        for j in range(i + 1, n):
            rows[i][j] = rows[j][i] = rng.randint(-bound, bound)
    return IntMatrix(rows, n)
