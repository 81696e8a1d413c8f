"""Deliberately naive reference implementations.

Nothing here calls the fast kernels for the quantity being checked. Size caps
are hard errors.
"""
from __future__ import annotations

from itertools import combinations, permutations

from .errors import DimensionMismatch, NotSkewSymmetric, NotSquare, TooLarge
from .exact_linalg import IntMatrix, adjugate, det, trace

MAX_LEIBNIZ = 9
MAX_MATCHING = 12
MAX_DPF_ENUM = 8
MAX_STEMBRIDGE = 8
MAX_LAPLACE = 16


def _perm_sign(p) -> int:
    inversions = sum(1 for i in range(len(p)) for j in range(i + 1, len(p)) if p[i] > p[j])
    return -1 if inversions % 2 else 1


def det_by_permutations(M: IntMatrix) -> int:
    """Leibniz formula: sum over S_n of sgn(s) * prod_i m[i][s(i)]."""
    if not M.is_square():
        raise NotSquare("det needs a square matrix")
    n = M.n_rows
    if n > MAX_LEIBNIZ:
        raise TooLarge(f"n = {n} > {MAX_LEIBNIZ}")
    rows = M.rows
    total = 0
    for p in permutations(range(n)):
        term = _perm_sign(p)
        for i in range(n):
            term *= rows[i][p[i]]
            if not term:
                break
        total += term
    return total


def det_by_minors(M: IntMatrix) -> int:
    """Laplace expansion along successive rows, memoized on the set of used columns."""
    if not M.is_square():
        raise NotSquare("det needs a square matrix")
    n = M.n_rows
    if n > MAX_LAPLACE:
        raise TooLarge(f"n = {n} > {MAX_LAPLACE}")
    rows = M.rows
    # minors[mask] = det of rows 0..popcount(mask)-1 restricted to the columns in mask
    minors = {0: 1}
    for r in range(n):
        nxt = {}
        for mask, value in minors.items():
            if not value:
                continue
            for c in range(n):
                bit = 1 << c
                if mask & bit or not rows[r][c]:
                    continue
                # sign: number of used columns to the right of c
                sign = -1 if bin(mask >> c).count("1") % 2 else 1
                new = mask | bit
                nxt[new] = nxt.get(new, 0) + sign * rows[r][c] * value
        minors = nxt
    return minors.get((1 << n) - 1, 0)


def perfect_matchings(items):
    """All perfect matchings of ``items`` as lists of sorted pairs."""
    items = list(items)
    if not items:
        yield []
        return
    if len(items) % 2:
        return
    first, rest = items[0], items[1:]
    for idx, partner in enumerate(rest):
        remaining = rest[:idx] + rest[idx + 1:]
        for m in perfect_matchings(remaining):
            yield [(first, partner)] + m


def crossings(matching) -> int:
    """Number of crossing pairs when the points are drawn on a line."""
    count = 0
    for (a, b), (c, d) in combinations(matching, 2):
        if a < c < b < d or c < a < d < b:
            count += 1
    return count


def pfaffian_by_matchings(M: IntMatrix) -> int:
    """Signed sum over perfect matchings with sign (-1)^crossings."""
    if not M.is_square():
        raise NotSquare("pfaffian needs a square matrix")
    if not M.is_skew_symmetric():
        raise NotSkewSymmetric("pfaffian needs M^T == -M")
    n = M.n_rows
    if n > MAX_MATCHING:
        raise TooLarge(f"n = {n} > {MAX_MATCHING}")
    if n % 2:
        return 0
    rows = M.rows
    total = 0
    for m in perfect_matchings(range(n)):
        term = -1 if crossings(m) % 2 else 1
        for i, j in m:
            term *= rows[i][j]
        total += term
    return total


def dpf_by_enumeration(B: IntMatrix) -> tuple[int, int]:
    """Literal double sum over even subsets J of {2..n} and matchings P on J.

    Returns ``(value, number_of_terms)``.
    """
    if not B.is_square():
        raise NotSquare("dpf needs a square matrix")
    n = B.n_rows
    if n > MAX_DPF_ENUM:
        raise TooLarge(f"n = {n} > {MAX_DPF_ENUM}")
    rows = B.rows
    others = range(1, n)
    value = 0
    terms = 0
    for size in range(0, n, 2):
        for J in combinations(others, size):
            rest = [k for k in others if k not in J]
            fixed = 1
            for k in rest:
                fixed *= rows[0][k]
            for P in perfect_matchings(J):
                term = fixed
                for i, j in P:
                    term *= rows[i][j]
                value += term
                terms += 1
    return value, terms


def _upper_skew(M: IntMatrix) -> IntMatrix:
    n = M.n_rows
    return IntMatrix(
        ([M[i, j] if i < j else (-M[j, i] if i > j else 0) for j in range(n)] for i in range(n)), n
    )


def _skew_mod2(M: IntMatrix) -> bool:
    n = M.n_rows
    # alternating mod 2: symmetric mod 2 with even diagonal
    return M.is_square() and all(
        (M[i, j] + M[j, i] if i != j else M[i, i]) % 2 == 0 for i in range(n) for j in range(i + 1)
    )


def stembridge_split_check(Bp: IntMatrix, Bpp: IntMatrix) -> bool:
    """pf(B' + B'') == sum_J pf(B'_J) pf(B''_{J^c})  (mod 2), J over even subsets."""
    if Bp.shape != Bpp.shape or not Bp.is_square():
        raise DimensionMismatch("need two square matrices of the same size")
    n = Bp.n_rows
    if n % 2:
        raise DimensionMismatch("size must be even")
    if n > MAX_STEMBRIDGE:
        raise TooLarge(f"n = {n} > {MAX_STEMBRIDGE}")
    if not (_skew_mod2(Bp) and _skew_mod2(Bpp)):
        raise NotSkewSymmetric("inputs must be skew-symmetric mod 2")
    sp, spp = _upper_skew(Bp), _upper_skew(Bpp)
    lhs = pfaffian_by_matchings(_upper_skew(Bp + Bpp)) % 2
    idx = range(n)
    rhs = 0
    for size in range(0, n + 1, 2):
        for J in combinations(idx, size):
            Jc = [k for k in idx if k not in J]
            rhs += pfaffian_by_matchings(sp.submatrix(J)) * pfaffian_by_matchings(spp.submatrix(Jc))
    return lhs == rhs % 2


def stembridge_pair(B: IntMatrix) -> tuple[IntMatrix, IntMatrix]:
    """The B', B'' whose sum is U - U^T mod 2 for the symmetrized tracelike B."""
    n = B.n_rows
    b = B.rows
    bp = [[0] * n for _ in range(n)]
    bpp = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            if i and j:
                bp[i][j] = b[i][j]
                bpp[i][j] = b[0][i] * b[0][j]
            else:
                bpp[i][j] = b[0][max(i, j)]
    return IntMatrix(bp, n), IntMatrix(bpp, n)


def uut_identity_check(M: IntMatrix) -> bool:
    """2 Tr(adj(M - M^T) M^T) == -n det(M - M^T) for even n."""
    if not M.is_square():
        raise NotSquare("need a square matrix")
    n = M.n_rows
    if n % 2:
        raise DimensionMismatch("identity holds for even n only")
    S = M - M.T
    return 2 * trace(adjugate(S) @ M.T) == -n * det(S)


def remark_counterexamples() -> list[tuple[IntMatrix, int, int]]:
    """Even-diagonal symmetric matrices with 4 not dividing n whose det is 2 or 3 mod 4."""
    a = IntMatrix([[2]])
    b = IntMatrix([[0, 1], [1, 0]])
    return [(a, 2, 2), (b, -1, 3), (IntMatrix.block_diag(a, b), -2, 2)]
