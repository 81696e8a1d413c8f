"""Pure-Python hot kernels.

Every kernel takes plain lists of lists of ints and returns ints (or lists).
Input validation (squareness, skew-symmetry) is the caller's job. The compiled
module ``_ckernels`` exposes exactly the same functions.
"""

BACKEND = "python"


def det(rows):
    """Bareiss fraction-free determinant. Pivot = first nonzero in column."""
    n = len(rows)
    if n == 0:
        return 1
    a = [list(r) for r in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k] != 0:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        rk = a[k]
        akk = rk[k]
        for i in range(k + 1, n):
            ri = a[i]
            aik = ri[k]
            for j in range(k + 1, n):
                ri[j] = (ri[j] * akk - aik * rk[j]) // prev
        prev = akk
    return sign * a[n - 1][n - 1]


def pfaffian(rows):
    """Expansion along the first surviving row, memoized on the index bitmask."""
    n = len(rows)
    if n % 2:
        return 0
    memo = {0: 1}

    def pf(mask):
        hit = memo.get(mask)
        if hit is not None:
            return hit
        low = mask & -mask
        row = rows[low.bit_length() - 1]
        rest = mask ^ low
        total = 0
        sign = 1
        m = rest
        while m:
            bit = m & -m
            x = row[bit.bit_length() - 1]
            if x:
                sub = pf(rest ^ bit)
                if sub:
                    total += x * sub if sign > 0 else -x * sub
            sign = -sign
            m ^= bit
        memo[mask] = total
        return total

    return pf((1 << n) - 1)


def dpf(rows):
    """Discriminant pfaffian via the involution recursion on {1..n-1} (0-indexed).

    f(S) = b[0][i] f(S - i) + sum_j b[i][j] f(S - i - j), with i = min S.
    """
    n = len(rows)
    if n == 0:
        return 1
    first = rows[0]
    memo = {0: 1}

    def f(mask):
        hit = memo.get(mask)
        if hit is not None:
            return hit
        low = mask & -mask
        i = low.bit_length() - 1
        rest = mask ^ low
        row = rows[i]
        total = first[i] * f(rest) if first[i] else 0
        m = rest
        while m:
            bit = m & -m
            x = row[bit.bit_length() - 1]
            if x:
                total += x * f(rest ^ bit)
            m ^= bit
        memo[mask] = total
        return total

    return f(((1 << n) - 1) ^ 1)


def matmul(a, b):
    cols = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col)) for col in cols] for row in a]


def assoc_defect(products):
    """First (i, j, k) with (e_i e_j) e_k != e_i (e_j e_k), or None.

    ``products[i][k]`` is the coefficient vector of e_i e_k.
    """
    n = len(products)
    rng = range(n)
    # structure constants are usually sparse
    sparse = [[[(t, x) for t, x in enumerate(v) if x] for v in row] for row in products]
    for i in rng:
        si = sparse[i]
        for j in rng:
            eij = si[j]
            sj = sparse[j]
            for k in rng:
                left = [0] * n
                for l, c in eij:
                    for t, x in sparse[l][k]:
                        left[t] += c * x
                right = [0] * n
                for l, c in sj[k]:
                    for t, x in si[l]:
                        right[t] += c * x
                if left != right:
                    return (i, j, k)
    return None
