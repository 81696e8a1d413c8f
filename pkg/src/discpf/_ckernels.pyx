# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
# distutils: language = c++
"""Compiled hot kernels.

Same API as ``_pykernels``. Each kernel first tries a 64-bit path with explicit
overflow detection; on any overflow (or entries that do not fit in 64 bits) it
hands the original input to the pure-Python big-integer kernel.
"""
from cython.operator cimport dereference as deref
from libcpp.unordered_map cimport unordered_map
from libcpp.vector cimport vector
from libc.stdint cimport uint64_t

from discpf import _pykernels as _py

BACKEND = "cython"

cdef extern from *:
    """
    #include <climits>
    static inline int ck_mul(long long a, long long b, long long *r) {
        return __builtin_mul_overflow(a, b, r);
    }
    static inline int ck_add(long long a, long long b, long long *r) {
        return __builtin_add_overflow(a, b, r);
    }
    static inline int ck_sub(long long a, long long b, long long *r) {
        return __builtin_sub_overflow(a, b, r);
    }
    static inline int ck_ctz(unsigned long long x) { return __builtin_ctzll(x); }
    /* (a*akk - aik*akj) / prev, exact; returns nonzero if the result overflows. */
    static inline int ck_bareiss(long long a, long long akk, long long aik,
                                 long long akj, long long prev, long long *out) {
        __int128 t = (__int128)a * akk - (__int128)aik * akj;
        t /= prev;
        if (t > (__int128)LLONG_MAX || t < (__int128)LLONG_MIN) return 1;
        *out = (long long)t;
        return 0;
    }
    """
    int ck_mul(long long a, long long b, long long *r) nogil
    int ck_add(long long a, long long b, long long *r) nogil
    int ck_sub(long long a, long long b, long long *r) nogil
    int ck_ctz(unsigned long long x) nogil
    int ck_bareiss(long long a, long long akk, long long aik,
                   long long akj, long long prev, long long *out) nogil


cdef bint _load(rows, Py_ssize_t n_cols, vector[long long]& out):
    """Flatten ``rows`` into ``out``; False if any entry exceeds 64 bits."""
    cdef Py_ssize_t i = 0
    try:
        for row in rows:
            for x in row:
                out[i] = x
                i += 1
    except OverflowError:
        return False
    return True


# -- determinant -------------------------------------------------------------

cdef bint _det64(long long* a, int n, long long* result) noexcept nogil:
    cdef int k, i, j, r
    cdef long long sign = 1, prev = 1, akk, aik, tmp
    for k in range(n - 1):
        if a[k * n + k] == 0:
            r = k + 1
            while r < n and a[r * n + k] == 0:
                r += 1
            if r == n:
                result[0] = 0
                return True
            for j in range(n):
                tmp = a[k * n + j]
                a[k * n + j] = a[r * n + j]
                a[r * n + j] = tmp
            sign = -sign
        akk = a[k * n + k]
        for i in range(k + 1, n):
            aik = a[i * n + k]
            for j in range(k + 1, n):
                if ck_bareiss(a[i * n + j], akk, aik, a[k * n + j], prev, &a[i * n + j]):
                    return False
        prev = akk
    return not ck_mul(sign, a[n * n - 1], result)


def det(rows):
    cdef int n = len(rows)
    cdef long long result
    cdef bint ok
    if n == 0:
        return 1
    cdef vector[long long] a
    a.resize(n * n)
    if not _load(rows, n, a):
        return _py.det(rows)
    with nogil:
        ok = _det64(a.data(), n, &result)
    if not ok:
        return _py.det(rows)
    return result


# -- pfaffian ----------------------------------------------------------------

cdef long long _pf64(uint64_t mask, const long long* a, int n,
                     unordered_map[uint64_t, long long]& memo, bint* ovf) noexcept nogil:
    if mask == 0:
        return 1
    it = memo.find(mask)
    if it != memo.end():
        return deref(it).second
    cdef uint64_t low = mask & (~mask + 1)
    cdef int i = ck_ctz(low)
    cdef uint64_t rest = mask ^ low
    cdef uint64_t m = rest, bit
    cdef long long total = 0, x, sub, t
    cdef int sign = 1
    while m:
        bit = m & (~m + 1)
        x = a[i * n + ck_ctz(bit)]
        if x != 0:
            sub = _pf64(rest ^ bit, a, n, memo, ovf)
            if ovf[0]:
                return 0
            if sub != 0:
                if ck_mul(x, sub, &t):
                    ovf[0] = True
                    return 0
                if sign > 0:
                    if ck_add(total, t, &total):
                        ovf[0] = True
                        return 0
                elif ck_sub(total, t, &total):
                    ovf[0] = True
                    return 0
        sign = -sign
        m ^= bit
    memo[mask] = total
    return total


def pfaffian(rows):
    cdef int n = len(rows)
    cdef long long result
    cdef bint ovf = False
    cdef unordered_map[uint64_t, long long] memo
    if n % 2:
        return 0
    if n == 0:
        return 1
    if n > 63:
        return _py.pfaffian(rows)
    cdef vector[long long] a
    a.resize(n * n)
    if not _load(rows, n, a):
        return _py.pfaffian(rows)
    cdef uint64_t full = (<uint64_t>1 << n) - 1
    with nogil:
        result = _pf64(full, a.data(), n, memo, &ovf)
    if ovf:
        return _py.pfaffian(rows)
    return result


# -- discriminant pfaffian ---------------------------------------------------

cdef long long _dpf64(uint64_t mask, const long long* a, int n,
                      unordered_map[uint64_t, long long]& memo, bint* ovf) noexcept nogil:
    if mask == 0:
        return 1
    it = memo.find(mask)
    if it != memo.end():
        return deref(it).second
    cdef uint64_t low = mask & (~mask + 1)
    cdef int i = ck_ctz(low)
    cdef uint64_t rest = mask ^ low
    cdef uint64_t m = rest, bit
    cdef long long total = 0, x, sub, t
    x = a[i]
    if x != 0:
        sub = _dpf64(rest, a, n, memo, ovf)
        if ovf[0]:
            return 0
        if ck_mul(x, sub, &total):
            ovf[0] = True
            return 0
    while m:
        bit = m & (~m + 1)
        x = a[i * n + ck_ctz(bit)]
        if x != 0:
            sub = _dpf64(rest ^ bit, a, n, memo, ovf)
            if ovf[0]:
                return 0
            if ck_mul(x, sub, &t) or ck_add(total, t, &total):
                ovf[0] = True
                return 0
        m ^= bit
    memo[mask] = total
    return total


def dpf(rows):
    cdef int n = len(rows)
    cdef long long result
    cdef bint ovf = False
    cdef unordered_map[uint64_t, long long] memo
    if n <= 1:
        return 1
    if n > 63:
        return _py.dpf(rows)
    cdef vector[long long] a
    a.resize(n * n)
    if not _load(rows, n, a):
        return _py.dpf(rows)
    cdef uint64_t start = ((<uint64_t>1 << n) - 1) ^ 1
    with nogil:
        result = _dpf64(start, a.data(), n, memo, &ovf)
    if ovf:
        return _py.dpf(rows)
    return result


# -- matrix product ----------------------------------------------------------

cdef bint _matmul64(const long long* a, const long long* b, long long* c,
                    int p, int q, int r) noexcept nogil:
    cdef int i, j, k
    cdef long long acc, t
    for i in range(p):
        for j in range(r):
            acc = 0
            for k in range(q):
                if ck_mul(a[i * q + k], b[k * r + j], &t) or ck_add(acc, t, &acc):
                    return False
            c[i * r + j] = acc
    return True


def matmul(a, b):
    cdef int p = len(a)
    cdef int q = len(b)
    cdef int r = len(b[0]) if q else 0
    cdef bint ok
    if p == 0 or r == 0:
        return [[0] * r for _ in range(p)]
    if q == 0:
        return [[0] * r for _ in range(p)]
    cdef vector[long long] va
    va.resize(p * q)
    cdef vector[long long] vb
    vb.resize(q * r)
    cdef vector[long long] vc
    vc.resize(p * r)
    if not (_load(a, q, va) and _load(b, r, vb)):
        return _py.matmul(a, b)
    with nogil:
        ok = _matmul64(va.data(), vb.data(), vc.data(), p, q, r)
    if not ok:
        return _py.matmul(a, b)
    return [[vc[i * r + j] for j in range(r)] for i in range(p)]


# -- associativity -----------------------------------------------------------

cdef int _assoc64(const long long* P, int n, int* where) noexcept nogil:
    """0 = associative, 1 = defect at where[0..2], -1 = overflow.

    P[(i*n + k)*n + t] is coefficient t of e_i e_k.
    """
    cdef int i, j, k, l, t
    cdef long long c, x, s
    cdef vector[long long] left
    left.resize(n)
    cdef vector[long long] right
    right.resize(n)
    for i in range(n):
        for j in range(n):
            for k in range(n):
                for t in range(n):
                    left[t] = 0
                    right[t] = 0
                for l in range(n):
                    c = P[(i * n + j) * n + l]
                    if c != 0:
                        for t in range(n):
                            x = P[(l * n + k) * n + t]
                            if x != 0:
                                if ck_mul(c, x, &s) or ck_add(left[t], s, &left[t]):
                                    return -1
                    c = P[(j * n + k) * n + l]
                    if c != 0:
                        for t in range(n):
                            x = P[(i * n + l) * n + t]
                            if x != 0:
                                if ck_mul(c, x, &s) or ck_add(right[t], s, &right[t]):
                                    return -1
                for t in range(n):
                    if left[t] != right[t]:
                        where[0] = i
                        where[1] = j
                        where[2] = k
                        return 1
    return 0


def assoc_defect(products):
    cdef int n = len(products)
    cdef int where[3]
    cdef int status
    cdef vector[long long] P
    P.resize(n * n * n)
    cdef Py_ssize_t idx = 0
    try:
        for row in products:
            for vec in row:
                for x in vec:
                    P[idx] = x
                    idx += 1
    except OverflowError:
        return _py.assoc_defect(products)
    with nogil:
        status = _assoc64(P.data(), n, where)
    if status < 0:
        return _py.assoc_defect(products)
    if status == 1:
        return (where[0], where[1], where[2])
    return None
