# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels: Bareiss determinant, Dodgson condensation, disjoint path
family counting. Same contracts as ``_pykernels``."""

from libc.math cimport log2
from libc.stdint cimport int64_t, uint64_t
from libc.stdlib cimport malloc, free

cdef extern from *:
    ctypedef long long int128 "__int128"

# Every Bareiss intermediate is a minor of the input, so when the Hadamard
# bound is below 2**60 the int64 path with 128-bit products cannot overflow.
# The bound is accumulated in log2 space; 2 bits of slack absorb rounding.
cdef double LOG2_LIMIT = 60.0


cdef bint _load_small(object rows, Py_ssize_t n, int64_t* buf):
    """Copy ``rows`` into ``buf``; False if any entry or the bound is too big."""
    cdef Py_ssize_t i, j
    cdef double sq, total = 0.0
    cdef int64_t x
    for i in range(n):
        row = rows[i]
        sq = 0.0
        for j in range(n):
            try:
                x = row[j]
            except OverflowError:
                return False
            if x > 0x3FFFFFFFFFFFFFFF or x < -0x3FFFFFFFFFFFFFFF:
                return False
            buf[i * n + j] = x
            sq += (<double>x) * (<double>x)
        if sq > 1.0:
            total += 0.5 * log2(sq)
            if total >= LOG2_LIMIT:
                return False
    return True


cdef int64_t _bareiss_small(int64_t* a, int n):
    cdef int k, i, j, p
    cdef int64_t sign = 1, prev = 1, pivot, lead, tmp
    for k in range(n - 1):
        if a[k * n + k] == 0:
            p = k + 1
            while p < n and a[p * n + k] == 0:
                p += 1
            if p == n:
                return 0
            for j in range(n):
                tmp = a[k * n + j]
                a[k * n + j] = a[p * n + j]
                a[p * n + j] = tmp
            sign = -sign
        pivot = a[k * n + k]
        for i in range(k + 1, n):
            lead = a[i * n + k]
            for j in range(k + 1, n):
                a[i * n + j] = <int64_t>(
                    (<int128>a[i * n + j] * pivot - <int128>lead * a[k * n + j]) / prev
                )
        prev = pivot
    return sign * a[(n - 1) * n + n - 1]


cdef object _bareiss_object(list a, Py_ssize_t n):
    cdef Py_ssize_t k, i, j, p
    cdef int sign = 1
    cdef object prev = 1, pivot, lead
    cdef list row_k, row_i
    for k in range(n - 1):
        if a[k][k] == 0:
            p = k + 1
            while p < n and a[p][k] == 0:
                p += 1
            if p == n:
                return 0
            a[k], a[p] = a[p], a[k]
            sign = -sign
        row_k = a[k]
        pivot = row_k[k]
        for i in range(k + 1, n):
            row_i = a[i]
            lead = row_i[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * pivot - lead * row_k[j]) // prev
        prev = pivot
    return sign * a[n - 1][n - 1]


def det_bareiss(rows):
    cdef Py_ssize_t n = len(rows)
    cdef int64_t* buf
    cdef int64_t res
    cdef bint small
    if n == 1:
        return rows[0][0]
    buf = <int64_t*>malloc(n * n * sizeof(int64_t))
    if buf == NULL:
        raise MemoryError()
    try:
        small = _load_small(rows, n, buf)
        if small:
            res = _bareiss_small(buf, <int>n)
    finally:
        free(buf)
    if small:
        return res
    return _bareiss_object([list(r) for r in rows], n)


def det_condensation(rows):
    cdef Py_ssize_t n = len(rows)
    cdef Py_ssize_t size, i, j
    cdef list prev, cur, nxt, out
    cdef object d, q, r
    if n == 1:
        return rows[0][0]
    prev = [[1] * (n + 1) for _ in range(n + 1)]
    cur = [list(row) for row in rows]
    size = n
    while size > 1:
        nxt = []
        for i in range(size - 1):
            out = []
            for j in range(size - 1):
                d = prev[i + 1][j + 1]
                if d == 0:
                    return None
                q, r = divmod(cur[i][j] * cur[i + 1][j + 1] - cur[i][j + 1] * cur[i + 1][j], d)
                if r:
                    raise ArithmeticError("inexact condensation step")
                out.append(q)
            nxt.append(out)
        prev, cur = cur, nxt
        size -= 1
    return cur[0][0]


cdef uint64_t _walk(uint64_t** fam, Py_ssize_t* sizes, Py_ssize_t level,
                    Py_ssize_t k, uint64_t used):
    cdef uint64_t total = 0
    cdef Py_ssize_t t
    cdef uint64_t* cand = fam[level]
    if level == k - 1:
        for t in range(sizes[level]):
            if not (cand[t] & used):
                total += 1
        return total
    for t in range(sizes[level]):
        if not (cand[t] & used):
            total += _walk(fam, sizes, level + 1, k, used | cand[t])
    return total


def count_disjoint(families):
    cdef Py_ssize_t k = len(families)
    cdef Py_ssize_t a, t
    cdef uint64_t** fam
    cdef Py_ssize_t* sizes
    cdef uint64_t total
    if k == 0:
        return 1
    for f in families:
        for m in f:
            if m >> 64:
                from pascaldet._pykernels import count_disjoint as slow
                return slow(families)
    fam = <uint64_t**>malloc(k * sizeof(uint64_t*))
    sizes = <Py_ssize_t*>malloc(k * sizeof(Py_ssize_t))
    if fam == NULL or sizes == NULL:
        free(fam)
        free(sizes)
        raise MemoryError()
    for a in range(k):
        fam[a] = NULL
    try:
        for a in range(k):
            sizes[a] = len(families[a])
            fam[a] = <uint64_t*>malloc((sizes[a] + 1) * sizeof(uint64_t))
            if fam[a] == NULL:
                raise MemoryError()
            for t in range(sizes[a]):
                fam[a][t] = families[a][t]
        total = _walk(fam, sizes, 0, k, 0)
    finally:
        for a in range(k):
            free(fam[a])
        free(fam)
        free(sizes)
    return int(total)
