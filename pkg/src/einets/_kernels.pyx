# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled exact integer Gauss-Jordan kernels.

Works on int64 with overflow detection; on overflow the pure-Python
kernel is used instead so results are always exact.
"""
from libc.stdlib cimport malloc, free

from einets import _kernels_py

cdef extern from *:
    bint __builtin_mul_overflow(long long a, long long b, long long *res) nogil
    bint __builtin_sub_overflow(long long a, long long b, long long *res) nogil


from libc.limits cimport LLONG_MIN as _MIN


cdef inline long long _gcd(long long a, long long b) noexcept nogil:
    if a < 0:
        a = -a
    if b < 0:
        b = -b
    while b:
        a, b = b, a % b
    return a


cdef void _make_primitive(long long *row, int ncols) noexcept nogil:
    cdef long long g = 0
    cdef int j
    for j in range(ncols):
        if row[j]:
            g = _gcd(g, row[j])
            if g == 1:
                return
    if g > 1:
        for j in range(ncols):
            row[j] //= g


cdef int _eliminate(long long *a, int nrows, int ncols, int *pivots) noexcept nogil:
    """Returns the rank, or -1 on overflow."""
    cdef int r = 0, c, i, j, p
    cdef long long pv, f, t1, t2
    cdef long long tmp
    for c in range(ncols):
        if r == nrows:
            break
        p = -1
        for i in range(r, nrows):
            if a[i * ncols + c]:
                p = i
                break
        if p < 0:
            continue
        if p != r:
            for j in range(ncols):
                tmp = a[r * ncols + j]
                a[r * ncols + j] = a[p * ncols + j]
                a[p * ncols + j] = tmp
        pv = a[r * ncols + c]
        for i in range(nrows):
            if i == r:
                continue
            f = a[i * ncols + c]
            if not f:
                continue
            for j in range(ncols):
                if __builtin_mul_overflow(pv, a[i * ncols + j], &t1):
                    return -1
                if __builtin_mul_overflow(f, a[r * ncols + j], &t2):
                    return -1
                if __builtin_sub_overflow(t1, t2, &a[i * ncols + j]):
                    return -1
                if a[i * ncols + j] == _MIN:
                    return -1
            _make_primitive(&a[i * ncols], ncols)
        pivots[r] = c
        r += 1
    return r


_LIMIT = 1 << 62


def rref_key(rows):
    """Return the canonical primitive-integer RREF of the row span."""
    rows = [r for r in rows if any(r)]
    if not rows:
        return ()
    cdef int nrows = len(rows)
    cdef int ncols = len(rows[0])
    cdef long long *a = <long long *> malloc(nrows * ncols * sizeof(long long))
    cdef int *pivots = <int *> malloc(nrows * sizeof(int))
    cdef int i, j, rk
    try:
        for i in range(nrows):
            row = rows[i]
            for j in range(ncols):
                v = row[j]
                if v >= _LIMIT or v <= -_LIMIT:
                    return _kernels_py.rref_key(rows)
                a[i * ncols + j] = v
        rk = _eliminate(a, nrows, ncols, pivots)
        if rk < 0:
            return _kernels_py.rref_key(rows)
        out = []
        for i in range(rk):
            _make_primitive(&a[i * ncols], ncols)
            sign = -1 if a[i * ncols + pivots[i]] < 0 else 1
            out.append(tuple([sign * a[i * ncols + j] for j in range(ncols)]))
        return tuple(out)
    finally:
        free(a)
        free(pivots)


def rank(rows):
    return len(rref_key(rows))
