# cython: language_level=3, boundscheck=False, wraparound=False
"""Word-sized compiled kernels mirroring _kernels_py.

Both kernels raise OverflowError whenever an input or intermediate value
might not fit a 64-bit word; the dispatcher in ``kernels`` catches that and
falls back to the unbounded pure-Python implementations, so results are
always exact.
"""

from libc.limits cimport LLONG_MIN
from libc.stdlib cimport free, malloc, qsort

cdef extern from *:
    bint __builtin_add_overflow(long long, long long, long long*)
    bint __builtin_sub_overflow(long long, long long, long long*)
    bint __builtin_mul_overflow(long long, long long, long long*)


cdef struct FPair:
    long long f
    long long idx


cdef int _fpair_cmp(const void* a, const void* b) noexcept nogil:
    cdef FPair* x = <FPair*> a
    cdef FPair* y = <FPair*> b
    if x.f < y.f:
        return -1
    if x.f > y.f:
        return 1
    # tie-break on original index: qsort is not stable on its own
    if x.idx < y.idx:
        return -1
    if x.idx > y.idx:
        return 1
    return 0


def pgroup_sweep(fs, es):
    """Sorted carry sweep over (f, e) valuation pairs; see _kernels_py."""
    cdef Py_ssize_t n = len(fs)
    if len(es) != n:
        raise ValueError("fs and es must have equal length")
    if n == 0:
        return []
    cdef FPair* pairs = <FPair*> malloc(n * sizeof(FPair))
    cdef long long* evals = <long long*> malloc(n * sizeof(long long))
    if pairs == NULL or evals == NULL:
        free(pairs); free(evals)
        raise MemoryError()
    cdef Py_ssize_t i
    cdef long long carry = 0, f, e
    try:
        for i in range(n):
            pairs[i].f = fs[i]
            pairs[i].idx = i
            evals[i] = es[i]
        qsort(pairs, n, sizeof(FPair), _fpair_cmp)
        out = []
        for i in range(n):
            if __builtin_add_overflow(pairs[i].f, carry, &f):
                raise OverflowError("carry overflow")
            e = evals[pairs[i].idx]
            if e > f:
                if __builtin_add_overflow(carry, e - f, &carry):
                    raise OverflowError("carry overflow")
                out.append(f)
            else:
                out.append(e)
        return out
    finally:
        free(pairs)
        free(evals)


cdef inline long long _llabs(long long v) noexcept nogil:
    return -v if v < 0 else v


cdef long long _gcd_ll(long long a, long long b) noexcept nogil:
    cdef long long t
    a = _llabs(a)
    b = _llabs(b)
    while b:
        t = a % b
        a = b
        b = t
    return a


def snf_diagonal(rows, cols, entries):
    """Smith normal form diagonal for word-sized matrices; see _kernels_py."""
    cdef Py_ssize_t nr = rows, nc = cols
    if len(entries) != nr * nc:
        raise ValueError("entry count does not match dimensions")
    cdef Py_ssize_t k = nr if nr < nc else nc
    if k == 0:
        return []
    cdef long long* m = <long long*> malloc(nr * nc * sizeof(long long))
    if m == NULL:
        raise MemoryError()
    cdef Py_ssize_t t, i, j, pi, pj
    cdef long long piv, q, v, a, best, prod, g, lcm
    cdef bint dirty, found, changed
    try:
        for i in range(nr * nc):
            m[i] = entries[i]
            if m[i] == LLONG_MIN:
                raise OverflowError("entry at word-size boundary")
        for t in range(k):
            while True:
                # smallest-magnitude nonzero pivot in the working submatrix
                found = False
                best = 0
                pi = pj = t
                for i in range(t, nr):
                    for j in range(t, nc):
                        v = m[i * nc + j]
                        if v != 0:
                            a = _llabs(v)
                            if not found or a < best:
                                found = True
                                best = a
                                pi = i
                                pj = j
                if not found:
                    break
                if pi != t:
                    for j in range(nc):
                        v = m[t * nc + j]
                        m[t * nc + j] = m[pi * nc + j]
                        m[pi * nc + j] = v
                if pj != t:
                    for i in range(nr):
                        v = m[i * nc + t]
                        m[i * nc + t] = m[i * nc + pj]
                        m[i * nc + pj] = v
                piv = m[t * nc + t]
                dirty = False
                for i in range(t + 1, nr):
                    q = m[i * nc + t] // piv
                    if q != 0:
                        for j in range(t, nc):
                            if __builtin_mul_overflow(q, m[t * nc + j], &prod):
                                raise OverflowError("entry overflow")
                            if __builtin_sub_overflow(m[i * nc + j], prod, &m[i * nc + j]):
                                raise OverflowError("entry overflow")
                    if m[i * nc + t] != 0:
                        dirty = True
                for j in range(t + 1, nc):
                    q = m[t * nc + j] // piv
                    if q != 0:
                        for i in range(nr):
                            if __builtin_mul_overflow(q, m[i * nc + t], &prod):
                                raise OverflowError("entry overflow")
                            if __builtin_sub_overflow(m[i * nc + j], prod, &m[i * nc + j]):
                                raise OverflowError("entry overflow")
                    if m[t * nc + j] != 0:
                        dirty = True
                if not dirty:
                    break
        diag = []
        for t in range(k):
            diag.append(_llabs(m[t * nc + t]))
        changed = True
        while changed:
            changed = False
            for t in range(k - 1):
                a = diag[t]
                v = diag[t + 1]
                if a == 0 and v == 0:
                    continue
                if a != 0 and v % a == 0:
                    continue
                g = _gcd_ll(a, v)
                if g == 0:
                    lcm = 0
                else:
                    if __builtin_mul_overflow(a // g, v, &lcm):
                        raise OverflowError("lcm overflow")
                diag[t] = g
                diag[t + 1] = lcm
                changed = True
        return diag
    finally:
        free(m)
