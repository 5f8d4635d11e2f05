# cython: language_level=3
# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled integer kernels for the volume-set search.

Same contract as `_kernels_py`, with C int64 arithmetic.  The dispatcher
in `_backend` verifies that every intermediate value fits in an int64 (and
that the oracle's flag array stays small) before routing calls here, so
these loops never need overflow checks of their own.
"""

from libc.stdlib cimport calloc, free, malloc


cdef inline long long _floor_div(long long n, long long a) nogil:
    # a > 0; C division truncates toward zero, adjust to floor
    cdef long long q = n / a
    if n % a != 0 and n < 0:
        q -= 1
    return q


def enumerate_classes(a, w, long long L, int g):
    """Map each |T| over the residue/shift classes to its first witness."""
    cdef Py_ssize_t s = len(a)
    cdef Py_ssize_t i, k
    cdef long long base = 0
    cdef long long T, key
    cdef int nonzero = 0
    cdef int m, lo, hi
    out = {}
    if s == 0:
        for m in range(2 - 2 * g, 2 * g - 1):
            T = m * L
            key = -T if T < 0 else T
            pykey = key
            if pykey not in out:
                out[pykey] = ((), m)
        return out
    cdef long long *av = <long long *> malloc(s * sizeof(long long))
    cdef long long *wv = <long long *> malloc(s * sizeof(long long))
    cdef long long *rv = <long long *> malloc(s * sizeof(long long))
    if av == NULL or wv == NULL or rv == NULL:
        free(av)
        free(wv)
        free(rv)
        raise MemoryError()
    for i in range(s):
        av[i] = a[i]
        wv[i] = w[i]
        rv[i] = 0
    try:
        while True:
            lo = 2 - 2 * g - nonzero
            hi = 2 * g - 2
            for m in range(lo, hi + 1):
                T = base + m * L
                key = -T if T < 0 else T
                pykey = key
                if pykey not in out:
                    out[pykey] = (tuple([rv[k] for k in range(s)]), m)
            i = s - 1
            while i >= 0:
                if rv[i] + 1 < av[i]:
                    rv[i] += 1
                    base += wv[i]
                    if rv[i] == 1:
                        nonzero += 1
                    break
                else:
                    base -= wv[i] * rv[i]
                    if rv[i] > 0:
                        nonzero -= 1
                    rv[i] = 0
                    i -= 1
            if i < 0:
                break
    finally:
        free(av)
        free(wv)
        free(rv)
    return out


def brute_force_classes(a, w, long long L, int g, int span):
    """Raw tuple search over n_i windows; returns the set of |T| values."""
    cdef Py_ssize_t s = len(a)
    cdef Py_ssize_t i
    cdef int spread = 2 * g - 2
    cdef long long sumw = 0, sumfl = 0, sumce = 0
    cdef long long T, key, nlo, nhi, n, newfl, newce, rem, maxT
    out = set()
    if s == 0:
        for n in range(-spread, spread + 1):
            T = -n * L
            out.add(-T if T < 0 else T)
        return out
    maxT = L * (2 * span * <long long> s + 2 * g - 2)
    cdef unsigned char *seen = <unsigned char *> calloc(<size_t> (maxT + 1), 1)
    cdef long long *av = <long long *> malloc(s * sizeof(long long))
    cdef long long *wv = <long long *> malloc(s * sizeof(long long))
    cdef long long *nv = <long long *> malloc(s * sizeof(long long))
    cdef long long *flv = <long long *> malloc(s * sizeof(long long))
    cdef long long *cev = <long long *> malloc(s * sizeof(long long))
    cdef long long *lov = <long long *> malloc(s * sizeof(long long))
    cdef long long *hiv = <long long *> malloc(s * sizeof(long long))
    if (seen == NULL or av == NULL or wv == NULL or nv == NULL
            or flv == NULL or cev == NULL or lov == NULL or hiv == NULL):
        free(seen); free(av); free(wv); free(nv)
        free(flv); free(cev); free(lov); free(hiv)
        raise MemoryError()
    for i in range(s):
        av[i] = a[i]
        wv[i] = w[i]
        lov[i] = -span * av[i]
        hiv[i] = span * av[i]
        nv[i] = lov[i]
        flv[i] = -span
        cev[i] = -span
        sumw += wv[i] * nv[i]
        sumfl += flv[i]
        sumce += cev[i]
    try:
        while True:
            nlo = sumfl - spread
            nhi = sumce + spread
            T = sumw - nlo * L
            for n in range(nlo, nhi + 1):
                key = -T if T < 0 else T
                seen[key] = 1
                T -= L
            i = s - 1
            while i >= 0:
                if nv[i] < hiv[i]:
                    nv[i] += 1
                    sumw += wv[i]
                    newfl = _floor_div(nv[i], av[i])
                    rem = nv[i] - newfl * av[i]
                    newce = newfl + (1 if rem != 0 else 0)
                    sumfl += newfl - flv[i]
                    flv[i] = newfl
                    sumce += newce - cev[i]
                    cev[i] = newce
                    break
                else:
                    sumw += wv[i] * (lov[i] - nv[i])
                    nv[i] = lov[i]
                    sumfl += (-span) - flv[i]
                    flv[i] = -span
                    sumce += (-span) - cev[i]
                    cev[i] = -span
                    i -= 1
            if i < 0:
                break
        for T in range(maxT + 1):
            if seen[T]:
                out.add(T)
    finally:
        free(seen); free(av); free(wv); free(nv)
        free(flv); free(cev); free(lov); free(hiv)
    return out
