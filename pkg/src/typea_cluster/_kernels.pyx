# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled brute-force subset scans; same contract as ``_kernels_py``."""

from libc.stdlib cimport malloc, free

ctypedef unsigned long long u64


def maximal_independent_masks(list conflicts, u64 allowed):
    cdef Py_ssize_t k = len(conflicts)
    cdef u64 *conf = <u64 *> malloc(max(k, 1) * sizeof(u64))
    cdef int *bits = <int *> malloc(max(k, 1) * sizeof(int))
    cdef int nb = 0, t, b
    cdef u64 s, bit
    cdef bint ok
    out = []
    if conf == NULL or bits == NULL:
        free(conf)
        free(bits)
        raise MemoryError()
    try:
        for t in range(k):
            conf[t] = conflicts[t]
            if (allowed >> t) & 1:
                bits[nb] = t
                nb += 1
        s = allowed
        while True:
            ok = True
            for t in range(nb):
                b = bits[t]
                bit = (<u64> 1) << b
                if s & bit:
                    if conf[b] & s:
                        ok = False
                        break
                elif not (conf[b] & s):
                    ok = False
                    break
            if ok:
                out.append(s)
            if s == 0:
                break
            s = (s - 1) & allowed
    finally:
        free(conf)
        free(bits)
    out.sort()
    return out


def exact_one_masks(list cycles, int nbits):
    cdef Py_ssize_t nc = len(cycles)
    cdef u64 *cyc = <u64 *> malloc(max(nc, 1) * sizeof(u64))
    cdef u64 s, x, top
    cdef Py_ssize_t t
    cdef bint ok
    out = []
    if nbits < 0 or nbits > 40:
        free(cyc)
        raise ValueError("nbits must lie in [0, 40]")
    if cyc == NULL:
        raise MemoryError()
    try:
        for t in range(nc):
            cyc[t] = cycles[t]
        top = (<u64> 1) << nbits
        s = 0
        while s < top:
            ok = True
            for t in range(nc):
                x = s & cyc[t]
                if x == 0 or (x & (x - 1)):
                    ok = False
                    break
            if ok:
                out.append(s)
            s += 1
    finally:
        free(cyc)
    return out
