# cython: boundscheck=False, wraparound=False, language_level=3
"""Compiled subset-OR sweep over word-packed cover masks.

Mirrors _sweep_fallback.sweep with the target mask split into 64-bit words.
kernel.py packs the masks and unpacks the results, so the two paths stay
interchangeable.
"""

import numpy as np

cimport numpy as cnp

cdef extern from *:
    int __builtin_ctzll(unsigned long long) nogil
    int __builtin_popcountll(unsigned long long) nogil


def sweep(cnp.uint64_t[:, ::1] cover, Py_ssize_t target_size):
    cdef Py_ssize_t P = cover.shape[0]
    cdef Py_ssize_t W = cover.shape[1]
    cdef Py_ssize_t size = (<Py_ssize_t>1) << P
    table_arr = np.zeros((size, W), dtype=np.uint64)
    best_arr = np.full(P + 1, target_size + 1, dtype=np.int64)
    arg_arr = np.zeros(P + 1, dtype=np.int64)
    cdef cnp.uint64_t[:, ::1] table = table_arr
    cdef cnp.int64_t[::1] best = best_arr
    cdef cnp.int64_t[::1] arg = arg_arr
    best[0] = 0
    cdef Py_ssize_t m, prev, j, w
    cdef int k, cov
    cdef cnp.uint64_t word
    with nogil:
        for m in range(1, size):
            prev = m & (m - 1)
            j = __builtin_ctzll(<unsigned long long>m)
            k = __builtin_popcountll(<unsigned long long>m)
            cov = 0
            for w in range(W):
                word = table[prev, w] | cover[j, w]
                table[m, w] = word
                cov += __builtin_popcountll(word)
            if cov < best[k]:
                best[k] = cov
                arg[k] = m
    return best_arr, arg_arr
