# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled similarity kernels.

Contracts match ``_kernels_py`` exactly; the inner loops run without the GIL
so thread pools get real parallelism.
"""

from libc.stdint cimport int64_t

import numpy as np


cdef int64_t _isect(const int64_t[::1] flat,
                    Py_ssize_t lo1, Py_ssize_t hi1,
                    Py_ssize_t lo2, Py_ssize_t hi2) noexcept nogil:
    cdef Py_ssize_t i = lo1, j = lo2
    cdef int64_t count = 0
    while i < hi1 and j < hi2:
        if flat[i] < flat[j]:
            i += 1
        elif flat[i] > flat[j]:
            j += 1
        else:
            count += 1
            i += 1
            j += 1
    return count


def intersection_size(const int64_t[::1] a, const int64_t[::1] b):
    """Number of common elements of two sorted, duplicate-free int64 arrays."""
    cdef Py_ssize_t i = 0, j = 0
    cdef Py_ssize_t na = a.shape[0], nb = b.shape[0]
    cdef int64_t count = 0
    with nogil:
        while i < na and j < nb:
            if a[i] < b[j]:
                i += 1
            elif a[i] > b[j]:
                j += 1
            else:
                count += 1
                i += 1
                j += 1
    return count


def pair_intersections(const int64_t[::1] flat, const int64_t[::1] offsets,
                       const int64_t[::1] left, const int64_t[::1] right):
    """Intersection sizes for the pairs (left[k], right[k]) over packed sets."""
    cdef Py_ssize_t k, n = left.shape[0]
    out_arr = np.empty(n, dtype=np.int64)
    cdef int64_t[::1] out = out_arr
    with nogil:
        for k in range(n):
            out[k] = _isect(
                flat,
                <Py_ssize_t> offsets[left[k]], <Py_ssize_t> offsets[left[k] + 1],
                <Py_ssize_t> offsets[right[k]], <Py_ssize_t> offsets[right[k] + 1],
            )
    return out_arr


def emit_pair_keys(const int64_t[::1] post_flat, const int64_t[::1] post_offsets,
                   Py_ssize_t e_start, Py_ssize_t e_end, int64_t n_groups):
    """Co-occurring group pair keys (g * n_groups + h, g < h) per entity."""
    cdef Py_ssize_t e, i, j, lo, hi
    cdef int64_t total = 0, m, base
    with nogil:
        for e in range(e_start, e_end):
            m = post_offsets[e + 1] - post_offsets[e]
            if m >= 2:
                total += m * (m - 1) // 2
    out_arr = np.empty(total, dtype=np.int64)
    cdef int64_t[::1] out = out_arr
    cdef Py_ssize_t pos = 0
    with nogil:
        for e in range(e_start, e_end):
            lo = <Py_ssize_t> post_offsets[e]
            hi = <Py_ssize_t> post_offsets[e + 1]
            for i in range(lo, hi - 1):
                base = post_flat[i] * n_groups
                for j in range(i + 1, hi):
                    out[pos] = base + post_flat[j]
                    pos += 1
    return out_arr
