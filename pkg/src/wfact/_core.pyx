# cython: language_level=3
"""Compiled kernels for the exhaustive-verification tables.

Interface-identical to ``_core_py``; see there for semantics.  The work here
is all small-integer table manipulation, which is exactly where interpreted
loops hurt, so these run the inner loops over C arrays.
"""

import numpy as np

cimport numpy as cnp

cnp.import_array()


def build_mult_table(perms_in, colors_in, int m):
    """mult[i, j] = index of element_i * element_j (same contract as _core_py)."""
    cdef cnp.ndarray[cnp.int32_t, ndim=2, mode="c"] perms = np.ascontiguousarray(
        perms_in, dtype=np.int32
    )
    cdef cnp.ndarray[cnp.int32_t, ndim=2, mode="c"] colors = np.ascontiguousarray(
        colors_in, dtype=np.int32
    )
    cdef Py_ssize_t count = perms.shape[0]
    cdef Py_ssize_t n = perms.shape[1]
    cdef cnp.ndarray[cnp.int64_t, ndim=1] keys = np.empty(count, dtype=np.int64)
    cdef cnp.int64_t radix = <cnp.int64_t> (n * m)
    cdef Py_ssize_t i, j, t
    cdef cnp.int64_t acc
    for i in range(count):
        acc = 0
        for t in range(n - 1, -1, -1):
            acc = acc * radix + (<cnp.int64_t> perms[i, t]) * m + colors[i, t]
        keys[i] = acc
    cdef cnp.ndarray[cnp.int64_t, ndim=1] order64 = np.argsort(keys, kind="stable")
    cdef cnp.ndarray[cnp.int64_t, ndim=1] sorted_keys = keys[order64]
    cdef cnp.ndarray[cnp.int32_t, ndim=2, mode="c"] mult = np.empty(
        (count, count), dtype=np.int32
    )
    cdef cnp.int64_t key, probe
    cdef Py_ssize_t lo, hi, mid, yt
    for i in range(count):
        for j in range(count):
            acc = 0
            for t in range(n - 1, -1, -1):
                yt = perms[j, t]
                acc = (
                    acc * radix
                    + (<cnp.int64_t> perms[i, yt]) * m
                    + ((colors[i, yt] + colors[j, t]) % m)
                )
            key = acc
            lo = 0
            hi = count
            while lo < hi:
                mid = (lo + hi) // 2
                probe = sorted_keys[mid]
                if probe < key:
                    lo = mid + 1
                else:
                    hi = mid
            if lo >= count or sorted_keys[lo] != key:
                raise AssertionError("product fell outside the element set")
            mult[i, j] = <cnp.int32_t> order64[lo]
    return mult


def subgroup_closure(mult_in, gens, int identity_index):
    """Sorted member indices of the subgroup generated by ``gens``."""
    cdef cnp.ndarray[cnp.int32_t, ndim=2, mode="c"] mult = np.ascontiguousarray(
        mult_in, dtype=np.int32
    )
    cdef Py_ssize_t count = mult.shape[0]
    cdef cnp.ndarray[cnp.int32_t, ndim=1] gen_arr = np.array(
        sorted({int(g) for g in gens}), dtype=np.int32
    )
    cdef Py_ssize_t ngens = gen_arr.shape[0]
    cdef cnp.ndarray[cnp.uint8_t, ndim=1] member = np.zeros(count, dtype=np.uint8)
    cdef cnp.ndarray[cnp.int32_t, ndim=1] stack = np.empty(count, dtype=np.int32)
    cdef Py_ssize_t top = 0
    cdef Py_ssize_t x, k
    cdef cnp.int32_t y
    member[identity_index] = 1
    stack[top] = identity_index
    top += 1
    while top > 0:
        top -= 1
        x = stack[top]
        for k in range(ngens):
            y = mult[x, gen_arr[k]]
            if member[y] == 0:
                member[y] = 1
                stack[top] = y
                top += 1
    return np.flatnonzero(member).astype(np.int32)
