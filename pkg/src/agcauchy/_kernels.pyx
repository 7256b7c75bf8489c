# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled inner loops over table-driven GF(q) arithmetic, q <= 256."""

import numpy as np

cimport numpy as cnp

ctypedef cnp.int64_t i64


def act_flat(i64[:, ::1] add, i64[:, ::1] mul, i64[::1] w,
             i64[::1] base, i64[::1] off, i64[::1] coef):
    cdef Py_ssize_t n = base.shape[0], nt = off.shape[0], i, k
    cdef i64 acc, b
    out = np.zeros(n, dtype=np.int64)
    cdef i64[::1] o = out
    for i in range(n):
        acc = 0
        b = base[i]
        for k in range(nt):
            acc = add[acc, mul[coef[k], w[b + off[k]]]]
        o[i] = acc
    return out


def cauchy_fill(i64[:, ::1] add, i64[:, ::1] mul, i64[::1] values,
                i64[::1] targets, i64[::1] tflat, i64[::1] choice,
                i64[::1] ptr, i64[::1] off, i64[::1] coef):
    cdef Py_ssize_t n = targets.shape[0], i, k
    cdef i64 acc, t, l
    for i in range(n):
        acc = 0
        t = tflat[i]
        l = choice[i]
        for k in range(ptr[l], ptr[l + 1]):
            acc = add[acc, mul[coef[k], values[t + off[k]]]]
        values[targets[i]] = acc
