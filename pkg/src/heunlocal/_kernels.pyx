# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled float-mode kernels; mirror ``_fallback`` for complex input."""

import numpy as np


def recurrence_sweep(double complex alpha, double complex beta, double complex gamma,
                     double complex delta, double complex epsilon, double complex a,
                     double complex q, Py_ssize_t N):
    cdef double complex[::1] c = np.zeros(N + 1, dtype=np.complex128)
    cdef double complex prev = 0, cur = 1, nxt, A, B, C
    cdef Py_ssize_t n
    c[0] = 1
    for n in range(N):
        A = (n - 1 + alpha) * (n - 1 + beta)
        B = n * ((n - 1 + gamma) * (1 + a) + a * delta + epsilon)
        C = (n + 1) * (n + gamma) * a
        if C == 0:
            raise ZeroDivisionError("C_n vanished in the recurrence")
        nxt = ((B + q) * cur - A * prev) / C
        c[n + 1] = nxt
        prev = cur
        cur = nxt
    return np.asarray(c)


def dp_sweep(base, R, W, double complex scale_self, double complex scale_acc, Py_ssize_t N):
    cdef double complex[::1] b = np.ascontiguousarray(base, dtype=np.complex128)
    cdef double complex[::1] r = np.ascontiguousarray(R, dtype=np.complex128)
    cdef double complex[::1] wv = np.ascontiguousarray(W, dtype=np.complex128)
    out = np.zeros((N + 1, N + 1), dtype=np.complex128)
    cdef double complex[:, ::1] f = out
    cdef Py_ssize_t m, n
    cdef double complex acc, val
    for n in range(N + 1):
        f[0, n] = b[n]
    for m in range(1, N + 1):
        acc = 0
        val = 0
        for n in range(m, N + 1):
            acc = scale_acc * acc + wv[n - 1] * f[m - 1, n - 1]
            val = scale_self * val - r[n] * acc
            f[m, n] = val
    return out


def dp_column_sums(base, R, W, double complex scale_self, double complex scale_acc,
                   Py_ssize_t N, double complex x):
    cdef double complex[::1] r = np.ascontiguousarray(R, dtype=np.complex128)
    cdef double complex[::1] wv = np.ascontiguousarray(W, dtype=np.complex128)
    prev_arr = np.array(base[: N + 1], dtype=np.complex128)
    row_arr = np.zeros(N + 1, dtype=np.complex128)
    sums_arr = prev_arr.copy()
    cdef double complex[::1] prev = prev_arr
    cdef double complex[::1] row = row_arr
    cdef double complex[::1] sums = sums_arr
    cdef double complex[::1] tmp
    cdef double complex acc, val, power = 1
    cdef Py_ssize_t m, n
    for m in range(1, N + 1):
        power = power * x
        row[m - 1] = 0
        acc = 0
        val = 0
        for n in range(m, N + 1):
            acc = scale_acc * acc + wv[n - 1] * prev[n - 1]
            val = scale_self * val - r[n] * acc
            row[n] = val
            sums[n] = sums[n] + val * power
        tmp = prev
        prev = row
        row = tmp
    return sums_arr
