# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled kernels: dense convolution and the quadrature inner loop.

Typed twin of `_kernels_py`; coefficients stay Python objects (arbitrary
precision integers), only loop control and the float quadrature run at
C speed.
"""

from libc.math cimport exp


def conv1(a, b):
    """Dense 1-D convolution: coefficients of the product polynomial."""
    cdef Py_ssize_t na = len(a), nb = len(b)
    if na == 0 or nb == 0:
        return []
    cdef list out = [0] * (na + nb - 1)
    cdef Py_ssize_t i, j
    cdef object ai, bj
    for i in range(na):
        ai = a[i]
        if not ai:
            continue
        for j in range(nb):
            bj = b[j]
            if bj:
                out[i + j] = out[i + j] + ai * bj
    return out


def conv2(a, b):
    """Dense 2-D convolution of rectangular coefficient grids."""
    cdef Py_ssize_t ra = len(a), rb = len(b)
    if ra == 0 or rb == 0:
        return []
    cdef Py_ssize_t wa = len(a[0]), wb = len(b[0])
    cdef Py_ssize_t rows = ra + rb - 1, cols = wa + wb - 1
    cdef list out = [[0] * cols for _ in range(rows)]
    cdef Py_ssize_t i, j, p, q
    cdef object arow, brow, aip, bjq
    cdef list orow
    for i in range(ra):
        arow = a[i]
        for p in range(wa):
            aip = arow[p]
            if not aip:
                continue
            for j in range(rb):
                brow = b[j]
                orow = out[i + j]
                for q in range(wb):
                    bjq = brow[q]
                    if bjq:
                        orow[p + q] = orow[p + q] + aip * bjq
    return out


def simpson_exp_monomial(int k, double x, double T, long steps):
    """Composite Simpson approximation of the integral of t^k e^(-x t) on [0, T]."""
    cdef long n = steps + (steps % 2)
    cdef double h = T / n
    cdef double acc = 0.0
    cdef double t, tp, f
    cdef long i
    cdef int j
    for i in range(n + 1):
        t = i * h
        tp = 1.0
        for j in range(k):
            tp *= t
        f = tp * exp(-x * t)
        if i == 0 or i == n:
            acc += f
        elif i % 2 == 1:
            acc += 4.0 * f
        else:
            acc += 2.0 * f
    return acc * h / 3.0
