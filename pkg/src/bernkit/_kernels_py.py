"""Pure-Python kernels: dense convolution and the quadrature inner loop.

`_ckernels.pyx` implements the same three functions with typed loops; the
active implementation is chosen once, at import, by `_backend`.  Both
versions must stay semantically identical -- `tests/test_backend.py`
compares them element for element.
"""

import math


def conv1(a, b):
    """Dense 1-D convolution: coefficients of the product polynomial.

    Works over any commutative ring elements (plain ints here in practice).
    Empty input means the zero polynomial and yields an empty output.
    """
    na, nb = len(a), len(b)
    if na == 0 or nb == 0:
        return []
    out = [0] * (na + nb - 1)
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
    """Dense 2-D convolution of rectangular coefficient grids.

    `a[i][j]` is the coefficient of x^i y^j; rows must all share one width.
    Returns a rectangular list-of-lists grid.
    """
    ra, rb = len(a), len(b)
    if ra == 0 or rb == 0:
        return []
    wa, wb = len(a[0]), len(b[0])
    out = [[0] * (wa + wb - 1) for _ in range(ra + rb - 1)]
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


def simpson_exp_monomial(k, x, T, steps):
    """Composite Simpson approximation of the integral of t^k e^(-x t) on [0, T].

    `steps` is rounded up to the next even number.  The term loop mirrors
    the compiled kernel operation for operation so the two backends agree
    to rounding error.
    """
    n = steps + (steps % 2)
    h = T / n
    exp = math.exp
    acc = 0.0
    for i in range(n + 1):
        t = i * h
        tp = 1.0
        for _ in range(k):
            tp *= t
        f = tp * exp(-x * t)
        if i == 0 or i == n:
            acc += f
        elif i % 2 == 1:
            acc += 4.0 * f
        else:
            acc += 2.0 * f
    return acc * h / 3.0
