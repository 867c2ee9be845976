"""Brute-force oracle for the identity suite.

Everything here is built the dumbest possible way: every basis function is
expanded through `generalized_basis(n, k, 0, 1)` (repeated polynomial
multiplication, a different arithmetic route than the binomial-sum
expansion the suite uses), substitutions are performed literally, and both
sides are compared as canonical polynomials.  The three-variable identity
is checked by slicing the third variable at enough rational values that
the remaining two-variable comparisons determine the full statement.

The oracle knows nothing about the generating-function engine and never
imports it; mutation slots are re-applied here independently so mutated
checks can be cross-adjudicated.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Mapping, Optional

from .bernstein import binomial, falling_factorial, generalized_basis
from .polynomials import Poly1, Poly2


def _basis(n: int, k: int) -> Poly1:
    if k < 0 or k > n:
        return Poly1()
    return generalized_basis(n, k, 0, 1)


def _bump(base, slot: str, mutate: Optional[str]):
    return base + 1 if mutate == slot else base


def _diag_xy(p: Poly1) -> Poly2:
    """Substitute the product xy into a univariate polynomial, term by term."""
    return Poly2([[Fraction(0)] * i + [c] for i, c in enumerate(p.coeffs)])


def _ex(p: Poly1) -> Poly2:
    return p.as_poly2_in_x()


def _ey(p: Poly1) -> Poly2:
    return p.as_poly2_in_y()


def oracle_verify(identity_id: str, params: Mapping[str, int], mutate: Optional[str] = None) -> bool:
    """Literal-expansion verdict for one identity at one parameter tuple."""
    p = dict(params)
    if identity_id == "sum":
        n = p["n"]
        lhs = Poly1()
        for k in range(n + 1):
            lhs = lhs + _basis(n, k)
        return lhs == Poly1.constant(_bump(Fraction(1), "rhs-const", mutate))

    if identity_id == "alternating-sum":
        n = p["n"]
        lhs = Poly1()
        for k in range(n + 1):
            lhs = lhs + _basis(n, k) * (-1 if k % 2 else 1)
        base = Poly1.constant(_bump(Fraction(1), "base-const", mutate)) + Poly1.x() * _bump(
            Fraction(-2), "base-slope", mutate
        )
        rhs = Poly1.constant(1)
        for _ in range(n):
            rhs = rhs * base
        return lhs == rhs

    if identity_id == "subdivision-product":
        n, j = p["n"], p["j"]
        lhs = _diag_xy(_basis(n, j))
        rhs = Poly2()
        for k in range(j, n + 1):
            c = _bump(Fraction(1), f"term:{k}", mutate)
            rhs = rhs + _ex(_basis(k, j)) * _ey(_basis(n, k)) * c
        return lhs == rhs * _bump(Fraction(1), "scale", mutate)

    if identity_id == "subdivision-affine":
        n, j = p["n"], p["j"]
        u = Poly2.x() + Poly2.y() - Poly2.x() * Poly2.y()
        lhs = Poly2.coerce(_basis(n, j).compose(u))
        rhs = Poly2()
        for k in range(j + 1):
            c = _bump(Fraction(1), f"term:{k}", mutate)
            rhs = rhs + _ex(_basis(n - k, j - k)) * _ey(_basis(n, k)) * c
        return lhs == rhs * _bump(Fraction(1), "scale", mutate)

    if identity_id == "subdivision-trivariate":
        n, j = p["n"], p["j"]
        scale = _bump(Fraction(1), "scale", mutate)
        term_c = [_bump(Fraction(1), f"term:{k}", mutate) for k in range(n + 1)]
        # Slice the blend weight at n+1 rational values; degree n in that
        # variable, so slice-wise equality settles the identity.
        for i in range(1, n + 2):
            w = Fraction(i, n + 1)
            u = Poly2.x() * (1 - w) + Poly2.y() * w  # y-slot plays the third variable
            lhs = Poly2.coerce(_basis(n, j).compose(u))
            rhs = Poly2()
            for k in range(n + 1):
                weight = term_c[k] * _basis(n, k).evaluate(w)
                if not weight:
                    continue
                inner = Poly2()
                for q in range(j + 1):
                    inner = inner + _ex(_basis(n - k, j - q)) * _ey(_basis(k, q))
                rhs = rhs + inner * weight
            if lhs != rhs * scale:
                return False
        return True

    if identity_id == "monomial":
        n, l = p["n"], p["l"]
        lhs = Poly1.monomial(l, binomial(n, l))
        rhs = Poly1()
        for k in range(l, n + 1):
            rhs = rhs + _basis(n, k) * _bump(Fraction(binomial(k, l)), f"term:{k}", mutate)
        return lhs == rhs * _bump(Fraction(1), "scale", mutate)

    if identity_id == "derivative":
        n, k, l = p["n"], p["k"], p["l"]
        lhs = _basis(n, k).derivative(l)
        rhs = Poly1()
        for j in range(l + 1):
            sign = -1 if (l - j) % 2 else 1
            c = _bump(Fraction(sign * math.comb(l, j)), f"term:{j}", mutate)
            rhs = rhs + _basis(n - l, k - j) * c
        return lhs == rhs * _bump(Fraction(falling_factorial(n, l)), "prefactor", mutate)

    if identity_id == "recurrence":
        n, k, v = p["n"], p["k"], p["v"]
        lhs = _basis(n, k)
        rhs = Poly1()
        for j in range(v + 1):
            c = _bump(Fraction(1), f"term:{j}", mutate)
            rhs = rhs + _basis(v, j) * _basis(n - v, k - j) * c
        return lhs == rhs * _bump(Fraction(1), "scale", mutate)

    if identity_id == "raise-x":
        n, k, d = p["n"], p["k"], p["d"]
        lhs = Poly1.monomial(d) * _basis(n, k)
        pf = Fraction(math.factorial(n) * math.factorial(k + d), math.factorial(k) * math.factorial(n + d))
        return lhs == _basis(n + d, k + d) * _bump(pf, "prefactor", mutate)

    if identity_id == "raise-1mx":
        n, k, d = p["n"], p["k"], p["d"]
        lhs = (1 - Poly1.x()) ** d * _basis(n, k)
        pf = Fraction(
            math.factorial(n) * math.factorial(n + d - k),
            math.factorial(n + d) * math.factorial(n - k),
        )
        return lhs == _basis(n + d, k) * _bump(pf, "prefactor", mutate)

    if identity_id == "elevation":
        n, k = p["n"], p["k"]
        lhs = _basis(n, k)
        rhs = _basis(n + 1, k + 1) * _bump(Fraction(k + 1), "term:0", mutate) + _basis(
            n + 1, k
        ) * _bump(Fraction(n + 1 - k), "term:1", mutate)
        return lhs == rhs * _bump(Fraction(1, n + 1), "prefactor", mutate)

    if identity_id == "product":
        n, k1, k2 = p["n"], p["k1"], p["k2"]
        lhs = _basis(n, k1 + k2)
        rhs = Poly1()
        for j in range(n + 1):
            c = _bump(Fraction(math.comb(n, j)), f"term:{j}", mutate)
            rhs = rhs + _basis(j, k1) * _basis(n - j, k2) * c
        pf = Fraction(2) ** (k1 + k2 - n) * Fraction(
            math.factorial(k1) * math.factorial(k2), math.factorial(k1 + k2)
        )
        return lhs == rhs * _bump(pf, "prefactor", mutate)

    if identity_id == "two-point":
        n, k = p["n"], p["k"]
        x, y = Poly2.x(), Poly2.y()
        lhs = (x * y) ** k * (-1 if k % 2 else 1) * (y - x) ** (n - 2 * k)
        rhs = Poly2()
        for j in range(n + 1):
            sign = -1 if (n - j) % 2 else 1
            c = _bump(Fraction(sign * math.comb(n, j)), f"term:{j}", mutate)
            rhs = rhs + _ex(_basis(j, k)) * _ey(_basis(n - j, k)) * c
        pf = Fraction(math.factorial(k) ** 2, falling_factorial(n, 2 * k))
        return lhs == rhs * _bump(pf, "prefactor", mutate)

    if identity_id == "tg1":
        n, k = p["n"], p["k"]
        lhs = Poly1()
        for j in range(n - k + 1):
            lhs = lhs + Poly1.monomial(j, math.comb(n, j)) * _basis(n - j, k)
        return lhs == Poly1.monomial(k, _bump(Fraction(binomial(n, k)), "rhs-const", mutate))

    if identity_id == "tg2":
        n, k = p["n"], p["k"]
        lhs = Poly1()
        for j in range(n - k + 1):
            lhs = lhs + _basis(n - j, k) * ((-1 if j % 2 else 1) * math.comb(n, j))
        const = Fraction((-1 if (n - k) % 2 else 1) * binomial(n, k))
        return lhs == Poly1.monomial(n, _bump(const, "rhs-const", mutate))

    if identity_id == "tg5":
        n, k = p["n"], p["k"]
        lhs = Poly1()
        omx = 1 - Poly1.x()
        for j in range(n - k + 1):
            lhs = lhs + omx**j * _basis(n - j, k) * ((-1 if j % 2 else 1) * math.comb(n, j))
        rhs = Poly1.monomial(k) if n == k else Poly1()
        rhs = rhs + Poly1.constant(_bump(Fraction(0), "branch-const", mutate))
        return lhs == rhs

    raise ValueError(f"unknown identity id: {identity_id!r}")
