"""Parametrized exact checks for the classical Bernstein-basis identities.

Each `verify_*` builds both sides of one identity and compares canonical
forms (or, for the three-variable subdivision identity, exact values on a
rational tensor grid dense enough that grid equality is equivalent to
polynomial equality).

Every right-hand side exposes named "mutation slots": passing a slot name
bumps that one scalar constant by +1, which must flip the verdict for at
least one parameter tuple.  The slots double as the CI failure-injection
path and as the sensitivity check that the comparisons cannot pass
vacuously.
"""

from __future__ import annotations

import functools
import math
from fractions import Fraction
from typing import Mapping, Optional

from .bernstein import bernstein_basis, binomial, falling_factorial
from .polynomials import Poly1, Poly2, scalar_str
from .report import METHOD_GRID, IdentityReport, Witness, compare_poly1, compare_poly2

SUITE_IDS = (
    "sum",
    "alternating-sum",
    "subdivision-product",
    "subdivision-affine",
    "subdivision-trivariate",
    "monomial",
    "derivative",
    "recurrence",
    "raise-x",
    "raise-1mx",
    "elevation",
    "product",
    "two-point",
    "tg1",
    "tg2",
    "tg5",
)


def _bump(base, slot: str, mutate: Optional[str]):
    """Add one to a named scalar constant when that slot is selected."""
    return base + 1 if mutate == slot else base


def _embed_x(p: Poly1) -> Poly2:
    return p.as_poly2_in_x()


def _embed_y(p: Poly1) -> Poly2:
    return p.as_poly2_in_y()


def verify_sum(n: int, *, mutate: Optional[str] = None) -> IdentityReport:
    """Partition of unity: the degree-n basis functions sum to 1."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    lhs = Poly1()
    for k in range(n + 1):
        lhs = lhs + bernstein_basis(n, k)
    rhs = Poly1.constant(_bump(Fraction(1), "rhs-const", mutate))
    return compare_poly1("sum", {"n": n}, lhs, rhs)


def verify_alternating_sum(n: int, *, mutate: Optional[str] = None) -> IdentityReport:
    """Alternating sum of the degree-n basis functions equals (1-2x)^n."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    lhs = Poly1()
    for k in range(n + 1):
        term = bernstein_basis(n, k)
        lhs = lhs + (-term if k % 2 else term)
    c0 = _bump(Fraction(1), "base-const", mutate)
    c1 = _bump(Fraction(-2), "base-slope", mutate)
    rhs = (Poly1.constant(c0) + Poly1.x() * c1) ** n
    return compare_poly1("alternating-sum", {"n": n}, lhs, rhs)


def _subdivision_product(n: int, j: int, mutate: Optional[str]) -> IdentityReport:
    lhs = Poly2.coerce(bernstein_basis(n, j).compose(Poly2.x() * Poly2.y()))
    scale = _bump(Fraction(1), "scale", mutate)
    rhs = Poly2()
    for k in range(j, n + 1):
        c = _bump(Fraction(1), f"term:{k}", mutate)
        rhs = rhs + _embed_x(bernstein_basis(k, j)) * _embed_y(bernstein_basis(n, k)) * c
    return compare_poly2("subdivision-product", {"n": n, "j": j}, lhs, rhs * scale)


def _subdivision_affine(n: int, j: int, mutate: Optional[str]) -> IdentityReport:
    # 1 - ((1-y)x + y) factors as (1-x)(1-y), which keeps the left side cheap.
    u = Poly2.x() + Poly2.y() - Poly2.x() * Poly2.y()
    one_minus_u = (1 - Poly2.x()) * (1 - Poly2.y())
    lhs = u**j * one_minus_u ** (n - j) * binomial(n, j)
    scale = _bump(Fraction(1), "scale", mutate)
    rhs = Poly2()
    for k in range(j + 1):
        c = _bump(Fraction(1), f"term:{k}", mutate)
        rhs = rhs + _embed_x(bernstein_basis(n - k, j - k)) * _embed_y(bernstein_basis(n, k)) * c
    return compare_poly2("subdivision-affine", {"n": n, "j": j}, lhs, rhs * scale)


def grid_nodes(degree_bound: int, margin: int = 1) -> list[Fraction]:
    """Distinct rational nodes i/(D+1+margin), enough that a polynomial of
    per-variable degree <= D vanishing on the full tensor grid is zero."""
    count = degree_bound + 1 + margin
    return [Fraction(i, count) for i in range(1, count + 1)]


@functools.lru_cache(maxsize=None)
def _basis_value_table(n: int, margin: int) -> tuple[tuple[Fraction, ...], tuple]:
    """Per grid node i/c, the integers B_p^m(i/c) c^m for p <= m <= n,
    indexed as table[node][m][p].

    Scaling by c^m clears every denominator, so the grid comparison can run
    in integer arithmetic: both sides of the identity, evaluated at grid
    points, are integers over the common denominator c^(2n).
    """
    nodes = tuple(grid_nodes(n, margin))
    c = nodes[0].denominator
    table = []
    for v in nodes:
        rows = []
        for m in range(n + 1):
            cm = c**m
            row = []
            for p in range(m + 1):
                scaled = bernstein_basis(m, p).evaluate(v) * cm
                row.append(scaled.numerator)  # exact: denominator divides c^m
            rows.append(tuple(row))
        table.append(tuple(rows))
    return nodes, tuple(table)


def _subdivision_trivariate(n: int, j: int, mutate: Optional[str], grid_margin: int) -> IdentityReport:
    """Blend of two interval maps: checked on a rational tensor grid because
    the statement genuinely involves three variables."""
    nodes, tbl = _basis_value_table(n, grid_margin)
    count = len(nodes)
    c = count  # nodes are i/c for i = 1..c (as reduced Fractions)
    c2 = c * c
    scale = 2 if mutate == "scale" else 1
    term_c = [2 if mutate == f"term:{k}" else 1 for k in range(n + 1)]
    cnj = binomial(n, j)
    num = list(range(1, count + 1))
    for xi in range(count):
        ix = num[xi]
        tbl_x = tbl[xi]
        for yi in range(count):
            iy = num[yi]
            base = (c - iy) * ix
            ty = tbl[yi][n]
            for zi in range(count):
                u = base + iy * num[zi]  # integer numerator of the blend over c^2
                lhs = cnj * u**j * (c2 - u) ** (n - j)
                tbl_z = tbl[zi]
                rhs = 0
                for k in range(n + 1):
                    row_x = tbl_x[n - k]
                    row_z = tbl_z[k]
                    inner = 0
                    for p in range(max(0, j - k), min(j, n - k) + 1):
                        inner += row_x[p] * row_z[j - p]
                    if inner:
                        rhs += term_c[k] * ty[k] * inner
                rhs *= scale
                if lhs != rhs:
                    den = c2**n
                    witness = Witness(
                        lhs=scalar_str(Fraction(lhs, den)),
                        rhs=scalar_str(Fraction(rhs, den)),
                        point={
                            "x": scalar_str(nodes[xi]),
                            "y": scalar_str(nodes[yi]),
                            "z": scalar_str(nodes[zi]),
                        },
                    )
                    return IdentityReport(
                        "subdivision-trivariate", {"n": n, "j": j}, False, METHOD_GRID, witness
                    )
    return IdentityReport("subdivision-trivariate", {"n": n, "j": j}, True, METHOD_GRID)


def verify_subdivision(
    variant: str,
    n: int,
    j: int,
    *,
    mutate: Optional[str] = None,
    grid_margin: int = 1,
) -> IdentityReport:
    """Subdivision identities: `product`, `affine`, or `trivariate` variant."""
    if not 0 <= j <= n:
        raise ValueError(f"index j={j} must lie in 0..{n}")
    if variant == "product":
        return _subdivision_product(n, j, mutate)
    if variant == "affine":
        return _subdivision_affine(n, j, mutate)
    if variant == "trivariate":
        return _subdivision_trivariate(n, j, mutate, grid_margin)
    raise ValueError(f"unknown subdivision variant: {variant!r}")


def verify_monomial(n: int, l: int, *, mutate: Optional[str] = None) -> IdentityReport:
    """C(n,l) x^l expanded over the degree-n basis, summing indices l..n."""
    if not 0 <= l <= n:
        raise ValueError(f"power l={l} must lie in 0..{n}")
    lhs = Poly1.monomial(l, binomial(n, l))
    scale = _bump(Fraction(1), "scale", mutate)
    rhs = Poly1()
    for k in range(l, n + 1):
        c = _bump(Fraction(binomial(k, l)), f"term:{k}", mutate)
        rhs = rhs + bernstein_basis(n, k) * c
    return compare_poly1("monomial", {"n": n, "l": l}, lhs, rhs * scale)


def verify_derivative(n: int, k: int, l: int, *, mutate: Optional[str] = None) -> IdentityReport:
    """Order-l derivative of one basis function as a signed binomial
    combination of lower-degree basis functions (out-of-range terms vanish)."""
    if not 0 <= l <= n:
        raise ValueError(f"derivative order l={l} must lie in 0..{n}")
    lhs = bernstein_basis(n, k).derivative(l)
    prefactor = _bump(Fraction(falling_factorial(n, l)), "prefactor", mutate)
    rhs = Poly1()
    for jj in range(l + 1):
        sign = -1 if (l - jj) % 2 else 1
        c = _bump(Fraction(sign * math.comb(l, jj)), f"term:{jj}", mutate)
        if c:
            rhs = rhs + bernstein_basis(n - l, k - jj) * c
    return compare_poly1("derivative", {"n": n, "k": k, "l": l}, lhs, rhs * prefactor)


def verify_recurrence(n: int, k: int, v: int, *, mutate: Optional[str] = None) -> IdentityReport:
    """Degree splitting: B_k^n = sum_j B_j^v B_{k-j}^{n-v}; v=1 is the
    standard two-term recurrence."""
    if not 0 <= v <= n:
        raise ValueError(f"split order v={v} must lie in 0..{n}")
    lhs = bernstein_basis(n, k)
    scale = _bump(Fraction(1), "scale", mutate)
    rhs = Poly1()
    for j in range(v + 1):
        c = _bump(Fraction(1), f"term:{j}", mutate)
        rhs = rhs + bernstein_basis(v, j) * bernstein_basis(n - v, k - j) * c
    return compare_poly1("recurrence", {"n": n, "k": k, "v": v}, lhs, rhs * scale)


def verify_degree_ops(
    variant: str, n: int, k: int, d: int = 1, *, mutate: Optional[str] = None
) -> IdentityReport:
    """Degree raising by x^d or (1-x)^d, and single-step degree elevation."""
    if not 0 <= k <= n:
        raise ValueError(f"index k={k} must lie in 0..{n}")
    if variant == "raise-x":
        if d < 1:
            raise ValueError("raise power d must be at least 1")
        lhs = Poly1.monomial(d) * bernstein_basis(n, k)
        pf = Fraction(
            math.factorial(n) * math.factorial(k + d),
            math.factorial(k) * math.factorial(n + d),
        )
        rhs = bernstein_basis(n + d, k + d) * _bump(pf, "prefactor", mutate)
        return compare_poly1("raise-x", {"n": n, "k": k, "d": d}, lhs, rhs)
    if variant == "raise-1mx":
        if d < 1:
            raise ValueError("raise power d must be at least 1")
        lhs = (1 - Poly1.x()) ** d * bernstein_basis(n, k)
        pf = Fraction(
            math.factorial(n) * math.factorial(n + d - k),
            math.factorial(n + d) * math.factorial(n - k),
        )
        rhs = bernstein_basis(n + d, k) * _bump(pf, "prefactor", mutate)
        return compare_poly1("raise-1mx", {"n": n, "k": k, "d": d}, lhs, rhs)
    if variant == "elevation":
        if d != 1:
            raise ValueError("elevation is a single degree step (d must be 1)")
        lhs = bernstein_basis(n, k)
        pf = _bump(Fraction(1, n + 1), "prefactor", mutate)
        c0 = _bump(Fraction(k + 1), "term:0", mutate)
        c1 = _bump(Fraction(n + 1 - k), "term:1", mutate)
        rhs = (bernstein_basis(n + 1, k + 1) * c0 + bernstein_basis(n + 1, k) * c1) * pf
        return compare_poly1("elevation", {"n": n, "k": k}, lhs, rhs)
    raise ValueError(f"unknown degree operation variant: {variant!r}")


def verify_product(n: int, k1: int, k2: int, *, mutate: Optional[str] = None) -> IdentityReport:
    """Index-splitting product formula across all degree splits of n."""
    if n < 0 or k1 < 0 or k2 < 0:
        raise ValueError("n, k1, k2 must be nonnegative")
    lhs = bernstein_basis(n, k1 + k2)
    pf = Fraction(2) ** (k1 + k2 - n) * Fraction(
        math.factorial(k1) * math.factorial(k2), math.factorial(k1 + k2)
    )
    prefactor = _bump(pf, "prefactor", mutate)
    rhs = Poly1()
    for j in range(n + 1):
        c = _bump(Fraction(math.comb(n, j)), f"term:{j}", mutate)
        term = bernstein_basis(j, k1) * bernstein_basis(n - j, k2)
        if term:
            rhs = rhs + term * c
    return compare_poly1("product", {"n": n, "k1": k1, "k2": k2}, lhs, rhs * prefactor)


def verify_two_point(n: int, k: int, *, mutate: Optional[str] = None) -> IdentityReport:
    """Two-variable pairing: (-xy)^k (y-x)^(n-2k) against a signed binomial
    double sum; requires n >= 2k so the falling-factorial factor is nonzero."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    if n < 2 * k:
        raise ValueError(f"two-point identity needs n >= 2k (got n={n}, k={k})")
    x, y = Poly2.x(), Poly2.y()
    sign_k = -1 if k % 2 else 1
    lhs = (x * y) ** k * sign_k * (y - x) ** (n - 2 * k)
    pf = Fraction(math.factorial(k) ** 2, falling_factorial(n, 2 * k))
    prefactor = _bump(pf, "prefactor", mutate)
    rhs = Poly2()
    for j in range(n + 1):
        sign = -1 if (n - j) % 2 else 1
        c = _bump(Fraction(sign * math.comb(n, j)), f"term:{j}", mutate)
        term = _embed_x(bernstein_basis(j, k)) * _embed_y(bernstein_basis(n - j, k))
        if term:
            rhs = rhs + term * c
    return compare_poly2("two-point", {"n": n, "k": k}, lhs, rhs * prefactor)


def verify_finite_sum(variant: str, n: int, k: int, *, mutate: Optional[str] = None) -> IdentityReport:
    """Finite binomial-weighted sums collapsing to a single monomial.

    `tg1` is stated in polynomial form (both sides carry the factor x^k);
    `tg5` collapses to x^k when n = k and to zero otherwise.
    """
    if not 1 <= k <= n:
        raise ValueError(f"index k={k} must lie in 1..{n}")
    if variant == "tg1":
        lhs = Poly1()
        for j in range(n - k + 1):
            lhs = lhs + Poly1.monomial(j, math.comb(n, j)) * bernstein_basis(n - j, k)
        rhs = Poly1.monomial(k, _bump(Fraction(binomial(n, k)), "rhs-const", mutate))
        return compare_poly1("tg1", {"n": n, "k": k}, lhs, rhs)
    if variant == "tg2":
        lhs = Poly1()
        for j in range(n - k + 1):
            sign = -1 if j % 2 else 1
            lhs = lhs + bernstein_basis(n - j, k) * (sign * math.comb(n, j))
        const = Fraction((-1 if (n - k) % 2 else 1) * binomial(n, k))
        rhs = Poly1.monomial(n, _bump(const, "rhs-const", mutate))
        return compare_poly1("tg2", {"n": n, "k": k}, lhs, rhs)
    if variant == "tg5":
        lhs = Poly1()
        one_minus_x = 1 - Poly1.x()
        for j in range(n - k + 1):
            sign = -1 if j % 2 else 1
            lhs = lhs + one_minus_x**j * bernstein_basis(n - j, k) * (sign * math.comb(n, j))
        rhs = Poly1.monomial(k) if n == k else Poly1()
        rhs = rhs + Poly1.constant(_bump(Fraction(0), "branch-const", mutate))
        return compare_poly1("tg5", {"n": n, "k": k}, lhs, rhs)
    raise ValueError(f"unknown finite-sum variant: {variant!r}")


# --- uniform dispatch --------------------------------------------------------


def mutation_slots(identity_id: str, params: Mapping[str, int]) -> tuple[str, ...]:
    """Slot names valid for one identity at one parameter tuple."""
    n = params.get("n", 0)
    if identity_id == "sum":
        return ("rhs-const",)
    if identity_id == "alternating-sum":
        return ("base-const", "base-slope")
    if identity_id == "subdivision-product":
        return ("scale",) + tuple(f"term:{k}" for k in range(params["j"], n + 1))
    if identity_id == "subdivision-affine":
        return ("scale",) + tuple(f"term:{k}" for k in range(params["j"] + 1))
    if identity_id == "subdivision-trivariate":
        return ("scale",) + tuple(f"term:{k}" for k in range(n + 1))
    if identity_id == "monomial":
        return ("scale",) + tuple(f"term:{k}" for k in range(params["l"], n + 1))
    if identity_id == "derivative":
        return ("prefactor",) + tuple(f"term:{j}" for j in range(params["l"] + 1))
    if identity_id == "recurrence":
        return ("scale",) + tuple(f"term:{j}" for j in range(params["v"] + 1))
    if identity_id in ("raise-x", "raise-1mx"):
        return ("prefactor",)
    if identity_id == "elevation":
        return ("prefactor", "term:0", "term:1")
    if identity_id in ("product", "two-point"):
        return ("prefactor",) + tuple(f"term:{j}" for j in range(n + 1))
    if identity_id in ("tg1", "tg2"):
        return ("rhs-const",)
    if identity_id == "tg5":
        return ("branch-const",)
    raise ValueError(f"unknown identity id: {identity_id!r}")


DEFAULT_MUTATION = {identity_id: None for identity_id in SUITE_IDS}
DEFAULT_MUTATION.update(
    {
        "sum": "rhs-const",
        "alternating-sum": "base-const",
        "subdivision-product": "scale",
        "subdivision-affine": "scale",
        "subdivision-trivariate": "scale",
        "monomial": "scale",
        "derivative": "prefactor",
        "recurrence": "scale",
        "raise-x": "prefactor",
        "raise-1mx": "prefactor",
        "elevation": "prefactor",
        "product": "prefactor",
        "two-point": "prefactor",
        "tg1": "rhs-const",
        "tg2": "rhs-const",
        "tg5": "branch-const",
    }
)


def run_identity(
    identity_id: str,
    params: Mapping[str, int],
    *,
    mutate: Optional[str] = None,
    grid_margin: int = 1,
) -> IdentityReport:
    """Dispatch one identity check by id; `mutate` names a slot from
    `mutation_slots` (validated) to bump by +1."""
    if mutate is not None and mutate not in mutation_slots(identity_id, params):
        raise ValueError(f"{identity_id} has no mutation slot {mutate!r} at {dict(params)}")
    if identity_id == "sum":
        return verify_sum(params["n"], mutate=mutate)
    if identity_id == "alternating-sum":
        return verify_alternating_sum(params["n"], mutate=mutate)
    if identity_id == "subdivision-product":
        return verify_subdivision("product", params["n"], params["j"], mutate=mutate)
    if identity_id == "subdivision-affine":
        return verify_subdivision("affine", params["n"], params["j"], mutate=mutate)
    if identity_id == "subdivision-trivariate":
        return verify_subdivision(
            "trivariate", params["n"], params["j"], mutate=mutate, grid_margin=grid_margin
        )
    if identity_id == "monomial":
        return verify_monomial(params["n"], params["l"], mutate=mutate)
    if identity_id == "derivative":
        return verify_derivative(params["n"], params["k"], params["l"], mutate=mutate)
    if identity_id == "recurrence":
        return verify_recurrence(params["n"], params["k"], params["v"], mutate=mutate)
    if identity_id == "raise-x":
        return verify_degree_ops("raise-x", params["n"], params["k"], params["d"], mutate=mutate)
    if identity_id == "raise-1mx":
        return verify_degree_ops("raise-1mx", params["n"], params["k"], params["d"], mutate=mutate)
    if identity_id == "elevation":
        return verify_degree_ops("elevation", params["n"], params["k"], 1, mutate=mutate)
    if identity_id == "product":
        return verify_product(params["n"], params["k1"], params["k2"], mutate=mutate)
    if identity_id == "two-point":
        return verify_two_point(params["n"], params["k"], mutate=mutate)
    if identity_id in ("tg1", "tg2", "tg5"):
        return verify_finite_sum(identity_id, params["n"], params["k"], mutate=mutate)
    raise ValueError(f"unknown identity id: {identity_id!r}")
