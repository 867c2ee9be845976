"""Dense exact-rational polynomials in one and two variables.

Coefficients are held as arbitrary-precision integers over a single shared
positive denominator, kept canonical (trailing zeros trimmed, content and
denominator coprime).  All arithmetic is exact; the public surface speaks
`fractions.Fraction`.  Instances are immutable and hashable, so they are
safe to share across threads and to memoize.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Union

from ._backend import conv1, conv2

ExactScalar = Fraction
ScalarLike = Union[int, Fraction]


def as_scalar(value: ScalarLike | str) -> Fraction:
    """Coerce an int, Fraction, or ``"p/q"`` string to an exact rational."""
    return value if isinstance(value, Fraction) else Fraction(value)


def scalar_str(value: ScalarLike) -> str:
    """Lossless ``"p/q"`` rendering; ``Fraction(scalar_str(v)) == v``."""
    q = as_scalar(value)
    return f"{q.numerator}/{q.denominator}"


def _common_den(fracs: list[Fraction]) -> tuple[list[int], int]:
    den = 1
    for f in fracs:
        den = den * f.denominator // math.gcd(den, f.denominator)
    return [f.numerator * (den // f.denominator) for f in fracs], den


class Poly1:
    """Dense univariate polynomial; index i holds the coefficient of x^i."""

    __slots__ = ("_num", "_den")

    def __init__(self, coeffs: Iterable[ScalarLike] = ()):
        fracs = [as_scalar(c) for c in coeffs]
        nums, den = _common_den(fracs)
        obj = Poly1._raw(nums, den)
        self._num = obj._num
        self._den = obj._den

    @classmethod
    def _raw(cls, nums: list[int], den: int) -> "Poly1":
        """Internal constructor from an integer array over a positive denominator."""
        while nums and nums[-1] == 0:
            nums.pop()
        self = object.__new__(cls)
        if not nums:
            self._num = ()
            self._den = 1
            return self
        g = den
        for v in nums:
            g = math.gcd(g, v)
            if g == 1:
                break
        if g > 1:
            nums = [v // g for v in nums]
            den //= g
        self._num = tuple(nums)
        self._den = den
        return self

    @classmethod
    def constant(cls, value: ScalarLike) -> "Poly1":
        q = as_scalar(value)
        return cls._raw([q.numerator], q.denominator)

    @classmethod
    def monomial(cls, power: int, coeff: ScalarLike = 1) -> "Poly1":
        """coeff * x^power."""
        q = as_scalar(coeff)
        return cls._raw([0] * power + [q.numerator], q.denominator)

    @classmethod
    def x(cls) -> "Poly1":
        return _POLY1_X

    @property
    def degree(self) -> int:
        """Degree, with -1 standing in for the zero polynomial."""
        return len(self._num) - 1

    def __bool__(self) -> bool:
        return bool(self._num)

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(v, self._den) for v in self._num)

    def coefficient(self, i: int) -> Fraction:
        if 0 <= i < len(self._num):
            return Fraction(self._num[i], self._den)
        return Fraction(0)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Poly1):
            return self._num == other._num and self._den == other._den
        if isinstance(other, (int, Fraction)):
            return self == Poly1.constant(other)
        return NotImplemented

    def __hash__(self):
        return hash((Poly1, self._num, self._den))

    def __neg__(self) -> "Poly1":
        return Poly1._raw([-v for v in self._num], self._den)

    def __add__(self, other) -> "Poly1":
        if isinstance(other, (int, Fraction)):
            other = Poly1.constant(other)
        elif not isinstance(other, Poly1):
            return NotImplemented
        da, db = self._den, other._den
        g = math.gcd(da, db)
        ma, mb = db // g, da // g
        n = max(len(self._num), len(other._num))
        out = [0] * n
        for i, v in enumerate(self._num):
            out[i] = v * ma
        for i, v in enumerate(other._num):
            out[i] += v * mb
        return Poly1._raw(out, da * ma)

    __radd__ = __add__

    def __sub__(self, other) -> "Poly1":
        return self + (-other if isinstance(other, Poly1) else -as_scalar(other))

    def __rsub__(self, other) -> "Poly1":
        return (-self) + other

    def __mul__(self, other) -> "Poly1":
        if isinstance(other, (int, Fraction)):
            q = as_scalar(other)
            return Poly1._raw([v * q.numerator for v in self._num], self._den * q.denominator)
        if not isinstance(other, Poly1):
            return NotImplemented
        return Poly1._raw(conv1(self._num, other._num), self._den * other._den)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "Poly1":
        if exponent < 0:
            raise ValueError("negative powers are not polynomials")
        result = Poly1.constant(1)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def evaluate(self, x: ScalarLike) -> Fraction:
        """Exact Horner evaluation."""
        xq = as_scalar(x)
        acc = 0
        for v in reversed(self._num):
            acc = acc * xq + v
        return Fraction(acc, self._den) if isinstance(acc, int) else acc / self._den

    def derivative(self, order: int = 1) -> "Poly1":
        if order < 0:
            raise ValueError("derivative order must be nonnegative")
        nums = list(self._num)
        for _ in range(order):
            nums = [i * v for i, v in enumerate(nums)][1:]
        return Poly1._raw(nums, self._den)

    def compose(self, value: "Poly1 | Poly2") -> "Poly1 | Poly2":
        """Substitute a polynomial for x (Horner over the target ring)."""
        acc = value - value  # zero of the target ring
        for v in reversed(self._num):
            acc = acc * value + Fraction(v, self._den)
        return acc

    def as_poly2_in_x(self) -> "Poly2":
        return Poly2._raw([[v] for v in self._num], self._den)

    def as_poly2_in_y(self) -> "Poly2":
        if not self._num:
            return Poly2._raw([], 1)
        return Poly2._raw([list(self._num)], self._den)

    def monomials(self):
        """Nonzero terms as (exponent, coefficient), lowest degree first."""
        for i, v in enumerate(self._num):
            if v:
                yield i, Fraction(v, self._den)

    def __repr__(self):
        return f"Poly1({self!s})"

    def __str__(self):
        return _format_terms([((i,), c) for i, c in self.monomials()], ("x",))


class Poly2:
    """Dense bivariate polynomial; grid entry (i, j) holds the coefficient of x^i y^j."""

    __slots__ = ("_num", "_den")

    def __init__(self, grid: Iterable[Iterable[ScalarLike]] = ()):
        rows = [[as_scalar(c) for c in row] for row in grid]
        width = max((len(r) for r in rows), default=0)
        flat: list[Fraction] = []
        for r in rows:
            flat.extend(r + [Fraction(0)] * (width - len(r)))
        nums, den = _common_den(flat)
        packed = [nums[i * width : (i + 1) * width] for i in range(len(rows))]
        obj = Poly2._raw(packed, den)
        self._num = obj._num
        self._den = obj._den

    @classmethod
    def _raw(cls, rows: list[list[int]], den: int) -> "Poly2":
        while rows and not any(rows[-1]):
            rows.pop()
        self = object.__new__(cls)
        if not rows:
            self._num = ()
            self._den = 1
            return self
        width = 0
        for r in rows:
            w = len(r)
            while w and r[w - 1] == 0:
                w -= 1
            width = max(width, w)
        rows = [list(r[:width]) + [0] * (width - len(r[:width])) for r in rows]
        g = den
        for r in rows:
            for v in r:
                g = math.gcd(g, v)
            if g == 1:
                break
        if g > 1:
            rows = [[v // g for v in r] for r in rows]
            den //= g
        self._num = tuple(tuple(r) for r in rows)
        self._den = den
        return self

    @classmethod
    def constant(cls, value: ScalarLike) -> "Poly2":
        q = as_scalar(value)
        return cls._raw([[q.numerator]], q.denominator)

    @classmethod
    def x(cls) -> "Poly2":
        return _POLY2_X

    @classmethod
    def y(cls) -> "Poly2":
        return _POLY2_Y

    @staticmethod
    def coerce(value: "ScalarLike | Poly1 | Poly2", var: str = "x") -> "Poly2":
        """Lift scalars (and Poly1 in the named variable) into the bivariate ring."""
        if isinstance(value, Poly2):
            return value
        if isinstance(value, Poly1):
            return value.as_poly2_in_x() if var == "x" else value.as_poly2_in_y()
        return Poly2.constant(value)

    @property
    def deg_x(self) -> int:
        return len(self._num) - 1

    @property
    def deg_y(self) -> int:
        return len(self._num[0]) - 1 if self._num else -1

    @property
    def total_degree(self) -> int:
        """Largest i + j over nonzero entries; -1 for the zero polynomial."""
        best = -1
        for i, row in enumerate(self._num):
            for j, v in enumerate(row):
                if v and i + j > best:
                    best = i + j
        return best

    def __bool__(self) -> bool:
        return bool(self._num)

    def coefficient(self, i: int, j: int) -> Fraction:
        if 0 <= i < len(self._num) and 0 <= j < len(self._num[i]):
            return Fraction(self._num[i][j], self._den)
        return Fraction(0)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Poly2):
            return self._num == other._num and self._den == other._den
        if isinstance(other, (int, Fraction)):
            return self == Poly2.constant(other)
        return NotImplemented

    def __hash__(self):
        return hash((Poly2, self._num, self._den))

    def __neg__(self) -> "Poly2":
        return Poly2._raw([[-v for v in r] for r in self._num], self._den)

    def __add__(self, other) -> "Poly2":
        if isinstance(other, (int, Fraction)):
            other = Poly2.constant(other)
        elif not isinstance(other, Poly2):
            return NotImplemented
        da, db = self._den, other._den
        g = math.gcd(da, db)
        ma, mb = db // g, da // g
        rows = max(len(self._num), len(other._num))
        cols = max(
            len(self._num[0]) if self._num else 0,
            len(other._num[0]) if other._num else 0,
        )
        out = [[0] * cols for _ in range(rows)]
        for i, row in enumerate(self._num):
            for j, v in enumerate(row):
                out[i][j] = v * ma
        for i, row in enumerate(other._num):
            for j, v in enumerate(row):
                out[i][j] += v * mb
        return Poly2._raw(out, da * ma)

    __radd__ = __add__

    def __sub__(self, other) -> "Poly2":
        if isinstance(other, (int, Fraction)):
            other = Poly2.constant(other)
        return self + (-other)

    def __rsub__(self, other) -> "Poly2":
        return (-self) + other

    def __mul__(self, other) -> "Poly2":
        if isinstance(other, (int, Fraction)):
            q = as_scalar(other)
            return Poly2._raw(
                [[v * q.numerator for v in r] for r in self._num],
                self._den * q.denominator,
            )
        if not isinstance(other, Poly2):
            return NotImplemented
        grid = conv2(self._num, other._num)
        return Poly2._raw(grid, self._den * other._den)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "Poly2":
        if exponent < 0:
            raise ValueError("negative powers are not polynomials")
        result = Poly2.constant(1)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def evaluate(self, x: ScalarLike, y: ScalarLike) -> Fraction:
        xq, yq = as_scalar(x), as_scalar(y)
        acc = Fraction(0)
        for row in reversed(self._num):
            racc = 0
            for v in reversed(row):
                racc = racc * yq + v
            acc = acc * xq + racc
        return acc / self._den

    def substitute_y(self, value: ScalarLike) -> Poly1:
        """Specialize y to a rational constant, leaving a polynomial in x."""
        yq = as_scalar(value)
        coeffs = []
        for row in self._num:
            racc = 0
            for v in reversed(row):
                racc = racc * yq + v
            coeffs.append(racc / self._den if isinstance(racc, Fraction) else Fraction(racc, self._den))
        return Poly1(coeffs)

    def substitute_x(self, value: ScalarLike) -> Poly1:
        """Specialize x to a rational constant, leaving a polynomial in y."""
        xq = as_scalar(value)
        width = len(self._num[0]) if self._num else 0
        coeffs = [Fraction(0)] * width
        power = Fraction(1)
        for row in self._num:
            for j, v in enumerate(row):
                if v:
                    coeffs[j] += v * power
            power *= xq
        return Poly1(c / self._den for c in coeffs)

    def diff_x(self, order: int = 1) -> "Poly2":
        if order < 0:
            raise ValueError("derivative order must be nonnegative")
        rows = [list(r) for r in self._num]
        for _ in range(order):
            rows = [[i * v for v in row] for i, row in enumerate(rows)][1:]
        return Poly2._raw(rows, self._den)

    def monomials(self):
        """Nonzero terms as ((i, j), coefficient) in graded lexicographic order."""
        terms = []
        for i, row in enumerate(self._num):
            for j, v in enumerate(row):
                if v:
                    terms.append(((i, j), Fraction(v, self._den)))
        terms.sort(key=lambda t: (t[0][0] + t[0][1], t[0]))
        return terms

    def __repr__(self):
        return f"Poly2({self!s})"

    def __str__(self):
        return _format_terms(self.monomials(), ("x", "y"))


def _format_terms(terms, names) -> str:
    if not terms:
        return "0"
    parts = []
    for exps, coeff in terms:
        factors = []
        for e, name in zip(exps, names):
            if e == 1:
                factors.append(name)
            elif e > 1:
                factors.append(f"{name}^{e}")
        if not factors:
            parts.append(str(coeff))
        elif coeff == 1:
            parts.append("*".join(factors))
        elif coeff == -1:
            parts.append("-" + "*".join(factors))
        else:
            parts.append(f"{coeff}*" + "*".join(factors))
    out = parts[0]
    for p in parts[1:]:
        out += " - " + p[1:] if p.startswith("-") else " + " + p
    return out


_POLY1_X = Poly1._raw([0, 1], 1)
_POLY2_X = Poly2._raw([[0], [1]], 1)
_POLY2_Y = Poly2._raw([[0, 1]], 1)
