"""Exact polynomial algebra: canonical form, ring laws, substitutions."""

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from bernkit.polynomials import Poly1, Poly2, as_scalar, scalar_str

fractions_st = st.fractions(min_value=-5, max_value=5, max_denominator=12)
poly1_st = st.lists(fractions_st, max_size=6).map(Poly1)
poly2_st = st.lists(st.lists(fractions_st, max_size=4), max_size=4).map(Poly2)


class TestScalars:
    def test_as_scalar_parses_ratio_strings(self):
        assert as_scalar("3/4") == Fraction(3, 4)
        assert as_scalar(7) == 7

    def test_scalar_str_roundtrip(self):
        for value in (Fraction(3, 4), Fraction(-5, 7), Fraction(0), Fraction(12)):
            assert Fraction(scalar_str(value)) == value


class TestPoly1Canonical:
    def test_trailing_zeros_trimmed(self):
        assert Poly1([1, 2, 0, 0]) == Poly1([1, 2])
        assert Poly1([1, 2, 0, 0]).degree == 1

    def test_zero_polynomial(self):
        zero = Poly1([0, 0])
        assert not zero
        assert zero.degree == -1
        assert zero == Poly1()

    def test_equal_values_equal_objects(self):
        assert Poly1([Fraction(1, 2), Fraction(1, 3)]) == Poly1([Fraction(2, 4), Fraction(2, 6)])
        assert hash(Poly1([Fraction(1, 2)])) == hash(Poly1([Fraction(2, 4)]))

    def test_scalar_comparison(self):
        assert Poly1([Fraction(3, 2)]) == Fraction(3, 2)
        assert Poly1() == 0
        assert Poly1([0, 1]) != 1

    def test_coefficient_out_of_range_is_zero(self):
        assert Poly1([1, 2]).coefficient(17) == 0


class TestPoly1Arithmetic:
    def test_product_example(self):
        # (1 + x)(1 - x) = 1 - x^2
        assert Poly1([1, 1]) * Poly1([1, -1]) == Poly1([1, 0, -1])

    def test_scalar_multiplication(self):
        assert Poly1([1, 2]) * Fraction(1, 2) == Poly1([Fraction(1, 2), 1])

    def test_pow_matches_repeated_multiplication(self):
        p = Poly1([1, Fraction(2, 3)])
        assert p**4 == p * p * p * p
        assert p**0 == 1

    def test_negative_power_rejected(self):
        with pytest.raises(ValueError):
            Poly1([1, 1]) ** -1

    def test_evaluate_horner(self):
        p = Poly1([1, -3, 2])  # 1 - 3x + 2x^2
        assert p.evaluate(Fraction(1, 2)) == 1 - Fraction(3, 2) + Fraction(1, 2)

    def test_derivative(self):
        p = Poly1([5, 1, 0, 2])  # 5 + x + 2x^3
        assert p.derivative() == Poly1([1, 0, 6])
        assert p.derivative(3) == Poly1([12])
        assert p.derivative(4) == Poly1()

    @given(poly1_st, poly1_st, poly1_st)
    def test_ring_laws(self, a, b, c):
        assert a + b == b + a
        assert a * b == b * a
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c

    @given(poly1_st, fractions_st)
    def test_evaluation_is_a_ring_morphism(self, p, x):
        q = Poly1([1, -2, 3])
        assert (p * q).evaluate(x) == p.evaluate(x) * q.evaluate(x)
        assert (p + q).evaluate(x) == p.evaluate(x) + q.evaluate(x)

    @given(poly1_st, poly1_st)
    def test_compose_agrees_with_evaluation(self, p, q):
        x = Fraction(2, 7)
        composed = p.compose(q)
        assert composed.evaluate(x) == p.evaluate(q.evaluate(x))


class TestPoly2:
    def test_grid_indexing(self):
        p = Poly2([[1, 2], [3, 0]])  # 1 + 2y + 3x
        assert p.coefficient(0, 1) == 2
        assert p.coefficient(1, 0) == 3
        assert p.coefficient(5, 5) == 0
        assert p.deg_x == 1 and p.deg_y == 1
        assert p.total_degree == 1

    def test_trim_to_canonical(self):
        assert Poly2([[1, 0], [0, 0]]) == Poly2([[1]])
        assert not Poly2([[0, 0], [0, 0]])

    def test_xy_product(self):
        assert Poly2.x() * Poly2.y() == Poly2([[0, 0], [0, 1]])

    def test_pow(self):
        p = Poly2.x() + Poly2.y()
        assert p**2 == Poly2([[0, 0, 1], [0, 2], [1]])

    @given(poly2_st, poly2_st, poly2_st)
    def test_ring_laws(self, a, b, c):
        assert a + b == b + a
        assert a * b == b * a
        assert a * (b + c) == a * b + a * c

    @given(poly2_st, fractions_st, fractions_st)
    def test_specializing_y_matches_grid_evaluation(self, p, x, y):
        assert p.substitute_y(y).evaluate(x) == p.evaluate(x, y)

    @given(poly2_st, fractions_st, fractions_st)
    def test_specializing_x_matches_grid_evaluation(self, p, x, y):
        assert p.substitute_x(x).evaluate(y) == p.evaluate(x, y)

    def test_diff_x(self):
        p = Poly2([[0, 1], [2, 0], [0, 3]])  # y + 2x + 3x^2 y
        assert p.diff_x() == Poly2([[2], [0, 6]])

    def test_embeddings(self):
        p = Poly1([1, 2, 3])
        assert p.as_poly2_in_x() == Poly2([[1], [2], [3]])
        assert p.as_poly2_in_y() == Poly2([[1, 2, 3]])
        assert p.as_poly2_in_x().substitute_y(0) == p

    def test_monomial_order_is_graded_lex(self):
        p = Poly2([[0, 0, 5], [0, 3], [7]])  # 5y^2 + 3xy + 7x^2
        exps = [e for e, _ in p.monomials()]
        assert exps == [(0, 2), (1, 1), (2, 0)]
