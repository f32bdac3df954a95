from fractions import Fraction

import pytest
from gmpy2 import mpq
from hypothesis import given, settings
from hypothesis import strategies as st

from planeform.arith import (
    EXACT,
    NUMERIC,
    ONE,
    ZERO,
    GaussianRational,
    I,
    MonicPoly,
    RootMultiset,
    close,
    elem_sym,
    exact,
    format_scalar,
    parse_scalar,
    poly_from_roots,
    roots_of_poly,
)
from planeform.errors import DegreeError, ParseError

from generators import gaussian_rationals, small_ints, small_rationals


def q(x):
    return exact(Fraction(x))


class TestGaussianRational:
    def test_arithmetic(self):
        z = exact(1) + 2 * I
        w = q("1/2") - I
        assert z + w == q("3/2") + I
        assert z * w == q("5/2")  # (1 + 2i)(1/2 - i)
        assert (z / w) * w == z
        assert z - z == ZERO
        assert -z == exact(-1) - 2 * I
        assert I * I == exact(-1)
        assert z ** 0 == ONE
        assert z ** -1 * z == ONE

    def test_real_values_hash_like_rationals(self):
        assert exact(3) == 3
        assert hash(exact(3)) == hash(mpq(3))
        assert {exact(2): "a"}[exact(Fraction(4, 2))] == "a"

    def test_floats_are_rejected_in_exact_arithmetic(self):
        with pytest.raises(TypeError):
            exact(1) + 0.5

    def test_float_conversion_keeps_binary_value(self):
        assert exact(0.5) == q("1/2")
        assert exact(complex(0.25, -1)) == q("1/4") - I

    def test_division_by_zero(self):
        with pytest.raises(ZeroDivisionError):
            ONE / ZERO

    @given(small_ints, st.integers(1, 30), small_ints, st.integers(1, 30))
    def test_parts_stay_reduced(self, a, b, c, d):
        x = exact(mpq(a, b)) + exact(mpq(c, d)) * I
        y = exact(mpq(c, d)) - I
        for z in (x + y, x - y, x * y, x / y):
            for part in (z.re, z.im):
                assert part.denominator > 0
                f = Fraction(int(part.numerator), int(part.denominator))
                assert (f.numerator, f.denominator) == (int(part.numerator), int(part.denominator))


class TestScalarText:
    @pytest.mark.parametrize("text, value", [
        ("3", exact(3)),
        ("-1/2", q("-1/2")),
        ("3i", 3 * I),
        ("-1/2-3i", q("-1/2") - 3 * I),
        ("2/3+1/5i", q("2/3") + q("1/5") * I),
        ("i", I),
        ("-j", -I),
        ("0.25", q("1/4")),
    ])
    def test_parse_exact(self, text, value):
        assert parse_scalar(text, EXACT) == value

    def test_parse_numeric(self):
        assert parse_scalar("1/4-2i", NUMERIC) == complex(0.25, -2)

    @pytest.mark.parametrize("bad", ["", "abc", "1//2", "1+", "2i3"])
    def test_parse_errors(self, bad):
        with pytest.raises(ParseError):
            parse_scalar(bad)

    @given(gaussian_rationals)
    def test_round_trip(self, z):
        assert parse_scalar(format_scalar(z)) == z

    def test_format(self):
        assert format_scalar(exact(-2)) == "-2"
        assert format_scalar(q("1/2") - 3 * I) == "1/2-3i"
        assert format_scalar(3 * I) == "3i"


class TestElemSym:
    def test_empty_product(self):
        assert elem_sym(0, [exact(7), exact(9)]) == 1

    def test_running_example_entries(self):
        # -e_2(1, 2) and e_1(1, 2) are the entries -2 and 3 of the 8x8 example
        assert elem_sym(2, [exact(1), exact(2)]) == 2
        assert elem_sym(1, [exact(1), exact(2)]) == 3

    def test_degree_three(self):
        assert elem_sym(3, [exact(2), exact(3), exact(5)]) == 30

    def test_degree_out_of_range(self):
        with pytest.raises(DegreeError):
            elem_sym(3, [ONE, ONE])

    @given(st.lists(gaussian_rationals, max_size=5), gaussian_rationals, st.integers(1, 6))
    def test_pascal_recurrence(self, values, x, k):
        if k > len(values) + 1:
            return
        lhs = elem_sym(k, values + [x])
        prev = elem_sym(k - 1, values)
        cur = elem_sym(k, values) if k <= len(values) else ZERO
        assert lhs == cur + x * prev


class TestPolynomials:
    def test_from_roots_running_example(self):
        p = poly_from_roots(RootMultiset(((exact(1), 1), (exact(2), 1))))
        assert p.low == (exact(-2), exact(3))

    def test_from_roots_linear(self):
        lam = q("2/3") + I
        assert poly_from_roots([lam]).low == (lam,)

    def test_from_roots_double(self):
        assert poly_from_roots(RootMultiset(((exact(1), 2),))).low == (exact(-1), exact(2))

    def test_coefficients_and_evaluation(self):
        p = MonicPoly((exact(-2), exact(3)))
        assert p.coefficients() == [exact(2), exact(-3), ONE]
        assert p(exact(1)) == 0 and p(exact(2)) == 0 and p(exact(3)) == 2

    @pytest.mark.parametrize("low, expected", [
        ((exact(-2), exact(3)), ((exact(1), 1), (exact(2), 1))),
        ((q("5/3"),), ((q("5/3"), 1),)),
        ((exact(-1), exact(2)), ((exact(1), 2),)),
    ])
    def test_roots_exact(self, low, expected):
        assert roots_of_poly(MonicPoly(low)).entries == expected

    def test_root_multiset_sorted(self):
        r = RootMultiset.from_values([exact(2), I, exact(-1), exact(2)])
        assert r.entries == ((exact(-1), 1), (I, 1), (exact(2), 2))
        assert r.degree == 4
        assert r.multiplicity(exact(2)) == 2

    @settings(max_examples=60, deadline=None)
    @given(st.lists(gaussian_rationals, min_size=1, max_size=5))
    def test_roots_of_product_recover_multiset(self, values):
        r = RootMultiset.from_values(values)
        assert roots_of_poly(poly_from_roots(r)) == r

    @settings(max_examples=40, deadline=None)
    @given(st.lists(gaussian_rationals, min_size=1, max_size=4))
    def test_split_polynomial_round_trip(self, values):
        p = poly_from_roots(values)
        assert poly_from_roots(roots_of_poly(p)) == p

    @settings(max_examples=40, deadline=None)
    @given(st.lists(small_rationals, min_size=1, max_size=4))
    def test_numeric_roots_match_exact(self, values):
        distinct = sorted(set(values), key=lambda v: v.re)
        p = poly_from_roots(distinct)
        numeric = roots_of_poly(MonicPoly(tuple(complex(a) for a in p.low)), NUMERIC, 1e-6)
        assert numeric.degree == len(distinct)
        for v in distinct:
            assert numeric.multiplicity(complex(v), 1e-6) == 1

    def test_close_modes(self):
        assert close(exact(1), exact(1))
        assert not close(exact(1), q("1000000001/1000000000") * 1)
        assert close(1 + 1e-12j, 1.0)
        assert isinstance(GaussianRational(1, 2), GaussianRational)
