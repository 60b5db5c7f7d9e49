from fractions import Fraction

import pytest

from orbiwreath.exception import BadConstantTerm
from orbiwreath.series import (RationalSeries, egf, exp_series, geom_power, log_series, product_family,
                               series_equal)


class TestRationalSeries(object):
    def test_pads_and_truncates(self):
        assert RationalSeries([1, 2], 3).coefficients == (1, 2, 0, 0)
        assert RationalSeries([1, 2, 3, 4], 1).coefficients == (1, 2)
        assert RationalSeries(['1/2', 3]).truncation == 1

    def test_rejects_negative_truncation(self):
        with pytest.raises(ValueError):
            RationalSeries([1], -1)

    def test_constructors(self):
        assert RationalSeries.zero(2).coefficients == (0, 0, 0)
        assert RationalSeries.one(2).coefficients == (1, 0, 0)
        assert RationalSeries.monomial(2, 5, 3).coefficients == (0, 0, 5, 0)
        assert RationalSeries.monomial(4, 5, 3) == RationalSeries.zero(3)
        assert RationalSeries.from_function(lambda n: n * n, 3).coefficients == (0, 1, 4, 9)

    def test_multiplication(self):
        f = RationalSeries([1, 1], 2)
        assert (f * RationalSeries([1, -1], 2)).coefficients == (1, 0, -1)
        assert (f * 2).coefficients == (2, 2, 0)
        assert (Fraction(1, 2) * f).coefficients == (Fraction(1, 2), Fraction(1, 2), 0)

    def test_binary_operations_keep_the_smaller_truncation(self):
        total = RationalSeries([1, 1, 1], 2) + RationalSeries([1, 1], 1)
        assert total.truncation == 1
        assert total.coefficients == (2, 2)

    def test_subtraction_and_scalars(self):
        f = RationalSeries([3, 2, 1])
        assert (f - 1).coefficients == (2, 2, 1)
        assert (1 - f).coefficients == (-2, -2, -1)
        assert (-f + f) == RationalSeries.zero(2)

    def test_derivative(self):
        assert RationalSeries([1, 2, 3]).derivative() == RationalSeries([2, 6], 1)

    def test_truncate_to(self):
        assert RationalSeries([1, 2, 3]).truncate_to(1) == RationalSeries([1, 2])
        with pytest.raises(ValueError):
            RationalSeries([1, 2]).truncate_to(3)

    def test_substitute_power(self):
        assert RationalSeries([1, 1, 1, 1, 1]).substitute_power(2).coefficients == (1, 0, 1, 0, 1)

    def test_json(self):
        f = RationalSeries([Fraction(1, 2), 3])
        assert f.to_json() == ['1/2', '3']
        assert RationalSeries.from_json(f.to_json()) == f


class TestSeriesEqual(object):
    def test_equal(self):
        assert series_equal(RationalSeries([1, 2]), RationalSeries([1, 2]))

    def test_reports_the_first_mismatch(self):
        comparison = series_equal(RationalSeries([1, 2, 3, 5]), RationalSeries([1, 2, 4, 6]))
        assert not comparison
        assert comparison.index == 2
        assert (comparison.lhs, comparison.rhs) == (3, 4)

    def test_compares_up_to_the_smaller_truncation(self):
        assert series_equal(RationalSeries([1, 2, 3]), RationalSeries([1, 2]))


class TestExpLog(object):
    def test_exp_of_q(self):
        assert exp_series(RationalSeries([0, 1], 3)).coefficients == (1, 1, Fraction(1, 2), Fraction(1, 6))

    def test_exp_needs_zero_constant_term(self):
        with pytest.raises(BadConstantTerm):
            exp_series(RationalSeries([1, 1]))

    def test_log_of_a_geometric_series(self):
        geometric = RationalSeries([1, 1, 1, 1])
        assert log_series(geometric).coefficients == (0, 1, Fraction(1, 2), Fraction(1, 3))

    def test_log_needs_unit_constant_term(self):
        with pytest.raises(BadConstantTerm):
            RationalSeries([2, 1]).log()

    def test_log_inverts_exp(self):
        f = RationalSeries([0, Fraction(1, 2), -3, Fraction(2, 7), 1])
        assert f.exp().log() == f

    def test_exp_turns_sums_into_products(self):
        f = RationalSeries([0, 1, 2, 3])
        g = RationalSeries([0, Fraction(-1, 3), 0, 5])
        assert exp_series(f + g) == exp_series(f) * exp_series(g)


class TestProducts(object):
    def test_geom_power(self):
        assert geom_power(2, 2, 4).coefficients == (1, 0, 2, 0, 3)
        assert geom_power(1, 1, 3).coefficients == (1, 1, 1, 1)
        assert geom_power(1, -1, 3).coefficients == (1, -1, 0, 0)

    def test_geom_power_accepts_rational_exponents(self):
        assert geom_power(1, Fraction(1, 2), 2).coefficients == (1, Fraction(1, 2), Fraction(3, 8))

    def test_geom_power_needs_a_positive_step(self):
        with pytest.raises(ValueError):
            geom_power(0, 1, 3)

    def test_partitions_as_an_euler_product(self):
        series = product_family([geom_power(r, 1, 6) for r in range(1, 7)], 6)
        assert series.coefficients == (1, 1, 2, 3, 5, 7, 11)

    def test_empty_product_is_one(self):
        assert product_family([], 3) == RationalSeries.one(3)

    def test_egf(self):
        assert egf([1, 1, 2, 6], 3).coefficients == (1, 1, 1, 1)
