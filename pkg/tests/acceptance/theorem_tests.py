from fractions import Fraction

import pytest

import orbiwreath
from orbiwreath.identities import dm_psi, lhs_series, verify
from orbiwreath.presentations import GroupPresentation

BOTH = ('euler', 'euler_satake')


class TestEulerSatakeIdentity(object):
    def test_z_on_a_point_is_geometric(self, z, point_z2):
        report = verify('thm-es', z, point_z2, 5)
        assert report.passed
        assert report.to_dict()['lhs'] == ['1'] * 6

    def test_z_on_an_s3_point(self, z, point_s3):
        report = verify('thm-es', z, point_s3, 3)
        assert report.passed
        assert report.to_dict()['lhs'] == ['1'] * 4

    def test_z_on_the_circle(self, z, circle):
        report = verify('thm-es', z, circle, 4)
        assert report.passed
        assert report.to_dict()['rhs'] == ['1'] * 5

    def test_z_squared_counts_classes(self, z_squared, point_z2):
        report = verify('thm-es', z_squared, point_z2, 3)
        assert report.passed
        assert report.to_dict()['lhs'] == ['1', '2', '5', '10']

    def test_free_source(self, free2, point_z2):
        report = verify('thm-es', free2, point_z2, 3)
        assert report.passed
        assert report.to_dict()['lhs'] == ['1', '2', '8', '48']

    def test_finite_source(self, z2, point_z2):
        assert verify('thm-es', GroupPresentation.finite(z2), point_z2, 3).passed


class TestEulerIdentity(object):
    def test_z_on_a_point(self, z, point_z2):
        report = verify('thm-euler', z, point_z2, 4)
        assert report.passed
        assert report.to_dict()['lhs'] == ['1', '2', '5', '10', '20']

    def test_z_on_an_s3_point(self, z, point_s3):
        report = verify('thm-euler', z, point_s3, 3)
        assert report.passed
        assert report.to_dict()['lhs'] == ['1', '3', '9', '22']

    def test_trivial_source_on_the_circle(self, trivial, circle):
        report = verify('thm-euler', trivial, circle, 5)
        assert report.passed
        assert report.to_dict()['rhs'] == ['1'] * 6

    def test_z_squared_on_the_circle(self, z_squared, circle):
        assert verify('thm-euler', z_squared, circle, 3).passed


class TestProductIdentity(object):
    @pytest.mark.parametrize('inv', BOTH)
    def test_z_on_a_point(self, inv, z, point_z2):
        assert verify('thm-product', z, point_z2, 4, inv=inv).passed

    @pytest.mark.parametrize('inv', BOTH)
    def test_z_squared_on_the_circle(self, inv, z_squared, circle):
        assert verify('thm-product', z_squared, circle, 3, inv=inv).passed


class TestDmIdentity(object):
    def test_z_on_a_point(self, z, point_z2):
        assert verify('thm-dm', z, point_z2, 4).passed

    def test_z_squared_on_a_point(self, z_squared, point_z2):
        assert verify('thm-dm', z_squared, point_z2, 3).passed

    def test_z_on_an_s3_point(self, z, point_s3):
        assert verify('thm-dm', z, point_s3, 3).passed

    def test_presented_commutator(self, point_z2):
        gamma = GroupPresentation.presented(2, [[1, 2, -1, -2]])
        report = verify('thm-dm', gamma, point_z2, 3)
        assert report.passed
        assert report.to_dict()['lhs'] == ['1', '2', '5', '10']

    def test_psi_is_the_euler_satake_series(self, z_squared, circle):
        assert dm_psi(z_squared, circle, 3) == lhs_series('euler_satake', z_squared, circle, 3)


class TestGammaSetIdentity(object):
    @pytest.mark.parametrize('inv', BOTH)
    def test_z_on_a_point(self, inv, z, point_z2):
        assert verify('thm-gammaset', z, point_z2, 4, inv=inv).passed

    @pytest.mark.parametrize('inv', BOTH)
    def test_z_on_the_circle(self, inv, z, circle):
        assert verify('thm-gammaset', z, circle, 3, inv=inv).passed


class TestMacdonald(object):
    @pytest.mark.parametrize('inv', BOTH)
    def test_circle(self, inv, trivial, circle):
        assert verify('macdonald', trivial, circle, 5, inv=inv).passed

    def test_natural_s3(self, trivial, natural_s3):
        orbiwreath.order_cap = 10 ** 6
        assert verify('macdonald', trivial, natural_s3, 5, inv='euler').to_dict()['lhs'] == ['1'] * 6
        report = verify('macdonald', trivial, natural_s3, 5)
        assert report.passed
        assert report.lhs.coefficients == (1, Fraction(1, 2), Fraction(1, 8), Fraction(1, 48), Fraction(1, 384),
                                           Fraction(1, 3840))
