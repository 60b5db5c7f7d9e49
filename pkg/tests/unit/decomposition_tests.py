import pytest

from orbiwreath.exception import TargetNotWreath, UnsupportedSource
from orbiwreath.groups import wreath_product
from orbiwreath.gspace import wreath_fixed_chi
from orbiwreath.presentations import GroupPresentation, Homomorphism, enumerate_homs
from orbiwreath.sectors import eta_split, phi_eta, psi, restrict_to_points


class TestEtaSplit(object):
    def test_identity_splits_into_points(self, z, z2):
        wreath = wreath_product(z2, 2)
        split = eta_split(Homomorphism(z, wreath, (wreath.identity,)))
        assert split.indices == [1, 1]
        assert split.degree == 2
        assert list(split.multiplicities.items()) == [((1, (0,)), 2)]

    def test_swap_is_irreducible(self, z, z2):
        wreath = wreath_product(z2, 2)
        split = eta_split(Homomorphism(z, wreath, (6,)))
        assert len(split) == 1
        assert split.indices == [2]
        record = split.records[0]
        assert record.gamma_set_class.is_transitive
        assert record.stabilizer_images == [1]
        assert record.rho.images == (1,)

    def test_degree_is_preserved(self, z_squared, z2):
        wreath = wreath_product(z2, 3)
        for theta in enumerate_homs(z_squared, wreath):
            assert eta_split(theta).degree == 3

    def test_recombine_matches_the_fixed_set(self, z, circle, z2):
        wreath = wreath_product(z2, 3)
        for theta in enumerate_homs(z, wreath):
            assert eta_split(theta, with_rho=False).recombine(circle) == wreath_fixed_chi(circle, theta)

    def test_rho_needs_a_known_stabilizer(self, z2):
        gamma = GroupPresentation.presented(1, [[1, 1]])
        wreath = wreath_product(z2, 2)
        theta = Homomorphism(gamma, wreath, (4,))
        assert eta_split(theta, with_rho=False).indices == [2]
        with pytest.raises(UnsupportedSource):
            eta_split(theta)

    def test_needs_a_wreath_target(self, z, s3):
        with pytest.raises(TargetNotWreath):
            eta_split(Homomorphism(z, s3, (1,)))


class TestRestrictToPoints(object):
    def test_relabels_an_invariant_block(self, z, z2):
        wreath = wreath_product(z2, 3)
        # ((1, 0, 1), (2 3)) keeps {0} and {1, 2}
        element = wreath.encode(((1, 0, 1), (0, 2, 1)))
        theta = Homomorphism(z, wreath, (element,))
        block = restrict_to_points(theta, [1, 2])
        target = block.target
        assert target.degree == 2
        assert target.decode(block.images[0]) == ((0, 1), (1, 0))


class TestAllHomSums(object):
    def test_psi(self, z, point_z2):
        assert [psi(n, z, point_z2) for n in range(4)] == [1, 1, 2, 6]

    def test_phi_eta(self, z, point_z2):
        assert [phi_eta(n, z, point_z2) for n in range(4)] == [0, 1, 1, 2]
