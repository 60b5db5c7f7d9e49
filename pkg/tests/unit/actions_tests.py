import pytest

from orbiwreath.exception import TargetNotWreath, UnsupportedSource
from orbiwreath.groups import WreathElement, subgroup_generated, symmetric, trivial_subgroup, wreath_product
from orbiwreath.presentations import (GammaSetClass, GroupPresentation, Homomorphism, coset_action,
                                      count_transitive_homs, gamma_set_classes, literal_stabilizer,
                                      orbit_structure, restrict_to_orbit, stabilizer_images, transitive_classes,
                                      underlying_permutation_hom)


def swap_hom(gamma, base):
    """ theta sending every generator of gamma to ((g, e), (1 2)) in base(S2) """
    wreath = wreath_product(base, 2)
    images = [wreath.encode(WreathElement((1 % base.order, 0), (1, 0)))] * gamma.generator_count
    return Homomorphism(gamma, wreath, images)


class TestGammaSetClass(object):
    def test_canonical_form_ignores_labelling(self, z):
        a = GammaSetClass.from_permutations(z, 3, [(1, 0, 2)])
        b = GammaSetClass.from_permutations(z, 3, [(0, 2, 1)])
        assert a == b
        assert a.orbit_sizes == (1, 2)
        assert not a.is_transitive

    def test_transitive_classes_of_z(self, z):
        classes = transitive_classes(z, 3)
        assert len(classes) == 1
        gclass, count = classes[0]
        assert count == 2
        assert gclass.is_transitive
        assert gclass.orbit_sizes == (3,)

    def test_multiples_and_unions(self, z):
        gclass = transitive_classes(z, 2)[0][0]
        assert gclass.multiple(0) == GammaSetClass.empty(z)
        tripled = gclass.multiple(3)
        assert tripled.degree == 6
        assert tripled.orbit_sizes == (2, 2, 2)
        single = transitive_classes(z, 1)[0][0]
        assert gclass.disjoint_union(single).orbit_sizes == (1, 2)

    def test_all_gamma_sets_of_z_are_partitions(self, z):
        assert len(gamma_set_classes(z, 4)) == 5

    def test_transitive_z_squared_sets_of_degree_two(self, z_squared):
        assert len(transitive_classes(z_squared, 2)) == 3

    def test_transitive_hom_counts(self, free2):
        assert count_transitive_homs(free2, 2) == 3
        assert count_transitive_homs(free2, 3) == 26


class TestOrbitStructure(object):
    def test_orbits_with_basepoints_and_transversals(self, z):
        sym = symmetric(4)
        action = Homomorphism(z, sym, [sym.index_of((1, 0, 3, 2))])
        orbits = orbit_structure(action)
        assert [o.points for o in orbits] == [(0, 1), (2, 3)]
        assert [o.basepoint for o in orbits] == [0, 2]
        assert orbits[0].transversal[1] == [1]

    def test_schreier_words_generate_the_stabilizer(self, z):
        sym = symmetric(3)
        action = Homomorphism(z, sym, [sym.index_of((1, 2, 0))])
        orbit = orbit_structure(action)[0]
        assert orbit.size == 3
        assert orbit.schreier_words == [[1, 1, 1]]

    def test_underlying_permutation_needs_a_wreath_target(self, s3, z):
        with pytest.raises(TargetNotWreath):
            underlying_permutation_hom(Homomorphism(z, s3, (1,)))


class TestRestriction(object):
    def test_stabilizer_images_read_the_holonomy(self, z, z2):
        theta = swap_hom(z, z2)
        orbit = orbit_structure(underlying_permutation_hom(theta))[0]
        assert stabilizer_images(theta, orbit) == [1]

    def test_restriction_from_z_lands_on_z(self, z, z2):
        theta = swap_hom(z, z2)
        orbit = orbit_structure(underlying_permutation_hom(theta))[0]
        rho = restrict_to_orbit(theta, orbit)
        assert rho.source == GroupPresentation.free_abelian(1)
        assert rho.images == (1,)

    def test_restriction_from_a_free_group_uses_the_schreier_rank(self, free2, z2):
        theta = swap_hom(free2, z2)
        orbit = orbit_structure(underlying_permutation_hom(theta))[0]
        rho = restrict_to_orbit(theta, orbit)
        assert rho.source == GroupPresentation.free(3)

    def test_restriction_needs_a_known_stabilizer(self, z2):
        gamma = GroupPresentation.presented(1, [[1, 1]])
        theta = swap_hom(gamma, z2)
        orbit = orbit_structure(underlying_permutation_hom(theta))[0]
        with pytest.raises(UnsupportedSource):
            restrict_to_orbit(theta, orbit)


class TestCosetAction(object):
    def test_action_on_cosets_of_a_transposition(self, s3):
        gamma = GroupPresentation.finite(s3)
        h = subgroup_generated(s3, [1])
        action = coset_action(gamma, h)
        assert action.target.degree == 3
        assert [o.size for o in orbit_structure(action)] == [3]
        assert literal_stabilizer(gamma, action, 0) == h

    def test_regular_action(self, z4):
        gamma = GroupPresentation.finite(z4)
        action = coset_action(gamma, trivial_subgroup(z4))
        assert action.target.degree == 4
        assert literal_stabilizer(gamma, action, 0).order == 1

    def test_needs_a_finite_source(self, z, s3):
        with pytest.raises(UnsupportedSource):
            coset_action(z, trivial_subgroup(s3))
