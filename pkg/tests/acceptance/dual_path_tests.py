import pytest

import orbiwreath
from orbiwreath.groups import all_subgroups, cyclic, symmetric
from orbiwreath.gspace import FiniteGSet, GSpaceDescriptor, descriptor_from_gset, descriptor_from_table
from orbiwreath.presentations import GammaSetClass, GroupPresentation, coset_action
from orbiwreath.sectors import gamma_extension, gamma_set_extension_bruteforce, gamma_set_extension_direct

# room for S3(S4) = 31104; degree 6 (Z2(S6) = 46080, S3(S6) ~ 3.4e7) stays out of reach
ORDER_CAP = 40000
MAX_INDEX = 4


def spaces():
    z2, s3 = cyclic(2), symmetric(3)
    return [('point/Z2', GSpaceDescriptor.point(z2)),
            ('circle/Z2', descriptor_from_table(z2, [([], 0), ([1], 2)])),
            ('point/S3', GSpaceDescriptor.point(s3)),
            ('natural/S3', descriptor_from_gset(FiniteGSet.natural(s3)))]


# (source, number of subgroups of index above MAX_INDEX)
SOURCES = [(GroupPresentation.finite(cyclic(2)), 0), (GroupPresentation.finite(cyclic(4)), 0),
           (GroupPresentation.finite(symmetric(3)), 1)]


class TestDualPath(object):
    @pytest.mark.parametrize('inv', ('euler', 'euler_satake'))
    @pytest.mark.parametrize('gamma, skip_count', SOURCES, ids=['Z2', 'Z4', 'S3'])
    @pytest.mark.parametrize('name, desc', spaces())
    def test_direct_matches_bruteforce(self, inv, gamma, skip_count, name, desc):
        orbiwreath.order_cap = ORDER_CAP
        subgroups = all_subgroups(gamma.group)
        skipped = [h for h in subgroups if h.index > MAX_INDEX]
        assert len(skipped) == skip_count
        assert all(h.order == 1 and h.index == 6 for h in skipped)
        checked = 0
        for h in subgroups:
            if h.index > MAX_INDEX:
                continue
            gclass = GammaSetClass.from_hom(coset_action(gamma, h))
            direct = gamma_set_extension_direct(inv, gamma, h, desc).value
            brute = gamma_set_extension_bruteforce(inv, gamma, gclass, desc).value
            assert direct == brute, (name, list(h.elements))
            if h.index == 1:
                assert direct == gamma_extension(inv, gamma, desc).value
            checked += 1
        assert checked == len(subgroups) - len(skipped)

    def test_every_subgroup_of_z4_is_reached(self):
        assert sorted(h.index for h in all_subgroups(cyclic(4))) == [1, 2, 4]
