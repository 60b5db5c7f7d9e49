import pytest
from six.moves import range

from orbiwreath.presentations import (GroupPresentation, count_index_n_subgroups,
                                      count_index_n_subgroups_by_actions, hall_counts)


class TestSubgroupGrowth(object):
    def test_sublattices_of_the_plane_follow_sigma(self):
        z2 = GroupPresentation.free_abelian(2)
        assert [count_index_n_subgroups(z2, n) for n in range(1, 7)] == [1, 3, 4, 7, 6, 12]

    def test_sublattices_of_space(self):
        z3 = GroupPresentation.free_abelian(3)
        assert [count_index_n_subgroups(z3, n) for n in range(1, 5)] == [1, 7, 13, 35]

    def test_hall_recursion(self):
        assert hall_counts(1, 5) == [1, 1, 1, 1, 1]
        assert hall_counts(2, 5) == [1, 3, 13, 71, 461]
        assert hall_counts(3, 4) == [1, 7, 97, 2143]

    @pytest.mark.parametrize('gamma, n_max', [
        (GroupPresentation.free(2), 3),
        (GroupPresentation.free_abelian(2), 4),
        (GroupPresentation.free_abelian(1), 4)
    ], ids=lambda value: value.describe() if isinstance(value, GroupPresentation) else str(value))
    def test_counts_match_transitive_actions(self, gamma, n_max):
        for n in range(1, n_max + 1):
            assert count_index_n_subgroups_by_actions(gamma, n) == count_index_n_subgroups(gamma, n)
