import pytest

from orbiwreath.exception import BadLetter, ConfigError
from orbiwreath.groups import symmetric
from orbiwreath.presentations import (GroupPresentation, abelianize, evaluate_word, invert_word, power_word,
                                      reduce_word)


class TestPresets(object):
    def test_free_abelian_carries_commutators(self):
        z2 = GroupPresentation.free_abelian(2)
        assert z2.relators == [[1, 2, -1, -2]]
        assert z2.kind == 'free_abelian'
        assert z2.is_abelian_preset
        assert z2.describe() == 'Z^2'

    def test_rank_zero_is_trivial(self):
        assert GroupPresentation.free_abelian(0).kind == 'trivial'
        assert GroupPresentation.free(0).kind == 'trivial'

    def test_free_has_no_relators(self):
        f2 = GroupPresentation.free(2)
        assert f2.relators == []
        assert not f2.is_abelian_preset
        assert f2.describe() == 'F2'

    def test_presented(self):
        p = GroupPresentation.presented(1, [[1, 1]])
        assert p.kind == 'presented'
        assert p.describe() == '<1 | 1 relators>'

    def test_rejects_letters_outside_the_generators(self):
        with pytest.raises(BadLetter):
            GroupPresentation.presented(1, [[1, 2]])
        with pytest.raises(BadLetter):
            GroupPresentation.presented(1, [[0]])

    def test_equality_follows_the_key(self):
        assert GroupPresentation.free_abelian(2) == GroupPresentation.free_abelian(2)
        assert GroupPresentation.free_abelian(2) != GroupPresentation.free(2)
        assert len({GroupPresentation.free(2), GroupPresentation.free(2)}) == 1


class TestFinitePresentation(object):
    def test_relators_hold_in_the_group(self, s3):
        p = GroupPresentation.finite(s3)
        images = list(p.generator_elements)
        for word in p.relators:
            assert evaluate_word(word, images, s3) == s3.identity

    def test_element_words_evaluate_to_their_element(self, s3):
        p = GroupPresentation.finite(s3)
        images = list(p.generator_elements)
        for x in s3.elements:
            assert evaluate_word(p.word_of(x), images, s3) == x

    def test_describes_its_group(self, z4):
        assert GroupPresentation.finite(z4).describe() == 'finite Z/4'
        assert GroupPresentation.finite(z4) == GroupPresentation.finite(z4)

    def test_word_of_needs_a_finite_presentation(self):
        with pytest.raises(ValueError):
            GroupPresentation.free(1).word_of(0)


class TestFromJson(object):
    @pytest.mark.parametrize('data, kind', [
        ({'kind': 'trivial'}, 'trivial'),
        ({'kind': 'free_abelian', 'rank': 2}, 'free_abelian'),
        ({'kind': 'free', 'rank': 3}, 'free'),
        ({'kind': 'presented', 'rank': 2, 'relators': [[1, 1], [2, 2, 2]]}, 'presented'),
        ({'kind': 'finite', 'group': {'kind': 'symmetric', 'n': 3}}, 'finite')
    ])
    def test_reads_every_kind(self, data, kind):
        assert GroupPresentation.from_json(data).kind == kind

    def test_writes_back_what_it_read(self):
        data = {'kind': 'finite', 'group': {'kind': 'cyclic', 'n': 3}}
        assert GroupPresentation.from_json(data).to_json() == data

    @pytest.mark.parametrize('data', [
        'Z^2',
        {'kind': 'free', 'rank': -1},
        {'kind': 'free', 'rank': True},
        {'kind': 'presented', 'rank': 1, 'relators': [1, 1]},
        {'kind': 'surface', 'rank': 2}
    ])
    def test_rejects_malformed_input(self, data):
        with pytest.raises(ConfigError):
            GroupPresentation.from_json(data)


class TestWords(object):
    def test_evaluates_left_to_right(self):
        s3 = symmetric(3)
        a, b = s3.index_of((1, 0, 2)), s3.index_of((0, 2, 1))
        assert evaluate_word([1, 2], [a, b], s3) == s3.mul(a, b)
        assert evaluate_word([1, -1], [3], s3) == s3.identity
        assert evaluate_word([-1], [3], s3) == 4

    def test_evaluation_checks_letters(self, s3):
        with pytest.raises(BadLetter):
            evaluate_word([2], [3], s3)

    def test_word_helpers(self):
        assert invert_word([1, -2, 3]) == [-3, 2, -1]
        assert reduce_word([1, 2, -2, -1, 3]) == [3]
        assert abelianize([1, 2, -1, 2], 2) == [0, 2]
        assert power_word([2, -1]) == [1, 1, -2]
