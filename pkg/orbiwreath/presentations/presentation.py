from collections import deque

import six
from six.moves import range

from ..exception import BadLetter, ConfigError

PRESETS = ('trivial', 'free_abelian', 'free', 'finite')


class GroupPresentation(object):
    """
    A finitely generated group given by generators and relator words

    Words are sequences of non-zero integers: +i is generator i (1-indexed)
    and -i its inverse.

    :Example:

    z2 = GroupPresentation.free_abelian(2)
    z2.relators  #=> [[1, 2, -1, -2]]
    """

    def __init__(self, generator_count, relators=(), preset=None, rank=None, group=None):
        if generator_count < 0:
            raise ValueError('generator count must be non-negative, got {}'.format(generator_count))
        if preset is not None and preset not in PRESETS:
            raise ValueError('unknown preset {!r}'.format(preset))
        self.generator_count = generator_count
        self.relators = [list(r) for r in relators]
        for word in self.relators:
            check_word(word, generator_count)
        self.preset = preset
        self.rank = generator_count if rank is None else rank
        self.group = group
        self.element_words = None
        self.generator_elements = None
        self.group_spec = None

    @classmethod
    def trivial(cls):
        return cls(0, preset='trivial', rank=0)

    @classmethod
    def free_abelian(cls, d):
        """ Z^d with the d(d-1)/2 commutator relators """
        if d == 0:
            return cls.trivial()
        relators = [[i, j, -i, -j] for i in range(1, d + 1) for j in range(i + 1, d + 1)]
        return cls(d, relators, preset='free_abelian', rank=d)

    @classmethod
    def free(cls, k):
        if k == 0:
            return cls.trivial()
        return cls(k, preset='free', rank=k)

    @classmethod
    def presented(cls, generator_count, relators):
        return cls(generator_count, relators)

    @classmethod
    def finite(cls, group):
        """
        Presentation of a finite group read off its Cayley graph

        Generators are group.generators; each element gets a breadth-first
        word and every non-tree edge e -g-> e*g contributes the relator
        word(e) g word(e*g)^-1.
        """
        gens = list(group.generators)
        words = {group.identity: []}
        queue = deque([group.identity])
        while queue:
            x = queue.popleft()
            for i, g in enumerate(gens):
                y = group.mul(x, g)
                if y not in words:
                    words[y] = words[x] + [i + 1]
                    queue.append(y)
        relators = []
        seen = set()
        for x in range(group.order):
            for i, g in enumerate(gens):
                word = reduce_word(words[x] + [i + 1] + invert_word(words[group.mul(x, g)]))
                if word and tuple(word) not in seen:
                    seen.add(tuple(word))
                    relators.append(word)
        presentation = cls(len(gens), relators, preset='finite', rank=len(gens), group=group)
        presentation.element_words = [words[x] for x in range(group.order)]
        presentation.generator_elements = tuple(gens)
        return presentation

    @property
    def kind(self):
        return self.preset or 'presented'

    @property
    def is_abelian_preset(self):
        return self.kind in ('trivial', 'free_abelian')

    @property
    def key(self):
        if self.kind == 'finite':
            return ('finite', self.group)
        return (self.kind, self.generator_count, tuple(tuple(r) for r in self.relators))

    def __eq__(self, other):
        return isinstance(other, GroupPresentation) and self.key == other.key

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash(self.key)

    def __repr__(self):
        return '#<GroupPresentation: {}>'.format(self.describe())

    def describe(self):
        if self.kind == 'trivial':
            return 'trivial'
        if self.kind == 'free_abelian':
            return 'Z^{}'.format(self.rank)
        if self.kind == 'free':
            return 'F{}'.format(self.rank)
        if self.kind == 'finite':
            return 'finite {}'.format(self.group.name)
        return '<{} | {} relators>'.format(self.generator_count, len(self.relators))

    def word_of(self, element):
        """ Word in the generators for an element of a finite presentation """
        if self.element_words is None:
            raise ValueError('{} carries no element words'.format(self.describe()))
        return self.element_words[element]

    def to_json(self):
        if self.kind == 'trivial':
            return {'kind': 'trivial'}
        if self.kind in ('free_abelian', 'free'):
            return {'kind': self.kind, 'rank': self.rank}
        if self.kind == 'finite':
            return {'kind': 'finite', 'group': self.group_spec}
        return {'kind': 'presented', 'rank': self.generator_count, 'relators': self.relators}

    @classmethod
    def from_json(cls, data):
        """
        Reads {"kind": trivial|free_abelian|free|presented|finite, "rank": d,
        "relators": [[...]], "group": {...}}

        :raises: ConfigError
        """
        if not isinstance(data, dict):
            raise ConfigError('presentation must be an object, got {!r}'.format(data))
        kind = data.get('kind')
        if kind == 'trivial':
            return cls.trivial()
        if kind == 'finite':
            from ..groups import builtin_group
            presentation = cls.finite(builtin_group(data.get('group')))
            presentation.group_spec = data.get('group')
            return presentation
        rank = data.get('rank')
        if not isinstance(rank, six.integer_types) or isinstance(rank, bool) or rank < 0:
            raise ConfigError('presentation rank must be a non-negative integer, got {!r}'.format(rank))
        if kind == 'free_abelian':
            return cls.free_abelian(rank)
        if kind == 'free':
            return cls.free(rank)
        if kind == 'presented':
            relators = data.get('relators', [])
            if not isinstance(relators, list) or not all(isinstance(r, list) for r in relators):
                raise ConfigError('relators must be a list of words')
            return cls.presented(rank, relators)
        raise ConfigError('unknown presentation kind {!r}'.format(kind))


def check_word(word, generator_count):
    for letter in word:
        if isinstance(letter, bool) or not isinstance(letter, six.integer_types) or letter == 0 \
                or abs(letter) > generator_count:
            raise BadLetter('letter {!r} outside generators 1..{}'.format(letter, generator_count))


def invert_word(word):
    return [-x for x in reversed(word)]


def reduce_word(word):
    """ Free reduction: cancels adjacent x, -x pairs """
    out = []
    for x in word:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return out


def evaluate_word(word, images, group):
    """
    Left-to-right product of generator images (and their inverses)

    :param word: signed 1-indexed letters
    :param images: one group element per generator
    :param group: target FiniteGroup
    :rtype: int
    :raises: BadLetter

    :Example:

    evaluate_word([1, -1], [3], s3)  #=> 0
    """
    result = group.identity
    inv = group.inv
    mul = group.mul
    count = len(images)
    for letter in word:
        if letter == 0 or abs(letter) > count:
            raise BadLetter('letter {} outside generators 1..{}'.format(letter, count))
        x = images[letter - 1] if letter > 0 else inv[images[-letter - 1]]
        result = mul(result, x)
    return result


def abelianize(word, rank):
    """ Exponent-sum vector of a word """
    vector = [0] * rank
    for letter in word:
        vector[abs(letter) - 1] += 1 if letter > 0 else -1
    return vector


def power_word(vector):
    """ The word e_1^v_1 ... e_d^v_d """
    word = []
    for i, v in enumerate(vector):
        word.extend([(i + 1) if v > 0 else -(i + 1)] * abs(v))
    return word
