import multiprocessing
from collections import deque
from concurrent.futures import ThreadPoolExecutor

from six.moves import range

import orbiwreath
from .presentation import evaluate_word
from ..exception import InvalidHomomorphism, SearchCapExceeded
from ..stats import counters

# below this many search nodes the enumeration stays on the calling thread
_FANOUT_MIN = 4096


class Homomorphism(object):
    """
    A homomorphism from a presented group, stored as one target element per generator

    :Example:

    theta = Homomorphism(GroupPresentation.free_abelian(1), s3, (3,))
    theta.images  #=> (3,)
    """

    __slots__ = ('source', 'target', 'images')

    def __init__(self, source, target, images, check=False):
        self.source = source
        self.target = target
        self.images = tuple(images)
        if len(self.images) != source.generator_count:
            raise InvalidHomomorphism('{} images given for {} generators'.format(
                len(self.images), source.generator_count))
        if check:
            self.validate()

    def validate(self):
        """
        :raises: InvalidHomomorphism when a relator does not evaluate to the identity
        """
        for word in self.source.relators:
            if evaluate_word(word, self.images, self.target) != self.target.identity:
                raise InvalidHomomorphism('relator {} is not satisfied by images {}'.format(word, list(self.images)))
        return self

    def __call__(self, word):
        return evaluate_word(word, self.images, self.target)

    def __eq__(self, other):
        return isinstance(other, Homomorphism) and self.target is other.target \
            and self.source == other.source and self.images == other.images

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash((self.source, self.images))

    def __repr__(self):
        return '#<Homomorphism: {} -> {} images={}>'.format(self.source.describe(), self.target.name,
                                                          list(self.images))


class HomClass(object):
    """ A conjugacy class of homomorphisms under simultaneous conjugation of the images """

    def __init__(self, representative, size):
        self.representative = representative
        self.size = size
        self._centralizer = None

    @property
    def target(self):
        return self.representative.target

    @property
    def images(self):
        return self.representative.images

    @property
    def centralizer_order(self):
        return self.target.order // self.size

    @property
    def centralizer(self):
        """
        C_G(theta), the centralizer of the image set

        :rtype: orbiwreath.groups.Subgroup
        """
        if self._centralizer is None:
            from ..groups import centralizer
            self._centralizer = centralizer(self.target, self.images)
        return self._centralizer

    def __repr__(self):
        return '#<HomClass: {} size={}>'.format(list(self.images), self.size)


def enumerate_homs(source, target, cap=None, threads=None):
    """
    All homomorphisms source -> target in lexicographic order of images

    Depth-first over generator images; a relator is checked as soon as every
    generator it mentions has an image.

    :param source: GroupPresentation
    :param target: FiniteGroup
    :param cap: search size limit, defaults to orbiwreath.node_cap
    :param threads: workers for the split by first image, defaults to orbiwreath.threads;
        they share the GIL, so this splits the work without speeding it up
    :rtype: list
    :raises: SearchCapExceeded
    """
    k = source.generator_count
    cap = orbiwreath.node_cap if cap is None else cap
    size = target.order ** k
    if size > cap:
        raise SearchCapExceeded('searching {} candidate images from {} into group of order {} exceeds '
                                'node cap {}'.format(size, source.describe(), target.order, cap),
                                size=size, cap=cap)
    key = ('homs', source.key)
    cached = target.cache.get(key)
    if cached is not None:
        return cached
    orbiwreath.logger.cap_warning('homomorphism search', size, cap)
    checks = [[] for _ in range(k)]
    for word in source.relators:
        if word:
            checks[max(abs(x) for x in word) - 1].append(word)

    if k == 0:
        found = [()]
    else:
        threads = threads or orbiwreath.threads or multiprocessing.cpu_count()
        if threads > 1 and size >= _FANOUT_MIN and target.order > 1:
            with ThreadPoolExecutor(max_workers=threads) as executor:
                parts = executor.map(lambda first: _search(target, k, checks, first), range(target.order))
                found = [images for part in parts for images in part]
        else:
            found = [images for first in range(target.order) for images in _search(target, k, checks, first)]
    homs = [Homomorphism(source, target, images) for images in found]
    counters.add(homs=len(homs))
    orbiwreath.logger.info('Enumerated {} homomorphisms {} -> {}'.format(len(homs), source.describe(), target.name))
    target.cache[key] = homs
    return homs


def hom_conjugacy_classes(homs, target):
    """
    Orbits of homomorphisms under simultaneous conjugation

    Representatives are the lexicographically minimal image tuples; the
    result is sorted by representative.

    :rtype: list of HomClass
    """
    homs = list(homs)
    if not homs:
        return []
    source = homs[0].source
    seen = set()
    classes = []
    for theta in homs:
        if theta.target is not target or theta.source != source:
            raise ValueError('homomorphisms must share source and target')
        if theta.images in seen:
            continue
        orbit = conjugation_orbit(theta.images, target)
        seen.update(orbit)
        classes.append(HomClass(Homomorphism(source, target, min(orbit)), len(orbit)))
    classes.sort(key=lambda c: c.images)
    counters.add(classes=len(classes))
    return classes


def hom_classes(source, target):
    """
    Conjugacy classes of all homomorphisms source -> target, cached on the target

    :rtype: list of HomClass
    """
    key = ('hom_classes', source.key)
    cached = target.cache.get(key)
    if cached is None:
        cached = hom_conjugacy_classes(enumerate_homs(source, target), target)
        target.cache[key] = cached
    return cached


def conjugation_orbit(images, group):
    """ Orbit of an images tuple under simultaneous conjugation """
    images = tuple(images)
    gens = group.generators
    seen = {images}
    queue = deque([images])
    while queue:
        current = queue.popleft()
        for g in gens:
            moved = tuple(group.conjugate(g, x) for x in current)
            if moved not in seen:
                seen.add(moved)
                queue.append(moved)
    return seen


def canonical_images(images, group):
    """ Lexicographically minimal conjugate of an images tuple """
    return min(conjugation_orbit(images, group))


# private

def _search(target, k, checks, first):
    results = []
    images = [None] * k
    images[0] = first
    if any(evaluate_word(w, images, target) != target.identity for w in checks[0]):
        return results
    if k == 1:
        return [(first,)]
    stack = [(1, 0)]
    order = target.order
    while stack:
        depth, value = stack.pop()
        if value >= order:
            continue
        stack.append((depth, value + 1))
        images[depth] = value
        if any(evaluate_word(w, images, target) != target.identity for w in checks[depth]):
            continue
        if depth == k - 1:
            results.append(tuple(images))
        else:
            stack.append((depth + 1, 0))
    return results
