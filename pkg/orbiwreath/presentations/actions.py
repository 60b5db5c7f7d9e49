from collections import deque
from itertools import permutations

from six.moves import range

from .homs import Homomorphism, enumerate_homs, hom_conjugacy_classes
from .lattice import hermite_normal_form
from .presentation import (GroupPresentation, abelianize, evaluate_word, invert_word, power_word,
                           reduce_word)
from ..exception import ConsistencyError, TargetNotWreath, UnsupportedSource


class GammaSetClass(object):
    """
    Isomorphism class of a Gamma-set of degree n, i.e. the S_n-conjugacy class
    of a permutation homomorphism Gamma -> S_n

    The canonical form is the lexicographically minimal tuple of generator
    images (indices in symmetric n) over all simultaneous conjugates.
    """

    def __init__(self, source, degree, canonical):
        self.source = source
        self.degree = degree
        self.canonical = tuple(canonical)
        self._orbits = None

    @classmethod
    def from_hom(cls, action):
        """
        :param action: Homomorphism into symmetric n
        :rtype: GammaSetClass
        """
        sym = action.target
        return cls(action.source, sym.degree, _canonical_perm_images(action.images, sym))

    @classmethod
    def from_permutations(cls, source, degree, perms):
        from ..groups import symmetric
        sym = symmetric(degree)
        return cls.from_hom(Homomorphism(source, sym, [sym.index_of(p) for p in perms]))

    @property
    def action(self):
        from ..groups import symmetric
        return Homomorphism(self.source, symmetric(self.degree), self.canonical)

    @property
    def permutations(self):
        from ..groups import symmetric
        sym = symmetric(self.degree)
        return [sym.perm(x) for x in self.canonical]

    @property
    def orbit_sizes(self):
        if self._orbits is None:
            self._orbits = tuple(sorted(len(o.points) for o in orbit_structure(self.action)))
        return self._orbits

    @property
    def is_transitive(self):
        return self.degree > 0 and len(self.orbit_sizes) == 1

    def disjoint_union(self, other):
        """ Class of the disjoint union, points of `other` shifted past ours """
        if self.source != other.source:
            raise ValueError('Gamma-sets over different groups')
        n, m = self.degree, other.degree
        perms = [tuple(p) + tuple(n + x for x in q)
                 for p, q in zip(self.permutations, other.permutations)]
        return GammaSetClass.from_permutations(self.source, n + m, perms)

    def multiple(self, r):
        """ r-fold disjoint union; r = 0 gives the empty Gamma-set """
        result = GammaSetClass.empty(self.source)
        for _ in range(r):
            result = result.disjoint_union(self)
        return result

    @classmethod
    def empty(cls, source):
        return cls(source, 0, (0,) * source.generator_count)

    def __eq__(self, other):
        return isinstance(other, GammaSetClass) and self.source == other.source \
            and self.degree == other.degree and self.canonical == other.canonical

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash((self.degree, self.canonical))

    def __repr__(self):
        from ..groups import cycle_string
        return '#<GammaSetClass: degree={} [{}]>'.format(
            self.degree, ', '.join(cycle_string(p) for p in self.permutations))


class Orbit(object):
    """
    One orbit of a permutation action with its Schreier data

    transversal maps each orbit point x to a word t_x with t_x(basepoint) = x;
    schreier_words generate the stabilizer of the basepoint.
    """

    def __init__(self, points, basepoint, transversal, schreier_words):
        self.points = tuple(points)
        self.basepoint = basepoint
        self.transversal = transversal
        self.schreier_words = schreier_words

    @property
    def size(self):
        return len(self.points)

    def __repr__(self):
        return '#<Orbit: points={} basepoint={}>'.format(list(self.points), self.basepoint)


def underlying_permutation_hom(theta):
    """
    Composes theta: Gamma -> G(S_n) with the projection G(S_n) -> S_n

    :rtype: Homomorphism
    :raises: TargetNotWreath
    """
    from ..groups import WreathProduct
    wreath = theta.target
    if not isinstance(wreath, WreathProduct):
        raise TargetNotWreath('{} is not a wreath product'.format(wreath.name))
    return Homomorphism(theta.source, wreath.sym, [wreath.projection(x) for x in theta.images])


def orbit_structure(action):
    """
    Orbits of a permutation homomorphism, each with basepoint (its smallest
    point), breadth-first transversal words and Schreier generator words of
    the basepoint stabilizer

    :param action: Homomorphism into symmetric n
    :rtype: list of Orbit
    """
    sym = action.target
    perms = [sym.perm(x) for x in action.images]
    inverses = [sym.perm(sym.inv[x]) for x in action.images]
    seen = set()
    orbits = []
    for base in range(sym.degree):
        if base in seen:
            continue
        transversal = {base: []}
        queue = deque([base])
        while queue:
            x = queue.popleft()
            for i in range(len(perms)):
                for letter, y in ((i + 1, perms[i][x]), (-(i + 1), inverses[i][x])):
                    if y not in transversal:
                        transversal[y] = [letter] + transversal[x]
                        queue.append(y)
        points = sorted(transversal)
        seen.update(points)
        words = []
        known = set()
        for x in points:
            for i in range(len(perms)):
                y = perms[i][x]
                word = reduce_word(invert_word(transversal[y]) + [i + 1] + transversal[x])
                if word and tuple(word) not in known:
                    known.add(tuple(word))
                    words.append(word)
        orbits.append(Orbit(points, base, transversal, words))
    return orbits


def stabilizer_images(theta, orbit):
    """
    G-components at the basepoint of theta evaluated on the Schreier words;
    they generate the image of the stabilizer under the restricted bundle

    :rtype: list
    """
    wreath = theta.target
    return [wreath.component(evaluate_word(w, theta.images, wreath), orbit.basepoint)
            for w in orbit.schreier_words]


def restrict_to_orbit(theta, orbit):
    """
    The homomorphism rho: H -> G of the irreducible bundle over one orbit

    H is the basepoint stabilizer, presented by its iso type: Z^d with the
    HNF basis for free abelian sources, the Schreier free basis for free
    sources and the literal stabilizer for finite sources.

    :rtype: Homomorphism
    :raises: UnsupportedSource for general presentations
    """
    source = theta.source
    wreath = theta.target
    base = wreath.base
    kind = source.kind
    b = orbit.basepoint

    def component(word):
        return wreath.component(evaluate_word(word, theta.images, wreath), b)

    if kind == 'trivial':
        return Homomorphism(GroupPresentation.trivial(), base, ())
    if kind == 'free_abelian':
        basis = stabilizer_lattice(source, orbit)
        return Homomorphism(GroupPresentation.free_abelian(source.rank), base,
                            [component(power_word(v)) for v in basis])
    if kind == 'free':
        words = orbit.schreier_words
        expected = orbit.size * (source.rank - 1) + 1
        if len(words) != expected:
            raise ConsistencyError('Schreier basis has {} words, expected rank {}'.format(len(words), expected))
        return Homomorphism(GroupPresentation.free(expected), base, [component(w) for w in words])
    if kind == 'finite':
        stabilizer = literal_stabilizer(source, underlying_permutation_hom(theta), b)
        iso_type = GroupPresentation.finite(stabilizer.as_group())
        images = [component(source.word_of(stabilizer.elements[g])) for g in iso_type.generator_elements]
        return Homomorphism(iso_type, base, images)
    raise UnsupportedSource('stabilizer presentations are not derivable for {}'.format(source.describe()))


def stabilizer_lattice(source, orbit):
    """ HNF basis of the basepoint stabilizer of a Z^d action """
    vectors = [abelianize(w, source.rank) for w in orbit.schreier_words]
    basis = hermite_normal_form(vectors, dimension=source.rank)
    if len(basis) != source.rank:
        raise ConsistencyError('stabilizer lattice of rank {} in Z^{}'.format(len(basis), source.rank))
    return basis


def literal_stabilizer(source, action, point):
    """ Stabilizer of a point as a Subgroup of the finite source group """
    from ..groups import Subgroup
    group = source.group
    sym = action.target
    fixing = [x for x in range(group.order)
              if sym.perm(evaluate_word(source.word_of(x), action.images, sym))[point] == point]
    return Subgroup(group, fixing)


def coset_action(gamma, subgroup):
    """
    Left multiplication action of a finite Gamma on Gamma/H; point 0 is the
    coset H itself, the rest ordered by smallest element

    :rtype: Homomorphism into symmetric [Gamma:H]
    """
    from ..groups import symmetric
    if gamma.kind != 'finite':
        raise UnsupportedSource('coset actions need a finite source, got {}'.format(gamma.describe()))
    group = gamma.group
    cosets = {}
    for x in range(group.order):
        key = frozenset(group.mul(x, h) for h in subgroup.elements)
        cosets.setdefault(key, min(key))
    ordered = sorted(cosets, key=lambda c: (group.identity not in c, cosets[c]))
    position = {}
    for i, c in enumerate(ordered):
        for x in c:
            position[x] = i
    sym = symmetric(len(ordered))
    images = []
    for g in gamma.generator_elements:
        perm = tuple(position[group.mul(g, min(c))] for c in ordered)
        images.append(sym.index_of(perm))
    return Homomorphism(gamma, sym, images)


def transitive_classes(gamma, degree):
    """
    Isomorphism classes of transitive Gamma-sets of a given degree, with the
    number of transitive homomorphisms in each

    :rtype: list of (GammaSetClass, int)
    """
    from ..groups import symmetric
    sym = symmetric(degree)
    homs = [h for h in enumerate_homs(gamma, sym) if _is_transitive(h)]
    return [(GammaSetClass(gamma, degree, c.images), c.size) for c in hom_conjugacy_classes(homs, sym)]


def gamma_set_classes(gamma, degree):
    """ Isomorphism classes of all Gamma-sets of a given degree """
    from ..groups import symmetric
    sym = symmetric(degree)
    return [GammaSetClass(gamma, degree, c.images)
            for c in hom_conjugacy_classes(enumerate_homs(gamma, sym), sym)]


def count_transitive_homs(gamma, degree):
    from ..groups import symmetric
    return sum(1 for h in enumerate_homs(gamma, symmetric(degree)) if _is_transitive(h))


# private

def _is_transitive(action):
    return len(orbit_structure(action)) == 1


def _canonical_perm_images(images, sym):
    perms = [sym.perm(x) for x in images]
    best = None
    for sigma in permutations(range(sym.degree)):
        # sigma p sigma^-1 sends sigma(i) to sigma(p(i))
        conj = []
        for p in perms:
            q = [0] * sym.degree
            for i, x in enumerate(p):
                q[sigma[i]] = sigma[x]
            conj.append(sym.index_of(q))
        conj = tuple(conj)
        if best is None or conj < best:
            best = conj
    return best if best is not None else tuple(images)
