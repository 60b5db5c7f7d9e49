import re
from collections import deque
from itertools import permutations

import six
from six.moves import range

import orbiwreath
from .finite_group import FiniteGroup, make_group
from ..exception import ConfigError, DegreeMismatch, OrderCapExceeded

# one shared instance per degree
_symmetric_groups = {}


class CyclicGroup(FiniteGroup):
    """ Z/n with element k standing for k times the generator """

    def __init__(self, n):
        super(CyclicGroup, self).__init__(n, identity=0, name='Z/{}'.format(n))
        self.n = n
        self._inv = [(-k) % n for k in range(n)]

    def mul(self, a, b):
        return (a + b) % self.n

    def _product(self, a, b):
        return (a + b) % self.n

    def _natural_generators(self):
        return (1,) if self.n > 1 else ()


class PermutationGroup(FiniteGroup):
    """
    A group of permutations of 0..degree-1 in one-line notation

    Elements are indexed in lexicographic order of their one-line tuples, so
    the identity is element 0 and for the full symmetric group the index is
    the Lehmer rank. Products compose right to left: (s*t)(i) = s(t(i)).
    """

    def __init__(self, perms, degree, name=None, generators=None):
        perms = sorted(set(tuple(p) for p in perms))
        super(PermutationGroup, self).__init__(len(perms), identity=0, name=name)
        self.degree = degree
        self.perms = perms
        self._index = {p: i for i, p in enumerate(perms)}
        if perms[0] != tuple(range(degree)):
            raise ConfigError('permutation set does not contain the identity')
        self._seed_generators = generators

    def index_of(self, perm):
        """
        Returns the element index of a one-line permutation

        :param perm: tuple or list of images of 0..degree-1
        :rtype: int
        """
        try:
            return self._index[tuple(perm)]
        except KeyError:
            raise ValueError('{} is not an element of {}'.format(list(perm), self.name or 'the group'))

    def perm(self, a):
        return self.perms[a]

    def label(self, a):
        return cycle_string(self.perms[a])

    def _product(self, a, b):
        s, t = self.perms[a], self.perms[b]
        return self._index[tuple(s[i] for i in t)]

    def _inverse(self, a):
        s = self.perms[a]
        inv = [0] * self.degree
        for i, x in enumerate(s):
            inv[x] = i
        return self._index[tuple(inv)]

    def _natural_generators(self):
        if self._seed_generators is None:
            return None
        return tuple(sorted(set(self.index_of(p) for p in self._seed_generators
                                if tuple(p) != tuple(range(self.degree)))))


class ProductGroup(FiniteGroup):
    """ Direct product, elements encoded in mixed radix with the first factor most significant """

    def __init__(self, factors):
        order = 1
        for f in factors:
            order *= f.order
        self.factors = list(factors)
        self._radices = [f.order for f in factors]
        identity = self.encode([f.identity for f in factors])
        name = ' x '.join(f.name or '?' for f in factors)
        super(ProductGroup, self).__init__(order, identity=identity, name=name)

    def encode(self, parts):
        index = 0
        for part, radix in zip(parts, self._radices):
            index = index * radix + part
        return index

    def decode(self, index):
        parts = []
        for radix in reversed(self._radices):
            index, part = divmod(index, radix)
            parts.append(part)
        return tuple(reversed(parts))

    def label(self, a):
        return '({})'.format(', '.join(f.label(x) for f, x in zip(self.factors, self.decode(a))))

    def _product(self, a, b):
        return self.encode([f.mul(x, y) for f, x, y in zip(self.factors, self.decode(a), self.decode(b))])

    def _inverse(self, a):
        return self.encode([f.inv[x] for f, x in zip(self.factors, self.decode(a))])

    def _natural_generators(self):
        gens = []
        for k, f in enumerate(self.factors):
            for g in f.generators:
                parts = [h.identity for h in self.factors]
                parts[k] = g
                gens.append(self.encode(parts))
        return tuple(sorted(gens))


def cyclic(n):
    """
    Cyclic group of order n

    :Example:

    cyclic(4).element_order(1)  #=> 4
    """
    _check_positive(n)
    _check_order(n)
    return CyclicGroup(n)


def symmetric(n):
    """
    Symmetric group on n points, element index = Lehmer rank

    :raises: OrderCapExceeded
    """
    if n < 0:
        raise ValueError('degree must be non-negative, got {}'.format(n))
    order = 1
    for k in range(2, n + 1):
        order *= k
    _check_order(order)
    cached = _symmetric_groups.get(n)
    if cached is not None:
        return cached
    gens = []
    if n > 1:
        gens.append(tuple([1, 0] + list(range(2, n))))
    if n > 2:
        gens.append(tuple(list(range(1, n)) + [0]))
    group = PermutationGroup(permutations(range(n)), n, name='S{}'.format(n), generators=gens)
    _symmetric_groups[n] = group
    return group


def clear_caches(*groups):
    """
    Empties the caches of the given groups and of every shared symmetric
    group, then drops the shared instances; symmetric(n) builds a new one
    on its next call

    Homomorphism lists, subgroup lattices and wreath products live in
    group.cache for the life of the group.
    """
    for group in list(groups) + list(_symmetric_groups.values()):
        group.clear_cache()
    _symmetric_groups.clear()


def direct_product(*factors):
    order = 1
    for f in factors:
        order *= f.order
    _check_order(order)
    return ProductGroup(factors)


def permutation_generated(generators, degree=None, name=None):
    """
    Closure of a set of permutations of equal degree

    :param generators: one-line permutations (0-based)
    :param degree: expected degree, defaults to that of the first generator
    :rtype: PermutationGroup
    :raises: DegreeMismatch, OrderCapExceeded

    :Example:

    permutation_generated([(1, 0, 2), (1, 2, 0)]).order  #=> 6
    """
    gens = [tuple(g) for g in generators]
    if degree is None:
        if not gens:
            raise ValueError('degree is required for an empty generator list')
        degree = len(gens[0])
    for g in gens:
        if len(g) != degree:
            raise DegreeMismatch('generator {} has degree {}, expected {}'.format(list(g), len(g), degree))
        if sorted(g) != list(range(degree)):
            raise ConfigError('{} is not a permutation of 0..{}'.format(list(g), degree - 1))
    cap = orbiwreath.order_cap
    identity = tuple(range(degree))
    seen = {identity}
    queue = deque([identity])
    while queue:
        p = queue.popleft()
        for g in gens:
            q = tuple(p[i] for i in g)
            if q not in seen:
                seen.add(q)
                if len(seen) > cap:
                    raise OrderCapExceeded('permutation closure exceeds order cap {}'.format(cap),
                                           size=len(seen), cap=cap)
                queue.append(q)
    return PermutationGroup(seen, degree, name=name or '<{}>'.format(', '.join(cycle_string(g) for g in gens)),
                            generators=gens)


def builtin_group(spec):
    """
    Builds a group from its JSON description

    :param spec: dict with "kind" in cyclic, symmetric, direct_product,
                 permutation, wreath or table
    :rtype: FiniteGroup

    :Example:

    builtin_group({'kind': 'symmetric', 'n': 3}).order  #=> 6
    builtin_group({'kind': 'permutation', 'degree': 3, 'generators': ['(1 2)', '(1 2 3)']}).order  #=> 6
    """
    if not isinstance(spec, dict):
        raise ConfigError('group description must be an object, got {!r}'.format(spec))
    kind = spec.get('kind')
    orbiwreath.logger.info('Building {} group from {}'.format(kind, spec))
    if kind == 'cyclic':
        return cyclic(_int_field(spec, 'n'))
    if kind == 'symmetric':
        n = _int_field(spec, 'n')
        _check_positive(n)
        return symmetric(n)
    if kind == 'direct_product':
        factors = spec.get('factors')
        if not factors:
            raise ConfigError('direct_product needs a non-empty "factors" list')
        return direct_product(*[builtin_group(f) for f in factors])
    if kind == 'permutation':
        degree = _int_field(spec, 'degree')
        gens = [parse_permutation(g, degree) for g in spec.get('generators', [])]
        return permutation_generated(gens, degree=degree)
    if kind == 'wreath':
        from .wreath import wreath_product
        return wreath_product(builtin_group(spec.get('base')), _int_field(spec, 'n'))
    if kind == 'table':
        return make_group(spec.get('table') or [], labels=spec.get('labels'))
    raise ConfigError('unknown group kind {!r}'.format(kind))


def parse_permutation(value, degree):
    """
    Reads a permutation given as a 0-based one-line list or a 1-based cycle string

    :Example:

    parse_permutation('(1 2)(3 4)', 4)  #=> (1, 0, 3, 2)
    parse_permutation([1, 2, 0], 3)  #=> (1, 2, 0)
    """
    if isinstance(value, six.string_types):
        perm = list(range(degree))
        for cycle in re.findall(r'\(([^)]*)\)', value):
            points = [int(x) - 1 for x in re.split(r'[\s,]+', cycle.strip()) if x]
            for p in points:
                if not 0 <= p < degree:
                    raise DegreeMismatch('point {} outside degree {} in {!r}'.format(p + 1, degree, value))
            for i, p in enumerate(points):
                perm[p] = points[(i + 1) % len(points)]
        if sorted(perm) != list(range(degree)):
            raise ConfigError('{!r} is not a permutation'.format(value))
        return tuple(perm)
    perm = tuple(value)
    if len(perm) != degree:
        raise DegreeMismatch('permutation {} has degree {}, expected {}'.format(list(perm), len(perm), degree))
    if sorted(perm) != list(range(degree)):
        raise ConfigError('{} is not a permutation'.format(list(perm)))
    return perm


def cycle_string(perm):
    """ 1-based cycle notation, "()" for the identity """
    seen = set()
    cycles = []
    for start in range(len(perm)):
        if start in seen or perm[start] == start:
            continue
        cycle = [start]
        seen.add(start)
        x = perm[start]
        while x != start:
            cycle.append(x)
            seen.add(x)
            x = perm[x]
        cycles.append('({})'.format(' '.join(str(p + 1) for p in cycle)))
    return ''.join(cycles) or '()'


# private

def _int_field(spec, key):
    value = spec.get(key)
    if not isinstance(value, six.integer_types) or isinstance(value, bool):
        raise ConfigError('group field {!r} must be an integer, got {!r}'.format(key, value))
    return value


def _check_positive(n):
    if n < 1:
        raise ValueError('group parameter must be positive, got {}'.format(n))


def _check_order(order):
    cap = orbiwreath.order_cap
    if order > cap:
        raise OrderCapExceeded('group order {} exceeds order cap {}'.format(order, cap), size=order, cap=cap)
    orbiwreath.logger.cap_warning('group order', order, cap)
