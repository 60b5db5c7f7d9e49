from collections import deque

import six
from six.moves import range

import orbiwreath
from ..exception import NotAGroup, SizeCapExceeded


class FiniteGroup(object):
    """
    A finite group on the dense element indices 0..order-1

    Subclasses provide `_product`; rows of the multiplication table are
    cached lazily for groups up to `orbiwreath.table_cap`.
    """

    def __init__(self, order, identity=0, name=None):
        if order < 1:
            raise ValueError('group order must be positive, got {}'.format(order))
        self.order = order
        self.identity = identity
        self.name = name
        self._rows = {}
        self._inv = None
        self._generators = None
        self._abelian = None
        self.cache = {}

    def __repr__(self):
        return '#<{}: {} order={}>'.format(self.__class__.__name__, self.name or '?', self.order)

    def __len__(self):
        return self.order

    def __iter__(self):
        return iter(range(self.order))

    def clear_cache(self):
        """ Empties `cache` and the memoized table rows """
        self.cache.clear()
        self._rows.clear()

    @property
    def elements(self):
        return range(self.order)

    def mul(self, a, b):
        """
        Returns the product a*b

        :param a: element index
        :param b: element index
        :rtype: int
        """
        if self.order > orbiwreath.table_cap:
            return self._product(a, b)
        row = self._rows.get(a)
        if row is None:
            row = [self._product(a, x) for x in range(self.order)]
            self._rows[a] = row
        return row[b]

    @property
    def inv(self):
        """
        Inverse table, inv[x] is the two-sided inverse of x

        :rtype: list
        """
        if self._inv is None:
            self._inv = [self._inverse(x) for x in range(self.order)]
        return self._inv

    def inverse(self, a):
        return self.inv[a]

    def conjugate(self, g, x):
        """ Returns g*x*g^-1 """
        return self.mul(self.mul(g, x), self.inv[g])

    def power(self, a, k):
        if k < 0:
            a, k = self.inv[a], -k
        result = self.identity
        for _ in range(k):
            result = self.mul(result, a)
        return result

    def element_order(self, a):
        k, x = 1, a
        while x != self.identity:
            x = self.mul(x, a)
            k += 1
        return k

    @property
    def is_abelian(self):
        if self._abelian is None:
            gens = self.generators
            self._abelian = all(self.mul(a, b) == self.mul(b, a) for a in gens for b in gens)
        return self._abelian

    @property
    def generators(self):
        """
        A small generating set, chosen greedily in index order

        :rtype: tuple
        """
        if self._generators is None:
            self._generators = self._natural_generators() or self._greedy_generators()
        return self._generators

    def label(self, a):
        return '{}'.format(a)

    @property
    def labels(self):
        return [self.label(a) for a in range(self.order)]

    @property
    def table(self):
        """
        Full multiplication table

        :rtype: list
        :raises: SizeCapExceeded when order exceeds orbiwreath.table_cap
        """
        if self.order > orbiwreath.table_cap:
            raise SizeCapExceeded('table of order {} exceeds table cap {}'.format(
                self.order, orbiwreath.table_cap), size=self.order, cap=orbiwreath.table_cap)
        return [[self.mul(a, b) for b in range(self.order)] for a in range(self.order)]

    def closure(self, generators, start=None):
        """
        Elements reachable from `start` (default the identity) by right
        multiplication with generators

        :rtype: set
        """
        seen = set(start or [self.identity])
        queue = deque(seen)
        while queue:
            x = queue.popleft()
            for g in generators:
                y = self.mul(x, g)
                if y not in seen:
                    seen.add(y)
                    queue.append(y)
        return seen

    # private

    def _product(self, a, b):
        raise NotImplementedError

    def _inverse(self, a):
        for b in range(self.order):
            if self.mul(a, b) == self.identity:
                return b
        raise NotAGroup('element {} has no inverse'.format(a), witness=(a,))

    def _natural_generators(self):
        return None

    def _greedy_generators(self):
        gens = []
        span = {self.identity}
        for x in range(self.order):
            if x not in span:
                gens.append(x)
                span = self.closure(gens, start=span)
                if len(span) == self.order:
                    break
        return tuple(gens)


class TableGroup(FiniteGroup):
    """ A finite group given by an explicit multiplication table """

    def __init__(self, table, identity, inverses=None, labels=None, name=None):
        super(TableGroup, self).__init__(len(table), identity=identity, name=name)
        self._table = [list(row) for row in table]
        self._labels = list(labels) if labels else None
        if inverses is not None:
            self._inv = list(inverses)

    def mul(self, a, b):
        return self._table[a][b]

    def label(self, a):
        if self._labels:
            return self._labels[a]
        return '{}'.format(a)

    @property
    def table(self):
        return [list(row) for row in self._table]

    def _product(self, a, b):
        return self._table[a][b]


def make_group(table, labels=None, name=None, cap=None):
    """
    Builds a validated group from a multiplication table

    :param table: square table over the indices 0..order-1
    :param labels: optional display strings per element
    :param cap: order up to which associativity is checked on all triples
    :rtype: TableGroup
    :raises: NotAGroup with the witnessing element(s)

    :Example:

    make_group([[0, 1], [1, 0]]).order  #=> 2
    """
    order = len(table)
    if order == 0:
        raise NotAGroup('empty multiplication table')
    for i, row in enumerate(table):
        if len(row) != order:
            raise NotAGroup('row {} has {} entries, expected {}'.format(i, len(row), order),
                            witness=(i,))
        for x in row:
            if not isinstance(x, six.integer_types) or isinstance(x, bool) or not 0 <= x < order:
                raise NotAGroup('row {} holds {!r}, not an element index'.format(i, x), witness=(i,))
    _check_latin(lambda a, b: table[a][b], order)
    identity = _find_identity(lambda a, b: table[a][b], order)
    inverses = [table[a].index(identity) for a in range(order)]
    for a in range(order):
        if table[inverses[a]][a] != identity:
            raise NotAGroup('element {} has no two-sided inverse'.format(a), witness=(a,))
    _check_associative(lambda a, b: table[a][b], order, cap)
    return TableGroup(table, identity, inverses=inverses, labels=labels, name=name)


def validate_group(group, cap=None):
    """
    Runs the make_group checks against any FiniteGroup

    :raises: NotAGroup
    """
    order = group.order
    _check_latin(group.mul, order)
    if _find_identity(group.mul, order) != group.identity:
        raise NotAGroup('identity is not element {}'.format(group.identity), witness=(group.identity,))
    for a in range(order):
        b = group.inv[a]
        if group.mul(a, b) != group.identity or group.mul(b, a) != group.identity:
            raise NotAGroup('inv[{}] is not a two-sided inverse'.format(a), witness=(a,))
    _check_associative(group.mul, order, cap)
    return group


# private

def _check_latin(mul, order):
    for a in range(order):
        seen_row, seen_col = {}, {}
        for b in range(order):
            x, y = mul(a, b), mul(b, a)
            if x in seen_row:
                raise NotAGroup('row {} is not a permutation: {} appears twice'.format(a, x),
                                witness=(a, seen_row[x], b))
            if y in seen_col:
                raise NotAGroup('column {} is not a permutation: {} appears twice'.format(a, y),
                                witness=(seen_col[y], b, a))
            seen_row[x] = b
            seen_col[y] = b


def _find_identity(mul, order):
    for e in range(order):
        if all(mul(e, x) == x and mul(x, e) == x for x in range(order)):
            return e
    raise NotAGroup('no two-sided identity', witness=())


def _check_associative(mul, order, cap):
    cap = orbiwreath.associativity_cap if cap is None else cap
    if order > cap:
        orbiwreath.logger.warning('skipping associativity check for order {} (cap {})'.format(
            order, cap), ids=['associativity'])
        return
    for a in range(order):
        for b in range(order):
            ab = mul(a, b)
            for c in range(order):
                if mul(ab, c) != mul(a, mul(b, c)):
                    raise NotAGroup('({0}*{1})*{2} != {0}*({1}*{2})'.format(a, b, c),
                                    witness=(a, b, c))
