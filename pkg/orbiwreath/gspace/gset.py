from itertools import product

import six
from six.moves import range

import orbiwreath
from ..exception import GroupMismatch, InvalidAction, SizeCapExceeded


class FiniteGSet(object):
    """
    A finite set {0..size-1} with a left action, action[g][x] = g.x

    :Example:

    x = FiniteGSet.regular(cyclic(2))
    x.fixed_points([1])  #=> []
    """

    def __init__(self, group, size, action):
        if isinstance(size, bool) or not isinstance(size, six.integer_types) or size < 0:
            raise InvalidAction('G-set size must be a non-negative integer, got {!r}'.format(size))
        if action is None or len(action) != group.order:
            raise InvalidAction('action needs one row per element of {}'.format(group.name))
        self.group = group
        self.size = size
        self.action = [tuple(row) for row in action]
        self._validate()

    @classmethod
    def regular(cls, group):
        return cls(group, group.order, [[group.mul(g, x) for x in range(group.order)] for g in range(group.order)])

    @classmethod
    def trivial(cls, group, size=1):
        return cls(group, size, [list(range(size)) for _ in range(group.order)])

    @classmethod
    def natural(cls, group):
        """ A permutation group acting on its points """
        return cls(group, group.degree, [group.perm(g) for g in range(group.order)])

    def disjoint_union(self, other):
        if other.group is not self.group:
            raise GroupMismatch('G-sets over different groups')
        n = self.size
        return FiniteGSet(self.group, n + other.size,
                          [row + tuple(n + x for x in other.action[g]) for g, row in enumerate(self.action)])

    def act(self, g, x):
        return self.action[g][x]

    def fixed_points(self, elements):
        """ Points fixed by every given element """
        rows = [self.action[g] for g in elements]
        return [x for x in range(self.size) if all(row[x] == x for row in rows)]

    def __repr__(self):
        return '#<FiniteGSet: size={} over {}>'.format(self.size, self.group.name)

    # private

    def _validate(self):
        group = self.group
        for g, row in enumerate(self.action):
            if len(row) != self.size or sorted(row) != list(range(self.size)):
                raise InvalidAction('element {} does not act by a permutation: {}'.format(g, list(row)))
        if any(self.action[group.identity][x] != x for x in range(self.size)):
            raise InvalidAction('identity moves a point')
        for g in range(group.order):
            for h in range(group.order):
                gh = self.action[group.mul(g, h)]
                row_g, row_h = self.action[g], self.action[h]
                for x in range(self.size):
                    if row_g[row_h[x]] != gh[x]:
                        raise InvalidAction('g.(h.x) != (gh).x for g={}, h={}, x={}'.format(g, h, x))


def gset_wreath_oracle(gset, n, theta, cap=None):
    """
    Counts points of X^n fixed by every generator image of theta, with
    (g_1..g_n; s).(x_1..x_n) = (g_1 x_{s^-1(1)}, ..., g_n x_{s^-1(n)})

    :param gset: FiniteGSet over the base group
    :param n: wreath degree
    :param theta: Homomorphism into wreath(G, n)
    :raises: SizeCapExceeded when |X|^n exceeds orbiwreath.gset_cap
    """
    wreath = theta.target
    if getattr(wreath, 'base', None) is not gset.group or wreath.degree != n:
        raise GroupMismatch('theta does not target {}(S{})'.format(gset.group.name, n))
    cap = orbiwreath.gset_cap if cap is None else cap
    size = gset.size ** n
    if size > cap:
        raise SizeCapExceeded('scanning {} points of X^{} exceeds G-set cap {}'.format(size, n, cap),
                              size=size, cap=cap)
    moves = []
    for x in theta.images:
        components, _ = wreath.decode(x)
        moves.append([(gset.action[components[i]], wreath.inverse_perm(x)[i]) for i in range(n)])
    count = 0
    for point in product(range(gset.size), repeat=n):
        if all(row[point[j]] == point[i] for move in moves for i, (row, j) in enumerate(move)):
            count += 1
    return count
