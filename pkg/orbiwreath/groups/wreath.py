from collections import namedtuple

from six.moves import range

import orbiwreath
from .builtin import cycle_string, symmetric
from .finite_group import FiniteGroup
from ..exception import OrderCapExceeded

WreathElement = namedtuple('WreathElement', ['components', 'perm'])
WreathElement.__doc__ = """
Element ((g_1, ..., g_n), s) of G(S_n): components are base group indices,
perm is a 0-based one-line permutation.
"""


class WreathProduct(FiniteGroup):
    """
    The wreath product G(S_n) = G^n x| S_n

    Multiplication: ((g_i), s) * ((h_i), t) = ((g_i * h_{s^-1(i)}), s*t), which
    makes (g, s).(x_1..x_n) = (g_i * x_{s^-1(i)}) a left action on M^n.

    Flat index = rank(perm) * |G|^n + sum_i g_i * |G|^(n-1-i).
    """

    def __init__(self, base, degree):
        self.base = base
        self.degree = degree
        self.sym = symmetric(degree)
        self._radix = base.order ** degree
        order = self._radix * self.sym.order
        super(WreathProduct, self).__init__(order, identity=self.encode(
            WreathElement(tuple([base.identity] * degree), tuple(range(degree)))),
            name='{}(S{})'.format(base.name or '?', degree))
        self._decoded = [None] * order
        self._perm_inverse = [None] * self.sym.order

    def encode(self, element):
        """
        Flat index of a WreathElement

        :rtype: int
        """
        components, perm = element
        if len(components) != self.degree or len(perm) != self.degree:
            raise ValueError('wreath element of degree {} expected, got {!r}'.format(self.degree, element))
        value = 0
        m = self.base.order
        for g in components:
            value = value * m + g
        return self.sym.index_of(perm) * self._radix + value

    def decode(self, index):
        """
        WreathElement at a flat index

        :rtype: WreathElement
        """
        element = self._decoded[index]
        if element is None:
            rank, value = divmod(index, self._radix)
            m = self.base.order
            components = [0] * self.degree
            for i in range(self.degree - 1, -1, -1):
                value, components[i] = divmod(value, m)
            element = WreathElement(tuple(components), self.sym.perm(rank))
            self._decoded[index] = element
        return element

    def projection(self, index):
        """ Index in symmetric n of the underlying permutation """
        return index // self._radix

    def component(self, index, point):
        return self.decode(index).components[point]

    def inverse_perm(self, index):
        rank = index // self._radix
        inv = self._perm_inverse[rank]
        if inv is None:
            inv = self.sym.perm(self.sym.inv[rank])
            self._perm_inverse[rank] = inv
        return inv

    def label(self, a):
        components, perm = self.decode(a)
        return '(({}), {})'.format(','.join(self.base.label(g) for g in components), cycle_string(perm))

    # private

    def _product(self, a, b):
        g, s = self.decode(a)
        h, t = self.decode(b)
        s_inv = self.inverse_perm(a)
        mul = self.base.mul
        components = tuple(mul(g[i], h[s_inv[i]]) for i in range(self.degree))
        perm = tuple(s[t[i]] for i in range(self.degree))
        return self.encode(WreathElement(components, perm))

    def _inverse(self, a):
        g, s = self.decode(a)
        inv = self.base.inv
        components = tuple(inv[g[s[j]]] for j in range(self.degree))
        return self.encode(WreathElement(components, self.inverse_perm(a)))

    def _natural_generators(self):
        base_gens = self.base.generators
        gens = set()
        e = self.base.identity
        for g in base_gens:
            gens.add(self.encode(WreathElement(tuple([g] + [e] * (self.degree - 1)), tuple(range(self.degree)))))
        for p in self.sym.generators:
            gens.add(p * self._radix + self.encode(WreathElement(tuple([e] * self.degree),
                                                                 tuple(range(self.degree)))))
        return tuple(sorted(gens))


def wreath_product(group, n):
    """
    Builds G(S_n), cached per base group and degree

    :param group: base group G
    :param n: positive degree
    :rtype: WreathProduct
    :raises: OrderCapExceeded when |G|^n * n! exceeds orbiwreath.order_cap

    :Example:

    wreath_product(cyclic(2), 2).order  #=> 8
    """
    if n < 1:
        raise ValueError('wreath degree must be positive, got {}'.format(n))
    order = group.order ** n
    for k in range(2, n + 1):
        order *= k
    cap = orbiwreath.order_cap
    if order > cap:
        raise OrderCapExceeded('wreath product {}(S{}) of order {} exceeds order cap {}'.format(
            group.name or '?', n, order, cap), size=order, cap=cap)
    key = ('wreath', n)
    cached = group.cache.get(key)
    if cached is None:
        orbiwreath.logger.info('Building wreath product {}(S{}) of order {}'.format(group.name or '?', n, order))
        cached = WreathProduct(group, n)
        group.cache[key] = cached
    return cached
