from fractions import Fraction

from ..exception import ConfigError


class Invariant(object):
    """
    A multiplicative orbifold invariant of a translation groupoid X x| K

    euler gives chi(X/K); euler_satake gives chi(X)/|K|.

    :Example:

    Invariant.EULER_SATAKE.from_parts(2, 4)  #=> Fraction(1, 2)
    """

    TAGS = ('euler', 'euler_satake')

    def __init__(self, tag):
        if tag not in self.TAGS:
            raise ConfigError('unknown invariant {!r}, expected one of {}'.format(tag, ', '.join(self.TAGS)))
        self.tag = tag

    @classmethod
    def from_tag(cls, tag):
        if isinstance(tag, Invariant):
            return tag
        return {'euler': cls.EULER, 'euler_satake': cls.EULER_SATAKE}.get(tag) or cls(tag)

    @property
    def is_euler(self):
        return self.tag == 'euler'

    def from_parts(self, fixed_chi, group_order, quotient_chi=None):
        """
        Value on (X, K) given chi(X), |K| and, for euler, chi(X/K)

        :rtype: fractions.Fraction
        """
        if self.is_euler:
            if quotient_chi is None:
                raise ValueError('euler needs the orbit-space chi')
            return Fraction(quotient_chi)
        return Fraction(fixed_chi, group_order)

    def __eq__(self, other):
        return isinstance(other, Invariant) and other.tag == self.tag

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash(self.tag)

    def __str__(self):
        return self.tag

    def __repr__(self):
        return '#<Invariant: {}>'.format(self.tag)


Invariant.EULER = Invariant('euler')
Invariant.EULER_SATAKE = Invariant('euler_satake')
