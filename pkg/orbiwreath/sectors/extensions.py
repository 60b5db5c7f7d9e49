from collections import deque
from fractions import Fraction

from six.moves import range

import orbiwreath
from .invariant import Invariant
from ..exception import ConsistencyError, SourceNotFinite
from ..groups import Subgroup, normalizer, wreath_product
from ..gspace import chi_quotient, wreath_chi_quotient, wreath_fixed_chi, wreath_orbit_chi
from ..presentations import (GammaSetClass, GroupPresentation, enumerate_homs, evaluate_word, hom_classes,
                             underlying_permutation_hom)
from ..rationals import format_rational


class SectorTerm(object):
    """
    One Gamma-sector: a conjugacy class of homomorphisms with its fixed-set
    chi, the order of the group acting on the fixed set and the value the
    invariant assigns to the pair
    """

    def __init__(self, representative, class_size, fixed_chi, centralizer_order, value):
        self.representative = tuple(representative)
        self.class_size = class_size
        self.fixed_chi = fixed_chi
        self.centralizer_order = centralizer_order
        self.value = Fraction(value)

    def as_row(self):
        """ (representative, |class|, chi_fixed, |C|, "p/q") """
        return (list(self.representative), self.class_size, self.fixed_chi, self.centralizer_order,
                format_rational(self.value))

    def __repr__(self):
        return '#<{}: {} value={}>'.format(self.__class__.__name__, list(self.representative),
                                          format_rational(self.value))


class InertiaSectorTerm(SectorTerm):
    """
    A term of the direct (Gamma/H) path: an orbit [rho] of N(H) x G on HOM(H, G)

    tau_order is |T_rho|, the stabilizer of rho in N(H) x G; g_image is
    the order of its projection to G, the group acting on the fixed set.
    centralizer_order holds |Aut| = |T_rho| / |H|.
    """

    def __init__(self, representative, class_size, fixed_chi, centralizer_order, value, tau_order, g_image):
        super(InertiaSectorTerm, self).__init__(representative, class_size, fixed_chi, centralizer_order, value)
        self.tau_order = tau_order
        self.g_image = g_image


class SectorSum(object):
    """
    A sector sum with its breakdown; value defaults to the sum of term values

    :Example:

    result = gamma_extension('euler', GroupPresentation.free_abelian(1), point)
    result.value  #=> Fraction(3, 1) for G = symmetric 3
    len(result)   #=> 3
    """

    def __init__(self, terms, value=None):
        self.terms = list(terms)
        if value is None:
            value = sum((t.value for t in self.terms), Fraction(0))
        self.value = Fraction(value)

    def __iter__(self):
        return iter(self.terms)

    def __len__(self):
        return len(self.terms)

    def __getitem__(self, i):
        return self.terms[i]

    @property
    def rows(self):
        return [t.as_row() for t in self.terms]

    def __repr__(self):
        return '#<SectorSum: {} terms value={}>'.format(len(self.terms), format_rational(self.value))


def gamma_extension(inv, gamma, desc):
    """
    Sum over conjugacy classes of homomorphisms theta: Gamma -> G of the
    invariant of M^<theta> x| C_G(theta)

    Sectors with a zero fixed-set chi stay in the breakdown.

    :param inv: Invariant or tag
    :param gamma: GroupPresentation
    :param desc: GSpaceDescriptor
    :rtype: SectorSum
    """
    inv = Invariant.from_tag(inv)
    terms = []
    for c in hom_classes(gamma, desc.group):
        fixed = desc.chi_of_elements(c.images)
        quotient = chi_quotient(desc, c.centralizer, c.images) if inv.is_euler else None
        value = inv.from_parts(fixed, c.centralizer_order, quotient)
        terms.append(SectorTerm(c.images, c.size, fixed, c.centralizer_order, value))
    return SectorSum(terms)


def gamma_extension_wreath(inv, gamma, desc, n, cross_check=True):
    """
    Gamma-extension of the wreath symmetric product M^n x| G(S_n)

    For euler_satake the class sum is checked against the sum over all
    homomorphisms of chi((M^n)^<theta>) / (|G|^n n!).

    :rtype: SectorSum
    :raises: ConsistencyError when the two euler_satake sums disagree
    """
    inv = Invariant.from_tag(inv)
    if n == 0:
        return SectorSum([], value=1)
    wreath = wreath_product(desc.group, n)
    result = SectorSum(_wreath_term(inv, desc, c) for c in hom_classes(gamma, wreath))
    if cross_check and not inv.is_euler:
        total = sum(wreath_fixed_chi(desc, theta) for theta in enumerate_homs(gamma, wreath))
        all_homs = Fraction(total, wreath.order)
        if all_homs != result.value:
            raise ConsistencyError('class sum {} differs from all-homs sum {} for {}(S{})'.format(
                format_rational(result.value), format_rational(all_homs), desc.group.name, n))
    orbiwreath.logger.info('{}-extension of degree {} over {}: {}'.format(
        inv, n, gamma.describe(), format_rational(result.value)))
    return result


def gamma_set_extension_bruteforce(inv, gamma, gclass, desc):
    """
    Sum over the conjugacy classes of theta: Gamma -> G(S_n) whose underlying
    Gamma-set is isomorphic to the given class; any Gamma-set, transitive or not

    :param gclass: GammaSetClass of degree n
    :rtype: SectorSum
    """
    inv = Invariant.from_tag(inv)
    n = gclass.degree
    if n == 0:
        return SectorSum([], value=1)
    wreath = wreath_product(desc.group, n)
    underlying = {}
    terms = []
    for c in hom_classes(gamma, wreath):
        action = underlying_permutation_hom(c.representative)
        cls = underlying.get(action.images)
        if cls is None:
            cls = GammaSetClass.from_hom(action)
            underlying[action.images] = cls
        if cls == gclass:
            terms.append(_wreath_term(inv, desc, c))
    return SectorSum(terms)


def gamma_set_extension_direct(inv, gamma, subgroup, desc):
    """
    (Gamma/H)-extension for finite Gamma from orbits of N(H) x G on HOM(H, G)

    (u, g) sends rho to h -> g^-1 rho(u h u^-1) g. Each orbit [rho] adds
    the invariant of M^<rho(H)> x| Aut with |Aut| = |T_rho| / |H|; euler
    quotients by the G-projection of T_rho.

    :param gamma: GroupPresentation of kind finite
    :param subgroup: Subgroup of gamma.group
    :rtype: SectorSum of InertiaSectorTerm
    :raises: SourceNotFinite
    """
    inv = Invariant.from_tag(inv)
    if gamma.kind != 'finite':
        raise SourceNotFinite('direct (Gamma/H) path needs a finite source, got {}'.format(gamma.describe()))
    source = gamma.group
    group = desc.group
    h_elements = subgroup.elements
    position = {x: i for i, x in enumerate(h_elements)}
    n_elements = normalizer(source, subgroup).elements
    h_presentation = GroupPresentation.finite(subgroup.as_group())
    # rho as the tuple of its values on h_elements
    maps = []
    for rho in enumerate_homs(h_presentation, group):
        maps.append(tuple(evaluate_word(h_presentation.word_of(i), rho.images, group)
                          for i in range(len(h_elements))))
    conj_index = [[position[source.conjugate(u, h)] for h in h_elements] for u in n_elements]

    def act(values, u_row, g):
        g_inv = group.inv[g]
        return tuple(group.mul(group.mul(g_inv, values[j]), g) for j in u_row)

    seen = set()
    terms = []
    for start in maps:
        if start in seen:
            continue
        orbit = {start}
        queue = deque([start])
        while queue:
            values = queue.popleft()
            for u_row in conj_index:
                for g in range(group.order):
                    moved = act(values, u_row, g)
                    if moved not in orbit:
                        orbit.add(moved)
                        queue.append(moved)
        seen.update(orbit)
        representative = min(orbit)
        g_image = set()
        tau_order = 0
        for u_row in conj_index:
            for g in range(group.order):
                if act(representative, u_row, g) == representative:
                    tau_order += 1
                    g_image.add(g)
        image = sorted(set(representative))
        fixed = desc.chi_of_elements(image)
        aut_order = tau_order // subgroup.order
        quotient = None
        if inv.is_euler:
            quotient = chi_quotient(desc, Subgroup(group, g_image), image, allow_normalizing=True)
        value = inv.from_parts(fixed, aut_order, quotient)
        terms.append(InertiaSectorTerm(representative, len(orbit), fixed, aut_order, value,
                                       tau_order, len(g_image)))
    terms.sort(key=lambda t: t.representative)
    return SectorSum(terms)


# private

def _wreath_term(inv, desc, hom_class):
    theta = hom_class.representative
    wreath = theta.target
    fixed = wreath_fixed_chi(desc, theta)
    quotient = None
    if inv.is_euler:
        if all(x == wreath.identity for x in theta.images):
            # the centralizer is the whole wreath product
            quotient = wreath_orbit_chi(desc, wreath.degree)
        else:
            quotient = wreath_chi_quotient(desc, theta, hom_class.centralizer)
    value = inv.from_parts(fixed, hom_class.centralizer_order, quotient)
    return SectorTerm(theta.images, hom_class.size, fixed, hom_class.centralizer_order, value)
