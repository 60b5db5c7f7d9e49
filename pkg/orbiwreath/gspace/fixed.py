from fractions import Fraction

from six.moves import range

from ..exception import (GroupMismatch, NonIntegerResult, NotCentralizing, NotNormalizing,
                         TargetNotWreath)
from ..groups import Subgroup, WreathProduct, subgroup_generated, symmetric
from ..presentations import (GroupPresentation, Homomorphism, orbit_structure, stabilizer_images,
                             underlying_permutation_hom)


def chi_of_hom_fixed(desc, theta):
    """
    chi(M^<theta>), the fixed set of the subgroup generated by theta's images

    :raises: GroupMismatch
    """
    if theta.target is not desc.group:
        raise GroupMismatch('homomorphism targets {}, descriptor is over {}'.format(theta.target.name, desc.group.name))
    return desc.chi_of_elements(theta.images)


def chi_quotient(desc, subgroup, ambient_fixed=None, allow_normalizing=False):
    """
    Orbit-space Euler characteristic chi(M^<S> / K) = 1/|K| sum_k chi(M^<S, k>)

    :param desc: GSpaceDescriptor
    :param subgroup: the acting subgroup K
    :param ambient_fixed: elements S, or a Subgroup, whose fixed set is quotiented
    :param allow_normalizing: accept K normalizing <S> instead of centralizing S
    :rtype: int
    :raises: NotCentralizing, NotNormalizing, NonIntegerResult
    """
    group = desc.group
    if subgroup.parent is not group:
        raise GroupMismatch('subgroup of {} used with descriptor over {}'.format(subgroup.parent.name, group.name))
    if isinstance(ambient_fixed, Subgroup):
        ambient = list(ambient_fixed.generators)
    else:
        ambient = sorted(set(ambient_fixed or []))
    if ambient:
        if allow_normalizing:
            span = subgroup_generated(group, ambient)
            for k in subgroup.generators:
                if any(group.conjugate(k, s) not in span for s in span.generators):
                    raise NotNormalizing('{} does not normalize <{}>'.format(group.label(k), ambient))
        else:
            for k in subgroup.generators:
                for s in ambient:
                    if group.mul(k, s) != group.mul(s, k):
                        raise NotCentralizing('{} does not commute with {}'.format(group.label(k), group.label(s)))
    total = sum(desc.chi_of_elements(ambient + [k]) for k in subgroup.elements)
    value = Fraction(total, subgroup.order)
    if value.denominator != 1:
        raise NonIntegerResult('chi of the orbit space is {}, descriptor is inconsistent'.format(value))
    return value.numerator


def chi_es(chi_value, k_order):
    """
    Euler-Satake characteristic chi(X)/|K| of a translation groupoid X x| K

    :rtype: fractions.Fraction
    """
    if k_order < 1:
        raise ValueError('group order must be positive, got {}'.format(k_order))
    return Fraction(chi_value, k_order)


def wreath_fixed_chi(desc, theta):
    """
    chi((M^n)^<theta>) for theta: Gamma -> G(S_n)

    The fixed set is the product over Gamma-orbits of {1..n} of the fixed set
    of the stabilizer image at each basepoint.

    :raises: TargetNotWreath, GroupMismatch
    """
    wreath = theta.target
    if not isinstance(wreath, WreathProduct):
        raise TargetNotWreath('{} is not a wreath product'.format(wreath.name))
    if wreath.base is not desc.group:
        raise GroupMismatch('wreath over {}, descriptor over {}'.format(wreath.base.name, desc.group.name))
    result = 1
    for orbit in orbit_structure(underlying_permutation_hom(theta)):
        result *= desc.chi_of_elements(stabilizer_images(theta, orbit))
        if result == 0:
            break
    return result


def wreath_subgroup_fixed_chi(desc, wreath, generators):
    """ chi((M^n)^K) for the subgroup K of a wreath product generated by the given elements """
    generators = list(generators)
    theta = Homomorphism(GroupPresentation.free(len(generators)), wreath, generators)
    return wreath_fixed_chi(desc, theta)


def wreath_chi_quotient(desc, theta, subgroup):
    """
    chi((M^n)^<theta> / C) for a subgroup C of the wreath product centralizing theta

    :rtype: int
    :raises: NotCentralizing, NonIntegerResult
    """
    wreath = theta.target
    images = list(theta.images)
    for c in subgroup.generators:
        for x in images:
            if wreath.mul(c, x) != wreath.mul(x, c):
                raise NotCentralizing('{} does not commute with {}'.format(wreath.label(c), wreath.label(x)))
    total = sum(wreath_subgroup_fixed_chi(desc, wreath, images + [c]) for c in subgroup.elements)
    value = Fraction(total, subgroup.order)
    if value.denominator != 1:
        raise NonIntegerResult('chi of the orbit space is {}, descriptor is inconsistent'.format(value))
    return value.numerator


def wreath_orbit_chi(desc, n):
    """
    chi(M^n / G(S_n)) by Burnside, grouping wreath elements by permutation

    A cycle of length l whose components multiply to g fixes a copy of
    M^<g>, and each g is reached by |G|^(l-1) choices of components, so no
    element of the wreath product is visited.

    :rtype: int
    :raises: NonIntegerResult
    """
    group = desc.group
    if n == 0:
        return 1
    per_cycle = sum(desc.chi_of_elements([g]) for g in range(group.order))
    sym = symmetric(n)
    total = 0
    for s in range(sym.order):
        term = 1
        for length in _cycle_lengths(sym.perm(s)):
            term *= group.order ** (length - 1) * per_cycle
        total += term
    value = Fraction(total, group.order ** n * sym.order)
    if value.denominator != 1:
        raise NonIntegerResult('chi of the orbit space is {}, descriptor is inconsistent'.format(value))
    return value.numerator


# private

def _cycle_lengths(perm):
    seen = set()
    lengths = []
    for start in range(len(perm)):
        if start in seen:
            continue
        length, x = 0, start
        while x not in seen:
            seen.add(x)
            x = perm[x]
            length += 1
        lengths.append(length)
    return lengths
