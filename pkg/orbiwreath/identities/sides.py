from fractions import Fraction

from six.moves import range

import orbiwreath
from .abstract import AbstractSectorData
from ..exception import ConfigError, UnsupportedSource
from ..groups import all_subgroups, whole_group
from ..gspace import chi_quotient
from ..presentations import GroupPresentation, count_index_n_subgroups, hall_counts, transitive_classes
from ..sectors import (Invariant, gamma_extension, gamma_extension_wreath, gamma_set_extension_bruteforce,
                       phi_eta, psi)
from ..series import RationalSeries, egf, exp_series, geom_power, product_family


def lhs_series(inv, gamma, desc, truncation):
    """
    sum_n q^n phi_Gamma(M^n x| G(S_n)) up to q^T

    :rtype: RationalSeries
    """
    return RationalSeries([gamma_extension_wreath(inv, gamma, desc, n).value for n in range(truncation + 1)],
                          truncation)


def rhs_euler_product(gamma, source, truncation):
    """
    prod_r (1 - q^r)^(-e_r) where e_r sums chi_(Gamma/H) over the conjugacy
    classes of index-r subgroups

    Abelian presets use chi_(Gamma/H) = chi_H and the subgroup count; other
    sources sum the brute-force (Gamma/H)-extension over transitive classes.

    :param source: GSpaceDescriptor or AbstractSectorData (euler)
    :rtype: RationalSeries
    """
    if isinstance(source, AbstractSectorData):
        _require(source, Invariant.EULER)
        exponents = [source.euler_exponent(r) for r in range(1, truncation + 1)]
    elif gamma.is_abelian_preset:
        chi_h = gamma_extension(Invariant.EULER, gamma, source).value
        exponents = [count_index_n_subgroups(gamma, r) * chi_h for r in range(1, truncation + 1)]
    else:
        exponents = []
        for r in range(1, truncation + 1):
            exponents.append(sum((gamma_set_extension_bruteforce(Invariant.EULER, gamma, c, source).value
                                  for c, _ in transitive_classes(gamma, r)), Fraction(0)))
    orbiwreath.logger.info('Euler product exponents {}'.format([str(e) for e in exponents]))
    return product_family([geom_power(r, e, truncation) for r, e in enumerate(exponents, 1) if e],
                          truncation)


def rhs_es_exp(gamma, source, truncation):
    """
    exp(sum_n q^n/n * sum_{[Gamma:H] = n} chi^ES_H)

    :param source: GSpaceDescriptor or AbstractSectorData (euler_satake)
    :rtype: RationalSeries
    :raises: UnsupportedSource for general presentations
    """
    inner = [Fraction(0)] * (truncation + 1)
    if isinstance(source, AbstractSectorData):
        _require(source, Invariant.EULER_SATAKE)
        for n in range(1, truncation + 1):
            inner[n] = source.es_inner_sum(n)
    else:
        kind = gamma.kind
        es = Invariant.EULER_SATAKE
        if kind in ('trivial', 'free_abelian'):
            value = gamma_extension(es, gamma, source).value
            for n in range(1, truncation + 1):
                inner[n] = count_index_n_subgroups(gamma, n) * value
        elif kind == 'free':
            counts = hall_counts(gamma.rank, truncation)
            for n in range(1, truncation + 1):
                rank = n * (gamma.rank - 1) + 1
                inner[n] = counts[n - 1] * gamma_extension(es, GroupPresentation.free(rank), source).value
        elif kind == 'finite':
            order = gamma.group.order
            for h in all_subgroups(gamma.group):
                n = order // h.order
                if n <= truncation:
                    inner[n] += gamma_extension(es, GroupPresentation.finite(h.as_group()), source).value
        else:
            raise UnsupportedSource('index-n subgroups of {} are not enumerable'.format(gamma.describe()))
    return exp_series(RationalSeries([c / n if n else c for n, c in enumerate(inner)], truncation))


def rhs_master_product(inv, gamma, source, truncation):
    """
    Product over classes (H) of index at most T and orbits [rho] of the
    symmetric-product series of the rho-sector: (1 - q^r)^(-value) for euler,
    exp(q^r value / degree) for euler_satake

    :param source: GSpaceDescriptor, or AbstractSectorData carrying rho data
    :raises: UnsupportedSource without per-[rho] data
    """
    inv = Invariant.from_tag(inv)
    if isinstance(source, AbstractSectorData):
        _require(source, inv)
        data = source
    else:
        data = AbstractSectorData.from_concrete(inv, gamma, source, truncation)
    factors = []
    for r in range(1, truncation + 1):
        for entry in data.classes(r):
            if entry.rho is None:
                raise UnsupportedSource('no per-[rho] data for {} at index {}'.format(entry.label, r))
            for value, degree in entry.rho:
                if inv.is_euler:
                    factors.append(geom_power(r, value, truncation))
                else:
                    factors.append(exp_series(RationalSeries.monomial(r, value / degree, truncation)))
    return product_family(factors, truncation)


def dm_psi(gamma, desc, truncation):
    """ sum_n psi(n) q^n / n! """
    return egf([psi(n, gamma, desc) for n in range(truncation + 1)], truncation)


def dm_phi(gamma, desc, truncation):
    """ sum_n phi_eta(n) q^n / n! """
    return egf([phi_eta(n, gamma, desc) for n in range(truncation + 1)], truncation)


def macdonald_rhs(inv, desc, truncation):
    """
    Closed forms for trivial Gamma: (1 - q)^(-chi(M/G)) or exp(q chi(M)/|G|)
    """
    inv = Invariant.from_tag(inv)
    group = desc.group
    quotient = chi_quotient(desc, whole_group(group), []) if inv.is_euler else None
    value = inv.from_parts(desc.chi_m, group.order, quotient)
    if inv.is_euler:
        return geom_power(1, value, truncation)
    return exp_series(RationalSeries.monomial(1, value, truncation))


# private

def _require(data, inv):
    if data.invariant != inv:
        raise ConfigError('abstract data holds {} values, {} needed'.format(data.invariant, inv))
