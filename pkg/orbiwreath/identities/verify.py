from six.moves import range

import orbiwreath
from .report import VerificationReport
from .sides import (dm_phi, dm_psi, lhs_series, macdonald_rhs, rhs_es_exp, rhs_euler_product,
                    rhs_master_product)
from ..exception import ConfigError
from ..presentations import transitive_classes
from ..sectors import Invariant, gamma_set_extension_bruteforce
from ..series import RationalSeries, exp_series, product_family
from ..stats import counters
from ..timer import Timer

THEOREMS = ('thm-euler', 'thm-es', 'thm-product', 'thm-dm', 'thm-gammaset', 'macdonald')


def verify(theorem, gamma, desc, truncation, inv=None, source=None):
    """
    Builds both sides of an identity and compares them exactly

    thm-euler and thm-es fix their invariant; thm-product, thm-gammaset and
    macdonald use inv (euler_satake by default). source replaces desc on the
    right-hand side with AbstractSectorData where supported.

    :param theorem: one of THEOREMS
    :param gamma: GroupPresentation
    :param desc: GSpaceDescriptor
    :param truncation: T >= 1
    :rtype: VerificationReport
    :raises: ConfigError for an unknown tag or a non-trivial source with macdonald
    """
    if theorem not in THEOREMS:
        raise ConfigError('unknown theorem {!r}, expected one of {}'.format(theorem, ', '.join(THEOREMS)))
    if theorem == 'thm-dm':
        return verify_dm(gamma, desc, truncation)
    if theorem == 'thm-euler':
        inv = Invariant.EULER
    elif theorem == 'thm-es':
        inv = Invariant.EULER_SATAKE
    else:
        inv = Invariant.from_tag(inv or 'euler_satake')
    if theorem == 'macdonald' and gamma.kind != 'trivial':
        raise ConfigError('macdonald needs the trivial source, got {}'.format(gamma.describe()))
    rhs_source = desc if source is None else source

    counters.reset()
    with Timer() as timer:
        lhs = lhs_series(inv, gamma, desc, truncation)
        if theorem == 'thm-euler':
            rhs = rhs_euler_product(gamma, rhs_source, truncation)
        elif theorem == 'thm-es':
            rhs = rhs_es_exp(gamma, rhs_source, truncation)
        elif theorem == 'thm-product':
            rhs = rhs_master_product(inv, gamma, rhs_source, truncation)
        elif theorem == 'thm-gammaset':
            rhs = gamma_set_product(inv, gamma, desc, truncation)
        else:
            rhs = macdonald_rhs(inv, desc, truncation)
    return _report(theorem, truncation, lhs, rhs, inv, timer)


def verify_dm(gamma, desc, truncation):
    """
    Psi = exp(Phi) with Psi = sum psi(n) q^n/n! and Phi = sum phi_eta(n) q^n/n!

    :rtype: VerificationReport
    """
    counters.reset()
    with Timer() as timer:
        lhs = dm_psi(gamma, desc, truncation)
        rhs = exp_series(dm_phi(gamma, desc, truncation))
    return _report('thm-dm', truncation, lhs, rhs, Invariant.EULER_SATAKE, timer)


def gamma_set_product(inv, gamma, desc, truncation):
    """
    prod over transitive classes c of degree d <= T of
    sum_r q^(r d) phi_[r c], each phi_[r c] brute-forced on the r-fold union

    :rtype: RationalSeries
    """
    factors = []
    for degree in range(1, truncation + 1):
        for c, _ in transitive_classes(gamma, degree):
            coefficients = [0] * (truncation + 1)
            for r in range(truncation // degree + 1):
                coefficients[r * degree] = gamma_set_extension_bruteforce(inv, gamma, c.multiple(r), desc).value
            factors.append(RationalSeries(coefficients, truncation))
    return product_family(factors, truncation)


# private

def _report(theorem, truncation, lhs, rhs, inv, timer):
    stats = counters.snapshot()
    stats['wall_ms'] = timer.elapsed_ms
    report = VerificationReport(theorem, truncation, lhs, rhs, invariant=inv, stats=stats)
    orbiwreath.logger.info('{} at T={}: {}'.format(theorem, truncation, report.verdict))
    return report
