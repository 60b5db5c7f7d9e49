from collections import OrderedDict
from fractions import Fraction

from ..exception import TargetNotWreath
from ..groups import WreathElement, WreathProduct, wreath_product
from ..presentations import (GammaSetClass, Homomorphism, canonical_images, enumerate_homs, orbit_structure,
                             restrict_to_orbit, stabilizer_images, underlying_permutation_hom)
from ..gspace import wreath_fixed_chi


class OrbitRecord(object):
    """
    The irreducible bundle of theta over one Gamma-orbit

    gamma_set_class is the transitive class Gamma/H of the orbit, bundle_class
    the canonical conjugacy representative of theta restricted to it, rho the
    homomorphism H -> G read at the basepoint (None when not requested).
    """

    def __init__(self, orbit, gamma_set_class, bundle_class, stabilizer_images, rho=None):
        self.orbit = orbit
        self.gamma_set_class = gamma_set_class
        self.bundle_class = bundle_class
        self.stabilizer_images = stabilizer_images
        self.rho = rho

    @property
    def index(self):
        return self.orbit.size

    @property
    def key(self):
        return self.index, self.bundle_class

    def __repr__(self):
        return '#<OrbitRecord: points={} bundle={}>'.format(list(self.orbit.points), list(self.bundle_class))


class IrreducibleDecomposition(object):
    """
    A bundle over {0..n-1} split into irreducible bundles over its orbits

    multiplicities maps (index, bundle class) to the number of orbits
    carrying an isomorphic irreducible bundle; sum(index * r) == degree.
    """

    def __init__(self, theta, records):
        self.theta = theta
        self.records = list(records)
        self.multiplicities = OrderedDict()
        for record in self.records:
            self.multiplicities[record.key] = self.multiplicities.get(record.key, 0) + 1

    @property
    def degree(self):
        return sum(index * r for (index, _), r in self.multiplicities.items())

    @property
    def indices(self):
        return sorted(record.index for record in self.records)

    def recombine(self, desc):
        """ Product of the fixed-set chi of every irreducible piece """
        result = 1
        for record in self.records:
            result *= desc.chi_of_elements(record.stabilizer_images)
        return result

    def __len__(self):
        return len(self.records)

    def __iter__(self):
        return iter(self.records)

    def __repr__(self):
        return '#<IrreducibleDecomposition: indices={}>'.format(self.indices)


def eta_split(theta, with_rho=True):
    """
    Splits theta: Gamma -> G(S_n) into irreducible bundles over its orbits

    :param with_rho: also derive rho: H -> G on the iso type of each stabilizer
    :rtype: IrreducibleDecomposition
    :raises: UnsupportedSource when with_rho is set for a general presentation
    """
    wreath = theta.target
    if not isinstance(wreath, WreathProduct):
        raise TargetNotWreath('{} is not a wreath product'.format(wreath.name))
    records = []
    for orbit in orbit_structure(underlying_permutation_hom(theta)):
        restricted = restrict_to_points(theta, orbit.points)
        gclass = GammaSetClass.from_hom(underlying_permutation_hom(restricted))
        bundle = canonical_images(restricted.images, restricted.target)
        rho = restrict_to_orbit(theta, orbit) if with_rho else None
        records.append(OrbitRecord(orbit, gclass, bundle, stabilizer_images(theta, orbit), rho))
    return IrreducibleDecomposition(theta, records)


def restrict_to_points(theta, points):
    """
    theta restricted to an invariant set of points, relabelled 0..m-1 in order

    :rtype: Homomorphism into G(S_m)
    """
    wreath = theta.target
    points = list(points)
    label = {p: i for i, p in enumerate(points)}
    target = wreath_product(wreath.base, len(points))
    images = []
    for x in theta.images:
        components, perm = wreath.decode(x)
        images.append(target.encode(WreathElement(tuple(components[p] for p in points),
                                                  tuple(label[perm[p]] for p in points))))
    return Homomorphism(theta.source, target, images)


def psi(n, gamma, desc):
    """
    Sum over all theta: Gamma -> G(S_n) of chi((M^n)^<theta>) / |G|^n; psi(0) = 1

    :rtype: fractions.Fraction
    """
    if n == 0:
        return Fraction(1)
    return _all_homs_sum(n, gamma, desc, transitive_only=False)


def phi_eta(n, gamma, desc):
    """
    As psi, restricted to theta whose underlying action is transitive; phi_eta(0) = 0

    :rtype: fractions.Fraction
    """
    if n == 0:
        return Fraction(0)
    return _all_homs_sum(n, gamma, desc, transitive_only=True)


# private

def _all_homs_sum(n, gamma, desc, transitive_only):
    wreath = wreath_product(desc.group, n)
    total = 0
    for theta in enumerate_homs(gamma, wreath):
        if transitive_only and len(orbit_structure(underlying_permutation_hom(theta))) != 1:
            continue
        total += wreath_fixed_chi(desc, theta)
    return Fraction(total, desc.group.order ** n)
