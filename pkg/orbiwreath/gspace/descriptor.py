import six

import orbiwreath
from ..exception import ConfigError, ConjugacyConflict, DuplicateClass, GroupMismatch, MissingClass
from ..groups import PermutationGroup, parse_permutation, subgroup_generated, subgroup_lattice


class GSpaceDescriptor(object):
    """
    A G-space M known through chi(M^H) for every conjugacy class of subgroups H <= G

    Values are stored per class of the group's SubgroupLattice, so they are
    constant on conjugacy classes by construction.

    :Example:

    circle = descriptor_from_table(z2, [([], 0), ([1], 2)])
    circle.chi_m  #=> 0
    circle.chi_of_elements([1])  #=> 2
    """

    def __init__(self, group, values):
        self.group = group
        self.lattice = subgroup_lattice(group)
        if len(values) != len(self.lattice.classes):
            raise ValueError('{} values for {} subgroup classes'.format(len(values), len(self.lattice.classes)))
        self.values = tuple(values)
        self._lookup = {}

    @classmethod
    def point(cls, group):
        """ The one-point space: every fixed set is the point """
        return cls(group, [1] * len(subgroup_lattice(group).classes))

    @property
    def chi_m(self):
        """ chi(M), the value on the trivial subgroup """
        return self.values[0]

    def chi(self, subgroup):
        """ chi(M^H) for a Subgroup H """
        return self.values[self.lattice.class_index(subgroup)]

    def chi_of_elements(self, elements):
        """ chi of the fixed set of the subgroup generated by the elements """
        key = frozenset(elements)
        value = self._lookup.get(key)
        if value is None:
            value = self.chi(subgroup_generated(self.group, key))
            self._lookup[key] = value
        return value

    @property
    def entries(self):
        """ (class representative, chi) pairs in lattice order """
        return [(self.lattice.representative(i), v) for i, v in enumerate(self.values)]

    def __add__(self, other):
        if other.group is not self.group:
            raise GroupMismatch('descriptors over different groups')
        return GSpaceDescriptor(self.group, [a + b for a, b in zip(self.values, other.values)])

    def scale(self, k):
        return GSpaceDescriptor(self.group, [k * v for v in self.values])

    def __eq__(self, other):
        return isinstance(other, GSpaceDescriptor) and other.group is self.group and other.values == self.values

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash(self.values)

    def __repr__(self):
        return '#<GSpaceDescriptor: {} values={}>'.format(self.group.name, list(self.values))

    def to_json(self):
        return {'kind': 'fixed_chi_table',
                'entries': [{'generators': list(h.generators), 'chi': v} for h, v in self.entries]}


def descriptor_from_table(group, entries):
    """
    Builds a descriptor from (generators, chi) entries

    Generators may be element indices, 0-based one-line permutations or
    1-based cycle strings (the last two for permutation groups). Every
    subgroup class must be covered exactly once.

    :param entries: list of (generators, chi) pairs or {"generators", "chi"} dicts
    :rtype: GSpaceDescriptor
    :raises: MissingClass, DuplicateClass, ConjugacyConflict
    """
    lattice = subgroup_lattice(group)
    values = [None] * len(lattice.classes)
    keyed = [None] * len(lattice.classes)
    for entry in entries:
        if isinstance(entry, dict):
            gens, chi = entry.get('generators', []), entry.get('chi')
        else:
            gens, chi = entry
        if isinstance(chi, bool) or not isinstance(chi, six.integer_types):
            raise ConfigError('chi must be an integer, got {!r}'.format(chi))
        elements = [_resolve_element(group, g) for g in gens]
        subgroup = subgroup_generated(group, elements)
        index = lattice.class_index(subgroup)
        if values[index] is not None:
            if keyed[index] != subgroup and values[index] != chi:
                raise ConjugacyConflict('conjugate subgroups {} and {} given chi {} and {}'.format(
                    list(keyed[index].elements), list(subgroup.elements), values[index], chi))
            raise DuplicateClass('subgroup class of {} given twice'.format(list(subgroup.elements)))
        values[index] = chi
        keyed[index] = subgroup
    missing = [lattice.representative(i) for i, v in enumerate(values) if v is None]
    if missing:
        raise MissingClass('no chi given for subgroup classes {}'.format(
            ', '.join('<{}>'.format(', '.join(group.label(g) for g in h.generators)) for h in missing)))
    orbiwreath.logger.info('Descriptor over {} with values {}'.format(group.name, values))
    return GSpaceDescriptor(group, values)


def descriptor_from_gset(gset, group=None):
    """
    The Burnside-mark descriptor chi(M^H) = |X^H| of a finite G-set

    :rtype: GSpaceDescriptor
    """
    group = group or gset.group
    if gset.group is not group:
        raise GroupMismatch('G-set acted on by {} but descriptor asked over {}'.format(gset.group.name, group.name))
    lattice = subgroup_lattice(group)
    return GSpaceDescriptor(group, [len(gset.fixed_points(h.generators)) for h in lattice.representatives])


def descriptor_from_json(group, data):
    """
    Reads {"kind": "fixed_chi_table", "entries": [...]}, {"kind": "finite_gset",
    "size": m, "action": [[...]]} or {"kind": "point"}
    """
    from .gset import FiniteGSet
    if not isinstance(data, dict):
        raise ConfigError('space must be an object, got {!r}'.format(data))
    kind = data.get('kind')
    if kind == 'point':
        return GSpaceDescriptor.point(group)
    if kind == 'fixed_chi_table':
        return descriptor_from_table(group, data.get('entries') or [])
    if kind == 'finite_gset':
        return descriptor_from_gset(FiniteGSet(group, data.get('size'), data.get('action')))
    raise ConfigError('unknown space kind {!r}'.format(kind))


# private

def _resolve_element(group, value):
    if isinstance(value, six.integer_types) and not isinstance(value, bool):
        if not 0 <= value < group.order:
            raise ConfigError('element {} outside group of order {}'.format(value, group.order))
        return value
    if not isinstance(group, PermutationGroup):
        raise ConfigError('permutation generator {!r} given for non-permutation group {}'.format(value, group.name))
    perm = parse_permutation(value, group.degree)
    try:
        return group.index_of(perm)
    except ValueError as e:
        raise ConfigError(str(e))
