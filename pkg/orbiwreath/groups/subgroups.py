from collections import deque

from six.moves import range

import orbiwreath
from .finite_group import TableGroup
from ..exception import OrderCapExceeded


class Subgroup(object):
    """
    A subgroup of a FiniteGroup, stored as its sorted element indices

    :Example:

    h = subgroup_generated(s3, [s3.index_of((1, 0, 2))])
    h.order  #=> 2
    """

    def __init__(self, parent, elements, generators=None):
        self.parent = parent
        self.elements = tuple(sorted(elements))
        self.key = frozenset(self.elements)
        self._generators = tuple(generators) if generators is not None else None
        self._group = None

    @property
    def order(self):
        return len(self.elements)

    @property
    def index(self):
        return self.parent.order // self.order

    @property
    def generators(self):
        if self._generators is None:
            gens = []
            span = {self.parent.identity}
            for x in self.elements:
                if x not in span:
                    gens.append(x)
                    span = self.parent.closure(gens, start=span)
            self._generators = tuple(gens)
        return self._generators

    def __contains__(self, element):
        return element in self.key

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)

    def __eq__(self, other):
        return isinstance(other, Subgroup) and self.parent is other.parent and self.key == other.key

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash(self.key)

    def __repr__(self):
        return '#<Subgroup: order={} of {!r}>'.format(self.order, self.parent)

    def issubset(self, other):
        return self.key <= other.key

    def as_group(self):
        """
        The subgroup as a FiniteGroup in its own right; element i of the
        result is self.elements[i]

        :rtype: orbiwreath.groups.finite_group.TableGroup
        """
        if self._group is None:
            position = {x: i for i, x in enumerate(self.elements)}
            mul = self.parent.mul
            table = [[position[mul(a, b)] for b in self.elements] for a in self.elements]
            labels = [self.parent.label(x) for x in self.elements]
            self._group = TableGroup(table, position[self.parent.identity],
                                     inverses=[position[self.parent.inv[x]] for x in self.elements],
                                     labels=labels, name='subgroup of {}'.format(self.parent.name))
        return self._group


def subgroup_generated(group, elements):
    """
    Smallest subgroup containing the given elements

    :rtype: Subgroup
    """
    gens = sorted(set(x for x in elements if x != group.identity))
    return Subgroup(group, group.closure(gens), generators=gens)


def trivial_subgroup(group):
    return Subgroup(group, [group.identity], generators=())


def whole_group(group):
    return Subgroup(group, range(group.order), generators=group.generators)


def centralizer(group, elements):
    """
    {g : g*s = s*g for every s}

    :rtype: Subgroup
    """
    elements = set(elements)
    mul = group.mul
    return Subgroup(group, [g for g in range(group.order)
                            if all(mul(g, s) == mul(s, g) for s in elements)])


def normalizer(group, subgroup):
    """
    {g : g*H*g^-1 = H}

    :rtype: Subgroup
    """
    gens = subgroup.generators
    key = subgroup.key
    return Subgroup(group, [g for g in range(group.order)
                            if all(group.conjugate(g, h) in key for h in gens)])


def conjugate_subgroup(group, subgroup, g):
    return Subgroup(group, [group.conjugate(g, h) for h in subgroup.elements],
                    generators=[group.conjugate(g, h) for h in subgroup.generators])


def conjugacy_classes(group):
    """
    Conjugacy classes as sorted tuples, ordered by their representative
    (the minimal index in the class)

    :rtype: list
    """
    classes = group.cache.get('conjugacy_classes')
    if classes is None:
        gens = group.generators
        seen = set()
        classes = []
        for x in range(group.order):
            if x in seen:
                continue
            orbit = _orbit(x, lambda y: [group.conjugate(g, y) for g in gens])
            seen.update(orbit)
            classes.append(tuple(sorted(orbit)))
        group.cache['conjugacy_classes'] = classes
        orbiwreath.logger.info('{} has {} conjugacy classes'.format(group.name, len(classes)))
    return classes


def class_of(group, x):
    """ Representative of the conjugacy class of x """
    lookup = group.cache.get('class_lookup')
    if lookup is None:
        lookup = {}
        for cls in conjugacy_classes(group):
            for y in cls:
                lookup[y] = cls[0]
        group.cache['class_lookup'] = lookup
    return lookup[x]


def all_subgroups(group, cap=None):
    """
    Every subgroup, built as joins of cyclic subgroups until no new join
    appears; sorted by order then elements

    :raises: OrderCapExceeded above orbiwreath.subgroup_cap
    :rtype: list
    """
    return subgroup_lattice(group, cap=cap).subgroups


def subgroup_lattice(group, cap=None):
    """
    :rtype: SubgroupLattice
    """
    lattice = group.cache.get('subgroup_lattice')
    if lattice is None:
        cap = orbiwreath.subgroup_cap if cap is None else cap
        if group.order > cap:
            raise OrderCapExceeded('subgroup lattice of order {} exceeds subgroup cap {}'.format(
                group.order, cap), size=group.order, cap=cap)
        lattice = SubgroupLattice(group)
        group.cache['subgroup_lattice'] = lattice
    return lattice


class SubgroupLattice(object):
    """ All subgroups of a group grouped into conjugacy classes """

    def __init__(self, group):
        self.group = group
        cyclic = {}
        for x in range(group.order):
            h = subgroup_generated(group, [x])
            cyclic.setdefault(h.key, h)
        found = dict(cyclic)
        frontier = list(cyclic.values())
        while frontier:
            fresh = []
            for h in frontier:
                for c in cyclic.values():
                    if c.key <= h.key:
                        continue
                    joined = Subgroup(group, group.closure(h.generators + c.generators, start=h.key),
                                      generators=h.generators + c.generators)
                    if joined.key not in found:
                        found[joined.key] = joined
                        fresh.append(joined)
            frontier = fresh
        self.subgroups = sorted(found.values(), key=lambda s: (s.order, s.elements))
        self._position = {s.key: i for i, s in enumerate(self.subgroups)}
        self._class_of = [None] * len(self.subgroups)
        self.classes = []
        gens = group.generators
        for i, s in enumerate(self.subgroups):
            if self._class_of[i] is not None:
                continue
            orbit = _orbit(s.key, lambda key: [frozenset(group.conjugate(g, h) for h in key) for g in gens])
            members = sorted(self._position[key] for key in orbit)
            for j in members:
                self._class_of[j] = len(self.classes)
            self.classes.append(members)
        orbiwreath.logger.info('{} has {} subgroups in {} conjugacy classes'.format(
            group.name, len(self.subgroups), len(self.classes)))

    def __len__(self):
        return len(self.subgroups)

    def __iter__(self):
        return iter(self.subgroups)

    def find(self, elements):
        """ The Subgroup with exactly these elements """
        return self.subgroups[self._position[frozenset(elements)]]

    def class_index(self, subgroup):
        """ Index into `classes` of the conjugacy class containing the subgroup """
        key = subgroup.key if isinstance(subgroup, Subgroup) else frozenset(subgroup)
        return self._class_of[self._position[key]]

    def representative(self, class_index):
        return self.subgroups[self.classes[class_index][0]]

    def members(self, class_index):
        return [self.subgroups[i] for i in self.classes[class_index]]

    @property
    def representatives(self):
        return [self.representative(i) for i in range(len(self.classes))]


# private

def _orbit(start, neighbours):
    seen = {start}
    queue = deque([start])
    while queue:
        x = queue.popleft()
        for y in neighbours(x):
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return seen
