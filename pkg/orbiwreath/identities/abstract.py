from collections import namedtuple
from fractions import Fraction

import six
from six.moves import range

from ..exception import ConfigError, UnsupportedSource
from ..groups import centralizer, subgroup_lattice
from ..presentations import GroupPresentation, hnf_matrices
from ..rationals import format_rational, to_fraction
from ..sectors import Invariant, gamma_extension, gamma_set_extension_direct

SectorClass = namedtuple('SectorClass', ['label', 'count', 'value', 'rho'])
SectorClass.__doc__ = """
One conjugacy class of index-n subgroups: label, number of subgroups in the
class, the sector value (chi_(Gamma/H) for euler, chi^ES_H for euler_satake)
and optionally the per-[rho] (value, cover degree) pairs of the master product.
"""


class AbstractSectorData(object):
    """
    Right-hand-side ingredients given per subgroup index instead of being
    computed from a finite descriptor

    :Example:

    data = AbstractSectorData('euler', {1: [SectorClass('G', 1, 3, None)]})
    rhs_euler_product(gamma, data, 4)  #=> (1 - q)^-3
    """

    def __init__(self, invariant, entries):
        self.invariant = Invariant.from_tag(invariant)
        self.entries = {}
        for n, classes in entries.items():
            n = int(n)
            if n < 1:
                raise ConfigError('subgroup index must be positive, got {}'.format(n))
            labels = set()
            checked = []
            for entry in classes:
                entry = SectorClass(*entry) if not isinstance(entry, dict) else SectorClass(
                    entry.get('label'), entry.get('count'), entry.get('value'), entry.get('rho'))
                if isinstance(entry.count, bool) or not isinstance(entry.count, six.integer_types) \
                        or entry.count < 0:
                    raise ConfigError('count for {!r} must be a non-negative integer'.format(entry.label))
                if entry.label in labels:
                    raise ConfigError('label {!r} repeated at index {}'.format(entry.label, n))
                labels.add(entry.label)
                rho = None
                if entry.rho is not None:
                    rho = [(to_fraction(v), int(d)) for v, d in entry.rho]
                checked.append(SectorClass(entry.label, entry.count, to_fraction(entry.value), rho))
            self.entries[n] = checked

    @classmethod
    def from_concrete(cls, inv, gamma, desc, truncation):
        """
        Records the concrete pipeline's per-subgroup values for indices 1..T

        :param gamma: GroupPresentation, trivial, free abelian or finite
        :raises: UnsupportedSource for other sources
        """
        inv = Invariant.from_tag(inv)
        entries = {}
        kind = gamma.kind
        if kind in ('trivial', 'free_abelian'):
            sector = gamma_extension(inv, gamma, desc)
            values = [t.value for t in sector]
            for n in range(1, truncation + 1):
                matrices = hnf_matrices(gamma.rank, n) if kind == 'free_abelian' else ([()] if n == 1 else [])
                entries[n] = [SectorClass('hnf{}'.format([list(r) for r in m]), 1, sector.value,
                                          [(v, n) for v in values]) for m in matrices]
        elif kind == 'finite':
            source = gamma.group
            lattice = subgroup_lattice(source)
            for n in range(1, truncation + 1):
                entries[n] = []
            for i in range(len(lattice.classes)):
                h = lattice.representative(i)
                n = h.index
                if n > truncation:
                    continue
                direct = gamma_set_extension_direct(inv, gamma, h, desc)
                if inv.is_euler:
                    value = direct.value
                    rho = [(t.value, 1) for t in direct]
                else:
                    value = gamma_extension(inv, GroupPresentation.finite(h.as_group()), desc).value
                    rho = []
                    for t in direct:
                        c_order = centralizer(desc.group, set(t.representative)).order
                        rho.append((inv.from_parts(t.fixed_chi, c_order), t.tau_order // c_order // h.order))
                label = 'subgroup{}'.format(list(h.elements))
                entries[n].append(SectorClass(label, len(lattice.classes[i]), value, rho))
        else:
            raise UnsupportedSource('abstract sector data is derivable for abelian presets and finite sources, '
                                    'not {}'.format(gamma.describe()))
        return cls(inv, entries)

    def classes(self, n):
        return self.entries.get(n, [])

    def euler_exponent(self, n):
        """ sum over index-n classes of chi_(Gamma/H) """
        return sum((entry.value for entry in self.classes(n)), Fraction(0))

    def es_inner_sum(self, n):
        """ sum over index-n subgroups of chi^ES_H """
        return sum((entry.count * entry.value for entry in self.classes(n)), Fraction(0))

    def to_json(self):
        return {'invariant': str(self.invariant),
                'entries': {str(n): [{'label': e.label, 'count': e.count, 'value': format_rational(e.value),
                                      'rho': None if e.rho is None else
                                      [[format_rational(v), d] for v, d in e.rho]}
                                     for e in classes]
                            for n, classes in sorted(self.entries.items())}}

    @classmethod
    def from_json(cls, data):
        if not isinstance(data, dict) or not isinstance(data.get('entries'), dict):
            raise ConfigError('abstract sector data needs an "entries" object keyed by index')
        try:
            return cls(data.get('invariant', 'euler_satake'), data['entries'])
        except (TypeError, ValueError) as e:
            raise ConfigError('bad abstract sector data: {}'.format(e))

    def __repr__(self):
        return '#<AbstractSectorData: {} indices={}>'.format(self.invariant, sorted(self.entries))
