from contextlib import contextmanager
from json import load

import six

import orbiwreath
from .exception import ConfigError
from .groups import builtin_group
from .gspace import GSpaceDescriptor, descriptor_from_json
from .identities import AbstractSectorData
from .presentations import GroupPresentation
from .sectors import Invariant

CAPS = {'order': 'order_cap', 'nodes': 'node_cap', 'subgroups': 'subgroup_cap', 'gset': 'gset_cap'}


class RunConfig(object):
    """
    A JSON run configuration

    {"gamma": presentation, "group": group, "space": descriptor,
     "invariant": "euler" | "euler_satake", "truncation": T,
     "caps": {"order", "nodes", "subgroups", "gset"}, "options": {...},
     "abstract": abstract sector data, "run": [argv...]}

    Parsed pieces are built lazily so group-only commands need no gamma.

    :Example:

    config = RunConfig.load('docs/examples/z_z2_point.json')
    config.truncation  #=> 5
    """

    def __init__(self, data, source=None):
        if not isinstance(data, dict):
            raise ConfigError('run config must be a JSON object')
        self.data = data
        self.source = source
        self.invariant = Invariant.from_tag(data.get('invariant', 'euler_satake'))
        self.truncation = data.get('truncation')
        self.caps = dict(data.get('caps') or {})
        self.options = dict(data.get('options') or {})
        self.threads = data.get('threads')
        self._group = None
        self._presentation = None
        self._descriptor = None
        self._abstract = None
        self.validate()

    @classmethod
    def load(cls, path):
        """
        :raises: ConfigError when the file is missing or not JSON
        """
        try:
            with open(path, 'r') as f:
                data = load(f)
        except (IOError, OSError) as e:
            raise ConfigError('cannot read config {}: {}'.format(path, e))
        except ValueError as e:
            raise ConfigError('config {} is not valid JSON: {}'.format(path, e))
        return cls(data, source=path)

    def override(self, truncation=None, threads=None, cap_order=None, cap_nodes=None, invariant=None):
        """ Applies command-line overrides and validates again """
        if truncation is not None:
            self.truncation = truncation
        if threads is not None:
            self.threads = threads
        if cap_order is not None:
            self.caps['order'] = cap_order
        if cap_nodes is not None:
            self.caps['nodes'] = cap_nodes
        if invariant is not None:
            self.invariant = Invariant.from_tag(invariant)
        self.validate()
        return self

    def validate(self):
        if self.truncation is not None:
            if not _is_int(self.truncation) or not 1 <= self.truncation <= orbiwreath.truncation_max:
                raise ConfigError('truncation must be an integer in 1..{}, got {!r}'.format(
                    orbiwreath.truncation_max, self.truncation))
        for name, value in self.caps.items():
            if name not in CAPS:
                raise ConfigError('unknown cap {!r}, expected one of {}'.format(name, ', '.join(sorted(CAPS))))
            if not _is_int(value) or value < 1:
                raise ConfigError('cap {} must be a positive integer, got {!r}'.format(name, value))
        if self.threads is not None and (not _is_int(self.threads) or self.threads < 1):
            raise ConfigError('threads must be a positive integer, got {!r}'.format(self.threads))

    def require_truncation(self):
        if self.truncation is None:
            raise ConfigError('this command needs a truncation (config "truncation" or --truncation)')
        return self.truncation

    @property
    def group(self):
        """ :rtype: orbiwreath.groups.FiniteGroup """
        if self._group is None:
            if 'group' not in self.data:
                raise ConfigError('config has no "group"')
            self._group = builtin_group(self.data['group'])
        return self._group

    @property
    def presentation(self):
        """ :rtype: orbiwreath.presentations.GroupPresentation """
        if self._presentation is None:
            if 'gamma' not in self.data:
                raise ConfigError('config has no "gamma"')
            self._presentation = GroupPresentation.from_json(self.data['gamma'])
        return self._presentation

    @property
    def descriptor(self):
        """ The space over group; the point when no "space" is given """
        if self._descriptor is None:
            space = self.data.get('space')
            if space is None:
                self._descriptor = GSpaceDescriptor.point(self.group)
            else:
                self._descriptor = descriptor_from_json(self.group, space)
        return self._descriptor

    @property
    def abstract(self):
        """ AbstractSectorData from an "abstract" block, or None """
        if self._abstract is None and self.data.get('abstract') is not None:
            self._abstract = AbstractSectorData.from_json(self.data['abstract'])
        return self._abstract

    @contextmanager
    def applied(self):
        """ Sets the configured caps and threads on orbiwreath for the duration of a run """
        saved = {attr: getattr(orbiwreath, attr) for attr in list(CAPS.values()) + ['threads']}
        try:
            for name, value in self.caps.items():
                setattr(orbiwreath, CAPS[name], value)
            if self.threads is not None:
                orbiwreath.threads = self.threads
            yield self
        finally:
            for attr, value in saved.items():
                setattr(orbiwreath, attr, value)

    def __repr__(self):
        return '#<RunConfig: {}>'.format(self.source or 'inline')


# private

def _is_int(value):
    return isinstance(value, six.integer_types) and not isinstance(value, bool)
