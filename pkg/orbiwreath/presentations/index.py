from collections import deque

from six.moves import range

import orbiwreath
from .actions import coset_action, count_transitive_homs, orbit_structure
from .homs import Homomorphism, enumerate_homs
from .lattice import hnf_matrices
from .presentation import GroupPresentation
from ..exception import ConsistencyError, UnsupportedSource


class FiniteIndexSubgroup(object):
    """
    A subgroup H of finite index n in a presented Gamma

    realization is 'hnf' (matrix of a sublattice of Z^d), 'coset_action'
    (transitive action on n points with basepoint 0) or 'literal' (a Subgroup
    of a finite Gamma); iso_type presents H as an abstract group.
    """

    def __init__(self, gamma, index, realization, iso_type, matrix=None, action=None, subgroup=None):
        self.gamma = gamma
        self.index = index
        self.realization = realization
        self.iso_type = iso_type
        self.matrix = matrix
        self.action = action
        self.subgroup = subgroup

    @property
    def label(self):
        if self.realization == 'hnf':
            return 'hnf{}'.format([list(r) for r in self.matrix])
        if self.realization == 'coset_action':
            from ..groups import cycle_string
            sym = self.action.target
            return 'action[{}]'.format(', '.join(cycle_string(sym.perm(x)) for x in self.action.images))
        return 'subgroup{}'.format(list(self.subgroup.elements))

    def __repr__(self):
        return '#<FiniteIndexSubgroup: index={} {}>'.format(self.index, self.label)


def hall_counts(k, n_max):
    """
    Number of index-n subgroups of the free group of rank k for n = 1..n_max,
    by N_n = n (n!)^(k-1) - sum_{i<n} ((n-i)!)^(k-1) N_i

    :rtype: list

    :Example:

    hall_counts(2, 4)  #=> [1, 3, 13, 71]
    """
    if k == 0:
        return [1] + [0] * (n_max - 1) if n_max else []
    factorials = [1]
    for i in range(1, n_max + 1):
        factorials.append(factorials[-1] * i)
    counts = []
    for n in range(1, n_max + 1):
        total = n * factorials[n] ** (k - 1)
        for i in range(1, n):
            total -= factorials[n - i] ** (k - 1) * counts[i - 1]
        counts.append(total)
    return counts


def count_index_n_subgroups(gamma, n):
    """
    Number of subgroups of index n

    :param gamma: GroupPresentation with preset trivial, free_abelian, free or finite
    :raises: UnsupportedSource for general presentations
    """
    if n < 1:
        raise ValueError('index must be positive, got {}'.format(n))
    kind = gamma.kind
    if kind == 'trivial':
        return 1 if n == 1 else 0
    if kind == 'free_abelian':
        return len(hnf_matrices(gamma.rank, n))
    if kind == 'free':
        return hall_counts(gamma.rank, n)[-1]
    if kind == 'finite':
        from ..groups import all_subgroups
        order = gamma.group.order
        if order % n:
            return 0
        return sum(1 for h in all_subgroups(gamma.group) if h.order == order // n)
    raise UnsupportedSource('subgroup counting is not available for {}'.format(gamma.describe()))


def count_index_n_subgroups_by_actions(gamma, n):
    """
    Counts index-n subgroups as t_n / (n-1)! where t_n is the number of
    transitive homomorphisms Gamma -> S_n; valid for every presentation
    """
    transitive = count_transitive_homs(gamma, n)
    labelings = 1
    for i in range(2, n):
        labelings *= i
    if transitive % labelings:
        raise ConsistencyError('{} transitive actions are not divisible by {}'.format(transitive, labelings))
    return transitive // labelings


def list_index_n_subgroups(gamma, n):
    """
    Every subgroup of index n with its realization and iso type

    :rtype: list of FiniteIndexSubgroup
    :raises: UnsupportedSource for general presentations
    """
    kind = gamma.kind
    if kind == 'trivial':
        if n != 1:
            return []
        return [FiniteIndexSubgroup(gamma, 1, 'hnf', gamma, matrix=())]
    if kind == 'free_abelian':
        iso_type = GroupPresentation.free_abelian(gamma.rank)
        return [FiniteIndexSubgroup(gamma, n, 'hnf', iso_type, matrix=m) for m in hnf_matrices(gamma.rank, n)]
    if kind == 'free':
        iso_type = GroupPresentation.free(n * (gamma.rank - 1) + 1)
        return [FiniteIndexSubgroup(gamma, n, 'coset_action', iso_type, action=a)
                for a in _basepointed_actions(gamma, n)]
    if kind == 'finite':
        from ..groups import all_subgroups
        order = gamma.group.order
        result = []
        for h in all_subgroups(gamma.group):
            if h.order * n == order:
                result.append(FiniteIndexSubgroup(gamma, n, 'literal', GroupPresentation.finite(h.as_group()),
                                                  action=coset_action(gamma, h), subgroup=h))
        return result
    raise UnsupportedSource('subgroup listing is not available for {}'.format(gamma.describe()))


# private

def _basepointed_actions(gamma, n):
    """
    Transitive actions relabelled so point 0 is the basepoint and the other
    points are numbered in breadth-first order; one action per subgroup
    """
    from ..groups import symmetric
    sym = symmetric(n)
    seen = set()
    result = []
    for action in enumerate_homs(gamma, sym):
        if len(orbit_structure(action)) != 1:
            continue
        perms = [sym.perm(x) for x in action.images]
        inverses = [sym.perm(sym.inv[x]) for x in action.images]
        order = {0: 0}
        queue = deque([0])
        while queue:
            x = queue.popleft()
            for i in range(len(perms)):
                for y in (perms[i][x], inverses[i][x]):
                    if y not in order:
                        order[y] = len(order)
                        queue.append(y)
        relabelled = []
        for p in perms:
            q = [0] * n
            for x in range(n):
                q[order[x]] = order[p[x]]
            relabelled.append(sym.index_of(q))
        relabelled = tuple(relabelled)
        if relabelled not in seen:
            seen.add(relabelled)
            result.append(relabelled)
    orbiwreath.logger.info('{} has {} subgroups of index {}'.format(gamma.describe(), len(result), n))
    return [Homomorphism(gamma, sym, images) for images in sorted(result)]
