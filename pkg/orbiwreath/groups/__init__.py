from .finite_group import FiniteGroup, TableGroup, make_group, validate_group  # noqa
from .builtin import (CyclicGroup, PermutationGroup, ProductGroup, builtin_group, clear_caches, cycle_string,  # noqa
                      cyclic, direct_product, parse_permutation, permutation_generated, symmetric)
from .wreath import WreathElement, WreathProduct, wreath_product  # noqa
from .subgroups import (Subgroup, SubgroupLattice, all_subgroups, centralizer, class_of,  # noqa
                        conjugacy_classes, conjugate_subgroup, normalizer, subgroup_generated,
                        subgroup_lattice, trivial_subgroup, whole_group)
