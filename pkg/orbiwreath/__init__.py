from .logger import Logger

__version__ = '0.1.0'

#
# Largest group order that builtin constructors, permutation closures and
# wreath products are allowed to build.
#

order_cap = 20160

#
# Largest group order for which the full subgroup lattice is enumerated.
#

subgroup_cap = 384

#
# Largest homomorphism search space (|G| ** generator count) that will be walked.
#

node_cap = 10 ** 8

#
# Largest point count |X| ** n scanned by the literal G-set oracle.
#

gset_cap = 10 ** 7

#
# Groups up to this order get an exhaustive associativity check on validation.
#

associativity_cap = 64

#
# Multiplication rows are cached for groups up to this order.
#

table_cap = 1024

#
# Hard maximum for the truncation of generating series in run configs.
#

truncation_max = 8

#
# Worker count for homomorphism enumeration; None means the number of cores.
# The search is pure Python and holds the GIL, so extra workers keep results
# in order but give no speedup on CPython.
#

threads = None

#
# Custom logger
#

logger = Logger()
