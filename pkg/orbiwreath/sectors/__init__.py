from .invariant import Invariant  # noqa
from .extensions import (InertiaSectorTerm, SectorSum, SectorTerm, gamma_extension,  # noqa
                         gamma_extension_wreath, gamma_set_extension_bruteforce, gamma_set_extension_direct)
from .decomposition import (IrreducibleDecomposition, OrbitRecord, eta_split, phi_eta, psi,  # noqa
                            restrict_to_points)
