from .abstract import AbstractSectorData, SectorClass  # noqa
from .sides import (dm_phi, dm_psi, lhs_series, macdonald_rhs, rhs_es_exp, rhs_euler_product,  # noqa
                    rhs_master_product)
from .report import VerificationReport  # noqa
from .verify import THEOREMS, gamma_set_product, verify, verify_dm  # noqa
