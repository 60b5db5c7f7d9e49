from .descriptor import (GSpaceDescriptor, descriptor_from_gset, descriptor_from_json,  # noqa
                         descriptor_from_table)
from .gset import FiniteGSet, gset_wreath_oracle  # noqa
from .fixed import (chi_es, chi_of_hom_fixed, chi_quotient, wreath_chi_quotient, wreath_fixed_chi,  # noqa
                    wreath_orbit_chi, wreath_subgroup_fixed_chi)
