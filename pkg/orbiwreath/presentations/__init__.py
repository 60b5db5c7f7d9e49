from .presentation import (GroupPresentation, abelianize, evaluate_word, invert_word, power_word,  # noqa
                           reduce_word)
from .homs import (HomClass, Homomorphism, canonical_images, conjugation_orbit, enumerate_homs,  # noqa
                   hom_classes, hom_conjugacy_classes)
from .lattice import hermite_normal_form, hnf_matrices, xgcd  # noqa
from .actions import (GammaSetClass, Orbit, count_transitive_homs, coset_action, gamma_set_classes,  # noqa
                      literal_stabilizer, orbit_structure, restrict_to_orbit, stabilizer_images,
                      stabilizer_lattice, transitive_classes, underlying_permutation_hom)
from .index import (FiniteIndexSubgroup, count_index_n_subgroups, count_index_n_subgroups_by_actions,  # noqa
                    hall_counts, list_index_n_subgroups)
