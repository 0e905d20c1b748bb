from .groups import (Mat2, SubgroupGL2, NotInvertible, UnsupportedPrime, PreconditionError,
                     closure, standard_subgroup, standard_order, subgroups_up_to_conjugacy, parse_mat)
from .classify import (classify_image, ddt_reducibility_check, galois_image_lemma,
                       is_irreducible, is_absolutely_irreducible, ImageClassification)
from .goursat import (goursat, GoursatData, quadratic_generic_witness, decomposed_generic_test,
                      InvalidPrime)
