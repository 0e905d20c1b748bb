from .curve import (
    O, BadPrime, EllCurve, EllPoint, NotOnCurve, SingularInput, count_points_fp, count_points_fq,
    is_isomorphic, jacobian_of_quartic, nontorsion_certificate, point_order, points_fp,
    quartic_invariants, twist_match,
)
from .torsion import (
    TorsionGroup, division_polys, division_preimages, multiplication_x, split_good_primes,
    structure_of, torsion, torsion_bound,
)
