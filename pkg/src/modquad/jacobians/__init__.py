from .counting import (
    BadPrime, LPolynomial, PointCounts, check_good_prime, count_curve, jacobian_order, lpoly,
    lpoly_from_counts, point_counts, weil_ok,
)
from .cantor import (
    InvariantError, MumfordDivisor, QuinticModel, base_change, cantor_add, check_divisor, compose,
    descend, identity, mul, neg, order, point_divisor, reduce,
)
from .genus2 import Genus2Torsion, quadratic_point_class, rational_two_torsion, torsion_genus2
from .pic0 import ConicRecord, DerivationError, Pic0Result, check_e0_witness, genus1_pic0
from .plane import (
    ClassOrder, DegenerateSupport, PlaneDivisorClass, QuarticModP, is_principal, quartic_class_order,
    reduce_divisor, reduce_terms, riemann_roch_dim,
)
