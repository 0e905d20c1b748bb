"""
Torsion on a genus two Jacobian
===============================

Point counts modulo a few good primes bound the rational torsion; Cantor
arithmetic on a quintic model then exhibits enough classes to meet the bound.
"""

from math import gcd

from modquad.catalogue import builtin_catalogue, on_curve
from modquad.jacobians import lpoly, quadratic_point_class, rational_two_torsion, torsion_genus2

M = builtin_catalogue()["b3ns5"]
print("y^2 =", M.f)
print("rational 2-torsion:", rational_two_torsion(M.f))

bound = 0
for p in (7, 11, 13):
    L = lpoly(M, p)
    print(f"p = {p:2d}  L(T) = {L}  |Jac| = {L.jacobian_order}")
    bound = gcd(bound, L.jacobian_order)
print("torsion divides", bound)

T = torsion_genus2(M)
print("found", T.size, "classes, structure", " + ".join(f"Z/{n}" for n in T.structure), "-", T.status)

# the Q(sqrt -11) points give torsion classes
for tag in ("Q+", "Q-"):
    P = M.point(tag)
    D = quadratic_point_class(T.model, P.coords)
    print(tag, on_curve(M, P.coords), "class of order", T.orders[D])
