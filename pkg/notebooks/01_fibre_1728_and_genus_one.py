"""
The 1728 fibre and a genus one double cover
===========================================

Substituting x^3 into the X(b5) j-map and cutting out j = 1728 gives a
polynomial of degree 18.  Its squarefree part carries a quartic, and the
double cover branched there is a genus one curve whose Jacobian we identify.
"""

from modquad.arith import Poly
from modquad.catalogue import builtin_catalogue, compose_jmap, factor_qq, fibre_polynomial
from modquad.elliptic import EllCurve, jacobian_of_quartic, torsion, twist_match
from modquad.jacobians import genus1_pic0

cat = builtin_catalogue()

# j(x^3) on X(b5)
J = compose_jmap(cat["b5"].jmap, Poly.x() ** 3)
print("degree of the composite map:", J.degree)

fibre = fibre_polynomial(J, 1728)
for g, m in factor_qq(fibre):
    print(f"  ({g})^{m}")

# the genus one model y^2 = -3 * (ramification quartic)
M = cat["ns3ob5"]
E = jacobian_of_quartic(M.f)
ref = EllCurve(cat.references["45a2"])
print("j of the Jacobian:", E.j, " twist to 45a2:", twist_match(E, ref))
print("torsion of 45a2:", torsion(ref).structure)

# Pic^0 over Q: three candidate classes, two of them obstructed at 3
r = genus1_pic0(M)
for c in r.conics:
    print(c.divisor, "local verdicts", c.verdicts, "witness", c.witness)
print("Pic^0 =", " x ".join(f"Z/{n}" for n in r.group), "generated by", r.generator)
