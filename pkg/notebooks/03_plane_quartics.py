"""
Two plane quartics
==================

Both quartics are smooth, so genus 3.  Their Jacobian orders over small
fields bound the torsion, and two explicit divisors on the second quartic
have reductions of order 10 and 2.
"""

from math import gcd

from modquad.catalogue import builtin_catalogue, smoothness
from modquad.jacobians import lpoly, quartic_class_order

cat = builtin_catalogue()

for label in ("C1", "C2"):
    M = cat[label]
    print(label, "smooth:", smoothness(M))
    g = 0
    for p in (7, 11, 13):
        n = lpoly(M, p).jacobian_order
        g = gcd(g, n)
        print(f"  |Jac(F_{p})| = {n}")
    print("  gcd", g)

C2 = cat["C2"]
for tag in ("D1", "D2"):
    r = quartic_class_order(C2, tag, 11)
    print(f"{tag} mod 11 has order {r.order} in a group of order {r.jacobian_order}", r.notes)
