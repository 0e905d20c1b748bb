"""Acceptance criteria, one test each.

Every test prints a ``PASS criterion N: ...`` or ``FAIL criterion N: ...``
line; the lines are also collected into the terminal summary.  Runtime
budgets are asserted alongside the mathematical conditions.
"""

import time
from fractions import Fraction
from math import gcd, lcm

from conftest import ACCEPTANCE_LINES
from modquad.arith import Poly, poly_identity, rational_roots
from modquad.arith.fields import rational_sqrt
from modquad.arith.roots import monic_quadratic_factors
from modquad.catalogue import (
    builtin_catalogue, compose_jmap, eval_poly, factor_qq, fibre_polynomial, fixed_points,
    involution_check, on_curve, ramification_divides,
)
from modquad.elliptic import EllCurve, jacobian_of_quartic, torsion, twist_match
from modquad.gl2 import ddt_reducibility_check, galois_image_lemma, subgroups_up_to_conjugacy
from modquad.harness import Config, run_checks
from modquad.jacobians import (
    genus1_pic0, lpoly, quadratic_point_class, quartic_class_order, rational_two_torsion,
    torsion_genus2,
)

CAT = builtin_catalogue()


def criterion(n, text, ok, t0, budget_s):
    elapsed = time.perf_counter() - t0
    ok = bool(ok) and elapsed < budget_s
    line = f"{'PASS' if ok else 'FAIL'} criterion {n}: {text} ({elapsed:.2f} s, budget {budget_s} s)"
    print(line)
    ACCEPTANCE_LINES.append(line)
    assert ok, line


def _fibre_1728():
    return fibre_polynomial(compose_jmap(CAT["b5"].jmap, Poly.x() ** 3), 1728)


def test_criterion_01_fibre_identity():
    t0 = time.perf_counter()
    lhs = eval_poly("(x^6 + 250*x^3 + 5^5)^3 - 1728*x^15")
    rhs = eval_poly("(x^2 - 5*x - 25)^2 * (x^2 - 2*x + 5) * (x^4 + 2*x^3 - x^2 + 10*x + 25)"
                    " * (x^4 + 5*x^3 + 50*x^2 - 125*x + 625)^2")
    ok = poly_identity(lhs, rhs) and poly_identity(_fibre_1728(), lhs)
    criterion(1, "1728 fibre equals the four-factor product", ok, t0, 1)


def test_criterion_02_ramification():
    t0 = time.perf_counter()
    ok = ramification_divides(_fibre_1728(), eval_poly("x^4 + 2*x^3 - x^2 + 10*x + 25"))
    criterion(2, "ramification quartic divides the 1728 fibre", ok, t0, 1)


def test_criterion_03_pic0():
    t0 = time.perf_counter()
    r = genus1_pic0(CAT["ns3ob5"])
    e0, e1, e2 = r.conics
    ok = (all(c.matches_reference for c in r.conics)
          and e1.verdicts[3] is False and e2.verdicts[3] is False
          and e0.witness == (3, 2) and e0.form(3, 2, 1) == 0
          and r.group == (2,) and r.generator == "[0+ - inf-]")
    criterion(3, "derived conics match, two insoluble at 3, Pic^0 = Z/2 generated by [0+ - inf-]", ok, t0, 5)


def test_criterion_04_quartic_jacobian():
    t0 = time.perf_counter()
    q = eval_poly("-3*(x^4 + 2*x^3 - x^2 + 10*x + 25)")
    E = jacobian_of_quartic(q)
    ref = EllCurve(CAT.references["45a2"])
    d = twist_match(E, ref, 30)
    ok = E.j == ref.j and d is not None and abs(d) <= 30
    criterion(4, f"Jacobian of the genus one model has j = j(45a2), twist d = {d}", ok, t0, 1)


def test_criterion_05_x0_15_torsion():
    t0 = time.perf_counter()
    E = EllCurve(CAT["X0(15)"].a)
    assert poly_identity(eval_poly("x*(x+16)*(x+25)"), Poly([0, 400, 41, 1]))
    T, Ti = torsion(E), torsion(E, -1)
    ok = (T.structure == (2, 4) and Ti.order == 16
          and T.status == Ti.status == "complete" and len(set(Ti.points) - set(T.points)) == 8)
    criterion(5, "X0(15) torsion Z/2 x Z/4 over Q, order 16 over Q(sqrt -1)", ok, t0, 30)


def test_criterion_06_genus2_torsion():
    t0 = time.perf_counter()
    M = CAT["b3ns5"]
    roots = rational_roots(M.f)
    shape = sorted((g.degree, m) for g, m in factor_qq(M.f))
    orders = [lpoly(M, p).jacobian_order for p in (7, 11, 13)]
    g = 0
    for v in orders:
        g = gcd(g, v)
    T = torsion_genus2(M, (7, 11, 13))
    ok = (len(roots) == 3 and shape == [(1, 1), (1, 1), (1, 1), (3, 1)] and rational_two_torsion(M.f) == 4
          and g == 20 and T.structure == (2, 10) and T.size == 20 and T.status == "complete")
    criterion(6, f"genus 2 torsion Z/2 + Z/10 with {T.size} classes, gcd {g}", ok, t0, 180)


def test_criterion_07_genus2_quadratic_points():
    t0 = time.perf_counter()
    M = CAT["b3ns5"]
    T = torsion_genus2(M, (7, 11, 13))
    ok = True
    for tag in ("Q+", "Q-"):
        P = M.point(tag)
        x, y = P.coords
        ok = ok and on_curve(M, P.coords) and on_curve(M, (x.conj(), y.conj()))
        ok = ok and quadratic_point_class(T.model, P.coords) in T.orders
    criterion(7, "Q(sqrt -11) points lie on the curve with classes among the 20 torsion classes", ok, t0, 30)


def test_criterion_08_quartic_orders():
    t0 = time.perf_counter()
    o1 = {p: lpoly(CAT["C1"], p).jacobian_order for p in (7, 11, 13)}
    o2 = {p: lpoly(CAT["C2"], p).jacobian_order for p in (7, 11, 13)}
    g1 = g2 = 0
    for p in o1:
        g1, g2 = gcd(g1, o1[p]), gcd(g2, o2[p])
    ok = g1 == 4 and o1[13] == 3420 and g2 == 20
    criterion(8, f"gcd {g1} for C1, |Jac_C1(F_13)| = {o1[13]}, gcd {g2} for C2", ok, t0, 120)


def test_criterion_09_divisor_orders():
    t0 = time.perf_counter()
    M = CAT["C2"]
    r1 = quartic_class_order(M, "D1", 11)
    r2 = quartic_class_order(M, "D2", 11)
    ok = (r1.order == 10 and r2.order is not None and r2.order <= 2
          and r1.divides_jacobian_order and r2.divides_jacobian_order
          and 20 % lcm(r1.order, r2.order) == 0)
    criterion(9, f"D1, D2 at 11 have orders {r1.order}, {r2.order} dividing L(1) = {r1.jacobian_order}",
              ok, t0, 60)


def test_criterion_10_j_minus_32768():
    t0 = time.perf_counter()
    s3 = sorted(rational_roots(fibre_polynomial(CAT["s3"].jmap, -32768)))
    _, quads = monic_quadratic_factors(fibre_polynomial(CAT["ns5"].jmap, -32768), -55)
    discs_ok = bool(quads) and all(rational_sqrt((b * b - 4 * c) / -55) is not None for b, c in quads)
    M = CAT["C2"]
    pts = all(on_curve(M, M.point(t).coords) for t in ("P1", "P2"))
    ok = s3 == [Fraction(-9), Fraction(1, 3)] and discs_ok and pts
    criterion(10, "j = -32768 fibres: roots {1/3, -9}, quadratic factor over Q(sqrt -55), P1, P2 on C2",
              ok, t0, 5)


def test_criterion_11_involutions():
    t0 = time.perf_counter()
    checked = {f"{M.label}:{w.label}": involution_check(M, w) for M in CAT for w in M.involutions}
    H = CAT["b3ns5"]
    nfix = fixed_points(H, H.involution("hyperelliptic")).count
    want = {"b5:w5", "ns3ob5:w5", "b3ns5:hyperelliptic", "C1:w1", "C2:w2"}
    ok = want <= set(checked) and all(checked.values()) and nfix == 6
    criterion(11, f"{len(checked)} catalogued involutions verified, hyperelliptic has {nfix} fixed points",
              ok, t0, 10)


def test_criterion_12_group_theory_exhaustion():
    t0 = time.perf_counter()
    ok = True
    branches = set()
    n = 0
    for p in (3, 5):
        for G in subgroups_up_to_conjugacy(p):
            n += 1
            if len(G.det_image()) > 1:
                ok = ok and ddt_reducibility_check(G).implication_holds
            v = galois_image_lemma(G)
            if v.applies:
                ok = ok and v.part1 and v.part2 != "violation"
                if p == 3:
                    branches.add(v.part2)
    ok = ok and {"s3", "ns3°"} <= branches
    criterion(12, f"DDT-type lemma and p = 3 image branch hold on all {n} subgroup classes", ok, t0, 120)


def test_criterion_13_sieve_residue():
    t0 = time.perf_counter()
    (r,) = run_checks(["sieve-43"], Config())
    d = r.details
    ok = (r.status == "pass" and r.kind == "consistency-with-cited-input"
          and int(d["group_order"]) % 7 == 0 and d["reduction_order"] == 7)
    pt = "(" + ", ".join(str(v) for v in d.get("point", ())) + ")"
    criterion(13, f"non-torsion point {pt} reduces mod 43 to order {d.get('reduction_order')} "
                  f"in a group of order {d.get('group_order')}", ok, t0, 5)


def test_criterion_14_oracles():
    t0 = time.perf_counter()
    res = run_checks(["oracle-roots-ext", "oracle-genus2-jacobian", "oracle-conic-solubility"], Config())
    ok = all(r.status == "pass" for r in res)
    summary = ", ".join(f"{r.name} {r.details.get('cases')} cases" for r in res)
    criterion(14, f"oracle suites agree ({summary})", ok, t0, 120)
