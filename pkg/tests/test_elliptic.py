from fractions import Fraction
from random import Random

import pytest
from hypothesis import given, settings, strategies as st

from modquad.arith import GF, Poly
from modquad.catalogue import builtin_catalogue
from modquad.elliptic import (
    O, BadPrime, EllCurve, EllPoint, NotOnCurve, SingularInput, count_points_fp, count_points_fq,
    is_isomorphic, jacobian_of_quartic, nontorsion_certificate, point_order, points_fp,
    quartic_invariants, torsion, twist_match,
)

CAT = builtin_catalogue()


def _good_curve(p, a):
    E = EllCurve(a, GF(p))
    return None if E.is_singular() else E


curves_mod_p = st.sampled_from([5, 7, 11, 13]).flatmap(
    lambda p: st.tuples(st.just(p), st.lists(st.integers(0, p - 1), min_size=5, max_size=5)))


@settings(max_examples=40, deadline=None)
@given(curves_mod_p, st.data())
def test_group_law_over_fp(pa, data):
    p, a = pa
    E = _good_curve(p, a)
    if E is None:
        return
    pts = points_fp(E)
    assert len(pts) == count_points_fp(E)
    P, Q, R = (data.draw(st.sampled_from(pts)) for _ in range(3))
    assert E.add(P, Q) == E.add(Q, P)
    assert E.add(E.add(P, Q), R) == E.add(P, E.add(Q, R))
    assert E.add(P, E.neg(P)) == O
    assert E.add(P, O) == P
    assert E.contains(E.add(P, Q))
    assert E.mul(len(pts), P) == O


def test_count_examples():
    assert count_points_fp(EllCurve((0, 0, 0, 1, 0), GF(3))) == 4
    assert count_points_fp(EllCurve((0, 0, 0, 0, 1), GF(5))) == 6
    E = EllCurve(CAT["ns3ns5"].a)
    assert [count_points_fp(E, p) for p in (7, 11, 13, 19)] == [13, 12, 19, 21]
    with pytest.raises(BadPrime):
        count_points_fp(E, 5)


def test_extension_count_matches_frobenius_trace():
    E = EllCurve(CAT["ns3ns5"].a)
    for p in (7, 11):
        t = p + 1 - count_points_fp(E, p)
        # |E(F_{p^2})| = p^2 + 1 - (t^2 - 2p)
        assert count_points_fq(E, GF(p, 2)) == p * p + 1 - (t * t - 2 * p)


def test_quartic_invariants_example():
    assert quartic_invariants(Poly([1, 0, 0, 0, 1])) == (12, 0)
    with pytest.raises(SingularInput):
        jacobian_of_quartic(Poly([0, 0, 1, 0, 1]))


def test_jacobian_is_invariant_under_substitution():
    # x -> x + t changes the quartic but not (I, J)
    rng = Random(11)
    n = 0
    while n < 20:
        q = Poly([rng.randint(-6, 6) for _ in range(4)] + [rng.choice([-3, -1, 1, 2])])
        if not q.is_squarefree():
            continue
        t = rng.randint(-4, 4)
        q2 = q.compose(Poly([t, 1]))
        assert quartic_invariants(q) == quartic_invariants(q2)
        assert is_isomorphic(jacobian_of_quartic(q), jacobian_of_quartic(q2))
        n += 1


def test_jacobian_of_genus_one_model_is_45a2_twist():
    E = jacobian_of_quartic(CAT["ns3ob5"].f)
    ref = EllCurve(CAT.references["45a2"])
    d = twist_match(E, ref)
    assert d is not None
    assert is_isomorphic(E.twist(d) if d != 1 else E, ref)


def test_isomorphism_examples():
    C = CAT
    assert is_isomorphic(EllCurve(C["X0(15)"].a), EllCurve(C.references["15a1"]))
    assert is_isomorphic(EllCurve(C["Xs3b5"].a), EllCurve(C.references["15a3"]))
    assert not is_isomorphic(EllCurve(C["X0(15)"].a), EllCurve(C.references["15a3"]))
    E = EllCurve((0, 0, 0, -1, 0))
    assert not is_isomorphic(E, E.twist(2))
    assert is_isomorphic(E, E.twist(4))


def test_torsion_examples():
    T = torsion(EllCurve(CAT["X0(15)"].a))
    assert T.structure == (2, 4) and T.status == "complete"
    Ti = torsion(EllCurve(CAT["X0(15)"].a), -1)
    assert Ti.structure == (4, 4)
    assert set(T.points) <= set(Ti.points)
    T5 = torsion(EllCurve(CAT["X0(15)"].a), 5)
    assert T5.structure == (2, 8)
    assert torsion(EllCurve(CAT["ns3ns5"].a)).order == 1
    # y^2 = x^3 - x: full two-torsion only
    assert torsion(EllCurve((0, 0, 0, -1, 0))).structure == (2, 2)


def test_torsion_points_have_orders_dividing_exponent():
    E = EllCurve(CAT["Xs3b5"].a)
    T = torsion(E)
    for P in T.points:
        n = point_order(E, P)
        assert n is not None and T.structure[1] % n == 0


def test_point_order_and_nontorsion():
    E = EllCurve(CAT["ns3ns5"].a)
    P = E.point(Fraction(-1), Fraction(0))
    assert point_order(E, P) is None
    cert = nontorsion_certificate(E, P, [7, 11, 13, 17])
    assert cert is not None and len(set(cert.values())) > 1
    with pytest.raises(NotOnCurve):
        E.point(0, 0)
    Er = E.reduce(43)
    assert count_points_fp(E, 43) == 49
    assert point_order(Er, E.reduce_point(EllPoint(Fraction(-1), Fraction(1)), 43)) == 7
