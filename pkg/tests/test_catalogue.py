from fractions import Fraction

import pytest

from modquad.arith import QuadElem
from modquad.arith.poly import Poly, poly_identity
from modquad.catalogue import (
    ArityError, CatalogueError, InvalidMap, InvolutionSpec, builtin_catalogue, compose_jmap, eval_bivariate,
    eval_constant, eval_poly, factor_qq, fibre_polynomial, fixed_points, involution_check, load_catalogue,
    on_curve, ramification_divides,
)

CAT = builtin_catalogue()

HEADER = 'schema = 1\n'


def test_builtin_catalogue_loads():
    assert len(CAT) == 13
    assert set(CAT.references) == {"15a1", "15a3", "45a2", "225a1"}
    assert {M.genus for M in CAT} == {0, 1, 2, 3}
    with pytest.raises(KeyError, match="known"):
        CAT["X(nope)"]


def test_genus_by_kind():
    assert CAT["b5"].genus == 0
    assert CAT["ns3ob5"].genus == 1
    assert CAT["b3ns5"].genus == 2
    assert CAT["C1"].genus == CAT["C2"].genus == 3


@pytest.mark.parametrize("entry,msg", [
    ('[[curve]]\nlabel = "bad"\nname = "bad"\nkind = "Hyperelliptic"\nsextic = "(x-1)^2*(x^4+1)"\n',
     "squarefree"),
    ('[[curve]]\nlabel = "bad"\nname = "bad"\nkind = "PlaneQuartic"\nequation = "x^4 - y^2"\n',
     "singular"),
    ('[[curve]]\nlabel = "bad"\nname = "bad"\nkind = "P1WithJ"\nj_num = "x*(x+1)"\nj_den = "x"\n',
     "share a factor"),
    ('[[curve]]\nlabel = "bad"\nname = "bad"\nkind = "Weierstrass"\na = ["0","0","0","0","0"]\n',
     "discriminant"),
])
def test_invalid_entries_are_rejected(entry, msg):
    with pytest.raises(CatalogueError, match=msg):
        load_catalogue(HEADER + entry)


def test_point_off_curve_is_named():
    text = HEADER + ('[[curve]]\nlabel = "e"\nname = "e"\nkind = "Weierstrass"\na = ["0","0","-1","0","1"]\n'
                     '  [[curve.point]]\n  tag = "bogus"\n  coords = ["1", "1"]\n')
    with pytest.raises(CatalogueError, match="bogus"):
        load_catalogue(text)


def test_wrong_schema():
    with pytest.raises(CatalogueError, match="schema"):
        load_catalogue("schema = 2\n")


def test_on_curve_examples():
    M = CAT["ns3ob5"]
    assert on_curve(M, M.point("inf+").coords)
    assert on_curve(CAT["C2"], CAT["C2"].point("P1").coords)
    assert on_curve(CAT["ns3ns5"], (-1, 0))
    assert not on_curve(CAT["ns3ns5"], (0, 0))
    with pytest.raises(ArityError):
        on_curve(CAT["C2"], (1,))
    with pytest.raises(ArityError):
        on_curve(CAT["C2"], (0, 0, 0))


def test_quadratic_points_carry_their_field():
    assert CAT["b3ns5"].point("Q+").field_d == -11
    assert CAT["C2"].point("P2").field_d == -55
    assert CAT["C2"].point("(0:1:1)").field_d is None


def test_involutions_of_catalogue():
    for M in CAT:
        for w in M.involutions:
            assert involution_check(M, w), (M.label, w.label)


def test_non_involutions_are_detected():
    C1 = CAT["C1"]
    neg = InvolutionSpec("neg-y", (eval_bivariate("x"), eval_bivariate("-y")))
    assert not involution_check(C1, neg)
    M = CAT["ns3"]
    shift = InvolutionSpec("shift", (eval_bivariate("x + 1"),))
    assert not involution_check(M, shift)
    # the denominator is the conic's own equation
    Q = CAT["ns3o"]
    bad = InvolutionSpec("zero-den", (eval_bivariate("x/(y^2 + 3*x^2 + 36*x + 432)"), eval_bivariate("y")))
    with pytest.raises(InvalidMap):
        involution_check(Q, bad)


def test_fibre_polynomial_and_ramification():
    x = Poly.x()
    J = compose_jmap(CAT["b5"].jmap, x ** 3)
    assert J.degree == 18
    f = fibre_polynomial(J, 1728)
    assert poly_identity(f, eval_poly("(x^6 + 250*x^3 + 5^5)^3 - 1728*x^15"))
    assert ramification_divides(f, eval_poly("x^4 + 2*x^3 - x^2 + 10*x + 25"))
    assert ramification_divides(f, eval_poly("(x^2 - 5*x - 25)^2"))
    assert not ramification_divides(f, eval_poly("x^2 + 1"))
    assert sorted((g.degree, m) for g, m in factor_qq(f)) == [(2, 1), (2, 2), (4, 1), (4, 2)]


def test_fixed_points():
    M = CAT["b5"]
    L = fixed_points(M, M.involution("w5"))
    # x^2 = 125 has no rational solution but two geometric ones
    assert L.count == 2 and not L.entire_curve
    H = CAT["b3ns5"]
    assert fixed_points(H, H.involution("hyperelliptic")).count == 6
    ident = InvolutionSpec("id", (eval_bivariate("x"), eval_bivariate("y")))
    assert fixed_points(H, ident).entire_curve


def test_eval_constant_handles_surds():
    v = eval_constant("(-5+sqrt(-11))/6")
    assert isinstance(v, QuadElem) and v.d == -11 and v.a == Fraction(-5, 6)
    assert eval_constant("5^3/10") == Fraction(25, 2)
