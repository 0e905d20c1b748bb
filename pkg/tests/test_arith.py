from fractions import Fraction
from random import Random

import pytest
from hypothesis import given, settings, strategies as st

from modquad.arith import (
    GF, QQ, DegenerateInput, Poly, QuadElem, QuadField, RingMismatch, InvalidField, UnsupportedExtension,
    count_roots_ext, poly_identity, rational_roots, roots_in_quad,
)
from modquad.arith.conics import DegenerateForm, INF, TernaryForm, conic_local_soluble, conic_global_soluble
from modquad.arith.finite import FFElem, least_irreducible
from modquad.arith.poly import BiPoly
from modquad.catalogue.expr import eval_poly
from modquad.harness import oracles

rats = st.fractions(max_denominator=50).filter(lambda v: abs(v.numerator) < 10 ** 6)
SQF = [-55, -11, -3, -1, 2, 5, 21]


def quad(d):
    return st.builds(lambda a, b: QuadElem(a, b, d), rats, rats)


# -- quadratic fields ------------------------------------------------------------------

@settings(max_examples=60, deadline=None)
@given(st.sampled_from(SQF).flatmap(lambda d: st.tuples(quad(d), quad(d), quad(d))))
def test_quadratic_field_ring_axioms(t):
    a, b, c = t
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
    if a:
        assert a * a.inverse() == 1


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(SQF).flatmap(lambda d: st.tuples(quad(d), quad(d))))
def test_conjugation_is_a_field_automorphism(t):
    x, y = t
    assert x.conj().conj() == x
    assert (x * y).conj() == x.conj() * y.conj()
    assert (x * y).norm() == x.norm() * y.norm()
    assert isinstance(x.norm(), Fraction)


def test_quadratic_sqrt_and_field_errors():
    K = QuadField(-11)
    r = K(Fraction(-5, 6), Fraction(1, 6))
    assert (r * r).sqrt() in (r, -r)
    assert K(2).sqrt() is None
    with pytest.raises(InvalidField):
        QuadField(12)
    with pytest.raises(RingMismatch):
        QuadElem(1, 1, 5) + QuadElem(1, 1, -5)


# -- finite fields ---------------------------------------------------------------------

@pytest.mark.parametrize("p,k", [(2, 3), (3, 2), (5, 3), (7, 2), (13, 1)])
def test_finite_field_axioms_exhaustive_sample(p, k):
    F = GF(p, k)
    rng = Random(p * 10 + k)
    els = [FFElem(F, rng.randrange(F.q)) for _ in range(40)]
    for a, b, c in zip(els, els[1:], els[2:]):
        assert (a + b) * c == a * c + b * c
        assert (a * b) * c == a * (b * c)
        if a:
            assert a * a.inverse() == F.one
    # Frobenius fixes exactly the prime field
    fixed = [x for x in range(F.q) if F.frobenius(x) == x]
    assert len(fixed) == p


def test_modulus_is_least_irreducible():
    assert least_irreducible(3, 2) == (1, 0, 1)  # x^2 + 1
    assert least_irreducible(2, 3) == (1, 1, 0, 1)  # x^3 + x + 1
    with pytest.raises(UnsupportedExtension):
        GF(3, 4)


# -- polynomials -----------------------------------------------------------------------

small_polys = st.lists(st.integers(-9, 9), min_size=1, max_size=6).map(lambda cs: Poly(cs))


@settings(max_examples=80, deadline=None)
@given(small_polys, small_polys)
def test_gcd_divides_both(f, g):
    if not f or not g:
        return
    h = f.gcd(g)
    assert h.divides(f) and h.divides(g)
    assert h.degree <= min(f.degree, g.degree)
    assert poly_identity(f, h * f.exact_div(h))
    q, r = f.divmod(g)
    assert poly_identity(f, q * g + r) and r.degree < g.degree


@settings(max_examples=40, deadline=None)
@given(st.integers(2, 13).filter(lambda p: p in (2, 3, 5, 7, 11, 13)),
       st.lists(st.integers(0, 12), min_size=2, max_size=5),
       st.lists(st.integers(0, 12), min_size=2, max_size=5))
def test_gcd_over_prime_field(p, a, b):
    F = GF(p)
    f, g = Poly(a, F), Poly(b, F)
    if not f or not g:
        return
    h = f.gcd(g)
    assert h.divides(f) and h.divides(g)


def test_poly_identity_examples():
    assert poly_identity(eval_poly("(x + 1)^2"), eval_poly("x^2 + 2*x + 1"))
    assert not poly_identity(eval_poly("(x + 1)^2"), eval_poly("x^2 + 1"))
    with pytest.raises(RingMismatch):
        poly_identity(Poly([1, 1]), Poly([1, 1], GF(5)))
    assert poly_identity(BiPoly.x() * BiPoly.y(), BiPoly.y() * BiPoly.x())


def test_rational_roots_examples():
    assert sorted(rational_roots(eval_poly("x^2 - 1"))) == [-1, 1]
    assert rational_roots(eval_poly("x^2 + 1")) == []
    assert sorted(rational_roots(eval_poly("(x - 2)^2*(3*x + 1)"))) == [Fraction(-1, 3), 2, 2]
    with pytest.raises(DegenerateInput):
        rational_roots(Poly([]))


def test_roots_in_quad_examples():
    K = QuadField(-11)
    assert sorted(map(str, roots_in_quad(eval_poly("x^2 + 11"), -11))) == sorted(
        map(str, [K(0, 1), K(0, -1)]))
    assert sorted(roots_in_quad(eval_poly("3*x^2 + 26*x - 9"), -55), key=lambda r: r.a) == [-9, Fraction(1, 3)]
    assert roots_in_quad(eval_poly("x^2 + 1"), -3) == []
    with pytest.raises(InvalidField):
        roots_in_quad(eval_poly("x^2 + 1"), 4)


def test_count_roots_ext_examples():
    F3, F5, F7 = GF(3), GF(5), GF(7)
    assert count_roots_ext(Poly([1, 0, 1], F3), 3, 1) == 0
    assert count_roots_ext(Poly([1, 0, 1], F3), 3, 2) == 2
    assert count_roots_ext(Poly([0, -1, 0, 1], F5), 5, 1) == 3
    assert count_roots_ext(Poly([1, 0, 0, 0, 1], F7), 7, 2) == 4
    assert count_roots_ext(Poly([1, 2, 1], F3), 3, 1, multiplicity=True) == 2
    with pytest.raises(UnsupportedExtension):
        count_roots_ext(Poly([1, 1], F3), 3, 4)


FIELDS_UPTO_343 = [(p, k) for p in (2, 3, 5, 7, 11, 13, 17) for k in (1, 2, 3) if p ** k <= 343]


@pytest.mark.parametrize("p,k", FIELDS_UPTO_343)
def test_count_roots_ext_matches_brute_force(p, k):
    rng = Random(1000 * p + k)
    for _ in range(12):
        cs = oracles.random_poly_mod_p(rng, p)
        assert count_roots_ext(Poly(cs, GF(p)), p, k) == oracles.brute_root_count(cs, p, k), cs


# -- conics ----------------------------------------------------------------------------

def conic(xx, yy, zz, xy=0, xz=0, yz=0):
    return TernaryForm.from_coeffs(xx, yy, zz, xy, xz, yz)


def test_conic_examples():
    # a0^2 + 3 a1^2 + 6 a1 Z + c Z^2
    q15, q12, qm33 = conic(1, 3, 15, yz=6), conic(1, 3, 12, yz=6), conic(1, 3, -33, yz=6)
    assert conic_local_soluble(q15, 3) is False
    assert conic_local_soluble(q12, 3) is False
    assert all(conic_local_soluble(qm33, v) for v in (2, 3, 5, 7, 11, 13, INF))
    assert conic_global_soluble(qm33)
    assert qm33(3, 2, 1) == 0
    with pytest.raises(DegenerateForm):
        conic_local_soluble(conic(1, -1, 0), 3)


def test_conic_solubility_matches_hensel_search():
    rng = Random(7)
    for _ in range(100):
        cs = oracles.random_form(rng)
        q = TernaryForm.from_coeffs(*cs)
        for p in (2, 3, 5, 7, 11, 13, INF):
            h = oracles.hensel_soluble(cs, p)
            assert h is not None
            assert h == conic_local_soluble(q, p), (cs, p)
