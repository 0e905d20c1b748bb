"""Rational torsion of a genus 2 Jacobian of rank 0.

The order is bounded by gcd L(1) over good primes.  Candidate classes come
from a height search: rational points, and quadratic points cut out by
monic a(x) of degree 2 with small coefficients whose f(theta) is a square in
Q(theta).  Their classes P + Q - D_inf generate a subgroup whose closure is
compared with the bound.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations_with_replacement
from math import gcd

from ..arith.fields import QuadElem, QuadField, rational_sqrt, squarefree_part
from ..arith.poly import Poly
from ..arith.roots import rational_roots
from ..catalogue.models import CurveModel, factor_qq
from .cantor import MumfordDivisor, QuinticModel, cantor_add, descend, identity, order
from .counting import BadPrime, lpoly


DEFAULT_PRIMES = (7, 11, 13)


def small_rationals(height: int):
    """Rationals n/d with |n| <= height, 1 <= d <= height, each once."""
    seen = set()
    for d in range(1, height + 1):
        for n in range(-height, height + 1):
            v = Fraction(n, d)
            if v not in seen:
                seen.add(v)
                yield v


def rational_points(f: Poly, height: int) -> list:
    """Affine rational points on y^2 = f(x) with x of height <= height, plus points at infinity."""
    out = []
    for x in small_rationals(height):
        v = f(x)
        s = rational_sqrt(v) if v >= 0 else None
        if s is None:
            continue
        out.append((x, s))
        if s:
            out.append((x, -s))
    if f.degree % 2 == 0:
        s = rational_sqrt(f.lc()) if f.lc() > 0 else None
        if s is not None:
            out += [("inf", s), ("inf", -s)]
    return out


def quadratic_places(f: Poly, height: int) -> list:
    """(d, theta, beta): theta a root of an irreducible x^2 + a1 x + a0 (a_i of height <= height), beta^2 = f(theta)."""
    out = []
    vals = list(small_rationals(height))
    for a1 in vals:
        for a0 in vals:
            disc = a1 * a1 - 4 * a0
            if disc >= 0 and rational_sqrt(disc) is not None:
                continue
            d = squarefree_part(disc.numerator * disc.denominator)
            m = rational_sqrt(disc / d)
            theta = QuadElem(-a1 / 2, m / 2, d)
            beta = f.map(lambda c: QuadElem(c, 0, d), QuadField(d))(theta).sqrt()
            if beta is not None:
                out.append((d, theta, beta))
    return out


@dataclass(frozen=True)
class Genus2Torsion:
    label: str
    bound: int
    jacobian_orders: dict
    structure: tuple
    classes: tuple  # MumfordDivisor on the quintic model
    orders: dict
    generators: tuple
    status: str
    model: QuinticModel = field(repr=False, compare=False, default=None)
    two_torsion: int = 0

    @property
    def size(self) -> int:
        return len(self.classes)


def closure(gens, H: Poly, cap: int) -> list:
    """Subgroup generated by gens; stops once more than cap elements are found."""
    S = [identity(H.ring)]
    seen = set(S)
    frontier = list(S)
    while frontier and len(S) <= cap:
        nxt = []
        for A in frontier:
            for g in gens:
                B = cantor_add(A, g, H)
                if B not in seen:
                    seen.add(B)
                    S.append(B)
                    nxt.append(B)
        frontier = nxt
    return S


def group_structure(elements, add, orders: dict) -> tuple[tuple, tuple]:
    """(invariant factors, generators) for a finite abelian group of rank <= 2."""
    n = len(elements)
    e = max(orders.values())
    if n == e:
        gen = min((P for P in elements if orders[P] == e), key=str)
        return ((e,), (gen,)) if e > 1 else ((), ())
    n1 = n // e
    P = min((P for P in elements if orders[P] == e), key=str)
    multiples = {P}
    Q = P
    for _ in range(e):
        Q = add(Q, P)
        multiples.add(Q)
    for R in sorted((R for R in elements if orders[R] == n1), key=str):
        span = set()
        for m in multiples:
            T = m
            for _ in range(n1):
                span.add(T)
                T = add(T, R)
        if len(span) == n:
            return (n1, e), (P, R)
    raise AssertionError("group is not of rank <= 2")


def torsion_genus2(M: CurveModel, primes=DEFAULT_PRIMES, height: int = 6,
                   quad_height: int = 3, require_rank0: bool = True) -> Genus2Torsion:
    if M.kind != "Hyperelliptic" or M.genus != 2:
        raise ValueError("torsion_genus2 expects a genus 2 hyperelliptic model")
    if require_rank0 and M.cited.get("jacobian_rank") != "0":
        raise ValueError(f"{M.label}: no cited rank 0 for the Jacobian")
    f = M.f
    orders_p = {}
    for p in primes:
        try:
            orders_p[p] = lpoly(M, p).jacobian_order
        except BadPrime:
            continue
    bound = 0
    for v in orders_p.values():
        bound = gcd(bound, v)
    roots = sorted(rational_roots(f))
    if not roots:
        raise ValueError("no rational Weierstrass point for the quintic model")
    Q5 = QuinticModel(f, roots[0])
    H = Q5.H
    gens = []
    pts = rational_points(f, height)
    for P, R in combinations_with_replacement(pts, 2):
        gens.append(Q5.pair(P, R))
    for d, theta, beta in quadratic_places(f, quad_height):
        K = QuadField(d)
        QK = Q5.over(K)
        D = QK.pair((theta, beta), (theta.conj(), beta.conj()))
        gens.append(descend(D))
    gens = list(dict.fromkeys(g for g in gens if not g.is_identity()))
    S = closure(gens, H, bound)
    ords = {}
    nontorsion = None
    for D in S:
        o = order(D, H, bound)
        if o is None:
            nontorsion = D
            break
        ords[D] = o
    if nontorsion is not None:
        status = f"inconclusive: class {nontorsion} has order > {bound}"
        return Genus2Torsion(M.label, bound, orders_p, (), tuple(S), ords, (), status, Q5)
    if len(S) > bound:
        raise AssertionError("subgroup exceeds the torsion bound")
    struct, gen = group_structure(S, lambda A, B: cantor_add(A, B, H), ords)
    two = sum(1 for D in S if ords[D] <= 2)
    status = "complete" if len(S) == bound else f"inconclusive: found {len(S)} of at most {bound}"
    return Genus2Torsion(M.label, bound, orders_p, struct, tuple(S), ords, gen, status, Q5, two)


def rational_two_torsion(f: Poly) -> int:
    """Size of the rational 2-torsion predicted by the factorisation of f.

    Degree 6 with rational factors of degrees n_1..n_k: 2^(k - 1) if every
    n_i is even, else 2^(k - 2) (the 2-torsion is spanned by even-degree sub-products).
    """
    degs = [g.degree for g, m in factor_qq(f)]
    if sum(degs) != f.degree or f.degree != 6:
        raise ValueError("expected a squarefree sextic")
    k = len(degs)
    if all(n % 2 == 0 for n in degs):
        return 2 ** (k - 1)
    return 2 ** (k - 2)


def quadratic_point_class(Q5: QuinticModel, P) -> MumfordDivisor:
    """Class of P + conj(P) - D_inf for P = (x, y) with coordinates in one Q(sqrt d)."""
    x, y = P
    d = next(c.d for c in (x, y) if isinstance(c, QuadElem) and c.b)
    QK = Q5.over(QuadField(d))
    D = QK.pair((x, y), (x.conj(), y.conj()))
    return descend(D)
