"""Torsion subgroups over Q and Q(sqrt d).

The order is bounded by the gcd of |E(F_p)| over split good primes of the
field; the group itself is then built prime by prime: the l-torsion from
division polynomials, then repeated l-division (preimages under [l] found
as roots of phi_l - x_P psi_l^2 in the field).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

from ..arith.fields import QQ, QuadElem, QuadField, rational_sqrt
from ..arith.finite import is_prime, primes_from
from ..arith.poly import Poly
from ..arith.roots import rational_roots, roots_in_quad
from .curve import O, BadPrime, EllCurve, EllPoint, count_points_fp


def _legendre(a: int, p: int) -> int:
    a %= p
    if a == 0:
        return 0
    return 1 if pow(a, (p - 1) // 2, p) == 1 else -1


def _sqrt_mod(a: int, p: int) -> int:
    a %= p
    for s in range(p):
        if s * s % p == a:
            return s
    raise ValueError(f"{a} is not a square mod {p}")


def split_good_primes(E: EllCurve, d: int | None, count: int, start: int = 3, skip=()):
    """First ``count`` odd primes p >= start that split in Q(sqrt d), with E good at p.

    Yields (p, s) with s^2 = d mod p (s is None over Q).
    """
    out = []
    for p in primes_from(start):
        if p == 2 or p in skip:
            continue
        s = None
        if d is not None:
            if _legendre(d, p) != 1:
                continue
            s = _sqrt_mod(d, p)
        try:
            E.reduce(p, s)
        except BadPrime:
            continue
        out.append((p, s))
        if len(out) == count:
            return out
    return out


def torsion_bound(E: EllCurve, d: int | None = None, nprimes: int = 3) -> tuple[int, dict]:
    counts = {p: count_points_fp(E, p, s) for p, s in split_good_primes(E, d, nprimes)}
    b = 0
    for n in counts.values():
        b = gcd(b, n)
    return b, counts


# -- division polynomials --------------------------------------------------------

def division_polys(E: EllCurve, n: int) -> list[Poly]:
    """[f_0, ..., f_n]: f_k = psi_k for odd k and psi_k / psi_2 for even k."""
    b2, b4, b6, b8 = E.b2, E.b4, E.b6, E.b8
    F2 = Poly([b6, 2 * b4, b2, 4])
    f = [Poly([]), Poly([1]), Poly([1]),
         Poly([b8, 3 * b6, 3 * b4, b2, 3]),
         Poly([b4 * b8 - b6 * b6, b2 * b8 - b4 * b6, 10 * b8, 10 * b6, 5 * b4, b2, 2])]
    F22 = F2 * F2
    k = 5
    while k <= n:
        m = k // 2
        if k % 2:
            if m % 2 == 0:
                v = F22 * f[m + 2] * f[m] ** 3 - f[m - 1] * f[m + 1] ** 3
            else:
                v = f[m + 2] * f[m] ** 3 - F22 * f[m - 1] * f[m + 1] ** 3
        else:
            v = f[m] * (f[m + 2] * f[m - 1] ** 2 - f[m - 2] * f[m + 1] ** 2)
        f.append(v)
        k += 1
    return f[: n + 1]


def multiplication_x(E: EllCurve, n: int) -> tuple[Poly, Poly]:
    """(phi_n, psi_n^2) with x(nP) = phi_n(x) / psi_n(x)^2."""
    f = division_polys(E, n + 1)
    F2 = E.two_division_cubic()
    if n % 2:
        psi2 = f[n] * f[n]
        prod = F2 * f[n - 1] * f[n + 1]
    else:
        psi2 = F2 * f[n] * f[n]
        prod = f[n - 1] * f[n + 1]
    return Poly.x() * psi2 - prod, psi2


# -- roots and points in K ---------------------------------------------------------

def _K(v, d):
    if d is None:
        return Fraction(v)
    if isinstance(v, QuadElem):
        return v
    return QuadElem(Fraction(v), 0, d)


def _roots_in_field(f: Poly, d: int | None) -> list:
    """Distinct roots in K of f with coefficients in K."""
    if not f:
        raise ValueError("zero polynomial")
    if d is None:
        return sorted(set(rational_roots(f)))
    if f.ring != QuadField(d) and not any(isinstance(c, QuadElem) for c in f.c):
        return _dedup(roots_in_quad(f, d))
    K = QuadField(d)
    g = f if f.ring == K else f.map(lambda c: _K(c, d), K)
    gbar = g.map(lambda c: c.conj(), K)
    N = (g * gbar).map(lambda c: c.a, QQ)
    return [r for r in _dedup(roots_in_quad(N, d)) if not g(r)]


def _dedup(xs):
    out = []
    for x in xs:
        if x not in out:
            out.append(x)
    return out


def _sqrt_K(v, d):
    if d is None:
        v = Fraction(v)
        return rational_sqrt(v) if v >= 0 else None
    return _K(v, d).sqrt()


def points_with_x(E: EllCurve, x, d: int | None) -> list[EllPoint]:
    a1, a2, a3, a4, a6 = E.a
    t = a1 * x + a3
    disc = t * t + 4 * (x ** 3 + a2 * x * x + a4 * x + a6)
    s = _sqrt_K(disc, d)
    if s is None:
        return []
    ys = [(-t + s) / 2, (-t - s) / 2]
    out = []
    for y in ys:
        P = EllPoint(_K(x, d), _K(y, d))
        if P not in out:
            out.append(P)
    return out


def division_preimages(E: EllCurve, P: EllPoint, ell: int, d: int | None) -> list[EllPoint]:
    """All Q in E(K) with ell*Q = P."""
    phi, psi2 = multiplication_x(E, ell)
    if P.is_infinity:
        g = E.two_division_cubic() if ell == 2 else division_polys(E, ell)[ell]
        out = [O]
    else:
        if d is None:
            g = phi - psi2.scale(P.x)
        else:
            K = QuadField(d)
            g = phi.map(lambda c: _K(c, d), K) - psi2.map(lambda c: _K(c, d), K).scale(_K(P.x, d))
        out = []
    for x in _roots_in_field(g, d):
        for Q in points_with_x(E, x, d):
            if E.mul(ell, Q) == P and Q not in out:
                out.append(Q)
    return out


# -- group structure -------------------------------------------------------------------

def _order_in(E: EllCurve, P: EllPoint, cap: int) -> int:
    Q, n = P, 1
    while not Q.is_infinity:
        Q = E.add(Q, P)
        n += 1
        if n > cap:
            raise AssertionError("point order exceeds the group order")
    return n


def _span(E: EllCurve, gens) -> set:
    S = {O}
    frontier = [O]
    while frontier:
        nxt = []
        for A in frontier:
            for g in gens:
                B = E.add(A, g)
                if B not in S:
                    S.add(B)
                    nxt.append(B)
        frontier = nxt
    return S


def structure_of(E: EllCurve, pts) -> tuple[tuple[int, int], tuple]:
    """(n1, n2) and generators for a finite abelian group of rank <= 2 given as a point set."""
    pts = list(pts)
    n = len(pts)
    orders = {P: _order_in(E, P, n) for P in pts}
    e = max(orders.values())
    n1 = n // e
    P1 = min((P for P in pts if orders[P] == e), key=repr)
    if n1 == 1:
        return (1, e), (P1,)
    for Q in sorted((P for P in pts if orders[P] == n1), key=repr):
        if len(_span(E, [P1, Q])) == n:
            return (n1, e), (P1, Q)
    raise AssertionError("group is not of rank <= 2")


@dataclass(frozen=True)
class TorsionGroup:
    structure: tuple
    generators: tuple
    points: tuple
    field_d: int | None
    bound: int
    counts: dict
    status: str = "complete"
    witnesses: dict = field(default_factory=dict)

    @property
    def order(self) -> int:
        return self.structure[0] * self.structure[1]


def _prime_power_part(n: int, ell: int) -> int:
    out = 1
    while n % ell == 0:
        n //= ell
        out *= ell
    return out


def torsion(E: EllCurve, d: int | None = None, nprimes: int = 3, extra_primes: int = 5) -> TorsionGroup:
    """E(K)_tors for K = Q (d None or 1) or Q(sqrt d), E over Q."""
    if d == 1:
        d = None
    bound, counts = torsion_bound(E, d, nprimes)
    if len(counts) < nprimes:
        return TorsionGroup((1, 1), (), (O,), d, bound, counts, "inconclusive")
    parts = []
    try:
        for ell in sorted(q for q in range(2, bound + 1) if bound % q == 0 and is_prime(q)):
            target = _prime_power_part(bound, ell)
            S = [O]
            new = [O]
            while new and len(S) < target:
                found = []
                for P in new:
                    for Q in division_preimages(E, P, ell, d):
                        if Q not in S and Q not in found:
                            found.append(Q)
                S += found
                new = found
            parts.append(S)
    except (ArithmeticError, ValueError) as exc:
        return TorsionGroup((1, 1), (), (O,), d, bound, counts, f"inconclusive: {exc}")
    T = [O]
    for S in parts:
        T = [E.add(A, B) for A in T for B in S]
    struct, gens = structure_of(E, T)
    # injectivity into further residue fields
    wit = {}
    skip = set(counts)
    for p, s in split_good_primes(E, d, extra_primes, skip=skip):
        images = {E.reduce_point(P, p, s) for P in T}
        wit[p] = len(images) == len(T) and count_points_fp(E, p, s) % len(T) == 0
    status = "complete" if all(wit.values()) else "inconclusive: reduction check failed"
    return TorsionGroup(struct, gens, tuple(T), d, bound, counts, status, wit)
