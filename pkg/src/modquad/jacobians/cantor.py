"""Genus 2 Jacobian arithmetic in Mumford form.

Arithmetic happens on a monic quintic model Y^2 = H(U).  A sextic
y^2 = f(x) with a rational root r is moved there by x = r + 1/u, v = y u^3,
U = l u, V = l^2 v with l = f'(r).  The fibre over x = infinity (the
divisor D_inf = inf+ + inf-) becomes the fibre over U = 0, which is
linearly equivalent to twice the point at infinity of the quintic model, so
a class [P + Q - D_inf] is the Mumford pair of the images of P and Q.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..arith.fields import QQ, QuadElem, QuadField
from ..arith.poly import Poly


class InvariantError(ValueError):
    pass


@dataclass(frozen=True)
class MumfordDivisor:
    a: Poly
    b: Poly

    def is_identity(self) -> bool:
        return self.a.degree == 0

    @property
    def ring(self):
        return self.a.ring

    def __str__(self):
        return f"({self.a}, {self.b})"


def identity(ring=QQ) -> MumfordDivisor:
    return MumfordDivisor(Poly([ring.one], ring), Poly([], ring))


def check_divisor(D: MumfordDivisor, H: Poly, reduced: bool = True) -> None:
    a, b = D.a, D.b
    if a.ring != H.ring or b.ring != H.ring:
        raise InvariantError("divisor and curve over different fields")
    if not a or a.lc() != a.ring.one:
        raise InvariantError("a must be monic")
    if b.degree >= a.degree and not (a.degree == 0 and not b):
        raise InvariantError("deg b must be < deg a")
    if reduced and a.degree > 2:
        raise InvariantError("deg a must be <= 2")
    if (b * b - H) % a:
        raise InvariantError("a does not divide b^2 - H")


def compose(D1: MumfordDivisor, D2: MumfordDivisor, H: Poly) -> MumfordDivisor:
    a1, b1, a2, b2 = D1.a, D1.b, D2.a, D2.b
    d0, e1, e2 = a1.xgcd(a2)
    d, c1, s3 = d0.xgcd(b1 + b2)
    s1, s2 = c1 * e1, c1 * e2
    a = (a1 * a2).exact_div(d * d)
    b = (s1 * a1 * b2 + s2 * a2 * b1 + s3 * (b1 * b2 + H)).exact_div(d) % a
    return MumfordDivisor(a.monic(), b)


def reduce(D: MumfordDivisor, H: Poly, g: int = 2) -> MumfordDivisor:
    a, b = D.a, D.b
    while a.degree > g:
        a = (H - b * b).exact_div(a).monic()
        b = (-b) % a
    return MumfordDivisor(a, b % a)


def cantor_add(D1: MumfordDivisor, D2: MumfordDivisor, H: Poly) -> MumfordDivisor:
    if H.degree != 5 or H.lc() != H.ring.one:
        raise InvariantError("Cantor arithmetic expects a monic quintic")
    return reduce(compose(D1, D2, H), H)


def neg(D: MumfordDivisor) -> MumfordDivisor:
    return MumfordDivisor(D.a, -D.b)


def mul(n: int, D: MumfordDivisor, H: Poly) -> MumfordDivisor:
    if n < 0:
        return mul(-n, neg(D), H)
    out = identity(H.ring)
    base = D
    while n:
        if n & 1:
            out = cantor_add(out, base, H)
        base = cantor_add(base, base, H)
        n >>= 1
    return out


def order(D: MumfordDivisor, H: Poly, bound: int) -> int | None:
    """Order of D if it is at most bound, else None."""
    Q = D
    for n in range(1, bound + 1):
        if Q.is_identity():
            return n
        Q = cantor_add(Q, D, H)
    return None


def point_divisor(u, v, H: Poly) -> MumfordDivisor:
    R = H.ring
    u, v = R(u), R(v)
    if H(u) != v * v:
        raise InvariantError(f"({u}, {v}) is not on the curve")
    return MumfordDivisor(Poly([-u, R.one], R), Poly([v], R))


def base_change(D: MumfordDivisor, ring) -> MumfordDivisor:
    return MumfordDivisor(D.a.map(ring, ring), D.b.map(ring, ring))


def descend(D: MumfordDivisor) -> MumfordDivisor:
    """Divisor over Q(sqrt d) with rational coefficients, as a divisor over Q."""
    def down(c):
        if isinstance(c, QuadElem):
            if c.b:
                raise InvariantError("divisor is not defined over Q")
            return c.a
        return c
    return MumfordDivisor(D.a.map(down, QQ), D.b.map(down, QQ))


# -- sextic to quintic -------------------------------------------------------------

class QuinticModel:
    """Monic quintic model of y^2 = f(x), f of degree 5 or 6 with root r."""

    def __init__(self, f: Poly, r):
        R = f.ring
        r = R(r)
        if f(r):
            raise InvariantError(f"{r} is not a root of f")
        if f.degree not in (5, 6):
            raise InvariantError("genus 2 needs f of degree 5 or 6")
        self.f, self.r = f, r
        self.sextic_degree = f.degree
        # g(u) = u^6 f(r + 1/u) = sum f_i (r u + 1)^i u^(6 - i)
        ru1 = Poly([R.one, r], R)
        u = Poly.x(R)
        g = Poly([], R)
        for i, c in enumerate(f.c):
            g = g + (ru1 ** i * u ** (6 - i)).scale(c)
        if g.degree != 5:
            raise InvariantError("transformed model is not quintic")
        l = g.lc()
        self.l = l
        self.H = Poly([c * l ** (4 - i) for i, c in enumerate(g.c)], R)
        assert self.H.lc() == R.one

    @property
    def ring(self):
        return self.H.ring

    def map_point(self, x, y):
        """(x, y) on y^2 = f to (U, V) on V^2 = H, or None for (r, 0)."""
        R = self.ring
        x, y = R(x), R(y)
        if x == self.r:
            return None
        u = R.one / (x - self.r)
        return self.l * u, self.l ** 2 * y * u ** 3

    def map_infinity(self, s):
        """Image of the point at infinity (1 : s : 0), s^2 = lc(f) (sextic case)."""
        return self.ring.zero, self.l ** 2 * self.ring(s)

    def point(self, x, y) -> MumfordDivisor:
        """[P - inf-part] as a degree <= 1 Mumford divisor; the identity for (r, 0)."""
        im = self.map_point(x, y)
        if im is None:
            return identity(self.ring)
        return point_divisor(*im, self.H)

    def inf_point(self, s) -> MumfordDivisor:
        return point_divisor(*self.map_infinity(s), self.H)

    def pair(self, P, Q) -> MumfordDivisor:
        """Class of P + Q - D_inf; P, Q given as ('inf', s) or (x, y)."""
        ds = [self.inf_point(T[1]) if T[0] == "inf" else self.point(*T) for T in (P, Q)]
        return cantor_add(ds[0], ds[1], self.H)

    def over(self, ring) -> QuinticModel:
        """The same model with coefficients pushed into ``ring`` (e.g. Q(sqrt d) or F_p)."""
        out = object.__new__(QuinticModel)
        out.f = self.f.map(ring, ring)
        out.r = ring(self.r)
        out.sextic_degree = self.sextic_degree
        out.l = ring(self.l)
        out.H = self.H.map(ring, ring)
        return out

