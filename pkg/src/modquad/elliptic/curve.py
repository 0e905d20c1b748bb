"""Weierstrass curves over Q, Q(sqrt d) and F_p with the chord-tangent law."""

from __future__ import annotations

from fractions import Fraction
from math import isqrt

from sympy import integer_nthroot

from ..arith.fields import QuadElem, rational_sqrt, squarefree_part
from ..arith.finite import GF, FFElem, is_prime
from ..arith.poly import Poly


class NotOnCurve(ValueError):
    pass


class BadPrime(ValueError):
    pass


class SingularInput(ValueError):
    pass


class EllPoint:
    """Affine point (x, y) or the point at infinity (x is None)."""

    __slots__ = ("x", "y")

    def __init__(self, x=None, y=None):
        self.x = x
        self.y = y

    @classmethod
    def infinity(cls) -> EllPoint:
        return cls()

    @property
    def is_infinity(self) -> bool:
        return self.x is None

    def __eq__(self, other) -> bool:
        if not isinstance(other, EllPoint):
            return NotImplemented
        if self.is_infinity or other.is_infinity:
            return self.is_infinity and other.is_infinity
        return self.x == other.x and self.y == other.y

    def __hash__(self) -> int:
        return hash(("inf",)) if self.is_infinity else hash((self.x, self.y))

    def __repr__(self) -> str:
        return "O" if self.is_infinity else f"({self.x}, {self.y})"


O = EllPoint()


def _zero_like(a):
    return a - a


class EllCurve:
    """y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6.

    Coefficients may be Fractions, QuadElems or FFElems of one field; ints
    are read as rationals unless ``field`` (a GF) is given.
    """

    def __init__(self, a, field: GF | None = None):
        a = tuple(a)
        if len(a) != 5:
            raise ValueError("need a1, a2, a3, a4, a6")
        if field is not None:
            a = tuple(field(v) for v in a)
        else:
            a = tuple(Fraction(v) if isinstance(v, int) else v for v in a)
        self.a = a
        self.field = field
        a1, a2, a3, a4, a6 = a
        self.b2 = a1 * a1 + 4 * a2
        self.b4 = 2 * a4 + a1 * a3
        self.b6 = a3 * a3 + 4 * a6
        self.b8 = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4
        b2, b4, b6, b8 = self.b2, self.b4, self.b6, self.b8
        self.c4 = b2 * b2 - 24 * b4
        self.c6 = -b2 ** 3 + 36 * b2 * b4 - 216 * b6
        self.disc = -b2 * b2 * b8 - 8 * b4 ** 3 - 27 * b6 * b6 + 9 * b2 * b4 * b6

    @property
    def a1(self):
        return self.a[0]

    @property
    def a2(self):
        return self.a[1]

    @property
    def a3(self):
        return self.a[2]

    @property
    def a4(self):
        return self.a[3]

    @property
    def a6(self):
        return self.a[4]

    @property
    def j(self):
        if not self.disc:
            raise SingularInput("singular curve has no j-invariant")
        return self.c4 ** 3 / self.disc

    def is_singular(self) -> bool:
        return not self.disc

    def __repr__(self) -> str:
        return f"EllCurve({[str(v) for v in self.a]})"

    def __eq__(self, other) -> bool:
        return isinstance(other, EllCurve) and self.a == other.a

    def __hash__(self) -> int:
        return hash(self.a)

    # -- points ------------------------------------------------------------------
    def lhs_minus_rhs(self, x, y):
        a1, a2, a3, a4, a6 = self.a
        return y * y + a1 * x * y + a3 * y - (x * x * x + a2 * x * x + a4 * x + a6)

    def contains(self, P: EllPoint) -> bool:
        return P.is_infinity or not self.lhs_minus_rhs(P.x, P.y)

    def point(self, x, y) -> EllPoint:
        P = EllPoint(x, y)
        if not self.contains(P):
            raise NotOnCurve(f"{P} is not on {self}")
        return P

    def neg(self, P: EllPoint) -> EllPoint:
        if P.is_infinity:
            return P
        return EllPoint(P.x, -P.y - self.a1 * P.x - self.a3)

    def add(self, P: EllPoint, Q: EllPoint, check: bool = False) -> EllPoint:
        if check:
            for R in (P, Q):
                if not self.contains(R):
                    raise NotOnCurve(f"{R} is not on {self}")
        if P.is_infinity:
            return Q
        if Q.is_infinity:
            return P
        a1, a2, a3, a4, a6 = self.a
        if P.x == Q.x:
            if not (P.y + Q.y + a1 * Q.x + a3):
                return O
            lam = (3 * P.x * P.x + 2 * a2 * P.x + a4 - a1 * P.y) / (2 * P.y + a1 * P.x + a3)
        else:
            lam = (Q.y - P.y) / (Q.x - P.x)
        nu = P.y - lam * P.x
        x3 = lam * lam + a1 * lam - a2 - P.x - Q.x
        y3 = -(lam + a1) * x3 - nu - a3
        return EllPoint(x3, y3)

    def mul(self, n: int, P: EllPoint) -> EllPoint:
        if n < 0:
            return self.mul(-n, self.neg(P))
        out, base = O, P
        while n:
            if n & 1:
                out = self.add(out, base)
            base = self.add(base, base)
            n >>= 1
        return out

    scalar_mul = mul

    # -- changes of field ------------------------------------------------------
    def reduce(self, p: int, sqrt_d: int | None = None) -> EllCurve:
        """Reduction at p (or at the degree-one prime where sqrt(d) -> sqrt_d)."""
        F = GF(p)
        red = [reduce_elem(v, F, sqrt_d) for v in self.a]
        E = EllCurve(red, F)
        if not E.disc:
            raise BadPrime(f"bad reduction at p = {p}")
        return E

    def reduce_point(self, P: EllPoint, p: int, sqrt_d: int | None = None) -> EllPoint:
        if P.is_infinity:
            return O
        F = GF(p)
        x, y = reduce_elem(P.x, F, sqrt_d), reduce_elem(P.y, F, sqrt_d)
        return EllPoint(x, y)

    def integral_model(self) -> tuple[EllCurve, Fraction]:
        """(E', u) with E' integral, a_i' = u^i a_i, over Q only."""
        u = 1
        while True:
            ai = [v * u ** w for v, w in zip(self.a, (1, 2, 3, 4, 6))]
            bad = [v for v in ai if Fraction(v).denominator != 1]
            if not bad:
                return EllCurve(ai), Fraction(u)
            den = 1
            for v in bad:
                den = den * Fraction(v).denominator
            u *= den

    def short_model(self) -> EllCurve:
        """y^2 = x^3 - 27 c4 x - 54 c6 (isomorphic over the base field)."""
        z = _zero_like(self.c4)
        return EllCurve((z, z, z, -27 * self.c4, -54 * self.c6), self.field)

    def twist(self, d: int) -> EllCurve:
        """Quadratic twist by d: c4 -> d^2 c4, c6 -> d^3 c6."""
        z = _zero_like(self.c4)
        return EllCurve((z, z, z, -27 * d * d * self.c4, -54 * d ** 3 * self.c6), self.field)

    def two_division_cubic(self) -> Poly:
        """4x^3 + b2 x^2 + 2 b4 x + b6, whose roots are x(P) for 2P = O."""
        return Poly([self.b6, 2 * self.b4, self.b2, 4])


def reduce_elem(v, F: GF, sqrt_d: int | None = None) -> FFElem:
    if isinstance(v, FFElem):
        return v
    if isinstance(v, QuadElem):
        if not v.b:
            return F(v.a)
        if sqrt_d is None:
            raise BadPrime("need the image of sqrt(d) to reduce a quadratic element")
        return F(v.a) + F(v.b) * F(sqrt_d)
    v = Fraction(v)
    if v.denominator % F.p == 0:
        raise BadPrime(f"{v} is not integral at {F.p}")
    return F(v)


# -- counting over F_p ---------------------------------------------------------------

def _raw_coeffs_mod(E: EllCurve, p: int) -> list[int]:
    F = GF(p)
    return [int(reduce_elem(v, F)) for v in E.a]


def count_points_fp(E: EllCurve, p: int | None = None, sqrt_d: int | None = None) -> int:
    """|E(F_p)| for E over F_p, or for the reduction of E at p."""
    if E.field is not None:
        F = E.field
        if F.k != 1:
            raise ValueError("use count_points_fq for extension fields")
        p = F.p
        a = [int(v) for v in E.a]
    else:
        if p is None:
            raise ValueError("need a prime")
        Er = E.reduce(p, sqrt_d)
        a = [int(v) for v in Er.a]
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    a1, a2, a3, a4, a6 = a
    if not EllCurve(a, GF(p)).disc:
        raise BadPrime(f"bad reduction at p = {p}")
    if p == 2:
        n = 1
        for x in range(2):
            for y in range(2):
                if (y * y + a1 * x * y + a3 * y - x ** 3 - a2 * x * x - a4 * x - a6) % 2 == 0:
                    n += 1
    else:
        # (2y + a1 x + a3)^2 = 4(x^3 + a2 x^2 + a4 x + a6) + (a1 x + a3)^2
        n = 1
        half = (p - 1) // 2
        for x in range(p):
            r = (4 * (x ** 3 + a2 * x * x + a4 * x + a6) + (a1 * x + a3) ** 2) % p
            if r == 0:
                n += 1
            elif pow(r, half, p) == 1:
                n += 2
    assert (n - p - 1) ** 2 <= 4 * p, "Hasse bound violated"
    return n


def count_points_fq(E: EllCurve, F: GF) -> int:
    """|E(F)| for E with coefficients reducible into F (odd characteristic)."""
    if F.p == 2:
        raise ValueError("characteristic 2 not supported for extension counts")
    a = [reduce_elem(v, GF(F.p)) if not isinstance(v, FFElem) else v for v in E.a]
    raw = [F.from_int(int(v)) for v in a]
    a1, a2, a3, a4, a6 = raw
    four = F.from_int(4)
    n = 1
    for x in F.elements():
        x2 = F.mul(x, x)
        rhs = F.add(F.add(F.mul(x2, x), F.mul(a2, x2)), F.add(F.mul(a4, x), a6))
        t = F.add(F.mul(a1, x), a3)
        r = F.add(F.mul(four, rhs), F.mul(t, t))
        n += 1 + F.chi(r)
    q = F.q
    assert (n - q - 1) ** 2 <= 4 * q, "Hasse bound violated"
    return n


def points_fp(E: EllCurve) -> list[EllPoint]:
    """All points of E over its prime field (small p)."""
    F = E.field
    if F is None:
        raise ValueError("curve is not over a finite field")
    out = [O]
    for x in F.all():
        for y in F.all():
            if not E.lhs_minus_rhs(x, y):
                out.append(EllPoint(x, y))
    return out


def point_order(E: EllCurve, P: EllPoint, bound: int | None = None) -> int | None:
    """Least n <= bound with nP = O, or None (infinite modulo the bound)."""
    if not E.contains(P):
        raise NotOnCurve(f"{P} is not on {E}")
    if bound is None:
        if E.field is not None:
            q = E.field.q
            bound = q + 1 + 2 * isqrt(q) + 2
        else:
            bound = 24
    Q = P
    for n in range(1, bound + 1):
        if Q.is_infinity:
            return n
        Q = E.add(Q, P)
    return None


def nontorsion_certificate(E: EllCurve, P: EllPoint, primes) -> dict | None:
    """Reduction orders at good odd primes; two different orders prove P has infinite order."""
    orders = {}
    for p in primes:
        if p == 2:
            continue
        try:
            Er = E.reduce(p)
            Pr = E.reduce_point(P, p)
        except BadPrime:
            continue
        orders[p] = point_order(Er, Pr)
        if len(set(orders.values())) > 1:
            return orders
    return None


# -- quartics and isomorphism ------------------------------------------------------

def quartic_invariants(q: Poly) -> tuple[Fraction, Fraction]:
    """(I, J) of a x^4 + b x^3 + c x^2 + d x + e."""
    e, d, c, b, a = (q[i] for i in range(5))
    I = 12 * a * e - 3 * b * d + c * c
    J = 72 * a * c * e + 9 * b * c * d - 27 * a * d * d - 27 * e * b * b - 2 * c ** 3
    return I, J


def jacobian_of_quartic(q: Poly) -> EllCurve:
    """Jacobian of y^2 = q(x): y^2 = x^3 - 27 I x - 27 J."""
    if q.degree != 4:
        raise SingularInput(f"need a quartic, got degree {q.degree}")
    if not q.is_squarefree():
        raise SingularInput("quartic is not squarefree")
    I, J = quartic_invariants(q)
    return EllCurve((0, 0, 0, -27 * I, -27 * J))


def _is_power(r: Fraction, k: int) -> bool:
    """Is r (nonzero) a k-th power in Q, k even."""
    if r <= 0:
        return False
    return all(integer_nthroot(v, k)[1] for v in (r.numerator, r.denominator))


def is_isomorphic(E1: EllCurve, E2: EllCurve) -> bool:
    """Isomorphic over Q: c4' = u^4 c4 and c6' = u^6 c6 for some rational u."""
    if E1.j != E2.j:
        return False
    if E1.c4 and E1.c6:
        r = (E2.c6 * E1.c4) / (E1.c6 * E2.c4)  # = u^2
        return rational_sqrt(r) is not None and E2.c4 == r * r * E1.c4
    if not E1.c4:
        return _is_power(E2.c6 / E1.c6, 6)
    return _is_power(E2.c4 / E1.c4, 4)


def twist_match(E: EllCurve, ref: EllCurve, max_d: int = 30) -> int | None:
    """Least |d| (d = 1 first) squarefree with E twisted by d isomorphic to ref."""
    if E.j != ref.j:
        return None
    cands = [1] + [s * d for d in range(2, max_d + 1) for s in (-1, 1)
                   if squarefree_part(d) == d] + [-1]
    cands = sorted(set(cands), key=lambda d: (abs(d), d < 0))
    for d in cands:
        if is_isomorphic(E.twist(d) if d != 1 else E, ref):
            return d
    return None
