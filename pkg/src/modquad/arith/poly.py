"""Dense univariate and sparse bivariate polynomials over one coefficient ring.

Coefficients are stored low degree first.  Every polynomial remembers its
ring (``QQ``, a :class:`QuadField` or a :class:`GF`); mixing rings raises
:class:`RingMismatch` instead of silently coercing.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable

from .fields import QQ, RingMismatch


def _ring_of(c):
    from .fields import QuadElem
    from .finite import FFElem
    if isinstance(c, QuadElem):
        return c.ring
    if isinstance(c, FFElem):
        return c.field
    return QQ


class Poly:
    __slots__ = ("c", "ring")

    def __init__(self, coeffs: Iterable, ring=None):
        coeffs = list(coeffs)
        if ring is None:
            ring = QQ
            for c in coeffs:
                r = _ring_of(c)
                if r != QQ:
                    ring = r
                    break
        self.ring = ring
        cs = [ring(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.c = cs

    # -- constructors --------------------------------------------------------
    @classmethod
    def x(cls, ring=QQ) -> Poly:
        return cls([ring.zero, ring.one], ring)

    @classmethod
    def const(cls, a, ring=QQ) -> Poly:
        return cls([a], ring)

    @classmethod
    def monomial(cls, n: int, a=1, ring=QQ) -> Poly:
        return cls([ring.zero] * n + [ring(a)], ring)

    @classmethod
    def from_roots(cls, roots, ring=QQ) -> Poly:
        out = cls([1], ring)
        for r in roots:
            out = out * cls([-ring(r), ring.one], ring)
        return out

    # -- basic accessors -------------------------------------------------------
    @property
    def degree(self) -> int:
        return len(self.c) - 1

    def is_zero(self) -> bool:
        return not self.c

    def __bool__(self) -> bool:
        return bool(self.c)

    def lc(self):
        return self.c[-1] if self.c else self.ring.zero

    def __getitem__(self, i: int):
        if 0 <= i < len(self.c):
            return self.c[i]
        return self.ring.zero

    def coeffs(self) -> list:
        return list(self.c)

    def _coerce(self, other) -> Poly:
        if isinstance(other, Poly):
            if other.ring != self.ring:
                raise RingMismatch(f"{self.ring!r} vs {other.ring!r}")
            return other
        if isinstance(other, BiPoly):
            raise RingMismatch("univariate vs bivariate polynomial")
        return Poly([self.ring(other)], self.ring)

    # -- arithmetic -------------------------------------------------------------
    def __add__(self, other):
        o = self._coerce(other)
        n = max(len(self.c), len(o.c))
        z = self.ring.zero
        return Poly([(self.c[i] if i < len(self.c) else z) + (o.c[i] if i < len(o.c) else z)
                     for i in range(n)], self.ring)

    __radd__ = __add__

    def __neg__(self):
        return Poly([-a for a in self.c], self.ring)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        o = self._coerce(other)
        if not self.c or not o.c:
            return Poly([], self.ring)
        out = [self.ring.zero] * (len(self.c) + len(o.c) - 1)
        for i, a in enumerate(self.c):
            if not a:
                continue
            for j, b in enumerate(o.c):
                out[i + j] = out[i + j] + a * b
        return Poly(out, self.ring)

    __rmul__ = __mul__

    def scale(self, a) -> Poly:
        a = self.ring(a)
        return Poly([a * c for c in self.c], self.ring)

    def __pow__(self, n: int) -> Poly:
        if n < 0:
            raise ValueError("negative power of a polynomial")
        out = Poly([self.ring.one], self.ring)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def divmod(self, other) -> tuple[Poly, Poly]:
        o = self._coerce(other)
        if not o.c:
            raise ZeroDivisionError("polynomial division by zero")
        r = list(self.c)
        dq = len(r) - len(o.c)
        if dq < 0:
            return Poly([], self.ring), self
        inv_lc = self.ring.one / o.c[-1]
        q = [self.ring.zero] * (dq + 1)
        for i in range(dq, -1, -1):
            coef = r[i + len(o.c) - 1] * inv_lc
            q[i] = coef
            if coef:
                for j, b in enumerate(o.c):
                    r[i + j] = r[i + j] - coef * b
        return Poly(q, self.ring), Poly(r[:len(o.c) - 1], self.ring)

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def __mod__(self, other):
        return self.divmod(other)[1]

    def exact_div(self, other) -> Poly:
        q, r = self.divmod(other)
        if r:
            raise ArithmeticError("polynomial division is not exact")
        return q

    def divides(self, other) -> bool:
        """True if self | other."""
        return not (other % self)

    def monic(self) -> Poly:
        if not self.c:
            return self
        return self.scale(self.ring.one / self.c[-1])

    def derivative(self) -> Poly:
        return Poly([c * i for i, c in enumerate(self.c)][1:], self.ring)

    def __call__(self, x):
        acc = self.ring.zero if not isinstance(x, Poly) else Poly([], x.ring)
        for a in reversed(self.c):
            acc = acc * x + a
        return acc

    def compose(self, g: Poly) -> Poly:
        acc = Poly([], g.ring)
        for a in reversed(self.c):
            acc = acc * g + Poly([a], g.ring)
        return acc

    def powmod(self, n: int, m: Poly) -> Poly:
        out = Poly([self.ring.one], self.ring)
        base = self % m
        while n:
            if n & 1:
                out = (out * base) % m
            base = (base * base) % m
            n >>= 1
        return out

    def gcd(self, other) -> Poly:
        a, b = self, self._coerce(other)
        while b.c:
            a, b = b, a % b
        return a.monic()

    def xgcd(self, other) -> tuple[Poly, Poly, Poly]:
        """(g, s, t) with g = s*self + t*other and g monic."""
        o = self._coerce(other)
        one = Poly([self.ring.one], self.ring)
        zero = Poly([], self.ring)
        r0, r1, s0, s1, t0, t1 = self, o, one, zero, zero, one
        while r1.c:
            q, r = r0.divmod(r1)
            r0, r1 = r1, r
            s0, s1 = s1, s0 - q * s1
            t0, t1 = t1, t0 - q * t1
        if not r0.c:
            return r0, s0, t0
        inv = self.ring.one / r0.c[-1]
        return r0.scale(inv), s0.scale(inv), t0.scale(inv)

    def squarefree_part(self) -> Poly:
        """Product of the distinct irreducible factors (characteristic 0 or degree < p)."""
        g = self.gcd(self.derivative())
        return (self // g).monic()

    def is_squarefree(self) -> bool:
        return self.gcd(self.derivative()).degree == 0

    def map(self, fn, ring) -> Poly:
        return Poly([fn(c) for c in self.c], ring)

    def reverse(self, n: int | None = None) -> Poly:
        """x**n * self(1/x), n defaulting to the degree."""
        n = self.degree if n is None else n
        cs = list(self.c) + [self.ring.zero] * (n + 1 - len(self.c))
        return Poly(list(reversed(cs[: n + 1])), self.ring)

    # -- comparison / display ----------------------------------------------
    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self.ring == other.ring and self.c == other.c
        if isinstance(other, (int, Fraction)):
            return self.c == ([] if other == 0 else [other])
        return NotImplemented

    def __hash__(self) -> int:
        return hash((repr(self.ring), tuple(self.c)))

    def __repr__(self) -> str:
        return f"Poly({self})"

    def __str__(self) -> str:
        if not self.c:
            return "0"
        terms = []
        for i in range(len(self.c) - 1, -1, -1):
            a = self.c[i]
            if not a:
                continue
            mon = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            s = str(a)
            if mon:
                if s == "1":
                    s = ""
                elif s == "-1":
                    s = "-"
                elif " " in s:
                    s = f"({s})*"
                else:
                    s += "*"
            terms.append(f"{s}{mon}")
        return " + ".join(terms).replace("+ -", "- ")


def content_and_primitive(f: Poly) -> tuple[Fraction, list[int]]:
    """Write f over QQ as c * g with g a primitive integer polynomial (lc > 0)."""
    if f.ring != QQ:
        raise RingMismatch("content is only defined over QQ")
    if not f.c:
        raise ValueError("zero polynomial")
    from math import gcd, lcm
    den = 1
    for a in f.c:
        den = lcm(den, a.denominator)
    ints = [int(a * den) for a in f.c]
    g = 0
    for a in ints:
        g = gcd(g, a)
    if ints[-1] < 0:
        g = -g
    return Fraction(g, den), [a // g for a in ints]


class BiPoly:
    """Sparse polynomial sum c_ij x^i y^j over one coefficient ring."""

    __slots__ = ("t", "ring")

    def __init__(self, terms: dict | None = None, ring=QQ):
        self.ring = ring
        self.t = {}
        for (i, j), c in (terms or {}).items():
            c = ring(c)
            if c:
                self.t[(i, j)] = c

    @classmethod
    def x(cls, ring=QQ) -> BiPoly:
        return cls({(1, 0): 1}, ring)

    @classmethod
    def y(cls, ring=QQ) -> BiPoly:
        return cls({(0, 1): 1}, ring)

    @classmethod
    def const(cls, a, ring=QQ) -> BiPoly:
        return cls({(0, 0): a}, ring)

    @classmethod
    def from_poly_x(cls, f: Poly) -> BiPoly:
        return cls({(i, 0): c for i, c in enumerate(f.c)}, f.ring)

    @classmethod
    def from_poly_y(cls, f: Poly) -> BiPoly:
        return cls({(0, j): c for j, c in enumerate(f.c)}, f.ring)

    def _coerce(self, other) -> BiPoly:
        if isinstance(other, BiPoly):
            if other.ring != self.ring:
                raise RingMismatch(f"{self.ring!r} vs {other.ring!r}")
            return other
        if isinstance(other, Poly):
            raise RingMismatch("bivariate vs univariate polynomial")
        return BiPoly({(0, 0): self.ring(other)}, self.ring)

    def __add__(self, other):
        o = self._coerce(other)
        t = dict(self.t)
        for k, c in o.t.items():
            t[k] = t[k] + c if k in t else c
        return BiPoly(t, self.ring)

    __radd__ = __add__

    def __neg__(self):
        return BiPoly({k: -c for k, c in self.t.items()}, self.ring)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        o = self._coerce(other)
        t: dict = {}
        for (i1, j1), a in self.t.items():
            for (i2, j2), b in o.t.items():
                k = (i1 + i2, j1 + j2)
                t[k] = t[k] + a * b if k in t else a * b
        return BiPoly(t, self.ring)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> BiPoly:
        out = BiPoly({(0, 0): 1}, self.ring)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    @property
    def total_degree(self) -> int:
        return max((i + j for i, j in self.t), default=-1)

    def degree_in(self, var: int) -> int:
        return max((k[var] for k in self.t), default=-1)

    def is_zero(self) -> bool:
        return not self.t

    def __bool__(self) -> bool:
        return bool(self.t)

    def coeff(self, i: int, j: int):
        return self.t.get((i, j), self.ring.zero)

    def __call__(self, x, y):
        acc = None
        for (i, j), c in self.t.items():
            term = c * x ** i * y ** j if (i or j) else c
            acc = term if acc is None else acc + term
        if acc is None:
            return self.ring.zero
        return acc

    def substitute(self, x_expr: BiPoly, y_expr: BiPoly) -> BiPoly:
        """Polynomial substitution x -> x_expr, y -> y_expr."""
        out = BiPoly({}, self.ring)
        xp = {0: BiPoly({(0, 0): 1}, self.ring)}
        yp = {0: BiPoly({(0, 0): 1}, self.ring)}
        for (i, j), c in sorted(self.t.items()):
            while max(xp) < i:
                xp[max(xp) + 1] = xp[max(xp)] * x_expr
            while max(yp) < j:
                yp[max(yp) + 1] = yp[max(yp)] * y_expr
            out = out + xp[i] * yp[j] * c
        return out

    def as_poly_in_y(self) -> list[Poly]:
        """Coefficients (as polynomials in x) of y^0, y^1, ..."""
        n = self.degree_in(1)
        rows = [dict() for _ in range(n + 1)]
        for (i, j), c in self.t.items():
            rows[j][i] = c
        out = []
        for r in rows:
            m = max(r, default=-1)
            out.append(Poly([r.get(i, self.ring.zero) for i in range(m + 1)], self.ring))
        return out

    def as_poly_in_x(self) -> list[Poly]:
        n = self.degree_in(0)
        rows = [dict() for _ in range(n + 1)]
        for (i, j), c in self.t.items():
            rows[i][j] = c
        out = []
        for r in rows:
            m = max(r, default=-1)
            out.append(Poly([r.get(j, self.ring.zero) for j in range(m + 1)], self.ring))
        return out

    def partial(self, var: int) -> BiPoly:
        t = {}
        for (i, j), c in self.t.items():
            e = (i, j)[var]
            if e:
                k = (i - 1, j) if var == 0 else (i, j - 1)
                t[k] = c * e
        return BiPoly(t, self.ring)

    def map(self, fn, ring) -> BiPoly:
        return BiPoly({k: fn(c) for k, c in self.t.items()}, ring)

    def __eq__(self, other) -> bool:
        if isinstance(other, BiPoly):
            return self.ring == other.ring and self.t == other.t
        if isinstance(other, (int, Fraction)):
            return self.t == ({} if other == 0 else {(0, 0): other})
        return NotImplemented

    def __hash__(self) -> int:
        return hash(tuple(sorted(self.t.items())))

    def __repr__(self) -> str:
        return f"BiPoly({self})"

    def __str__(self) -> str:
        if not self.t:
            return "0"
        parts = []
        for (i, j), c in sorted(self.t.items(), key=lambda kv: (-(kv[0][0] + kv[0][1]), -kv[0][0])):
            mon = "*".join(m for m in (
                "" if i == 0 else ("x" if i == 1 else f"x^{i}"),
                "" if j == 0 else ("y" if j == 1 else f"y^{j}")) if m)
            s = str(c)
            if " " in s:
                s = f"({s})"
            parts.append(f"{s}*{mon}" if mon else s)
        return " + ".join(parts)


def poly_identity(lhs, rhs) -> bool:
    """Exact identity of two (uni- or bi-variate) polynomials after expansion.

    Both sides must live over the same coefficient ring; otherwise
    :class:`RingMismatch` is raised.
    """
    if type(lhs) is not type(rhs):
        raise RingMismatch("cannot compare univariate with bivariate polynomial")
    if lhs.ring != rhs.ring:
        raise RingMismatch(f"{lhs.ring!r} vs {rhs.ring!r}")
    return (lhs - rhs).is_zero()
