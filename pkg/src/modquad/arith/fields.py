"""Coefficient rings: the rationals and quadratic fields Q(sqrt d).

Rationals are plain :class:`fractions.Fraction` values.  Ring objects
(:data:`QQ`, :class:`QuadField`) carry the zero/one/coercion hooks that
:class:`~modquad.arith.poly.Poly` needs to stay ring-homogeneous.
"""

from __future__ import annotations

from fractions import Fraction
from math import isqrt


class RingMismatch(TypeError):
    """Operands from two different coefficient rings were combined."""


class InvalidField(ValueError):
    pass


def is_squarefree(n: int) -> bool:
    if n == 0:
        return False
    n = abs(n)
    f = 2
    while f * f <= n:
        if n % (f * f) == 0:
            return False
        f += 1
    return True


def squarefree_part(n: int) -> int:
    """Signed squarefree kernel: n = squarefree_part(n) * m**2."""
    if n == 0:
        raise ValueError("zero has no squarefree part")
    sign = -1 if n < 0 else 1
    n = abs(n)
    out = 1
    f = 2
    while f * f <= n:
        e = 0
        while n % f == 0:
            n //= f
            e += 1
        if e % 2:
            out *= f
        f += 1
    return sign * out * n


def rational_sqrt(x: Fraction) -> Fraction | None:
    x = Fraction(x)
    if x < 0:
        return None
    n, d = x.numerator, x.denominator
    rn, rd = isqrt(n), isqrt(d)
    if rn * rn == n and rd * rd == d:
        return Fraction(rn, rd)
    return None


class RationalField:
    name = "QQ"
    zero = Fraction(0)
    one = Fraction(1)
    characteristic = 0

    def __call__(self, x) -> Fraction:
        if isinstance(x, Fraction):
            return x
        if isinstance(x, int):
            return Fraction(x)
        if isinstance(x, str):
            return Fraction(x.replace(" ", ""))
        if isinstance(x, QuadElem) and x.b == 0:
            return x.a
        raise RingMismatch(f"cannot coerce {x!r} into QQ")

    def __repr__(self) -> str:
        return "QQ"

    def __eq__(self, other) -> bool:
        return isinstance(other, RationalField)

    def __hash__(self) -> int:
        return hash("QQ")


QQ = RationalField()


class QuadField:
    """The field Q(sqrt d) for a squarefree integer d != 0, 1."""

    characteristic = 0

    def __init__(self, d: int):
        if d == 1 or not is_squarefree(d):
            raise InvalidField(f"d={d} must be squarefree and different from 1")
        self.d = d
        self.name = f"Q(sqrt({d}))"
        self.zero = QuadElem(0, 0, d)
        self.one = QuadElem(1, 0, d)
        self.sqrt_d = QuadElem(0, 1, d)

    def __call__(self, x, y=0) -> QuadElem:
        if isinstance(x, QuadElem):
            if x.d != self.d:
                raise RingMismatch(f"element of Q(sqrt({x.d})) used in {self.name}")
            return x
        return QuadElem(x, y, self.d)

    def __repr__(self) -> str:
        return f"QuadField({self.d})"

    def __eq__(self, other) -> bool:
        return isinstance(other, QuadField) and other.d == self.d

    def __hash__(self) -> int:
        return hash(("quad", self.d))


def _frac(x) -> Fraction:
    if isinstance(x, str):
        return Fraction(x.replace(" ", ""))
    return Fraction(x)


class QuadElem:
    """a + b*sqrt(d) with rational a, b."""

    __slots__ = ("a", "b", "d")

    def __init__(self, a, b, d: int):
        self.a = _frac(a)
        self.b = _frac(b)
        self.d = d

    @property
    def ring(self) -> QuadField:
        return QuadField(self.d)

    def _lift(self, other) -> QuadElem | None:
        if isinstance(other, QuadElem):
            if other.d != self.d:
                raise RingMismatch(f"Q(sqrt({self.d})) vs Q(sqrt({other.d}))")
            return other
        if isinstance(other, (int, Fraction)):
            return QuadElem(other, 0, self.d)
        return None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return QuadElem(self.a + o.a, self.b + o.b, self.d)

    __radd__ = __add__

    def __neg__(self):
        return QuadElem(-self.a, -self.b, self.d)

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return QuadElem(self.a - o.a, self.b - o.b, self.d)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return QuadElem(self.a * o.a + self.d * self.b * o.b,
                        self.a * o.b + self.b * o.a, self.d)

    __rmul__ = __mul__

    def norm(self) -> Fraction:
        return self.a * self.a - self.d * self.b * self.b

    def trace(self) -> Fraction:
        return 2 * self.a

    def conj(self) -> QuadElem:
        return QuadElem(self.a, -self.b, self.d)

    def inverse(self) -> QuadElem:
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("inverse of zero in quadratic field")
        return QuadElem(self.a / n, -self.b / n, self.d)

    def __truediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        out = QuadElem(1, 0, self.d)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other) -> bool:
        if isinstance(other, QuadElem):
            return self.d == other.d and self.a == other.a and self.b == other.b
        if isinstance(other, (int, Fraction)):
            return self.b == 0 and self.a == other
        return NotImplemented

    def __hash__(self) -> int:
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b, self.d))

    def __bool__(self) -> bool:
        return self.a != 0 or self.b != 0

    def is_rational(self) -> bool:
        return self.b == 0

    def sqrt(self) -> QuadElem | None:
        """A square root inside Q(sqrt d), or None when there is none."""
        if self.b == 0:
            r = rational_sqrt(self.a)
            if r is not None:
                return QuadElem(r, 0, self.d)
            r = rational_sqrt(self.a / self.d)
            if r is not None:
                return QuadElem(0, r, self.d)
            return None
        # (u + v s)^2 = u^2 + d v^2 + 2uv s, so u^2 - d v^2 = +-sqrt(norm)
        n = rational_sqrt(self.norm())
        if n is None:
            return None
        for s in (n, -n):
            u = rational_sqrt((self.a + s) / 2)
            if u is None or u == 0:
                continue
            v = self.b / (2 * u)
            cand = QuadElem(u, v, self.d)
            if cand * cand == self:
                return cand
        return None

    def __repr__(self) -> str:
        return f"QuadElem({self.a}, {self.b}, {self.d})"

    def __str__(self) -> str:
        if self.b == 0:
            return str(self.a)
        s = f"sqrt({self.d})"
        b = "" if self.b == 1 else ("-" if self.b == -1 else f"{self.b}*")
        if self.a == 0:
            return f"{b}{s}"
        sign = "+" if self.b > 0 else "-"
        bb = abs(self.b)
        bstr = "" if bb == 1 else f"{bb}*"
        return f"{self.a} {sign} {bstr}{s}"

