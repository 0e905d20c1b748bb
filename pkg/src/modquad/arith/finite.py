"""Finite fields F_{p^k} for k <= 3, backed by discrete-log tables.

An element of F_q is stored as an integer in ``range(q)`` whose base-p
digits are its coordinates in the power basis 1, t, t^2 of
F_p[t]/(modulus).  Multiplication goes through exp/log tables built once
per field; addition is digit-wise.  The raw-integer methods on :class:`GF`
(``add``, ``mul``, ...) are what the point counters use in their inner
loops; :class:`FFElem` is the value-semantics wrapper everything else uses.
"""

from __future__ import annotations

from functools import lru_cache

from .fields import RingMismatch


class UnsupportedExtension(ValueError):
    pass


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def primes_from(start: int):
    n = max(2, start)
    while True:
        if is_prime(n):
            yield n
        n += 1


def _has_root_mod_p(coeffs: tuple[int, ...], p: int) -> bool:
    """coeffs low->high, monic."""
    for x in range(p):
        acc = 0
        for c in reversed(coeffs):
            acc = (acc * x + c) % p
        if acc == 0:
            return True
    return False


@lru_cache(maxsize=None)
def least_irreducible(p: int, k: int) -> tuple[int, ...]:
    """Least monic irreducible of degree k over F_p (low->high coefficients).

    Candidates are ordered by the integer sum(c_i p^i) of their non-leading
    coefficients.  For k <= 3 irreducible means no root in F_p.
    """
    if k == 1:
        return (0, 1)
    if k not in (2, 3):
        raise UnsupportedExtension(f"extension degree {k} not in 1..3")
    for n in range(p ** k):
        low = tuple((n // p ** i) % p for i in range(k))
        cand = low + (1,)
        if cand[0] != 0 and not _has_root_mod_p(cand, p):
            return cand
    raise AssertionError("no irreducible polynomial found")


class GF:
    """The field with p**k elements, k in {1, 2, 3}."""

    _cache: dict[tuple[int, int], GF] = {}

    def __new__(cls, p: int, k: int = 1):
        key = (p, k)
        if key in cls._cache:
            return cls._cache[key]
        if k not in (1, 2, 3):
            raise UnsupportedExtension(f"extension degree {k} not in 1..3")
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        self = super().__new__(cls)
        self.p = p
        self.k = k
        self.q = p ** k
        self.modulus = least_irreducible(p, k)
        self.characteristic = p
        self._build_tables()
        self.name = f"GF({p}^{k})" if k > 1 else f"GF({p})"
        self.zero = FFElem(self, 0)
        self.one = FFElem(self, 1)
        cls._cache[key] = self
        return self

    def __getnewargs__(self):
        return (self.p, self.k)

    # -- table construction ------------------------------------------------
    def _digits(self, a: int) -> list[int]:
        p = self.p
        return [(a // p ** i) % p for i in range(self.k)]

    def _from_digits(self, ds) -> int:
        p = self.p
        out = 0
        for i in reversed(range(self.k)):
            out = out * p + ds[i] % p
        return out

    def _slow_mul(self, a: int, b: int) -> int:
        p, k, m = self.p, self.k, self.modulus
        da, db = self._digits(a), self._digits(b)
        prod = [0] * (2 * k - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    prod[i + j] = (prod[i + j] + x * y) % p
        for i in range(2 * k - 2, k - 1, -1):
            c = prod[i]
            if c:
                for j in range(k + 1):
                    prod[i - k + j] = (prod[i - k + j] - c * m[j]) % p
        return self._from_digits(prod[:k])

    def _build_tables(self) -> None:
        q = self.q
        if self.k == 1:
            g = _primitive_root(self.p)
            exp = [1] * (q - 1)
            for i in range(1, q - 1):
                exp[i] = exp[i - 1] * g % q
        else:
            exp = None
            for g in range(2, q):
                cand = [1] * (q - 1)
                x = 1
                ok = True
                for i in range(1, q - 1):
                    x = self._slow_mul(x, g)
                    if x == 1:
                        ok = False
                        break
                    cand[i] = x
                if ok:
                    exp = cand
                    break
            assert exp is not None
        log = [-1] * q
        for i, v in enumerate(exp):
            log[v] = i
        self._exp = exp
        self._log = log
        self.generator = exp[1] if q > 2 else 1

    # -- raw integer arithmetic ---------------------------------------------
    def add(self, a: int, b: int) -> int:
        p = self.p
        if self.k == 1:
            return (a + b) % p
        out = 0
        scale = 1
        while a or b:
            out += ((a % p + b % p) % p) * scale
            a //= p
            b //= p
            scale *= p
        return out

    def neg(self, a: int) -> int:
        p = self.p
        if self.k == 1:
            return (-a) % p
        out = 0
        scale = 1
        while a:
            out += ((-(a % p)) % p) * scale
            a //= p
            scale *= p
        return out

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        if self.k == 1:
            return a * b % self.p
        return self._exp[(self._log[a] + self._log[b]) % (self.q - 1)]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of 0 in finite field")
        return self._exp[(-self._log[a]) % (self.q - 1)]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, n: int) -> int:
        if a == 0:
            if n < 0:
                raise ZeroDivisionError("0 to a negative power")
            return 1 if n == 0 else 0
        return self._exp[(self._log[a] * n) % (self.q - 1)]

    def is_square(self, a: int) -> bool:
        return a == 0 or self.p == 2 or self._log[a] % 2 == 0

    def chi(self, a: int) -> int:
        """Quadratic character (odd q)."""
        if a == 0:
            return 0
        return 1 if self._log[a] % 2 == 0 else -1

    def sqrt(self, a: int) -> int | None:
        if a == 0:
            return 0
        if self.p == 2:
            return self.pow(a, self.q // 2)
        la = self._log[a]
        if la % 2:
            return None
        return self._exp[la // 2]

    def from_int(self, n: int) -> int:
        return n % self.p

    def frobenius(self, a: int) -> int:
        return self.pow(a, self.p)

    def elements(self) -> range:
        return range(self.q)

    def prime_subfield(self) -> list[int]:
        return list(range(self.p))

    # -- element wrappers -----------------------------------------------------
    def __call__(self, x) -> FFElem:
        if isinstance(x, FFElem):
            if x.field is not self:
                raise RingMismatch(f"element of {x.field.name} used in {self.name}")
            return x
        if isinstance(x, int):
            return FFElem(self, x % self.p)
        if isinstance(x, (list, tuple)):
            return FFElem(self, self._from_digits(list(x) + [0] * (self.k - len(x))))
        from fractions import Fraction
        if isinstance(x, Fraction):
            return FFElem(self, x.numerator % self.p) / FFElem(self, x.denominator % self.p)
        raise RingMismatch(f"cannot coerce {x!r} into {self.name}")

    def elem(self, v: int) -> FFElem:
        return FFElem(self, v)

    def gen(self) -> FFElem:
        """The class of t in F_p[t]/(modulus)."""
        return FFElem(self, self.p if self.k > 1 else 0)

    def all(self):
        return [FFElem(self, v) for v in range(self.q)]

    def __repr__(self) -> str:
        return f"GF({self.p}, {self.k})"

    def __reduce__(self):
        return (GF, (self.p, self.k))


def _primitive_root(p: int) -> int:
    if p == 2:
        return 1
    n = p - 1
    fs = set()
    m = n
    f = 2
    while f * f <= m:
        while m % f == 0:
            fs.add(f)
            m //= f
        f += 1
    if m > 1:
        fs.add(m)
    for g in range(2, p):
        if all(pow(g, n // f, p) != 1 for f in fs):
            return g
    raise AssertionError


class FFElem:
    __slots__ = ("field", "v")

    def __init__(self, field: GF, v: int):
        self.field = field
        self.v = v

    @property
    def ring(self) -> GF:
        return self.field

    def _lift(self, other):
        if isinstance(other, FFElem):
            if other.field is not self.field:
                raise RingMismatch(f"{self.field.name} vs {other.field.name}")
            return other.v
        if isinstance(other, int):
            return other % self.field.p
        return None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return FFElem(self.field, self.field.add(self.v, o))

    __radd__ = __add__

    def __neg__(self):
        return FFElem(self.field, self.field.neg(self.v))

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return FFElem(self.field, self.field.sub(self.v, o))

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return FFElem(self.field, self.field.sub(o, self.v))

    def __mul__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return FFElem(self.field, self.field.mul(self.v, o))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return FFElem(self.field, self.field.div(self.v, o))

    def __rtruediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return FFElem(self.field, self.field.div(o, self.v))

    def inverse(self) -> FFElem:
        return FFElem(self.field, self.field.inv(self.v))

    def __pow__(self, n: int):
        return FFElem(self.field, self.field.pow(self.v, n))

    def __eq__(self, other) -> bool:
        if isinstance(other, FFElem):
            return self.field is other.field and self.v == other.v
        if isinstance(other, int):
            return self.v == other % self.field.p
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.field.p, self.field.k, self.v))

    def __bool__(self) -> bool:
        return self.v != 0

    def is_square(self) -> bool:
        return self.field.is_square(self.v)

    def sqrt(self) -> FFElem | None:
        r = self.field.sqrt(self.v)
        return None if r is None else FFElem(self.field, r)

    def frobenius(self) -> FFElem:
        return FFElem(self.field, self.field.frobenius(self.v))

    def in_prime_field(self) -> bool:
        return self.v < self.field.p

    def __int__(self) -> int:
        if self.v >= self.field.p:
            raise ValueError("element not in the prime field")
        return self.v

    def __repr__(self) -> str:
        if self.field.k == 1:
            return f"{self.v}"
        ds = self.field._digits(self.v)
        terms = [f"{c}*t^{i}" if i else f"{c}" for i, c in enumerate(ds) if c]
        return " + ".join(terms) or "0"


def enumerate_field(p: int, k: int):
    """All elements of F_{p^k} as FFElem (handy for brute-force oracles)."""
    F = GF(p, k)
    return [FFElem(F, v) for v in range(F.q)]

