"""Ternary quadratic forms over Q and their local solubility.

A form is stored by its symmetric Gram matrix G (rationals), so that
q(v) = v^T G v.  Local solubility at p (or at infinity, written ``INF``)
is decided by diagonalizing and evaluating one Hilbert symbol.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .fields import QQ, RingMismatch, squarefree_part
from .finite import is_prime
from .poly import BiPoly

INF = "inf"


class DegenerateForm(ValueError):
    """The form has zero determinant; solubility is trivial and is flagged."""


@dataclass(frozen=True)
class TernaryForm:
    gram: tuple  # 3x3 tuple of Fractions

    @classmethod
    def from_coeffs(cls, xx=0, yy=0, zz=0, xy=0, xz=0, yz=0) -> TernaryForm:
        """q = xx*X^2 + yy*Y^2 + zz*Z^2 + xy*XY + xz*XZ + yz*YZ."""
        h = Fraction(1, 2)
        F = Fraction
        g = ((F(xx), F(xy) * h, F(xz) * h),
             (F(xy) * h, F(yy), F(yz) * h),
             (F(xz) * h, F(yz) * h, F(zz)))
        return cls(g)

    @classmethod
    def from_conic(cls, f: BiPoly) -> TernaryForm:
        """Homogenize an affine conic f(x, y) of total degree <= 2 with Z."""
        if f.ring != QQ:
            raise RingMismatch("conic must have rational coefficients")
        if f.total_degree > 2:
            raise ValueError("not a conic")
        c = f.coeff
        return cls.from_coeffs(c(2, 0), c(0, 2), c(0, 0), c(1, 1), c(1, 0), c(0, 1))

    @classmethod
    def diagonal(cls, a, b, c) -> TernaryForm:
        return cls.from_coeffs(a, b, c)

    def __call__(self, x, y, z):
        v = (x, y, z)
        return sum(self.gram[i][j] * v[i] * v[j] for i in range(3) for j in range(3))

    def det(self) -> Fraction:
        g = self.gram
        return (g[0][0] * (g[1][1] * g[2][2] - g[1][2] * g[2][1])
                - g[0][1] * (g[1][0] * g[2][2] - g[1][2] * g[2][0])
                + g[0][2] * (g[1][0] * g[2][1] - g[1][1] * g[2][0]))

    def integer_coeffs(self) -> tuple[int, int, int, int, int, int]:
        """(xx, yy, zz, xy, xz, yz) scaled to coprime integers."""
        from math import gcd, lcm
        g = self.gram
        cs = [g[0][0], g[1][1], g[2][2], 2 * g[0][1], 2 * g[0][2], 2 * g[1][2]]
        den = 1
        for a in cs:
            den = lcm(den, a.denominator)
        ints = [int(a * den) for a in cs]
        h = 0
        for a in ints:
            h = gcd(h, a)
        return tuple(a // h for a in ints)


def diagonalize(q: TernaryForm) -> tuple[Fraction, Fraction, Fraction]:
    """Rational a, b, c with q equivalent over Q to aX^2 + bY^2 + cZ^2."""
    if q.det() == 0:
        raise DegenerateForm("form has zero determinant")
    g = [list(r) for r in q.gram]
    n = 3
    diag = []
    for k in range(n):
        # make g[k][k] nonzero using a later basis vector
        if g[k][k] == 0:
            for j in range(k + 1, n):
                if g[j][j] != 0:
                    g[k], g[j] = g[j], g[k]
                    for r in g:
                        r[k], r[j] = r[j], r[k]
                    break
            else:
                for j in range(k + 1, n):
                    if g[k][j] != 0:
                        # e_k <- e_k + e_j gives q(e_k) = 2 g[k][j] (g[j][j] = 0)
                        for i in range(n):
                            g[k][i] += g[j][i]
                        for i in range(n):
                            g[i][k] += g[i][j]
                        break
        piv = g[k][k]
        assert piv != 0
        diag.append(piv)
        for i in range(k + 1, n):
            m = g[i][k] / piv
            if m:
                for j in range(k, n):
                    g[i][j] -= m * g[k][j]
                for j in range(k, n):
                    g[j][i] -= m * g[j][k]
    return tuple(diag)


def _vp(n: int, p: int) -> int:
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def _legendre(a: int, p: int) -> int:
    r = pow(a % p, (p - 1) // 2, p)
    return -1 if r == p - 1 else r


def _to_int_mod_squares(a) -> int:
    a = Fraction(a)
    if a == 0:
        raise ValueError("Hilbert symbol of zero")
    return a.numerator * a.denominator


def hilbert_symbol(a, b, p) -> int:
    """(a, b)_p for nonzero rationals a, b; p a prime or ``INF``."""
    a, b = _to_int_mod_squares(a), _to_int_mod_squares(b)
    if p == INF:
        return -1 if (a < 0 and b < 0) else 1
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    al, be = _vp(a, p), _vp(b, p)
    u, v = a // p ** al, b // p ** be
    if p != 2:
        eps = (p - 1) // 2
        s = (-1) ** (al * be * eps)
        if be % 2:
            s *= _legendre(u, p)
        if al % 2:
            s *= _legendre(v, p)
        return s

    def e(x):
        return ((x - 1) // 2) % 2

    def w(x):
        return ((x * x - 1) // 8) % 2

    return (-1) ** ((e(u) * e(v) + al * w(v) + be * w(u)) % 2)


def conic_local_soluble(q: TernaryForm, p) -> bool:
    """Does q = 0 have a nontrivial zero over Q_p (over R for ``INF``)?"""
    a, b, c = diagonalize(q)
    # a X^2 + b Y^2 + c Z^2 = 0  <=>  (-a/c) X^2 + (-b/c) Y^2 = Z^2
    return hilbert_symbol(-a * c, -b * c, p) == 1


def bad_places(q: TernaryForm) -> list:
    """Places where the diagonal form can fail to be soluble: 2, primes of abc, INF."""
    a, b, c = diagonalize(q)
    n = 2
    for x in (a, b, c):
        n *= abs(squarefree_part(_to_int_mod_squares(x)))
    ps = [2] + [p for p in _prime_divisors(n) if p != 2]
    return ps + [INF]


def _prime_divisors(n: int) -> list[int]:
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1
    if n > 1:
        out.append(n)
    return out


def conic_global_soluble(q: TernaryForm) -> bool:
    """Hasse principle: soluble over Q iff soluble at every place."""
    return all(conic_local_soluble(q, v) for v in bad_places(q))
