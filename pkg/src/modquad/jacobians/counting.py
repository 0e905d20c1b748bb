"""Point counts over F_{p^k} and the L-polynomial they determine.

Conventions: L(T) = prod (1 - alpha_i T), s_k = sum alpha_i^k = p^k + 1 - N_k,
so L(1) = |Jac(F_p)| and for g = 1, L(T) = 1 - a T + p T^2 with a = p + 1 - N_1.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from ..arith.finite import GF, is_prime
from ..arith.poly import BiPoly, Poly
from ..arith.roots import count_roots_fq
from ..catalogue.models import ArityError, CurveModel, is_smooth_plane


class BadPrime(ValueError):
    pass


@dataclass(frozen=True)
class PointCounts:
    label: str
    p: int
    g: int
    counts: tuple  # N_1, ..., N_m

    def __post_init__(self):
        for k, n in enumerate(self.counts, start=1):
            if not weil_ok(n, self.p ** k, self.g):
                raise AssertionError(f"{self.label}: N_{k} = {n} violates the Weil bound at p = {self.p}")


def weil_ok(n: int, q: int, g: int) -> bool:
    # |n - q - 1| <= 2 g sqrt(q), squared to stay in integers
    d = abs(n - q - 1)
    return d * d <= 4 * g * g * q


def _red(c, p: int) -> int:
    c = Fraction(c)
    if c.denominator % p == 0:
        raise BadPrime(f"coefficient {c} has p = {p} in its denominator")
    return c.numerator * pow(c.denominator, -1, p) % p


def _raw_coeffs(f: Poly, p: int) -> list[int]:
    return [_red(c, p) for c in f.c]


def _horner(cs, x, F):
    acc = 0
    for c in reversed(cs):
        acc = F.add(F.mul(acc, x), c)
    return acc


def check_good_prime(M: CurveModel, p: int) -> None:
    """Raise BadPrime naming the obstruction to good reduction at p."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if M.kind in ("Hyperelliptic", "WeightedQuartic"):
        if p == 2:
            raise BadPrime("p = 2: y^2 = f(x) models are never smooth in characteristic 2")
        f = M.f
        if _red(f.lc(), p) == 0:
            raise BadPrime(f"p = {p} divides the leading coefficient {f.lc()}")
        fp = Poly(_raw_coeffs(f, p), GF(p))
        if fp.gcd(fp.derivative()).degree > 0:
            raise BadPrime(f"f has a repeated root mod {p}")
    elif M.kind == "PlaneQuartic":
        for c in M.equation.t.values():
            _red(c, p)
        if p == 2:
            raise BadPrime("p = 2 divides the degree, smoothness test not applicable")
        if not is_smooth_plane(M.equation, p):
            raise BadPrime(f"the reduction mod {p} is singular")
    else:
        raise ValueError(f"count_curve does not handle kind {M.kind}")


def _count_double_cover(f: Poly, F: GF) -> int:
    p = F.p
    cs = [F.from_int(c) for c in _raw_coeffs(f, p)]
    total = 0
    for x in F.elements():
        total += 1 + F.chi(_horner(cs, x, F))
    lc = cs[-1]
    if f.degree % 2:
        total += 1
    else:
        total += 1 + F.chi(lc)
    return total


def _count_plane(Fxy: BiPoly, F: GF) -> int:
    p = F.p
    d = Fxy.total_degree
    ny = Fxy.degree_in(1)
    # raw coefficient table: coef[j][i] is the coefficient of x^i y^j
    coef = [[0] * (Fxy.degree_in(0) + 1) for _ in range(ny + 1)]
    for (i, j), c in Fxy.t.items():
        coef[j][i] = _red(c, p)
    total = 0
    for x in F.elements():
        ys = [_horner(coef[j], x, F) for j in range(ny + 1)]
        while ys and ys[-1] == 0:
            ys.pop()
        if not ys:
            raise BadPrime("a vertical line lies on the curve")
        total += count_roots_fq(ys, F)
    # line at infinity: top-degree part F_d(x, y) = 0
    top = [0] * (d + 1)  # top[j] = coeff of x^(d-j) y^j
    for (i, j), c in Fxy.t.items():
        if i + j == d:
            top[j] = _red(c, p)
    # points (1 : y : 0)
    total += count_roots_fq(top, F)
    # (0 : 1 : 0) lies on the curve iff the y^d coefficient vanishes
    if top[d] == 0:
        total += 1
    return total


def count_curve(M: CurveModel, p: int, k: int = 1) -> int:
    """|C(F_{p^k})| for the smooth projective curve of the model."""
    g = M.genus
    if k < 1 or k > max(g, 1) or k > 3:
        raise ArityError(f"extension degree {k} outside 1..min(g, 3)")
    check_good_prime(M, p)
    F = GF(p, k)
    if M.kind in ("Hyperelliptic", "WeightedQuartic"):
        n = _count_double_cover(M.f, F)
    else:
        n = _count_plane(M.equation, F)
    if not weil_ok(n, F.q, g):
        raise AssertionError(f"Weil bound violated: N = {n}, q = {F.q}, g = {g}")
    return n


def point_counts(M: CurveModel, p: int) -> PointCounts:
    g = M.genus
    return PointCounts(M.label, p, g, tuple(count_curve(M, p, k) for k in range(1, g + 1)))


@dataclass(frozen=True)
class LPolynomial:
    p: int
    coeffs: tuple  # c_0 .. c_2g, ints

    @property
    def g(self) -> int:
        return (len(self.coeffs) - 1) // 2

    def __call__(self, t):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc

    @property
    def jacobian_order(self) -> int:
        return self(1)

    def check(self, tol: float = 1e-6) -> None:
        p, c, g = self.p, self.coeffs, self.g
        if c[0] != 1:
            raise AssertionError("c_0 != 1")
        for i in range(g + 1):
            if c[2 * g - i] != p ** (g - i) * c[i]:
                raise AssertionError(f"functional equation fails at i = {i}")
        if self(1) <= 0:
            raise AssertionError("L(1) <= 0")
        # reciprocal roots of L are the roots of T^2g L(1/T)
        roots = np.roots([float(x) for x in c])
        if np.max(np.abs(np.abs(roots) - np.sqrt(p))) > tol * max(1.0, np.sqrt(p)):
            raise AssertionError("reciprocal roots off the circle |z| = sqrt(p)")

    def counts(self, n: int) -> list[int]:
        """N_1..N_n recovered from L (inverse of lpoly_from_counts)."""
        g, p, c = self.g, self.p, list(self.coeffs)
        s = [0] * (n + 1)
        for k in range(1, n + 1):
            acc = -k * (c[k] if k <= 2 * g else 0)
            for i in range(1, k):
                acc -= s[i] * (c[k - i] if k - i <= 2 * g else 0)
            s[k] = acc
        return [p ** k + 1 - s[k] for k in range(1, n + 1)]

    def __str__(self):
        terms = [f"{c}*T^{i}" if i else str(c) for i, c in enumerate(self.coeffs) if c]
        return " + ".join(terms)


def lpoly_from_counts(counts, p: int | None = None, g: int | None = None) -> LPolynomial:
    """L-polynomial from N_1..N_g via Newton's identities and the functional equation."""
    if isinstance(counts, PointCounts):
        p = counts.p if p is None else p
        g = counts.g if g is None else g
        counts = counts.counts
    if p is None or g is None:
        raise ArityError("p and g are required with a bare count list")
    counts = list(counts)
    if len(counts) < g:
        raise ArityError(f"need N_1..N_{g}, got {len(counts)} counts")
    s = [0] + [p ** k + 1 - counts[k - 1] for k in range(1, g + 1)]
    c = [1] + [0] * (2 * g)
    for k in range(1, g + 1):
        acc = 0
        for i in range(1, k + 1):
            acc += s[i] * c[k - i]
        if acc % k:
            raise AssertionError("Newton identity gave a non-integer coefficient")
        c[k] = -acc // k
    for i in range(g):
        c[2 * g - i] = p ** (g - i) * c[i]
    L = LPolynomial(p, tuple(c))
    L.check()
    if counts[0] != p + 1 + c[1]:
        raise AssertionError("N_1 = p + 1 - a_1 inconsistent")
    return L


def jacobian_order(M: CurveModel, p: int) -> int:
    return lpoly_from_counts(point_counts(M, p)).jacobian_order


def lpoly(M: CurveModel, p: int) -> LPolynomial:
    return lpoly_from_counts(point_counts(M, p))
