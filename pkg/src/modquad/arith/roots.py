"""Root finding: rational roots, roots in Q(sqrt d), and root counts over F_{p^k}.

``roots_in_quad`` works p-adically.  After making the polynomial monic
with integer coefficients, a prime p that splits in Q(sqrt d) and keeps
the polynomial squarefree is picked, every root mod p is Hensel-lifted far
beyond the Cauchy bound, and each pair of lifted roots proposes a monic
quadratic factor by rational reconstruction.  Every proposal is then
checked by exact division.  Any root in Q(sqrt d) reduces to F_p at such a
prime, so the search is complete in every degree.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from math import gcd

from sympy import divisors

from .fields import QQ, QuadElem, RingMismatch, InvalidField, is_squarefree, rational_sqrt, squarefree_part
from .finite import GF, UnsupportedExtension, is_prime, primes_from
from .poly import Poly, content_and_primitive


class DegenerateInput(ValueError):
    pass


def _require_qq(f: Poly) -> None:
    if not isinstance(f, Poly) or f.ring != QQ:
        raise RingMismatch("expected a polynomial over QQ")
    if f.is_zero():
        raise DegenerateInput("zero polynomial")


def rational_roots(f: Poly) -> list[Fraction]:
    """Rational roots of f, repeated according to multiplicity.

    Uses the rational root theorem on the primitive integer form: every root
    is +-u/v with u | a_0 and v | a_n once the zero roots are stripped.
    """
    _require_qq(f)
    out: list[Fraction] = []
    g = f
    while g.degree > 0 and g[0] == 0:
        out.append(Fraction(0))
        g = Poly(g.c[1:], QQ)
    if g.degree <= 0:
        return out
    _, ints = content_and_primitive(g)
    cands = set()
    for u in divisors(abs(ints[0])):
        for v in divisors(abs(ints[-1])):
            if gcd(u, v) == 1:
                cands.add(Fraction(u, v))
                cands.add(Fraction(-u, v))
    for r in sorted(cands):
        lin = Poly([-r, 1], QQ)
        while g.degree > 0:
            q, rem = g.divmod(lin)
            if rem:
                break
            out.append(r)
            g = q
    return sorted(out)


# -- p-adic machinery ----------------------------------------------------------

def _monic_integer_form(f: Poly) -> tuple[list[int], int]:
    """g(y) = c^(n-1) f(y/c) / lc, monic in Z[y]; roots of f are roots of g over c."""
    _, a = content_and_primitive(f)
    n = len(a) - 1
    c = a[-1]
    g = [a[i] * c ** (n - 1 - i) for i in range(n)] + [1]
    return g, c


def _eval_mod(coeffs, x: int, m: int) -> int:
    acc = 0
    for c in reversed(coeffs):
        acc = (acc * x + c) % m
    return acc


def _deriv(coeffs):
    return [i * c for i, c in enumerate(coeffs)][1:]


def _squarefree_mod_p(coeffs, p: int) -> bool:
    F = GF(p)
    g = Poly([F(c) for c in coeffs], F)
    if g.degree != len(coeffs) - 1:
        return False
    return g.gcd(g.derivative()).degree == 0


def _choose_prime(g: list[int], c: int, d: int | None) -> int:
    for p in primes_from(3):
        if c % p == 0:
            continue
        if d is not None:
            if d % p == 0 or pow(d % p, (p - 1) // 2, p) != 1:
                continue
        if _squarefree_mod_p(g, p):
            return p
    raise AssertionError("unreachable")


def _hensel_roots(g: list[int], p: int, N: int) -> list[int]:
    dg = _deriv(g)
    roots = [r for r in range(p) if _eval_mod(g, r, p) == 0]
    out = []
    mod_final = p ** N
    for r in roots:
        m = p
        while m < mod_final:
            m = min(m * m, mod_final)
            fr = _eval_mod(g, r, m)
            dr = _eval_mod(dg, r, m)
            r = (r - fr * pow(dr, -1, m)) % m
        out.append(r)
    return out


def _sym(a: int, m: int) -> int:
    a %= m
    return a - m if a > m // 2 else a


def _int_divides(h: list[int], g: list[int]) -> bool:
    """Does monic integer h divide monic integer g exactly?"""
    r = list(g)
    dh = len(h) - 1
    for i in range(len(r) - 1, dh - 1, -1):
        c = r[i]
        if c:
            for j in range(dh + 1):
                r[i - dh + j] -= c * h[j]
    return not any(r[:dh])


def monic_quadratic_factors(f: Poly, d: int | None = None) -> tuple[list[Fraction], list[tuple[Fraction, Fraction]]]:
    """Rational roots and monic irreducible quadratic factors x^2 + b x + c of f over QQ.

    With ``d`` given, only quadratic factors splitting in Q(sqrt d) are
    guaranteed to be found (the prime is chosen split in that field); with
    ``d=None`` only the rational roots are complete.  Distinct factors only.
    """
    _require_qq(f)
    if f.degree < 1:
        return [], []
    sf = f.squarefree_part()
    zero_root = sf[0] == 0
    if zero_root:
        sf = Poly(sf.c[1:], QQ)
    if sf.degree < 1:
        return ([Fraction(0)] if zero_root else []), []
    g, c = _monic_integer_form(sf)
    n = len(g) - 1
    B = 1 + max(abs(a) for a in g[:-1])
    p = _choose_prime(g, c, d)
    bound = 2 * (B * B + 2 * B) + 1
    N = 1
    while p ** N <= bound:
        N += 1
    m = p ** N
    lifted = _hensel_roots(g, p, N)
    lin_roots = []
    for r in lifted:
        y = _sym(r, m)
        if abs(y) <= B and _int_divides([-y, 1], g):
            lin_roots.append(Fraction(y, c))
    quads = []
    if n >= 2:
        for r1, r2 in combinations(lifted, 2):
            t = _sym(r1 + r2, m)
            nn = _sym(r1 * r2, m)
            disc = t * t - 4 * nn
            if rational_sqrt(Fraction(disc)) is not None:
                continue
            if _int_divides([nn, -t, 1], g):
                # y^2 - t y + nn with y = c x  ->  x^2 - (t/c) x + nn/c^2
                quads.append((Fraction(-t, c), Fraction(nn, c * c)))
    if zero_root:
        lin_roots.append(Fraction(0))
    return sorted(lin_roots), sorted(quads)


def roots_in_quad(f: Poly, d: int) -> list[QuadElem]:
    """All roots of f in Q(sqrt d), with multiplicity, rational ones included."""
    if d == 1 or not is_squarefree(d):
        raise InvalidField(f"d={d} must be squarefree and different from 1")
    _require_qq(f)
    lin, quads = monic_quadratic_factors(f, d)
    cand: list[QuadElem] = [QuadElem(r, 0, d) for r in lin]
    for b, c in quads:
        disc = b * b - 4 * c
        m2 = disc / d
        m = rational_sqrt(m2)
        if m is None:
            continue
        cand.append(QuadElem(-b / 2, m / 2, d))
        cand.append(QuadElem(-b / 2, -m / 2, d))
    K = QuadElem(0, 0, d).ring
    fk = f.map(lambda a: K(a), K)
    out = []
    for r in cand:
        g = fk
        lin_k = Poly([-r, K.one], K)
        while g.degree > 0:
            q, rem = g.divmod(lin_k)
            if rem:
                break
            out.append(r)
            g = q
    return sorted(out, key=lambda z: (z.b != 0, z.a, z.b))


# -- finite fields ----------------------------------------------------------------

def count_roots_ext(f: Poly, p: int, k: int, multiplicity: bool = False) -> int:
    """Distinct roots of f (over F_p) lying in F_{p^k}: deg gcd(f, X^(p^k) - X).

    With ``multiplicity=True`` the roots are counted with multiplicity by
    running the same gcd on each factor of a squarefree decomposition.
    """
    if k not in (1, 2, 3):
        raise UnsupportedExtension(f"extension degree {k} not in 1..3")
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    F = GF(p)
    if f.ring != F:
        if f.ring == QQ:
            f = f.map(F, F)
        else:
            raise RingMismatch(f"expected a polynomial over {F.name}")
    if f.is_zero():
        raise DegenerateInput("zero polynomial")
    if not multiplicity:
        return _distinct_in_ext(f, p, k)
    total = 0
    for i, part in enumerate(_squarefree_decomposition(f), start=1):
        if part.degree > 0:
            total += i * _distinct_in_ext(part, p, k)
    return total


def _distinct_in_ext(f: Poly, p: int, k: int) -> int:
    if f.degree <= 0:
        return 0
    X = Poly.x(f.ring)
    h = X
    for _ in range(k):
        h = h.powmod(p, f)
    return f.gcd(h - X).degree


def _squarefree_decomposition(f: Poly) -> list[Poly]:
    """Yun-style decomposition f = prod P_i^i (P_i squarefree), characteristic aware."""
    p = f.ring.characteristic
    f = f.monic()
    out: list[Poly] = []
    df = f.derivative()
    if df.is_zero():
        # f = g(x^p) = g'(x)^p over F_p
        g = Poly([f.c[i] for i in range(0, len(f.c), p)], f.ring)
        sub = _squarefree_decomposition(g)
        res: list[Poly] = [Poly([1], f.ring)] * (p * len(sub))
        for i, part in enumerate(sub, start=1):
            res[p * i - 1] = part
        return res
    c = f.gcd(df)
    w = f // c
    i = 1
    while w.degree > 0:
        y = w.gcd(c)
        out.append(w // y)
        w = y
        c = c // y
        i += 1
    if c.degree > 0:
        # leftover is a p-th power
        g = Poly([c.c[j] for j in range(0, len(c.c), p)], f.ring)
        sub = _squarefree_decomposition(g)
        while len(out) < p * len(sub):
            out.append(Poly([1], f.ring))
        for j, part in enumerate(sub, start=1):
            if part.degree > 0:
                out[p * j - 1] = out[p * j - 1] * part
    return out


# Raw-int polynomial helpers over GF(p, k), used by the point counters.
# Polynomials are lists of field ints, low degree first.

def _trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _rmod(a, b, F):
    a = list(a)
    db = len(b) - 1
    inv = F.inv(b[-1])
    for i in range(len(a) - 1, db - 1, -1):
        c = a[i]
        if c:
            c = F.mul(c, inv)
            for j in range(db + 1):
                if b[j]:
                    a[i - db + j] = F.sub(a[i - db + j], F.mul(c, b[j]))
    return _trim(a[:db])


def _rmulmod(a, b, m, F):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] = F.add(out[i + j], F.mul(x, y))
    return _rmod(_trim(out), m, F)


def _rgcd_deg(a, b, F) -> int:
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        a, b = b, _rmod(a, b, F)
    return len(a) - 1


def count_roots_fq(coeffs: list[int], F: GF) -> int:
    """Distinct roots in F (a GF instance) of the polynomial with raw coefficients."""
    f = _trim(list(coeffs))
    n = len(f) - 1
    if n < 0:
        raise DegenerateInput("zero polynomial")
    if n == 0:
        return 0
    if n == 1:
        return 1
    if n == 2 and F.p != 2:
        a, b, c = f[2], f[1], f[0]
        disc = F.sub(F.mul(b, b), F.mul(4 % F.p, F.mul(a, c)))
        return 1 if disc == 0 else (2 if F.is_square(disc) else 0)
    # X^q mod f by square-and-multiply
    q = F.q
    result = [1]
    base = _rmod([0, 1], f, F) if n > 1 else []
    e = q
    while e:
        if e & 1:
            result = _rmulmod(result, base, f, F)
        base = _rmulmod(base, base, f, F)
        e >>= 1
    h = list(result) + [0] * max(0, 2 - len(result))
    h[1] = F.sub(h[1], 1)
    h = _trim(h)
    if not h:
        # f divides X^q - X, so it is squarefree and splits completely
        return n
    return _rgcd_deg(f, h, F)


def _reval(f, x, F):
    acc = 0
    for c in reversed(f):
        acc = F.add(F.mul(acc, x), c)
    return acc
