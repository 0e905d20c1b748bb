"""Brute-force oracles, written independently of the routes they check.

* roots of a polynomial in F_{p^k}: evaluate at every field element;
* |Jac(F_p)| of a genus 2 curve: enumerate all Mumford pairs (a, b) with
  a monic of degree <= 2, deg b < deg a and a | b^2 - H on a monic quintic model;
* local solubility of a ternary form: depth-first lifting of primitive
  solutions modulo p^k until one satisfies Hensel's criterion (soluble) or
  none survive (insoluble); at infinity, the signature.
"""

from __future__ import annotations

from itertools import product

import numpy as np

from ..arith.finite import GF, FFElem, enumerate_field
from ..arith.poly import Poly
from ..jacobians.counting import lpoly_from_counts


def brute_root_count(coeffs, p: int, k: int) -> int:
    """Distinct roots in F_{p^k} of sum coeffs[i] x^i (integer coefficients)."""
    n = 0
    for x in enumerate_field(p, k):
        acc = x.field.zero
        for c in reversed(coeffs):
            acc = acc * x + c
        n += not acc
    return n


def random_poly_mod_p(rng, p: int, max_degree: int = 6) -> list[int]:
    d = rng.randint(1, max_degree)
    cs = [rng.randrange(p) for _ in range(d)] + [rng.randrange(1, p)]
    return cs


# -- genus 2 -----------------------------------------------------------------------

def _pmod(a: list, m: list, p: int) -> list:
    """a mod m over F_p, m monic; coefficient lists low to high."""
    a = [c % p for c in a]
    dm = len(m) - 1
    for i in range(len(a) - 1, dm - 1, -1):
        c = a[i]
        if c:
            for j in range(dm + 1):
                a[i - dm + j] = (a[i - dm + j] - c * m[j]) % p
    return a[:dm]


def _pmul(a: list, b: list, p: int) -> list:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] = (out[i + j] + x * y) % p
    return out


def mumford_count(H: list, p: int) -> int:
    """Number of reduced Mumford pairs on y^2 = H(x) (H monic quintic over F_p)."""
    n = 1  # a = 1
    for deg in (1, 2):
        for low in product(range(p), repeat=deg):
            a = list(low) + [1]
            for b in product(range(p), repeat=deg):
                b2 = _pmul(list(b), list(b), p)
                diff = [((b2[i] if i < len(b2) else 0) - H[i]) % p for i in range(len(H))]
                if not any(_pmod(diff, a, p)):
                    n += 1
    return n


def _squarefree_mod_p(cs: list, p: int) -> bool:
    F = GF(p)
    f = Poly(cs, F)
    return f.gcd(f.derivative()).degree == 0


def random_genus2_with_root(rng, p: int) -> tuple[list, int]:
    """Random squarefree sextic over F_p with a root r in F_p (coefficients low to high)."""
    while True:
        r = rng.randrange(p)
        g = [rng.randrange(p) for _ in range(5)] + [rng.randrange(1, p)]
        f = _pmul([-r % p, 1], g, p)
        if _squarefree_mod_p(f, p):
            return f, r


def double_cover_count(cs: list, p: int, k: int) -> int:
    """|C(F_{p^k})| for y^2 = f, f squarefree of degree 6, by direct enumeration of y."""
    F = GF(p, k)
    elems = enumerate_field(p, k)
    squares = {}
    for y in elems:
        squares[(y * y).v] = squares.get((y * y).v, 0) + 1
    n = 0
    for x in elems:
        acc = F.zero
        for c in reversed(cs):
            acc = acc * x + c
        n += squares.get(acc.v, 0)
    lc = F.zero + cs[-1]
    n += squares.get(lc.v, 0)  # points at infinity: 1 + chi(lc)
    return n


def quintic_model_mod_p(cs: list, r: int, p: int) -> list:
    """Monic quintic H with y^2 = f isomorphic to Y^2 = H; f(r) = 0 (lists low to high)."""
    # g(u) = u^6 f(r + 1/u) = sum f_i (r u + 1)^i u^(6 - i)
    g = [0] * 7
    for i, c in enumerate(cs):
        t = [1]
        for _ in range(i):
            t = _pmul(t, [1, r], p)
        for j, v in enumerate(t):
            g[j + 6 - i] = (g[j + 6 - i] + c * v) % p
    assert g[6] == 0 and g[5]
    l = g[5]
    return [g[i] * pow(l, 4 - i, p) % p for i in range(6)]


def genus2_oracle_pair(cs: list, r: int, p: int) -> tuple[int, int]:
    """(L(1) from point counts, Mumford enumeration count)."""
    counts = [double_cover_count(cs, p, k) for k in (1, 2)]
    L = lpoly_from_counts(counts, p, 2)
    H = quintic_model_mod_p(cs, r, p)
    return L.jacobian_order, mumford_count(H, p)


# -- conics ------------------------------------------------------------------------

def _vp(n: int, p: int) -> int:
    if n == 0:
        return 10 ** 9
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def hensel_soluble(coeffs, p, max_depth: int = 12, budget: int = 200000):
    """Is xx X^2 + yy Y^2 + zz Z^2 + xy XY + xz XZ + yz YZ = 0 soluble in Q_p?

    Integer coefficients.  Returns True, False, or None when the search
    budget runs out.  ``p = 'inf'`` uses the signature of the Gram matrix.
    """
    xx, yy, zz, xy, xz, yz = coeffs
    if p == "inf":
        G = np.array([[2 * xx, xy, xz], [xy, 2 * yy, yz], [xz, yz, 2 * zz]], dtype=float)
        ev = np.linalg.eigvalsh(G)
        return not (all(ev > 0) or all(ev < 0))

    def q(v):
        x, y, z = v
        return xx * x * x + yy * y * y + zz * z * z + xy * x * y + xz * x * z + yz * y * z

    def grad(v):
        x, y, z = v
        return (2 * xx * x + xy * y + xz * z, 2 * yy * y + xy * x + yz * z, 2 * zz * z + xz * x + yz * y)

    # primitive vectors up to unit scaling: the first unit coordinate is 1,
    # earlier coordinates are divisible by p
    steps = [0]

    def dfs(v, k, free):
        # v satisfies q(v) = 0 mod p^k, free coordinates are lifted digit by digit
        steps[0] += 1
        if steps[0] > budget:
            raise _Budget
        e = min(_vp(g, p) for g in grad(v))
        if _vp(q(v), p) > 2 * e:
            return True
        if k >= max_depth:
            raise _Budget
        m = p ** k
        for ds in product(range(p), repeat=len(free)):
            w = list(v)
            for i, d in zip(free, ds):
                w[i] += d * m
            if q(w) % (m * p) == 0 and dfs(tuple(w), k + 1, free):
                return True
        return False

    undecided = False
    for lead in range(3):
        free = [i for i in range(3) if i != lead]
        later = [i for i in range(3) if i > lead]
        for ds in product(range(p), repeat=len(later)):
            v = [0, 0, 0]
            v[lead] = 1
            for i, d in zip(later, ds):
                v[i] = d
            if q(v) % p:
                continue
            try:
                if dfs(tuple(v), 1, free):
                    return True
            except _Budget:
                undecided = True
                steps[0] = 0
    return None if undecided else False


class _Budget(Exception):
    pass


def random_form(rng, lo: int = -20, hi: int = 20) -> tuple:
    from ..arith.conics import TernaryForm
    while True:
        cs = tuple(rng.randint(lo, hi) for _ in range(6))
        if TernaryForm.from_coeffs(*cs).det() != 0:
            return cs
