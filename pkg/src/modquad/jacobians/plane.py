"""Divisor classes on a smooth plane quartic over F_p.

A degree 0 divisor G is principal iff L(G) != 0.  L(G) is computed the
Brill-Noether way: pick a form h0 of degree e whose divisor is explicit and
dominates the positive part of G (a product of tangent lines and of lines
through conjugate pairs), then

    L(G) = { h / h0 : h of degree e, div(h) >= div(h0) - G }

since plane curves are projectively normal.  The conditions are vanishing
orders at finitely many places, imposed through power series expansions in a
local parameter; a place of degree k is one point over F_{p^k} and its
conditions are read off coordinate-wise over F_p.  dim L(G) is the kernel
dimension minus the forms divisible by the quartic.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from math import gcd

from ..arith.fields import QuadElem
from ..arith.finite import GF, is_prime
from ..catalogue.models import CurveModel, on_curve
from .counting import BadPrime, check_good_prime, lpoly


class DegenerateSupport(ValueError):
    pass


def _red(c, p: int) -> int:
    c = Fraction(c)
    if c.denominator % p == 0:
        raise BadPrime(f"{c} has p = {p} in its denominator")
    return c.numerator * pow(c.denominator, -1, p) % p


def monomials(e: int) -> list:
    return [(a, b, e - a - b) for a in range(e, -1, -1) for b in range(e - a, -1, -1)]


def _n_forms(e: int) -> int:
    return (e + 1) * (e + 2) // 2 if e >= 0 else 0


# -- series over F_q (raw ints) -----------------------------------------------------

def _smul(a, b, N, F):
    out = [0] * N
    for i, x in enumerate(a[:N]):
        if x:
            for j in range(min(len(b), N - i)):
                y = b[j]
                if y:
                    out[i + j] = F.add(out[i + j], F.mul(x, y))
    return out


def _powers(s, e, N, F):
    out = [[1] + [0] * (N - 1)]
    for _ in range(e):
        out.append(_smul(out[-1], s, N, F))
    return out


# -- the curve mod p -------------------------------------------------------------------------

class QuarticModP:
    def __init__(self, M: CurveModel, p: int):
        if M.kind != "PlaneQuartic":
            raise ValueError("expected a plane quartic")
        check_good_prime(M, p)
        self.M, self.p = M, p
        d = M.equation.total_degree
        self.d = d
        self.terms = {(i, j, d - i - j): _red(c, p) for (i, j), c in M.equation.t.items()}
        self.terms = {k: v for k, v in self.terms.items() if v}
        self._series: dict = {}
        self._lines: dict = {}

    # evaluation ------------------------------------------------------------------
    def eval(self, P, F) -> int:
        acc = 0
        for (a, b, c), v in self.terms.items():
            t = F.mul(F.mul(F.pow(P[0], a), F.pow(P[1], b)), F.pow(P[2], c))
            acc = F.add(acc, F.mul(v % F.p, t))
        return acc

    def grad(self, P, F) -> tuple:
        out = []
        for var in range(3):
            acc = 0
            for exps, v in self.terms.items():
                n = exps[var]
                if n == 0:
                    continue
                e = list(exps)
                e[var] -= 1
                t = F.mul(F.mul(F.pow(P[0], e[0]), F.pow(P[1], e[1])), F.pow(P[2], e[2]))
                acc = F.add(acc, F.mul(n * v % F.p, t))
            out.append(acc)
        return tuple(out)

    # places ------------------------------------------------------------------------
    def place(self, P, k: int):
        """Canonical key (k, coords) of the place through P in GF(p, k)^3."""
        F = GF(self.p, k)
        P = _normalize(P, F)
        if all(c < self.p for c in P):
            return (1, P)
        conj = [P]
        Q = P
        for _ in range(k - 1):
            Q = tuple(F.frobenius(c) for c in Q)
            conj.append(Q)
        return (k, min(conj))

    def series(self, place, N: int):
        """Local expansions (X(t), Y(t), Z(t)) at the place, mod t^N."""
        have = self._series.get(place)
        if have is not None and len(have[0]) >= N:
            return tuple(s[:N] for s in have)
        k, P = place
        F = GF(self.p, k)
        ci = max(i for i in range(3) if P[i])
        i1, i2 = [i for i in range(3) if i != ci]
        g = self.grad(P, F)
        if g[i2]:
            free, solved = i1, i2
        elif g[i1]:
            free, solved = i2, i1
        else:
            raise DegenerateSupport(f"singular point {P} mod {self.p}")
        S = [[0] * N for _ in range(3)]
        S[ci][0] = 1
        S[free][0] = P[free]
        if N > 1:
            S[free][1] = 1
        S[solved][0] = P[solved]
        inv = F.inv(g[solved])
        for n in range(1, N):
            val = self._eval_series(S, n + 1, F)[n]
            S[solved][n] = F.neg(F.mul(val, inv))
        assert not any(self._eval_series(S, N, F))
        self._series[place] = tuple(S)
        return tuple(S)

    def _eval_series(self, S, N, F):
        pw = [_powers(s[:N], self.d, N, F) for s in S]
        acc = [0] * N
        for (a, b, c), v in self.terms.items():
            t = _smul(_smul(pw[0][a], pw[1][b], N, F), pw[2][c], N, F)
            for i in range(N):
                if t[i]:
                    acc[i] = F.add(acc[i], F.mul(v, t[i]))
        return acc

    def order_of_form(self, place, form: dict, cap: int = 64) -> int:
        """Valuation at the place of a form {exponents: raw int in F_p}."""
        k, _ = place
        F = GF(self.p, k)
        N = 8
        while True:
            S = self.series(place, N)
            e = sum(next(iter(form)))
            pw = [_powers(s, e, N, F) for s in S]
            acc = [0] * N
            for (a, b, c), v in form.items():
                t = _smul(_smul(pw[0][a], pw[1][b], N, F), pw[2][c], N, F)
                for i in range(N):
                    if t[i]:
                        acc[i] = F.add(acc[i], F.mul(v, t[i]))
            for i, x in enumerate(acc):
                if x:
                    return i
            if N >= cap:
                raise DegenerateSupport("form vanishes to very high order (component of the curve?)")
            N *= 2

    # lines -------------------------------------------------------------------------------
    def line_places(self, line: tuple) -> list:
        """Places on line = (l0, l1, l2) over F_p, found over F_{p^k}, k <= 3."""
        if line in self._lines:
            return self._lines[line]
        p = self.p
        A, B = _line_basis(line, p)
        found = {}
        F1 = GF(p)
        if self.eval(B, F1) == 0:
            pl = self.place(B, 1)
            found[pl] = True
        for k in (1, 2, 3):
            F = GF(p, k)
            for t in range(F.q):
                if k > 1 and t < p:
                    continue
                P = tuple(F.add(A[i], F.mul(t, B[i])) for i in range(3))
                if self.eval(P, F) == 0:
                    found[self.place(P, k)] = True
        out = list(found)
        self._lines[line] = out
        return out

    def line_divisor(self, line: tuple) -> dict:
        form = {_unit(i): line[i] for i in range(3) if line[i]}
        div = {pl: self.order_of_form(pl, form) for pl in self.line_places(line)}
        if sum(pl[0] * m for pl, m in div.items()) != self.d:
            raise DegenerateSupport(f"line {line} meets the curve outside F_(p^k), k <= 3")
        return div

    def tangent_line(self, place) -> tuple:
        k, P = place
        if k != 1:
            raise DegenerateSupport("tangent lines only at rational places")
        return _normalize(self.grad(P, GF(self.p)), GF(self.p))

    def conjugate_line(self, place) -> tuple:
        k, P = place
        if k != 2:
            raise DegenerateSupport("conjugate line needs a place of degree 2")
        F = GF(self.p, 2)
        Q = tuple(F.frobenius(c) for c in P)
        L = _normalize(_cross(P, Q, F), F)
        if any(c >= self.p for c in L):
            raise AssertionError("line through conjugate points is not rational")
        return L


def _unit(i):
    e = [0, 0, 0]
    e[i] = 1
    return tuple(e)


def _normalize(P, F):
    P = tuple(P)
    i = max((i for i in range(3) if P[i]), default=None)
    if i is None:
        raise DegenerateSupport("zero vector")
    inv = F.inv(P[i])
    return tuple(F.mul(c, inv) for c in P)


def _cross(P, Q, F):
    s, m = F.sub, F.mul
    return (s(m(P[1], Q[2]), m(P[2], Q[1])),
            s(m(P[2], Q[0]), m(P[0], Q[2])),
            s(m(P[0], Q[1]), m(P[1], Q[0])))


def _line_basis(line, p):
    """Two independent F_p points on the line."""
    pts = []
    for P in product(range(p), repeat=3):
        if any(P) and sum(a * b for a, b in zip(P, line)) % p == 0:
            if not pts or _cross(pts[0], P, GF(p)) != (0, 0, 0):
                pts.append(P)
                if len(pts) == 2:
                    return pts
    raise AssertionError("line without two points")


# -- linear algebra mod p ----------------------------------------------------------------

def rank_mod_p(rows, p: int) -> int:
    m = [list(r) for r in rows]
    rank = 0
    ncols = len(m[0]) if m else 0
    for c in range(ncols):
        piv = next((i for i in range(rank, len(m)) if m[i][c] % p), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        inv = pow(m[rank][c], -1, p)
        m[rank] = [v * inv % p for v in m[rank]]
        for i in range(len(m)):
            if i != rank and m[i][c] % p:
                t = m[i][c]
                m[i] = [(a - t * b) % p for a, b in zip(m[i], m[rank])]
        rank += 1
    return rank


# -- divisors ---------------------------------------------------------------------------------

def _add_div(*ds, scale=None):
    out: dict = {}
    for i, d in enumerate(ds):
        s = 1 if scale is None else scale[i]
        for k, v in d.items():
            out[k] = out.get(k, 0) + s * v
    return {k: v for k, v in out.items() if v}


def degree(D: dict) -> int:
    return sum(pl[0] * m for pl, m in D.items())


def riemann_roch_dim(C: QuarticModP, G: dict) -> int:
    """l(G) for a divisor G of degree <= 0 whose positive places have degree <= 2."""
    lines = []
    for pl, m in G.items():
        if m <= 0:
            continue
        L = C.tangent_line(pl) if pl[0] == 1 else C.conjugate_line(pl)
        div = C.line_divisor(L)
        o = div[pl]
        lines.append((L, div, -(-m // o)))
    e = sum(n for _, _, n in lines)
    h0 = _add_div(*[d for _, d, _ in lines], scale=[n for _, _, n in lines])
    need = _add_div(h0, G, scale=[1, -1])
    conds = {pl: r for pl, r in need.items() if r > 0}
    mons = monomials(e)
    rows = []
    p = C.p
    for pl, r in conds.items():
        k, _ = pl
        F = GF(p, k)
        S = C.series(pl, r)
        pw = [_powers(s, e, r, F) for s in S]
        cols = [_smul(_smul(pw[0][a], pw[1][b], r, F), pw[2][c], r, F) for a, b, c in mons]
        for i in range(r):
            for dig in range(k):
                rows.append([F._digits(col[i])[dig] for col in cols])
    rk = rank_mod_p(rows, p) if rows else 0
    return len(mons) - rk - _n_forms(e - C.d)


def is_principal(C: QuarticModP, G: dict) -> bool:
    if degree(G) != 0:
        raise ValueError("principal test needs degree 0")
    if not G:
        return True

    def cost(H):
        return sum(m for pl, m in H.items() if m > 0)
    neg = {k: -v for k, v in G.items()}
    use = G
    if cost(neg) < cost(G) or any(pl[0] > 2 for pl, m in G.items() if m > 0):
        use = neg
    if any(pl[0] > 2 for pl, m in use.items() if m > 0):
        raise DegenerateSupport("places of degree 3 on both sides of the divisor")
    dim = riemann_roch_dim(C, use)
    if dim > 1:
        raise AssertionError(f"l(G) = {dim} > 1 for a degree 0 divisor")
    return dim == 1


# -- reduction of catalogued divisors ----------------------------------------------------------

def _legendre(a: int, p: int) -> int:
    a %= p
    if a == 0:
        return 0
    return 1 if pow(a, (p - 1) // 2, p) == 1 else -1


def reduce_coords(coords, p: int, conj: bool = False):
    """(k, raw coordinates in GF(p, k)) of the reduction of a point of P^2(Q(sqrt d))."""
    if len(coords) == 2:
        coords = (coords[0], coords[1], Fraction(1))
    ds = {c.d for c in coords if isinstance(c, QuadElem) and c.b}
    if not ds:
        F = GF(p)
        return 1, tuple(_red(c, p) for c in coords)
    d = ds.pop()
    if d % p == 0:
        k, s = 1, 0
    elif _legendre(d, p) == 1:
        k = 1
        s = next(x for x in range(p) if (x * x - d) % p == 0)
    else:
        k = 2
        s = GF(p, 2).sqrt(d % p)
    F = GF(p, k)
    if conj:
        s = F.neg(s)
    out = []
    for c in coords:
        a, b = (c.a, c.b) if isinstance(c, QuadElem) else (Fraction(c), Fraction(0))
        out.append(F.add(_red(a, p), F.mul(_red(b, p), s)))
    return k, tuple(out)


@dataclass(frozen=True)
class PlaneDivisorClass:
    """E - m B with E, B effective divisors mod p (dicts place -> multiplicity)."""
    label: str
    p: int
    E: dict = field(hash=False)
    B: dict = field(hash=False)
    m: int = 1
    notes: tuple = ()

    @property
    def divisor(self) -> dict:
        return _add_div(self.E, self.B, scale=[1, -self.m])


def reduce_divisor(C: QuarticModP, M: CurveModel, tag: str) -> PlaneDivisorClass:
    Dv = next((D for D in M.divisors if D.tag == tag), None)
    if Dv is None:
        raise KeyError(f"{M.label} has no divisor {tag!r}")
    return reduce_terms(C, M, Dv.terms, tag)


def reduce_terms(C: QuarticModP, M: CurveModel, terms, label: str = "D") -> PlaneDivisorClass:
    p = C.p
    acc: dict = {}
    notes = []
    seen = {}
    for name, conj, m in terms:
        P = M.point(name).coords
        if not on_curve(M, P):
            raise ValueError(f"{name} is not on {M.label}")
        k, R = reduce_coords(P, p, conj)
        F = GF(p, k)
        R3 = _normalize(R, F)
        if C.eval(R3, F) != 0:
            raise AssertionError(f"reduction of {name} is off the curve")
        if not any(C.grad(R3, F)):
            raise DegenerateSupport(f"reduction of {name} is singular")
        pl = C.place(R3, k)
        # a point and its conjugate share a place of degree 2 when p is inert;
        # only a coincidence of rational places is worth reporting
        if pl in seen and seen[pl] != (name, conj) and pl[0] == 1:
            notes.append(f"{seen[pl][0]} and {'conj ' if conj else ''}{name} meet mod {p}")
        seen.setdefault(pl, (name, conj))
        acc[pl] = acc.get(pl, 0) + m
    D = {}
    for pl, m in acc.items():
        if m % pl[0]:
            raise AssertionError("reduced divisor is not Galois stable")
        if m:
            D[pl] = m // pl[0]
    E = {k: v for k, v in D.items() if v > 0}
    neg = {k: -v for k, v in D.items() if v < 0}
    g = 0
    for v in neg.values():
        g = gcd(g, v)
    g = g or 1
    B = {k: v // g for k, v in neg.items()}
    return PlaneDivisorClass(label, p, E, B, g, tuple(notes))


@dataclass(frozen=True)
class ClassOrder:
    label: str
    p: int
    order: int | None
    jacobian_order: int
    cap: int
    notes: tuple = ()

    @property
    def divides_jacobian_order(self) -> bool:
        return self.order is not None and self.jacobian_order % self.order == 0


def quartic_class_order(M: CurveModel, D, p: int, cap: int = 60) -> ClassOrder:
    """Order of the class of D in Jac(F_p).

    The order divides |Jac(F_p)|, so only the divisors n <= cap of that
    number are tested, smallest first.
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    C = QuarticModP(M, p)
    Dc = reduce_divisor(C, M, D) if isinstance(D, str) else D
    G = Dc.divisor
    if degree(G) != 0:
        raise ValueError("class order needs a degree 0 divisor")
    N = lpoly(M, p).jacobian_order
    for n in range(1, cap + 1):
        if N % n:
            continue
        nG = {k: n * v for k, v in G.items()}
        if is_principal(C, nG):
            return ClassOrder(Dc.label, p, n, N, cap, Dc.notes)
    return ClassOrder(Dc.label, p, None, N, cap, Dc.notes)
