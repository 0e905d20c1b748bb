"""Matrices in GL2(F_p), named subgroups and subgroup enumeration."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

import numpy as np

from ..arith.finite import is_prime


class NotInvertible(ValueError):
    pass


class UnsupportedPrime(ValueError):
    pass


class PreconditionError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class Mat2:
    """The matrix (a b; c d) over F_p, entries kept reduced."""

    a: int
    b: int
    c: int
    d: int
    p: int

    def __post_init__(self):
        p = self.p
        for name in "abcd":
            object.__setattr__(self, name, getattr(self, name) % p)

    @classmethod
    def identity(cls, p: int) -> Mat2:
        return cls(1, 0, 0, 1, p)

    @classmethod
    def scalar(cls, x: int, p: int) -> Mat2:
        return cls(x, 0, 0, x, p)

    def det(self) -> int:
        return (self.a * self.d - self.b * self.c) % self.p

    def trace(self) -> int:
        return (self.a + self.d) % self.p

    def __mul__(self, o: Mat2) -> Mat2:
        if o.p != self.p:
            raise ValueError("matrices over different primes")
        return Mat2(self.a * o.a + self.b * o.c, self.a * o.b + self.b * o.d,
                    self.c * o.a + self.d * o.c, self.c * o.b + self.d * o.d, self.p)

    def inverse(self) -> Mat2:
        dt = self.det()
        if dt == 0:
            raise NotInvertible(f"singular matrix {self}")
        i = pow(dt, -1, self.p)
        return Mat2(self.d * i, -self.b * i, -self.c * i, self.a * i, self.p)

    def __pow__(self, n: int) -> Mat2:
        if n < 0:
            return self.inverse() ** (-n)
        out = Mat2.identity(self.p)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def is_identity(self) -> bool:
        return self.a == 1 and self.b == 0 and self.c == 0 and self.d == 1

    def is_scalar(self) -> bool:
        return self.b == 0 and self.c == 0 and self.a == self.d

    def order(self) -> int:
        n, x = 1, self
        while not x.is_identity():
            x = x * self
            n += 1
        return n

    def conj(self, g: Mat2) -> Mat2:
        """g self g^-1."""
        return g * self * g.inverse()

    def index(self) -> int:
        p = self.p
        return self.a + p * (self.b + p * (self.c + p * self.d))

    def __repr__(self) -> str:
        return f"[{self.a},{self.b};{self.c},{self.d}]_{self.p}"


def parse_mat(text: str, p: int) -> Mat2:
    """'a,b,c,d' -> Mat2."""
    parts = [int(s) for s in text.replace(" ", "").split(",")]
    if len(parts) != 4:
        raise ValueError(f"need four entries, got {text!r}")
    return Mat2(*parts, p)


@dataclass(frozen=True)
class SubgroupGL2:
    p: int
    elements: frozenset
    generators: tuple = ()
    label: str | None = None

    @property
    def order(self) -> int:
        return len(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, g) -> bool:
        return g in self.elements

    def __iter__(self):
        return iter(sorted(self.elements))

    def conj(self, g: Mat2) -> SubgroupGL2:
        gi = g.inverse()
        return SubgroupGL2(self.p, frozenset(g * x * gi for x in self.elements),
                           tuple(g * x * gi for x in self.generators), None)

    def issubset(self, other: SubgroupGL2) -> bool:
        return self.elements <= other.elements

    def intersect_sl2(self) -> SubgroupGL2:
        return SubgroupGL2(self.p, frozenset(x for x in self.elements if x.det() == 1))

    def kernel_det(self) -> SubgroupGL2:
        return self.intersect_sl2()

    def det_image(self) -> frozenset:
        return frozenset(x.det() for x in self.elements)

    def is_closed(self) -> bool:
        els = self.elements
        return all(x * y in els for x in els for y in els)


def gl2_order(p: int) -> int:
    return (p * p - 1) * (p * p - p)


def closure(gens: Iterable[Mat2], p: int | None = None, label: str | None = None) -> SubgroupGL2:
    """Group generated by gens, by breadth-first multiplication."""
    gens = list(gens)
    if p is None:
        if not gens:
            raise ValueError("need p when there are no generators")
        p = gens[0].p
    for g in gens:
        if g.p != p:
            raise ValueError("generators over different primes")
        if g.det() == 0:
            raise NotInvertible(f"singular generator {g}")
    one = Mat2.identity(p)
    seen = {one}
    frontier = [one]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = x * g
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return SubgroupGL2(p, frozenset(seen), tuple(gens), label)


def least_nonresidue(p: int) -> int:
    for e in range(2, p):
        if pow(e, (p - 1) // 2, p) == p - 1:
            return e
    raise UnsupportedPrime(f"no nonresidue mod {p}")


_ALIASES = {
    "b": "b", "borel": "b",
    "s°": "s°", "s0": "s°", "so": "s°", "split-cartan": "s°",
    "s": "s", "split-normalizer": "s",
    "ns°": "ns°", "ns0": "ns°", "nso": "ns°", "nonsplit-cartan": "ns°",
    "ns": "ns", "nonsplit-normalizer": "ns",
    "sl2": "SL2", "SL2": "SL2", "gl2": "GL2", "GL2": "GL2",
}


@lru_cache(maxsize=None)
def standard_subgroup(name: str, p: int) -> SubgroupGL2:
    """Named subgroup of GL2(F_p): b, s°, s, ns°, ns (ASCII aliases s0, ns0), SL2, GL2."""
    key = _ALIASES.get(name, _ALIASES.get(name.lower()))
    if key is None:
        raise ValueError(f"unknown subgroup name {name!r}")
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if p == 2:
        raise UnsupportedPrime("p = 2 is not supported")
    units = range(1, p)
    R = range(p)
    els: set[Mat2] = set()
    if key == "b":
        els = {Mat2(a, b, 0, d, p) for a in units for b in R for d in units}
    elif key in ("s°", "s"):
        els = {Mat2(a, 0, 0, d, p) for a in units for d in units}
        if key == "s":
            els |= {Mat2(0, b, c, 0, p) for b in units for c in units}
    elif key in ("ns°", "ns"):
        e = least_nonresidue(p)
        els = {Mat2(x, e * y, y, x, p) for x in R for y in R if (x, y) != (0, 0)}
        if key == "ns":
            # conjugation by diag(1, -1) acts as Frobenius on the Cartan
            els |= {Mat2(x, -e * y, y, -x, p) for x in R for y in R if (x, y) != (0, 0)}
    else:
        els = {Mat2(a, b, c, d, p) for a in R for b in R for c in R for d in R
               if (a * d - b * c) % p}
        if key == "SL2":
            els = {m for m in els if m.det() == 1}
    return SubgroupGL2(p, frozenset(els), (), key + str(p) if key not in ("SL2", "GL2") else f"{key}({p})")


def standard_order(name: str, p: int) -> int:
    """Closed-form orders of the named subgroups."""
    key = _ALIASES.get(name, _ALIASES.get(name.lower()))
    return {
        "b": p * (p - 1) ** 2,
        "s°": (p - 1) ** 2,
        "s": 2 * (p - 1) ** 2,
        "ns°": p * p - 1,
        "ns": 2 * (p * p - 1),
        "SL2": p * (p * p - 1),
        "GL2": gl2_order(p),
    }[key]


def all_gl2(p: int) -> list[Mat2]:
    return sorted(standard_subgroup("GL2", p).elements)


# -- table-driven enumeration for small p ---------------------------------------

class GL2Table:
    """Multiplication and conjugation tables for GL2(F_p), p <= 7."""

    _cache: dict[int, GL2Table] = {}

    def __new__(cls, p: int):
        if p in cls._cache:
            return cls._cache[p]
        if p > 7:
            raise UnsupportedPrime("tables only for p <= 7")
        self = super().__new__(cls)
        self.p = p
        self.mats = all_gl2(p)
        self.n = len(self.mats)
        self.pos = {m: i for i, m in enumerate(self.mats)}
        n = self.n
        mul = np.empty((n, n), dtype=np.int32)
        for i, x in enumerate(self.mats):
            for j, y in enumerate(self.mats):
                mul[i, j] = self.pos[x * y]
        self.mul = mul
        self.inv = np.array([self.pos[m.inverse()] for m in self.mats], dtype=np.int32)
        self.identity = self.pos[Mat2.identity(p)]
        # conj[g, x] = g x g^-1
        self.conj = np.array([mul[mul[g], self.inv[g]] for g in range(n)], dtype=np.int32)
        cls._cache[p] = self
        return self

    def close(self, idx: Iterable[int]) -> frozenset:
        """Closure of a set of element indices."""
        gens = np.array(sorted(set(idx)), dtype=np.int32)
        cur = np.zeros(self.n, dtype=bool)
        cur[self.identity] = True
        cur[gens] = True
        while True:
            members = np.nonzero(cur)[0]
            prod = self.mul[np.ix_(members, gens)].ravel()
            new = cur.copy()
            new[prod] = True
            if new.sum() == cur.sum():
                return frozenset(members.tolist())
            cur = new

    def canonical(self, sub: frozenset) -> bytes:
        """Conjugacy-class invariant key: lexicographically least conjugate."""
        arr = np.array(sorted(sub), dtype=np.int32)
        imgs = np.sort(self.conj[:, arr], axis=1)
        best = imgs[np.lexsort(imgs.T[::-1])[0]]
        return best.tobytes()

    def to_subgroup(self, sub: frozenset, label=None) -> SubgroupGL2:
        return SubgroupGL2(self.p, frozenset(self.mats[i] for i in sub), (), label)


@lru_cache(maxsize=None)
def subgroups_up_to_conjugacy(p: int) -> tuple[SubgroupGL2, ...]:
    """One representative of each conjugacy class of subgroups of GL2(F_p).

    Every subgroup arises from a smaller one by adjoining a cyclic subgroup,
    and conjugating the smaller one into the chosen representative keeps the
    chain inside the search, so joining representatives with all cyclic
    subgroups reaches every class.
    """
    T = GL2Table(p)
    cyclic = {}
    for i in range(T.n):
        c = T.close([i])
        cyclic.setdefault(c, i)
    cyc_gens = sorted(cyclic.values())
    reps: dict[bytes, frozenset] = {}
    frontier = []
    for c in cyclic:
        k = T.canonical(c)
        if k not in reps:
            reps[k] = c
            frontier.append(c)
    seen_raw = set(cyclic)
    while frontier:
        nxt = []
        for H in frontier:
            base = sorted(H)
            for g in cyc_gens:
                if g in H:
                    continue
                K = T.close(base + [g])
                if K in seen_raw:
                    continue
                seen_raw.add(K)
                k = T.canonical(K)
                if k not in reps:
                    reps[k] = K
                    nxt.append(K)
        frontier = nxt
    out = [T.to_subgroup(s) for s in reps.values()]
    out.sort(key=lambda G: (G.order, sorted(G.elements)))
    return tuple(out)
