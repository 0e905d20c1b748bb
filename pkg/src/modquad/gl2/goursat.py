"""Goursat decomposition of subgroups of G1 x G2 and the decomposed-generic tests.

Group elements only need ``*`` and hashing, so the same code handles
matrices and the permutation groups used in tests.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Hashable, Iterable

from ..arith.finite import GF, FFElem
from .groups import PreconditionError


class InvalidPrime(ValueError):
    pass


def _identity(G: Iterable) -> Hashable:
    for g in G:
        if g * g == g:
            return g
    raise ValueError("set has no identity element")


def element_order(g, e) -> int:
    n, x = 1, g
    while x != e:
        x = x * g
        n += 1
    return n


def _coset(g, N: frozenset) -> frozenset:
    return frozenset(g * n for n in N)


@dataclass(frozen=True)
class GoursatData:
    G1: frozenset
    G2: frozenset
    N1: frozenset
    N2: frozenset
    iso: dict  # coset of N1 in G1 -> coset of N2 in G2

    def reconstruct(self) -> frozenset:
        out = set()
        for c1, c2 in self.iso.items():
            for g1 in c1:
                for g2 in c2:
                    out.add((g1, g2))
        return frozenset(out)


def goursat(H: Iterable[tuple], G1: Iterable | None = None, G2: Iterable | None = None) -> GoursatData:
    """N_i = H cap G_i and the induced isomorphism G1/N1 -> G2/N2.

    G1, G2 default to the projections of H; when given, surjectivity of each
    projection is checked and a failure names the factor.
    """
    H = frozenset(H)
    P1 = frozenset(h[0] for h in H)
    P2 = frozenset(h[1] for h in H)
    G1 = P1 if G1 is None else frozenset(G1)
    G2 = P2 if G2 is None else frozenset(G2)
    if P1 != G1:
        raise PreconditionError("projection onto the first factor is not surjective")
    if P2 != G2:
        raise PreconditionError("projection onto the second factor is not surjective")
    e1, e2 = _identity(G1), _identity(G2)
    N1 = frozenset(a for a, b in H if b == e2)
    N2 = frozenset(b for a, b in H if a == e1)
    iso: dict = {}
    for a, b in H:
        c1, c2 = _coset(a, N1), _coset(b, N2)
        prev = iso.get(c1)
        if prev is not None and prev != c2:
            raise AssertionError("H is not a subgroup: coset map is not well defined")
        iso[c1] = c2
    data = GoursatData(G1, G2, N1, N2, iso)
    if data.reconstruct() != H:
        raise AssertionError("Goursat reconstruction failed")
    return data


def _prime_to_p_nontrivial(G: Iterable, e, p: int) -> list:
    return sorted((g for g in G if g != e and element_order(g, e) % p), key=repr)


def quadratic_generic_witness(H: Iterable[tuple], G: Iterable, p: int):
    """(tau1, tau2) in H, both non-identity of order prime to p.

    Follows the two cases of the argument: Goursat kernels that are p-groups
    (lift T through the isomorphism, then kill the p-part), or kernels with a
    prime-to-p element (take one from each kernel).  Returns
    ``(pair, case)``; ``(None, 'counterexample-candidate')`` only if the
    exhaustive fallback over H also fails.
    """
    H = frozenset(H)
    G = frozenset(G)
    data = goursat(H, G, G)
    e = _identity(G)
    good = _prime_to_p_nontrivial(G, e, p)
    if not good:
        raise PreconditionError("G has no non-identity element of order prime to p")

    def is_p_group(N):
        for n in N:
            k = element_order(n, e)
            while k % p == 0:
                k //= p
            if k != 1:
                return False
        return True

    if is_p_group(data.N1) and is_p_group(data.N2):
        T = good[0]
        target = data.iso[_coset(T, data.N1)]
        Tp = sorted(target, key=repr)[0]
        pair = (T, Tp)
        # raise to a large p-power: p^m with p^m >= |G| kills every p-part
        m = 1
        while m < len(G):
            m *= p
        t1, t2 = _pow(T, m, e), _pow(Tp, m, e)
        if (t1, t2) in H and t1 != e and t2 != e and element_order(t1, e) % p and element_order(t2, e) % p:
            return (t1, t2), "p-group kernels"
    else:
        T1 = _prime_to_p_nontrivial(data.N1, e, p)
        T2 = _prime_to_p_nontrivial(data.N2, e, p)
        if T1 and T2 and (T1[0], T2[0]) in H:
            return (T1[0], T2[0]), "kernels with prime-to-p elements"
    for a, b in sorted(H, key=repr):
        if a != e and b != e and element_order(a, e) % p and element_order(b, e) % p:
            return (a, b), "exhaustive search"
    return None, "counterexample-candidate"


def _pow(g, n: int, e):
    out, base = e, g
    while n:
        if n & 1:
            out = out * base
        base = base * base
        n >>= 1
    return out


def decomposed_generic_test(eigdata, ell: int, p: int, splits_completely: bool = True) -> bool:
    """Does every place above ell have eigenvalue ratios avoiding ell and 1/ell?

    ``eigdata`` is a list of eigenvalue pairs, one per place; entries are
    integers (read mod p) or elements of F_{p^2}.
    """
    if ell % p == 0:
        raise InvalidPrime(f"ell = {ell} is divisible by p = {p}")
    if not splits_completely:
        return False
    F2 = GF(p, 2)
    L = F2(ell % p)
    bad = {L, L.inverse()}
    for pair in eigdata:
        a, b = (x if isinstance(x, FFElem) else F2(int(x) % p) for x in pair)
        if not a or not b:
            raise ValueError("eigenvalues of an invertible matrix are nonzero")
        if a / b in bad or b / a in bad:
            return False
    return True
