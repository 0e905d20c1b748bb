"""Classification of subgroups of GL2(F_p) as mod-p Galois images."""

from __future__ import annotations

from dataclasses import dataclass, field

from ..arith.finite import GF
from .groups import Mat2, PreconditionError, SubgroupGL2, all_gl2, standard_subgroup


def _stable_lines_fp(mats, p: int) -> list[tuple[int, int]]:
    """Lines of F_p^2 (as (1, t) or (0, 1)) fixed by every matrix."""
    out = []
    for v in [(1, t) for t in range(p)] + [(0, 1)]:
        ok = True
        for m in mats:
            w0 = (m.a * v[0] + m.b * v[1]) % p
            w1 = (m.c * v[0] + m.d * v[1]) % p
            if (w0 * v[1] - w1 * v[0]) % p:
                ok = False
                break
        if ok:
            out.append(v)
    return out


def _stable_lines_fp2(mats, p: int) -> list[tuple[int, int]]:
    """Same over F_{p^2}; vectors hold raw GF(p, 2) ints."""
    F = GF(p, 2)
    out = []
    for v in [(1, t) for t in range(F.q)] + [(0, 1)]:
        ok = True
        for m in mats:
            a, b, c, d = (F.from_int(x) for x in (m.a, m.b, m.c, m.d))
            w0 = F.add(F.mul(a, v[0]), F.mul(b, v[1]))
            w1 = F.add(F.mul(c, v[0]), F.mul(d, v[1]))
            if F.sub(F.mul(w0, v[1]), F.mul(w1, v[0])):
                ok = False
                break
        if ok:
            out.append(v)
    return out


def _gens_or_all(G: SubgroupGL2):
    return G.generators if G.generators else tuple(G.elements)


def is_irreducible(G: SubgroupGL2) -> bool:
    return not _stable_lines_fp(_gens_or_all(G), G.p)


def is_absolutely_irreducible(G: SubgroupGL2) -> bool:
    return not _stable_lines_fp2(_gens_or_all(G), G.p)


def find_conjugator(G: SubgroupGL2, target: SubgroupGL2) -> Mat2 | None:
    """Some g with g G g^-1 inside target, by exhaustive search over GL2(F_p)."""
    if target.order % G.order:
        return None
    tel = target.elements
    gens = _gens_or_all(G)
    for g in all_gl2(G.p):
        gi = g.inverse()
        if all(g * x * gi in tel for x in gens):
            return g
    return None


CONTAINERS = ("reducible", "Cartan(split)", "Cartan(nonsplit)", "normalizer(split)",
              "normalizer(nonsplit)", "contains-SL2", "exceptional")


@dataclass(frozen=True)
class ImageClassification:
    p: int
    order: int
    irreducible: bool
    absolutely_irreducible: bool
    container: str
    conjugator: Mat2 | None = None
    det_image_order: int = 0
    p3_branch: str | None = None
    notes: tuple = field(default_factory=tuple)

    def as_dict(self) -> dict:
        return {
            "p": self.p,
            "order": self.order,
            "irreducible": self.irreducible,
            "absolutely_irreducible": self.absolutely_irreducible,
            "container": self.container,
            "conjugator": None if self.conjugator is None else
            [self.conjugator.a, self.conjugator.b, self.conjugator.c, self.conjugator.d],
            "det_image_order": self.det_image_order,
            "p3_branch": self.p3_branch,
        }


def classify_image(G: SubgroupGL2) -> ImageClassification:
    p = G.p
    irr = is_irreducible(G)
    absirr = irr and is_absolutely_irreducible(G)
    conj = None
    if not irr:
        container = "reducible"
        # record the finer Cartan containment when it holds
        conj = find_conjugator(G, standard_subgroup("s°", p))
        notes = ("inside a split Cartan",) if conj is not None else ()
    else:
        notes = ()
        container = "exceptional"
        for tag, name in (("Cartan(nonsplit)", "ns°"), ("normalizer(split)", "s"),
                          ("normalizer(nonsplit)", "ns")):
            g = find_conjugator(G, standard_subgroup(name, p))
            if g is not None:
                container, conj = tag, g
                break
        else:
            sl2 = standard_subgroup("SL2", p)
            if sl2.elements <= G.elements:
                container = "contains-SL2"
    return ImageClassification(p, G.order, irr, absirr, container, conj,
                               len(G.det_image()), _p3_branch(G, irr), notes)


def _p3_branch(G: SubgroupGL2, irr: bool) -> str | None:
    """For p = 3, full determinant, irreducible G with absolutely reducible G cap SL2:
    's3' if G is conjugate to the split-Cartan normalizer, 'ns3°' if G sits in a
    nonsplit Cartan, 'violation' if neither."""
    if G.p != 3 or not irr or len(G.det_image()) != 2:
        return None
    Gp = G.intersect_sl2()
    if is_absolutely_irreducible(Gp):
        return None
    s3 = standard_subgroup("s", 3)
    if G.order == s3.order and find_conjugator(G, s3) is not None:
        return "s3"
    if find_conjugator(G, standard_subgroup("ns°", 3)) is not None:
        return "ns3°"
    return "violation"


@dataclass(frozen=True)
class GaloisImageVerdict:
    applies: bool
    part1: bool | None = None
    part2: str | None = None
    part3: bool | None = None


def galois_image_lemma(G: SubgroupGL2) -> GaloisImageVerdict:
    """Check the three conclusions of the Cartan-normalizer lemma on one subgroup.

    Hypotheses: G irreducible and G cap SL2 absolutely reducible (the image of
    the absolute Galois group of F(zeta_p) when det is the cyclotomic character).
    """
    p = G.p
    if not is_irreducible(G) or is_absolutely_irreducible(G.intersect_sl2()):
        return GaloisImageVerdict(False)
    part1 = any(find_conjugator(G, standard_subgroup(n, p)) is not None for n in ("s", "ns"))
    part2 = _p3_branch(G, True) if p == 3 else None
    part3 = None
    if p == 5 and len(G.det_image()) == 4:
        part3 = find_conjugator(G, standard_subgroup("ns", 5)) is not None
    return GaloisImageVerdict(True, part1, part2, part3)


@dataclass(frozen=True)
class DDTResult:
    hypothesis_holds: bool
    conclusion_holds: bool
    det_order: int
    witness: Mat2 | None = None  # an element breaking the trace identity

    @property
    def implication_holds(self) -> bool:
        return (not self.hypothesis_holds) or self.conclusion_holds


def ddt_reducibility_check(G: SubgroupGL2) -> DDTResult:
    """Trace identity tr(g)^2 = (1 + det g)^2 off ker(det) versus reducibility of ker(det)."""
    p = G.p
    if p == 2:
        raise PreconditionError("p must be odd")
    d = len(G.det_image())
    if d == 1:
        raise PreconditionError("det has trivial image (d = 1)")
    witness = None
    for g in sorted(G.elements):
        dt = g.det()
        if dt != 1:
            t = g.trace()
            if (t * t - (1 + dt) ** 2) % p:
                witness = g
                break
    ker = G.intersect_sl2()
    conclusion = bool(_stable_lines_fp2(tuple(ker.elements), p))
    return DDTResult(witness is None, conclusion, d, witness)
