from itertools import permutations
from random import Random

import pytest

from modquad.gl2 import (
    InvalidPrime, Mat2, NotInvertible, PreconditionError, UnsupportedPrime, classify_image, closure,
    ddt_reducibility_check, decomposed_generic_test, galois_image_lemma, goursat,
    quadratic_generic_witness, standard_order, standard_subgroup, subgroups_up_to_conjugacy,
)
from modquad.gl2.groups import all_gl2


@pytest.mark.parametrize("p", [3, 5, 7, 11, 13])
@pytest.mark.parametrize("name", ["b", "s°", "s", "ns°", "ns"])
def test_standard_orders(name, p):
    G = standard_subgroup(name, p)
    assert G.order == standard_order(name, p)
    assert G.is_closed() if p <= 5 else True


def test_standard_examples():
    assert standard_subgroup("ns°", 5).order == 24
    assert standard_subgroup("s", 3).order == 8
    assert standard_subgroup("b", 5).order == 80
    with pytest.raises(UnsupportedPrime):
        standard_subgroup("b", 2)


def test_closure_examples():
    assert closure([Mat2.identity(3)]).order == 1
    assert closure([Mat2(0, -1, 1, 0, 3)]).order == 4
    sl2 = closure([Mat2(1, 1, 0, 1, 5), Mat2(1, 0, 1, 1, 5)])
    assert sl2.order == 120
    with pytest.raises(NotInvertible):
        closure([Mat2(1, 2, 2, 4, 5)])


def test_classify_examples():
    r = classify_image(standard_subgroup("s", 3))
    assert (r.container, r.irreducible, r.absolutely_irreducible) == ("normalizer(split)", True, True)
    assert classify_image(standard_subgroup("s°", 5)).container == "reducible"
    assert classify_image(standard_subgroup("GL2", 5)).container == "contains-SL2"


def test_classification_is_conjugation_invariant():
    rng = Random(3)
    G3 = all_gl2(3)
    for G in subgroups_up_to_conjugacy(3):
        tag = classify_image(G).container
        for g in rng.sample(G3, 6):
            assert classify_image(G.conj(g)).container == tag


def _sym(n=3):
    return [tuple(p) for p in permutations(range(n))]


def _compose(a, b):
    return tuple(a[b[i]] for i in range(len(b)))


class Perm(tuple):
    def __mul__(self, other):
        return Perm(_compose(self, other))


def _sign(p):
    s = 1
    for i in range(len(p)):
        for j in range(i + 1, len(p)):
            if p[i] > p[j]:
                s = -s
    return s


def test_goursat_examples():
    S3 = [Perm(p) for p in _sym()]
    diag = [(g, g) for g in S3]
    d = goursat(diag, S3, S3)
    assert len(d.N1) == len(d.N2) == 1 and d.reconstruct() == frozenset(diag)
    full = [(a, b) for a in S3 for b in S3]
    d = goursat(full, S3, S3)
    assert len(d.N1) == len(d.N2) == 6 and len(d.iso) == 1
    sgn = [(a, b) for a in S3 for b in S3 if _sign(a) == _sign(b)]
    d = goursat(sgn, S3, S3)
    assert len(d.N1) == len(d.N2) == 3 and d.reconstruct() == frozenset(sgn)
    # a projection that is not onto
    with pytest.raises(PreconditionError):
        goursat([(g, Perm((0, 1, 2))) for g in S3], S3, S3)


def test_goursat_roundtrip_on_gl2_fibre_products():
    for G in subgroups_up_to_conjugacy(3):
        els = sorted(G.elements)
        H = [(a, b) for a in els for b in els if a.det() == b.det()]
        assert goursat(H, els, els).reconstruct() == frozenset(H)


def test_quadratic_generic_witness():
    g = Mat2(0, -1, 1, 0, 3)
    G = sorted(closure([g]).elements)
    pair, _ = quadratic_generic_witness([(x, x) for x in G], G, 3)
    assert pair is not None and pair[0] == pair[1] and not pair[0].is_identity()
    # a p-group has no admissible element
    U = sorted(closure([Mat2(1, 1, 0, 1, 3)]).elements)
    with pytest.raises(PreconditionError):
        quadratic_generic_witness([(x, x) for x in U], U, 3)


def test_decomposed_generic_examples():
    assert decomposed_generic_test([(1, 2)], 3, 5) is False
    assert decomposed_generic_test([(1, 1)], 2, 5) is True
    assert decomposed_generic_test([(1, 1)], 6, 5) is False
    assert decomposed_generic_test([(2, 3)], 4, 7) is True
    with pytest.raises(InvalidPrime):
        decomposed_generic_test([(1, 2)], 10, 5)


def test_ddt_examples():
    r = ddt_reducibility_check(standard_subgroup("s", 3))
    assert r.implication_holds
    assert ddt_reducibility_check(standard_subgroup("GL2", 3)).hypothesis_holds is False
    assert ddt_reducibility_check(standard_subgroup("s°", 5)).conclusion_holds
    with pytest.raises(PreconditionError):
        ddt_reducibility_check(standard_subgroup("SL2", 3))


@pytest.mark.parametrize("p", [3, 5])
def test_ddt_lemma_by_exhaustion(p):
    for G in subgroups_up_to_conjugacy(p):
        if len(G.det_image()) > 1:
            assert ddt_reducibility_check(G).implication_holds


def test_p3_branch_by_exhaustion():
    branches = set()
    for G in subgroups_up_to_conjugacy(3):
        v = galois_image_lemma(G)
        if v.applies:
            assert v.part1
            assert v.part2 != "violation"
            branches.add(v.part2)
    assert {"s3", "ns3°"} <= branches


def test_subgroup_orders_divide_group_order():
    for p in (3, 5):
        n = (p * p - 1) * (p * p - p)
        for G in subgroups_up_to_conjugacy(p):
            assert n % G.order == 0
