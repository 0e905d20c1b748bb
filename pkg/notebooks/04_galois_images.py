"""
Subgroups of GL2(F_p) by exhaustion
===================================

For p = 3 and 5 every subgroup class is enumerated, classified against the
Borel and Cartan families, and tested against two group theoretic lemmas.
"""

from collections import Counter

from modquad.gl2 import classify_image, ddt_reducibility_check, galois_image_lemma, subgroups_up_to_conjugacy

for p in (3, 5):
    subs = subgroups_up_to_conjugacy(p)
    kinds = Counter(classify_image(G).container for G in subs)
    print(f"p = {p}: {len(subs)} classes")
    for k, n in sorted(kinds.items()):
        print(f"   {k:22s} {n}")
    hyp = [G for G in subs if len(G.det_image()) > 1 and ddt_reducibility_check(G).hypothesis_holds]
    print("   trace hypothesis holds for", len(hyp), "classes, all with reducible kernel:",
          all(ddt_reducibility_check(G).conclusion_holds for G in hyp))

branches = Counter(galois_image_lemma(G).part2 for G in subgroups_up_to_conjugacy(3)
                   if galois_image_lemma(G).applies)
print("p = 3 branches:", dict(branches))
