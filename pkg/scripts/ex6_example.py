#!/usr/bin/env python3
"""Reproduce the seven-vertex worked example: algebra, modules, rotations, intersections, AR sequence."""

from skewgentle import corpus
from skewgentle.intersections import Intersector, hom_dim_words
from skewgentle.modules import Prober, build_module
from skewgentle.surface import classify_regions, load_surface, relation_report, tiling_algebra
from skewgentle.words import HatQuiver


def main():
    surf, tri = load_surface(corpus.data_path("ex6.surf"))
    t = tiling_algebra(surf, tri)
    print("relations\t" + " ".join(relation_report(t)))
    print("regions\t" + " ".join(sorted(r.kind for r in classify_regions(surf, tri).regions)))
    hq = HatQuiver(t)
    prober = Prober(t)
    print("name\tword\tdims\tmatches_display")
    for name in corpus.EX6_REFERENCE_NAMES:
        tw = corpus.ex6_word(hq, name)
        M = build_module(hq, tw)
        same = prober.same(M, corpus.ex6_reference(t, name))
        print(f"{name}\t{tw.text()}\t{M.dim_vector()}\t{int(same)}")
    X = Intersector(hq)
    for (p, q), _ in sorted(corpus.EX6_INTERSECTIONS.items()):
        a, b = corpus.ex6_word(hq, p), corpus.ex6_word(hq, q)
        r = X.int_number(a, b)
        print(f"int({p},{q})\t{r.total}\tblack {X.black_int(a, b)}\thom(M1,tauM2) {hom_dim_words(hq, a, hq.tagged_rotation(b))}")
    g2 = corpus.ex6_word(hq, "gamma2")
    for tw in hq.ar_middle(g2):
        print(f"ar_middle(gamma2)\t{tw.text()}\t{build_module(hq, tw).dim_vector()}")


if __name__ == "__main__":
    main()
