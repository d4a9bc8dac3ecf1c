#!/usr/bin/env python3
"""Flip the sign functions at each vertex and confirm the numerical invariants do not move."""

import argparse

from skewgentle import corpus
from skewgentle.intersections import Intersector
from skewgentle.tautilt import compare_with_oracle
from skewgentle.verify import regauge
from skewgentle.words import HatQuiver


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--algebra", default="ex6")
    ap.add_argument("--max-len", type=int, default=5)
    a = ap.parse_args()
    t = corpus.algebra(a.algebra)
    base = HatQuiver(t)
    words = base.enumerate_admissible(a.max_len)
    X = Intersector(base)
    ref = [X.int_number(u, w).total for u in words for w in words]
    ref_count = compare_with_oracle(base, a.max_len).combinatorial
    print("vertex\tint_pairs_equal\tdissections\tequal")
    ok = True
    for v in t.vertices:
        hq = HatQuiver(t, base.signs.flipped_at(t, v))
        Y = Intersector(hq)
        moved = [regauge(hq, w, v) for w in words]
        same = ref == [Y.int_number(u, w).total for u in moved for w in moved]
        n = compare_with_oracle(hq, a.max_len).combinatorial
        ok &= same and n == ref_count
        print(f"{v}\t{int(same)}\t{n}\t{int(n == ref_count)}")
    return 0 if ok else 1


if __name__ == "__main__":
    raise SystemExit(main())
