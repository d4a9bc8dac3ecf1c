#!/usr/bin/env python3
"""Count maximal dissections and compare with the brute-force support tau-tilting oracle."""

import argparse
import time

from skewgentle import corpus
from skewgentle.config import ExperimentConfig
from skewgentle.tautilt import compare_with_oracle, exhaustive_within
from skewgentle.words import HatQuiver


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("names", nargs="*", default=list(corpus.ALGEBRAS))
    ap.add_argument("--max-len", type=int, help="override the per-algebra word bound")
    a = ap.parse_args()
    bounds = ExperimentConfig().tautilt_max_len
    print("algebra\tmax_len\texhaustive\tdissections\toracle\tagree\tseconds")
    ok = True
    for name in a.names:
        L = a.max_len if a.max_len is not None else bounds[name]
        hq = HatQuiver(corpus.algebra(name))
        t0 = time.perf_counter()
        c = compare_with_oracle(hq, L)
        ok &= c.agree
        print(f"{name}\t{L}\t{int(exhaustive_within(hq, L))}\t{c.combinatorial}\t{c.oracle}\t{int(c.agree)}\t{time.perf_counter() - t0:.2f}")
    return 0 if ok else 1


if __name__ == "__main__":
    raise SystemExit(main())
