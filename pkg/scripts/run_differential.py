#!/usr/bin/env python3
"""Differential checks over the corpus: rotation vs. transpose, int vs. hom, successor vs. search."""

import argparse
import time

from skewgentle import corpus
from skewgentle.config import CorpusConfig, ExperimentConfig
from skewgentle.randgen import RandomTripleConfig, random_corpus
from skewgentle.verify import Workbench, verify_int_dim, verify_successor, verify_tau


def build_corpus(cfg: CorpusConfig):
    named = [(n, corpus.algebra(n)) for n in cfg.bundled]
    rand = random_corpus(cfg.random_count, cfg.seed, RandomTripleConfig(max_vertices=cfg.max_vertices))
    return named + [(f"random{k}", t) for k, t in enumerate(rand)]


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--random-count", type=int, default=20)
    ap.add_argument("--tau-len", type=int, default=8)
    ap.add_argument("--int-len", type=int, default=6)
    ap.add_argument("--succ-len", type=int, default=6)
    a = ap.parse_args()
    cfg = ExperimentConfig(
        corpus=CorpusConfig(random_count=a.random_count, seed=a.seed),
        tau_max_len=a.tau_len,
        int_max_len=a.int_len,
        successor_max_len=a.succ_len,
    )
    print("label\tcheck\tchecked\tfailures\tseconds")
    bad = 0
    for label, t in build_corpus(cfg.corpus):
        bench = Workbench(t)
        for name, fn in (
            ("tau", lambda: verify_tau(bench, cfg.tau_max_len)),
            ("int-dim", lambda: verify_int_dim(bench, cfg.int_max_len)),
            ("successor", lambda: verify_successor(bench.hq, cfg.successor_max_len)),
        ):
            t0 = time.perf_counter()
            rep = fn()
            bad += len(rep.failures)
            print(f"{label}\t{name}\t{rep.checked}\t{len(rep.failures)}\t{time.perf_counter() - t0:.2f}")
            for f in rep.failures[:3]:
                print(f"#\t{f}")
    return 1 if bad else 0


if __name__ == "__main__":
    raise SystemExit(main())
