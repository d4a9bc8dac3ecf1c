"""Random skew-gentle triples.

Arrows are drawn under the degree bounds, each vertex receives a local sign
pattern (distinct sigma on outgoing, distinct tau on incoming arrows, loops
with sigma = tau), and the relations are read off the sign criterion.  This
gives a gentle pair by construction; finite dimension and connectedness are
enforced by rejection.
"""

from __future__ import annotations

import random
import string
from dataclasses import dataclass

import networkx as nx

from .algebra import Arrow, Quiver, SkewGentleTriple, format_algebra, validate_skew_gentle


@dataclass(frozen=True)
class RandomTripleConfig:
    max_vertices: int = 5
    special_prob: float = 0.35
    loop_prob: float = 0.15
    arrow_attempts_per_vertex: int = 2
    max_tries: int = 10_000


def random_triple(rng: random.Random, cfg: RandomTripleConfig = RandomTripleConfig()) -> SkewGentleTriple:
    for _ in range(cfg.max_tries):
        t = _attempt(rng, cfg)
        if t is not None:
            return t
    raise RuntimeError("no valid random triple found")


def _attempt(rng: random.Random, cfg: RandomTripleConfig):
    n = rng.randint(1, cfg.max_vertices)
    verts = [str(i) for i in range(1, n + 1)]
    special = [v for v in verts if rng.random() < cfg.special_prob]
    outd = {v: int(v in special) for v in verts}
    ind = dict(outd)
    edges: list[tuple[str, str]] = []
    for v in verts:
        if v not in special and rng.random() < cfg.loop_prob:
            edges.append((v, v))
            outd[v] += 1
            ind[v] += 1
    for _ in range(cfg.arrow_attempts_per_vertex * n):
        s, t = rng.choice(verts), rng.choice(verts)
        if s == t or outd[s] >= 2 or ind[t] >= 2:
            continue
        edges.append((s, t))
        outd[s] += 1
        ind[t] += 1
    names = iter(string.ascii_lowercase)
    arrows = [Arrow(next(names), s, t) for s, t in edges]

    # local sign patterns; the special loop is the placeholder "*v"
    sigma: dict[str, int] = {}
    tau: dict[str, int] = {}
    for v in verts:
        outs = [a.name for a in arrows if a.source == v]
        ins = [a.name for a in arrows if a.target == v]
        loops = [a.name for a in arrows if a.source == v == a.target]
        if v in special:
            loops = loops + ["*" + v]
            outs = outs + ["*" + v]
            ins = ins + ["*" + v]
        if loops:
            x = rng.choice((1, -1))
            sigma[loops[0]] = tau[loops[0]] = x
            for o in outs:
                if o != loops[0]:
                    sigma[o] = -x
            for i in ins:
                if i != loops[0]:
                    tau[i] = -x
        else:
            for group, sign in ((outs, sigma), (ins, tau)):
                x = rng.choice((1, -1))
                for k, name in enumerate(group):
                    sign[name] = x if k == 0 else -x

    rels = []
    for b in arrows:
        for a in arrows:
            if b.target == a.source and sigma[a.name] == tau[b.name]:
                rels.append((a.name, b.name))  # path ab: first b then a
    if not arrows and not special:
        return None  # the field itself
    triple = SkewGentleTriple(Quiver(tuple(verts), tuple(arrows)), special, rels)
    if not validate_skew_gentle(triple).ok:
        return None
    g = nx.Graph()
    g.add_nodes_from(verts)
    g.add_edges_from(edges)
    if not nx.is_connected(g):
        return None
    return triple


def random_corpus(count: int = 20, seed: int = 0, cfg: RandomTripleConfig = RandomTripleConfig()) -> list[SkewGentleTriple]:
    """``count`` pairwise distinct triples drawn from one seeded stream."""
    rng = random.Random(seed)
    out: dict[str, SkewGentleTriple] = {}
    for _ in range(cfg.max_tries):
        if len(out) == count:
            break
        t = random_triple(rng, cfg)
        out.setdefault(format_algebra(t), t)
    return list(out.values())
