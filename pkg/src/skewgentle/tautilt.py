"""Tau-rigidity, tagged triangulations, dissections and support tau-tilting modules.

Two independent routes are provided.  ``TauTilting`` works on words: rigidity
and compatibility come from combinatorial intersection numbers, maximal
collections from clique enumeration.  ``brute_force_air_oracle`` only touches
modules: it computes tau by the transpose of a minimal presentation and
checks Hom-vanishing by exact linear algebra.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence, Union

import networkx as nx

from .algebra import Idempotent, SkewGentleTriple, path_basis
from .intersections import Intersector
from .modules import (
    Prober,
    Representation,
    TransposeOracle,
    build_module,
    hom_dim_linear,
    hom_from_projective,
    zero_representation,
)
from .words import END, HatQuiver, TaggedWord


@dataclass(frozen=True)
class Curve:
    tw: TaggedWord

    def key(self) -> tuple:
        return (0, self.tw.key())

    def text(self) -> str:
        return self.tw.text()


@dataclass(frozen=True)
class Shifted:
    e: Idempotent

    def key(self) -> tuple:
        return (1, self.e.label)

    def text(self) -> str:
        return f"P[1]({self.e.label})"


GeneralizedCurve = Union[Curve, Shifted]


@dataclass(frozen=True)
class DissectionCollection:
    elements: tuple[GeneralizedCurve, ...]

    @property
    def curves(self) -> tuple[TaggedWord, ...]:
        return tuple(g.tw for g in self.elements if isinstance(g, Curve))

    @property
    def shifted(self) -> tuple[Idempotent, ...]:
        return tuple(g.e for g in self.elements if isinstance(g, Shifted))

    def text(self) -> str:
        return " ; ".join(g.text() for g in self.elements)


@dataclass(frozen=True)
class SupportTauTilting:
    triple: SkewGentleTriple
    parts: tuple[Representation, ...]
    summands: tuple[TaggedWord, ...]
    projective_part: tuple[Idempotent, ...]

    @property
    def module(self) -> Representation:
        M = zero_representation(self.triple)
        for X in self.parts:
            M = M.direct_sum(X)
        return M

    @property
    def dim_vector(self) -> tuple[int, ...]:
        dv = [0] * len(self.triple.vertices)
        for X in self.parts:
            dv = [a + b for a, b in zip(dv, X.dim_vector())]
        return tuple(dv)


def _sorted(elements: Iterable[GeneralizedCurve]) -> tuple[GeneralizedCurve, ...]:
    return tuple(sorted(elements, key=lambda g: g.key()))


def tagged_triangulation(triple: SkewGentleTriple) -> list[Shifted]:
    return [Shifted(e) for e in triple.idempotents()]


def exhaustive_within(hq: HatQuiver, max_len: int) -> bool:
    """True when no valid word is cut off by the bound, so the word universe is complete."""
    for v in hq.triple.vertices:
        for th in (1, -1):
            stack = [(hq.end_letter(v, th, inverse=True), 1)]
            while stack:
                last, n = stack.pop()
                if last.kind == END:
                    continue
                if n >= max_len:
                    return False
                stack += [(x, n + 1) for x in hq.qset(last.t, -last.tau)]
    return True


class TauTilting:
    """Word-level tau-tilting combinatorics over one hat quiver."""

    def __init__(self, hq: HatQuiver):
        self.hq = hq
        self.triple = hq.triple
        self.inter = Intersector(hq)
        self._mods: dict[TaggedWord, Representation] = {}
        self._compat: dict[tuple, bool] = {}
        self._rigid: dict[TaggedWord, bool] = {}

    def module(self, tw: TaggedWord) -> Representation:
        tw = self.hq.canonical(tw)
        if tw not in self._mods:
            self._mods[tw] = build_module(self.hq, tw)
        return self._mods[tw]

    def is_tau_rigid(self, tw: TaggedWord) -> bool:
        if tw not in self._rigid:
            self._rigid[tw] = self.inter.int_number(tw, tw).total == 0
        return self._rigid[tw]

    def compatible(self, g1: GeneralizedCurve, g2: GeneralizedCurve) -> bool:
        key = tuple(sorted((g1.key(), g2.key())))
        if key not in self._compat:
            self._compat[key] = self._compatible(g1, g2)
        return self._compat[key]

    def _compatible(self, g1: GeneralizedCurve, g2: GeneralizedCurve) -> bool:
        if isinstance(g1, Shifted) and isinstance(g2, Shifted):
            return True
        if isinstance(g1, Shifted):
            g1, g2 = g2, g1
        if isinstance(g2, Shifted):
            return hom_from_projective(g2.e, self.module(g1.tw)) == 0  # type: ignore[union-attr]
        return self.inter.int_number(g1.tw, g2.tw).total == 0  # type: ignore[union-attr]

    def enumerate_tau_rigid(self, max_len: int) -> list[TaggedWord]:
        return [tw for tw in self.hq.enumerate_admissible(max_len) if self.is_tau_rigid(tw)]

    def compatibility_graph(self, max_len: int) -> nx.Graph:
        nodes: list[GeneralizedCurve] = [Curve(tw) for tw in self.enumerate_tau_rigid(max_len)]
        nodes += tagged_triangulation(self.triple)
        g = nx.Graph()
        g.add_nodes_from(nodes)
        for i, a in enumerate(nodes):
            for b in nodes[i + 1:]:
                if self.compatible(a, b):
                    g.add_edge(a, b)
        return g

    def enumerate_dissections(self, max_len: int) -> list[DissectionCollection]:
        n = self.triple.rank()
        g = self.compatibility_graph(max_len)
        out = {_sorted(c) for c in nx.find_cliques(g) if len(c) == n}
        return [DissectionCollection(c) for c in sorted(out, key=lambda c: [x.key() for x in c])]

    def support_tau_tilting_module(self, R: DissectionCollection) -> SupportTauTilting:
        els = R.elements
        if len(els) != self.triple.rank():
            raise ValueError(f"a generalized dissection has {self.triple.rank()} elements, got {len(els)}")
        for i, a in enumerate(els):
            if isinstance(a, Curve) and not self.is_tau_rigid(a.tw):
                raise ValueError(f"{a.text()} is not tau-rigid")
            for b in els[i + 1:]:
                if not self.compatible(a, b):
                    raise ValueError(f"{a.text()} and {b.text()} intersect")
        return _assemble(self.triple, [(tw, self.module(tw)) for tw in R.curves], R.shifted)


def _assemble(triple, parts, shifted) -> SupportTauTilting:
    return SupportTauTilting(triple, tuple(X for _, X in parts), tuple(tw for tw, _ in parts), tuple(shifted))


# -- independent oracle -----------------------------------------------------


def brute_force_air_oracle(hq: HatQuiver, max_len: int) -> list[SupportTauTilting]:
    """Support tau-tilting modules found by backtracking over exact Hom computations.

    Universe: indecomposables of all admissible tagged words up to ``max_len``.
    A tau-rigid pair (M, P) is kept when it has |A| summands, which is the
    maximality criterion for tau-rigid pairs.
    """
    triple = hq.triple
    oracle = TransposeOracle(triple)
    words = hq.enumerate_admissible(max_len)
    mods = [build_module(hq, tw) for tw in words]
    taus = [oracle.tau(M) for M in mods]
    rigid = [k for k in range(len(words)) if hom_dim_linear(mods[k], taus[k]) == 0]
    idems = triple.idempotents()
    n = triple.rank()

    ok_pair: dict[tuple[int, int], bool] = {}
    for i in rigid:
        for j in rigid:
            if i < j:
                ok = hom_dim_linear(mods[i], taus[j]) == 0 and hom_dim_linear(mods[j], taus[i]) == 0
                ok_pair[(i, j)] = ok_pair[(j, i)] = ok
    ok_proj = {(e, i): hom_from_projective(e, mods[i]) == 0 for e in idems for i in rigid}

    found: list[SupportTauTilting] = []

    def grow(chosen: list[int], start: int) -> None:
        # pick module summands in increasing order, then complete with projectives
        free = [e for e in idems if all(ok_proj[(e, i)] for i in chosen)]
        if len(chosen) + len(free) == n:
            found.append(_assemble(triple, [(words[i], mods[i]) for i in chosen], free))
        if len(chosen) == n:
            return
        for pos in range(start, len(rigid)):
            k = rigid[pos]
            if all(ok_pair[(k, i)] for i in chosen):
                grow(chosen + [k], pos + 1)

    grow([], 0)
    return found


# -- cross-check ------------------------------------------------------------


@dataclass(frozen=True)
class OracleComparison:
    combinatorial: int
    oracle: int
    agree: bool
    only_combinatorial: int = 0
    only_oracle: int = 0


def module_signature(prober: Prober, summands: Sequence[Representation]) -> tuple:
    """Isomorphism invariant of a basic module: sorted fingerprints of its summands."""
    return tuple(sorted(prober.fingerprint(X) for X in summands))


class _FingerprintCache:
    def __init__(self, hq: HatQuiver, prober: Prober):
        self.hq, self.prober = hq, prober
        self.cache: dict[TaggedWord, tuple] = {}

    def of(self, tw: TaggedWord) -> tuple:
        if tw not in self.cache:
            self.cache[tw] = self.prober.fingerprint(build_module(self.hq, tw))
        return self.cache[tw]


def compare_with_oracle(hq: HatQuiver, max_len: int, prober: Optional[Prober] = None) -> OracleComparison:
    tt = TauTilting(hq)
    prober = prober or Prober(hq.triple)
    comb = [tt.support_tau_tilting_module(R) for R in tt.enumerate_dissections(max_len)]
    orac = brute_force_air_oracle(hq, max_len)

    fp = _FingerprintCache(hq, prober)

    def sigs(items: list[SupportTauTilting]) -> list[tuple]:
        return [tuple(sorted(fp.of(tw) for tw in s.summands)) for s in items]

    a, b = sigs(comb), sigs(orac)
    sa, sb = set(a), set(b)
    agree = len(sa) == len(a) and len(sb) == len(b) and sa == sb
    return OracleComparison(len(a), len(b), agree, len(sa - sb), len(sb - sa))


def dimension_of_algebra(triple: SkewGentleTriple) -> int:
    return path_basis(triple).dim
