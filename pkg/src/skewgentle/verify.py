"""Differential checks of the word formulas against the linear-algebra oracles."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .algebra import SignAssignment, SkewGentleTriple
from .intersections import Intersector
from .modules import Prober, Representation, TransposeOracle, build_module, hom_dim_linear, module_of
from .words import HatQuiver, TaggedWord


@dataclass
class CheckReport:
    checked: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def merge(self, other: "CheckReport") -> "CheckReport":
        return CheckReport(self.checked + other.checked, self.failures + other.failures)


class Workbench:
    """Caches modules and their oracle translates for one algebra and one sign choice."""

    def __init__(self, triple: SkewGentleTriple, signs: Optional[SignAssignment] = None):
        self.triple = triple
        self.hq = HatQuiver(triple, signs)
        self.oracle = TransposeOracle(triple)
        self.inter = Intersector(self.hq)
        self._prober: Optional[Prober] = None
        self._mod: dict[TaggedWord, Representation] = {}
        self._tau: dict[TaggedWord, Representation] = {}

    @property
    def prober(self) -> Prober:
        if self._prober is None:
            self._prober = Prober(self.triple, self.oracle)
        return self._prober

    def module(self, tw: TaggedWord) -> Representation:
        if tw not in self._mod:
            self._mod[tw] = build_module(self.hq, tw)
        return self._mod[tw]

    def tau_linear(self, tw: TaggedWord) -> Representation:
        if tw not in self._tau:
            self._tau[tw] = self.oracle.tau(self.module(tw))
        return self._tau[tw]

    def words(self, max_len: int) -> list[TaggedWord]:
        return self.hq.enumerate_admissible(max_len)


def verify_tau(bench: Workbench, max_len: int) -> CheckReport:
    """Rotation versus transpose on every nonprojective word; fingerprints must agree."""
    rep = CheckReport()
    P = bench.prober
    for tw in bench.words(max_len):
        if bench.hq.is_projective(tw):
            continue
        rep.checked += 1
        rot = module_of(bench.hq, bench.hq.tagged_rotation(tw))
        lin = bench.tau_linear(tw)
        if P.fingerprint(rot) != P.fingerprint(lin):
            rep.failures.append(f"tau {tw.text()}: rotation {rot.dim_vector()} vs oracle {lin.dim_vector()}")
    return rep


def verify_int_dim(bench: Workbench, max_len: int) -> CheckReport:
    """Int = dim Hom(M1, tau M2) + dim Hom(M2, tau M1), black parts separately."""
    rep = CheckReport()
    ws = bench.words(max_len)
    black: dict[tuple[TaggedWord, TaggedWord], int] = {}
    for a in ws:
        for b in ws:
            lin = hom_dim_linear(bench.module(a), bench.tau_linear(b))
            comb = bench.inter.black_int(a, b)
            if lin != comb:
                rep.failures.append(f"black {a.text()} | {b.text()}: {comb} vs {lin}")
            black[(a, b)] = lin
    for i, a in enumerate(ws):
        for b in ws[i:]:
            rep.checked += 1
            total = bench.inter.int_number(a, b).total
            lin = black[(a, b)] + black[(b, a)]
            if total != lin:
                rep.failures.append(f"int {a.text()} | {b.text()}: {total} vs {lin}")
    return rep


def verify_successor(hq: HatQuiver, max_len: int, slack: int = 2) -> CheckReport:
    """successor(m) equals the largest word below m found by exhaustive search.

    Candidates share (s, sigma) with m and end in an end letter; the search
    bound is stretched to cover the successor itself plus ``slack``.
    """
    rep = CheckReport()
    pools: dict[tuple, list] = {}

    def pool(v, th, bound):
        key = (v, th, bound)
        if key not in pools:
            pools[key] = list(hq.left_inextensible_words(v, th, bound))
        return pools[key]

    for v in hq.triple.vertices:
        for th in (1, -1):
            for m in pool(v, th, max_len):
                rep.checked += 1
                got = hq.successor(m)
                bound = max(max_len, len(got) if got is not None else 0) + slack
                want = _max_below(hq, m, pool(v, th, bound))
                if (got is None) != (want is None) or (got is not None and got.key() != want.key()):
                    rep.failures.append(f"successor {m.text()}: {got and got.text()} vs {want and want.text()}")
    return rep


def _max_below(hq: HatQuiver, m, pool):
    best = None
    for n in pool:
        if hq.compare(n, m) < 0 and (best is None or hq.compare(n, best) > 0):
            best = n
    return best


def regauge(hq_to: HatQuiver, tw: TaggedWord, vertex: str) -> TaggedWord:
    """The same tagged word after flipping every sign at ``vertex``: z(v, t) becomes z(v, -t)."""
    from .words import END, IEND, Word

    out = []
    for l in tw.word.letters:
        if l.kind in (END, IEND):
            th = -l.sign if l.name == vertex else l.sign
            out.append(hq_to.end_letter(l.name, th, inverse=l.kind == IEND))
        else:
            out.append(hq_to.arrow_letter(l.name, inverse=l.kind != "arr"))
    return TaggedWord(Word(tuple(out)), tw.tags)
