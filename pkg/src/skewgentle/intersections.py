"""Common pairs of words, word-level Hom dimensions and intersection numbers."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Union

from .words import HatQuiver, Letter, SplitPair, TaggedWord, Trivial, Word

DIRECT, INVERTED = "direct", "inverted"


@dataclass(frozen=True)
class CommonPair:
    left: tuple[int, int]  # span (i, j) into m
    right: tuple[int, int]  # span (h, l) into n
    orientation: str
    slots: tuple[tuple[int, int], ...] = ()  # (slot of m, slot of n); slot 0 = omega_1, 1 = omega_last

    @property
    def special_count(self) -> int:
        return len(self.slots)


def _lt(hq: HatQuiver, a: Optional[Letter], b: Optional[Letter]) -> bool:
    """a < b, where None stands for a boundary position (automatically true)."""
    if a is None or b is None:
        return True
    c = hq.letter_cmp(a, b)
    return c == -1


def common_pairs(hq: HatQuiver, m: Word, n: Word) -> list[CommonPair]:
    M, N = m.letters, n.letters
    lm, ln = len(M), len(N)

    def om(k: int) -> Optional[Letter]:
        return M[k - 1] if 1 <= k <= lm else None

    def nu(k: int) -> Optional[Letter]:
        return N[k - 1] if 1 <= k <= ln else None

    def inv(x: Optional[Letter]) -> Optional[Letter]:
        return None if x is None else hq.invert(x)

    out: list[CommonPair] = []
    for i in range(0, lm + 1):
        # direct orientation: omega_{i+k} = nu_{h+k}
        for h in range(0, ln + 1):
            L = 0
            while True:
                j, l = i + L + 1, h + L + 1
                if L == 0:
                    ok = 1 <= i <= lm - 1 and 1 <= h <= ln - 1 and M[i - 1].t == N[h - 1].t
                else:
                    ok = True
                if ok and _lt(hq, inv(om(i)), inv(nu(h))) and _lt(hq, om(j), nu(l)):
                    out.append(_pair(m, n, (i, j), (h, l), DIRECT))
                if j > lm or l > ln or M[j - 1] != N[l - 1]:
                    break
                L += 1
        # inverted orientation: omega_{i+k} = nu_{l-k}^{-1}
        for l in range(1, ln + 2):
            L = 0
            while True:
                j, h = i + L + 1, l - L - 1
                if h < 0:
                    break
                if L == 0:
                    ok = 1 <= i <= lm - 1 and 1 <= h <= ln - 1 and M[i - 1].t == N[h - 1].t
                else:
                    ok = True
                if ok and _lt(hq, inv(om(i)), nu(l)) and _lt(hq, om(j), inv(nu(h))):
                    out.append(_pair(m, n, (i, j), (h, l), INVERTED))
                if j > lm or h < 1 or M[j - 1] != hq.invert(N[h - 1]):
                    break
                L += 1
    return out


def _pair(m: Word, n: Word, left: tuple[int, int], right: tuple[int, int], orient: str) -> CommonPair:
    (i, j), (h, l) = left, right
    lm, ln = len(m), len(n)
    slots = []
    if i == 0 and m.letters[0].special:
        slots.append((0, 0 if orient == DIRECT else 1))
    if j == lm + 1 and m.letters[-1].special:
        slots.append((1, 1 if orient == DIRECT else 0))
    # the matching slot of n is special as well: the letters coincide up to inversion
    return CommonPair(left, right, orient, tuple(slots))


def pair_weight(pair: CommonPair, tw1: TaggedWord, tw2: TaggedWord) -> int:
    """dim Hom over A_J of the tag modules restricted to the pair's special slots."""
    for a, b in pair.slots:
        if tw1.tags[a] != tw2.tags[b]:
            return 0
    return 1


Target = Union[TaggedWord, Trivial, SplitPair]


def hom_dim_words(hq: HatQuiver, tw1: TaggedWord, tw2: Target) -> int:
    if isinstance(tw2, Trivial):
        return 0
    if isinstance(tw2, SplitPair):
        return sum(hom_dim_words(hq, tw1, p) for p in tw2.parts)
    return sum(pair_weight(p, tw1, tw2) for p in common_pairs(hq, tw1.word, tw2.word))


@dataclass(frozen=True)
class IntersectionBreakdown:
    black_12: int
    black_21: int

    @property
    def total(self) -> int:
        return self.black_12 + self.black_21


class Intersector:
    """Caches rotations so repeated intersection queries stay cheap."""

    def __init__(self, hq: HatQuiver):
        self.hq = hq
        self._rho: dict[TaggedWord, Target] = {}

    def rho(self, tw: TaggedWord) -> Target:
        tw = self.hq.canonical(tw)
        if tw not in self._rho:
            self._rho[tw] = self.hq.tagged_rotation(tw)
        return self._rho[tw]

    def black_int(self, tw1: TaggedWord, tw2: TaggedWord) -> int:
        return hom_dim_words(self.hq, self.hq.canonical(tw1), self.rho(tw2))

    def int_number(self, tw1: TaggedWord, tw2: TaggedWord) -> IntersectionBreakdown:
        return IntersectionBreakdown(self.black_int(tw1, tw2), self.black_int(tw2, tw1))

    def int_number_gentle(self, w1: TaggedWord, w2: TaggedWord) -> int:
        if self.hq.triple.special:
            raise ValueError("the gentle formula needs an algebra without special vertices")
        return self.int_number(w1, w2).total


def black_int(hq: HatQuiver, tw1: TaggedWord, tw2: TaggedWord) -> int:
    return Intersector(hq).black_int(tw1, tw2)


def int_number(hq: HatQuiver, tw1: TaggedWord, tw2: TaggedWord) -> IntersectionBreakdown:
    return Intersector(hq).int_number(tw1, tw2)
