"""Letters of the hat quiver, words, their linear orders and successors.

Words are stored in application order: ``letters[0]`` is omega_1, the letter
applied first, so the written word omega_m ... omega_1 reads right to left.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Hashable, Iterator, Optional, Sequence, Union

from .algebra import InputError, SignAssignment, SkewGentleTriple, build_sign_functions

Vertex = Hashable  # real vertices are strings, added vertices are (vertex, theta) pairs

ARR, INV, END, IEND = "arr", "inv", "end", "iend"
_KIND_RANK = {END: 0, IEND: 1, ARR: 2, INV: 3}


class WordError(ValueError):
    def __init__(self, code: str, msg: str):
        self.code = code
        super().__init__(f"{code}: {msg}")


class IncomparableError(RuntimeError):
    """Proper-prefix exhaustion in a word comparison (must never happen on inextensible words)."""


@dataclass(frozen=True)
class Letter:
    kind: str
    name: str  # arrow name, or vertex label for end letters
    sign: int = 0  # theta for end letters
    s: Vertex = field(default=None, compare=False, hash=False)
    t: Vertex = field(default=None, compare=False, hash=False)
    sigma: int = field(default=0, compare=False, hash=False)
    tau: int = field(default=0, compare=False, hash=False)
    special: bool = field(default=False, compare=False, hash=False)
    special_loop: bool = field(default=False, compare=False, hash=False)

    @property
    def is_end(self) -> bool:
        return self.kind in (END, IEND)

    @property
    def is_arrow(self) -> bool:
        return self.kind in (ARR, INV)

    def text(self) -> str:
        if self.is_arrow:
            return self.name + ("^-" if self.kind == INV else "")
        base = f"z({self.name},{'+' if self.sign > 0 else '-'})"
        return base + ("^-" if self.kind == IEND else "")

    def key(self) -> tuple:
        return (_KIND_RANK[self.kind], self.name, self.sign)

    def __repr__(self) -> str:
        return self.text()


@dataclass(frozen=True)
class Word:
    letters: tuple[Letter, ...]
    anchor: Optional[Vertex] = None  # only for trivial words

    def __post_init__(self) -> None:
        if not self.letters and self.anchor is None:
            raise WordError("empty", "trivial word needs an anchor vertex")

    # basic data
    def __len__(self) -> int:
        return len(self.letters)

    @property
    def trivial(self) -> bool:
        return not self.letters

    @property
    def s(self) -> Vertex:
        return self.letters[0].s if self.letters else self.anchor

    @property
    def t(self) -> Vertex:
        return self.letters[-1].t if self.letters else self.anchor

    @property
    def sigma(self) -> int:
        if not self.letters:
            raise WordError("trivial", "trivial words carry no sign")
        return self.letters[0].sigma

    @property
    def tau(self) -> int:
        if not self.letters:
            raise WordError("trivial", "trivial words carry no sign")
        return self.letters[-1].tau

    @property
    def left_inextensible(self) -> bool:
        return bool(self.letters) and self.letters[-1].kind == END

    @property
    def right_inextensible(self) -> bool:
        return bool(self.letters) and self.letters[0].kind == IEND

    @property
    def inextensible(self) -> bool:
        return self.left_inextensible and self.right_inextensible

    def key(self) -> tuple:
        return tuple(l.key() for l in self.letters)

    def text(self) -> str:
        if not self.letters:
            return f"1@{self.anchor}"
        return " ".join(l.text() for l in self.letters)

    def __repr__(self) -> str:
        return f"<{self.text()}>"


def inextensibility(w: Word) -> str:
    l, r = w.left_inextensible, w.right_inextensible
    return "both" if l and r else "left" if l else "right" if r else "neither"


@dataclass(frozen=True)
class TaggedWord:
    """An admissible word with tags (kappa) on its special end slots: (omega_1 slot, omega_m slot)."""

    word: Word
    tags: tuple[Optional[int], Optional[int]] = (None, None)

    def text(self) -> str:
        t = self.word.text()
        vals = [str(x) for x in self.tags if x is not None]
        return t + (f" @tags={','.join(vals)}" if vals else "")

    def key(self) -> tuple:
        return (len(self.word), self.word.key(), tuple(-1 if x is None else x for x in self.tags))

    def __repr__(self) -> str:
        return f"<{self.text()}>"


@dataclass(frozen=True)
class Trivial:
    """Result of a rotation that lands in the triangulation (zero module)."""

    def text(self) -> str:
        return "TRIVIAL"


@dataclass(frozen=True)
class SplitPair:
    """An inadmissible word F(n) standing for M(n, k_0) + M(n, k_1)."""

    word: Word
    parts: tuple[TaggedWord, TaggedWord]

    def text(self) -> str:
        return " + ".join(p.text() for p in self.parts)


RotationResult = Union[TaggedWord, Trivial, SplitPair]


@dataclass(frozen=True)
class AdmissibilityReport:
    ok: bool
    clause: Optional[str] = None  # "A1" or "A2"
    position: Optional[int] = None  # 1-based index of the offending special loop letter
    strict: Optional[bool] = None  # for A1: True when the comparison failed strictly

    def __bool__(self) -> bool:
        return self.ok


_LETTER_RE = re.compile(r"^(?:z\((?P<v>[^,()]+),(?P<s>[+-])\)|(?P<a>[^\s^()@]+))(?P<inv>\^-)?$")


class HatQuiver:
    """The letter universe of a skew-gentle triple with its ordered sets Q^(i, theta)."""

    def __init__(self, triple: SkewGentleTriple, signs: Optional[SignAssignment] = None):
        self.triple = triple
        self.signs = signs if signs is not None else build_sign_functions(triple)
        self._arrow: dict[tuple[str, bool], Letter] = {}
        self._end: dict[tuple[str, int, bool], Letter] = {}
        sg, tg = self.signs.sigma, self.signs.tau
        for a in triple.sp_arrows:
            self._arrow[(a.name, False)] = Letter(ARR, a.name, 0, a.source, a.target, sg[a.name], tg[a.name], False, a.special)
            self._arrow[(a.name, True)] = Letter(INV, a.name, 0, a.target, a.source, tg[a.name], sg[a.name], False, a.special)
        for v in triple.vertices:
            rho = sg[triple.special_loop(v)] if v in triple.special else None
            for th in (1, -1):
                sp = rho == th
                self._end[(v, th, False)] = Letter(END, v, th, v, (v, th), th, 1, sp)
                self._end[(v, th, True)] = Letter(IEND, v, th, (v, th), v, 1, th, sp)
        self._sets: dict[tuple[Vertex, int], list[Letter]] = {}
        for v in triple.vertices:
            for th in (1, -1):
                big = [l for l in self._arrow.values() if l.kind == INV and l.s == v and l.sigma == th]
                small = [l for l in self._arrow.values() if l.kind == ARR and l.s == v and l.sigma == th]
                assert len(big) <= 1 and len(small) <= 1, "sign functions are not gentle"
                self._sets[(v, th)] = big + [self._end[(v, th, False)]] + small
                self._sets[((v, th), 1)] = [self._end[(v, th, True)]]
                self._sets[((v, th), -1)] = []
        self._rank: dict[Letter, int] = {}
        for lst in self._sets.values():
            for i, l in enumerate(lst):
                self._rank[l] = i

    # -- letters ---------------------------------------------------------
    @property
    def letters(self) -> list[Letter]:
        return list(self._arrow.values()) + list(self._end.values())

    def arrow_letter(self, name: str, inverse: bool = False) -> Letter:
        try:
            return self._arrow[(name, inverse)]
        except KeyError:
            raise InputError(f"unknown arrow {name!r}") from None

    def end_letter(self, vertex: str, theta: int, inverse: bool = False) -> Letter:
        try:
            return self._end[(vertex, theta, inverse)]
        except KeyError:
            raise InputError(f"unknown end letter at {vertex!r}") from None

    def invert(self, l: Letter) -> Letter:
        if l.is_arrow:
            return self._arrow[(l.name, l.kind == ARR)]
        return self._end[(l.name, l.sign, l.kind == END)]

    def qset(self, vertex: Vertex, theta: int) -> list[Letter]:
        """Q^(vertex, theta) in decreasing order."""
        return self._sets[(vertex, theta)]

    def letter_cmp(self, a: Letter, b: Letter) -> Optional[int]:
        """Compare two letters of one ordered set; None when they lie in different sets."""
        if (a.s, a.sigma) != (b.s, b.sigma):
            return None
        ra, rb = self._rank[a], self._rank[b]
        return (ra < rb) - (ra > rb)

    def special_loop_letter(self, vertex: str) -> Letter:
        return self.arrow_letter(self.triple.special_loop(vertex))

    # -- parsing -----------------------------------------------------------
    def parse_letter(self, tok: str) -> Letter:
        m = _LETTER_RE.match(tok)
        if not m:
            raise InputError(f"bad letter {tok!r}")
        inv = bool(m.group("inv"))
        if m.group("v") is not None:
            return self.end_letter(m.group("v"), 1 if m.group("s") == "+" else -1, inv)
        return self.arrow_letter(m.group("a"), inv)

    def parse_word(self, text: str) -> Word:
        text = text.strip()
        if text.startswith("1@"):
            v = text[2:]
            if v not in self.triple.vertices:
                raise InputError(f"unknown vertex {v!r}")
            return Word((), v)
        return self.word([self.parse_letter(t) for t in text.split()])

    def parse_tagged(self, text: str, tags: Optional[Sequence[int]] = None) -> TaggedWord:
        """Parse ``word [@tags=a,b]``; tags fill the special slots in order (start, end)."""
        if "@tags=" in text:
            text, tagtxt = text.split("@tags=", 1)
            tags = [int(x) for x in tagtxt.replace(" ", "").split(",") if x]
        w = self.parse_word(text)
        return self.tag(w, list(tags or []))

    def tag(self, w: Word, values: Sequence[int]) -> TaggedWord:
        slots = [w.letters[0].special, len(w) > 1 and w.letters[-1].special] if w.letters else [False, False]
        vals = list(values)
        need = sum(slots)
        if len(vals) != need:
            raise InputError(f"word has {need} special end(s) but {len(vals)} tag(s) were given")
        out: list[Optional[int]] = []
        for sl in slots:
            out.append(vals.pop(0) if sl else None)
        for x in out:
            if x not in (None, 0, 1):
                raise InputError("tags must be 0 or 1")
        return TaggedWord(w, (out[0], out[1]))

    # -- words -------------------------------------------------------------
    def word(self, letters: Sequence[Letter]) -> Word:
        return validate_word(letters)

    def inverse(self, w: Word) -> Word:
        if w.trivial:
            return w
        return Word(tuple(self.invert(l) for l in reversed(w.letters)))

    def product(self, w1: Word, w2: Word) -> Word:
        """The product w1 w2: first w2, then w1."""
        if w2.trivial:
            if w2.anchor != w1.s:
                raise WordError("product", "non-composable")
            return w1
        if w1.trivial:
            if w1.anchor != w2.t:
                raise WordError("product", "non-composable")
            return w2
        if w2.t != w1.s or w2.tau != -w1.sigma:
            raise WordError("product", "non-composable")
        return Word(w2.letters + w1.letters)

    def subword(self, w: Word, i: int, j: int) -> Word:
        """m_(i,j) for 0 <= i < j <= m + 1 (letters omega_{i+1} .. omega_{j-1})."""
        m = len(w)
        if not (0 <= i < j <= m + 1):
            raise WordError("range", f"bad span ({i},{j})")
        if i == j - 1:
            if i == 0:
                raise WordError("range", "span (0,1) has no anchor")
            return Word((), w.letters[i - 1].t)
        return Word(w.letters[i:j - 1])

    def compare(self, m: Word, n: Word) -> int:
        """Sign of m - n in the order on words sharing (s, sigma)."""
        if m.trivial or n.trivial:
            raise IncomparableError("trivial words are not ordered")
        if (m.s, m.sigma) != (n.s, n.sigma):
            raise IncomparableError("words start in different ordered sets")
        for a, b in zip(m.letters, n.letters):
            if a != b:
                c = self.letter_cmp(a, b)
                assert c is not None
                return c
        if len(m) == len(n):
            return 0
        raise IncomparableError(f"proper prefix: {m.text()} vs {n.text()}")

    # -- successors --------------------------------------------------------
    def _continue(self, last: Letter, greatest: bool) -> list[Letter]:
        out: list[Letter] = []
        cur = last
        bound = 4 * len(self.triple.sp_arrows) + 8
        while cur.kind != END:
            opts = self.qset(cur.t, -cur.tau)
            cur = opts[0] if greatest else opts[-1]
            out.append(cur)
            if len(out) > bound:
                raise RuntimeError("unbounded continuation (infinite-dimensional algebra?)")
        return out

    def _neighbour(self, m: Word, down: bool) -> Optional[Word]:
        if not m.left_inextensible:
            raise WordError("inextensible", "successor needs a left-inextensible word")
        L = m.letters
        for k in range(len(L) - 1, -1, -1):
            opts = self.qset(L[k].s, L[k].sigma)
            r = self._rank[L[k]] + (1 if down else -1)
            if 0 <= r < len(opts):
                v = opts[r]
                return Word(L[:k] + (v,) + tuple(self._continue(v, greatest=down)))
        return None

    def successor(self, m: Word) -> Optional[Word]:
        """[1]m: the largest left-inextensible word below m."""
        return self._neighbour(m, down=True)

    def predecessor(self, m: Word) -> Optional[Word]:
        """[-1]m: the smallest left-inextensible word above m."""
        return self._neighbour(m, down=False)

    def right_successor(self, m: Word) -> Optional[Word]:
        """m[1] = ([1] m^-1)^-1."""
        r = self.successor(self.inverse(m))
        return None if r is None else self.inverse(r)

    def right_predecessor(self, m: Word) -> Optional[Word]:
        r = self.predecessor(self.inverse(m))
        return None if r is None else self.inverse(r)

    def both_successor(self, m: Word, down: bool = True) -> Optional[Word]:
        """[1]m[1] (or [-1]m[-1]); checks agreement when both bracketings exist."""
        left = self.successor if down else self.predecessor
        right = self.right_successor if down else self.right_predecessor
        a = right(m)
        a = left(a) if a is not None else None
        b = left(m)
        b = right(b) if b is not None else None
        if a is not None and b is not None and a != b:
            raise RuntimeError(f"bracketings disagree for {m.text()}")
        return a if a is not None else b

    # -- completion and admissibility ------------------------------------
    def completion(self, m: Word) -> Word:
        if not m.inextensible:
            raise WordError("inextensible", "completion needs an inextensible word")
        L = list(m.letters)
        first, last = L[0].special, L[-1].special

        def inv(seq: list[Letter]) -> list[Letter]:
            return [self.invert(l) for l in reversed(seq)]

        if not first and not last:
            return m
        if last and not first:
            eps = self.special_loop_letter(L[-1].s)
            return self.word(L[:-1] + [eps] + inv(L[:-1]))
        if first and not last:
            eps = self.special_loop_letter(L[0].t)
            return self.word(inv(L[1:]) + [eps] + L[1:])
        e1 = self.special_loop_letter(L[0].t)
        em = self.special_loop_letter(L[-1].s)
        mid = L[1:-1]
        return self.word(inv(mid) + [e1] + mid + [em])

    def admissibility(self, m: Word) -> AdmissibilityReport:
        if not m.inextensible:
            raise WordError("inextensible", "admissibility needs an inextensible word")
        L = m.letters
        for i, l in enumerate(L, start=1):
            if l.is_arrow and l.special_loop:
                left = self.inverse(Word(L[: i - 1]))
                right = Word(L[i:])
                c = self.compare(left, right)
                need = 1 if l.kind == ARR else -1
                if c != need:
                    return AdmissibilityReport(False, "A1", i, c != 0)
        if L[0].special and L[-1].special:
            f = self.completion(m).letters
            if primitive_period(f) < len(f):
                return AdmissibilityReport(False, "A2")
        return AdmissibilityReport(True)

    def is_admissible(self, m: Word) -> bool:
        return self.admissibility(m).ok

    def split_inadmissible_successor(self, w: Word) -> tuple[Word, int]:
        """For w = F(n) (up to inverse) return (n, position of the central special loop)."""
        rep = self.admissibility(w)
        if rep.ok:
            raise ValueError("word is admissible")
        if rep.clause != "A1":
            raise ValueError("only (A1) failures arise from successors")
        if rep.strict:
            raise ValueError(f"strict (A1) failure at position {rep.position}: not a completion")
        i = rep.position
        assert i is not None
        if w.letters[i - 1].kind == INV:
            w = self.inverse(w)
            i = len(w) + 1 - i
        eps = w.letters[i - 1]
        v = eps.s
        z = self.end_letter(v, eps.sigma, inverse=True)
        n = self.word([z] + list(w.letters[i:]))
        if self.completion(n) != w:
            raise RuntimeError("completion round trip failed")
        return n, rep.position

    # -- canonical forms and enumeration -----------------------------------
    def canonical(self, tw: TaggedWord) -> TaggedWord:
        w = tw.word
        inv = self.inverse(w)
        swapped = (tw.tags[1], tw.tags[0])
        a, b = w.letters[0].special, w.letters[-1].special
        if a != b:
            return tw if a else TaggedWord(inv, swapped)
        return tw if w.key() <= inv.key() else TaggedWord(inv, swapped)

    def taggings(self, w: Word) -> list[TaggedWord]:
        n = int(w.letters[0].special) + int(w.letters[-1].special)
        out = []
        for bits in range(2 ** n):
            vals = [(bits >> k) & 1 for k in reversed(range(n))]
            out.append(self.tag(w, vals))
        return out

    def inextensible_words(self, max_len: int) -> Iterator[Word]:
        """Every valid inextensible word of length <= max_len (both orientations)."""
        for v in self.triple.vertices:
            for th in (1, -1):
                start = self.end_letter(v, th, inverse=True)
                stack: list[tuple[Letter, ...]] = [(start,)]
                while stack:
                    cur = stack.pop()
                    last = cur[-1]
                    if last.kind == END:
                        yield Word(cur)
                        continue
                    if len(cur) >= max_len:
                        continue
                    for nxt in reversed(self.qset(last.t, -last.tau)):
                        stack.append(cur + (nxt,))

    def left_inextensible_words(self, vertex: Vertex, theta: int, max_len: int) -> Iterator[Word]:
        """All left-inextensible words w with (s(w), sigma(w)) = (vertex, theta) up to a length."""
        stack: list[tuple[Letter, ...]] = [(l,) for l in self.qset(vertex, theta)]
        while stack:
            cur = stack.pop()
            last = cur[-1]
            if last.kind == END:
                yield Word(cur)
                continue
            if len(cur) >= max_len:
                continue
            for nxt in self.qset(last.t, -last.tau):
                stack.append(cur + (nxt,))

    def canonical_word(self, w: Word) -> Word:
        return self.canonical(TaggedWord(w, (None, None))).word

    def admissible_words(self, max_len: int) -> list[Word]:
        seen: dict[tuple, Word] = {}
        for w in self.inextensible_words(max_len):
            if not self.is_admissible(w):
                continue
            c = self.canonical_word(w)
            seen.setdefault(c.key(), c)
        return sorted(seen.values(), key=lambda w: (len(w), w.key()))

    def enumerate_admissible(self, max_len: int) -> list[TaggedWord]:
        out = []
        for w in self.admissible_words(max_len):
            out += self.taggings(w)
        return out

    # -- tagged rotation ----------------------------------------------------
    def _as_untagged(self, w: Word) -> RotationResult:
        rep = self.admissibility(w)
        if not rep.ok:
            n, _ = self.split_inadmissible_successor(w)
            return SplitPair(w, tuple(self.canonical(t) for t in self.taggings(n)))  # type: ignore[arg-type]
        if w.letters[0].special or w.letters[-1].special:
            raise RuntimeError(f"rotation produced a special end without a tag: {w.text()}")
        return self.canonical(TaggedWord(w))

    def tagged_rotation(self, tw: TaggedWord) -> RotationResult:
        tw = self.canonical(tw)
        m = tw.word
        a, b = m.letters[0].special, m.letters[-1].special
        if a and b:
            return self.canonical(TaggedWord(m, (1 - tw.tags[0], 1 - tw.tags[1])))  # type: ignore[operator]
        if a:
            r = self.successor(m)
            if r is None:
                return Trivial()
            if r.letters[-1].special:
                raise RuntimeError(f"rotation produced a second special end: {r.text()}")
            if not self.is_admissible(r):
                raise RuntimeError(f"rotation of a one-puncture word is inadmissible: {r.text()}")
            return self.canonical(TaggedWord(r, (1 - tw.tags[0], None)))  # type: ignore[operator]
        r = self.both_successor(m)
        if r is None:
            return Trivial()
        return self._as_untagged(r)

    def is_projective(self, tw: TaggedWord) -> bool:
        return self._proj_inj(tw, down=True)

    def is_injective(self, tw: TaggedWord) -> bool:
        return self._proj_inj(tw, down=False)

    def _proj_inj(self, tw: TaggedWord, down: bool) -> bool:
        m = self.canonical(tw).word
        a, b = m.letters[0].special, m.letters[-1].special
        if a and b:
            return False
        if a:
            step = self.successor if down else self.predecessor
            return step(m) is None
        return self.both_successor(m, down) is None

    def ar_middle(self, tw: TaggedWord) -> list[TaggedWord]:
        """Indecomposable summands of the middle term of the AR sequence ending at M(tw)."""
        tw = self.canonical(tw)
        m = tw.word
        a, b = m.letters[0].special, m.letters[-1].special
        if a and b:
            raise NotImplementedError("no middle-term formula for two special ends")
        if self.is_projective(tw):
            raise ValueError("projective modules end no AR sequence")
        cands = [self.successor(self.completion(m))] if a else [self.right_successor(m), self.successor(m)]
        out: list[TaggedWord] = []
        for w in cands:
            if w is None:
                continue
            r = self._as_untagged(w)
            out += list(r.parts) if isinstance(r, SplitPair) else [r]  # type: ignore[list-item]
        return out


def validate_word(letters: Sequence[Letter]) -> Word:
    letters = tuple(letters)
    if not letters:
        raise WordError("empty", "use a trivial word with an anchor")
    for x, y in zip(letters, letters[1:]):
        if x.t != y.s:
            raise WordError("vertex-chain", f"t({x.text()}) != s({y.text()})")
        if x.tau != -y.sigma:
            raise WordError("sign-chain", f"tau({x.text()}) != -sigma({y.text()})")
    return Word(letters)


def primitive_period(seq: Sequence[object]) -> int:
    """Smallest d dividing len(seq) with seq cyclically d-periodic."""
    n = len(seq)
    for d in range(1, n + 1):
        if n % d == 0 and all(seq[i] == seq[(i + d) % n] for i in range(n)):
            return d
    return n
