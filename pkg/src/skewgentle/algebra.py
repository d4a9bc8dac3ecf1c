"""Quivers, gentle pairs, skew-gentle triples, sign functions and path bases.

Conventions
-----------
A relation token ``rel x y`` is the path ``xy`` read right to left: first
``y``, then ``x``.  Internally paths are stored in *application order*
(first traversed arrow first), so ``rel x y`` becomes the pair ``(y, x)``.
"""

from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Mapping, Optional


class InputError(ValueError):
    """Malformed input text or structurally invalid data."""

    def __init__(self, msg: str, line: int | None = None, col: int | None = None):
        self.line = line
        self.col = col
        where = ""
        if line is not None:
            where = f"line {line}" + (f", column {col}" if col is not None else "") + ": "
        super().__init__(where + msg)


class ValidationError(ValueError):
    """Well-formed input that fails a mathematical condition."""


@dataclass(frozen=True)
class Arrow:
    name: str
    source: str
    target: str
    special: bool = False

    @property
    def is_loop(self) -> bool:
        return self.source == self.target


@dataclass(frozen=True)
class Quiver:
    vertices: tuple[str, ...]
    arrows: tuple[Arrow, ...]

    def __post_init__(self) -> None:
        names = [a.name for a in self.arrows]
        if len(set(names)) != len(names):
            raise InputError("duplicate arrow name")
        if len(set(self.vertices)) != len(self.vertices):
            raise InputError("duplicate vertex")
        vs = set(self.vertices)
        for a in self.arrows:
            if a.source not in vs or a.target not in vs:
                raise InputError(f"arrow {a.name} uses an undeclared vertex")

    def arrow(self, name: str) -> Arrow:
        for a in self.arrows:
            if a.name == name:
                return a
        raise InputError(f"unknown arrow {name!r}")

    def out_arrows(self, v: str) -> list[Arrow]:
        return [a for a in self.arrows if a.source == v]

    def in_arrows(self, v: str) -> list[Arrow]:
        return [a for a in self.arrows if a.target == v]


@dataclass
class ValidationReport:
    violations: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def __str__(self) -> str:
        return "OK" if self.ok else "; ".join(self.violations)


def _zero_pairs(quiver: Quiver, relations: Iterable[tuple[str, str]]) -> set[tuple[str, str]]:
    """Convert written-order relation tokens ``(x, y)`` to application pairs ``(y, x)``."""
    out = set()
    for x, y in relations:
        ax, ay = quiver.arrow(x), quiver.arrow(y)
        if ay.target != ax.source:
            raise InputError(f"relation {x}{y} is not a path")
        out.add((y, x))
    return out


def validate_gentle_pair(quiver: Quiver, relations: Iterable[tuple[str, str]]) -> ValidationReport:
    """Check G1-G4 together with the at-most-one-loop and finiteness conditions."""
    zero = _zero_pairs(quiver, relations)
    rep = ValidationReport()
    for v in quiver.vertices:
        if len(quiver.out_arrows(v)) > 2:
            rep.violations.append(f"G1: vertex {v} starts more than two arrows")
        if len(quiver.in_arrows(v)) > 2:
            rep.violations.append(f"G1: vertex {v} ends more than two arrows")
        loops = [a.name for a in quiver.arrows if a.source == v and a.is_loop]
        if len(loops) > 1:
            rep.violations.append(f"loops: vertex {v} carries {len(loops)} loops")
    for a in quiver.arrows:
        after = quiver.out_arrows(a.target)
        rel = [b.name for b in after if (a.name, b.name) in zero]
        non = [b.name for b in after if (a.name, b.name) not in zero]
        if len(rel) > 1 or len(non) > 1:
            rep.violations.append(f"G3: arrow {a.name}")
        before = quiver.in_arrows(a.source)
        rel = [b.name for b in before if (b.name, a.name) in zero]
        non = [b.name for b in before if (b.name, a.name) not in zero]
        if len(rel) > 1 or len(non) > 1:
            rep.violations.append(f"G4: arrow {a.name}")
    if rep.ok and _has_infinite_path(quiver, zero):
        rep.violations.append("infinite-dimensional: unbounded relation-free path")
    return rep


def _successor_map(quiver: Quiver, zero: set[tuple[str, str]]) -> dict[str, list[str]]:
    return {
        a.name: [b.name for b in quiver.out_arrows(a.target) if (a.name, b.name) not in zero]
        for a in quiver.arrows
    }


def _has_infinite_path(quiver: Quiver, zero: set[tuple[str, str]]) -> bool:
    succ = _successor_map(quiver, zero)
    n = len(quiver.arrows)
    cap = n * 2 ** min(n, 20) + 1
    # colour-based cycle detection on the relation-free successor graph
    state: dict[str, int] = {}
    steps = 0

    def visit(start: str) -> bool:
        nonlocal steps
        stack = [(start, iter(succ[start]))]
        state[start] = 1
        while stack:
            node, it = stack[-1]
            nxt = next(it, None)
            steps += 1
            if steps > cap:
                return True
            if nxt is None:
                state[node] = 2
                stack.pop()
            elif state.get(nxt) == 1:
                return True
            elif nxt not in state:
                state[nxt] = 1
                stack.append((nxt, iter(succ[nxt])))
        return False

    return any(visit(a.name) for a in quiver.arrows if a.name not in state)


@dataclass(frozen=True)
class Idempotent:
    """A primitive idempotent: ``flag`` is None (ordinary vertex), 1 for e_i eps_i, 0 for e_i(1 - eps_i)."""

    vertex: str
    flag: Optional[int] = None

    @property
    def label(self) -> str:
        return self.vertex if self.flag is None else f"{self.vertex}:{self.flag}"

    @staticmethod
    def parse(text: str) -> "Idempotent":
        if ":" in text:
            v, f = text.rsplit(":", 1)
            return Idempotent(v, int(f))
        return Idempotent(text)


@dataclass(frozen=True)
class Path:
    start: str
    arrows: tuple[str, ...] = ()

    def __str__(self) -> str:
        if not self.arrows:
            return f"e{self.start}" if not self.start[:1].isalpha() else f"e_{self.start}"
        # written order: last traversed arrow written first
        return "".join(reversed(self.arrows)) if all(len(a) == 1 for a in self.arrows) else "*".join(reversed(self.arrows))


class SkewGentleTriple:
    """A skew-gentle triple (Q, Sp, I) and the derived data of Q^sp, I^sp."""

    def __init__(self, quiver: Quiver, special: Iterable[str], relations: Iterable[tuple[str, str]]):
        self.quiver = quiver
        self.special: tuple[str, ...] = tuple(v for v in quiver.vertices if v in set(special))
        unknown = set(special) - set(quiver.vertices)
        if unknown:
            raise InputError(f"special vertex {sorted(unknown)[0]} is not declared")
        self.relations: tuple[tuple[str, str], ...] = tuple(sorted(set(relations)))
        for x, y in self.relations:
            for n in (x, y):
                quiver.arrow(n)
        names = {a.name for a in quiver.arrows}
        self.loop_name: dict[str, str] = {}
        for v in self.special:
            nm = f"e{v}"
            while nm in names:
                nm = "_" + nm
            self.loop_name[v] = nm
            names.add(nm)
        sp_arrows = list(quiver.arrows) + [Arrow(self.loop_name[v], v, v, True) for v in self.special]
        self.sp_quiver = Quiver(quiver.vertices, tuple(sp_arrows))
        self.arrow_map: dict[str, Arrow] = {a.name: a for a in sp_arrows}
        self.zero: frozenset[tuple[str, str]] = frozenset(
            _zero_pairs(quiver, self.relations) | {(self.loop_name[v],) * 2 for v in self.special}
        )

    # -- basic queries -------------------------------------------------
    @property
    def vertices(self) -> tuple[str, ...]:
        return self.quiver.vertices

    @property
    def sp_arrows(self) -> tuple[Arrow, ...]:
        return self.sp_quiver.arrows

    def arrow(self, name: str) -> Arrow:
        try:
            return self.arrow_map[name]
        except KeyError:
            raise InputError(f"unknown arrow {name!r}") from None

    def is_special_loop(self, name: str) -> bool:
        return name in self.arrow_map and self.arrow_map[name].special

    def special_loop(self, v: str) -> str:
        return self.loop_name[v]

    def composable(self, first: str, then: str) -> bool:
        return self.arrow(first).target == self.arrow(then).source

    def is_zero_pair(self, first: str, then: str) -> bool:
        """True iff the length-2 path "first, then" lies in I^sp."""
        return (first, then) in self.zero

    def sp_relations_written(self) -> list[tuple[str, str]]:
        """I^sp as written-order tokens (x, y) meaning the path xy."""
        return sorted((b, a) for a, b in self.zero)

    def __repr__(self) -> str:
        return f"SkewGentleTriple(vertices={self.vertices}, special={self.special}, relations={self.relations})"

    # -- structure -----------------------------------------------------
    def validate(self) -> ValidationReport:
        return validate_skew_gentle(self)

    def idempotents(self) -> list[Idempotent]:
        out = []
        for v in self.vertices:
            if v in self.special:
                out += [Idempotent(v, 1), Idempotent(v, 0)]
            else:
                out.append(Idempotent(v))
        return out

    def rank(self) -> int:
        return len(self.vertices) + len(self.special)

    def path_end(self, p: Path) -> str:
        return self.arrow(p.arrows[-1]).target if p.arrows else p.start

    def compose(self, p: Path, q: Path) -> Optional[Path]:
        """Product in A = kQ^sp / I^sg of basis paths: first ``p``, then ``q``.

        Returns None for zero.  The product of two basis paths is zero or a single basis path
        because eps^2 = eps merges at the junction and the remaining junctions were already valid.
        """
        if self.path_end(p) != q.start:
            return None
        if not p.arrows:
            return q
        if not q.arrows:
            return p
        a, b = p.arrows[-1], q.arrows[0]
        if (a, b) in self.zero:
            if a == b and self.is_special_loop(a):
                return Path(p.start, p.arrows + q.arrows[1:])
            return None
        return Path(p.start, p.arrows + q.arrows)


def validate_skew_gentle(triple: SkewGentleTriple) -> ValidationReport:
    rep = ValidationReport()
    for v in triple.special:
        if any(a.is_loop and not a.special for a in triple.quiver.out_arrows(v)):
            rep.violations.append(f"loops: special vertex {v} already carries a loop")
    for x, y in triple.relations:
        if triple.is_special_loop(x) or triple.is_special_loop(y):
            rep.violations.append("relations may not mention special loops")
    sub = validate_gentle_pair(triple.sp_quiver, triple.sp_relations_written())
    rep.violations += sub.violations
    return rep


@dataclass(frozen=True)
class SignAssignment:
    sigma: Mapping[str, int]
    tau: Mapping[str, int]

    def flipped_at(self, triple: SkewGentleTriple, vertex: str) -> "SignAssignment":
        """Flip every sign variable living at ``vertex`` (one connected sign-orbit)."""
        sg = dict(self.sigma)
        tg = dict(self.tau)
        for a in triple.sp_arrows:
            if a.source == vertex:
                sg[a.name] = -sg[a.name]
            if a.target == vertex:
                tg[a.name] = -tg[a.name]
        return SignAssignment(sg, tg)


def sign_violations(triple: SkewGentleTriple, signs: SignAssignment) -> list[str]:
    """All failures of the sign-function axioms (empty list = valid)."""
    bad = []
    arrows = triple.sp_arrows
    for a in arrows:
        for b in arrows:
            if a.target == b.source:
                if triple.is_zero_pair(a.name, b.name) != (signs.sigma[b.name] == signs.tau[a.name]):
                    bad.append(f"relation criterion at {b.name}{a.name}")
            if a.name < b.name and a.source == b.source and signs.sigma[a.name] == signs.sigma[b.name]:
                bad.append(f"sigma not distinct on {a.name},{b.name}")
            if a.name < b.name and a.target == b.target and signs.tau[a.name] == signs.tau[b.name]:
                bad.append(f"tau not distinct on {a.name},{b.name}")
    return bad


def build_sign_functions(triple: SkewGentleTriple) -> SignAssignment:
    """Deterministic sigma/tau by propagation over the endpoint constraint graph."""
    arrows = sorted(triple.sp_arrows, key=lambda a: a.name)
    # variables: (name, 's') = sigma, (name, 't') = tau; edges carry parity (0 equal, 1 opposite)
    adj: dict[tuple[str, str], list[tuple[tuple[str, str], int]]] = {}
    for a in arrows:
        adj[(a.name, "s")] = []
        adj[(a.name, "t")] = []

    def link(u: tuple[str, str], v: tuple[str, str], parity: int) -> None:
        adj[u].append((v, parity))
        adj[v].append((u, parity))

    for a in arrows:
        for b in arrows:
            if a.target == b.source:
                link((a.name, "t"), (b.name, "s"), 0 if triple.is_zero_pair(a.name, b.name) else 1)
            if a.name < b.name and a.source == b.source:
                link((a.name, "s"), (b.name, "s"), 1)
            if a.name < b.name and a.target == b.target:
                link((a.name, "t"), (b.name, "t"), 1)
    value: dict[tuple[str, str], int] = {}
    for a in arrows:
        for var in ((a.name, "s"), (a.name, "t")):
            if var in value:
                continue
            value[var] = 1
            queue = deque([var])
            while queue:
                u = queue.popleft()
                for w, par in adj[u]:
                    want = value[u] * (-1 if par else 1)
                    if w in value:
                        if value[w] != want:
                            raise ValidationError("no consistent sign assignment (not gentle)")
                    else:
                        value[w] = want
                        queue.append(w)
    return SignAssignment(
        {a.name: value[(a.name, "s")] for a in arrows},
        {a.name: value[(a.name, "t")] for a in arrows},
    )


@dataclass(frozen=True)
class AlgebraBasis:
    paths: tuple[Path, ...]
    idempotents: tuple[Idempotent, ...]

    @property
    def dim(self) -> int:
        return len(self.paths)


def relation_free_paths(triple: SkewGentleTriple) -> Iterator[Path]:
    """All nontrivial paths of Q^sp avoiding I^sp, in a deterministic order."""
    zero = triple.zero
    for a in triple.sp_arrows:
        path = [a.name]
        seen = {a.name}
        while True:
            yield Path(a.source, tuple(path))
            nxt = [b.name for b in triple.sp_arrows if b.source == triple.arrow(path[-1]).target and (path[-1], b.name) not in zero]
            if not nxt:
                break
            if len(nxt) > 1:
                raise ValidationError("not gentle: two relation-free continuations")
            if len(path) > 4 * len(triple.sp_arrows) + 4:
                raise ValidationError("infinite-dimensional algebra")
            path.append(nxt[0])
            seen.add(nxt[0])


def path_basis(triple: SkewGentleTriple) -> AlgebraBasis:
    paths = [Path(v) for v in triple.vertices] + list(relation_free_paths(triple))
    order = {v: i for i, v in enumerate(triple.vertices)}
    paths.sort(key=lambda p: (len(p.arrows), order[p.start], p.arrows))
    return AlgebraBasis(tuple(paths), tuple(triple.idempotents()))


# ----------------------------------------------------------------------
# text format
_TOKEN = re.compile(r"\S+")


def parse_algebra(text: str) -> SkewGentleTriple:
    vertices: list[str] = []
    special: list[str] = []
    arrows: list[Arrow] = []
    rels: list[tuple[str, str]] = []
    for ln, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        toks = [(m.group(), m.start() + 1) for m in _TOKEN.finditer(line)]
        if not toks:
            continue
        kw, col = toks[0]
        args = [t for t, _ in toks[1:]]
        if kw == "vertices":
            vertices += args
        elif kw == "special":
            special += args
        elif kw in ("arrow", "loop"):
            need = 3 if kw == "arrow" else 2
            if len(args) != need:
                raise InputError(f"'{kw}' expects {need} arguments", ln, col)
            src, tgt = (args[1], args[2]) if kw == "arrow" else (args[1], args[1])
            for v in (src, tgt):
                if v not in vertices:
                    raise InputError(f"undeclared vertex {v!r}", ln, col)
            arrows.append(Arrow(args[0], src, tgt))
        elif kw == "rel":
            if len(args) != 2:
                raise InputError("'rel' expects two arrow names", ln, col)
            known = {a.name for a in arrows}
            for a in args:
                if a not in known:
                    raise InputError(f"unknown arrow {a!r} in relation", ln, col)
            rels.append((args[0], args[1]))
        else:
            raise InputError(f"unknown keyword {kw!r}", ln, col)
    if not vertices:
        raise InputError("no vertices declared")
    try:
        return SkewGentleTriple(Quiver(tuple(vertices), tuple(arrows)), special, rels)
    except InputError as exc:
        raise InputError(str(exc)) from None


def format_algebra(triple: SkewGentleTriple) -> str:
    lines = ["vertices " + " ".join(triple.vertices)]
    if triple.special:
        lines.append("special " + " ".join(triple.special))
    for a in triple.quiver.arrows:
        if a.is_loop:
            lines.append(f"loop {a.name} {a.source}")
        else:
            lines.append(f"arrow {a.name} {a.source} {a.target}")
    for x, y in triple.relations:
        lines.append(f"rel {x} {y}")
    return "\n".join(lines) + "\n"


def load_algebra(path: str) -> SkewGentleTriple:
    with open(path, encoding="utf-8") as fh:
        return parse_algebra(fh.read())
