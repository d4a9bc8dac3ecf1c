"""Punctured marked surfaces, admissible partial triangulations and skew-tiling algebras.

The embedding is encoded purely combinatorially.  Every marked point carries
a *fan*: the anticlockwise list of arc-ends strictly between its two
boundary segments.  Boundary components list their marked points in the
direction that keeps the surface on the left (anticlockwise for the outer
circle of a disc).  At a marked point ``m`` the anticlockwise rotation is

    segment towards next(m), fan entries ..., segment from prev(m)

and the exterior of the surface sits between the last and first entries.
Regions are recovered as orbits of the face walk "reverse the dart, then
turn clockwise", which traces each region with its interior on the left.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Optional

from .algebra import Arrow, InputError, Quiver, SkewGentleTriple, ValidationReport

# -- data -------------------------------------------------------------------


@dataclass(frozen=True)
class Boundary:
    name: str
    points: tuple[str, ...]  # empty = unmarked component


@dataclass(frozen=True)
class MarkedSurface:
    boundaries: tuple[Boundary, ...]
    punctures: tuple[str, ...] = ()

    def __post_init__(self) -> None:
        if not self.boundaries:
            raise InputError("a surface needs at least one boundary component")
        if not self.marked_points:
            raise InputError("a surface needs at least one marked point")
        pts = self.marked_points
        if len(set(pts)) != len(pts):
            raise InputError("marked point listed on two boundary positions")

    @property
    def marked_points(self) -> tuple[str, ...]:
        return tuple(p for b in self.boundaries for p in b.points)

    @property
    def unmarked(self) -> tuple[str, ...]:
        return tuple(b.name for b in self.boundaries if not b.points)

    def neighbours(self, m: str) -> tuple[str, str]:
        """(prev, next) of ``m`` along its boundary component."""
        for b in self.boundaries:
            if m in b.points:
                k = b.points.index(m)
                n = len(b.points)
                return b.points[(k - 1) % n], b.points[(k + 1) % n]
        raise KeyError(m)


@dataclass(frozen=True)
class ArcEnd:
    arc: str
    end: int  # 0 or 1

    def text(self) -> str:
        return f"{self.arc}.end{self.end}"


@dataclass(frozen=True)
class Arc:
    name: str
    ends: tuple[str, str]  # marked points of end0, end1

    @property
    def is_loop(self) -> bool:
        return self.ends[0] == self.ends[1]


@dataclass(frozen=True)
class PartialTriangulation:
    arcs: tuple[Arc, ...]
    fans: dict[str, tuple[ArcEnd, ...]]  # marked point -> anticlockwise arc-ends
    enclosures: dict[str, str]  # puncture -> enclosing arc
    # optional arrow names between consecutive fan entries: (point, index k) names k -> k+1
    arrow_names: dict[tuple[str, int], str] = field(default_factory=dict)

    def arc(self, name: str) -> Arc:
        for a in self.arcs:
            if a.name == name:
                return a
        raise KeyError(name)


@dataclass(frozen=True)
class Region:
    kind: str  # "I", "II", "III", "IV" or "other"
    sides: tuple[str, ...]  # anticlockwise: arc names, or "~B" for a boundary segment of B
    corners: tuple[str, ...]  # marked point at the start of each side
    holes: tuple[str, ...] = ()  # inferred unmarked boundary / puncture inside


@dataclass(frozen=True)
class RegionReport:
    regions: tuple[Region, ...]
    notes: tuple[str, ...] = ()

    def count(self, kind: str) -> int:
        return sum(r.kind == kind for r in self.regions)

    @property
    def typed(self) -> bool:
        return all(r.kind != "other" for r in self.regions)


# -- parsing ------------------------------------------------------------------

_TOKEN = re.compile(r"\S+")
_END = re.compile(r"^(.+)\.end([01])$")
_NAME = re.compile(r"^\((.+)\)$")


def parse_surface(text: str) -> tuple[MarkedSurface, PartialTriangulation]:
    boundaries: list[Boundary] = []
    punctures: list[str] = []
    arcs: list[Arc] = []
    fan_lines: list[tuple[int, str, list[tuple[str, int]]]] = []
    encl: dict[str, str] = {}
    for ln, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        toks = [(m.group(), m.start() + 1) for m in _TOKEN.finditer(line)]
        if not toks:
            continue
        kw, col = toks[0]
        args = toks[1:]
        if kw == "boundary":
            if not args:
                raise InputError("'boundary' needs a name", ln, col)
            boundaries.append(Boundary(args[0][0], tuple(t for t, _ in args[1:])))
        elif kw == "puncture":
            punctures += [t for t, _ in args]
        elif kw == "arc":
            if len(args) != 3:
                raise InputError("'arc' expects a name and two endpoints", ln, col)
            arcs.append(Arc(args[0][0], (args[1][0], args[2][0])))
        elif kw == "fan":
            if len(args) < 2 or args[1][0] != ":":
                raise InputError("'fan' expects 'fan POINT : entries...'", ln, col)
            fan_lines.append((ln, args[0][0], args[2:]))
        elif kw == "enclose":
            if len(args) != 2:
                raise InputError("'enclose' expects an arc and a puncture", ln, col)
            arc, p = args[0][0], args[1][0]
            if p in encl:
                raise InputError(f"puncture {p} enclosed twice", ln, args[1][1])
            encl[p] = arc
        else:
            raise InputError(f"unknown keyword {kw!r}", ln, col)

    try:
        surface = MarkedSurface(tuple(boundaries), tuple(punctures))
    except InputError as exc:
        raise InputError(str(exc)) from None
    names = {a.name for a in arcs}
    if len(names) != len(arcs):
        raise InputError("duplicate arc name")
    marked = set(surface.marked_points)
    for a in arcs:
        for e in a.ends:
            if e not in marked:
                if e in punctures:
                    raise InputError(f"arc {a.name} ends at puncture {e}")
                raise InputError(f"arc {a.name} ends at unknown point {e}")

    fans: dict[str, tuple[ArcEnd, ...]] = {}
    arrow_names: dict[tuple[str, int], str] = {}
    for ln, point, entries in fan_lines:
        if point not in marked:
            raise InputError(f"fan at unknown marked point {point!r}", ln)
        if point in fans:
            raise InputError(f"second fan for {point}", ln)
        ends: list[ArcEnd] = []
        pending: Optional[str] = None
        for tok, col in entries:
            m = _NAME.match(tok)
            if m:
                if not ends or pending is not None:
                    raise InputError("arrow name must sit between two fan entries", ln, col)
                pending = m.group(1)
                continue
            me = _END.match(tok)
            arc_name, end = (me.group(1), int(me.group(2))) if me else (tok, None)
            if arc_name not in names:
                raise InputError(f"unknown arc {arc_name!r} in fan", ln, col)
            arc = next(a for a in arcs if a.name == arc_name)
            if end is None:
                if arc.is_loop:
                    raise InputError(f"loop arc {arc_name} needs .end0/.end1 in fans", ln, col)
                end = arc.ends.index(point) if point in arc.ends else -1
            if end < 0 or arc.ends[end] != point:
                raise InputError(f"arc-end {arc_name}.end{end} does not sit at {point}", ln, col)
            if pending is not None:
                arrow_names[(point, len(ends) - 1)] = pending
                pending = None
            ends.append(ArcEnd(arc_name, end))
        if pending is not None:
            raise InputError("arrow name must sit between two fan entries", ln)
        fans[point] = tuple(ends)
    return surface, PartialTriangulation(tuple(arcs), fans, encl, arrow_names)


def load_surface(path: str) -> tuple[MarkedSurface, PartialTriangulation]:
    with open(path, encoding="utf-8") as fh:
        return parse_surface(fh.read())


# -- validation ---------------------------------------------------------------


def validate_admissible(surface: MarkedSurface, tri: PartialTriangulation) -> ValidationReport:
    bad: list[str] = []
    seen: dict[ArcEnd, str] = {}
    for point, ends in tri.fans.items():
        for e in ends:
            if e in seen:
                bad.append(f"duplicated arc-end {e.text()}")
            seen[e] = point
    for a in tri.arcs:
        for k in (0, 1):
            if ArcEnd(a.name, k) not in seen:
                bad.append(f"dangling arc-end {a.name}.end{k}")
    punct = set(surface.punctures)
    for a in tri.arcs:
        for e in a.ends:
            if e in punct:
                bad.append(f"arc {a.name} ends at puncture {e}")
    for p in surface.punctures:
        arc = tri.enclosures.get(p)
        if arc is None:
            bad.append(f"unenclosed puncture {p}")
            continue
        if arc not in {a.name for a in tri.arcs}:
            bad.append(f"puncture {p} enclosed by unknown arc {arc}")
            continue
        if _monogon_corner(tri, arc) is None:
            bad.append(f"arc {arc} enclosing {p} does not bound a monogon")
    for p in tri.enclosures:
        if p not in punct:
            bad.append(f"enclosure of undeclared puncture {p}")
    arcs = list(tri.enclosures.values())
    for a in set(arcs):
        if arcs.count(a) > 1:
            bad.append(f"arc {a} encloses more than one puncture")
    return ValidationReport(tuple(bad))


def _monogon_corner(tri: PartialTriangulation, arc: str) -> Optional[tuple[str, int]]:
    """(point, k) with fan entries k, k+1 the two ends of the loop ``arc``."""
    for point, ends in tri.fans.items():
        for k in range(len(ends) - 1):
            if ends[k].arc == arc == ends[k + 1].arc:
                return point, k
    return None


# -- regions ------------------------------------------------------------------

# An edge end in the ribbon graph: an arc-end, or a boundary segment end
# ("seg", point, "out"|"in") where "out" heads to next(point).
Dart = tuple


def _rotation(surface: MarkedSurface, tri: PartialTriangulation, m: str) -> list[Dart]:
    prev, nxt = surface.neighbours(m)
    return [("seg", m, "out")] + [("arc", e.arc, e.end) for e in tri.fans.get(m, ())] + [("seg", m, "in")]


def _far(surface: MarkedSurface, tri: PartialTriangulation, d: Dart) -> tuple[str, Dart]:
    """The opposite end of the edge starting at ``d``: (its point, its dart)."""
    if d[0] == "arc":
        arc = tri.arc(d[1])
        other = 1 - d[2]
        return arc.ends[other], ("arc", d[1], other)
    _, m, way = d
    prev, nxt = surface.neighbours(m)
    if way == "out":
        return nxt, ("seg", nxt, "in")
    return prev, ("seg", prev, "out")


def _boundary_of(surface: MarkedSurface, m: str) -> str:
    return next(b.name for b in surface.boundaries if m in b.points)


def _faces(surface: MarkedSurface, tri: PartialTriangulation) -> list[list[tuple[str, Dart]]]:
    """Interior face orbits; each step is (corner point, dart leaving it)."""
    rot = {m: _rotation(surface, tri, m) for m in surface.marked_points}
    seen: set[tuple[str, Dart]] = set()
    faces = []
    for m in surface.marked_points:
        for d in rot[m]:
            if (m, d) in seen:
                continue
            orbit = []
            outside = False
            cur = (m, d)
            while cur not in seen:
                seen.add(cur)
                orbit.append(cur)
                q, back = _far(surface, tri, cur[1])
                r = rot[q]
                k = r.index(back)
                if k == 0:
                    outside = True  # wrapped through the exterior
                cur = (q, r[k - 1])
            if not outside:
                faces.append(orbit)
    return faces


def classify_regions(surface: MarkedSurface, tri: PartialTriangulation) -> RegionReport:
    broken = [v for v in validate_admissible(surface, tri).violations if v.startswith(("dangling", "duplicated"))]
    if broken:
        raise InputError("malformed fans: " + "; ".join(broken))
    enclosing = {a: p for p, a in tri.enclosures.items()}
    raw = []
    for orbit in _faces(surface, tri):
        sides = tuple(d[1] if d[0] == "arc" else "~" + _boundary_of(surface, m) for m, d in orbit)
        corners = tuple(m for m, _ in orbit)
        raw.append((orbit, sides, corners))

    # a monogon or a digon of two arcs must hold a hole (else an arc is trivial
    # or two arcs coincide); a digon with a boundary side only may
    holes_left = list(surface.unmarked)
    notes: list[str] = []

    def take() -> tuple[str, ...]:
        if holes_left:
            return (holes_left.pop(0),)
        notes.append("a monogon or digon of arcs has no unmarked boundary left to hold")
        return ("?",)

    def rank(item) -> int:
        sides = item[1]
        if len(sides) == 1:
            return 0 if sides[0] in enclosing else 1
        if len(sides) == 2:
            return 2 if all(not x.startswith("~") for x in sides) else 3
        return 4

    regions: list[Region] = []
    for _, sides, corners in sorted(raw, key=rank):
        r = rank((None, sides))
        if r == 0:
            regions.append(Region("IV", sides, corners, (enclosing[sides[0]],)))
        elif r == 1:
            regions.append(Region("II", sides, corners, take()))
        elif r == 2:
            regions.append(Region("III", sides, corners, take()))
        elif r == 3:
            regions.append(Region("III", sides, corners, take()) if holes_left else Region("other", sides, corners))
        else:
            regions.append(Region("other" if holes_left else "I", sides, corners))
    if holes_left:
        notes.append("unmarked boundary components not placed: " + " ".join(holes_left))
    return RegionReport(tuple(regions), tuple(notes))


# -- the skew-tiling algebra --------------------------------------------------


def tiling_arrows(tri: PartialTriangulation) -> list[tuple[str, str, str, str, ArcEnd, ArcEnd]]:
    """(name, source arc, target arc, point, source end, target end) per fan adjacency."""
    out = []
    used: set[str] = set()
    for point in sorted(tri.fans):
        ends = tri.fans[point]
        for k in range(len(ends) - 1):
            a, b = ends[k], ends[k + 1]
            name = tri.arrow_names.get((point, k))
            if name is None:
                name = f"e{a.arc}" if a.arc == b.arc else f"{a.arc}_{b.arc}"
                base, i = name, 1
                while name in used:
                    i += 1
                    name = f"{base}_{i}"
            if name in used:
                raise InputError(f"arrow name {name!r} used twice")
            used.add(name)
            out.append((name, a.arc, b.arc, point, a, b))
    return out


def tiling_algebra(surface: MarkedSurface, tri: PartialTriangulation) -> SkewGentleTriple:
    report = validate_admissible(surface, tri)
    if not report.ok:
        raise InputError("inadmissible triangulation: " + "; ".join(report.violations))
    special = [tri.enclosures[p] for p in surface.punctures]
    rows = tiling_arrows(tri)
    vertices = tuple(a.name for a in tri.arcs)
    ordinary = [r for r in rows if not (r[1] == r[2] and r[1] in special)]
    arrows = tuple(Arrow(n, s, t) for n, s, t, *_ in ordinary)
    # written-order token (x, y): first y then x; zero iff y ends at a different arc-end than x starts
    rels = [(x[0], y[0]) for y in rows for x in rows if y[2] == x[1] and y[5] != x[4]]
    specials = {r[0] for r in rows if r[1] == r[2] and r[1] in special}
    rels = [(x, y) for x, y in rels if not (x in specials and y in specials)]
    triple = SkewGentleTriple(Quiver(vertices, arrows), special, _rename(rels, rows, specials))
    return triple


def _rename(rels, rows, specials):
    """Relations through a special loop use the triple's implicit loop name."""
    if not specials:
        return rels
    loop_of = {r[0]: f"e{r[1]}" for r in rows if r[0] in specials}
    bad = [n for n, v in loop_of.items() if n != v]
    if bad:
        raise InputError(f"special loop {bad[0]!r} must be named {loop_of[bad[0]]!r}")
    return rels


def relation_report(triple: SkewGentleTriple) -> list[str]:
    """Human-readable R^T: R1 entries followed by the nilpotent relations."""
    out = []
    for v in triple.special:
        e = triple.special_loop(v)
        out.append(f"{e}^2-{e}")
    for x, y in sorted(triple.relations, key=lambda p: (not triple.quiver.arrow(p[0]).is_loop, p)):
        out.append(f"{x}^2" if x == y else f"{x}{y}" if len(x) == len(y) == 1 else f"{x}*{y}")
    return out
