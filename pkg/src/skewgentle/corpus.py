"""Bundled test algebras, the worked-example curves and their reference representations."""

from __future__ import annotations

from fractions import Fraction
from importlib import resources

from .algebra import SkewGentleTriple, parse_algebra
from .modules import Representation
from .surface import MarkedSurface, PartialTriangulation, parse_surface
from .words import HatQuiver, TaggedWord

ALGEBRAS = ("toy1", "a1", "a2", "a3", "ex6")
SURFACES = ("ex6", "toy1", "annulus", "a2", "disc_chord")


def data_path(name: str) -> str:
    return str(resources.files("skewgentle") / "data" / name)


def read_data(name: str) -> str:
    return (resources.files("skewgentle") / "data" / name).read_text(encoding="utf-8")


def algebra(name: str) -> SkewGentleTriple:
    return parse_algebra(read_data(f"{name}.alg"))


def surface(name: str) -> tuple[MarkedSurface, PartialTriangulation]:
    return parse_surface(read_data(f"{name}.surf"))


# Curves of the worked example on EX6, as canonical tagged words.
EX6_WORDS = {
    "gamma1": "z(4,-)^- e e5^- e^- f^- z(6,-)",
    "gamma2": "z(1,-)^- b^- z(2,-) @tags=1",
    "gamma3": "z(1,-)^- a h g^- f d^- c b z(1,-) @tags=0,0",
    "rho_gamma1": "z(3,-)^- c b e1 a h g^- f e e5 z(5,+)",
    "rho_gamma2": "z(1,-)^- b^- h g^- z(6,+) @tags=0",
    "rho_gamma3": "z(1,-)^- a h g^- f d^- c b z(1,-) @tags=1,1",
    "eta": "z(2,-)^- b e1 b^- h g^- z(6,+)",
}

EX6_DIMS = {
    "gamma1": (0, 0, 0, 2, 2, 1, 0),
    "gamma2": (1, 1, 0, 0, 0, 0, 0),
    "gamma3": (2, 2, 1, 1, 0, 1, 1),
    "rho_gamma1": (2, 2, 1, 1, 2, 1, 1),
    "rho_gamma2": (1, 1, 0, 0, 0, 1, 1),
    "rho_gamma3": (2, 2, 1, 1, 0, 1, 1),
    "eta": (2, 2, 0, 0, 0, 1, 1),
}


def ex6_word(hq: HatQuiver, name: str) -> TaggedWord:
    return hq.parse_tagged(EX6_WORDS[name])


# Hand-entered matrices of the displayed representations ("r1 ; r2" rows).
# Arrows not listed are zero.
_EX6_DISPLAYS = {
    "gamma1": {"e": "1 0 ; 0 1", "e5": "0 0 ; 1 0", "f": "1 ; 0"},
    "gamma2": {"e1": "1", "b": "1"},
    "gamma3": {"a": "0 0 ; 0 1", "b": "1 0 ; 0 0", "h": "0 1", "c": "1 ; 0", "d": "1", "f": "1", "g": "1"},
    "rho_gamma1": {
        "e1": "0 0 ; 1 1", "a": "0 0 ; 0 1", "b": "1 0 ; 0 0", "h": "0 1", "c": "1 ; 0",
        "e": "1 ; 0", "e5": "0 0 ; 1 0", "f": "1", "g": "1",
    },
    "rho_gamma2": {"b": "1", "h": "1", "g": "1"},
    "rho_gamma3": {
        "e1": "1 0 ; 0 1", "a": "0 0 ; 0 1", "b": "1 0 ; 0 0", "h": "0 1", "c": "1 ; 0",
        "d": "1", "f": "1", "g": "1",
    },
}


def _matrix(text: str) -> list[list[Fraction]]:
    return [[Fraction(x) for x in row.split()] for row in text.split(";")]


def ex6_reference(triple: SkewGentleTriple, name: str) -> Representation:
    """The displayed representation ``name`` of the worked example."""
    dims = dict(zip(triple.vertices, EX6_DIMS[name]))
    given = _EX6_DISPLAYS[name]
    mats = {}
    for a in triple.sp_arrows:
        if a.name in given:
            m = _matrix(given[a.name])
            if len(m) != dims[a.target] or any(len(r) != dims[a.source] for r in m):
                raise ValueError(f"reference {name}: bad shape for {a.name}")
        else:
            m = [[Fraction(0)] * dims[a.source] for _ in range(dims[a.target])]
        mats[a.name] = m
    return Representation(triple, dims, mats, f"ref:{name}")


EX6_REFERENCE_NAMES = tuple(_EX6_DISPLAYS)

# Worked-example intersection numbers: (total, black) for ordered pairs.
EX6_INTERSECTIONS = {
    ("gamma1", "gamma3"): 1,
    ("gamma2", "gamma3"): 2,
    ("gamma3", "gamma3"): 0,
}
EX6_BLACK = {("gamma1", "gamma3"): 1, ("gamma2", "gamma3"): 1}
