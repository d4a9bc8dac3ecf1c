"""Representations M(m, N), exact Hom spaces, and the transpose-based AR translate.

A representation assigns a vector space to each vertex and a matrix
(dim target x dim source) to each arrow of Q^sp, special loops included.
Matrices act on column vectors, so a path "first p then q" acts by M_q M_p.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Optional, Sequence, Union

from . import linalg as la
from .algebra import Idempotent, Path, SkewGentleTriple, path_basis
from .words import HatQuiver, SplitPair, TaggedWord, Trivial, Word, ARR, INV

ONE, ZERO = Fraction(1), Fraction(0)


@dataclass(frozen=True)
class TagModule:
    """One-dimensional module over A_m: values of the indeterminates at the special slots."""

    values: tuple[Optional[int], Optional[int]]

    def hom_dim(self, other: "TagModule") -> int:
        return int(all(a == b for a, b in zip(self.values, other.values) if a is not None))


@dataclass
class Representation:
    triple: SkewGentleTriple
    dims: dict[str, int]
    mats: dict[str, la.Matrix]
    name: str = ""

    @property
    def dim(self) -> int:
        return sum(self.dims.values())

    def dim_vector(self) -> tuple[int, ...]:
        return tuple(self.dims[v] for v in self.triple.vertices)

    def matrix(self, arrow: str) -> la.Matrix:
        return self.mats[arrow]

    def path_matrix(self, p: Path) -> la.Matrix:
        m = la.identity(self.dims[p.start])
        cur = p.start
        for a in p.arrows:
            arr = self.triple.arrow(a)
            m = la.matmul(self.mats[a], m, inner=self.dims[cur], cols=self.dims[p.start])
            cur = arr.target
        return m

    def relation_violations(self) -> list[str]:
        bad = []
        t = self.triple
        for a in t.sp_arrows:
            m = self.mats[a.name]
            if len(m) != self.dims[a.target] or any(len(r) != self.dims[a.source] for r in m):
                bad.append(f"shape of {a.name}")
        for first, then in t.zero:
            pm = self.path_matrix(Path(t.arrow(first).source, (first, then)))
            if t.is_special_loop(first) and first == then:
                if pm != self.mats[first]:
                    bad.append(f"{first}^2 != {first}")
            elif not la.is_zero(pm):
                bad.append(f"{then}{first} != 0")
        return bad

    def direct_sum(self, other: "Representation") -> "Representation":
        dims = {v: self.dims[v] + other.dims[v] for v in self.dims}
        mats = {}
        for a in self.triple.sp_arrows:
            s, t = a.source, a.target
            m = la.zeros(dims[t], dims[s])
            for i, row in enumerate(self.mats[a.name]):
                m[i][: self.dims[s]] = row
            for i, row in enumerate(other.mats[a.name]):
                m[self.dims[t] + i][self.dims[s]:] = row
            mats[a.name] = m
        return Representation(self.triple, dims, mats, f"{self.name}+{other.name}")

    def dump(self) -> str:
        """Matrix dump: a dimension line, then each arrow's rows."""
        lines = ["dims " + " ".join(f"{v}:{self.dims[v]}" for v in self.triple.vertices)]
        for a in self.triple.sp_arrows:
            m = self.mats[a.name]
            if not m or not m[0]:
                continue
            lines.append(f"arrow {a.name} {a.source}->{a.target}")
            for row in m:
                lines.append("  " + " ".join(str(x) for x in row))
        return "\n".join(lines)


def zero_representation(triple: SkewGentleTriple) -> Representation:
    dims = {v: 0 for v in triple.vertices}
    return Representation(triple, dims, {a.name: [] for a in triple.sp_arrows}, "0")


def build_module(hq: HatQuiver, tw: Union[TaggedWord, Trivial]) -> Representation:
    """M(m, N_kappa) following the five-case rule for special loops."""
    triple = hq.triple
    if isinstance(tw, Trivial):
        return zero_representation(triple)
    w = tw.word
    if not w.inextensible:
        raise ValueError("module construction needs an inextensible word")
    if not hq.is_admissible(w):
        raise ValueError(f"inadmissible word {w.text()}")
    L = w.letters
    m = len(L)
    # basis z_1..z_{m-1}; z_j lives at t(omega_j)
    pos: dict[str, list[int]] = {v: [] for v in triple.vertices}
    for j in range(1, m):
        pos[L[j - 1].t].append(j)
    index = {j: pos[L[j - 1].t].index(j) for j in range(1, m)}
    dims = {v: len(pos[v]) for v in triple.vertices}
    mats = {a.name: la.zeros(dims[a.target], dims[a.source]) for a in triple.sp_arrows}

    def om(j: int):
        return L[j - 1] if 1 <= j <= m else None

    def put(arrow: str, src_j: int, dst_j: int, val: Fraction = ONE) -> None:
        if val:
            mats[arrow][index[dst_j]][index[src_j]] = val

    x1, xm = tw.tags
    for a in triple.sp_arrows:
        for j in range(1, m):
            if L[j - 1].t != a.source:
                continue
            nxt, cur = om(j + 1), om(j)
            if nxt is not None and nxt.kind == ARR and nxt.name == a.name:
                put(a.name, j, j + 1)
            elif cur.kind == INV and cur.name == a.name:
                put(a.name, j, j - 1)
            elif a.special:
                if (nxt is not None and nxt.kind == INV and nxt.name == a.name) or (cur.kind == ARR and cur.name == a.name):
                    put(a.name, j, j)
                elif j == 1 and L[0].special and L[0].t == a.source:
                    put(a.name, 1, 1, Fraction(x1))
                elif j == m - 1 and L[-1].special and L[-1].s == a.source:
                    put(a.name, m - 1, m - 1, Fraction(xm))
    rep = Representation(triple, dims, mats, tw.text())
    return rep


# ----------------------------------------------------------------------
# Hom spaces


@dataclass
class HomSpace:
    dimension: int
    basis: list[dict[str, la.Matrix]] = field(default_factory=list)


def hom_linear(M: Representation, N: Representation, want_basis: bool = False) -> HomSpace:
    """Intertwiners f with f_t M_a = N_a f_s for every arrow of Q^sp."""
    t = M.triple
    offs: dict[str, int] = {}
    n = 0
    for v in t.vertices:
        offs[v] = n
        n += N.dims[v] * M.dims[v]

    def var(v: str, r: int, c: int) -> int:  # entry (r, c) of f_v : M_v -> N_v
        return offs[v] + r * M.dims[v] + c

    e = la.Echelon(n)
    for a in t.sp_arrows:
        s, tg = a.source, a.target
        Ma, Na = M.mats[a.name], N.mats[a.name]
        # (f_t M_a - N_a f_s)[r][c] = 0, r < dim N_t, c < dim M_s
        for r in range(N.dims[tg]):
            for c in range(M.dims[s]):
                row: dict[int, Fraction] = {}
                for k in range(M.dims[tg]):
                    x = Ma[k][c]
                    if x:
                        i = var(tg, r, k)
                        row[i] = row.get(i, ZERO) + x
                for k in range(N.dims[s]):
                    x = Na[r][k]
                    if x:
                        i = var(s, k, c)
                        row[i] = row.get(i, ZERO) - x
                if row:
                    e.add(row)
    dim = n - e.rank
    if not want_basis:
        return HomSpace(dim)
    basis = []
    for vec in e.nullspace():
        fam = {}
        for v in t.vertices:
            fam[v] = [[vec[var(v, r, c)] for c in range(M.dims[v])] for r in range(N.dims[v])]
        basis.append(fam)
    return HomSpace(dim, basis)


def hom_dim_linear(M: Representation, N: Representation) -> int:
    return hom_linear(M, N).dimension


def _compose_fam(t: SkewGentleTriple, f: dict, g: dict, dims_mid: dict, dims_src: dict) -> dict:
    """g after f."""
    return {v: la.matmul(g[v], f[v], inner=dims_mid[v], cols=dims_src[v]) for v in t.vertices}


def endomorphism_semisimple_rank(M: Representation) -> int:
    """dim End(M)/rad End(M) via the trace form (characteristic zero)."""
    H = hom_linear(M, M, want_basis=True)
    B = H.basis
    k = len(B)
    t = M.triple

    def trace(f: dict) -> Fraction:
        return sum((f[v][i][i] for v in t.vertices for i in range(M.dims[v])), ZERO)

    gram = [[trace(_compose_fam(t, B[j], B[i], M.dims, M.dims)) for j in range(k)] for i in range(k)]
    return la.rank(gram)


def is_indecomposable(M: Representation) -> bool:
    if M.dim == 0:
        raise ValueError("zero module")
    return endomorphism_semisimple_rank(M) == 1


def is_isomorphic(M: Representation, N: Representation, tries: int = 4, seed: int = 0) -> bool:
    """Certify M = N by exhibiting an invertible intertwiner (random exact combination)."""
    if M.dims != N.dims:
        return False
    H = hom_linear(M, N, want_basis=True)
    if H.dimension == 0:
        return M.dim == 0
    rng = random.Random(seed)
    t = M.triple
    for _ in range(tries):
        coeffs = [Fraction(rng.randint(-50, 50)) for _ in H.basis]
        ok = True
        for v in t.vertices:
            d = M.dims[v]
            if d == 0:
                continue
            mat = la.zeros(d, d)
            for c, f in zip(coeffs, H.basis):
                if c:
                    for i in range(d):
                        for j in range(d):
                            mat[i][j] += c * f[v][i][j]
            if la.rank(mat) < d:
                ok = False
                break
        if ok:
            return True
    return False


# ----------------------------------------------------------------------
# the algebra as a finite-dimensional algebra; projectives, injectives, simples

Element = dict[Path, Fraction]


class PathAlgebra:
    """A = kQ^sp / I^sg with its basis of paths and split primitive idempotents."""

    def __init__(self, triple: SkewGentleTriple):
        self.triple = triple
        self.basis = path_basis(triple)
        self.paths = list(self.basis.paths)

    def mul(self, x: Element, y: Element) -> Element:
        """x then y."""
        out: Element = {}
        for p, a in x.items():
            for q, b in y.items():
                r = self.triple.compose(p, q)
                if r is not None:
                    out[r] = out.get(r, ZERO) + a * b
        return {k: v for k, v in out.items() if v}

    def eps(self, v: str) -> Path:
        return Path(v, (self.triple.special_loop(v),))

    def idem_element(self, e: Idempotent) -> Element:
        ev = Path(e.vertex)
        if e.flag is None:
            return {ev: ONE}
        if e.flag == 1:
            return {self.eps(e.vertex): ONE}
        return {ev: ONE, self.eps(e.vertex): -ONE}

    def _starts_eps(self, p: Path) -> bool:
        return bool(p.arrows) and self.triple.is_special_loop(p.arrows[0])

    def _ends_eps(self, p: Path) -> bool:
        return bool(p.arrows) and self.triple.is_special_loop(p.arrows[-1])

    def right_ideal_basis(self, e: Idempotent) -> list[tuple[Path, Element]]:
        """Basis of e*A (first e, then a path), each element with its key path."""
        out = []
        ee = self.idem_element(e)
        for p in self.paths:
            if p.start != e.vertex:
                continue
            if e.flag == 1 and not self._starts_eps(p):
                continue
            if e.flag == 0 and self._starts_eps(p):
                continue
            out.append((p, self.mul(ee, {p: ONE})))
        return out

    def left_ideal_basis(self, e: Idempotent, start: str) -> list[tuple[Path, Element]]:
        """Basis of e_start * A * e (paths from ``start`` then e), with key paths."""
        out = []
        ee = self.idem_element(e)
        for p in self.paths:
            if p.start != start or self.triple.path_end(p) != e.vertex:
                continue
            if e.flag == 1 and not self._ends_eps(p):
                continue
            if e.flag == 0 and self._ends_eps(p):
                continue
            out.append((p, self.mul({p: ONE}, ee)))
        return out

    @staticmethod
    def coords(keys: Sequence[Path], x: Element) -> list[Fraction]:
        return [x.get(k, ZERO) for k in keys]


class ProjectiveRep:
    """P_e = e*A as a representation, remembering the algebra element of each basis vector."""

    def __init__(self, alg: PathAlgebra, e: Idempotent):
        self.alg = alg
        self.e = e
        t = alg.triple
        items = alg.right_ideal_basis(e)
        self.by_vertex: dict[str, list[tuple[Path, Element]]] = {v: [] for v in t.vertices}
        for p, x in items:
            self.by_vertex[t.path_end(p)].append((p, x))
        dims = {v: len(self.by_vertex[v]) for v in t.vertices}
        mats = {}
        for a in t.sp_arrows:
            src, dst = self.by_vertex[a.source], self.by_vertex[a.target]
            keys = [p for p, _ in dst]
            m = la.zeros(len(dst), len(src))
            for j, (_, x) in enumerate(src):
                col = PathAlgebra.coords(keys, alg.mul(x, {Path(a.source, (a.name,)): ONE}))
                for i, c in enumerate(col):
                    m[i][j] = c
            mats[a.name] = m
        self.rep = Representation(t, dims, mats, f"P({e.label})")


class InjectiveRep:
    """I_e = D(A*e) as a representation; (I_e)_w is dual to e_w A e."""

    def __init__(self, alg: PathAlgebra, e: Idempotent):
        self.alg = alg
        self.e = e
        t = alg.triple
        self.by_vertex = {v: alg.left_ideal_basis(e, v) for v in t.vertices}
        dims = {v: len(self.by_vertex[v]) for v in t.vertices}
        mats = {}
        for a in t.sp_arrows:
            # dual of u -> a*u from e_target A e to e_source A e
            src_b, dst_b = self.by_vertex[a.source], self.by_vertex[a.target]
            keys = [p for p, _ in src_b]
            m = la.zeros(len(dst_b), len(src_b))
            for i, (_, u) in enumerate(dst_b):
                col = PathAlgebra.coords(keys, alg.mul({Path(a.source, (a.name,)): ONE}, u))
                for j, c in enumerate(col):
                    m[i][j] = c
            mats[a.name] = m
        self.rep = Representation(t, dims, mats, f"I({e.label})")


def simple_rep(triple: SkewGentleTriple, e: Idempotent) -> Representation:
    dims = {v: int(v == e.vertex) for v in triple.vertices}
    mats = {a.name: la.zeros(dims[a.target], dims[a.source]) for a in triple.sp_arrows}
    if e.flag is not None:
        mats[triple.special_loop(e.vertex)] = [[Fraction(e.flag)]]
    return Representation(triple, dims, mats, f"S({e.label})")


def hom_from_projective(e: Idempotent, M: Representation) -> int:
    """dim Hom(eA, M) = dim of the e-part of M."""
    t = M.triple
    if e.vertex not in t.vertices or (e.flag is not None) != (e.vertex in t.special):
        raise ValueError(f"unknown idempotent {e.label}")
    d = M.dims[e.vertex]
    if e.flag is None or d == 0:
        return d
    E = M.mats[t.special_loop(e.vertex)]
    if e.flag == 1:
        return la.rank(E)
    return la.rank([[(ONE if i == j else ZERO) - E[i][j] for j in range(d)] for i in range(d)])


# ----------------------------------------------------------------------
# AR translate by transpose


def _radical_at(rep: Representation, v: str, sub: Optional[dict[str, list[list[Fraction]]]] = None) -> list[list[Fraction]]:
    """Spanning vectors of (rad X)_v where X is rep or the subrepresentation spanned by ``sub``."""
    t = rep.triple
    vecs = []
    for a in t.sp_arrows:
        if a.target != v or a.special:
            continue
        gens = sub[a.source] if sub is not None else [
            [ONE if i == j else ZERO for i in range(rep.dims[a.source])] for j in range(rep.dims[a.source])
        ]
        for g in gens:
            vecs.append(la.matvec(rep.mats[a.name], g))
    if v in t.special:
        # rad X = X rad A is a submodule: close under the idempotent loop
        E = rep.mats[t.special_loop(v)]
        vecs += [la.matvec(E, x) for x in vecs]
    return vecs


def _top_generators(rep: Representation, sub: Optional[dict[str, list[list[Fraction]]]] = None) -> list[tuple[Idempotent, list[Fraction]]]:
    """Vectors lifting a basis of top(X), each an eigenvector for its primitive idempotent."""
    t = rep.triple
    gens = []
    for v in t.vertices:
        d = rep.dims[v]
        if d == 0:
            continue
        space = sub[v] if sub is not None else [[ONE if i == j else ZERO for i in range(d)] for j in range(d)]
        if not space:
            continue
        rad = _radical_at(rep, v, sub)
        if v in t.special:
            E = rep.mats[t.special_loop(v)]
            up = [la.matvec(E, x) for x in space]
            down = [[a - b for a, b in zip(x, y)] for x, y in zip(space, up)]
            chosen1 = la.extend_basis(rad, up, d)
            chosen0 = la.extend_basis(rad + chosen1, down, d)
            gens += [(Idempotent(v, 1), g) for g in chosen1] + [(Idempotent(v, 0), g) for g in chosen0]
        else:
            gens += [(Idempotent(v), g) for g in la.extend_basis(rad, space, d)]
    return gens


class _SumOfProjectives:
    """P = sum of P_{e_k}; per-vertex coordinates are concatenations."""

    def __init__(self, alg: PathAlgebra, idems: Sequence[Idempotent], cache: dict):
        self.alg = alg
        self.idems = list(idems)
        t = alg.triple
        self.parts = []
        for e in self.idems:
            if e not in cache:
                cache[e] = ProjectiveRep(alg, e)
            self.parts.append(cache[e])
        self.offset: dict[str, list[int]] = {}
        dims = {}
        for v in t.vertices:
            offs, n = [], 0
            for P in self.parts:
                offs.append(n)
                n += P.rep.dims[v]
            self.offset[v] = offs
            dims[v] = n
        mats = {}
        for a in t.sp_arrows:
            m = la.zeros(dims[a.target], dims[a.source])
            for k, P in enumerate(self.parts):
                r0, c0 = self.offset[a.target][k], self.offset[a.source][k]
                for i, row in enumerate(P.rep.mats[a.name]):
                    for j, x in enumerate(row):
                        if x:
                            m[r0 + i][c0 + j] = x
            mats[a.name] = m
        self.rep = Representation(t, dims, mats, "P")

    def element_at(self, v: str, vec: Sequence[Fraction]) -> list[Element]:
        """Split a coordinate vector at v into algebra elements, one per summand."""
        out = []
        for k, P in enumerate(self.parts):
            o = self.offset[v][k]
            x: Element = {}
            for i, (_, el) in enumerate(P.by_vertex[v]):
                c = vec[o + i]
                if c:
                    for p, a in el.items():
                        x[p] = x.get(p, ZERO) + c * a
            out.append({p: a for p, a in x.items() if a})
        return out


class TransposeOracle:
    """tau M = D Tr M computed from a minimal projective presentation."""

    def __init__(self, triple: SkewGentleTriple):
        self.triple = triple
        self.alg = PathAlgebra(triple)
        self._proj: dict = {}
        self._inj: dict = {}

    def projective(self, e: Idempotent) -> Representation:
        if e not in self._proj:
            self._proj[e] = ProjectiveRep(self.alg, e)
        return self._proj[e].rep

    def injective(self, e: Idempotent) -> InjectiveRep:
        if e not in self._inj:
            self._inj[e] = InjectiveRep(self.alg, e)
        return self._inj[e]

    def presentation(self, M: Representation):
        """Return (idempotents of P1, idempotents of P0, components x_kl of P1 -> P0)."""
        t = self.triple
        g0 = _top_generators(M)
        P0 = _SumOfProjectives(self.alg, [e for e, _ in g0], self._proj)
        # pi : P0 -> M, per vertex
        kernel: dict[str, list[list[Fraction]]] = {}
        for v in t.vertices:
            cols = []
            for k, (e, g) in enumerate(g0):
                for p, x in P0.parts[k].by_vertex[v]:
                    img = [ZERO] * M.dims[v]
                    for path, c in x.items():
                        w = la.matvec(M.path_matrix(path), g)
                        img = [a + c * b for a, b in zip(img, w)]
                    cols.append(img)
            n = P0.rep.dims[v]
            pim = [[cols[j][i] for j in range(n)] for i in range(M.dims[v])]
            kernel[v] = la.nullspace(pim, n) if n else []
        g1 = _top_generators(P0.rep, kernel)
        comps = []
        for e, y in g1:
            comps.append(P0.element_at(e.vertex, y))
        return [e for e, _ in g1], [e for e, _ in g0], comps

    def tau(self, M: Representation) -> Representation:
        t = self.triple
        e1, e0, x = self.presentation(M)
        if not e1:
            return zero_representation(t)  # projective
        I1 = [self.injective(e) for e in e1]
        I0 = [self.injective(e) for e in e0]
        # per vertex w: map from sum_k D(e_w A e1_k) to sum_l D(e_w A e0_l)
        ker: dict[str, list[list[Fraction]]] = {}
        dims1: dict[str, int] = {}
        off1: dict[str, list[int]] = {}
        for w in t.vertices:
            offs, n = [], 0
            for I in I1:
                offs.append(n)
                n += len(I.by_vertex[w])
            off1[w], dims1[w] = offs, n
            rows = []
            for l, J in enumerate(I0):
                for _, u in J.by_vertex[w]:
                    row = [ZERO] * n
                    for k, I in enumerate(I1):
                        if not x[k][l]:
                            continue
                        prod = self.alg.mul(u, x[k][l])
                        keys = [p for p, _ in I.by_vertex[w]]
                        for i, c in enumerate(PathAlgebra.coords(keys, prod)):
                            row[offs[k] + i] = c
                    rows.append(row)
            ker[w] = la.nullspace(rows, n) if n else []
        dims = {w: len(ker[w]) for w in t.vertices}
        mats = {}
        for a in t.sp_arrows:
            s, d = a.source, a.target
            # block-diagonal structure map of sum I1 restricted to the kernel
            big = la.zeros(dims1[d], dims1[s])
            for k, I in enumerate(I1):
                for i, row in enumerate(I.rep.mats[a.name]):
                    for j, val in enumerate(row):
                        if val:
                            big[off1[d][k] + i][off1[s][k] + j] = val
            m = la.zeros(dims[d], dims[s])
            for j, vec in enumerate(ker[s]):
                img = la.matvec(big, vec)
                col = la.coordinates(ker[d], img)
                for i, c in enumerate(col):
                    m[i][j] = c
            mats[a.name] = m
        return Representation(t, dims, mats, f"tau({M.name})")


# ----------------------------------------------------------------------
# fingerprints


class Prober:
    """Deterministic probe family for isomorphism fingerprints."""

    def __init__(self, triple: SkewGentleTriple, oracle: Optional[TransposeOracle] = None):
        self.triple = triple
        self.oracle = oracle or TransposeOracle(triple)
        self.idems = triple.idempotents()
        self.simples = [simple_rep(triple, e) for e in self.idems]
        self.projectives = [self.oracle.projective(e) for e in self.idems]
        self.injectives = [self.oracle.injective(e).rep for e in self.idems]

    def fingerprint(self, M: Representation) -> tuple:
        return (
            M.dim_vector(),
            tuple(hom_from_projective(e, M) for e in self.idems),
            tuple(hom_dim_linear(M, S) for S in self.simples),
            tuple(hom_dim_linear(S, M) for S in self.simples),
            tuple(hom_dim_linear(M, I) for I in self.injectives),
            tuple(hom_dim_linear(P, M) for P in self.projectives),
            hom_dim_linear(M, M),
        )

    def same(self, M: Representation, N: Representation) -> bool:
        """Fingerprint equality plus dim Hom(M, N) = dim End(M)."""
        if self.fingerprint(M) != self.fingerprint(N):
            return False
        return hom_dim_linear(M, N) == hom_dim_linear(M, M) == hom_dim_linear(N, M)


def module_of(hq: HatQuiver, r) -> Representation:
    """Module of a rotation result (TaggedWord, Trivial or SplitPair)."""
    if isinstance(r, SplitPair):
        a, b = (build_module(hq, p) for p in r.parts)
        return a.direct_sum(b)
    return build_module(hq, r)
