"""Exact rational linear algebra on small sparse systems.

Matrices are dense ``list[list[Fraction]]`` (row major); linear systems are
assembled as sparse rows ``dict[int, Fraction]`` and reduced incrementally.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

Matrix = list[list[Fraction]]
SparseRow = dict[int, Fraction]

ZERO = Fraction(0)
ONE = Fraction(1)


def zeros(r: int, c: int) -> Matrix:
    return [[ZERO] * c for _ in range(r)]


def identity(n: int) -> Matrix:
    m = zeros(n, n)
    for i in range(n):
        m[i][i] = ONE
    return m


def shape(m: Matrix, cols_hint: int = 0) -> tuple[int, int]:
    return len(m), (len(m[0]) if m else cols_hint)


def matmul(a: Matrix, b: Matrix, inner: int | None = None, cols: int | None = None) -> Matrix:
    """Product ``a @ b``; ``inner``/``cols`` disambiguate empty shapes."""
    r = len(a)
    n = inner if inner is not None else (len(a[0]) if a else len(b))
    c = cols if cols is not None else (len(b[0]) if b else 0)
    out = zeros(r, c)
    for i in range(r):
        ai = a[i]
        oi = out[i]
        for k in range(n):
            x = ai[k]
            if x:
                bk = b[k]
                for j in range(c):
                    y = bk[j]
                    if y:
                        oi[j] += x * y
    return out


def matvec(a: Matrix, v: Sequence[Fraction]) -> list[Fraction]:
    return [sum((x * y for x, y in zip(row, v) if x and y), ZERO) for row in a]


def transpose(a: Matrix, rows_hint: int = 0) -> Matrix:
    if not a:
        return [[] for _ in range(rows_hint)]
    return [list(col) for col in zip(*a)]


def is_zero(a: Matrix) -> bool:
    return all(not x for row in a for x in row)


class Echelon:
    """Incrementally maintained reduced row echelon form."""

    def __init__(self, ncols: int):
        self.ncols = ncols
        self.rows: dict[int, SparseRow] = {}  # pivot column -> row with 1 at pivot

    def reduce(self, row: SparseRow) -> SparseRow:
        row = {k: v for k, v in row.items() if v}
        for p in sorted(c for c in row if c in self.rows):
            if p not in row:
                continue
            f = row[p]
            for k, v in self.rows[p].items():
                nv = row.get(k, ZERO) - f * v
                if nv:
                    row[k] = nv
                else:
                    row.pop(k, None)
        return row

    def add(self, row: SparseRow) -> bool:
        """Insert ``row``; return True when it increased the rank."""
        row = self.reduce(row)
        if not row:
            return False
        # pivot columns may reappear after reduction; loop until clean
        while True:
            hit = [c for c in row if c in self.rows]
            if not hit:
                break
            row = self.reduce(row)
            if not row:
                return False
        p = min(row)
        inv = ONE / row[p]
        row = {k: v * inv for k, v in row.items()}
        for q, other in self.rows.items():
            f = other.get(p)
            if f:
                for k, v in row.items():
                    nv = other.get(k, ZERO) - f * v
                    if nv:
                        other[k] = nv
                    else:
                        other.pop(k, None)
        self.rows[p] = row
        return True

    @property
    def rank(self) -> int:
        return len(self.rows)

    def nullspace(self) -> list[list[Fraction]]:
        free = [c for c in range(self.ncols) if c not in self.rows]
        basis = []
        for f in free:
            v = [ZERO] * self.ncols
            v[f] = ONE
            for p, row in self.rows.items():
                c = row.get(f)
                if c:
                    v[p] = -c
            basis.append(v)
        return basis


def nullspace_sparse(rows: Iterable[SparseRow], ncols: int) -> list[list[Fraction]]:
    e = Echelon(ncols)
    for r in rows:
        e.add(r)
    return e.nullspace()


def dense_to_sparse(row: Sequence[Fraction]) -> SparseRow:
    return {i: x for i, x in enumerate(row) if x}


def rank(m: Matrix) -> int:
    if not m:
        return 0
    e = Echelon(len(m[0]))
    for row in m:
        e.add(dense_to_sparse(row))
    return e.rank


def nullspace(m: Matrix, ncols: int | None = None) -> list[list[Fraction]]:
    """Basis of ``{v : m v = 0}`` as a list of vectors."""
    n = ncols if ncols is not None else (len(m[0]) if m else 0)
    return nullspace_sparse((dense_to_sparse(r) for r in m), n)


def column_space_basis(vectors: Sequence[Sequence[Fraction]], dim: int) -> list[list[Fraction]]:
    """Greedy independent subset of ``vectors`` (kept in the given order)."""
    e = Echelon(dim)
    out = []
    for v in vectors:
        if e.add(dense_to_sparse(v)):
            out.append(list(v))
    return out


def extend_basis(base: Sequence[Sequence[Fraction]], candidates: Sequence[Sequence[Fraction]], dim: int) -> list[list[Fraction]]:
    """Members of ``candidates`` that extend ``span(base)`` greedily."""
    e = Echelon(dim)
    for v in base:
        e.add(dense_to_sparse(v))
    out = []
    for v in candidates:
        if e.add(dense_to_sparse(v)):
            out.append(list(v))
    return out


def coordinates(basis: Sequence[Sequence[Fraction]], v: Sequence[Fraction]) -> list[Fraction]:
    """Coefficients ``c`` with ``sum c_i basis_i = v``; raises if ``v`` is outside the span."""
    k = len(basis)
    n = len(v)
    # unknowns c_0..c_{k-1}, plus an augmented column k
    e = Echelon(k + 1)
    for row in range(n):
        r = {i: basis[i][row] for i in range(k) if basis[i][row]}
        if v[row]:
            r[k] = -Fraction(v[row])
        e.add(r)
    if k in e.rows:
        raise ValueError("vector not in span")
    sol = [ZERO] * k
    for p, row in e.rows.items():
        sol[p] = -row.get(k, ZERO)
    return sol


def inverse(m: Matrix) -> Matrix:
    n = len(m)
    aug = [list(m[i]) + [ONE if i == j else ZERO for j in range(n)] for i in range(n)]
    for col in range(n):
        piv = next((r for r in range(col, n) if aug[r][col]), None)
        if piv is None:
            raise ValueError("singular matrix")
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = ONE / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


def to_fraction_matrix(rows: Sequence[Sequence[int | Fraction]]) -> Matrix:
    return [[Fraction(x) for x in r] for r in rows]
