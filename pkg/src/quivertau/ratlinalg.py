"""Exact linear algebra over the rationals.

Matrices are lists of rows of :class:`fractions.Fraction`; vectors are rows.
The whole workbench uses the row convention: a linear map V -> W is a
dim(V) x dim(W) matrix acting by ``row @ matrix``, so composition of maps
reads left to right, like path composition.
"""

from __future__ import annotations

from fractions import Fraction

F0 = Fraction(0)
F1 = Fraction(1)

Row = list[Fraction]
Matrix = list[Row]


def frac(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


def zeros(nrows: int, ncols: int) -> Matrix:
    return [[F0] * ncols for _ in range(nrows)]


def identity(n: int) -> Matrix:
    m = zeros(n, n)
    for i in range(n):
        m[i][i] = F1
    return m


def mat_mul(a: Matrix, b: Matrix, ncols: int | None = None) -> Matrix:
    """a @ b; pass ncols when b may have zero rows (shape cannot be read)."""
    if not a:
        return []
    nb = len(b[0]) if b else (ncols or 0)
    out = zeros(len(a), nb)
    for i, arow in enumerate(a):
        orow = out[i]
        for k, c in enumerate(arow):
            if c:
                brow = b[k]
                for j, d in enumerate(brow):
                    if d:
                        orow[j] += c * d
    return out


def mat_add(a: Matrix, b: Matrix) -> Matrix:
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_scale(c: Fraction, a: Matrix) -> Matrix:
    return [[c * x for x in row] for row in a]


def mat_eq_zero(a: Matrix) -> bool:
    return all(not x for row in a for x in row)


def row_mul(v: Row, a: Matrix, ncols: int | None = None) -> Row:
    """v @ a; pass ncols when a may have zero rows."""
    if not a:
        return [F0] * (ncols or 0)
    out = [F0] * len(a[0])
    for k, c in enumerate(v):
        if c:
            arow = a[k]
            for j, d in enumerate(arow):
                if d:
                    out[j] += c * d
    return out


def rref(mat: Matrix) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form; returns (nonzero rows, pivot columns)."""
    rows = [row[:] for row in mat if any(row)]
    ncols = len(mat[0]) if mat else 0
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        piv = None
        for i in range(r, len(rows)):
            if rows[i][c]:
                piv = i
                break
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = F1 / rows[r][c]
        if inv != F1:
            rows[r] = [x * inv for x in rows[r]]
        prow = rows[r]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], prow)]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows[:r], pivots


def rank(mat: Matrix) -> int:
    return len(rref(mat)[0])


def row_space(mat: Matrix) -> Matrix:
    return rref(mat)[0]


def nullspace(mat: Matrix, ncols: int | None = None) -> Matrix:
    """Basis of {x : x @ mat^T = 0}, i.e. row vectors killed by every row
    of ``mat`` read as a linear functional.  ``mat`` has shape (neq, nvars)."""
    if ncols is None:
        ncols = len(mat[0]) if mat else 0
    red, pivots = rref(mat)
    pivset = set(pivots)
    free = [c for c in range(ncols) if c not in pivset]
    basis = []
    for fcol in free:
        v = [F0] * ncols
        v[fcol] = F1
        for r, pcol in enumerate(pivots):
            v[pcol] = -red[r][fcol]
        basis.append(v)
    return basis


def in_row_span(echelon: Matrix, pivots: list[int], v: Row) -> bool:
    """Membership of v in the span of an rref basis."""
    w = v[:]
    for r, p in enumerate(pivots):
        if w[p]:
            c = w[p]
            w = [x - c * y for x, y in zip(w, echelon[r])]
    return not any(w)


def reduce_against(echelon: Matrix, pivots: list[int], v: Row) -> Row:
    w = v[:]
    for r, p in enumerate(pivots):
        if w[p]:
            c = w[p]
            w = [x - c * y for x, y in zip(w, echelon[r])]
    return w


def solve_row(mat: Matrix, target: Row) -> Row | None:
    """One solution x of x @ mat = target, or None.  mat: (nvars, ncols)."""
    nvars = len(mat)
    ncols = len(target)
    aug = [[mat[i][j] for i in range(nvars)] + [target[j]] for j in range(ncols)]
    red, pivots = rref(aug)
    x = [F0] * nvars
    for r, p in enumerate(pivots):
        if p == nvars:
            return None
        x[p] = red[r][nvars]
    return x


class Subspace:
    """Row space kept in rref, supporting membership and growth."""

    def __init__(self, ncols: int):
        self.ncols = ncols
        self.rows: Matrix = []
        self.pivots: list[int] = []

    @property
    def dim(self) -> int:
        return len(self.rows)

    def contains(self, v: Row) -> bool:
        return not any(self.residue(v))

    def residue(self, v: Row) -> Row:
        return reduce_against(self.rows, self.pivots, v)

    def add(self, v: Row) -> bool:
        """Insert v; returns True if the dimension grew."""
        w = self.residue(v)
        p = next((j for j, x in enumerate(w) if x), None)
        if p is None:
            return False
        inv = F1 / w[p]
        if inv != F1:
            w = [x * inv for x in w]
        for i in range(len(self.rows)):
            if self.rows[i][p]:
                c = self.rows[i][p]
                self.rows[i] = [x - c * y for x, y in zip(self.rows[i], w)]
        k = 0
        while k < len(self.pivots) and self.pivots[k] < p:
            k += 1
        self.rows.insert(k, w)
        self.pivots.insert(k, p)
        return True

    def extend(self, vs: Matrix) -> None:
        for v in vs:
            self.add(v)


def is_invertible(mat: Matrix) -> bool:
    n = len(mat)
    if n == 0:
        return True
    if any(len(row) != n for row in mat):
        return False
    return rank(mat) == n


def invert(mat: Matrix) -> Matrix | None:
    n = len(mat)
    aug = [row[:] + identity(n)[i] for i, row in enumerate(mat)]
    red, pivots = rref(aug)
    if pivots[:n] != list(range(n)) or len(pivots) < n:
        return None
    return [row[n:] for row in red[:n]]


def trace(mat: Matrix) -> Fraction:
    return sum((mat[i][i] for i in range(len(mat))), F0)
