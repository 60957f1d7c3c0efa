"""Exact linear algebra over the rationals.

Everything here works with `fractions.Fraction` entries; no floating point
is used anywhere in the package.
"""

from __future__ import annotations

from fractions import Fraction
from typing import List, NamedTuple, Optional, Sequence

from .errors import NotSkewSymmetric, NotSquare, OddDimension

Rat = Fraction

ZERO = Fraction(0)
ONE = Fraction(1)


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    return Fraction(x)


class RationalMatrix:
    """Dense matrix with exact rational entries, stored row-major."""

    __slots__ = ("rows", "cols", "data")

    def __init__(self, rows: int, cols: int, entries: Sequence):
        if rows < 0 or cols < 0:
            raise ValueError("negative matrix shape")
        flat = [_frac(x) for x in entries]
        if len(flat) != rows * cols:
            raise ValueError("entry count %d does not match %dx%d" % (len(flat), rows, cols))
        self.rows = rows
        self.cols = cols
        self.data = flat

    # -- construction -----------------------------------------------------
    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "RationalMatrix":
        r = len(rows)
        c = len(rows[0]) if r else 0
        flat = []
        for row in rows:
            if len(row) != c:
                raise ValueError("ragged rows")
            flat.extend(row)
        return cls(r, c, flat)

    @classmethod
    def identity(cls, n: int) -> "RationalMatrix":
        m = cls.zero(n, n)
        for i in range(n):
            m.data[i * n + i] = ONE
        return m

    @classmethod
    def zero(cls, rows: int, cols: int) -> "RationalMatrix":
        return cls(rows, cols, [ZERO] * (rows * cols))

    @classmethod
    def diagonal(cls, diag: Sequence) -> "RationalMatrix":
        n = len(diag)
        m = cls.zero(n, n)
        for i, x in enumerate(diag):
            m.data[i * n + i] = _frac(x)
        return m

    @classmethod
    def block(cls, grid: Sequence[Sequence["RationalMatrix"]]) -> "RationalMatrix":
        """Assemble a matrix from a 2d grid of blocks with consistent shapes."""
        row_heights = [row[0].rows for row in grid]
        col_widths = [b.cols for b in grid[0]] if grid else []
        for row in grid:
            for j, b in enumerate(row):
                if b.cols != col_widths[j] or b.rows != row[0].rows:
                    raise ValueError("inconsistent block shapes")
        total_r = sum(row_heights)
        total_c = sum(col_widths)
        out = cls.zero(total_r, total_c)
        r0 = 0
        for bi, row in enumerate(grid):
            c0 = 0
            for bj, b in enumerate(row):
                for i in range(b.rows):
                    base = (r0 + i) * total_c + c0
                    out.data[base:base + b.cols] = b.data[i * b.cols:(i + 1) * b.cols]
                c0 += col_widths[bj]
            r0 += row_heights[bi]
        return out

    # -- basics ------------------------------------------------------------
    def __getitem__(self, key):
        i, j = key
        return self.data[i * self.cols + j]

    def __setitem__(self, key, value):
        i, j = key
        self.data[i * self.cols + j] = _frac(value)

    def row(self, i: int) -> List[Fraction]:
        return self.data[i * self.cols:(i + 1) * self.cols]

    def copy(self) -> "RationalMatrix":
        return RationalMatrix(self.rows, self.cols, list(self.data))

    def __eq__(self, other) -> bool:
        return (isinstance(other, RationalMatrix) and self.rows == other.rows
                and self.cols == other.cols and self.data == other.data)

    def __hash__(self):
        return hash((self.rows, self.cols, tuple(self.data)))

    def __repr__(self):
        body = "; ".join(" ".join(str(x) for x in self.row(i)) for i in range(self.rows))
        return "RationalMatrix(%dx%d: %s)" % (self.rows, self.cols, body)

    def transpose(self) -> "RationalMatrix":
        out = RationalMatrix.zero(self.cols, self.rows)
        for i in range(self.rows):
            for j in range(self.cols):
                out.data[j * self.rows + i] = self.data[i * self.cols + j]
        return out

    def __neg__(self) -> "RationalMatrix":
        return RationalMatrix(self.rows, self.cols, [-x for x in self.data])

    def __add__(self, other: "RationalMatrix") -> "RationalMatrix":
        if self.rows != other.rows or self.cols != other.cols:
            raise ValueError("shape mismatch in addition")
        return RationalMatrix(self.rows, self.cols,
                              [a + b for a, b in zip(self.data, other.data)])

    def __sub__(self, other: "RationalMatrix") -> "RationalMatrix":
        return self + (-other)

    def scale(self, c) -> "RationalMatrix":
        c = _frac(c)
        return RationalMatrix(self.rows, self.cols, [c * x for x in self.data])

    def __mul__(self, other: "RationalMatrix") -> "RationalMatrix":
        if self.cols != other.rows:
            raise ValueError("shape mismatch in product: %dx%d times %dx%d"
                             % (self.rows, self.cols, other.rows, other.cols))
        out = RationalMatrix.zero(self.rows, other.cols)
        oc = other.cols
        for i in range(self.rows):
            ri = self.data[i * self.cols:(i + 1) * self.cols]
            acc = out.data
            for k, a in enumerate(ri):
                if a:
                    rk = other.data[k * oc:(k + 1) * oc]
                    base = i * oc
                    for j in range(oc):
                        if rk[j]:
                            acc[base + j] += a * rk[j]
        return out

    def apply(self, vec: Sequence[Fraction]) -> List[Fraction]:
        if len(vec) != self.cols:
            raise ValueError("vector length mismatch")
        out = []
        for i in range(self.rows):
            s = ZERO
            for j, v in enumerate(vec):
                if v:
                    s += self.data[i * self.cols + j] * v
            out.append(s)
        return out

    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_zero(self) -> bool:
        return all(x == 0 for x in self.data)

    def is_symmetric(self) -> bool:
        return self.is_square() and all(
            self[i, j] == self[j, i] for i in range(self.rows) for j in range(i + 1, self.cols))

    def is_skew_symmetric(self) -> bool:
        if not self.is_square():
            return False
        for i in range(self.rows):
            if self[i, i] != 0:
                return False
            for j in range(i + 1, self.cols):
                if self[i, j] != -self[j, i]:
                    return False
        return True


def rref(m: RationalMatrix):
    """Reduced row echelon form; returns (rref matrix, pivot column list)."""
    a = m.copy()
    pivots: List[int] = []
    r = 0
    for c in range(a.cols):
        pivot_row = None
        for i in range(r, a.rows):
            if a[i, c] != 0:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        if pivot_row != r:
            for j in range(a.cols):
                a.data[r * a.cols + j], a.data[pivot_row * a.cols + j] = \
                    a.data[pivot_row * a.cols + j], a.data[r * a.cols + j]
        p = a[r, c]
        if p != 1:
            for j in range(c, a.cols):
                a[r, j] = a[r, j] / p
        for i in range(a.rows):
            if i != r and a[i, c] != 0:
                f = a[i, c]
                for j in range(c, a.cols):
                    a[i, j] = a[i, j] - f * a[r, j]
        pivots.append(c)
        r += 1
        if r == a.rows:
            break
    return a, pivots


def rank(m: RationalMatrix) -> int:
    return len(rref(m)[1])


def kernel_basis(m: RationalMatrix) -> List[List[Fraction]]:
    """Basis of the right kernel, from the RREF free columns in ascending order."""
    a, pivots = rref(m)
    pivot_set = set(pivots)
    free = [c for c in range(m.cols) if c not in pivot_set]
    basis = []
    for f in free:
        v = [ZERO] * m.cols
        v[f] = ONE
        for r, c in enumerate(pivots):
            v[c] = -a[r, f]
        basis.append(v)
    return basis


def column_space_complement(m: RationalMatrix):
    """Deterministic complement data for the column space of ``m``.

    Returns (proj, complement_indices) where ``proj`` maps K^rows onto the
    cokernel coordinates: reduce against an echelon basis of the column space
    and read off the coordinates outside the pivot set, ascending.
    """
    ech, pivots = rref(m.transpose())
    basis_rows = [ech.row(i) for i in range(len(pivots))]
    comp = [i for i in range(m.rows) if i not in set(pivots)]
    proj = RationalMatrix.zero(len(comp), m.rows)
    for src in range(m.rows):
        v = [ZERO] * m.rows
        v[src] = ONE
        for prow, pcol in zip(basis_rows, pivots):
            if v[pcol]:
                f = v[pcol]
                for j in range(m.rows):
                    if prow[j]:
                        v[j] -= f * prow[j]
        for out_i, c in enumerate(comp):
            proj[out_i, src] = v[c]
    return proj, comp


def determinant(m: RationalMatrix) -> Fraction:
    """Determinant via fraction-free (Bareiss) elimination."""
    if not m.is_square():
        raise NotSquare("determinant of a non-square matrix")
    n = m.rows
    if n == 0:
        return ONE
    a = [list(m.row(i)) for i in range(n)]
    sign = 1
    prev = ONE
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = None
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    swap = i
                    break
            if swap is None:
                return ZERO
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        pivot = a[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * pivot - a[i][k] * a[k][j]) / prev
            a[i][k] = ZERO
        prev = pivot
    return sign * a[n - 1][n - 1]


class LinalgKit(NamedTuple):
    rank: int
    det: Optional[Fraction]
    kernel_basis: List[List[Fraction]]
    cokernel_dim: int


def linalg_kit(m: RationalMatrix) -> LinalgKit:
    """Rank, determinant (square case), kernel basis and cokernel dimension."""
    kb = kernel_basis(m)
    r = m.cols - len(kb)
    det = determinant(m) if m.is_square() else None
    return LinalgKit(rank=r, det=det, kernel_basis=kb, cokernel_dim=m.rows - r)


def pfaffian_matching_sum(m: RationalMatrix) -> Fraction:
    """Pfaffian via the signed sum over perfect matchings (test oracle)."""
    _check_skew(m)
    n = m.rows
    if n == 0:
        return ONE

    def rec(indices):
        if not indices:
            return ONE
        i = indices[0]
        total = ZERO
        for pos in range(1, len(indices)):
            j = indices[pos]
            a = m[i, j]
            if a:
                rest = indices[1:pos] + indices[pos + 1:]
                sign = -ONE if pos % 2 == 0 else ONE
                total += sign * a * rec(rest)
        return total

    return rec(tuple(range(n)))


def pfaffian_eliminate(m: RationalMatrix) -> Fraction:
    """Pfaffian via skew-symmetric elimination by congruence transvections."""
    _check_skew(m)
    n = m.rows
    if n == 0:
        return ONE
    a = [list(m.row(i)) for i in range(n)]
    sign = 1
    result = ONE
    for k in range(0, n, 2):
        if a[k][k + 1] == 0:
            swap = None
            for r in range(k + 2, n):
                if a[k][r] != 0:
                    swap = r
                    break
            if swap is None:
                return ZERO
            a[k + 1], a[swap] = a[swap], a[k + 1]
            for row in a:
                row[k + 1], row[swap] = row[swap], row[k + 1]
            sign = -sign
        p = a[k][k + 1]
        result *= p
        for j in range(k + 2, n):
            # congruence transvections: clear a[k][j] with row/column k+1,
            # then a[k+1][j] with row/column k; both preserve the pfaffian
            c = -a[k][j] / p
            if c:
                for t in range(n):
                    a[j][t] += c * a[k + 1][t]
                for row in a:
                    row[j] += c * row[k + 1]
            d = a[k + 1][j] / p
            if d:
                for t in range(n):
                    a[j][t] += d * a[k][t]
                for row in a:
                    row[j] += d * row[k]
    return sign * result


def pfaffian(m: RationalMatrix) -> Fraction:
    """Exact Pfaffian of an even skew-symmetric matrix.

    Small matrices go through the combinatorial matching sum; larger ones
    through congruence elimination.  Both agree exactly.
    """
    _check_skew(m)
    if m.rows <= 12:
        return pfaffian_matching_sum(m)
    return pfaffian_eliminate(m)


def _check_skew(m: RationalMatrix) -> None:
    if not m.is_square():
        raise NotSquare("pfaffian of a non-square matrix")
    if m.rows % 2 != 0:
        raise OddDimension("pfaffian needs even size, got %d" % m.rows)
    if not m.is_skew_symmetric():
        raise NotSkewSymmetric("matrix is not exactly skew-symmetric")


def solve(m: RationalMatrix, rhs: Sequence[Fraction]) -> Optional[List[Fraction]]:
    """One solution of m x = rhs, or None if inconsistent."""
    aug = RationalMatrix.zero(m.rows, m.cols + 1)
    for i in range(m.rows):
        for j in range(m.cols):
            aug[i, j] = m[i, j]
        aug[i, m.cols] = _frac(rhs[i])
    ech, pivots = rref(aug)
    if m.cols in pivots:
        return None
    x = [ZERO] * m.cols
    for r, c in enumerate(pivots):
        x[c] = ech[r, m.cols]
    return x


def coordinates_in_span(basis: List[List[Fraction]], vec: Sequence[Fraction]) -> Optional[List[Fraction]]:
    """Coordinates of vec in the span of basis vectors (columns), or None."""
    if not basis:
        return [] if all(x == 0 for x in vec) else None
    m = RationalMatrix.zero(len(vec), len(basis))
    for j, b in enumerate(basis):
        for i, x in enumerate(b):
            m[i, j] = x
    return solve(m, list(vec))


def interpolate_polynomial(points: Sequence) -> List[Fraction]:
    """Coefficients c_0..c_d of the unique degree-<n polynomial through points.

    ``points`` is a sequence of (x, y) pairs with distinct rational x.
    """
    n = len(points)
    vm = RationalMatrix.zero(n, n)
    ys = []
    for i, (x, y) in enumerate(points):
        x = _frac(x)
        p = ONE
        for j in range(n):
            vm[i, j] = p
            p *= x
        ys.append(_frac(y))
    sol = solve(vm, ys)
    assert sol is not None
    while sol and sol[-1] == 0:
        sol.pop()
    return sol
