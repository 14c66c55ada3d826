"""Exact dense linear algebra over the scalar field.

Matrices are immutable grids of exact scalars (Fraction or
GaussianRational).  Subspaces of coordinate n-space are stored through
their unique reduced row-echelon basis, so equal subspaces compare equal
structurally.  Elimination uses deterministic pivoting (first nonzero row
in column order), which keeps every derived object canonical.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .exactnum import GaussianRational, Scalar, Singular, as_scalar

Vector = tuple[Scalar, ...]


class AmbientMismatch(ValueError):
    """Subspace operands live in different ambient dimensions."""


def as_vector(entries: Iterable) -> Vector:
    return tuple(as_scalar(x) for x in entries)


class Matrix:
    """Immutable rectangular matrix of exact scalars."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries: Sequence[Sequence], cols: int | None = None):
        grid = tuple(as_vector(row) for row in entries)
        if grid:
            width = len(grid[0])
            if any(len(row) != width for row in grid):
                raise ValueError("ragged matrix")
            if cols is not None and cols != width:
                raise ValueError("explicit column count disagrees with rows")
            cols = width
        elif cols is None:
            raise ValueError("empty matrix needs an explicit column count")
        object.__setattr__(self, "rows", len(grid))
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "entries", grid)

    def __setattr__(self, name, value):
        raise AttributeError("Matrix is immutable")

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def zero(cls, rows: int, cols: int) -> "Matrix":
        return cls([[0] * cols for _ in range(rows)], cols=cols)

    def __eq__(self, other):
        if isinstance(other, Matrix):
            return (self.rows, self.cols, self.entries) == (other.rows, other.cols, other.entries)
        return NotImplemented

    def __hash__(self):
        return hash((self.rows, self.cols, self.entries))

    def __repr__(self):
        body = "; ".join(" ".join(str(x) for x in row) for row in self.entries)
        return f"Matrix({self.rows}x{self.cols}: {body})"

    def __getitem__(self, pos: tuple[int, int]) -> Scalar:
        i, j = pos
        return self.entries[i][j]

    def row(self, i: int) -> Vector:
        return self.entries[i]

    def col(self, j: int) -> Vector:
        return tuple(row[j] for row in self.entries)

    def transpose(self) -> "Matrix":
        return Matrix([self.col(j) for j in range(self.cols)], cols=self.rows)

    def __mul__(self, other):
        if isinstance(other, Matrix):
            if self.cols != other.rows:
                raise ValueError("matrix shape mismatch")
            return Matrix(
                [[sum((self.entries[i][k] * other.entries[k][j] for k in range(self.cols)),
                      Fraction(0)) for j in range(other.cols)]
                 for i in range(self.rows)],
                cols=other.cols)
        return NotImplemented

    def apply(self, v: Sequence) -> Vector:
        """Matrix-vector product."""
        vec = as_vector(v)
        if len(vec) != self.cols:
            raise ValueError("vector length mismatch")
        return tuple(sum((row[k] * vec[k] for k in range(self.cols)), Fraction(0))
                     for row in self.entries)

    def stack(self, other: "Matrix") -> "Matrix":
        if self.cols != other.cols:
            raise ValueError("column mismatch in stack")
        return Matrix(self.entries + other.entries, cols=self.cols)

    def inverse(self) -> "Matrix":
        """Inverse of a square matrix; raises Singular when rank-deficient."""
        if self.rows != self.cols:
            raise Singular("only square matrices are invertible")
        n = self.rows
        aug = [list(self.entries[i]) + [Fraction(1) if i == j else Fraction(0)
                                        for j in range(n)] for i in range(n)]
        for col in range(n):
            pivot = next((r for r in range(col, n) if aug[r][col] != 0), None)
            if pivot is None:
                raise Singular("matrix is singular")
            if pivot != col:
                aug[col], aug[pivot] = aug[pivot], aug[col]
            inv = 1 / aug[col][col]
            aug[col] = [x * inv for x in aug[col]]
            for r in range(n):
                if r != col and aug[r][col] != 0:
                    f = aug[r][col]
                    aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
        return Matrix([row[n:] for row in aug], cols=n)

    def is_invertible(self) -> bool:
        if self.rows != self.cols:
            return False
        return rref(self)[1] == self.rows


def rref(m: Matrix) -> tuple[Matrix, int]:
    """Unique reduced row-echelon form and rank.

    Deterministic pivoting: the first row with a nonzero entry in the
    current column is used, so the output is canonical for the input.
    """
    rows = [list(r) for r in m.entries]
    nrows, ncols = m.rows, m.cols
    pivot_row = 0
    for col in range(ncols):
        pivot = next((r for r in range(pivot_row, nrows) if rows[r][col] != 0), None)
        if pivot is None:
            continue
        if pivot != pivot_row:
            rows[pivot_row], rows[pivot] = rows[pivot], rows[pivot_row]
        inv = 1 / rows[pivot_row][col]
        if inv != 1:
            rows[pivot_row] = [x * inv for x in rows[pivot_row]]
        for r in range(nrows):
            if r != pivot_row and rows[r][col] != 0:
                f = rows[r][col]
                rows[r] = [x - f * y for x, y in zip(rows[r], rows[pivot_row])]
        pivot_row += 1
        if pivot_row == nrows:
            break
    return Matrix(rows, cols=ncols), pivot_row


def rank(m: Matrix) -> int:
    return rref(m)[1]


class Subspace:
    """Linear subspace of coordinate n-space with a canonical RREF basis."""

    __slots__ = ("n", "basis")

    def __init__(self, n: int, basis: Matrix):
        if basis.cols != n:
            raise ValueError("basis width disagrees with ambient dimension")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "basis", basis)

    def __setattr__(self, name, value):
        raise AttributeError("Subspace is immutable")

    @classmethod
    def from_vectors(cls, n: int, vectors: Iterable[Sequence]) -> "Subspace":
        rows = [as_vector(v) for v in vectors]
        if not rows:
            return cls.zero(n)
        reduced, rk = rref(Matrix(rows, cols=n))
        return cls(n, Matrix(reduced.entries[:rk], cols=n))

    @classmethod
    def zero(cls, n: int) -> "Subspace":
        return cls(n, Matrix.zero(0, n))

    @classmethod
    def full(cls, n: int) -> "Subspace":
        return cls(n, Matrix.identity(n))

    @property
    def dim(self) -> int:
        return self.basis.rows

    def vectors(self) -> tuple[Vector, ...]:
        return self.basis.entries

    def __eq__(self, other):
        if isinstance(other, Subspace):
            return self.n == other.n and self.basis == other.basis
        return NotImplemented

    def __hash__(self):
        return hash((self.n, self.basis))

    def __repr__(self):
        return f"Subspace(n={self.n}, dim={self.dim})"

    def contains_vector(self, v: Sequence) -> bool:
        vec = as_vector(v)
        if len(vec) != self.n:
            raise AmbientMismatch("vector length disagrees with ambient dimension")
        if all(x == 0 for x in vec):
            return True
        stacked = self.basis.stack(Matrix([vec], cols=self.n))
        return rank(stacked) == self.dim

    def contains(self, other: "Subspace") -> bool:
        _check_ambient(self, other)
        return all(self.contains_vector(v) for v in other.vectors())

    def sum(self, other: "Subspace") -> "Subspace":
        _check_ambient(self, other)
        return Subspace.from_vectors(self.n, self.vectors() + other.vectors())

    def annihilator(self) -> "Subspace":
        """All x with B @ x = 0 for the basis matrix B (dual complement)."""
        return nullspace(self.basis)

    def intersect(self, other: "Subspace") -> "Subspace":
        _check_ambient(self, other)
        return self.annihilator().sum(other.annihilator()).annihilator()

    def is_zero(self) -> bool:
        return self.dim == 0


def _check_ambient(u: Subspace, v: Subspace):
    if u.n != v.n:
        raise AmbientMismatch(f"ambient dimensions differ: {u.n} vs {v.n}")


def nullspace(m: Matrix) -> Subspace:
    """Solution space of m @ x = 0 as a canonical Subspace."""
    reduced, rk = rref(m)
    n = m.cols
    pivots: list[int] = []
    col = 0
    for r in range(rk):
        while reduced.entries[r][col] == 0:
            col += 1
        pivots.append(col)
        col += 1
    free = [c for c in range(n) if c not in pivots]
    basis_vectors = []
    for fc in free:
        v = [Fraction(0)] * n
        v[fc] = Fraction(1)
        for r, pc in enumerate(pivots):
            v[pc] = -reduced.entries[r][fc]
        basis_vectors.append(v)
    return Subspace.from_vectors(n, basis_vectors)


def nullspace_sparse(rows: Iterable[dict[int, Scalar]], ncols: int) -> Subspace:
    """Nullspace of a system given as sparse rows {column: coefficient}.

    Equivalent to :func:`nullspace` on the dense matrix but suited to the
    large, very sparse systems arising from Leibniz-rule equations.
    """
    echelon: dict[int, dict[int, Scalar]] = {}
    for r in rows:
        row = {c: v for c, v in r.items() if v != 0}
        while row:
            c = min(row)
            piv = echelon.get(c)
            if piv is None:
                inv = 1 / row[c]
                echelon[c] = {cc: v * inv for cc, v in row.items()}
                break
            f = row.pop(c)
            for cc, v in piv.items():
                if cc == c:
                    continue
                nv = row.get(cc, Fraction(0)) - f * v
                if nv == 0:
                    row.pop(cc, None)
                else:
                    row[cc] = nv
    # clear entries above every pivot so the echelon rows form the RREF
    for c in sorted(echelon, reverse=True):
        prow = echelon[c]
        for c2, r2 in echelon.items():
            if c2 >= c:
                continue
            f = r2.get(c)
            if not f:
                continue
            for cc, v in prow.items():
                if cc == c:
                    continue
                nv = r2.get(cc, Fraction(0)) - f * v
                if nv == 0:
                    r2.pop(cc, None)
                else:
                    r2[cc] = nv
            r2.pop(c, None)
    pivots = sorted(echelon)
    free = [c for c in range(ncols) if c not in echelon]
    basis_vectors = []
    for fc in free:
        v = [Fraction(0)] * ncols
        v[fc] = Fraction(1)
        for pc in pivots:
            coeff = echelon[pc].get(fc)
            if coeff:
                v[pc] = -coeff
        basis_vectors.append(v)
    return Subspace.from_vectors(ncols, basis_vectors)


def subspace_ops(u: Subspace, v: Subspace, kind: str):
    """Sum / intersection / containment with a string selector."""
    if kind == "sum":
        return u.sum(v)
    if kind == "intersect":
        return u.intersect(v)
    if kind == "contains":
        return u.contains(v)
    raise ValueError(f"unknown subspace operation {kind!r}")
