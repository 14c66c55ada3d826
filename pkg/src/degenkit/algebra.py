"""Finite-dimensional algebras given by structure constants.

An ``Algebra`` of dimension n stores the full tensor c with
``c[i][j][k]`` = coefficient of e_k in the product e_i * e_j (0-based
internally; the construction API speaks 1-based indices to match the
usual e_1..e_n conventions).  The tensor is always fully expanded:
commutative or anticommutative completion happens once, inside
:func:`make_algebra`.

The module also provides the identity checks for the classical varieties,
the GL action by change of basis, direct sums, subspace products and the
derived / lower-central / plenary power series.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .exactnum import Scalar, Singular, as_scalar, format_scalar, parse_scalar
from .linalg import AmbientMismatch, Matrix, Subspace, Vector, as_vector


class IndexOutOfRange(ValueError):
    """A product entry addresses a basis index outside 1..n."""


class SymmetryConflict(ValueError):
    """Explicit product entries contradict the requested completion."""


class Algebra:
    """Immutable structure-constant tensor of a finite-dimensional algebra."""

    __slots__ = ("n", "c", "_pairs")

    def __init__(self, c: Sequence[Sequence[Sequence]]):
        n = len(c)
        if n < 1:
            raise ValueError("dimension must be at least 1")
        tensor = tuple(
            tuple(as_vector(c[i][j]) for j in range(n)) for i in range(n))
        for i in range(n):
            if len(tensor[i]) != n or any(len(row) != n for row in tensor[i]):
                raise ValueError("structure tensor must be n x n x n")
        pairs = {}
        for i in range(n):
            for j in range(n):
                nz = tuple((k, v) for k, v in enumerate(tensor[i][j]) if v != 0)
                if nz:
                    pairs[(i, j)] = nz
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "c", tensor)
        object.__setattr__(self, "_pairs", pairs)

    def __setattr__(self, name, value):
        raise AttributeError("Algebra is immutable")

    def __eq__(self, other):
        if isinstance(other, Algebra):
            return self.n == other.n and self.c == other.c
        return NotImplemented

    def __hash__(self):
        return hash((self.n, self.c))

    def __repr__(self):
        return f"Algebra(n={self.n}, products={len(self._pairs)})"

    # -- multiplication ----------------------------------------------------

    def row(self, i: int, j: int) -> Vector:
        """Coordinates of e_i * e_j (0-based indices)."""
        return self.c[i][j]

    def product(self, u: Sequence, v: Sequence) -> Vector:
        """Bilinear product of two coordinate vectors."""
        u = as_vector(u)
        v = as_vector(v)
        out = [Fraction(0)] * self.n
        for (i, j), terms in self._pairs.items():
            f = u[i] * v[j]
            if f == 0:
                continue
            for k, coeff in terms:
                out[k] = out[k] + f * coeff
        return tuple(out)

    def basis_vector(self, i: int) -> Vector:
        """Coordinate vector of e_i (1-based index)."""
        if not 1 <= i <= self.n:
            raise IndexOutOfRange(f"basis index {i} outside 1..{self.n}")
        return tuple(Fraction(1) if k == i - 1 else Fraction(0) for k in range(self.n))

    def iter_products(self):
        """Yield nonzero entries as 0-based (i, j, k, coeff)."""
        for (i, j), terms in self._pairs.items():
            for k, coeff in terms:
                yield i, j, k, coeff

    def nonzero_products(self) -> list[tuple[int, int, int, Scalar]]:
        """All nonzero entries as 1-based (i, j, k, coeff), sorted."""
        out = []
        for (i, j), terms in self._pairs.items():
            for k, coeff in terms:
                out.append((i + 1, j + 1, k + 1, coeff))
        out.sort(key=lambda item: item[:3])
        return out

    def table(self) -> str:
        """Human-readable multiplication table (nonzero products only)."""
        lines = []
        for i, j, k, coeff in self.nonzero_products():
            cs = "" if coeff == 1 else f"{format_scalar(coeff)} "
            lines.append(f"e{i} e{j} = {cs}e{k}")
        return "\n".join(lines) if lines else "(zero multiplication)"


def mult_vec_basis(a: Algebra, v: Sequence, j: int) -> Vector:
    """v * e_j for a coordinate vector v and 0-based basis index j."""
    out = [Fraction(0)] * a.n
    for i, x in enumerate(v):
        if x == 0:
            continue
        terms = a._pairs.get((i, j))
        if terms:
            for k, coeff in terms:
                out[k] = out[k] + x * coeff
    return tuple(out)


def mult_basis_vec(a: Algebra, i: int, v: Sequence) -> Vector:
    """e_i * v for a 0-based basis index i and coordinate vector v."""
    out = [Fraction(0)] * a.n
    for j, x in enumerate(v):
        if x == 0:
            continue
        terms = a._pairs.get((i, j))
        if terms:
            for k, coeff in terms:
                out[k] = out[k] + x * coeff
    return tuple(out)


def left_mult_matrix(a: Algebra, v: Sequence) -> Matrix:
    """Matrix of x -> v * x in the standard basis."""
    cols = [a.product(v, a.basis_vector(j + 1)) for j in range(a.n)]
    return Matrix([[cols[j][l] for j in range(a.n)] for l in range(a.n)])


def right_mult_matrix(a: Algebra, v: Sequence) -> Matrix:
    """Matrix of x -> x * v in the standard basis."""
    cols = [a.product(a.basis_vector(i + 1), v) for i in range(a.n)]
    return Matrix([[cols[i][l] for i in range(a.n)] for l in range(a.n)])


# -- construction -----------------------------------------------------------


def make_algebra(n: int,
                 products: Iterable[tuple],
                 symmetry: str = "none") -> Algebra:
    """Build an algebra from sparse 1-based products with optional completion.

    ``products`` holds (i, j, k, coeff) tuples.  With ``symmetry='commutative'``
    the mirror entry c[j][i][k] = coeff is filled in, with ``'anticommutative'``
    the mirror is -coeff and diagonal products must vanish.  Explicit entries
    that contradict the completion raise :class:`SymmetryConflict`.
    """
    if symmetry not in ("none", "commutative", "anticommutative"):
        raise ValueError(f"unknown symmetry {symmetry!r}")
    explicit: dict[tuple[int, int, int], Scalar] = {}
    for item in products:
        i, j, k, coeff = item
        for idx in (i, j, k):
            if not isinstance(idx, int) or not 1 <= idx <= n:
                raise IndexOutOfRange(f"index {idx} outside 1..{n}")
        key = (i - 1, j - 1, k - 1)
        if key in explicit:
            raise ValueError(f"duplicate product entry for {(i, j, k)}")
        explicit[key] = as_scalar(coeff)

    tensor = [[[Fraction(0)] * n for _ in range(n)] for _ in range(n)]
    for (i, j, k), coeff in explicit.items():
        if symmetry == "anticommutative" and i == j and coeff != 0:
            raise SymmetryConflict(
                f"anticommutative product e{i+1}*e{i+1} must vanish")
        tensor[i][j][k] = coeff
    if symmetry != "none":
        sign = 1 if symmetry == "commutative" else -1
        for (i, j, k), coeff in explicit.items():
            mirror = (j, i, k)
            want = sign * coeff
            if mirror in explicit:
                if explicit[mirror] != want:
                    raise SymmetryConflict(
                        f"entries for e{i+1}e{j+1} and e{j+1}e{i+1} contradict "
                        f"{symmetry} completion at component {k+1}")
            else:
                tensor[j][i][k] = want
    return Algebra(tensor)


def direct_sum(a: Algebra, b: Algebra) -> Algebra:
    """Block-diagonal sum: cross products vanish."""
    n = a.n + b.n
    tensor = [[[Fraction(0)] * n for _ in range(n)] for _ in range(n)]
    for i in range(a.n):
        for j in range(a.n):
            for k in range(a.n):
                tensor[i][j][k] = a.c[i][j][k]
    for i in range(b.n):
        for j in range(b.n):
            for k in range(b.n):
                tensor[a.n + i][a.n + j][a.n + k] = b.c[i][j][k]
    return Algebra(tensor)


def abelian(n: int) -> Algebra:
    """The n-dimensional algebra with zero multiplication."""
    return make_algebra(n, [])


# -- variety identity checks -------------------------------------------------


@dataclass(frozen=True)
class VarietyReport:
    variety: str
    passed: bool
    violations: tuple[tuple[str, tuple[int, ...], Vector], ...]

    def __bool__(self):
        return self.passed


def _is_zero_vec(v: Sequence) -> bool:
    return all(x == 0 for x in v)


def _sub(u: Sequence, v: Sequence) -> Vector:
    return tuple(x - y for x, y in zip(u, v))


def _add(u: Sequence, v: Sequence) -> Vector:
    return tuple(x + y for x, y in zip(u, v))


def _commutativity_violations(a: Algebra):
    for i in range(a.n):
        for j in range(i + 1, a.n):
            r = _sub(a.row(i, j), a.row(j, i))
            if not _is_zero_vec(r):
                yield ("commutativity", (i + 1, j + 1), r)


def _anticommutativity_violations(a: Algebra):
    for i in range(a.n):
        for j in range(i, a.n):
            r = _add(a.row(i, j), a.row(j, i))
            if not _is_zero_vec(r):
                yield ("anticommutativity", (i + 1, j + 1), r)


def _associativity_violations(a: Algebra):
    n = a.n
    nonzero = [[not _is_zero_vec(a.row(i, j)) for j in range(n)] for i in range(n)]
    zero = tuple(Fraction(0) for _ in range(n))
    for i in range(n):
        for j in range(n):
            left = a.row(i, j)
            left_live = nonzero[i][j]
            for k in range(n):
                if not left_live and not nonzero[j][k]:
                    continue
                t1 = mult_vec_basis(a, left, k) if left_live else zero
                t2 = mult_basis_vec(a, i, a.row(j, k)) if nonzero[j][k] else zero
                r = _sub(t1, t2)
                if not _is_zero_vec(r):
                    yield ("associativity", (i + 1, j + 1, k + 1), r)


def _jacobi_violations(a: Algebra):
    for i in range(a.n):
        for j in range(i + 1, a.n):
            for k in range(j + 1, a.n):
                total = mult_basis_vec(a, i, a.row(j, k))
                total = _add(total, mult_basis_vec(a, j, a.row(k, i)))
                total = _add(total, mult_basis_vec(a, k, a.row(i, j)))
                if not _is_zero_vec(total):
                    yield ("jacobi", (i + 1, j + 1, k + 1), total)


def _jordan_linearized_violations(a: Algebra):
    # Full linearization of (x^2 y) x = x^2 (y x): for basis indices
    # p <= q <= r and all y, sum over the three pair choices of
    # ((e_p e_q) e_y) e_r - (e_p e_q)(e_y e_r).  Complete in char 0.
    # Pairings with e_p e_q = 0 contribute nothing and are skipped, which
    # makes the n^4 sweep cheap on sparse tables.
    n = a.n
    live: dict[tuple[int, int], Vector] = {}
    for p in range(n):
        for q in range(p, n):
            row = a.row(p, q)
            if not _is_zero_vec(row):
                live[(p, q)] = row
    # (e_p e_q) e_y for the live pairs, all y
    left_by_y = {key: [mult_vec_basis(a, row, y) for y in range(n)]
                 for key, row in live.items()}
    for p in range(n):
        for q in range(p, n):
            for r in range(q, n):
                pairings = [(key, v) for key, v in
                            (((p, q), r), ((p, r), q), ((q, r), p))
                            if key in live]
                if not pairings:
                    continue
                for y in range(n):
                    total = [Fraction(0)] * n
                    for key, v in pairings:
                        t1 = mult_vec_basis(a, left_by_y[key][y], v)
                        t2 = a.product(live[key], a.row(y, v))
                        for idx in range(n):
                            total[idx] = total[idx] + t1[idx] - t2[idx]
                    if not _is_zero_vec(total):
                        yield ("jordan-linearized", (p + 1, q + 1, r + 1, y + 1),
                               tuple(total))


def check_variety(a: Algebra, variety: str) -> VarietyReport:
    """Check the defining identities of a variety on all basis tuples.

    Varieties: ``commutative``, ``anticommutative``, ``associative``,
    ``lie`` (anticommutativity + Jacobi), ``jordan`` (commutativity +
    linearized Jordan identity).  Failures are reported, never raised.
    """
    checks = {
        "commutative": (_commutativity_violations,),
        "anticommutative": (_anticommutativity_violations,),
        "associative": (_associativity_violations,),
        "lie": (_anticommutativity_violations, _jacobi_violations),
        "jordan": (_commutativity_violations, _jordan_linearized_violations),
    }
    if variety not in checks:
        raise ValueError(f"unknown variety {variety!r}")
    violations = []
    for gen in checks[variety]:
        violations.extend(gen(a))
    violations.sort(key=lambda item: (item[0], item[1]))
    return VarietyReport(variety, not violations, tuple(violations))


# -- GL action ----------------------------------------------------------------


def apply_basis_change(a: Algebra, p: Matrix) -> Algebra:
    """The GL action g * A with g the map sending e_i to the i-th column of p.

    (g*A)(x, y) = g(A(g^{-1} x, g^{-1} y)); raises Singular for a
    non-invertible p.  Isomorphism class is preserved.
    """
    if p.rows != a.n or p.cols != a.n:
        raise ValueError("basis-change matrix has wrong shape")
    pinv = p.inverse()
    cols = [pinv.col(i) for i in range(a.n)]
    tensor = []
    for i in range(a.n):
        rows = []
        for j in range(a.n):
            w = a.product(cols[i], cols[j])
            rows.append(p.apply(w))
        tensor.append(rows)
    return Algebra(tensor)


# -- subspace products and power series ---------------------------------------


def subspace_product(a: Algebra, u: Subspace, v: Subspace,
                     ordered: bool = False) -> Subspace:
    """Span of {x*y, y*x : x in basis(u), y in basis(v)}.

    With ``ordered=True`` only the products x*y are spanned, which is what
    order-sensitive containment rules (the associative component rule)
    need.
    """
    if u.n != a.n or v.n != a.n:
        raise AmbientMismatch("subspace ambient dimension disagrees with algebra")
    vectors = []
    for x in u.vectors():
        for y in v.vectors():
            vectors.append(a.product(x, y))
            if not ordered:
                vectors.append(a.product(y, x))
    return Subspace.from_vectors(a.n, vectors)


def power_series(a: Algebra, kind: str) -> list[Subspace]:
    """Derived, lower-central or plenary power series, until stabilization.

    Every series starts with the full space.  derived: s_{k+1} = s_k s_k;
    lower_central: s_{k+1} = A s_k + s_k A; plenary: A^k = sum over
    i + j = k of A^i A^j.
    """
    full = Subspace.full(a.n)
    series = [full]
    if kind == "derived":
        while True:
            nxt = subspace_product(a, series[-1], series[-1])
            if nxt == series[-1]:
                return series
            series.append(nxt)
    if kind == "lower_central":
        while True:
            nxt = subspace_product(a, full, series[-1])
            if nxt == series[-1]:
                return series
            series.append(nxt)
    if kind == "plenary":
        powers = [None, full]  # powers[k] = A^k
        while True:
            k = len(powers)
            nxt = Subspace.zero(a.n)
            for i in range(1, k):
                nxt = nxt.sum(subspace_product(a, powers[i], powers[k - i]))
            if nxt == powers[-1] or len(powers) > a.n + 3:
                return series
            powers.append(nxt)
            series.append(nxt)
    raise ValueError(f"unknown power series kind {kind!r}")


@dataclass(frozen=True)
class StructureFlags:
    nilpotent: bool
    nilpotency_class: int | None
    solvable: bool
    solvability_index: int | None


def structure_flags(a: Algebra) -> StructureFlags:
    """Nilpotency and solvability via the power series."""
    lcs = power_series(a, "lower_central")
    der = power_series(a, "derived")
    nilpotent = lcs[-1].is_zero()
    solvable = der[-1].is_zero()
    return StructureFlags(
        nilpotent=nilpotent,
        nilpotency_class=len(lcs) - 1 if nilpotent else None,
        solvable=solvable,
        solvability_index=len(der) - 1 if solvable else None,
    )


def is_idempotent(a: Algebra, v: Sequence) -> bool:
    """Exact test v * v = v."""
    vec = as_vector(v)
    return a.product(vec, vec) == vec


# -- JSON interchange ----------------------------------------------------------


def algebra_to_dict(a: Algebra) -> dict:
    """Serializable form: fully expanded products, scalar grammar coefficients."""
    products = [{"i": i, "j": j, "k": k, "c": format_scalar(coeff)}
                for i, j, k, coeff in a.nonzero_products()]
    field = "Qi" if any(not isinstance(coeff, Fraction)
                        for _, _, _, coeff in a.nonzero_products()) else "Q"
    return {"dim": a.n, "field": field, "symmetry": "none", "products": products}


def algebra_from_dict(data: dict) -> Algebra:
    """Inverse of :func:`algebra_to_dict`; applies the declared completion.

    Raises SymmetryConflict for contradictory entries and ValueError for
    Gaussian coefficients in a file declared over Q.
    """
    n = data["dim"]
    field = data.get("field", "Q")
    symmetry = data.get("symmetry", "none")
    products = []
    for item in data.get("products", []):
        coeff = parse_scalar(item["c"]) if isinstance(item["c"], str) else as_scalar(item["c"])
        if field == "Q" and not isinstance(coeff, Fraction):
            raise ValueError("field Q file contains a Gaussian coefficient")
        products.append((item["i"], item["j"], item["k"], coeff))
    return make_algebra(n, products, symmetry)
