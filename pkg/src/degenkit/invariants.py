"""Orbit-closure invariants used to separate algebras under degeneration.

Derivation-algebra dimension, two-sided annihilator, maximal abelian
coordinate ideal, and the aggregation of everything into an
``InvariantProfile``.  ``degeneration_obstructions`` turns the invariants
into necessary-condition checks: an empty result means "no obstruction
found", never "a degeneration exists".

The abelian-ideal search runs over coordinate subspaces (spans of subsets
of the basis) only; that matches the canonical bases of all catalog
algebras but is in general basis-dependent.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .algebra import Algebra, check_variety, power_series, structure_flags
from .exactnum import Scalar, format_scalar
from .linalg import Matrix, Subspace, nullspace, nullspace_sparse


class DimensionMismatch(ValueError):
    """Obstruction checks need algebras of equal dimension."""


class DimensionTooLarge(ValueError):
    """The exhaustive coordinate-ideal search is capped at n = 16."""


def derivation_dim(a: Algebra) -> tuple[int, Subspace]:
    """Dimension and basis of the derivation algebra.

    A derivation is a linear map D with D(e_i e_j) = D(e_i) e_j + e_i D(e_j).
    Writing D(e_k) = sum_l d[k][l] e_l, the Leibniz rule becomes, for every
    (i, j, l), the linear equation

        sum_k c[i][j][k] d[k][l]
        - sum_k d[i][k] c[k][j][l] - sum_k d[j][k] c[i][k][l] = 0

    in the n^2 unknowns d[k][l] (flattened row-major: column k*n + l).
    Returns the nullspace of that system.
    """
    n = a.n
    rows: set[tuple[tuple[int, Scalar], ...]] = set()
    for i in range(n):
        for j in range(n):
            cij = a.row(i, j)
            for l in range(n):
                row: dict[int, Scalar] = {}
                for k in range(n):
                    v = cij[k]
                    if v != 0:
                        col = k * n + l
                        row[col] = row.get(col, Fraction(0)) + v
                for k in range(n):
                    v = a.c[k][j][l]
                    if v != 0:
                        col = i * n + k
                        row[col] = row.get(col, Fraction(0)) - v
                    w = a.c[i][k][l]
                    if w != 0:
                        col = j * n + k
                        row[col] = row.get(col, Fraction(0)) - w
                frozen = tuple(sorted((c, v) for c, v in row.items() if v != 0))
                if frozen:
                    rows.add(frozen)
    space = nullspace_sparse((dict(r) for r in sorted(rows)), n * n)
    return space.dim, space


def derivation_matrix(flat, n: int) -> Matrix:
    """Reshape a length-n^2 derivation vector into its matrix d[k][l]."""
    return Matrix([[flat[k * n + l] for l in range(n)] for k in range(n)])


def is_derivation(a: Algebra, d: Matrix) -> bool:
    """Independent Leibniz re-verification of a candidate derivation matrix."""
    n = a.n
    dt = d.transpose()

    def image(v):
        return dt.apply(v)

    for i in range(n):
        ei = a.basis_vector(i + 1)
        for j in range(n):
            ej = a.basis_vector(j + 1)
            lhs = image(a.row(i, j))
            rhs = tuple(x + y for x, y in zip(a.product(image(ei), ej),
                                              a.product(ei, image(ej))))
            if lhs != rhs:
                return False
    return True


def annihilator_dim(a: Algebra) -> int:
    """dim {x : x A = A x = 0}, via stacked multiplication operators."""
    n = a.n
    rows = []
    for j in range(n):
        for l in range(n):
            rows.append([a.c[i][j][l] for i in range(n)])   # (x e_j)_l
            rows.append([a.c[j][i][l] for i in range(n)])   # (e_j x)_l
    return nullspace(Matrix(rows, cols=n)).dim


def _is_abelian_coordinate_ideal(a: Algebra, subset: tuple[int, ...]) -> bool:
    inside = set(subset)
    for s in subset:
        for j in range(a.n):
            for row in (a.row(s, j), a.row(j, s)):
                for k, v in enumerate(row):
                    if v != 0 and k not in inside:
                        return False
        for s2 in subset:
            if any(v != 0 for v in a.row(s, s2)):
                return False
    return True


def max_abelian_coordinate_ideal(a: Algebra) -> tuple[int, tuple[int, ...]]:
    """Largest span of basis vectors that is a two-sided ideal with zero square.

    Exhaustive search over all 2^n subsets, largest size first; ties broken
    by lexicographically least index subset.  Returns (dimension, 1-based
    indices).  Raises :class:`DimensionTooLarge` for n > 16.
    """
    if a.n > 16:
        raise DimensionTooLarge(f"coordinate-ideal search capped at 16, got {a.n}")
    for size in range(a.n, -1, -1):
        for subset in itertools.combinations(range(a.n), size):
            if _is_abelian_coordinate_ideal(a, subset):
                return size, tuple(s + 1 for s in subset)
    return 0, ()


@dataclass(frozen=True)
class InvariantProfile:
    """Degeneration-invariant data of an algebra, reproducible from it alone."""

    dim: int
    commutative: bool
    anticommutative: bool
    associative: bool
    lie: bool
    jordan: bool
    nilpotent: bool
    nilpotency_class: int | None
    solvable: bool
    solvability_index: int | None
    lower_central_dims: tuple[int, ...]
    plenary_dims: tuple[int, ...]
    dim_der: int
    dim_ann: int
    coord_ab_dim: int

    def to_dict(self) -> dict:
        return {
            "anticommutative": self.anticommutative,
            "associative": self.associative,
            "commutative": self.commutative,
            "coord_ab_dim": self.coord_ab_dim,
            "dim": self.dim,
            "dim_ann": self.dim_ann,
            "dim_der": self.dim_der,
            "jordan": self.jordan,
            "lie": self.lie,
            "lower_central_dims": list(self.lower_central_dims),
            "nilpotency_class": self.nilpotency_class,
            "nilpotent": self.nilpotent,
            "plenary_dims": list(self.plenary_dims),
            "solvability_index": self.solvability_index,
            "solvable": self.solvable,
        }

    def isomorphism_invariants(self) -> tuple:
        """The fields that are invariant under any basis change.

        coord_ab_dim is excluded: the coordinate-ideal search depends on
        the basis, so it must not decide whether two tables can be
        isomorphic.
        """
        return (self.dim, self.commutative, self.anticommutative,
                self.associative, self.lie, self.jordan, self.nilpotent,
                self.nilpotency_class, self.solvable, self.solvability_index,
                self.lower_central_dims, self.plenary_dims, self.dim_der,
                self.dim_ann)


def invariant_profile(a: Algebra) -> InvariantProfile:
    flags = structure_flags(a)
    return InvariantProfile(
        dim=a.n,
        commutative=check_variety(a, "commutative").passed,
        anticommutative=check_variety(a, "anticommutative").passed,
        associative=check_variety(a, "associative").passed,
        lie=check_variety(a, "lie").passed,
        jordan=check_variety(a, "jordan").passed,
        nilpotent=flags.nilpotent,
        nilpotency_class=flags.nilpotency_class,
        solvable=flags.solvable,
        solvability_index=flags.solvability_index,
        lower_central_dims=tuple(s.dim for s in power_series(a, "lower_central")),
        plenary_dims=tuple(s.dim for s in power_series(a, "plenary")),
        dim_der=derivation_dim(a)[0],
        dim_ann=annihilator_dim(a),
        coord_ab_dim=max_abelian_coordinate_ideal(a)[0],
    )


@dataclass(frozen=True)
class Obstruction:
    """A necessary condition for a proper degeneration that fails to hold."""

    kind: str
    detail: tuple

    def describe(self) -> str:
        if self.kind == "nilpotency_closure":
            return "source is nilpotent but the target is not"
        if self.kind == "der_dim_non_increasing":
            return (f"dim Der does not strictly increase: "
                    f"{self.detail[0]} >= {self.detail[1]}")
        if self.kind == "ab_dim_non_increasing":
            return (f"max abelian coordinate ideal does not strictly increase: "
                    f"{self.detail[0]} >= {self.detail[1]}")
        return f"{self.kind}: {self.detail}"


def degeneration_obstructions(source: Algebra, target: Algebra) -> list[Obstruction]:
    """Necessary-condition checks against 'source properly degenerates to target'.

    Emits nilpotency_closure when the source is nilpotent and the target is
    not (nilpotent algebras form a closed subvariety), and non-strictness
    obstructions for dim Der and the coordinate abelian-ideal dimension,
    both of which must strictly increase along a proper degeneration.
    An empty list means no obstruction was found, not that a degeneration
    exists.
    """
    if source.n != target.n:
        raise DimensionMismatch(
            f"dimensions differ: {source.n} vs {target.n}")
    out = []
    if structure_flags(source).nilpotent and not structure_flags(target).nilpotent:
        out.append(Obstruction("nilpotency_closure", (True, False)))
    ds = derivation_dim(source)[0]
    dt = derivation_dim(target)[0]
    if ds >= dt:
        out.append(Obstruction("der_dim_non_increasing", (ds, dt)))
    abs_ = max_abelian_coordinate_ideal(source)[0]
    abt = max_abelian_coordinate_ideal(target)[0]
    if abs_ >= abt:
        out.append(Obstruction("ab_dim_non_increasing", (abs_, abt)))
    return out
