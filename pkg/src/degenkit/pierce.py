"""Eigenspace decomposition of an algebra at an idempotent.

For a commutative (Jordan-type) algebra the multiplication operator by an
idempotent e splits the space into eigenspaces for eigenvalues 0, 1/2, 1;
for an associative algebra the left and right operators split it into the
four two-sided components indexed by {0,1} x {0,1}.  Only those fixed
eigenvalue sets are ever used: when the eigenspaces do not fill the whole
space the input is not an algebra of the expected kind at this idempotent,
and ``IncompleteSplit`` is raised.

Each split carries a rule report checking the component multiplication
containments via exact subspace products.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .algebra import Algebra, left_mult_matrix, right_mult_matrix, subspace_product
from .linalg import Matrix, Subspace, as_vector, nullspace


class NotIdempotent(ValueError):
    """The supplied vector does not satisfy v * v = v (or is zero)."""


class IncompleteSplit(ValueError):
    """Eigenspace dimensions do not sum to n for the fixed eigenvalue set."""


@dataclass(frozen=True)
class RuleCheck:
    rule: str
    holds: bool
    detail: str = ""


@dataclass(frozen=True)
class PierceSplit:
    idempotent: tuple
    components: dict[str, Subspace]
    rule_report: tuple[RuleCheck, ...]

    @property
    def all_rules_hold(self) -> bool:
        return all(r.holds for r in self.rule_report)

    def dims(self) -> dict[str, int]:
        return {name: comp.dim for name, comp in self.components.items()}


def _checked_idempotent(a: Algebra, e: Sequence) -> tuple:
    v = as_vector(e)
    if len(v) != a.n:
        raise ValueError("idempotent vector length disagrees with dimension")
    if all(x == 0 for x in v):
        raise NotIdempotent("the zero vector is not an idempotent")
    if a.product(v, v) != v:
        raise NotIdempotent("vector does not satisfy v * v = v")
    return v


def _eigenspace(op: Matrix, eigenvalue) -> Subspace:
    n = op.rows
    shifted = Matrix([[op.entries[i][j] - (eigenvalue if i == j else 0)
                       for j in range(n)] for i in range(n)])
    return nullspace(shifted)


def _zero_or_contained(product: Subspace, container: Subspace | None) -> bool:
    if container is None:
        return product.is_zero()
    return container.contains(product)


def pierce_jordan(a: Algebra, e: Sequence) -> PierceSplit:
    """Split a commutative algebra at an idempotent into P_0, P_1/2, P_1.

    P_i is the eigenspace of multiplication by e for eigenvalue i.  The
    rule report checks the six containments
    P_1^2 <= P_1, P_1 P_0 = 0, P_0^2 <= P_0, P_0 P_1/2 <= P_1/2,
    P_1 P_1/2 <= P_1/2, P_1/2^2 <= P_0 + P_1.
    """
    v = _checked_idempotent(a, e)
    op = left_mult_matrix(a, v)
    p0 = _eigenspace(op, Fraction(0))
    ph = _eigenspace(op, Fraction(1, 2))
    p1 = _eigenspace(op, Fraction(1))
    if p0.dim + ph.dim + p1.dim != a.n:
        raise IncompleteSplit(
            f"eigenspace dims {p0.dim}+{ph.dim}+{p1.dim} != {a.n}; "
            "not a Jordan-type algebra at this idempotent")
    if not p1.contains_vector(v):
        raise IncompleteSplit("idempotent does not lie in its own 1-eigenspace")
    rules = [
        ("P1*P1 <= P1", subspace_product(a, p1, p1), p1),
        ("P1*P0 = 0", subspace_product(a, p1, p0), None),
        ("P0*P0 <= P0", subspace_product(a, p0, p0), p0),
        ("P0*Ph <= Ph", subspace_product(a, p0, ph), ph),
        ("P1*Ph <= Ph", subspace_product(a, p1, ph), ph),
        ("Ph*Ph <= P0+P1", subspace_product(a, ph, ph), p0.sum(p1)),
    ]
    report = []
    for rule, product, container in rules:
        holds = _zero_or_contained(product, container)
        detail = "" if holds else f"product has dimension {product.dim}"
        report.append(RuleCheck(rule, holds, detail))
    return PierceSplit(v, {"P0": p0, "P_half": ph, "P1": p1}, tuple(report))


def pierce_associative(a: Algebra, e: Sequence) -> PierceSplit:
    """Split an associative algebra at an idempotent into A_ij components.

    A_ij is the intersection of the left eigenspace (eigenvalue i) and the
    right eigenspace (eigenvalue j), i, j in {0, 1}.  The rule report
    checks all sixteen products A_ij A_kl <= delta_jk A_il.
    """
    v = _checked_idempotent(a, e)
    lop = left_mult_matrix(a, v)
    rop = right_mult_matrix(a, v)
    lspaces = {i: _eigenspace(lop, Fraction(i)) for i in (0, 1)}
    rspaces = {j: _eigenspace(rop, Fraction(j)) for j in (0, 1)}
    comps = {}
    total = 0
    for i in (0, 1):
        for j in (0, 1):
            comp = lspaces[i].intersect(rspaces[j])
            comps[f"A{i}{j}"] = comp
            total += comp.dim
    if total != a.n:
        raise IncompleteSplit(
            f"component dims sum to {total} != {a.n}; "
            "not an associative-type algebra at this idempotent")
    if not comps["A11"].contains_vector(v):
        raise IncompleteSplit("idempotent does not lie in A11")
    report = []
    for i in (0, 1):
        for j in (0, 1):
            for k in (0, 1):
                for l in (0, 1):
                    product = subspace_product(a, comps[f"A{i}{j}"], comps[f"A{k}{l}"],
                                               ordered=True)
                    container = comps[f"A{i}{l}"] if j == k else None
                    rule = (f"A{i}{j}*A{k}{l} <= A{i}{l}" if j == k
                            else f"A{i}{j}*A{k}{l} = 0")
                    holds = _zero_or_contained(product, container)
                    detail = "" if holds else f"product has dimension {product.dim}"
                    report.append(RuleCheck(rule, holds, detail))
    return PierceSplit(v, comps, tuple(report))
