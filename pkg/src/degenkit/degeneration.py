"""The witness engine for orbit degenerations.

A ``Witness`` is an invertible parametrized basis change: an n x n matrix
of Laurent polynomials in t, flagged as either the map g_t itself
(``kind='g'``) or its inverse (``kind='g_inverse'``; witnesses written as
new-basis definitions are of this kind, the columns are the new basis
vectors).  ``transform`` produces the structure constants of g_t * A over
the rational-function field, ``limit0_algebra`` takes the entrywise
t -> 0 limit, and ``verify_witness`` checks a declared degeneration end
to end, including an optional constant basis change applied to the limit
before comparison.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .algebra import Algebra, apply_basis_change
from .exactnum import (
    Pole,
    RationalFunctionT,
    Singular,
    TPoly,
    format_tpoly,
    parse_tpoly,
    tmatrix_inverse,
    tmatrix_mul,
)
from .invariants import invariant_profile
from .linalg import Matrix

KINDS = ("g", "g_inverse")


@dataclass(frozen=True)
class Witness:
    """Parametrized basis change certifying a degeneration."""

    n: int
    kind: str
    m: tuple[tuple[TPoly, ...], ...]
    post_iso: Matrix | None = None
    source: str | None = None
    target: str | None = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"witness kind must be one of {KINDS}")
        if len(self.m) != self.n or any(len(row) != self.n for row in self.m):
            raise ValueError("witness matrix must be n x n")
        if self.post_iso is not None and (
                self.post_iso.rows != self.n or self.post_iso.cols != self.n):
            raise ValueError("post_iso must be an n x n scalar matrix")


def _tpoly_grid(entries: Sequence[Sequence]) -> tuple[tuple[TPoly, ...], ...]:
    grid = []
    for row in entries:
        cells = []
        for x in row:
            if isinstance(x, TPoly):
                cells.append(x)
            elif isinstance(x, str):
                cells.append(parse_tpoly(x))
            else:
                cells.append(TPoly.const(x))
        grid.append(tuple(cells))
    return tuple(grid)


def make_witness(entries: Sequence[Sequence], kind: str = "g",
                 post_iso: Matrix | None = None,
                 source: str | None = None,
                 target: str | None = None) -> Witness:
    """Build a witness from a grid of TPoly / Laurent strings / scalars."""
    grid = _tpoly_grid(entries)
    return Witness(len(grid), kind, grid, post_iso, source, target)


def diag_witness(exponents: Sequence[int], kind: str = "g", **kw) -> Witness:
    """Diagonal witness t^e_1, ..., t^e_n."""
    n = len(exponents)
    rows = [[TPoly.t(exponents[i]) if i == j else TPoly.zero() for j in range(n)]
            for i in range(n)]
    return make_witness(rows, kind=kind, **kw)


def witness_from_columns(cols: Sequence[Sequence], kind: str = "g_inverse",
                         **kw) -> Witness:
    """Witness whose j-th column is the j-th given vector.

    With the default ``kind='g_inverse'`` this encodes a new-basis
    definition x_j = (column j), the convention used for hand-written
    transformations.
    """
    grid = _tpoly_grid(cols)
    n = len(grid)
    rows = [[grid[j][i] for j in range(n)] for i in range(n)]
    return make_witness(rows, kind=kind, **kw)


@dataclass(frozen=True)
class ParamAlgebra:
    """Structure constants over the rational-function field in t."""

    n: int
    c: tuple[tuple[tuple[RationalFunctionT, ...], ...], ...]

    def entry(self, i: int, j: int, k: int) -> RationalFunctionT:
        return self.c[i][j][k]

    def evaluate(self, at) -> Algebra:
        """Exact specialization at a scalar value of t."""
        return Algebra([[[self.c[i][j][k].evaluate(at) for k in range(self.n)]
                         for j in range(self.n)] for i in range(self.n)])


def transform(a: Algebra, w: Witness) -> ParamAlgebra:
    """Structure constants of g_t * A over the rational-function field.

    (g*A)(x, y) = g(A(g^{-1} x, g^{-1} y)); raises Singular when the
    witness matrix is not invertible over the function field.
    """
    if a.n != w.n:
        raise ValueError(f"dimension mismatch: algebra {a.n}, witness {w.n}")
    n = a.n
    if w.kind == "g":
        g = [[RationalFunctionT(w.m[i][j]) for j in range(n)] for i in range(n)]
        ginv = tmatrix_inverse(w.m)
    else:
        ginv = [[RationalFunctionT(w.m[i][j]) for j in range(n)] for i in range(n)]
        g = tmatrix_inverse(w.m)
    zero = RationalFunctionT.zero()
    # sparse columns of g^{-1}
    cols = [[(r, ginv[r][i]) for r in range(n) if not ginv[r][i].is_zero()]
            for i in range(n)]
    tensor = []
    for i in range(n):
        row_i = []
        for j in range(n):
            w_vec = [zero] * n
            for (ai, va) in cols[i]:
                for (bj, vb) in cols[j]:
                    terms = a._pairs.get((ai, bj))
                    if not terms:
                        continue
                    f = va * vb
                    for k, coeff in terms:
                        w_vec[k] = w_vec[k] + f * coeff
            out = []
            for l in range(n):
                s = zero
                for k in range(n):
                    if not w_vec[k].is_zero() and not g[l][k].is_zero():
                        s = s + g[l][k] * w_vec[k]
                out.append(s)
            row_i.append(tuple(out))
        tensor.append(tuple(row_i))
    return ParamAlgebra(n, tuple(tensor))


def limit0_algebra(pa: ParamAlgebra) -> Algebra:
    """Entrywise t -> 0 limit; a Pole error carries the offending entry."""
    n = pa.n
    tensor = []
    for i in range(n):
        rows = []
        for j in range(n):
            out = []
            for k in range(n):
                try:
                    out.append(pa.c[i][j][k].limit0())
                except Pole:
                    raise Pole(
                        f"pole at structure constant ({i + 1},{j + 1},{k + 1})",
                        position=(i + 1, j + 1, k + 1))
            rows.append(out)
        tensor.append(rows)
    return Algebra(tensor)


def numeric_g_matrix(w: Witness, at) -> Matrix:
    """The scalar matrix of g at a sample value of t (inverted if needed)."""
    m = Matrix([[w.m[i][j].evaluate(at) for j in range(w.n)] for i in range(w.n)])
    if w.kind == "g":
        return m
    return m.inverse()


@dataclass(frozen=True)
class WitnessVerdict:
    limit_exists: bool
    pole_at: tuple | None
    limit: Algebra | None
    limit_equals_target: bool
    residuals: tuple[tuple[int, int, int, str, str], ...]
    proper: bool

    @property
    def passed(self) -> bool:
        return self.limit_exists and self.limit_equals_target


def _properly_differ(a: Algebra, b: Algebra) -> bool:
    """Whether the isomorphism-invariant profile fields distinguish a and b.

    True certifies the degeneration is proper; basis-dependent profile
    fields are deliberately not consulted.
    """
    return (invariant_profile(a).isomorphism_invariants()
            != invariant_profile(b).isomorphism_invariants())


def verify_witness(a: Algebra, w: Witness, target: Algebra) -> WitnessVerdict:
    """Full check of a declared degeneration.

    Passes when the t -> 0 limit of g_t * a exists and, after the optional
    post_iso basis change, equals the target table exactly.  ``proper``
    records whether the invariant profiles of source and target differ
    (a trivial degeneration has proper = False).
    """
    if a.n != target.n or a.n != w.n:
        raise ValueError("source, witness and target dimensions must agree")
    pa = transform(a, w)
    try:
        limit = limit0_algebra(pa)
    except Pole as exc:
        return WitnessVerdict(False, exc.position, None, False, (),
                              _properly_differ(a, target))
    compared = limit if w.post_iso is None else apply_basis_change(limit, w.post_iso)
    residuals = []
    if compared != target:
        from .exactnum import format_scalar

        for i in range(a.n):
            for j in range(a.n):
                for k in range(a.n):
                    got = compared.c[i][j][k]
                    want = target.c[i][j][k]
                    if got != want:
                        residuals.append((i + 1, j + 1, k + 1,
                                          format_scalar(got), format_scalar(want)))
    proper = _properly_differ(a, target)
    return WitnessVerdict(True, None, limit, not residuals, tuple(residuals), proper)


def _as_g_matrix(w: Witness) -> tuple[tuple[TPoly, ...], ...]:
    """Normalize a witness to the g convention, keeping Laurent entries."""
    if w.kind == "g":
        return w.m
    inv = tmatrix_inverse(w.m)
    rows = []
    for row in inv:
        cells = []
        for x in row:
            if not x.is_tpoly():
                raise ValueError(
                    "witness inverse is not Laurent; cannot normalize to kind g")
            cells.append(x.num)
        rows.append(tuple(cells))
    return tuple(rows)


def compose_witnesses(first: Witness, second: Witness) -> Witness:
    """Witness applying ``first`` and then ``second`` (matrix product).

    Both operands are normalized to the g convention; the result is
    g = g_second . g_first.  Raises Singular for non-invertible input.
    """
    if first.n != second.n:
        raise ValueError("witness dimensions must agree")
    m = tmatrix_mul(_as_g_matrix(second), _as_g_matrix(first))
    return make_witness(m, kind="g",
                        source=first.source, target=second.target)


def transform_matches_numeric(a: Algebra, w: Witness, at) -> bool:
    """Cross-check: specializing the symbolic tensor at t = ``at`` agrees
    exactly with a plain basis change at the numeric matrix g(at)."""
    pa = transform(a, w)
    numeric = apply_basis_change(a, numeric_g_matrix(w, at))
    return pa.evaluate(at) == numeric


# -- JSON interchange ------------------------------------------------------


def witness_to_dict(w: Witness) -> dict:
    entries = []
    for i in range(w.n):
        for j in range(w.n):
            if not w.m[i][j].is_zero():
                entries.append({"row": i + 1, "col": j + 1,
                                "value": format_tpoly(w.m[i][j])})
    data: dict = {"dim": w.n, "kind": w.kind, "entries": entries}
    if w.post_iso is not None:
        from .exactnum import format_scalar

        data["post_iso"] = [[format_scalar(x) for x in row]
                            for row in w.post_iso.entries]
    if w.source:
        data["source"] = w.source
    if w.target:
        data["target"] = w.target
    return data


def witness_from_dict(data: dict) -> Witness:
    n = data["dim"]
    grid = [[TPoly.zero() for _ in range(n)] for _ in range(n)]
    for item in data.get("entries", []):
        grid[item["row"] - 1][item["col"] - 1] = parse_tpoly(item["value"])
    post_iso = None
    if data.get("post_iso") is not None:
        post_iso = Matrix([[x for x in row] for row in data["post_iso"]])
    return make_witness(grid, kind=data.get("kind", "g"), post_iso=post_iso,
                        source=data.get("source"), target=data.get("target"))
