"""Catalog of named algebras and degeneration witnesses.

Every entry builds a structure-constant table at a requested dimension n
(families pad with abelian directions) and declares the varieties its
output is guaranteed to satisfy, so suites can verify the identities on
every build.  The witness registry pairs sources and targets with the
parametrized basis changes certifying their degenerations: ids W0-W12 for
the primary witnesses, D1-D12 for derived single-step chains down to a
level-one algebra.

Parameter domains are enforced exactly where validity requires them
(e.g. alpha not 1 for the diagonal solvable family, alpha^2 not 1 for the
skew pair family); canonical-representative constraints such as modulus
bounds are documented but not enforced.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Sequence

from .algebra import Algebra, abelian, make_algebra
from .degeneration import Witness, diag_witness, make_witness, witness_from_columns
from .exactnum import Scalar, TPoly, as_scalar, format_scalar
from .linalg import Matrix

H = Fraction(1, 2)


class UnknownName(KeyError):
    """No catalog entry under this name."""


class UnknownWitness(KeyError):
    """No witness registered under this id."""


class DimensionConstraint(ValueError):
    """Requested dimension outside the entry's range."""


class ParameterDomain(ValueError):
    """A parameter violates the entry's domain."""


def _scalars(values) -> tuple[Scalar, ...]:
    return tuple(as_scalar(v) for v in values)


# -- table builders ----------------------------------------------------------


def _build_a(n):
    return abelian(n)


def _build_p(n):
    prods = []
    for i in range(2, n + 1):
        prods.append((1, i, i, 1))
        prods.append((i, 1, i, -1))
    return make_algebra(n, prods)


def _build_n3(n):
    return make_algebra(n, [(1, 2, 3, 1)], "anticommutative")


def _build_lambda2(n):
    return make_algebra(n, [(1, 1, 2, 1)], "commutative")


def _build_nu(n, alpha):
    alpha = as_scalar(alpha)
    prods = [(1, 1, 1, 1)]
    for i in range(2, n + 1):
        prods.append((1, i, i, alpha))
        prods.append((i, 1, i, 1 - alpha))
    return make_algebra(n, prods)


def _build_j1(n):
    return make_algebra(n, [(1, 1, 1, 1)], "commutative")


def _build_j2(n):
    return make_algebra(n, [(1, 1, 1, 1)] + [(1, i, i, 1) for i in range(2, n + 1)],
                        "commutative")


def _build_j3(n):
    return make_algebra(n, [(1, 2, 3, 1)], "commutative")


def _build_jzeta(n, zetas):
    zetas = _scalars(zetas)
    if len(zetas) != n - 1:
        raise ParameterDomain(f"need {n - 1} eigenvalues, got {len(zetas)}")
    if any(z not in (Fraction(0), H, Fraction(1)) for z in zetas):
        raise ParameterDomain("eigenvalues must lie in {0, 1/2, 1}")
    if len(set(zetas)) < 2:
        raise ParameterDomain("at least two distinct eigenvalues required")
    prods = [(1, 1, 1, 1)]
    for i, z in enumerate(zetas, start=2):
        if z != 0:
            prods.append((1, i, i, z))
    return make_algebra(n, prods, "commutative")


def _build_t4(n):
    return make_algebra(n, [(1, 2, 3, 1)], "commutative")


def _build_r2(n):
    return make_algebra(n, [(1, 2, 2, 1)], "anticommutative")


def _build_n51(n):
    return make_algebra(n, [(1, 3, 5, 1), (2, 4, 5, 1)], "anticommutative")


def _build_n52(n):
    return make_algebra(n, [(1, 2, 4, 1), (1, 3, 5, 1)], "anticommutative")


def _build_r3(n, alpha):
    # canonical-representative condition (|alpha| < 1 or alpha = +-1) is
    # documented, not enforced
    return make_algebra(n, [(1, 2, 2, 1), (1, 3, 3, as_scalar(alpha))],
                        "anticommutative")


def _build_r31a(n):
    return make_algebra(n, [(1, 2, 2, 1), (1, 3, 3, 1)], "anticommutative")


def _build_n4(n):
    return make_algebra(n, [(1, 2, 3, 1), (1, 3, 4, 1)], "anticommutative")


def _build_gn1(n, alpha):
    alpha = as_scalar(alpha)
    if alpha == 1 or alpha == 0:
        raise ParameterDomain("alpha must be nonzero and different from 1")
    return make_algebra(n, [(1, 2, 2, alpha)] + [(1, i, i, 1) for i in range(3, n + 1)],
                        "anticommutative")


def _build_gn2(n):
    return make_algebra(n, [(1, 2, 2, 1), (1, 2, 3, 1)] +
                        [(1, i, i, 1) for i in range(3, n + 1)], "anticommutative")


def _build_gn1multi(n, alphas):
    alphas = _scalars(alphas)
    if len(alphas) != n - 2:
        raise ParameterDomain(f"need {n - 2} eigenvalues, got {len(alphas)}")
    if all(a == 1 for a in alphas):
        raise ParameterDomain("eigenvalues (1, ..., 1) give the scalar action")
    prods = [(1, 2, 2, 1)]
    for i, a in enumerate(alphas, start=3):
        if a != 0:
            prods.append((1, i, i, a))
    return make_algebra(n, prods, "anticommutative")


def _build_heisenberg(n, k):
    if k < 1:
        raise ParameterDomain("need at least one skew pair")
    if n < 2 * k + 1:
        raise DimensionConstraint(f"need n >= {2 * k + 1} for k = {k}")
    return make_algebra(n, [(i, k + i, 2 * k + 1, 1) for i in range(1, k + 1)],
                        "anticommutative")


def _build_a1(n):
    return make_algebra(n, [(1, 1, 1, 1)])


def _build_a2(n):
    prods = [(1, 1, 1, 1)]
    for i in range(2, n + 1):
        prods.extend([(1, i, i, 1), (i, 1, i, 1)])
    return make_algebra(n, prods)


def _build_a3(n):
    return make_algebra(n, [(1, 1, 1, 1)] + [(1, i, i, 1) for i in range(2, n + 1)])


def _build_a4(n):
    return make_algebra(n, [(1, 1, 1, 1)] + [(i, 1, i, 1) for i in range(2, n + 1)])


def _build_a5(n, alpha):
    alpha = as_scalar(alpha)
    if alpha * alpha == 1:
        raise ParameterDomain("alpha must satisfy alpha^2 != 1")
    return make_algebra(n, [(2, 1, 3, 1), (1, 2, 3, alpha)])


def _build_a6(n):
    return make_algebra(n, [(1, 1, 3, 1), (2, 1, 3, 1), (1, 2, 3, -1)])


# intermediate families used as witness sources


def _build_binarions(n):
    return make_algebra(n, [(1, 1, 1, 1), (1, 2, 2, 1), (2, 2, 1, 1)],
                        "commutative")


def _build_sym2(n):
    return make_algebra(n, [(1, 1, 1, 1), (2, 2, 2, 1), (1, 3, 3, H),
                            (2, 3, 3, H), (3, 3, 1, 1), (3, 3, 2, 1)],
                        "commutative")


def _build_nilp2gen(n, k, gammas):
    if k < 2:
        raise ParameterDomain("needs two generators, k >= 2")
    if n < k + 2:
        raise DimensionConstraint(f"need n >= {k + 2} for k = {k}")
    gammas = _scalars(gammas)
    if len(gammas) != n - k:
        raise ParameterDomain(f"need {n - k} square coefficients, got {len(gammas)}")
    prods = [(1, 1, k + 1, 1), (1, 2, k + 2, 1)]
    for j, g in enumerate(gammas, start=k + 1):
        if g != 0:
            prods.append((2, 2, j, g))
    return make_algebra(n, prods, "commutative")


def _build_nilpchain(n, k):
    if k < 1:
        raise ParameterDomain("k must be positive")
    if n < k + 2:
        raise DimensionConstraint(f"need n >= {k + 2} for k = {k}")
    prods = [(1, 1, k + 1, 1), (1, k + 1, k + 2, 1)]
    if n >= k + 3:
        prods.extend([(1, k + 2, k + 3, 1), (k + 1, k + 1, k + 3, 1)])
    return make_algebra(n, prods, "commutative")


def _build_nilpflat(n, alphas=(), betas=(), g11=0, g22=0, gmid=0):
    alphas = _scalars(alphas)
    betas = _scalars(betas)
    if len(alphas) != max(n - 3, 0) or len(betas) != max(n - 3, 0):
        raise ParameterDomain(f"need {max(n - 3, 0)} middle coefficients")
    prods = [(1, 2, n, 1)]
    g11, g22, gmid = as_scalar(g11), as_scalar(g22), as_scalar(gmid)
    if g11 != 0:
        prods.append((1, 1, n, g11))
    if g22 != 0:
        prods.append((2, 2, n, g22))
    for i, a in enumerate(alphas, start=3):
        if a != 0:
            prods.append((1, i, n, a))
    for i, b in enumerate(betas, start=3):
        if b != 0:
            prods.append((2, i, n, b))
    if gmid != 0:
        if n < 4:
            raise ParameterDomain("no middle vector to square at this dimension")
        prods.append((3, 3, n, gmid))
    return make_algebra(n, prods, "commutative")


def _build_lie2step(n, g4=0, g5=0, extra=()):
    extra = _scalars(extra)
    if len(extra) != n - 5:
        raise ParameterDomain(f"need {n - 5} extra coefficients, got {len(extra)}")
    prods = [(1, 2, 4, 1), (1, 3, 5, 1)]
    g4, g5 = as_scalar(g4), as_scalar(g5)
    if g4 != 0:
        prods.append((2, 3, 4, g4))
    if g5 != 0:
        prods.append((2, 3, 5, g5))
    for i, c in enumerate(extra, start=6):
        if c != 0:
            prods.append((1, i, 4, c))
    return make_algebra(n, prods, "anticommutative")


def _build_solvtorus(n, k, actions):
    if k < 2:
        raise ParameterDomain("needs a complement of dimension k >= 2")
    if n <= k:
        raise DimensionConstraint("nilradical would be empty")
    actions = tuple(_scalars(row) for row in actions)
    if len(actions) != k or any(len(row) != n - k for row in actions):
        raise ParameterDomain(f"need {k} action rows of length {n - k}")
    prods = []
    for g in range(1, k + 1):
        for m, a in enumerate(actions[g - 1]):
            if a != 0:
                prods.append((g, k + 1 + m, k + 1 + m, a))
    return make_algebra(n, prods, "anticommutative")


def _build_solvjordan(n, blocks):
    blocks = tuple((int(size), as_scalar(eig)) for size, eig in blocks)
    if sum(size for size, _ in blocks) != n - 1:
        raise ParameterDomain("block sizes must fill the nilradical (n - 1)")
    if any(size < 1 for size, _ in blocks):
        raise ParameterDomain("block sizes must be positive")
    prods = []
    idx = 2
    for size, eig in blocks:
        for m in range(size):
            if eig != 0:
                prods.append((1, idx + m, idx + m, eig))
            if m < size - 1:
                prods.append((1, idx + m, idx + m + 1, 1))
        idx += size
    return make_algebra(n, prods, "anticommutative")


def _build_solvcompanion(n, a3, a4, a5):
    a3, a4, a5 = as_scalar(a3), as_scalar(a4), as_scalar(a5)
    prods = [(1, 2, 3, 1), (1, 3, 3, 1 + a3), (1, 4, 5, 1),
             (1, 5, 5, a4 + a5)]
    if a3 != 0:
        prods.append((1, 3, 2, -a3))
    if a4 * a5 != 0:
        prods.append((1, 5, 4, -(a4 * a5)))
    prods.extend((1, i, i, 1) for i in range(6, n + 1))
    return make_algebra(n, prods, "anticommutative")


def _build_sl2(n):
    return make_algebra(n, [(1, 2, 2, 1), (1, 3, 3, -1), (2, 3, 1, 2)],
                        "anticommutative")


def _build_sl2rep(n):
    return make_algebra(n, [(1, 2, 2, 1), (1, 3, 3, -1), (2, 3, 1, 2),
                            (1, 4, 4, H), (1, 5, 5, -H), (2, 5, 4, 1),
                            (3, 4, 5, 1)], "anticommutative")


# -- registry -----------------------------------------------------------------


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    summary: str
    builder: Callable
    n_min: int
    n_max: int | None = None
    params: str = ""
    varieties: Callable | tuple[str, ...] = ()
    citation: str = ""
    cross_ref: str = ""

    def variety_tags(self, kwargs: dict) -> tuple[str, ...]:
        if callable(self.varieties):
            return self.varieties(kwargs)
        return self.varieties


def _nu_varieties(kwargs):
    alpha = as_scalar(kwargs.get("alpha", 0))
    tags = []
    if alpha == H:
        tags += ["commutative", "jordan"]
    if alpha in (Fraction(0), Fraction(1)):
        tags.append("associative")
    return tuple(tags)


_LEVEL1 = "level-one classification"
_JORDAN2 = "Jordan level-two classification"
_LIE34 = "low-dimensional Lie level-two lists"
_LIE2 = "Lie level-two classification (n >= 5)"
_ASSOC2 = "associative level-two classification"
_STAGE = "intermediate family used by the degeneration arguments"

ENTRIES: dict[str, CatalogEntry] = {}


def _register(entry: CatalogEntry):
    ENTRIES[entry.name] = entry


for _e in [
    CatalogEntry("a", "abelian algebra (zero multiplication)", _build_a, 1,
                 varieties=("commutative", "anticommutative", "associative",
                            "lie", "jordan"),
                 citation="baseline of every degeneration chain"),
    CatalogEntry("p", "scalar two-sided action: e1 ei = ei, ei e1 = -ei",
                 _build_p, 2, varieties=("lie",), citation=_LEVEL1),
    CatalogEntry("n3", "skew product e1 e2 = e3 plus abelian pad",
                 _build_n3, 3, varieties=("lie",), citation=_LEVEL1),
    CatalogEntry("lambda2", "single square e1 e1 = e2 plus abelian pad",
                 _build_lambda2, 2,
                 varieties=("commutative", "jordan", "associative"),
                 citation=_LEVEL1),
    CatalogEntry("nu", "weighted idempotent action e1 ei = a ei, ei e1 = (1-a) ei",
                 _build_nu, 2, params="alpha",
                 varieties=_nu_varieties, citation=_LEVEL1),
    CatalogEntry("J1", "idempotent plus abelian pad", _build_j1, 1,
                 varieties=("commutative", "jordan", "associative"),
                 citation=_JORDAN2, cross_ref="A1"),
    CatalogEntry("J2", "idempotent acting as unit on the pad", _build_j2, 2,
                 varieties=("commutative", "jordan", "associative"),
                 citation=_JORDAN2, cross_ref="A2"),
    CatalogEntry("J3", "commutative product e1 e2 = e3 plus abelian pad",
                 _build_j3, 3, varieties=("commutative", "jordan"),
                 citation=_JORDAN2, cross_ref="T4"),
    CatalogEntry("Jzeta", "idempotent with prescribed eigenvalues in {0,1/2,1}",
                 _build_jzeta, 3, params="zetas",
                 varieties=("commutative", "jordan"), citation=_JORDAN2),
    CatalogEntry("T4", "three-dimensional table x1 x2 = x3", _build_t4, 3, 3,
                 varieties=("commutative", "jordan"),
                 citation=_JORDAN2, cross_ref="J3"),
    CatalogEntry("r2", "[e1,e2] = e2 plus abelian pad", _build_r2, 2,
                 varieties=("lie",), citation=_LIE34),
    CatalogEntry("r3", "[e1,e2] = e2, [e1,e3] = a e3 (|a|<1 or a=+-1 canonical)",
                 _build_r3, 3, 3, params="alpha", varieties=("lie",),
                 citation=_LIE34),
    CatalogEntry("r31a", "[e1,e2] = e2, [e1,e3] = e3 plus abelian pad",
                 _build_r31a, 4, varieties=("lie",), citation=_LIE34),
    CatalogEntry("n4", "filiform [e1,e2] = e3, [e1,e3] = e4", _build_n4, 4, 4,
                 varieties=("lie",), citation=_LIE34),
    CatalogEntry("g41", "diagonal action (a,1,1), a not 0 or 1, at n = 4",
                 _build_gn1, 4, 4, params="alpha", varieties=("lie",),
                 citation=_LIE34, cross_ref="gn1"),
    CatalogEntry("g42", "one 2-block plus identity action at n = 4",
                 _build_gn2, 4, 4, varieties=("lie",),
                 citation=_LIE34, cross_ref="gn2"),
    CatalogEntry("n51", "skew pairs [e1,e3] = [e2,e4] = e5 plus abelian pad",
                 _build_n51, 5, varieties=("lie",), citation=_LIE2),
    CatalogEntry("n52", "[e1,e2] = e4, [e1,e3] = e5 plus abelian pad",
                 _build_n52, 5, varieties=("lie",), citation=_LIE2),
    CatalogEntry("gn1", "diagonal action (a, 1, ..., 1), a not 0 or 1",
                 _build_gn1, 4, params="alpha", varieties=("lie",),
                 citation=_LIE2),
    CatalogEntry("gn2", "one 2-block plus identity diagonal action",
                 _build_gn2, 4, varieties=("lie",), citation=_LIE2),
    CatalogEntry("gn1multi", "diagonal action (1, a3, ..., an), not all 1",
                 _build_gn1multi, 3, params="alphas", varieties=("lie",),
                 citation=_STAGE),
    CatalogEntry("heisenberg", "k skew pairs sharing one center direction",
                 _build_heisenberg, 3, params="k", varieties=("lie",),
                 citation=_STAGE),
    CatalogEntry("A1", "idempotent plus abelian pad", _build_a1, 1,
                 varieties=("commutative", "jordan", "associative"),
                 citation=_ASSOC2, cross_ref="J1"),
    CatalogEntry("A2", "two-sided unit action on the pad", _build_a2, 2,
                 varieties=("commutative", "jordan", "associative"),
                 citation=_ASSOC2, cross_ref="J2"),
    CatalogEntry("A3", "left unit action on the pad", _build_a3, 2,
                 varieties=("associative",), citation=_ASSOC2,
                 cross_ref="nu(alpha=1)"),
    CatalogEntry("A4", "right unit action on the pad", _build_a4, 2,
                 varieties=("associative",), citation=_ASSOC2,
                 cross_ref="nu(alpha=0)"),
    CatalogEntry("A5", "skew pair e2 e1 = e3, e1 e2 = a e3, a^2 != 1",
                 _build_a5, 3, params="alpha", varieties=("associative",),
                 citation=_ASSOC2),
    CatalogEntry("A6", "e1 e1 = e3 with skew pair e2 e1 = e3 = -e1 e2",
                 _build_a6, 3, varieties=("associative",), citation=_ASSOC2),
    CatalogEntry("binarions", "split quadratic pair x^2 = 1 adjoined to a unit",
                 _build_binarions, 2,
                 varieties=("commutative", "jordan", "associative"),
                 citation=_STAGE),
    CatalogEntry("sym2", "symmetric 2x2 matrices under the symmetrized product",
                 _build_sym2, 3, varieties=("commutative", "jordan"),
                 citation=_STAGE),
    CatalogEntry("nilp2gen", "two-generator nilpotent commutative family",
                 _build_nilp2gen, 4, params="k, gammas",
                 varieties=("commutative", "jordan"), citation=_STAGE),
    CatalogEntry("nilpchain", "truncated power chain x, x^2, x^3(, x^4)",
                 _build_nilpchain, 3, params="k",
                 varieties=("commutative", "jordan", "associative"),
                 citation=_STAGE),
    CatalogEntry("nilpflat", "commutative family with one-dimensional square",
                 _build_nilpflat, 3,
                 params="alphas, betas, g11, g22, gmid",
                 varieties=("commutative", "jordan"), citation=_STAGE),
    CatalogEntry("lie2step", "two-step nilpotent Lie family on five generators",
                 _build_lie2step, 5, params="g4, g5, extra",
                 varieties=("lie",), citation=_STAGE),
    CatalogEntry("solvtorus", "abelian nilradical with commuting diagonal actions",
                 _build_solvtorus, 3, params="k, actions",
                 varieties=("lie",), citation=_STAGE),
    CatalogEntry("solvjordan", "abelian nilradical with one action in block form",
                 _build_solvjordan, 2, params="blocks",
                 varieties=("lie",), citation=_STAGE),
    CatalogEntry("solvcompanion", "abelian nilradical with two companion 2-blocks",
                 _build_solvcompanion, 5, params="a3, a4, a5",
                 varieties=("lie",), citation=_STAGE),
    CatalogEntry("sl2", "simple 3-dimensional part plus abelian pad",
                 _build_sl2, 3, varieties=("lie",), citation=_STAGE),
    CatalogEntry("sl2rep", "simple 3-dimensional part acting on a 2-dimensional pad",
                 _build_sl2rep, 5, varieties=("lie",), citation=_STAGE),
]:
    _register(_e)


def build(name: str, n: int, **params) -> Algebra:
    """Build a catalog algebra at dimension n with the given parameters."""
    entry = ENTRIES.get(name)
    if entry is None:
        raise UnknownName(name)
    if n < entry.n_min or (entry.n_max is not None and n > entry.n_max):
        top = entry.n_max if entry.n_max is not None else "inf"
        raise DimensionConstraint(
            f"{name} is defined for {entry.n_min} <= n <= {top}, got {n}")
    return entry.builder(n, **params)


def entry_varieties(name: str, params: dict | None = None) -> tuple[str, ...]:
    entry = ENTRIES.get(name)
    if entry is None:
        raise UnknownName(name)
    return entry.variety_tags(params or {})


def ref(name: str, n: int, params: dict | None = None) -> str:
    """Catalog reference string catalog:<name>@<n>[?k=v&...]."""
    base = f"catalog:{name}@{n}"
    if not params:
        return base
    parts = []
    for key in sorted(params):
        value = params[key]
        if isinstance(value, (tuple, list)):
            rendered = ",".join(_render_param(v) for v in value)
        else:
            rendered = _render_param(value)
        parts.append(f"{key}={rendered}")
    return base + "?" + "&".join(parts)


def _render_param(value) -> str:
    if isinstance(value, (int,)):
        return str(value)
    if isinstance(value, (tuple, list)):
        return ";".join(_render_param(v) for v in value)
    try:
        return format_scalar(as_scalar(value))
    except TypeError:
        return str(value)


def list_entries() -> list[dict]:
    """Deterministic metadata of every catalog entry."""
    out = []
    for name in sorted(ENTRIES):
        e = ENTRIES[name]
        varieties = e.varieties if not callable(e.varieties) else "parameter-dependent"
        out.append({
            "name": e.name,
            "summary": e.summary,
            "n_min": e.n_min,
            "n_max": e.n_max,
            "params": e.params,
            "varieties": list(varieties) if not isinstance(varieties, str) else varieties,
            "citation": e.citation,
            "cross_ref": e.cross_ref,
        })
    return out


# -- witnesses ----------------------------------------------------------------


@dataclass(frozen=True)
class WitnessCase:
    """A fully instantiated degeneration check: source, witness, target."""

    id: str
    witness: Witness
    source: Algebra
    target: Algebra
    source_ref: str
    target_ref: str
    notes: str = ""


def _perm_square_fix(n: int, first: int, second: int, product: int,
                     coeff: Scalar) -> Matrix:
    """Post-limit basis change: complete the square on the second generator
    and relabel (first, second, product) to slots (1, 2, 3).

    Returns the matrix to hand to apply_basis_change (the inverse of the
    new-basis column matrix).
    """
    cols = []
    e = [[Fraction(1) if r == c else Fraction(0) for r in range(n)] for c in range(n)]
    z2 = list(e[second - 1])
    if coeff != 0:
        half = as_scalar(coeff) / 2
        z2 = [x - half * y for x, y in zip(z2, e[first - 1])]
    used = {first, second, product}
    cols.append(e[first - 1])
    cols.append(z2)
    cols.append(e[product - 1])
    for i in range(1, n + 1):
        if i not in used:
            cols.append(e[i - 1])
    q = Matrix([[cols[j][i] for j in range(n)] for i in range(n)])
    return q.inverse()


def _perm_matrix(n: int, new_order: Sequence[int]) -> Matrix:
    """Post-limit relabeling: new basis z_j = e_{new_order[j]} (1-based)."""
    q = Matrix([[1 if new_order[j] == i + 1 else 0 for j in range(n)]
                for i in range(n)])
    return q.inverse()


def _tcol(entries: dict[int, object], n: int) -> list:
    col = [TPoly.zero()] * n
    for idx, val in entries.items():
        col[idx - 1] = val if isinstance(val, TPoly) else TPoly.const(val)
    return col


def _identity_cols(n: int, overrides: dict[int, dict[int, object]]) -> list[list]:
    cols = []
    for j in range(1, n + 1):
        if j in overrides:
            cols.append(_tcol(overrides[j], n))
        else:
            cols.append(_tcol({j: 1}, n))
    return cols


def witness(wid: str, n: int, **params) -> Witness:
    """Build a registered witness at dimension n."""
    case = witness_case(wid, n, **params)
    return case.witness


def witness_case(wid: str, n: int, **params) -> WitnessCase:
    """Fully instantiated witness with its source and target algebras."""
    builder = _WITNESSES.get(wid)
    if builder is None:
        raise UnknownWitness(wid)
    return builder(n, **params)


def _case_w0(n, source_name="a", source_params=None):
    source_params = source_params or {}
    src = build(source_name, n, **source_params)
    w = diag_witness([-1] * n, kind="g",
                     source=ref(source_name, n, source_params),
                     target=ref("a", n))
    return WitnessCase("W0", w, src, abelian(n), w.source, w.target,
                       notes="uniform scaling: every algebra degenerates to abelian")


def _case_w1(n, source_name="binarions"):
    if source_name == "binarions":
        zetas = (Fraction(1),) + (Fraction(0),) * (n - 2)
    elif source_name == "sym2":
        zetas = (Fraction(0), H) + (Fraction(0),) * (n - 3)
    else:
        raise ParameterDomain("source must be 'binarions' or 'sym2'")
    src = build(source_name, n)
    target = build("Jzeta", n, zetas=zetas)
    w = diag_witness([0] + [-1] * (n - 1), kind="g",
                     source=ref(source_name, n),
                     target=ref("Jzeta", n, {"zetas": zetas}))
    return WitnessCase("W1", w, src, target, w.source, w.target,
                       notes="fix the idempotent, shrink everything else")


def _case_w2(n, zetas):
    zetas = _scalars(zetas)
    if len(zetas) < 2 or zetas[0] == zetas[1]:
        raise ParameterDomain("the first two eigenvalues must differ")
    src = build("Jzeta", n, zetas=zetas)
    z2, z3 = zetas[0], zetas[1]
    overrides = {
        1: {1: TPoly.t(1)},
        2: {2: 1, 3: 1},
        3: {2: TPoly.t(1, z2), 3: TPoly.t(1, z3)},
    }
    w = witness_from_columns(_columns_as_rows(_identity_cols(n, overrides)),
                             kind="g_inverse",
                             source=ref("Jzeta", n, {"zetas": zetas}),
                             target=ref("J3", n))
    return WitnessCase("W2", w, src, build("J3", n), w.source, w.target,
                       notes="mix two eigenvectors with distinct eigenvalues")


def _columns_as_rows(cols):
    # witness_from_columns expects a sequence of column vectors
    return cols


def _case_w3(n, k=2, gammas=None):
    if gammas is None:
        gammas = (0,) * (n - k)
    src = build("nilp2gen", n, k=k, gammas=gammas)
    exps = [-2, -2] + [-4 if i == k + 2 else -3 for i in range(3, n + 1)]
    coeff = _scalars(gammas)[1]  # coefficient of the surviving square term
    post = _perm_square_fix(n, 1, 2, k + 2, coeff)
    w = diag_witness(exps, kind="g", post_iso=post,
                     source=ref("nilp2gen", n, {"k": k, "gammas": gammas}),
                     target=ref("J3", n))
    return WitnessCase("W3", w, src, build("J3", n), w.source, w.target,
                       notes="two-generator nilpotent case; square completed "
                             "with coefficient gamma/2 after the limit")


def _case_w4(n, k=1):
    src = build("nilpchain", n, k=k)
    exps = [0] * n
    for i in range(1, n + 1):
        if i == 1 or i == k + 1:
            exps[i - 1] = -2
        elif i == k + 2:
            exps[i - 1] = -4
        else:
            exps[i - 1] = -3
    post = _perm_square_fix(n, 1, k + 1, k + 2, Fraction(0))
    w = diag_witness(exps, kind="g", post_iso=post,
                     source=ref("nilpchain", n, {"k": k}),
                     target=ref("J3", n))
    return WitnessCase("W4", w, src, build("J3", n), w.source, w.target,
                       notes="single-generator chain case")


def _case_w5(n, alphas=None, betas=None, g22=0, gmid=0):
    if alphas is None:
        alphas = (0,) * max(n - 3, 0)
    if betas is None:
        betas = (0,) * max(n - 3, 0)
    src = build("nilpflat", n, alphas=alphas, betas=betas, g11=0, g22=g22,
                gmid=gmid)
    exps = [0, 0] + [-1] * (n - 3) + [0] if n > 2 else [0] * n
    if n == 3:
        exps = [0, 0, 0]
    post = _perm_square_fix(n, 1, 2, n, as_scalar(g22))
    w = diag_witness(exps, kind="g", post_iso=post,
                     source=ref("nilpflat", n, {"alphas": alphas, "betas": betas,
                                                "g22": g22, "gmid": gmid}),
                     target=ref("J3", n))
    return WitnessCase("W5", w, src, build("J3", n), w.source, w.target,
                       notes="one-dimensional-square case: middle directions shrink")


def _case_w6(n, k=2):
    src = build("heisenberg", n, k=k)
    exps = [0] * n
    for i in range(3, k + 1):
        exps[i - 1] = -1          # extra x_i
        exps[k + i - 1] = -1      # extra y_i
    order = [1, 2, k + 1, k + 2, 2 * k + 1]
    order += [i for i in range(1, n + 1) if i not in order]
    post = _perm_matrix(n, order)
    w = diag_witness(exps, kind="g", post_iso=post,
                     source=ref("heisenberg", n, {"k": k}),
                     target=ref("n51", n))
    return WitnessCase("W6", w, src, build("n51", n), w.source, w.target,
                       notes="keep two skew pairs, shrink the rest")


def _case_w7(n, g4=0, g5=0, extra=None):
    if extra is None:
        extra = (0,) * (n - 5)
    src = build("lie2step", n, g4=g4, g5=g5, extra=extra)
    exps = [-2, -2, -2, -4, -4] + [-3] * (n - 5)
    g4s, g5s = as_scalar(g4), as_scalar(g5)
    e = [[Fraction(1) if r == c else Fraction(0) for r in range(n)] for c in range(n)]
    cols = [list(e[0]),
            [x - g5s * y for x, y in zip(e[1], e[0])],
            [x + g4s * y for x, y in zip(e[2], e[0])]] + [list(e[i]) for i in range(3, n)]
    q = Matrix([[cols[j][i] for j in range(n)] for i in range(n)])
    w = diag_witness(exps, kind="g", post_iso=q.inverse(),
                     source=ref("lie2step", n, {"g4": g4, "g5": g5, "extra": extra}),
                     target=ref("n52", n))
    return WitnessCase("W7", w, src, build("n52", n), w.source, w.target,
                       notes="the two surviving cross coefficients are independent "
                             "(read as gamma4 and gamma5) and are removed by the "
                             "post-limit change x2 - gamma5 x1, x3 + gamma4 x1")


def _case_w8(n, k=2, actions=None):
    if actions is None:
        raise ParameterDomain("need the diagonal actions of the complement")
    src = build("solvtorus", n, k=k, actions=actions)
    exps = [0] + [-1] * (k - 1) + [0] * (n - k)
    first_row = _scalars(actions[0])
    prods = [(1, k + 1 + m, k + 1 + m, a) for m, a in enumerate(first_row) if a != 0]
    target = make_algebra(n, prods, "anticommutative")
    w = diag_witness(exps, kind="g",
                     source=ref("solvtorus", n, {"k": k, "actions": actions}),
                     target="(codimension-one reduction of the same action)")
    return WitnessCase("W8", w, src, target, w.source, w.target,
                       notes="shrink all complement generators but the first")


def _block_exponents(n: int, sizes: Sequence[int], first_special: bool) -> list[int]:
    exps = [0] * n
    pos = 2
    for bi, size in enumerate(sizes):
        for m in range(1, size + 1):
            if first_special and bi == 0 and m == 1:
                exps[pos - 1] = 2 - size
            else:
                exps[pos - 1] = m - size
            pos += 1
    return exps


def _case_w9(n, sizes=(2, 1, 1)):
    sizes = tuple(int(s) for s in sizes)
    if sizes[0] < 2:
        raise ParameterDomain("the leading block must have size >= 2")
    blocks = tuple((s, 1) for s in sizes)
    src = build("solvjordan", n, blocks=blocks)
    exps = _block_exponents(n, sizes, first_special=True)
    w = diag_witness(exps, kind="g",
                     source=ref("solvjordan", n, {"blocks": blocks}),
                     target=ref("gn2", n))
    return WitnessCase("W9", w, src, build("gn2", n), w.source, w.target,
                       notes="single eigenvalue with a nontrivial block")


def _case_w10(n, sizes=(2, 1, 1), eigenvalues=None):
    sizes = tuple(int(s) for s in sizes)
    if eigenvalues is None:
        raise ParameterDomain("need one eigenvalue per block")
    eigenvalues = _scalars(eigenvalues)
    if len(eigenvalues) != len(sizes):
        raise ParameterDomain("need one eigenvalue per block")
    if eigenvalues[0] != 1:
        raise ParameterDomain("normalize the leading eigenvalue to 1")
    if len(set(eigenvalues)) < 2:
        raise ParameterDomain("needs at least two distinct eigenvalues")
    blocks = tuple(zip(sizes, eigenvalues))
    src = build("solvjordan", n, blocks=blocks)
    exps = _block_exponents(n, sizes, first_special=False)
    expanded = []
    for size, eig in blocks:
        expanded.extend([eig] * size)
    alphas = tuple(expanded[1:])
    target = build("gn1multi", n, alphas=alphas)
    w = diag_witness(exps, kind="g",
                     source=ref("solvjordan", n, {"blocks": blocks}),
                     target=ref("gn1multi", n, {"alphas": alphas}))
    return WitnessCase("W10", w, src, target, w.source, w.target,
                       notes="several eigenvalues: blocks flatten to a diagonal action")


def _case_w11(n, a3, a4, a5):
    src = build("solvcompanion", n, a3=a3, a4=a4, a5=a5)
    exps = [-1, -1, -2, -1, -2] + [0] * (n - 5)
    order = [1, 2, 4, 3, 5] + list(range(6, n + 1))
    w = diag_witness(exps, kind="g", post_iso=_perm_matrix(n, order),
                     source=ref("solvcompanion", n, {"a3": a3, "a4": a4, "a5": a5}),
                     target=ref("n52", n))
    return WitnessCase("W11", w, src, build("n52", n), w.source, w.target,
                       notes="transcription corrected: the third generator scales "
                             "by t^-2 and the fifth entry is read as t^-2 x5")


def _case_w12(n, variant="sl2"):
    if variant == "sl2":
        src = build("sl2", n)
        alphas = (Fraction(-1),) + (Fraction(0),) * (n - 3)
    elif variant == "sl2rep":
        src = build("sl2rep", n)
        alphas = (Fraction(-1), H, -H) + (Fraction(0),) * (n - 5)
    else:
        raise ParameterDomain("variant must be 'sl2' or 'sl2rep'")
    target = build("gn1multi", n, alphas=alphas)
    w = diag_witness([0] + [-1] * (n - 1), kind="g",
                     source=ref(variant, n),
                     target=ref("gn1multi", n, {"alphas": alphas}))
    return WitnessCase("W12", w, src, target, w.source, w.target,
                       notes="fix a regular element, shrink the rest; the simple "
                             "part flattens onto its root-space action")


def _chain_case(wid, n, source_name, source_params, target_name, cols, notes=""):
    src = build(source_name, n, **source_params)
    target = build(target_name, n)
    w = witness_from_columns(cols, kind="g_inverse",
                             source=ref(source_name, n, source_params),
                             target=ref(target_name, n))
    return WitnessCase(wid, w, src, target, w.source, w.target, notes)


def _case_d1(n):
    cols = _identity_cols(n, {1: {1: TPoly.t(1), 2: 1}, 2: {1: TPoly.t(2)}})
    return _chain_case("D1", n, "J1", {}, "lambda2", cols,
                       "x1 = t e + f, x2 = t^2 e")


def _case_d2(n):
    cols = _identity_cols(n, {1: {1: TPoly.t(1), 2: 1},
                              2: {1: TPoly.t(2), 2: TPoly.t(1, 2)}})
    return _chain_case("D2", n, "J2", {}, "lambda2", cols,
                       "x1 = t e1 + e2, x2 = t^2 e1 + 2t e2")


def _case_d3(n):
    cols = _identity_cols(n, {1: {1: 1, 2: 1}, 2: {3: 2}, 3: {2: TPoly.t(1)}})
    return _chain_case("D3", n, "J3", {}, "lambda2", cols,
                       "x1 = e1 + e2, x2 = 2 e3, x3 = t e2")


def _case_d4(n):
    cols = _identity_cols(n, {1: {1: TPoly.t(1)}, 2: {2: 1, 3: 1},
                              3: {2: TPoly.t(1)}})
    return _chain_case("D4", n, "r2", {}, "n3", cols,
                       "x1 = t e1, x2 = e2 + e3, x3 = t e2")


def _case_d5(n, family="gn1", alpha=2):
    a = as_scalar(alpha)
    if family == "gn1":
        overrides = {1: {1: TPoly.t(1)}, 2: {2: 1, 3: 1},
                     3: {2: TPoly.t(1, a), 3: TPoly.t(1)}}
        return _chain_case("D5", n, "gn1", {"alpha": alpha}, "n3",
                           _identity_cols(n, overrides),
                           "mix the two eigenlines, x3 = t [x1', x2]")
    if family == "r3":
        overrides = {1: {1: TPoly.t(1)}, 2: {2: 1, 3: 1},
                     3: {2: TPoly.t(1), 3: TPoly.t(1, a)}}
        if a == 1:
            raise ParameterDomain("eigenvalues must differ (alpha != 1)")
        return _chain_case("D5", n, "r3", {"alpha": alpha}, "n3",
                           _identity_cols(n, overrides),
                           "mix the two eigenlines, x3 = t [x1', x2]")
    if family == "r31a":
        overrides = {1: {1: TPoly.t(1)}, 2: {2: 1, 4: 1},
                     3: {2: TPoly.t(1)}, 4: {3: 1}}
        return _chain_case("D5", n, "r31a", {}, "n3",
                           _identity_cols(n, overrides),
                           "mix an eigenline with an abelian direction")
    raise ParameterDomain("family must be 'gn1', 'r3' or 'r31a'")


def _case_d6(n, family="gn2"):
    if family in ("gn2", "g42"):
        overrides = {1: {1: TPoly.t(1)}, 2: {2: 1},
                     3: {2: TPoly.t(1), 3: TPoly.t(1)}}
        name = "gn2" if family == "gn2" else "g42"
        return _chain_case("D6", n, name, {}, "n3",
                           _identity_cols(n, overrides),
                           "x3 = t [x1', x2] from the 2-block")
    if family == "n4":
        overrides = {1: {1: TPoly.t(1)}, 3: {3: TPoly.t(1)},
                     4: {4: TPoly.t(1)}}
        return _chain_case("D6", n, "n4", {}, "n3",
                           _identity_cols(n, overrides),
                           "scale so the filiform tail dies")
    raise ParameterDomain("family must be 'gn2', 'g42' or 'n4'")


def _case_d7(n):
    overrides = {1: {1: 1}, 2: {3: 1}, 3: {5: 1},
                 4: {2: TPoly.t(1)}, 5: {4: TPoly.t(1)}}
    return _chain_case("D7", n, "n51", {}, "n3", _identity_cols(n, overrides),
                       "keep one skew pair, shrink the other")


def _case_d8(n):
    overrides = {1: {1: 1}, 2: {2: 1}, 3: {4: 1},
                 4: {3: TPoly.t(1)}, 5: {5: 1}}
    return _chain_case("D8", n, "n52", {}, "n3", _identity_cols(n, overrides),
                       "keep the first product, shrink the second")


def _case_d9(n):
    cols = _identity_cols(n, {1: {1: TPoly.t(1), 2: 1}, 2: {1: TPoly.t(2)}})
    return _chain_case("D9", n, "A1", {}, "lambda2", cols,
                       "x1 = t e + f, x2 = t^2 e")


def _case_d10(n, alpha=2):
    a = as_scalar(alpha)
    if a == -1:
        raise ParameterDomain("alpha = -1 is outside the entry domain")
    cols = _identity_cols(n, {1: {1: 1, 2: 1}, 2: {3: 1 + a},
                              3: {2: TPoly.t(1)}})
    return _chain_case("D10", n, "A5", {"alpha": alpha}, "lambda2", cols,
                       "x1 = e1 + e2, x2 = (1 + alpha) e3, x3 = t e2")


def _case_d11(n):
    cols = _identity_cols(n, {2: {3: 1}, 3: {2: TPoly.t(1)}})
    return _chain_case("D11", n, "A6", {}, "lambda2", cols,
                       "x2 = e3, x3 = t e2")


def _case_d12(n, variant="A2"):
    if variant == "A2":
        overrides = {1: {1: TPoly.t(1), 2: 1},
                     2: {1: TPoly.t(2), 2: TPoly.t(1, 2)}}
        return _chain_case("D12", n, variant, {}, "lambda2",
                           _identity_cols(n, overrides),
                           "two-sided unit flattens onto a single square")
    if variant in ("A3", "A4"):
        # One-sided unit action: every one-sided multiplication operator
        # is scalar, a closed GL-stable linear condition, so the orbit
        # closure holds nothing between the algebra and the abelian one.
        # The table coincides with the weighted-idempotent family at
        # weight 1 (resp. 0); the only proper degeneration is abelian.
        src = build(variant, n)
        w = diag_witness([-1] * n, kind="g", source=ref(variant, n),
                         target=ref("a", n))
        return WitnessCase("D12", w, src, abelian(n), w.source, w.target,
                           notes="no intermediate target exists: one-sided "
                                 "multiplications stay scalar in the closure; "
                                 "entry coincides with the weight-1/weight-0 "
                                 "idempotent family")
    raise ParameterDomain("variant must be 'A2', 'A3' or 'A4'")


_WITNESSES: dict[str, Callable] = {
    "W0": _case_w0, "W0-abelianize": _case_w0,
    "W1": _case_w1, "W2": _case_w2, "W3": _case_w3, "W4": _case_w4,
    "W5": _case_w5, "W6": _case_w6, "W7": _case_w7, "W8": _case_w8,
    "W9": _case_w9, "W10": _case_w10, "W11": _case_w11, "W12": _case_w12,
    "D1": _case_d1, "D2": _case_d2, "D3": _case_d3, "D4": _case_d4,
    "D5": _case_d5, "D6": _case_d6, "D7": _case_d7, "D8": _case_d8,
    "D9": _case_d9, "D10": _case_d10, "D11": _case_d11, "D12": _case_d12,
}

_WITNESS_SUMMARIES = {
    "W0": "uniform t^-1 scaling to the abelian algebra",
    "W1": "fix an idempotent, shrink the complement",
    "W2": "mix two eigenvectors of an idempotent action",
    "W3": "two-generator nilpotent commutative case",
    "W4": "single-generator chain case",
    "W5": "one-dimensional-square commutative case",
    "W6": "several skew pairs down to two",
    "W7": "five-generator two-step nilpotent Lie case",
    "W8": "complement of dimension >= 2 down to codimension one",
    "W9": "single-eigenvalue block action flattens to the 2-block table",
    "W10": "multi-eigenvalue block action flattens to a diagonal action",
    "W11": "companion-block pair down to the two-product nilpotent table",
    "W12": "regular-element scaling of a simple part",
    "D1": "idempotent to single square", "D2": "unit action to single square",
    "D3": "commutative product to single square",
    "D4": "eigenline to skew product", "D5": "two eigenlines to skew product",
    "D6": "block action to skew product", "D7": "two skew pairs to one",
    "D8": "two products to one", "D9": "idempotent to single square",
    "D10": "skew pair to single square", "D11": "square plus pair to single square",
    "D12": "one-sided unit to single square",
}


# -- suite enumeration ---------------------------------------------------------

LEVEL_ONE_NAMES = ("p", "n3", "lambda2", "nu")

NU_SAMPLES = (Fraction(-1), Fraction(0), H, Fraction(2))


def level_two_names(n: int) -> tuple[str, ...]:
    """Level-two catalog entries applicable at dimension n.

    A3 and A4 carry the coincidence flag (their tables equal the weighted
    idempotent family at weights 1 and 0, which is level one); they are
    listed here because the associative classification lists them, and the
    chain enumeration treats them under their level-one reading.
    """
    names = ["J1", "J2", "J3", "r2", "A1", "A2", "A3", "A4", "A5", "A6"]
    if n == 3:
        names.append("r3")
    if n == 4:
        names.extend(["n4", "r31a", "g41", "g42"])
    if n >= 5:
        names.extend(["n51", "n52", "gn1", "gn2"])
    return tuple(names)


def level_one_cases(n: int) -> list[WitnessCase]:
    """W0-abelianize verification cases for every level-one entry at n."""
    cases = [witness_case("W0", n, source_name=name)
             for name in ("p", "n3", "lambda2")]
    for alpha in NU_SAMPLES:
        cases.append(witness_case("W0", n, source_name="nu",
                                  source_params={"alpha": alpha}))
    return cases


def chain_cases(n: int) -> list[tuple[str, WitnessCase]]:
    """One derived-witness case per level-two entry at dimension n.

    Returns (entry_name, case) pairs; for the two coincidence entries the
    case is the direct abelianizing witness (see D12 notes).
    """
    plan: list[tuple[str, str, dict]] = [
        ("J1", "D1", {}), ("J2", "D2", {}), ("J3", "D3", {}),
        ("r2", "D4", {}),
        ("A1", "D9", {}), ("A2", "D12", {"variant": "A2"}),
        ("A3", "D12", {"variant": "A3"}), ("A4", "D12", {"variant": "A4"}),
        ("A5", "D10", {"alpha": 2}), ("A6", "D11", {}),
    ]
    if n == 3:
        plan.append(("r3", "D5", {"family": "r3", "alpha": -1}))
    if n == 4:
        plan.extend([
            ("n4", "D6", {"family": "n4"}),
            ("r31a", "D5", {"family": "r31a"}),
            ("g41", "D5", {"alpha": 2}),
            ("g42", "D6", {"family": "g42"}),
        ])
    if n >= 5:
        plan.extend([
            ("n51", "D7", {}), ("n52", "D8", {}),
            ("gn1", "D5", {"alpha": 2}), ("gn2", "D6", {}),
        ])
    return [(name, witness_case(wid, n, **kw)) for name, wid, kw in plan]


def _zeta_pad(n: int):
    pad = []
    cycle = (Fraction(0), H, Fraction(1))
    for i in range(n - 3):
        pad.append(cycle[i % 3])
    return tuple(pad)


def jordan_witness_cases(n: int) -> list[WitnessCase]:
    """Sampled instantiations of W1-W5 applicable at dimension n."""
    cases = [witness_case("W1", n, source_name="binarions"),
             witness_case("W1", n, source_name="sym2")]
    pad = _zeta_pad(n)
    for pair in ((1, 0), (H, 0), (1, H)):
        cases.append(witness_case("W2", n, zetas=_scalars(pair) + pad))
    if n >= 4:
        cases.append(witness_case("W3", n, k=2, gammas=(0,) * (n - 2)))
        cases.append(witness_case(
            "W3", n, k=2, gammas=(2, 1) + (-1,) * (n - 4)))
    if n >= 5:
        cases.append(witness_case("W3", n, k=3, gammas=(1, 2) + (0,) * (n - 5)))
    cases.append(witness_case("W4", n, k=1))
    if n >= 4:
        cases.append(witness_case("W4", n, k=2))
    if n >= 5:
        cases.append(witness_case("W4", n, k=3))
    cases.append(witness_case("W5", n))
    if n >= 4:
        cases.append(witness_case(
            "W5", n, alphas=tuple(range(1, n - 2)), betas=(-1,) * (n - 3),
            g22=2, gmid=2))
    return cases


def lie_witness_cases(n: int) -> list[WitnessCase]:
    """Sampled instantiations of W6-W12 applicable at dimension n (n >= 5)."""
    cases = []
    if n >= 5:
        cases.append(witness_case("W6", n, k=2))
    if n >= 7:
        cases.append(witness_case("W6", n, k=3))
    if n >= 5:
        cases.append(witness_case("W7", n, g4=0, g5=0, extra=(0,) * (n - 5)))
        cases.append(witness_case("W7", n, g4=1, g5=-2, extra=(1,) * (n - 5)))
        cases.append(witness_case(
            "W8", n, k=2, actions=((1, 2) + (0,) * (n - 4), (0, 1) + (1,) * (n - 4))))
        cases.append(witness_case("W9", n, sizes=(2,) + (1,) * (n - 3)))
        cases.append(witness_case("W9", n, sizes=(3,) + (1,) * (n - 4)))
        cases.append(witness_case(
            "W10", n, sizes=(2,) + (1,) * (n - 3),
            eigenvalues=(1, 2) + tuple(Fraction(0) for _ in range(n - 4))))
        cases.append(witness_case(
            "W10", n, sizes=(3,) + (1,) * (n - 4),
            eigenvalues=(1,) + tuple(H for _ in range(n - 4))))
        cases.append(witness_case("W11", n, a3=0, a4=2, a5=3))
        cases.append(witness_case("W11", n, a3=2, a4=0, a5=H))
    cases.append(witness_case("W12", n, variant="sl2"))
    if n >= 5:
        cases.append(witness_case("W12", n, variant="sl2rep"))
    return cases


def associative_witness_cases(n: int) -> list[WitnessCase]:
    """Derived chains for the associative entries at dimension n."""
    return [witness_case("D9", n), witness_case("D12", n, variant="A2"),
            witness_case("D12", n, variant="A3"),
            witness_case("D12", n, variant="A4"),
            witness_case("D10", n, alpha=2), witness_case("D10", n, alpha=0),
            witness_case("D11", n)]


def identity_sample_builds(n: int) -> list[tuple[str, dict, Algebra]]:
    """Every catalog entry at dimension n with standard parameter samples.

    Scalar parameters run over {-1, 0, 1/2, 2} intersected with the entry's
    domain; structured parameters use fixed representative samples.
    """
    out = []

    def add(name, params):
        entry = ENTRIES[name]
        if n < entry.n_min or (entry.n_max is not None and n > entry.n_max):
            return
        out.append((name, params, build(name, n, **params)))

    for name in ("a", "p", "n3", "lambda2", "J1", "J2", "J3", "T4", "r2",
                 "r31a", "n4", "g42", "n51", "n52", "gn2", "A1", "A2", "A3",
                 "A4", "A6", "binarions", "sym2", "sl2", "sl2rep"):
        add(name, {})
    for alpha in NU_SAMPLES:
        add("nu", {"alpha": alpha})
    for alpha in NU_SAMPLES:
        add("r3", {"alpha": alpha})
    for alpha in (Fraction(-1), H, Fraction(2)):      # domain: not 0, not 1
        add("g41", {"alpha": alpha})
        add("gn1", {"alpha": alpha})
    for alpha in (Fraction(0), H, Fraction(2)):       # domain: alpha^2 != 1
        add("A5", {"alpha": alpha})
    pad = _zeta_pad(n)
    if n >= 3:
        for pair in ((1, 0), (H, 0), (1, H)):
            add("Jzeta", {"zetas": _scalars(pair) + pad})
    if n >= 3:
        add("gn1multi", {"alphas": (Fraction(-1),) + (Fraction(0),) * (n - 3)})
    if n >= 5:
        add("heisenberg", {"k": 2})
        add("nilp2gen", {"k": 2, "gammas": (2, 1) + (-1,) * (n - 4)})
        add("lie2step", {"g4": 1, "g5": -2, "extra": (1,) * (n - 5)})
        add("solvcompanion", {"a3": 0, "a4": 2, "a5": 3})
        add("solvtorus", {"k": 2, "actions": ((1, 2) + (0,) * (n - 4),
                                              (0, 1) + (1,) * (n - 4))})
        add("solvjordan", {"blocks": ((2, 1), (2, 2)) + tuple(
            (1, 0) for _ in range(n - 5))})
    if n >= 4:
        add("nilpchain", {"k": 1})
        add("nilpflat", {"alphas": (1,) * (n - 3), "betas": (-1,) * (n - 3),
                         "g11": 0, "g22": 2, "gmid": 2 if n >= 4 else 0})
    if n == 3:
        add("nilpchain", {"k": 1})
        add("nilpflat", {"alphas": (), "betas": (), "g22": 2})
    return out


def list_witnesses() -> list[dict]:
    """Deterministic metadata of every registered witness id."""
    out = []
    for wid in sorted(_WITNESSES, key=_witness_sort_key):
        if wid == "W0-abelianize":
            continue
        out.append({"id": wid, "summary": _WITNESS_SUMMARIES.get(wid, "")})
    return out


def _witness_sort_key(wid: str):
    head = wid.rstrip("0123456789")
    tail = wid[len(head):]
    return (head, int(tail) if tail else -1)
