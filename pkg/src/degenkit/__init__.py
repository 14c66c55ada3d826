"""Exact-arithmetic toolkit for structure-constant algebras and their
orbit degenerations.

Layers: exact scalars and Laurent polynomials in a formal parameter t
(:mod:`degenkit.exactnum`), exact linear algebra and subspaces
(:mod:`degenkit.linalg`), structure-constant algebras with variety
identity checks (:mod:`degenkit.algebra`), orbit-closure invariants
(:mod:`degenkit.invariants`), the parametrized basis-change witness
engine (:mod:`degenkit.degeneration`), idempotent eigenspace splits
(:mod:`degenkit.pierce`), the catalog of named algebras and witnesses
(:mod:`degenkit.catalog`) and the command-line suites
(:mod:`degenkit.cli`).
"""

from .algebra import (
    Algebra,
    VarietyReport,
    abelian,
    apply_basis_change,
    check_variety,
    direct_sum,
    is_idempotent,
    make_algebra,
    power_series,
    structure_flags,
    subspace_product,
)
from .degeneration import (
    ParamAlgebra,
    Witness,
    compose_witnesses,
    limit0_algebra,
    make_witness,
    transform,
    verify_witness,
)
from .exactnum import (
    GaussianRational,
    Pole,
    RationalFunctionT,
    Scalar,
    Singular,
    TPoly,
    parse_scalar,
    parse_tpoly,
    scalar,
    tmatrix_inverse,
    tpoly_limit0,
)
from .invariants import (
    InvariantProfile,
    Obstruction,
    annihilator_dim,
    degeneration_obstructions,
    derivation_dim,
    invariant_profile,
    max_abelian_coordinate_ideal,
)
from .linalg import Matrix, Subspace, nullspace, rank, rref, subspace_ops
from .pierce import PierceSplit, pierce_associative, pierce_jordan

__version__ = "0.1.0"

__all__ = [
    "Algebra", "GaussianRational", "InvariantProfile", "Matrix",
    "Obstruction", "ParamAlgebra", "PierceSplit", "Pole",
    "RationalFunctionT", "Scalar", "Singular", "Subspace", "TPoly",
    "VarietyReport", "Witness", "abelian", "annihilator_dim",
    "apply_basis_change", "check_variety", "compose_witnesses",
    "degeneration_obstructions", "derivation_dim", "direct_sum",
    "invariant_profile", "is_idempotent", "limit0_algebra", "make_algebra",
    "make_witness", "max_abelian_coordinate_ideal", "nullspace",
    "parse_scalar", "parse_tpoly", "pierce_associative", "pierce_jordan",
    "power_series", "rank", "rref", "scalar", "structure_flags",
    "subspace_ops", "subspace_product", "tmatrix_inverse", "tpoly_limit0",
    "transform", "verify_witness",
]
