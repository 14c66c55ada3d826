"""Tests for the degeneration witness engine."""

from fractions import Fraction

import pytest

from degenkit.algebra import abelian, check_variety, make_algebra
from degenkit.degeneration import (
    ParamAlgebra,
    compose_witnesses,
    diag_witness,
    limit0_algebra,
    make_witness,
    numeric_g_matrix,
    transform,
    transform_matches_numeric,
    verify_witness,
    witness_from_columns,
    witness_from_dict,
    witness_to_dict,
)
from degenkit.exactnum import Pole, RationalFunctionT, Singular, TPoly, parse_tpoly
from degenkit.linalg import Matrix


def J3(n=3):
    return make_algebra(n, [(1, 2, 3, 1)], "commutative")


def Jzeta(zetas):
    n = len(zetas) + 1
    prods = [(1, 1, 1, 1)]
    for i, z in enumerate(zetas, start=2):
        if z != 0:
            prods.append((1, i, i, z))
    return make_algebra(n, prods, "commutative")


def P3():
    return make_algebra(3, [(1, 2, 2, 1), (2, 1, 2, -1),
                            (1, 3, 3, 1), (3, 1, 3, -1)])


def R2A1():
    return make_algebra(3, [(1, 2, 2, 1)], "anticommutative")


def N3():
    return make_algebra(3, [(1, 2, 3, 1)], "anticommutative")


def identity_witness(n):
    return make_witness([[1 if i == j else 0 for j in range(n)] for i in range(n)])


def test_identity_witness_constant_tensor():
    a = J3()
    pa = transform(a, identity_witness(3))
    for i in range(3):
        for j in range(3):
            for k in range(3):
                assert pa.c[i][j][k] == RationalFunctionT.const(a.c[i][j][k])


def test_scaling_witness_multiplies_by_t():
    a = make_algebra(2, [(1, 1, 2, 1)], "commutative")  # one-dim square table
    w = diag_witness([-1, -1])
    pa = transform(a, w)
    t = RationalFunctionT(TPoly.t())
    for i in range(2):
        for j in range(2):
            for k in range(2):
                assert pa.c[i][j][k] == t * a.c[i][j][k]
    assert limit0_algebra(pa) == abelian(2)


def test_eigen_splitting_witness_reaches_product_table():
    # source: idempotent acting diagonally with eigenvalues 1 and 0; the
    # new-basis witness e1 -> t e1, e2 -> e2 + e3, e3 -> t (z2 e2 + z3 e3)
    # has constant limit with the single product e1 e2 = e3
    z2, z3 = 1, 0
    src = Jzeta([z2, z3])
    w = witness_from_columns(
        [[TPoly.t(1), 0, 0], [0, 1, 1], [0, TPoly.t(1, z2), TPoly.t(1, z3)]])
    verdict = verify_witness(src, w, J3())
    assert verdict.passed
    assert verdict.proper
    assert verdict.limit == J3()


def test_pole_identifies_entry():
    w = diag_witness([1, 0, 0])
    pa = transform(P3(), w)
    with pytest.raises(Pole) as err:
        limit0_algebra(pa)
    assert err.value.position == (1, 2, 2)


def test_verify_witness_trivial():
    a = J3()
    verdict = verify_witness(a, identity_witness(3), a)
    assert verdict.passed
    assert not verdict.proper


def test_verify_witness_derived_r2_to_n3():
    # new basis x1 = t e1, x2 = e2 + e3, x3 = t e2:
    # [x1, x2] = t e2 = x3 stays, [x1, x3] = t x3 -> 0
    w = witness_from_columns(
        [[TPoly.t(), 0, 0], [0, 1, 1], [0, TPoly.t(), 0]])
    verdict = verify_witness(R2A1(), w, N3())
    assert verdict.passed
    assert verdict.proper


def test_verify_witness_residuals_on_wrong_target():
    w = identity_witness(3)
    verdict = verify_witness(J3(), w, abelian(3))
    assert verdict.limit_exists
    assert not verdict.limit_equals_target
    assert (1, 2, 3, "1", "0") in verdict.residuals


def test_singular_witness_rejected():
    w = make_witness([[TPoly.t(), TPoly.t()], [1, 1]])
    with pytest.raises(Singular):
        transform(abelian(2), w)


def test_post_iso_applied_before_comparison():
    # limit has x1 x2 = x3 and x2 x2 = -x3; sending e2 -> e2 + e1/2... the
    # corrected square-completion (coefficient 1/2) reaches the bare table
    src = make_algebra(3, [(1, 2, 3, 1), (2, 2, 3, 1)], "commutative")
    q = Matrix([[1, Fraction(-1, 2), 0], [0, 1, 0], [0, 0, 1]])
    w = make_witness([[1 if i == j else 0 for j in range(3)] for i in range(3)],
                     post_iso=q.inverse())
    verdict = verify_witness(src, w, J3())
    assert verdict.passed


def test_compose_witnesses():
    w = diag_witness([-1, -1, -1])
    ident = identity_witness(3)
    assert compose_witnesses(ident, w).m == w.m
    twice = compose_witnesses(w, w)
    assert twice.m[0][0] == TPoly.t(-2)
    # two-step chain: r2 + a -> n3 and n3 -> abelian
    w1 = witness_from_columns([[TPoly.t(), 0, 0], [0, 1, 1], [0, TPoly.t(), 0]])
    assert verify_witness(R2A1(), w1, N3()).passed
    assert verify_witness(N3(), w, abelian(3)).passed


def test_g_and_g_inverse_give_same_param_algebra():
    a = Jzeta([1, 0])
    w_inv = witness_from_columns(
        [[TPoly.t(1), 0, 0], [0, 1, 1], [0, TPoly.t(1), 0]], kind="g_inverse")
    from degenkit.exactnum import tmatrix_inverse

    g_entries = tmatrix_inverse(w_inv.m)
    assert all(x.is_tpoly() for row in g_entries for x in row)
    w_g = make_witness([[x.num for x in row] for row in g_entries], kind="g")
    pa1 = transform(a, w_inv)
    pa2 = transform(a, w_g)
    assert pa1 == pa2


@pytest.mark.parametrize("t0", [Fraction(1, 2), Fraction(1, 3)])
def test_symbolic_numeric_cross_check(t0):
    cases = [
        (Jzeta([1, 0]), witness_from_columns(
            [[TPoly.t(1), 0, 0], [0, 1, 1], [0, TPoly.t(1), 0]])),
        (R2A1(), witness_from_columns(
            [[TPoly.t(), 0, 0], [0, 1, 1], [0, TPoly.t(), 0]])),
        (P3(), diag_witness([-1, -1, -1])),
    ]
    for a, w in cases:
        assert transform_matches_numeric(a, w, t0)


def test_limit_preserves_variety():
    cases = [
        (Jzeta([1, 0]), witness_from_columns(
            [[TPoly.t(1), 0, 0], [0, 1, 1], [0, TPoly.t(1), 0]]), "jordan"),
        (R2A1(), witness_from_columns(
            [[TPoly.t(), 0, 0], [0, 1, 1], [0, TPoly.t(), 0]]), "lie"),
    ]
    for a, w, variety in cases:
        assert check_variety(a, variety).passed
        limit = limit0_algebra(transform(a, w))
        assert check_variety(limit, variety).passed


def test_numeric_matrix_kind_inverse():
    w = witness_from_columns([[TPoly.t(), 0], [0, 1]], kind="g_inverse")
    m = numeric_g_matrix(w, Fraction(1, 2))
    assert m == Matrix([[2, 0], [0, 1]])


def test_witness_json_round_trip():
    q = Matrix([[1, Fraction(-1, 2)], [0, 1]])
    w = make_witness([[TPoly.t(-2), TPoly.const(1)], [0, TPoly.t(3)]],
                     kind="g_inverse", post_iso=q,
                     source="catalog:x@2", target="catalog:y@2")
    data = witness_to_dict(w)
    assert {"row": 1, "col": 1, "value": "t^-2"} in data["entries"]
    back = witness_from_dict(data)
    assert back == w
