"""Tests for exact linear algebra and subspace lattice operations."""

import random
from fractions import Fraction

import pytest

from degenkit.exactnum import Singular, scalar
from degenkit.linalg import (
    AmbientMismatch,
    Matrix,
    Subspace,
    nullspace,
    rank,
    rref,
    subspace_ops,
)


def test_rref_identity():
    m = Matrix.identity(3)
    reduced, rk = rref(m)
    assert reduced == m
    assert rk == 3


def test_rref_rank_one():
    reduced, rk = rref(Matrix([[2, 4], [1, 2]]))
    assert reduced == Matrix([[1, 2], [0, 0]])
    assert rk == 1


def test_rref_zero():
    reduced, rk = rref(Matrix.zero(2, 5))
    assert reduced == Matrix.zero(2, 5)
    assert rk == 0


def test_rref_gaussian_entries():
    i = scalar(0, 1)
    m = Matrix([[i, 1], [1, i]])
    # rows are dependent: (i, 1) = i * (1, i) since i*i = -1... check rank
    assert rank(m) == 2  # i * (1, i) = (i, -1) != (i, 1)
    m2 = Matrix([[i, -1], [1, i]])
    assert rank(m2) == 1


def test_nullspace_identity_and_zero():
    assert nullspace(Matrix.identity(4)).dim == 0
    assert nullspace(Matrix.zero(2, 3)) == Subspace.full(3)


def test_nullspace_one_equation():
    ns = nullspace(Matrix([[1, 1, 0]]))
    assert ns.dim == 2
    assert ns.contains_vector([1, -1, 0])
    assert ns.contains_vector([0, 0, 1])
    assert not ns.contains_vector([1, 0, 0])


def test_nullspace_vectors_satisfy_system():
    m = Matrix([[1, 2, 3, 4], [0, 1, -1, 2]])
    ns = nullspace(m)
    assert ns.dim == 2
    for v in ns.vectors():
        assert all(x == 0 for x in m.apply(v))


def test_subspace_canonical_equality():
    u = Subspace.from_vectors(3, [[1, 1, 0], [0, 0, 2]])
    v = Subspace.from_vectors(3, [[2, 2, 2], [0, 0, -1]])
    assert u == v
    assert hash(u) == hash(v)


def test_subspace_sum_and_contains():
    u = Subspace.from_vectors(3, [[1, 0, 0]])
    v = Subspace.from_vectors(3, [[0, 1, 0]])
    s = subspace_ops(u, v, "sum")
    assert s.dim == 2
    assert subspace_ops(Subspace.from_vectors(2, [[1, 0], [0, 1]]),
                        Subspace.from_vectors(2, [[1, 1]]), "contains")
    full = u.sum(v).sum(Subspace.from_vectors(3, [[0, 0, 1]]))
    assert full == Subspace.full(3)


def test_subspace_intersection():
    u = Subspace.from_vectors(3, [[1, 0, 0], [0, 1, 0]])
    v = Subspace.from_vectors(3, [[0, 1, 0], [0, 0, 1]])
    w = u.intersect(v)
    assert w == Subspace.from_vectors(3, [[0, 1, 0]])


def test_ambient_mismatch():
    with pytest.raises(AmbientMismatch):
        Subspace.full(2).sum(Subspace.full(3))


def _random_subspace(rng, n):
    k = rng.randint(0, n)
    return Subspace.from_vectors(
        n, [[Fraction(rng.randint(-3, 3)) for _ in range(n)] for _ in range(k)])


def test_grassmann_identity():
    rng = random.Random(11)
    for _ in range(20):
        n = rng.randint(2, 5)
        u = _random_subspace(rng, n)
        v = _random_subspace(rng, n)
        assert u.sum(v).dim + u.intersect(v).dim == u.dim + v.dim


def test_rank_transpose():
    rng = random.Random(5)
    for _ in range(10):
        rows = rng.randint(1, 8)
        cols = rng.randint(1, 8)
        m = Matrix([[Fraction(rng.randint(-4, 4)) for _ in range(cols)]
                    for _ in range(rows)])
        assert rank(m) == rank(m.transpose())


def test_inverse_round_trip():
    m = Matrix([[1, 2, 0], [0, 1, Fraction(1, 2)], [3, 0, 1]])
    inv = m.inverse()
    assert m * inv == Matrix.identity(3)
    with pytest.raises(Singular):
        Matrix([[1, 2], [2, 4]]).inverse()
