"""Acceptance criteria, one test per criterion, all exact (zero tolerance).

Each test prints a single pass/fail line; run with ``pytest -s`` to see the
summary while the suite executes.
"""

import functools
import random
import time
from fractions import Fraction

from degenkit import catalog
from degenkit.algebra import apply_basis_change, check_variety
from degenkit.catalog import (
    build,
    chain_cases,
    entry_varieties,
    identity_sample_builds,
    jordan_witness_cases,
    level_one_cases,
    level_two_names,
    lie_witness_cases,
    witness_case,
)
from degenkit.degeneration import (
    limit0_algebra,
    transform,
    transform_matches_numeric,
    verify_witness,
)
from degenkit.invariants import (
    degeneration_obstructions,
    derivation_dim,
    max_abelian_coordinate_ideal,
)
from degenkit.linalg import Matrix, Subspace
from degenkit.pierce import pierce_associative, pierce_jordan

H = Fraction(1, 2)


def criterion(num, desc):
    def deco(fn):
        @functools.wraps(fn)
        def wrapper(*args, **kwargs):
            try:
                fn(*args, **kwargs)
            except BaseException:
                print(f"criterion {num:2}: FAIL  {desc}")
                raise
            print(f"criterion {num:2}: PASS  {desc}")
        return wrapper
    return deco


@functools.lru_cache(maxsize=None)
def _sampled_witness_cases():
    """Every witness instantiation exercised by the acceptance suite."""
    cases = []
    for n in (3, 4, 5):
        cases.extend(jordan_witness_cases(n))
    for n in (5, 6):
        cases.extend(lie_witness_cases(n))
    cases.append(witness_case("W6", 7, k=3))
    for n in (3, 4, 5):
        cases.extend(case for _, case in chain_cases(n))
        cases.extend(level_one_cases(n))
    return tuple(cases)


@criterion(1, "identity suite: all catalog algebras pass their varieties, n = 3..8")
def test_criterion_1_identity_suite():
    t0 = time.time()
    checked = 0
    for n in range(3, 9):
        for name, params, alg in identity_sample_builds(n):
            for tag in entry_varieties(name, params):
                report = check_variety(alg, tag)
                assert report.passed, (name, n, params, tag,
                                       report.violations[:2])
                checked += 1
    elapsed = time.time() - t0
    assert checked > 300
    assert elapsed < 5.0, f"identity suite took {elapsed:.2f}s (budget 5s)"


@criterion(2, "derivation dimensions of the five Lie families, n = 5..9")
def test_criterion_2_lie_derivation_dimensions():
    t0 = time.time()
    for n in range(5, 10):
        assert derivation_dim(build("n51", n))[0] == n * n - 5 * n + 15
        assert derivation_dim(build("n52", n))[0] == n * n - 5 * n + 13
        assert derivation_dim(build("r2", n))[0] == n * n - 3 * n + 4
        for alpha in (Fraction(2), Fraction(-1), H):
            assert derivation_dim(build("gn1", n, alpha=alpha))[0] == \
                n * n - 3 * n + 4
        assert derivation_dim(build("gn2", n))[0] == n * n - 3 * n + 4
    elapsed = time.time() - t0
    assert elapsed < 30.0, f"took {elapsed:.2f}s (budget 30s)"


@criterion(3, "Jordan derivation dimensions, n = 3..9")
def test_criterion_3_jordan_derivation_dimensions():
    for n in range(3, 10):
        d1 = derivation_dim(build("J1", n))[0]
        d2 = derivation_dim(build("J2", n))[0]
        d3 = derivation_dim(build("J3", n))[0]
        assert d1 == d2 == n * n - 2 * n + 1
        assert d3 == n * n - 3 * n + 4


@criterion(4, "maximal abelian coordinate ideals of the Lie families, n = 5..9")
def test_criterion_4_abelian_ideal_dimensions():
    t0 = time.time()
    for n in range(5, 10):
        assert max_abelian_coordinate_ideal(build("n51", n))[0] == n - 2
        assert max_abelian_coordinate_ideal(build("n52", n))[0] == n - 1
        assert max_abelian_coordinate_ideal(build("r2", n))[0] == n - 1
        assert max_abelian_coordinate_ideal(build("gn1", n, alpha=2))[0] == n - 1
        assert max_abelian_coordinate_ideal(build("gn2", n))[0] == n - 1
    elapsed = time.time() - t0
    assert elapsed < 10.0, f"took {elapsed:.2f}s (budget 10s at n = 9)"


@criterion(5, "witness suite: W1-W12 verify at the sampled instantiations")
def test_criterion_5_witness_suite():
    seen = set()
    for n in (3, 4, 5):
        for case in jordan_witness_cases(n):
            verdict = verify_witness(case.source, case.witness, case.target)
            assert verdict.passed, (case.id, n, case.source_ref,
                                    verdict.residuals[:3])
            seen.add(case.id)
    for n, k in ((5, 2), (7, 3)):
        case = witness_case("W6", n, k=k)
        assert verify_witness(case.source, case.witness, case.target).passed
        seen.add(case.id)
    for n in (5, 6):
        for case in lie_witness_cases(n):
            verdict = verify_witness(case.source, case.witness, case.target)
            assert verdict.passed, (case.id, n, case.source_ref,
                                    verdict.residuals[:3])
            seen.add(case.id)
    assert seen >= {f"W{i}" for i in range(1, 13)}


@criterion(6, "separation suite: obstructions in both directions for all pairs")
def test_criterion_6_separations():
    for n in (3, 5):
        algs = [build(name, n) for name in ("J1", "J2", "J3")]
        for a in algs:
            for b in algs:
                if a is not b:
                    assert degeneration_obstructions(a, b), (n, "jordan pair")
    for n in (5, 6):
        fams = [build("n51", n), build("n52", n), build("r2", n),
                build("gn1", n, alpha=2), build("gn2", n)]
        for a in fams:
            for b in fams:
                if a is not b:
                    assert degeneration_obstructions(a, b), (n, "lie pair")


@criterion(7, "chain suite: every level-two entry reaches level one, then abelian")
def test_criterion_7_chains():
    for n in (3, 4, 5):
        covered = set()
        for name, case in chain_cases(n):
            covered.add(name)
            verdict = verify_witness(case.source, case.witness, case.target)
            assert verdict.passed, (name, n, verdict.residuals[:3])
            for t0 in (H, Fraction(1, 3)):
                assert transform_matches_numeric(case.source, case.witness, t0)
        assert covered == set(level_two_names(n))
        # the two coincidence entries are exactly the level-one tables at
        # weights 1 and 0; their chain is the level-one chain
        assert build("A3", n) == build("nu", n, alpha=1)
        assert build("A4", n) == build("nu", n, alpha=0)
        for case in level_one_cases(n):
            assert verify_witness(case.source, case.witness, case.target).passed


@criterion(8, "Pierce suite: complete splits with all component rules holding")
def test_criterion_8_pierce():
    for n in (3, 4, 5):
        e1 = [1] + [0] * (n - 1)
        split = pierce_jordan(build("nu", n, alpha=H), e1)
        assert split.dims() == {"P0": 0, "P_half": n - 1, "P1": 1}
        assert split.all_rules_hold
        split = pierce_jordan(build("J1", n), e1)
        assert split.dims() == {"P0": n - 1, "P_half": 0, "P1": 1}
        assert split.all_rules_hold
        split = pierce_jordan(build("J2", n), e1)
        assert split.dims() == {"P0": 0, "P_half": 0, "P1": n}
        assert split.all_rules_hold
        split = pierce_associative(build("A2", n), e1)
        assert split.dims() == {"A11": n, "A10": 0, "A01": 0, "A00": 0}
        assert split.all_rules_hold
        split = pierce_associative(build("A3", n), e1)
        assert split.dims() == {"A11": 1, "A10": n - 1, "A01": 0, "A00": 0}
        assert split.all_rules_hold
        split = pierce_associative(build("A4", n), e1)
        assert split.dims() == {"A11": 1, "A10": 0, "A01": n - 1, "A00": 0}
        assert split.all_rules_hold


@criterion(9, "symbolic/numeric cross-check at t = 1/2 and t = 1/3")
def test_criterion_9_cross_check():
    for case in _sampled_witness_cases():
        for t0 in (H, Fraction(1, 3)):
            assert transform_matches_numeric(case.source, case.witness, t0), \
                (case.id, case.source_ref, t0)


def _random_invertible(rng, n):
    while True:
        m = Matrix([[Fraction(rng.randint(-3, 3)) for _ in range(n)]
                    for _ in range(n)])
        if m.is_invertible():
            return m


@criterion(10, "property suite: invariance, Grassmann identity, closed varieties")
def test_criterion_10_properties():
    rng = random.Random(2024)
    samples = [
        ("J3", {}, 5), ("J1", {}, 4), ("n51", {}, 5), ("gn2", {}, 6),
        ("A5", {"alpha": 2}, 4), ("nu", {"alpha": H}, 4), ("r2", {}, 3),
        ("sl2", {}, 3),
    ]
    for name, params, n in samples:
        alg = build(name, n, **params)
        tags = entry_varieties(name, params)
        base_der = derivation_dim(alg)[0]
        for _ in range(5):
            p = _random_invertible(rng, n)
            moved = apply_basis_change(alg, p)
            assert derivation_dim(moved)[0] == base_der, (name, n)
            for tag in tags:
                assert check_variety(moved, tag).passed, (name, tag)
    # Grassmann identity on 20 random subspace pairs
    for _ in range(20):
        n = rng.randint(2, 6)
        u = Subspace.from_vectors(
            n, [[Fraction(rng.randint(-3, 3)) for _ in range(n)]
                for _ in range(rng.randint(0, n))])
        v = Subspace.from_vectors(
            n, [[Fraction(rng.randint(-3, 3)) for _ in range(n)]
                for _ in range(rng.randint(0, n))])
        assert u.sum(v).dim + u.intersect(v).dim == u.dim + v.dim
    # variety closedness along every sampled witness
    for case in _sampled_witness_cases():
        limit = limit0_algebra(transform(case.source, case.witness))
        for tag in ("commutative", "anticommutative", "lie", "jordan",
                    "associative"):
            if check_variety(case.source, tag).passed:
                assert check_variety(limit, tag).passed, (case.id, tag)
