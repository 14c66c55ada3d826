"""Tests for the algebra catalog and witness registry."""

from fractions import Fraction

import pytest

from degenkit.algebra import abelian, check_variety, make_algebra
from degenkit.catalog import (
    DimensionConstraint,
    ParameterDomain,
    UnknownName,
    UnknownWitness,
    build,
    chain_cases,
    entry_varieties,
    identity_sample_builds,
    jordan_witness_cases,
    level_one_cases,
    level_two_names,
    lie_witness_cases,
    list_entries,
    list_witnesses,
    ref,
    witness,
    witness_case,
)
from degenkit.degeneration import verify_witness

H = Fraction(1, 2)


def test_build_nu():
    a = build("nu", 3, alpha=H)
    assert a.c[0][0][0] == 1
    assert a.c[0][1][1] == H
    assert a.c[1][0][1] == H


def test_build_j2():
    a = build("J2", 4)
    assert a.c[0][0][0] == 1
    for i in (1, 2, 3):
        assert a.c[0][i][i] == 1
        assert a.c[i][0][i] == 1


def test_dimension_constraints():
    with pytest.raises(DimensionConstraint):
        build("r3", 4, alpha=H)
    with pytest.raises(DimensionConstraint):
        build("n51", 4)
    with pytest.raises(DimensionConstraint):
        build("T4", 5)


def test_parameter_domains():
    with pytest.raises(ParameterDomain):
        build("gn1", 5, alpha=1)
    with pytest.raises(ParameterDomain):
        build("gn1", 5, alpha=0)
    with pytest.raises(ParameterDomain):
        build("A5", 3, alpha=-1)
    with pytest.raises(ParameterDomain):
        build("Jzeta", 3, zetas=(1, 1))
    with pytest.raises(ParameterDomain):
        build("Jzeta", 3, zetas=(1, Fraction(1, 3)))
    with pytest.raises(ParameterDomain):
        build("gn1multi", 4, alphas=(1, 1))


def test_unknown_names():
    with pytest.raises(UnknownName):
        build("nope", 3)
    with pytest.raises(UnknownWitness):
        witness("W99", 3)


def test_build_deterministic():
    a = build("gn1", 5, alpha=2)
    b = build("gn1", 5, alpha=2)
    assert a == b and a is not b


def test_cross_references_are_exact_table_coincidences():
    for n in (3, 4, 5):
        assert build("A1", n) == build("J1", n)
        assert build("A2", n) == build("J2", n)
        assert build("A3", n) == build("nu", n, alpha=1)
        assert build("A4", n) == build("nu", n, alpha=0)
    assert build("T4", 3) == build("J3", 3)
    assert build("g41", 4, alpha=2) == build("gn1", 4, alpha=2)
    assert build("g42", 4) == build("gn2", 4)


def test_listing():
    names = {e["name"] for e in list_entries()}
    assert "J3" in names
    entry = next(e for e in list_entries() if e["name"] == "J3")
    assert entry["citation"]
    wids = {w["id"] for w in list_witnesses()}
    assert "W0" in wids and "W12" in wids and "D12" in wids
    lie5 = [name for name in level_two_names(5)
            if "lie" in entry_varieties(name, {"alpha": 2})]
    assert len(lie5) == 5  # n51, n52, r2, gn1, gn2


def test_ref_strings():
    assert ref("J3", 3) == "catalog:J3@3"
    assert ref("gn1", 5, {"alpha": Fraction(2)}) == "catalog:gn1@5?alpha=2"
    assert ref("Jzeta", 3, {"zetas": (1, 0)}) == "catalog:Jzeta@3?zetas=1,0"


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_identity_suite_samples(n):
    for name, params, alg in identity_sample_builds(n):
        assert alg.n == n
        for tag in entry_varieties(name, params):
            report = check_variety(alg, tag)
            assert report.passed, (name, params, tag, report.violations[:2])


@pytest.mark.parametrize("n", [3, 4, 5])
def test_jordan_witnesses(n):
    for case in jordan_witness_cases(n):
        verdict = verify_witness(case.source, case.witness, case.target)
        assert verdict.passed, (case.id, case.source_ref, verdict.residuals[:3])


@pytest.mark.parametrize("n", [5, 6])
def test_lie_witnesses(n):
    for case in lie_witness_cases(n):
        verdict = verify_witness(case.source, case.witness, case.target)
        assert verdict.passed, (case.id, case.source_ref, verdict.residuals[:3])


def test_w6_sampled_pairs():
    for n, k in ((5, 2), (7, 3)):
        case = witness_case("W6", n, k=k)
        assert verify_witness(case.source, case.witness, case.target).passed


@pytest.mark.parametrize("n", [3, 4, 5])
def test_chain_cases_verify(n):
    seen = set()
    for name, case in chain_cases(n):
        seen.add(name)
        verdict = verify_witness(case.source, case.witness, case.target)
        assert verdict.passed, (name, case.id, verdict.residuals[:3])
    assert seen == set(level_two_names(n))


@pytest.mark.parametrize("n", [3, 5])
def test_level_one_abelianize(n):
    for case in level_one_cases(n):
        verdict = verify_witness(case.source, case.witness, case.target)
        assert verdict.passed
        assert case.target == abelian(n)


def test_witness_has_declared_refs():
    w = witness("W2", 3, zetas=(1, 0))
    assert w.source.startswith("catalog:Jzeta@3")
    assert w.target == "catalog:J3@3"
    assert w.kind == "g_inverse"


def test_w0_alias():
    case = witness_case("W0-abelianize", 4, source_name="p")
    assert verify_witness(case.source, case.witness, case.target).passed


def test_der_dim_strictly_increases_along_proper_witnesses():
    from degenkit.catalog import associative_witness_cases
    from degenkit.invariants import derivation_dim, invariant_profile

    cases = []
    for n in (3, 4, 5):
        cases.extend(jordan_witness_cases(n))
        cases.extend(case for _, case in chain_cases(n))
    cases.extend(lie_witness_cases(5))
    for case in cases:
        verdict = verify_witness(case.source, case.witness, case.target)
        assert verdict.passed
        differ = (invariant_profile(case.source).isomorphism_invariants()
                  != invariant_profile(case.target).isomorphism_invariants())
        assert verdict.proper == differ
        if differ:
            assert derivation_dim(case.source)[0] < \
                derivation_dim(case.target)[0], (case.id, case.source_ref)


def test_w7_with_nonzero_cross_terms_is_isomorphic_to_target():
    # the source with nonzero cross coefficients lies in the target's orbit
    # (the post-limit change is an isomorphism), so the witness verifies but
    # the degeneration is not proper
    case = witness_case("W7", 5, g4=1, g5=-2)
    verdict = verify_witness(case.source, case.witness, case.target)
    assert verdict.passed
    assert not verdict.proper


def test_d12_coincidence_reading():
    case = witness_case("D12", 4, variant="A3")
    assert case.target == abelian(4)
    assert "coincides" in case.notes
    verdict = verify_witness(case.source, case.witness, case.target)
    assert verdict.passed
