import math

import pytest

from addbasis import (EVENS, NATURALS, ODDS, EqualElements, IdenticalSubsets,
                      NotABasis, NotAMember, NotASubset, avoiding_indices,
                      canonicalize, coprimality_report, diff_gcd_without,
                      essential_subsets, omega, parse_set, proof_trace,
                      verify_essentiality)
from addbasis.essentia import EssentialSubset

from helpers import definition_essential_subsets

EX1 = parse_set("E={1,5}; m=6; R={0}; N0=0")
TWO_THREE = parse_set("E={2,3}; m=6; R={0}; N0=0")
THREE_FIVE = parse_set("E={3,5}; m=6; R={0}; N0=0")


class TestDiffGcdWithout:
    def test_removing_the_pair(self):
        assert diff_gcd_without(EX1, [1, 5]) == 6

    def test_removing_nothing(self):
        assert diff_gcd_without(EX1, []) == 1

    def test_removing_three(self):
        assert diff_gcd_without(TWO_THREE, [3]) == 2


class TestOmega:
    def test_small_values(self):
        assert omega(1) == 0
        assert omega(6) == 2
        assert omega(8) == 1

    def test_rejects_nonpositive(self):
        from addbasis import InvalidInput
        with pytest.raises(InvalidInput):
            omega(0)


class TestEssentialSubsets:
    def test_pair_with_two_witnesses(self):
        fam = essential_subsets(EX1)
        assert [(es.members, es.d_value, es.witness_primes) for es in fam] == \
            [((1, 5), 6, (2, 3))]

    def test_naturals_have_none(self):
        assert essential_subsets(NATURALS) == []

    def test_minimality_filter(self):
        # p=2 concentrates with candidate {3,5}, p=3 with {5}; only the
        # smaller one is a genuine essentiality.
        fam = essential_subsets(THREE_FIVE)
        assert [(es.members, es.d_value, es.witness_primes) for es in fam] == \
            [((5,), 3, (3,))]

    def test_ordering_is_by_min_then_lex(self):
        fam = essential_subsets(TWO_THREE)
        assert [es.members for es in fam] == [(2,), (3,)]

    def test_family_size_bounded_by_omega_of_modulus(self, corpus):
        for s in corpus[:150]:
            assert len(essential_subsets(s)) <= omega(s.modulus)

    def test_requires_basis(self):
        with pytest.raises(NotABasis):
            essential_subsets(parse_set("E={}; m=6; R={0}; N0=0"))

    def test_matches_definition_chasing_search(self):
        for s in (EX1, TWO_THREE, THREE_FIVE,
                  canonicalize([6, 10, 15], 30, [0], 0),
                  canonicalize([4, 9], 12, [0], 5)):
            fam = [es.members for es in essential_subsets(s)]
            assert fam == definition_essential_subsets(s, s.exceptional)


class TestVerifyEssentiality:
    def test_evens_are_an_essentiality_of_naturals(self):
        assert verify_essentiality(NATURALS, EVENS).holds

    def test_odds_too(self):
        assert verify_essentiality(NATURALS, ODDS).holds

    def test_complement_of_prime_multiples(self):
        for p in (2, 3, 5, 7, 11, 13):
            candidate = canonicalize([], p, list(range(1, p)), 1)
            assert verify_essentiality(NATURALS, candidate).holds, p

    def test_single_removal_is_not_an_essentiality(self):
        check = verify_essentiality(EX1, canonicalize([1], 1, [], 0))
        assert not check.holds
        assert check.failure == "still-basis"

    def test_finite_essential_subset_verifies(self):
        assert verify_essentiality(EX1, canonicalize([1, 5], 1, [], 0)).holds

    def test_cofinite_removal_fails_as_complement_finite(self):
        n_minus_0 = canonicalize([], 1, [0], 1)
        check = verify_essentiality(NATURALS, n_minus_0)
        assert not check.holds
        assert check.failure == "complement-finite"

    def test_evens_minus_an_element_fail(self):
        for drop in (0, 4):
            candidate = EVENS.remove_finite([drop])
            check = verify_essentiality(NATURALS, candidate)
            assert not check.holds
            assert check.failure == "still-basis"

    def test_non_minimal_infinite_candidate_reports_witness(self):
        # complement of 6N: adding 2 back still leaves everything ≡ 0 (mod 2)
        candidate = canonicalize([], 6, [1, 2, 3, 4, 5], 1)
        check = verify_essentiality(NATURALS, candidate)
        assert not check.holds
        assert check.failure == "not-minimal"
        assert check.witness == 2

    def test_non_minimal_exceptional_witness(self):
        # odds plus {4} inside 4N ∪ odds: adding 4 back leaves gcd 4
        s = canonicalize([], 4, [0, 1, 3], 0)
        candidate = canonicalize([4], 2, [1], 1)
        check = verify_essentiality(s, candidate)
        assert not check.holds
        assert check.failure == "not-minimal"
        assert check.witness == 4

    def test_odds_within_mixed_modulus_basis(self):
        s = canonicalize([], 4, [0, 1, 3], 0)
        assert verify_essentiality(s, ODDS).holds

    def test_requires_subset(self):
        with pytest.raises(NotASubset):
            verify_essentiality(EX1, canonicalize([2], 1, [], 0))

    def test_requires_basis(self):
        with pytest.raises(NotABasis):
            verify_essentiality(parse_set("E={}; m=6; R={0}; N0=0"), EVENS)


class TestAvoidingIndices:
    def test_bound_is_tight_at_zero_six(self):
        fam = essential_subsets(TWO_THREE)
        js = avoiding_indices(TWO_THREE, fam, 0, 6)
        assert js == (1, 2)
        assert len(js) == omega(6)

    def test_members_avoid_nothing(self):
        fam = essential_subsets(TWO_THREE)
        assert avoiding_indices(TWO_THREE, fam, 3, 2) == ()

    def test_single_family(self):
        fam = essential_subsets(EX1)
        assert avoiding_indices(EX1, fam, 0, 6) == (1,)
        assert omega(6) == 2  # bound not tight here

    def test_rejects_equal_elements(self):
        with pytest.raises(EqualElements):
            avoiding_indices(TWO_THREE, essential_subsets(TWO_THREE), 6, 6)

    def test_rejects_non_members(self):
        with pytest.raises(NotAMember):
            avoiding_indices(TWO_THREE, essential_subsets(TWO_THREE), 0, 7)


class TestCoprimalityReport:
    def test_two_three(self):
        fam = essential_subsets(TWO_THREE)
        report = coprimality_report(TWO_THREE, fam[0], fam[1])
        assert {report.d_1, report.d_2} == {2, 3}
        assert math.gcd(report.d_1, report.d_2) == 1

    def test_product_family(self):
        s = canonicalize([105, 70, 42, 30], 210, [0], 0)
        fam = essential_subsets(s)
        by_members = {es.members: es for es in fam}
        report = coprimality_report(s, by_members[(105,)], by_members[(70,)])
        assert (report.d_1, report.d_2) == (2, 3)

    def test_rejects_identical(self):
        fam = essential_subsets(TWO_THREE)
        with pytest.raises(IdenticalSubsets):
            coprimality_report(TWO_THREE, fam[0], fam[0])

    def test_rejects_doctored_d_value(self):
        from addbasis import LawViolation
        fam = essential_subsets(TWO_THREE)
        fake = EssentialSubset(fam[0].members, fam[0].d_value * 5,
                               fam[0].witness_primes)
        with pytest.raises(LawViolation):
            coprimality_report(TWO_THREE, fake, fam[1])


class TestProofTrace:
    def test_two_member_family(self):
        trace = proof_trace(TWO_THREE)
        assert [es.members for es in trace.essential_family] == [(2,), (3,)]
        assert trace.alpha == 1
        assert trace.lambda_set == (2,)
        assert trace.choice == {2: 2}
        assert trace.j_sets == {(2, 3): ()}
        assert trace.i_tilde == (1, 2)

    def test_single_member_family_is_degenerate(self):
        trace = proof_trace(EX1)
        assert trace.alpha == 1
        assert trace.lambda_set == ()
        assert trace.i_tilde == (1,)

    def test_empty_family(self):
        trace = proof_trace(NATURALS)
        assert trace.alpha is None
        assert trace.i_tilde == ()

    def test_three_member_family(self):
        trace = proof_trace(canonicalize([6, 10, 15], 30, [0], 0))
        assert len(trace.essential_family) == 3
        assert trace.i_tilde == (1, 2, 3)

    def test_overlapping_family_still_closes(self):
        # {5,8} and {3,8} share the element 8
        s = canonicalize([3, 5, 8], 15, [0], 0)
        fam = essential_subsets(s)
        assert [es.members for es in fam] == [(3, 8), (5, 8)]
        assert proof_trace(s).i_tilde == (1, 2)

    def test_trace_json_keys(self):
        blob = proof_trace(TWO_THREE).to_json_dict()
        assert set(blob) == {"essential_family", "alpha", "lambda_set",
                             "choice", "j_sets", "i_tilde"}


def test_essential_subset_json():
    es = essential_subsets(EX1)[0]
    assert es.to_json_dict() == {"members": [1, 5], "d_value": 6,
                                 "witness_primes": [2, 3]}
    assert 1 in es and 2 not in es
