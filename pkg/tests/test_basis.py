import pytest

from addbasis import (NATURALS, NotABasis, NotAMember, analyze, basis_report,
                      canonicalize, essential_elements, is_basis,
                      is_essential_element, order, parse_set, remove_ok)

EX1 = parse_set("E={1,5}; m=6; R={0}; N0=0")
SIX_N = parse_set("E={}; m=6; R={0}; N0=0")


class TestBasisReport:
    def test_basis(self):
        report = basis_report(EX1)
        assert report.is_basis and report.diff_gcd == 1
        assert report.failure_reason is None

    def test_gcd_obstruction(self):
        report = basis_report(SIX_N)
        assert not report.is_basis
        assert report.diff_gcd == 6
        assert report.failure_reason == "GcdExceedsOne(6)"

    def test_finite_set(self):
        report = basis_report(canonicalize([1, 5], 1, [], 0))
        assert not report.is_basis
        assert report.failure_reason == "FiniteSet"

    def test_json_shape(self):
        assert analyze(EX1).to_json_dict() == {
            "is_basis": True, "diff_gcd": 1, "order": 4, "failure_reason": None}


class TestOrder:
    def test_pair_plus_six_multiples(self):
        assert order(EX1) == 4

    def test_naturals(self):
        assert order(NATURALS) == 1

    def test_two_three_case(self):
        assert order(parse_set("E={2,3}; m=6; R={0}; N0=0")) == 4

    def test_not_a_basis(self):
        with pytest.raises(NotABasis):
            order(SIX_N)

    def test_cofinite_set_has_order_one(self):
        assert order(canonicalize([], 1, [0], 17)) == 1

    def test_tail_plus_unit_class(self):
        # evens plus odd tail from 1: every class reachable in one tail step
        assert order(canonicalize([], 1, [0], 0)) == 1
        assert order(canonicalize([], 2, [0, 1], 0)) == 1

    def test_order_needs_enough_summands(self):
        # {1} ∪ 4N: class 3 mod 4 needs three copies of 1 plus a tail element
        s = canonicalize([1], 4, [0], 0)
        assert order(s) == 4

    def test_order_within_derived_bound(self, corpus):
        for s in corpus[:100]:
            assert 1 <= order(s) <= s.modulus + 1


class TestRemoveOk:
    def test_removing_pair_kills(self):
        assert remove_ok(EX1, [1, 5]) is False

    def test_removing_one_survives(self):
        assert remove_ok(EX1, [1]) is True

    def test_empty_removal(self):
        assert remove_ok(EX1, []) is True

    def test_requires_basis(self):
        with pytest.raises(NotABasis):
            remove_ok(SIX_N, [0])

    def test_requires_subset(self):
        from addbasis import NotASubset
        with pytest.raises(NotASubset):
            remove_ok(EX1, [2])


class TestEssentialElements:
    def test_pair_case_has_none(self):
        assert essential_elements(EX1) == ()
        assert is_essential_element(EX1, 1) is False
        assert is_essential_element(EX1, 5) is False

    def test_naturals_have_none(self):
        assert essential_elements(NATURALS) == ()

    def test_offset_three_five(self):
        s = parse_set("E={3,5}; m=6; R={0}; N0=0")
        assert essential_elements(s) == (5,)
        assert is_essential_element(s, 5) is True
        assert is_essential_element(s, 3) is False

    def test_non_member_rejected(self):
        with pytest.raises(NotAMember):
            is_essential_element(EX1, 4)

    def test_tail_elements_never_essential(self):
        s = parse_set("E={3,5}; m=6; R={0}; N0=0")
        for x in (0, 6, 600):
            assert is_essential_element(s, x) is False


def test_is_basis_shorthand():
    assert is_basis(EX1) is True
    assert is_basis(SIX_N) is False
