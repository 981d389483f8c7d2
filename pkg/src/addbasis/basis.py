"""Basis decisions for eventually periodic sets.

A set A of integers with finite negative part is an (asymptotic) additive
basis when, for some h, every sufficiently large positive integer is a sum
of exactly h elements of A (repetition allowed); the least such h is the
order. For eventually periodic sets both questions are decidable exactly:

* A is a basis iff it is infinite and the gcd of its pairwise differences
  is 1 (see docs/theory.md for the proof sketch). The Nash–Nathanson
  cofinite-removal criterion and the Erdős–Graham essential-element
  criterion then reduce to the same gcd computation on the remainder.
* The order is computed by an exact reachability walk over residue
  classes, not by empirical windowing (docs/theory.md, "Exact order").
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import LawViolation, NotABasis, NotAMember
from .intset import PeriodicSet


@dataclass(frozen=True)
class BasisReport:
    """Verdict of the basis decision.

    ``order`` is present only when ``is_basis`` (and only when the caller
    asked for it, see :func:`analyze`); ``failure_reason`` is one of
    ``"FiniteSet"`` / ``"GcdExceedsOne(d)"`` otherwise.
    """

    is_basis: bool
    diff_gcd: int
    order: int | None = None
    failure_reason: str | None = None

    def to_json_dict(self) -> dict:
        return {
            "is_basis": self.is_basis,
            "diff_gcd": self.diff_gcd,
            "order": self.order,
            "failure_reason": self.failure_reason,
        }


def basis_report(s: PeriodicSet) -> BasisReport:
    """Decide basis-ness. Does not compute the order; see :func:`analyze`."""
    if s.is_finite:
        return BasisReport(False, s.diff_gcd(), failure_reason="FiniteSet")
    d = s.diff_gcd()
    if d != 1:
        return BasisReport(False, d, failure_reason=f"GcdExceedsOne({d})")
    return BasisReport(True, 1)


def is_basis(s: PeriodicSet) -> bool:
    return basis_report(s).is_basis


def require_basis(s: PeriodicSet) -> None:
    report = basis_report(s)
    if not report.is_basis:
        raise NotABasis(f"not a basis ({report.failure_reason}): {s}")


def order(s: PeriodicSet) -> int:
    """Exact order of the basis: the least h whose h-fold sumset (sums of
    exactly h elements, repetition allowed) is cofinite in the naturals.

    Walk over states (residue class mod m, tail-used flag): each summand
    contributes its residue; a tail summand also sets the flag. A class is
    cofinitely covered by h-fold sums iff it is reachable in exactly h steps
    with the flag set — an all-exceptional sum takes finitely many values,
    while one tail summand absorbs any slack in steps of m. The order of a
    canonical basis is at most m + 1 (docs/theory.md).
    """
    require_basis(s)
    m = s.modulus
    full = (1 << m) - 1

    def rotate(mask: int, k: int) -> int:
        if k == 0:
            return mask
        return ((mask << k) | (mask >> (m - k))) & full

    exc_steps = sorted({e % m for e in s.exceptional})
    tail_steps = list(s.residues)
    unflagged = 1  # class 0, no summands yet
    flagged = 0
    for h in range(1, m + 3):
        next_flagged = 0
        for step in tail_steps:
            next_flagged |= rotate(unflagged, step) | rotate(flagged, step)
        for step in exc_steps:
            next_flagged |= rotate(flagged, step)
        next_unflagged = 0
        for step in exc_steps:
            next_unflagged |= rotate(unflagged, step)
        flagged, unflagged = next_flagged, next_unflagged
        if flagged == full:
            return h
    raise LawViolation(f"no order found for basis {s} within m + 2 steps")


def analyze(s: PeriodicSet) -> BasisReport:
    """Basis report with the order filled in when the set is a basis."""
    report = basis_report(s)
    if not report.is_basis:
        return report
    return BasisReport(True, 1, order=order(s))


def remove_ok(s: PeriodicSet, removed: Iterable[int]) -> bool:
    """Does the basis survive removal of the finite set ``removed``?

    Equivalent to ``basis_report(s.remove_finite(removed)).is_basis``; by
    the cofinite-removal criterion this is exactly "the difference gcd of
    the remainder is 1".
    """
    require_basis(s)
    return basis_report(s.remove_finite(removed)).is_basis


def is_essential_element(s: PeriodicSet, x: int) -> bool:
    """Is x an element whose removal destroys the basis?"""
    require_basis(s)
    if x not in s:
        raise NotAMember(f"{x} is not an element of the set")
    return not basis_report(s.remove_finite((x,))).is_basis


def essential_elements(s: PeriodicSet) -> tuple[int, ...]:
    """All essential elements, in increasing order.

    Only exceptional elements can be essential: removing a tail element
    leaves the rest of its full residue class, so the difference gcd (which
    already divides the modulus) is unchanged.
    """
    require_basis(s)
    return tuple(e for e in s.exceptional
                 if not basis_report(s.remove_finite((e,))).is_basis)
