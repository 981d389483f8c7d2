"""Essential subsets and essentialities of an additive basis.

An *essentiality* of a basis A is a subset P such that A \\ P is not a
basis while A \\ Q is one for every proper subset Q of P; a finite
essentiality is an *essential subset*. For an eventually periodic basis
the essential subsets admit a closed description (proof sketch in
docs/theory.md): they are exactly the inclusion-minimal sets

    P_p = { exceptional e : e not congruent to c_p mod p }

over the primes p dividing the modulus for which the whole tail is
concentrated in a single class c_p mod p. Distinct primes may yield the
same set, in which case they are merged as joint witnesses. This makes
the family finite (at most one candidate per prime divisor of the
modulus) and explicitly computable.

The module also verifies arbitrary (possibly infinite) eventually
periodic essentialities directly from the definition, and materializes
the index-set bookkeeping (J-sets, the anchor's Λ, the closure Ĩ) that
certifies finiteness of the family on concrete inputs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .basis import basis_report, require_basis
from .errors import (EqualElements, IdenticalSubsets, LawViolation, NotAMember,
                     NotASubset)
from .intset import PeriodicSet, difference, is_subset
from .primes import distinct_prime_factors, omega  # noqa: F401  (re-exported)


@dataclass(frozen=True)
class EssentialSubset:
    """A finite essentiality P, with the gcd of the remainder's differences
    (``d_value``) and the primes witnessing the congruence obstruction."""

    members: tuple[int, ...]
    d_value: int
    witness_primes: tuple[int, ...]

    def __contains__(self, x: int) -> bool:
        return x in self.members

    def to_json_dict(self) -> dict:
        return {
            "members": list(self.members),
            "d_value": self.d_value,
            "witness_primes": list(self.witness_primes),
        }


@dataclass(frozen=True)
class EssentialityCheck:
    """Outcome of verifying a candidate essentiality.

    ``failure`` is None when the candidate is an essentiality, otherwise one
    of ``"still-basis"`` (removal leaves a basis), ``"complement-finite"``
    (removal leaves a finite set, so no single element can restore a basis)
    or ``"not-minimal"`` (some member, reported as ``witness``, fails to
    restore a basis when added back).
    """

    holds: bool
    failure: str | None = None
    witness: int | None = None

    def __bool__(self) -> bool:
        return self.holds

    def to_json_dict(self) -> dict:
        return {"essential": self.holds, "failure": self.failure, "witness": self.witness}


@dataclass(frozen=True)
class CoprimalityReport:
    """Certified d-values of two distinct essential subsets: both at least 2
    and coprime. Construction fails loudly otherwise (that would be an
    implementation bug, the underlying statement is a theorem)."""

    members_1: tuple[int, ...]
    members_2: tuple[int, ...]
    d_1: int
    d_2: int

    def to_json_dict(self) -> dict:
        return {
            "members_1": list(self.members_1),
            "members_2": list(self.members_2),
            "d_1": self.d_1,
            "d_2": self.d_2,
            "coprime": True,
        }


@dataclass(frozen=True)
class ProofTrace:
    """Finiteness certificate for the family of essential subsets.

    With the family P_1 .. P_n (1-indexed) and an anchor α, the trace
    materializes J_x = {i : x ∉ P_i} for x in P_α, the set
    ``lambda_set`` = {x in P_α : J_x nonempty}, one chosen index i(x) in
    each J_x, the pair sets J_{x,y} for y in P_{i(x)}, and the closure

        Ĩ = {α} ∪ {i(x)} ∪ ∪_{x,y} J_{x,y}

    which provably equals the full index set. Deterministic stand-ins are
    used for the arbitrary choices: α = 1 and i(x) = min J_x.
    """

    essential_family: tuple[EssentialSubset, ...]
    alpha: int | None
    lambda_set: tuple[int, ...]
    choice: dict[int, int] = field(default_factory=dict)
    j_sets: dict[tuple[int, int], tuple[int, ...]] = field(default_factory=dict)
    i_tilde: tuple[int, ...] = ()

    def to_json_dict(self) -> dict:
        return {
            "essential_family": [p.to_json_dict() for p in self.essential_family],
            "alpha": self.alpha,
            "lambda_set": list(self.lambda_set),
            "choice": {str(x): i for x, i in sorted(self.choice.items())},
            "j_sets": {f"{x},{y}": list(js) for (x, y), js in sorted(self.j_sets.items())},
            "i_tilde": list(self.i_tilde),
        }


def diff_gcd_without(s: PeriodicSet, removed: Iterable[int]) -> int:
    """gcd of all pairwise differences of s minus a finite subset — the
    d-value of the removal. Values >= 2 certify a congruence obstruction."""
    return s.remove_finite(removed).diff_gcd()


def essential_subsets(s: PeriodicSet) -> list[EssentialSubset]:
    """All essential subsets of the basis, ordered by least member then
    lexicographically.

    For each prime p dividing the modulus whose tail residues share a single
    class c mod p, the off-class exceptional elements form the candidate;
    identical candidates from different primes are merged, and only the
    inclusion-minimal candidates are genuine (a strictly smaller candidate
    already destroys the basis, so the larger one is not minimal).
    """
    require_basis(s)
    candidates: dict[tuple[int, ...], set[int]] = {}
    for p in distinct_prime_factors(s.modulus):
        classes = {r % p for r in s.residues}
        if len(classes) != 1:
            continue
        c = classes.pop()
        members = tuple(e for e in s.exceptional if e % p != c)
        if not members:
            raise LawViolation(
                f"prime {p} concentrates the whole basis {s}; diff_gcd should not be 1")
        candidates.setdefault(members, set()).add(p)
    member_sets = {members: set(members) for members in candidates}
    out = []
    for members, primes in candidates.items():
        if any(member_sets[other] < member_sets[members] for other in candidates):
            continue
        d = diff_gcd_without(s, members)
        out.append(EssentialSubset(members, d, tuple(sorted(primes))))
    out.sort(key=lambda es: (es.members[0], es.members))
    return out


def verify_essentiality(s: PeriodicSet, p: PeriodicSet) -> EssentialityCheck:
    """Decide whether the eventually periodic subset ``p`` is an essentiality
    of the basis ``s`` — finite and infinite candidates alike.

    Checks the definition: (a) s \\ p is not a basis, (b) adding back any
    single element of p yields a basis. With d0 the difference gcd and a0
    the least element of s \\ p, adding x back gives gcd(d0, x - a0), so (b)
    for a whole tail class of p reduces to finitely many values of
    x mod d0 — the class's coset under step gcd(modulus of p, d0).
    """
    require_basis(s)
    if not is_subset(p, s):
        raise NotASubset(f"{p} is not a subset of {s}")
    remainder = difference(s, p)
    if remainder.is_finite:
        return EssentialityCheck(False, failure="complement-finite")
    if remainder.diff_gcd() == 1:
        return EssentialityCheck(False, failure="still-basis")
    d0 = remainder.diff_gcd()
    a0 = remainder.min_element()
    for e in p.exceptional:
        if math.gcd(d0, e - a0) != 1:
            return EssentialityCheck(False, failure="not-minimal", witness=e)
    if p.residues:
        step = math.gcd(p.modulus, d0)
        for r in p.residues:
            first = p.threshold + ((r - p.threshold) % p.modulus)
            for k in range(d0 // step):
                value = first + k * p.modulus
                if math.gcd(d0, value - a0) != 1:
                    return EssentialityCheck(False, failure="not-minimal", witness=value)
    return EssentialityCheck(True)


def avoiding_indices(s: PeriodicSet, family: Sequence[EssentialSubset],
                     x: int, y: int) -> tuple[int, ...]:
    """Indices (1-based) of the family members containing neither x nor y.

    For distinct elements of the basis this set has at most omega(|x - y|)
    members: each avoided subset's d-value divides x - y, and the d-values
    are >= 2 and pairwise coprime.
    """
    if x == y:
        raise EqualElements(f"x and y must be distinct, both are {x}")
    for value in (x, y):
        if value not in s:
            raise NotAMember(f"{value} is not an element of the set")
    return tuple(i for i, p in enumerate(family, start=1)
                 if x not in p.members and y not in p.members)


def coprimality_report(s: PeriodicSet, p1: EssentialSubset,
                       p2: EssentialSubset) -> CoprimalityReport:
    """Recompute and certify the d-values of two distinct essential subsets:
    both obstructed (>= 2) and coprime. Raises LawViolation on any failure —
    the statement is a theorem, so a violation is an implementation bug."""
    if p1.members == p2.members:
        raise IdenticalSubsets(f"subsets are identical: {p1.members}")
    d1 = diff_gcd_without(s, p1.members)
    d2 = diff_gcd_without(s, p2.members)
    if d1 != p1.d_value or d2 != p2.d_value:
        raise LawViolation(
            f"stored d-values {p1.d_value},{p2.d_value} disagree with recomputed {d1},{d2}")
    if d1 < 2 or d2 < 2:
        raise LawViolation(f"essential subset with d-value < 2: {d1}, {d2}")
    if math.gcd(d1, d2) != 1:
        raise LawViolation(
            f"d-values {d1} and {d2} of distinct essential subsets are not coprime")
    return CoprimalityReport(p1.members, p2.members, d1, d2)


def proof_trace(s: PeriodicSet) -> ProofTrace:
    """Materialize the finiteness certificate for the basis's essential
    subsets and assert its closure property Ĩ = I. With zero or one family
    member the trace is degenerate (empty Λ) and the closure is immediate.
    """
    require_basis(s)
    family = tuple(essential_subsets(s))
    n = len(family)
    if n == 0:
        return ProofTrace(essential_family=(), alpha=None, lambda_set=())
    indices = range(1, n + 1)
    alpha = 1
    anchor = family[0]
    j_single = {x: tuple(i for i in indices if x not in family[i - 1].members)
                for x in anchor.members}
    lambda_set = tuple(x for x in anchor.members if j_single[x])
    choice = {x: min(j_single[x]) for x in lambda_set}
    j_sets: dict[tuple[int, int], tuple[int, ...]] = {}
    closure = {alpha} | set(choice.values())
    for x in lambda_set:
        for y in family[choice[x] - 1].members:
            js = avoiding_indices(s, family, x, y)
            j_sets[(x, y)] = js
            closure.update(js)
    i_tilde = tuple(sorted(closure))
    if i_tilde != tuple(indices):
        raise LawViolation(
            f"trace closure {i_tilde} does not cover every index of {n} subsets for {s}")
    return ProofTrace(essential_family=family, alpha=alpha, lambda_set=lambda_set,
                      choice=choice, j_sets=j_sets, i_tilde=i_tilde)
