"""Eventually periodic integer sets in canonical form.

A :class:`PeriodicSet` describes the set

    exceptional ∪ { n >= threshold : n mod modulus in residues }

i.e. a finite "exceptional" part plus an upward-infinite periodic tail.
Every set handled by this package (bases, their subsets, complements of
removals) has such a description, and each set has exactly one *canonical*
description, so set equality is plain field-by-field equality:

* the modulus is the minimal eventual period,
* the threshold is the least element of the tail (when there is a tail),
  and cannot be pushed lower without changing the set,
* the exceptional part is disjoint from the tail,
* a set with no tail is stored with modulus 1, no residues, threshold 0.

Construct values through :func:`canonicalize` (or the parsing helpers);
the dataclass constructor accepts only already-canonical fields and
raises :class:`~addbasis.errors.InvalidDescription` otherwise.
"""

from __future__ import annotations

import json
import math
import re
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable

from .errors import InvalidDescription, InvalidRange, NotASubset, ParseError
from .primes import divisors

_INT_RE = re.compile(r"-?\d+")


def _as_int(value, what: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise InvalidDescription(f"{what} must be an integer, got {value!r}")
    return value


@dataclass(frozen=True)
class PeriodicSet:
    exceptional: tuple[int, ...]
    modulus: int
    residues: tuple[int, ...]
    threshold: int

    def __post_init__(self):
        _check_canonical(self)

    # -- cached lookup structures (do not affect equality/hash) ----------

    @cached_property
    def _exc_set(self) -> frozenset[int]:
        return frozenset(self.exceptional)

    @cached_property
    def _res_set(self) -> frozenset[int]:
        return frozenset(self.residues)

    # -- basic queries ----------------------------------------------------

    @property
    def is_finite(self) -> bool:
        return not self.residues

    @property
    def is_empty(self) -> bool:
        return not self.residues and not self.exceptional

    def __contains__(self, n: int) -> bool:
        return self.contains(n)

    def contains(self, n: int) -> bool:
        if n in self._exc_set:
            return True
        return bool(self.residues) and n >= self.threshold and n % self.modulus in self._res_set

    def min_element(self) -> int | None:
        """Least element, or None for the empty set."""
        if self.exceptional:
            lo = self.exceptional[0]
            return min(lo, self.threshold) if self.residues else lo
        return self.threshold if self.residues else None

    def elements(self, lo: int, hi: int) -> list[int]:
        """Sorted elements of the set in [lo, hi)."""
        if lo > hi:
            raise InvalidRange(f"lo={lo} exceeds hi={hi}")
        out = [e for e in self.exceptional if lo <= e < hi]
        if self.residues:
            start = max(self.threshold, lo)
            for r in self.residues:
                first = start + ((r - start) % self.modulus)
                out.extend(range(first, hi, self.modulus))
        out.sort()
        return out

    # -- derived sets -----------------------------------------------------

    def remove_finite(self, removed: Iterable[int]) -> "PeriodicSet":
        """Canonical description of this set minus a finite subset.

        Raises NotASubset when some element of ``removed`` is not a member.
        Tail members of ``removed`` are handled by raising the threshold past
        the largest one and keeping the displaced tail survivors as
        exceptional elements; canonicalization then re-normalizes.
        """
        removed = {_as_int(x, "removed element") for x in removed}
        for x in sorted(removed):
            if x not in self:
                raise NotASubset(f"{x} is not an element of the set")
        exc = set(self.exceptional) - removed
        if not self.residues:
            return canonicalize(exc, 1, (), 0)
        tail_removed = {x for x in removed if x >= self.threshold and x % self.modulus in self._res_set}
        threshold = self.threshold
        if tail_removed:
            threshold = max(tail_removed) + 1
            survivors = set(self.elements(self.threshold, threshold)) - removed
            exc |= {x for x in survivors if x not in self._exc_set}
        return canonicalize(exc, self.modulus, self.residues, threshold)

    def insert(self, x: int) -> "PeriodicSet":
        """Canonical description of this set plus one element; no-op for members."""
        x = _as_int(x, "inserted element")
        if x in self:
            return self
        return canonicalize(set(self.exceptional) | {x}, self.modulus, self.residues, self.threshold)

    def diff_gcd(self) -> int:
        """gcd of all pairwise differences of the set; 0 when it has < 2 elements.

        Exact via a finite generator set: with a0 = min, every element is
        a0 + (e - a0) for e exceptional, or (least tail element of its class)
        + k*modulus, so gcd over {e - a0} ∪ {class representative - a0} ∪
        {modulus} equals the gcd over all differences.
        """
        if not self.residues:
            if len(self.exceptional) < 2:
                return 0
            a0 = self.exceptional[0]
            g = 0
            for e in self.exceptional:
                g = math.gcd(g, e - a0)
            return g
        a0 = self.min_element()
        g = self.modulus
        for e in self.exceptional:
            g = math.gcd(g, e - a0)
        for r in self.residues:
            rep = self.threshold + ((r - self.threshold) % self.modulus)
            g = math.gcd(g, rep - a0)
        return g

    # -- encodings ----------------------------------------------------------

    def to_text(self) -> str:
        exc = ",".join(str(e) for e in self.exceptional)
        res = ",".join(str(r) for r in self.residues)
        return f"E={{{exc}}}; m={self.modulus}; R={{{res}}}; N0={self.threshold}"

    def to_json_dict(self) -> dict:
        return {
            "exceptional": list(self.exceptional),
            "modulus": self.modulus,
            "residues": list(self.residues),
            "threshold": self.threshold,
        }

    def __str__(self) -> str:
        return self.to_text()


def _minimal_period(modulus: int, residues: frozenset[int]) -> tuple[int, frozenset[int]]:
    for d in divisors(modulus):
        if all((r + d) % modulus in residues for r in residues):
            return d, frozenset(r % d for r in residues)
    raise AssertionError("unreachable: modulus itself is always a period")


def _check_canonical(s: PeriodicSet) -> None:
    if not isinstance(s.exceptional, tuple) or not isinstance(s.residues, tuple):
        raise InvalidDescription("exceptional and residues must be tuples; use canonicalize()")
    _as_int(s.modulus, "modulus")
    _as_int(s.threshold, "threshold")
    for e in s.exceptional:
        _as_int(e, "exceptional element")
    for r in s.residues:
        _as_int(r, "residue")
    if s.modulus < 1:
        raise InvalidDescription(f"modulus must be >= 1, got {s.modulus}")
    if any(r < 0 or r >= s.modulus for r in s.residues):
        raise InvalidDescription("residues out of range [0, modulus)")
    if list(s.residues) != sorted(set(s.residues)):
        raise InvalidDescription("residues must be sorted and distinct")
    if list(s.exceptional) != sorted(set(s.exceptional)):
        raise InvalidDescription("exceptional elements must be sorted and distinct")
    if not s.residues:
        if s.modulus != 1 or s.threshold != 0:
            raise InvalidDescription("a finite set is stored with modulus=1, threshold=0")
        return
    rset = frozenset(s.residues)
    if s.threshold % s.modulus not in rset:
        raise InvalidDescription("threshold must be the least tail element")
    d, _ = _minimal_period(s.modulus, rset)
    if d != s.modulus:
        raise InvalidDescription(f"modulus {s.modulus} is not minimal (period {d})")
    prev = max((s.threshold - 1) - ((s.threshold - 1 - r) % s.modulus) for r in s.residues)
    if prev in set(s.exceptional):
        raise InvalidDescription("threshold is not minimal (previous tail candidate is exceptional)")
    if any(e >= s.threshold and e % s.modulus in rset for e in s.exceptional):
        raise InvalidDescription("exceptional part overlaps the tail")


def canonicalize(exceptional: Iterable[int], modulus: int, residues: Iterable[int],
                 threshold: int) -> PeriodicSet:
    """Unique canonical PeriodicSet denoting the same integer set as the raw
    description. Idempotent; accepts redundant descriptions and normalizes
    them rather than rejecting.
    """
    modulus = _as_int(modulus, "modulus")
    threshold = _as_int(threshold, "threshold")
    if modulus < 1:
        raise InvalidDescription(f"modulus must be >= 1, got {modulus}")
    exc = {_as_int(e, "exceptional element") for e in exceptional}
    res = {_as_int(r, "residue") for r in residues}
    if any(r < 0 or r >= modulus for r in res):
        raise InvalidDescription("residues out of range [0, modulus)")
    if not res:
        return PeriodicSet(tuple(sorted(exc)), 1, (), 0)
    modulus, res = _minimal_period(modulus, frozenset(res))
    # Snap the threshold up to the least actual tail element ...
    t = min(threshold + ((r - threshold) % modulus) for r in res)
    # ... absorb exceptional elements that already lie in the tail ...
    exc = {e for e in exc if not (e >= t and e % modulus in res)}
    # ... and extend the tail downward while its next element is exceptional.
    while True:
        prev = max((t - 1) - ((t - 1 - r) % modulus) for r in res)
        if prev in exc:
            exc.remove(prev)
            t = prev
        else:
            break
    return PeriodicSet(tuple(sorted(exc)), modulus, tuple(sorted(res)), t)


def difference(a: PeriodicSet, b: PeriodicSet) -> PeriodicSet:
    """Canonical description of the set difference a \\ b."""
    if b.is_finite:
        to_remove = [e for e in b.exceptional if e in a]
        return a.remove_finite(to_remove)
    if a.is_finite:
        return canonicalize({e for e in a.exceptional if e not in b}, 1, (), 0)
    period = math.lcm(a.modulus, b.modulus)
    cut = max(a.threshold, b.threshold)
    if a.exceptional:
        cut = max(cut, a.exceptional[-1] + 1)
    if b.exceptional:
        cut = max(cut, b.exceptional[-1] + 1)
    res = {
        rho for rho in range(period)
        if rho % a.modulus in a._res_set and rho % b.modulus not in b._res_set
    }
    low = a.min_element()
    exc = {x for x in a.elements(low, cut) if x not in b}
    return canonicalize(exc, period, res, cut)


def is_subset(small: PeriodicSet, big: PeriodicSet) -> bool:
    """Exact subset test between two eventually periodic sets."""
    if any(e not in big for e in small.exceptional):
        return False
    if not small.residues:
        return True
    if not big.residues:
        return False
    period = math.lcm(small.modulus, big.modulus)
    for rho in range(period):
        if rho % small.modulus in small._res_set and rho % big.modulus not in big._res_set:
            return False
    # Tail elements of `small` below big's threshold must be covered one by one.
    for x in small.elements(small.threshold, max(big.threshold, small.threshold)):
        if x not in big:
            return False
    return True


# -- named sets and parsing ---------------------------------------------------

NATURALS = PeriodicSet((), 1, (0,), 0)
EVENS = PeriodicSet((), 2, (0,), 0)
ODDS = PeriodicSet((), 2, (1,), 1)

_ALIASES = {"naturals": NATURALS, "n": NATURALS, "evens": EVENS, "odds": ODDS}


class _Cursor:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def expect(self, literal: str):
        self.skip_ws()
        if not self.text.startswith(literal, self.pos):
            raise ParseError(f"expected {literal!r}", self.pos)
        self.pos += len(literal)

    def integer(self) -> int:
        self.skip_ws()
        m = _INT_RE.match(self.text, self.pos)
        if not m:
            raise ParseError("expected an integer", self.pos)
        self.pos = m.end()
        return int(m.group())

    def int_set(self) -> list[int]:
        self.expect("{")
        out = []
        self.skip_ws()
        if self.pos < len(self.text) and self.text[self.pos] == "}":
            self.pos += 1
            return out
        out.append(self.integer())
        while True:
            self.skip_ws()
            if self.pos >= len(self.text):
                raise ParseError("unterminated set literal", self.pos)
            ch = self.text[self.pos]
            if ch == ",":
                self.pos += 1
                out.append(self.integer())
            elif ch == "}":
                self.pos += 1
                return out
            else:
                raise ParseError("expected ',' or '}'", self.pos)

    def end(self):
        self.skip_ws()
        if self.pos != len(self.text):
            raise ParseError("trailing input", self.pos)


def parse_text(text: str) -> PeriodicSet:
    """Parse the compact form ``E={1,5}; m=6; R={0}; N0=0``."""
    cur = _Cursor(text)
    cur.expect("E")
    cur.expect("=")
    exc = cur.int_set()
    cur.expect(";")
    cur.expect("m")
    cur.expect("=")
    modulus = cur.integer()
    cur.expect(";")
    cur.expect("R")
    cur.expect("=")
    res = cur.int_set()
    cur.expect(";")
    cur.expect("N0")
    cur.expect("=")
    threshold = cur.integer()
    cur.end()
    return canonicalize(exc, modulus, res, threshold)


def from_json_dict(data: dict) -> PeriodicSet:
    if not isinstance(data, dict):
        raise InvalidDescription(f"expected a JSON object, got {type(data).__name__}")
    missing = {"exceptional", "modulus", "residues", "threshold"} - data.keys()
    if missing:
        raise InvalidDescription(f"missing keys: {sorted(missing)}")
    for key in ("exceptional", "residues"):
        if not isinstance(data[key], (list, tuple)):
            raise InvalidDescription(f"{key!r} must be an array")
    return canonicalize(data["exceptional"], data["modulus"], data["residues"], data["threshold"])


def parse_set(text: str) -> PeriodicSet:
    """Parse either input format (compact text or JSON) plus a few aliases
    (``naturals``, ``evens``, ``odds``); always returns the canonical form.
    """
    stripped = text.strip()
    if not stripped:
        raise ParseError("empty set description", 0)
    alias = _ALIASES.get(stripped.lower())
    if alias is not None:
        return alias
    if stripped.startswith("{") or stripped.startswith("["):
        try:
            data = json.loads(stripped)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON: {exc.msg}", exc.pos) from exc
        return from_json_dict(data)
    return parse_text(stripped)
