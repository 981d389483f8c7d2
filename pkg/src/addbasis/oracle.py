"""Brute-force ground truth, kept deliberately independent of the exact
machinery in :mod:`addbasis.basis` and :mod:`addbasis.essentia`.

Everything here works by enumerating actual elements inside a window and
running integer-bitset dynamic programming over h-fold sums. It answers
"what does the sumset really look like up to this bound" and "what do the
essential subsets really look like if we chase the definition", so the
closed-form results elsewhere in the package can be checked against it.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from .errors import EmptySet, InvalidInput, InvalidRange, NotABasis
from .intset import PeriodicSet

# A window is never a proof by itself, but for an eventually periodic set
# every question we ask stabilizes once the window clears the preperiodic
# part by a few multiples of h * modulus; the callers pick windows that do.


@dataclass(frozen=True)
class SumsetWindow:
    """Membership bitmap of the h-fold sumset hS on the half-open window
    [lo, hi): bit (v - lo) of ``bits`` is set iff v is a sum of exactly h
    elements of S."""

    h: int
    lo: int
    hi: int
    bits: int

    def contains(self, value: int) -> bool:
        if not self.lo <= value < self.hi:
            raise InvalidRange(f"{value} outside window [{self.lo}, {self.hi})")
        return bool(self.bits >> (value - self.lo) & 1)

    def covered(self) -> bool:
        """True when every integer in the window is hit."""
        return self.bits == (1 << (self.hi - self.lo)) - 1

    def missing(self) -> list[int]:
        gaps = []
        mask = self.bits
        for v in range(self.lo, self.hi):
            if not mask & 1:
                gaps.append(v)
            mask >>= 1
        return gaps

    def bitmap_hex(self) -> str:
        return f"{self.bits:x}"

    def to_json_dict(self) -> dict:
        return {"h": self.h, "lo": self.lo, "hi": self.hi, "bitmap_hex": self.bitmap_hex()}


def sumset_window(s: PeriodicSet, h: int, lo: int, hi: int) -> SumsetWindow:
    """Compute hS on [lo, hi) by h rounds of shift-or over the elements of S
    that can still matter.

    Only elements in [min_s, hi - (h-1) * min_s) can take part in a sum
    landing below hi, so the pool is finite even though S is not. Layer k
    holds the k-fold sums in [k * min_s, k * min_s + W) with a shared width
    W = hi - h * min_s, which keeps every shift nonnegative.
    """
    if h < 1:
        raise InvalidInput(f"h must be >= 1, got {h}")
    if lo > hi:
        raise InvalidRange(f"empty window: lo={lo} > hi={hi}")
    if s.is_empty:
        raise EmptySet("cannot form sums from the empty set")
    min_s = s.min_element()
    width = hi - h * min_s
    if width <= 0 or lo >= hi:
        return SumsetWindow(h, lo, hi, 0)
    pool = s.elements(min_s, hi - (h - 1) * min_s)
    shifts = [a - min_s for a in pool]
    window_mask = (1 << width) - 1
    layer = 1  # 0-fold sums: just 0, stored relative to offset 0
    for _ in range(h):
        acc = 0
        for d in shifts:
            acc |= layer << d
        layer = acc & window_mask
    # layer now holds h-fold sums relative to offset h * min_s; realign to lo
    rel = lo - h * min_s
    aligned = layer >> rel if rel >= 0 else layer << -rel
    bits = aligned & ((1 << (hi - lo)) - 1)
    return SumsetWindow(h, lo, hi, bits)


def decompose(s: PeriodicSet, h: int, value: int) -> list[int] | None:
    """An explicit h-element multiset of S summing to ``value``, or None.
    Walks the DP layers back greedily; exponential only in pathological
    inputs since each step fixes one summand."""
    if h < 1:
        raise InvalidInput(f"h must be >= 1, got {h}")
    if s.is_empty:
        raise EmptySet("cannot form sums from the empty set")
    min_s = s.min_element()
    if value < h * min_s:
        return None
    pool = s.elements(min_s, value - (h - 1) * min_s + 1)

    def walk(remaining: int, k: int, floor_idx: int) -> list[int] | None:
        if k == 0:
            return [] if remaining == 0 else None
        for idx in range(floor_idx, len(pool)):
            a = pool[idx]
            rest = remaining - a
            if rest < (k - 1) * a:
                break  # pool is sorted; later elements only overshoot
            picked = walk(rest, k - 1, idx)
            if picked is not None:
                return [a] + picked
        return None

    return walk(value, h, 0)


@dataclass(frozen=True)
class EmpiricalOrder:
    """Result of probing orders 1..h_max on a window: ``order`` is the least
    h whose sumset covers the whole window, or None if none does."""

    order: int | None
    h_max: int
    lo: int
    hi: int
    first_gap: int | None = None

    def to_json_dict(self) -> dict:
        return {"order": self.order, "h_max": self.h_max, "lo": self.lo,
                "hi": self.hi, "first_gap": self.first_gap}


def empirical_order(s: PeriodicSet, h_max: int, lo: int, hi: int) -> EmpiricalOrder:
    """Least h <= h_max with hS covering [lo, hi), found by direct sumset
    computation. The window must span at least 3 * modulus * h_max so a
    covered window is convincing rather than a small-sample accident."""
    if h_max < 1:
        raise InvalidInput(f"h_max must be >= 1, got {h_max}")
    if hi - lo < 3 * s.modulus * h_max:
        raise InvalidRange(
            f"window [{lo}, {hi}) too narrow for h_max={h_max} and modulus"
            f" {s.modulus}; need span >= {3 * s.modulus * h_max}")
    first_gap = None
    for h in range(1, h_max + 1):
        win = sumset_window(s, h, lo, hi)
        if win.covered():
            return EmpiricalOrder(h, h_max, lo, hi)
        if h == h_max:
            first_gap = win.missing()[0]
    return EmpiricalOrder(None, h_max, lo, hi, first_gap=first_gap)


def _window_gcd(s: PeriodicSet, removed: frozenset[int]) -> int:
    """Difference gcd of (s minus a few elements), recomputed from raw
    elements in a window wide enough to include every removed value, every
    exceptional value, and two further full periods — enough that the window
    gcd equals the true gcd. Independent of PeriodicSet.diff_gcd on purpose."""
    lo = min((*s.exceptional, s.threshold)) if s.exceptional else s.threshold
    top = max((*s.exceptional, *removed, s.threshold)) if (s.exceptional or removed) \
        else s.threshold
    hi = top + 2 * s.modulus + 1
    elems = [x for x in s.elements(lo, hi) if x not in removed]
    if len(elems) <= 1:
        return 0
    base = elems[0]
    g = 0
    for x in elems[1:]:
        g = gcd_fold(g, x - base)
    return g


def gcd_fold(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return abs(a)


def brute_essential_subsets(s: PeriodicSet,
                            pool: Iterable[int] | None = None) -> list[tuple[int, ...]]:
    """Essential subsets found by chasing the definition: try every finite
    subset of the pool in increasing size, keep P when removing it kills the
    basis and removing any proper part does not.

    The pool must cover the exceptional part (essential subsets never reach
    into the tail); by default it also takes the first period of the tail so
    the search can watch tail removals come back non-minimal. Supersets of
    an already-found subset are skipped: removing more than a minimal
    obstruction is never minimal again.
    """
    if s.is_finite or _window_gcd(s, frozenset()) != 1:
        raise NotABasis(f"not a basis: {s}")
    if pool is None:
        lo = min((*s.exceptional, s.threshold)) if s.exceptional else s.threshold
        candidates = s.elements(lo, s.threshold + s.modulus)
    else:
        candidates = sorted(set(pool))
        missing = [e for e in s.exceptional if e not in set(candidates)]
        if missing:
            raise InvalidInput(
                f"pool must cover the exceptional part; missing {missing}")
        stray = [x for x in candidates if x not in s]
        if stray:
            raise InvalidInput(f"pool contains non-members: {stray}")
    found: list[tuple[int, ...]] = []
    found_sets: list[frozenset[int]] = []
    for size in range(1, len(candidates) + 1):
        for combo in combinations(candidates, size):
            combo_set = frozenset(combo)
            if any(prev <= combo_set for prev in found_sets):
                continue
            if _window_gcd(s, combo_set) == 1:
                continue  # removal leaves a basis
            # removal of the full set obstructs; check every proper removal
            if all(_window_gcd(s, combo_set - {x}) == 1 for x in combo):
                found.append(tuple(sorted(combo)))
                found_sets.append(combo_set)
    found.sort(key=lambda t: (t[0], t))
    return found


def raw_window(s: PeriodicSet, lo: int, hi: int) -> list[int]:
    """Elements of S in [lo, hi) straight from the description — a reading
    aid for oracle output, and a second pair of eyes on elements()."""
    out = []
    exc = set(s.exceptional)
    res = set(s.residues)
    for v in range(lo, hi):
        if v in exc or (res and v >= s.threshold and v % s.modulus in res):
            out.append(v)
    return out
