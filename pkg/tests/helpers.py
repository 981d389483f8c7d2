"""Independent re-implementations used as test oracles.

Nothing in here calls the package's clever paths: membership is chased from
the raw description, gcds are folded over explicitly enumerated windows,
sumsets use plain Python sets, and essential subsets are found by trying
every removal. Slow and boring on purpose — when these agree with the
package, the closed forms earned it.
"""

from __future__ import annotations

from itertools import combinations
from math import gcd


def raw_contains(exceptional, modulus, residues, threshold, n) -> bool:
    if n in set(exceptional):
        return True
    return bool(residues) and n >= threshold and (n % modulus) in set(residues)


def raw_elements(exceptional, modulus, residues, threshold, lo, hi) -> list[int]:
    return [n for n in range(lo, hi)
            if raw_contains(exceptional, modulus, residues, threshold, n)]


def raw_min(exceptional, modulus, residues, threshold):
    candidates = list(exceptional)
    if residues:
        candidates.append(min(threshold + ((r - threshold) % modulus) for r in residues))
    return min(candidates) if candidates else None


def gcd_over(values) -> int:
    g = 0
    for v in values:
        g = gcd(g, v)
    return g


def window_diff_gcd(elements) -> int:
    """gcd of all pairwise differences of an explicit element list; 0 when
    fewer than two elements."""
    if len(elements) < 2:
        return 0
    base = elements[0]
    return gcd_over(x - base for x in elements[1:])


def brute_diff_gcd(s, span_factor: int = 4) -> int:
    """Difference gcd of a PeriodicSet recomputed from an enumerated window
    of width span_factor * m * (|E| + |R| + 2) starting at the minimum.
    Exact whenever the window holds the whole exceptional part and a full
    period of the tail."""
    lo = raw_min(s.exceptional, s.modulus, s.residues, s.threshold)
    if lo is None:
        return 0
    span = span_factor * s.modulus * (len(s.exceptional) + len(s.residues) + 2)
    hi = max(lo + span,
             max((*s.exceptional, s.threshold)) + 2 * s.modulus + 1)
    elems = raw_elements(s.exceptional, s.modulus, s.residues, s.threshold, lo, hi)
    return window_diff_gcd(elems)


def slow_sumset(elements, h: int, lo: int, hi: int) -> set[int]:
    """h-fold sums of an explicit element list, windowed, by set arithmetic.
    Partial sums are pruned only when even all-minimal remaining summands
    cannot bring them back under hi (matters when elements go negative)."""
    floor = min(elements)
    sums = {0}
    for t in range(1, h + 1):
        cap = hi - (h - t) * floor
        sums = {a + b for a in sums for b in elements if a + b < cap}
    return {v for v in sums if lo <= v < hi}


def definition_essential_subsets(s, pool) -> list[tuple[int, ...]]:
    """Essential subsets by the definition, all machinery independent:
    remove every subset of the pool by value, recompute the window gcd, keep
    the inclusion-minimal removals that break gcd 1."""
    pool = sorted(pool)
    lo = raw_min(s.exceptional, s.modulus, s.residues, s.threshold)
    hi = max((*s.exceptional, *pool, s.threshold)) + 2 * s.modulus + 1
    all_elems = raw_elements(s.exceptional, s.modulus, s.residues, s.threshold, lo, hi)

    def kills(removed: frozenset) -> bool:
        kept = [x for x in all_elems if x not in removed]
        return window_diff_gcd(kept) != 1

    found = []
    for size in range(1, len(pool) + 1):
        for combo in combinations(pool, size):
            cset = frozenset(combo)
            if any(set(prev) <= cset for prev in found):
                continue
            if kills(cset) and all(not kills(cset - {x}) for x in cset):
                found.append(tuple(sorted(combo)))
    found.sort(key=lambda t: (t[0], t))
    return found
