"""Small exact prime utilities (trial division; desk-scale inputs)."""

from .errors import InvalidInput


def distinct_prime_factors(n: int) -> list[int]:
    """Distinct prime divisors of ``|n|`` in increasing order. Empty for n in {-1, 0, 1}."""
    n = abs(n)
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out.append(n)
    return out


def omega(n: int) -> int:
    """Number of distinct prime factors of n (n >= 1). omega(1) == 0."""
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise InvalidInput(f"omega requires a positive integer, got {n!r}")
    return len(distinct_prime_factors(n))


def first_primes(k: int) -> list[int]:
    """The first k primes."""
    out = []
    n = 2
    while len(out) < k:
        if all(n % p for p in out):
            out.append(n)
        n += 1
    return out


def divisors(n: int) -> list[int]:
    """All positive divisors of n >= 1, increasing."""
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
    return small + large[::-1]
