"""Deterministic primality testing and next-prime search for big integers.

Miller-Rabin with the first thirteen primes as witnesses is a proof of
primality (not a probabilistic test) for every n below
3 317 044 064 679 887 385 961 981 (Sorenson and Webster, 2015).  Outside that
range we refuse to answer instead of quietly degrading to a probable-prime test.
"""

from __future__ import annotations

from ..errors import PrimeRangeError

WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
CERTIFIED_LIMIT = 3_317_044_064_679_887_385_961_981
# nextPrime inputs must sit comfortably inside the certified range
LOWER_BOUND_LIMIT = 3_300_000_000_000_000_000_000_000


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n >= CERTIFIED_LIMIT:
        raise PrimeRangeError(f"{n} is beyond the certified Miller-Rabin range")
    for w in WITNESSES:
        if n % w == 0:
            return n == w
    d, k = n - 1, 0
    while d % 2 == 0:
        d //= 2
        k += 1
    for a in WITNESSES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(k - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def next_prime(lower_bound: int) -> int:
    """Smallest prime strictly greater than ``lower_bound``."""
    if lower_bound < 1:
        raise ValueError("lower bound must be at least 1")
    if lower_bound >= LOWER_BOUND_LIMIT:
        raise PrimeRangeError(
            f"required bound {lower_bound} exceeds the certified range (< {LOWER_BOUND_LIMIT})"
        )
    if lower_bound < 2:
        return 2
    n = lower_bound + 1 if lower_bound % 2 == 0 else lower_bound + 2
    while not is_prime(n):
        n += 2
    return n


def prime_factors(n: int) -> list[int]:
    """Distinct prime factors by trial division (used for small degrees only)."""
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out
