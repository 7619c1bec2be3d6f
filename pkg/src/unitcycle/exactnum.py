"""Exact integer helpers: primality, next-prime, factoring over fixed prime sets.

Everything here runs on Python's unbounded integers. No floating point is
used anywhere; comparisons that look analytic elsewhere in the package are
reduced to the integer predicates implemented in this module.
"""

from __future__ import annotations

import random
from typing import Sequence

# Below this bound the fixed witness set is a proven deterministic test.
_DETERMINISTIC_BOUND = 3_317_044_064_679_887_385_961_981
_DETERMINISTIC_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

# Above the bound: 64 strong-pseudoprime rounds, error probability < 2**-128.
_RANDOM_ROUNDS = 64

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47)


def _strong_round(n: int, d: int, s: int, a: int) -> bool:
    """One Miller-Rabin round with base a; True means n is still possibly prime."""
    x = pow(a, d, n)
    if x == 1 or x == n - 1:
        return True
    for _ in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return True
    return False


def is_probable_prime(n: int) -> bool:
    """Primality test, deterministic for n below 3.3e24.

    Larger inputs get 64 rounds with bases drawn from an RNG seeded by n,
    so repeated calls agree.
    """
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n == p:
            return True
        if n % p == 0:
            return False
    d = n - 1
    s = (d & -d).bit_length() - 1
    d >>= s
    if n < _DETERMINISTIC_BOUND:
        witnesses: Sequence[int] = _DETERMINISTIC_WITNESSES
    else:
        rng = random.Random(n)
        witnesses = [rng.randrange(2, n - 1) for _ in range(_RANDOM_ROUNDS)]
    return all(_strong_round(n, d, s, a) for a in witnesses)


def next_prime(n: int) -> int:
    """Smallest prime strictly greater than n.  Requires n >= 1."""
    if n < 1:
        raise ValueError("next_prime requires n >= 1")
    if n == 1:
        return 2
    c = n + 1 + (n & 1)  # first odd candidate above n
    while not is_probable_prime(c):
        c += 2
    return c


def first_primes(count: int) -> tuple[int, ...]:
    """The first `count` primes, in increasing order."""
    if count < 0:
        raise ValueError("count must be nonnegative")
    out: list[int] = []
    p = 1
    while len(out) < count:
        p = next_prime(p)
        out.append(p)
    return tuple(out)


def factor_over(n: int, primes: Sequence[int]) -> tuple[list[int], int]:
    """Split n as sign * prod(primes[i]**e[i]) * cofactor.

    The cofactor is coprime to every listed prime; the sign is dropped.
    The primes must be distinct. n == 0 is rejected.
    """
    if n == 0:
        raise ValueError("cannot factor 0")
    if len(set(primes)) != len(primes):
        raise ValueError("primes must be distinct")
    m = abs(n)
    exps: list[int] = []
    for p in primes:
        e = 0
        while m % p == 0:
            m //= p
            e += 1
        exps.append(e)
    return exps, m


def radical(values: Sequence[int], primes: Sequence[int]) -> int:
    """Product of the listed primes that divide at least one of the values.

    Every value must factor completely over `primes`: a nontrivial cofactor
    would need general-purpose factorization, which this package avoids.
    """
    used: set[int] = set()
    for v in values:
        exps, cof = factor_over(v, primes)
        if cof != 1:
            raise ValueError(
                f"{v} has a prime factor outside {list(primes)} (cofactor {cof})"
            )
        used.update(p for p, e in zip(primes, exps) if e > 0)
    out = 1
    for p in used:
        out *= p
    return out


def smallest_prime_factor(n: int) -> int:
    """Smallest prime factor of n >= 2, by trial division."""
    if n < 2:
        raise ValueError("need n >= 2")
    if n % 2 == 0:
        return 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return d
        d += 2
    return n
