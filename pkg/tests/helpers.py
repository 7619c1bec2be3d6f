"""Independent oracles the tests check the package against.

Everything here is deliberately naive: trial division, exhaustive subset
enumeration, dictionary-completion quadruple search.  Nothing is shared with
the implementations under test beyond the canonical output ordering, which
is part of the public contract being checked.
"""

from __future__ import annotations

import itertools


def trial_is_prime(n: int) -> bool:
    """Primality by trial division; fine up to ~1e13 in a test."""
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def trial_factor(n: int) -> list[int]:
    """Prime factors of n >= 1 with multiplicity, ascending."""
    out: list[int] = []
    m = n
    d = 2
    while d * d <= m:
        while m % d == 0:
            out.append(d)
            m //= d
        d += 1 if d == 2 else 2
    if m > 1:
        out.append(m)
    return out


def exhaustive_zero_subsum(values) -> bool:
    """Any proper nonempty subset summing to zero, over all 2^n - 2 subsets."""
    n = len(values)
    for size in range(1, n):
        for combo in itertools.combinations(range(n), size):
            if sum(values[i] for i in combo) == 0:
                return True
    return False


def canonical_signed(values) -> list[int]:
    """The signed array (+v, -v for each v) in the output order: |w| desc, w desc."""
    return sorted(
        [v for v in values] + [-v for v in values],
        key=lambda w: (-abs(w), -w),
    )


def quadruples_by_completion(values) -> list[tuple[int, int, int, int]]:
    """All canonical subsum-free vanishing quadruples over +-values.

    Three nested index loops over the signed array plus a dictionary lookup
    for the forced fourth element (which must sit at an index >= the third,
    so each sorted quadruple appears exactly once).
    """
    w = canonical_signed(values)
    m = len(w)
    pos = {v: i for i, v in enumerate(w)}
    out = []
    for a in range(m):
        wa = w[a]
        if wa <= 0:
            continue
        for b in range(a, m):
            wab = wa + w[b]
            for c in range(b, m):
                need = -(wab + w[c])
                d = pos.get(need)
                if d is None or d < c:
                    continue
                quad = (wa, w[b], w[c], need)
                if exhaustive_zero_subsum(quad):
                    continue
                out.append(quad)
    out.sort()
    return out


def quadruples_by_enumeration(values) -> list[tuple[int, int, int, int]]:
    """Same result by literally walking every 4-multiset of signed values."""
    out = []
    for quad in itertools.combinations_with_replacement(canonical_signed(values), 4):
        if quad[0] <= 0 or sum(quad) != 0:
            continue
        if exhaustive_zero_subsum(quad):
            continue
        out.append(quad)
    out.sort()
    return out


def products_over(primes, bound: int) -> list[int]:
    """All products prod(p**e) with every exponent in 0..bound, ascending."""
    vals = [1]
    for p in primes:
        vals = [v * p**e for v in vals for e in range(bound + 1)]
    return sorted(vals)


def relation_count_oracle(primes, bound: int) -> int:
    """Number of canonical relations over the primes at this exponent bound."""
    return len(quadruples_by_completion(products_over(primes, bound)))
