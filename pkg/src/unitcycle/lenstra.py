"""Unit-difference cliques and the length-divisibility facts they control.

A clique of size k is a set of ring elements whose pairwise differences are
all units; translation and unit scaling let us pin x1 = 0, x2 = 1, after
which every further element must itself be a unit differing from 1 (and from
the other chosen elements) by a unit.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

from .backends import SearchTooLarge
from .relsearch import resolve_ceiling
from .sring import InversionSet, is_unit


@dataclass(frozen=True)
class CliqueWitness:
    inversion_set: InversionSet
    elements: tuple[Fraction, ...]

    def verify(self) -> bool:
        """Recheck distinctness and every pairwise unit difference."""
        if len(set(self.elements)) != len(self.elements):
            return False
        return all(
            is_unit(b - a, self.inversion_set)
            for a, b in itertools.combinations(self.elements, 2)
        )

    def to_json_dict(self) -> dict:
        return {
            "inversion_set": list(self.inversion_set.primes),
            "elements": [str(x) for x in self.elements],
        }

    @classmethod
    def from_json_dict(cls, d: dict) -> "CliqueWitness":
        return cls(
            InversionSet(tuple(int(p) for p in d["inversion_set"])),
            tuple(Fraction(x) for x in d["elements"]),
        )


def _unit_scan(s: InversionSet, bound: int) -> list[Fraction]:
    """Signed units in the fixed scan order: exponents 0, 1, -1, ...; + before -."""
    comp = [0]
    for e in range(1, bound + 1):
        comp.append(e)
        comp.append(-e)
    out: list[Fraction] = []
    for exps in itertools.product(comp, repeat=len(s)):
        mag = Fraction(1)
        for p, e in zip(s.primes, exps):
            mag *= Fraction(p) ** e
        out.append(mag)
        out.append(-mag)
    return out


def unit_difference_clique(
    s: InversionSet, k: int, bound: int, *, ceiling: int | None = None
) -> CliqueWitness | None:
    """First unit-difference clique of size k with exponents within the bound.

    Normalizes x1 = 0, x2 = 1 and extends in deterministic scan order, so the
    returned witness is minimal for that order.  Returns None when the search
    space is exhausted.
    """
    if k < 2:
        raise ValueError("a clique needs k >= 2")
    if bound < 0:
        raise ValueError("exponent bound must be >= 0")
    base = (Fraction(0), Fraction(1))
    if k == 2:
        return CliqueWitness(s, base)
    candidates = [u for u in _unit_scan(s, bound) if u != 1]
    if math.comb(len(candidates), k - 2) > resolve_ceiling(ceiling):
        raise SearchTooLarge(
            f"C({len(candidates)}, {k - 2}) extensions exceed the configured ceiling"
        )

    def extend(chosen: list[Fraction], start: int) -> tuple[Fraction, ...] | None:
        if len(chosen) == k:
            return tuple(chosen)
        for idx in range(start, len(candidates)):
            c = candidates[idx]
            if any(c == x for x in chosen):
                continue
            if all(is_unit(c - x, s) for x in chosen):
                chosen.append(c)
                hit = extend(chosen, idx + 1)
                if hit is not None:
                    return hit
                chosen.pop()
        return None

    hit = extend(list(base), 0)
    if hit is None:
        return None
    return CliqueWitness(s, hit)


def z2_four_clique_obstruction(bound: int) -> bool:
    """Exhaustive check that Z[1/2] has no 4-clique with exponents in [-bound, bound].

    Order a hypothetical clique x1 > x2 > x3 > x4; the consecutive differences
    are then positive units 2^k1, 2^k2, 2^k3, so the remaining differences are

        x1-x3 = 2^k1 + 2^k2,   x2-x4 = 2^k2 + 2^k3,   x1-x4 = 2^k1 + 2^k2 + 2^k3.

    The obstruction holds when no exponent triple makes all three of those
    units (2^a + 2^b is a unit only for a = b, and then the three-term sum is
    3 * 2^a, never a unit).
    """
    if bound < 0:
        raise ValueError("bound must be >= 0")
    s2 = InversionSet((2,))
    two = Fraction(2)
    rng = range(-bound, bound + 1)
    for k1 in rng:
        a = two**k1
        for k2 in rng:
            b = two**k2
            d13 = a + b
            u13 = is_unit(d13, s2)
            for k3 in rng:
                c = two**k3
                if u13 and is_unit(b + c, s2) and is_unit(a + b + c, s2):
                    return False
    return True


def is_b_smooth(n: int, b: int) -> bool:
    """True iff every prime factor of n is <= b.  Requires n >= 1."""
    if n < 1:
        raise ValueError("smoothness is defined for n >= 1")
    if b < 1:
        raise ValueError("bound must be >= 1")
    m = n
    d = 2
    while d <= b and d * d <= m:
        while m % d == 0:
            m //= d
        d += 1 if d == 2 else 2
    if m == 1:
        return True
    if d * d > m:  # m is prime here
        return m <= b
    return False  # every remaining factor exceeds b


def z2_admissible_cycle_length(k: int) -> bool:
    """Cycle lengths possible over Z[1/2] are exactly the 3-smooth integers."""
    if k < 1:
        raise ValueError("cycle length must be >= 1")
    return is_b_smooth(k, 3)
