"""Primality, Mersenne primes, multiplicative orders and 2-cyclotomic cosets."""

from __future__ import annotations

import math
from dataclasses import dataclass

# Deterministic Miller-Rabin bases for n < 3.3e24, which covers 64-bit inputs.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
_MAX_PRIME_INPUT = 1 << 64


@dataclass(frozen=True)
class MersenneWitness:
    k: int
    p: int

    def __post_init__(self):
        if self.p != (1 << self.k) - 1:
            raise ValueError(f"{self.p} != 2^{self.k} - 1")


@dataclass(frozen=True)
class CycCoset:
    """A doubling orbit modulo ``modulus``.

    ``members`` is closed under doubling.  ``generators`` are the residues
    whose orbit this is; for plain cosets they equal the members, for the
    odd-only classes they are the odd residues l whose orbit
    {2^j * l mod m : j >= 1} equals ``members``.  ``leader`` is the smallest
    generator.
    """

    modulus: int
    members: frozenset[int]
    leader: int
    generators: frozenset[int]

    def __len__(self):
        return len(self.members)

    def sorted_members(self) -> list[int]:
        return sorted(self.members)


def is_prime(u: int) -> bool:
    if u < 0:
        raise ValueError("is_prime expects a nonnegative integer")
    if u >= _MAX_PRIME_INPUT:
        raise ValueError("inputs beyond 64 bits are not supported")
    if u < 2:
        return False
    for q in _MR_BASES:
        if u % q == 0:
            return u == q
    d, s = u - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, u)
        if x in (1, u - 1):
            continue
        for _ in range(s - 1):
            x = x * x % u
            if x == u - 1:
                break
        else:
            return False
    return True


def trial_division_is_prime(u: int) -> bool:
    """Slow reference primality test."""
    if u < 2:
        return False
    for d in range(2, math.isqrt(u) + 1):
        if u % d == 0:
            return False
    return True


def lucas_lehmer(k: int) -> bool:
    """True iff 2^k - 1 is prime."""
    if k < 2:
        raise ValueError("lucas_lehmer needs k >= 2")
    if k == 2:
        return True
    if not is_prime(k):
        # 2^k - 1 is composite whenever k is composite
        return False
    mp = (1 << k) - 1
    s = 4
    for _ in range(k - 2):
        s = (s * s - 2) % mp
    return s == 0


def mersenne_exponent(p: int) -> MersenneWitness | None:
    if p < 3 or (p + 1) & p:
        return None
    k = (p + 1).bit_length() - 1
    if not is_prime(k) or not lucas_lehmer(k):
        return None
    return MersenneWitness(k=k, p=p)


def fermat_divisibility(k: int) -> bool:
    """k | 2^k - 2 for prime k (Fermat's little theorem)."""
    if not is_prime(k):
        raise ValueError(f"{k} is not prime")
    if pow(2, k, k) != 2 % k:
        raise AssertionError(f"2^{k} is not 2 mod {k}")
    return ((1 << k) - 2) % k == 0


def mult_order(a: int, m: int) -> int:
    if m < 1:
        raise ValueError("modulus must be positive")
    if math.gcd(a, m) != 1:
        raise ValueError(f"gcd({a}, {m}) != 1")
    if m == 1:
        return 1
    a %= m
    x, d = a, 1
    while x != 1:
        x = x * a % m
        d += 1
    return d


def doubling_orbit(x: int, m: int) -> frozenset[int]:
    """Forward closure {x * 2^j mod m : j >= 0}."""
    seen = set()
    x %= m
    while x not in seen:
        seen.add(x)
        x = 2 * x % m
    return frozenset(seen)


def cyclotomic_cosets(m: int, odd_only: bool = False) -> list[CycCoset]:
    """Partition of residues mod m into doubling orbits, sorted by leader.

    For odd m doubling is a permutation and the orbits are the usual
    2-cyclotomic cosets.  For even m the forward orbits can overlap, so
    residues are grouped by the cycle they fall into.

    With ``odd_only`` (meaningful for even m) the odd residues l are grouped
    by their even orbit {2^j * l mod m : j >= 1}; residues whose orbit is
    {0} are dropped.  For m = 2p with p a Mersenne prime this gives the
    index classes of the basic S-idempotents.
    """
    if m < 1:
        raise ValueError("modulus must be >= 1")
    if odd_only and m % 2 == 0:
        classes: dict[frozenset[int], list[int]] = {}
        for l in range(1, m, 2):
            orbit = doubling_orbit(2 * l, m)
            if orbit == frozenset({0}):
                continue
            classes.setdefault(orbit, []).append(l)
        out = [
            CycCoset(m, orbit, min(gens), frozenset(gens))
            for orbit, gens in classes.items()
        ]
        return sorted(out, key=lambda c: c.leader)

    # group residues by the periodic part of their forward orbit
    groups: dict[frozenset[int], list[int]] = {}
    for x in range(m):
        orbit = doubling_orbit(x, m)
        # periodic part: elements y of the orbit that return to themselves
        cycle = frozenset(y for y in orbit if y in doubling_orbit(2 * y % m, m))
        groups.setdefault(cycle, []).append(x)
    out = []
    for gens in groups.values():
        members = frozenset(gens)
        out.append(CycCoset(m, members, min(gens), members))
    return sorted(out, key=lambda c: c.leader)


def odd_part(n: int) -> tuple[int, int]:
    """Return (a, m) with n = 2^a * m, m odd."""
    if n < 1:
        raise ValueError("n must be >= 1")
    a = (n & -n).bit_length() - 1
    return a, n >> a
