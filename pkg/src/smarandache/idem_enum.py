"""Enumeration of the idempotents of Z2[C_n].

For odd n squaring permutes exponents by doubling, so an element is
idempotent exactly when its support is a union of 2-cyclotomic cosets.  For
n = 2^a * m every idempotent lives in the subring spanned by the subgroup of
order m, which is the image of Z2[C_m] under g -> g^(2^a).
"""

from __future__ import annotations

from itertools import combinations

from .gf2_ring import Gf2Element, is_idempotent, make, square
from .numtheory import cyclotomic_cosets, odd_part

BRUTE_FORCE_CAP = 20
CENSUS_CAP = 1 << 20


class CensusTooLarge(ValueError):
    pass


def canonical(elements) -> list[Gf2Element]:
    return sorted(elements, key=Gf2Element.sort_key)


def brute_force_idempotents(n: int) -> list[Gf2Element]:
    """Scan all 2^n elements; results in ascending bitset order."""
    if n > BRUTE_FORCE_CAP:
        raise CensusTooLarge(f"brute force is capped at n = {BRUTE_FORCE_CAP}, got {n}")
    out = []
    for bits in range(1 << n):
        a = Gf2Element(n, bits)
        if square(a) == a:
            out.append(a)
    return out


def coset_idempotents(n: int) -> list[Gf2Element]:
    if n % 2 == 0:
        raise ValueError(f"coset_idempotents needs odd n, got {n}")
    cosets = cyclotomic_cosets(n)
    if (1 << len(cosets)) > CENSUS_CAP:
        raise CensusTooLarge(
            f"{len(cosets)} cosets mod {n} give more than {CENSUS_CAP} idempotents"
        )
    masks = [make(n, c.members).bits for c in cosets]
    out = []
    for r in range(len(masks) + 1):
        for combo in combinations(masks, r):
            bits = 0
            for b in combo:
                bits |= b
            out.append(Gf2Element(n, bits))
    return canonical(out)


def lift_to_even(e: Gf2Element, n: int) -> Gf2Element:
    """Embed an idempotent of Z2[C_m] into Z2[C_n] via exponent scaling by 2^a."""
    a, m = odd_part(n)
    if e.modulus != m:
        raise ValueError(f"element lives mod {e.modulus}, but the odd part of {n} is {m}")
    if not is_idempotent(e):
        raise ValueError("only idempotents are lifted")
    return make(n, ((x << a) % n for x in e.exponents()))


def hensel_lift(e: Gf2Element, n: int, max_steps: int | None = None) -> Gf2Element:
    """Lift by squaring a preimage until it stops moving.

    The preimage takes the exponents of ``e`` verbatim as residues mod n.
    Squaring is the identity on idempotents and each squaring moves the
    element further into the odd-order subgroup, so this terminates after
    at most a + (orbit length) steps.
    """
    a, m = odd_part(n)
    if e.modulus != m:
        raise ValueError(f"element lives mod {e.modulus}, but the odd part of {n} is {m}")
    x = make(n, e.exponents())
    steps = max_steps if max_steps is not None else n + a + 1
    for _ in range(steps):
        y = square(x)
        if y == x:
            return x
        x = y
    raise RuntimeError("squaring iteration did not reach a fixed point")


def project_to_odd(x: Gf2Element) -> Gf2Element:
    """Ring surjection Z2[C_n] -> Z2[C_m], g -> h (exponents mod the odd part)."""
    _, m = odd_part(x.modulus)
    return make(m, x.exponents())


def enumerate_idempotents(n: int) -> list[Gf2Element]:
    """All idempotents of Z2[C_n] in canonical order."""
    a, m = odd_part(n)
    base = coset_idempotents(m)
    if a == 0:
        return base
    return canonical(lift_to_even(e, n) for e in base)


def nontrivial(elements) -> list[Gf2Element]:
    return [e for e in elements if not (e.is_zero() or e.is_one())]
