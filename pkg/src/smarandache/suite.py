"""Named end-to-end checks behind ``smarandache verify --suite paper``.

Each check returns a :class:`CheckResult`; ``run_suite`` runs them all in a
fixed order.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Callable

from . import constructions as cons
from .exact_algebra import (
    AbGroup,
    AlgElement,
    PrimeField,
    RationalField,
    all_idempotents,
    co_idempotents,
    idempotent_from_mask,
    negation_witness,
    subgroup_idempotent_pair,
)
from .exact_algebra.algebra import char0_domain
from .gf2_ring import Gf2Element, make, mul, square
from .idem_enum import brute_force_idempotents, enumerate_idempotents, hensel_lift, lift_to_even, nontrivial
from .numtheory import fermat_divisibility, is_prime, lucas_lehmer, odd_part, trial_division_is_prime
from .s_classify import Method, check_witness, classify, square_roots, transfer_complement, verify_witness


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str = ""
    seconds: float = 0.0
    limit: float = 0.0

    @property
    def within_time(self) -> bool:
        return self.seconds <= self.limit


def _census(p: int, exhaustive: bool = False) -> tuple[bool, str]:
    n = 2 * p
    report = classify(n)
    expected = cons.s_count_formula(p)
    ok = report.nontrivial == expected and report.s_count == expected
    ok &= all(verify_witness(e.idempotent, e.witness) for e in report.entries if e.is_s)
    if exhaustive:
        for e in report.entries:
            roots = square_roots(e.idempotent)
            ok &= any(check_witness(e.idempotent, a) is not None for a in roots)
    census = cons.verify_census(p)
    ok &= census.ok
    detail = f"n={n}: {report.nontrivial} nontrivial, {report.s_count} S, formula {expected}"
    if census.failure:
        detail += f"; {census.failure}"
    return ok, detail


def check_census_p3():
    return _census(3)


def check_census_p7():
    return _census(7, exhaustive=True)


def check_census_p31():
    ok, detail = _census(31)
    report = classify(62)
    ok &= all(e.witness.method is Method.CONSTRUCTED for e in report.entries if e.is_s)
    return ok, detail


def check_example_p31_l1():
    alpha, beta, _ = cons.basic_pair(31, 1)
    ok = alpha == make(62, [2, 4, 8, 16, 32]) and beta == make(62, [1, 33, 35, 39, 47])
    ok &= square(beta) == alpha and mul(alpha, beta) == beta
    return ok, f"alpha={alpha.exponents()} beta={beta.exponents()}"


def check_odd_order(seed: int = 0):
    ok = True
    for n in (3, 5, 7, 9, 11, 13, 15):
        report = classify(n)
        ok &= report.nontrivial >= 2 and report.s_count == 0 and report.inconclusive == 0
    rng = random.Random(seed)
    for n in range(1, 102, 2):
        for _ in range(1000):
            a = Gf2Element(n, rng.getrandbits(n))
            roots = square_roots(square(a))
            ok &= roots.dim == 0 and roots.particular == a
    return ok, "odd n in 3..15 have no S-idempotents; square roots unique for odd n <= 101"


def check_oracle_equivalence():
    ok = True
    for n in range(1, 17):
        fast = set(enumerate_idempotents(n))
        ok &= fast == set(brute_force_idempotents(n))
        _, m = odd_part(n)
        for e in enumerate_idempotents(m):
            ok &= hensel_lift(e, n) == lift_to_even(e, n)
    return ok, "n = 1..16"


def check_all_even_pairs():
    qs = [q for q in range(3, 102) if is_prime(q)]
    ok = True
    for q in qs:
        pair = cons.theorem_1_3_pair(q)
        ok &= check_witness(pair.alpha, pair.beta) is not None
    return ok, f"{len(qs)} odd primes q <= 101"


def check_sum_closure():
    ok = True
    total = 0
    for p in (3, 7, 31):
        pairs = cons.enumerate_basic_pairs(p)
        for r in range(1, len(pairs) + 1):
            for combo in combinations(pairs, r):
                pr = cons.sum_pair(combo)
                w = check_witness(pr.alpha, pr.beta)
                ok &= w is not None
                cx, cw = transfer_complement(pr.alpha, w)
                ok &= verify_witness(cx, cw)
                total += 1
    return ok, f"{total} subset sums and their complements"


def check_char0_cyclic3():
    G = AbGroup.cyclic(3)
    idems = [a for _, a in all_idempotents(G) if not (a.is_zero() or a.is_one())]
    ok = len(idems) == 6
    dom = char0_domain(G)
    alpha1 = idempotent_from_mask(G, {1, 2})
    expected = AlgElement.from_list(G, dom, [Fraction(2, 3), Fraction(-1, 3), Fraction(-1, 3)])
    ok &= alpha1 == expected
    cos = co_idempotents(alpha1)
    ok &= len(cos) == 3 and (-alpha1) in cos
    for a in idems:
        negation_witness(a)
    return ok, "6 nontrivial idempotents, 3 co-idempotents for 2/3 - g/3 - g^2/3"


def check_char0_klein():
    G = AbGroup.product(2, 2)
    idems = [a for _, a in all_idempotents(G) if not (a.is_zero() or a.is_one())]
    for a in idems:
        negation_witness(a)
    return len(idems) == 14, f"{len(idems)} nontrivial idempotents, all negation-witnessed"


def check_subgroup_sums():
    C4 = AbGroup.cyclic(4)
    c1 = subgroup_idempotent_pair(PrimeField(5), C4, 2, 1)
    c2 = subgroup_idempotent_pair(PrimeField(3), C4, 2, 2)
    c3 = subgroup_idempotent_pair(RationalField(), C4, 2, 3)
    ok = c1.valid and c2.valid and not c3.valid and c3.failed == ["beta_not_in_0_1_alpha"]
    return ok, f"F5 case 1 valid, F3 case 2 valid, Q case 3 invalid ({', '.join(c3.failed)})"


def check_numtheory():
    ok = all(lucas_lehmer(k) == trial_division_is_prime((1 << k) - 1) for k in range(2, 32))
    ok &= all(fermat_divisibility(k) for k in range(2, 98) if is_prime(k))
    return ok, "Lucas-Lehmer k <= 31, Fermat k <= 97"


SUITE: list[tuple[str, Callable, float]] = [
    ("census_p3", check_census_p3, 1.0),
    ("census_p7", check_census_p7, 1.0),
    ("census_p31", check_census_p31, 10.0),
    ("basic_pair_p31_l1", check_example_p31_l1, 1.0),
    ("odd_order_not_s", check_odd_order, 30.0),
    ("enumeration_matches_brute_force", check_oracle_equivalence, 60.0),
    ("all_even_pair_odd_primes", check_all_even_pairs, 10.0),
    ("sum_and_complement_closure", check_sum_closure, 10.0),
    ("char0_cyclic3", check_char0_cyclic3, 1.0),
    ("char0_product_2x2", check_char0_klein, 1.0),
    ("subgroup_sum_cases", check_subgroup_sums, 1.0),
    ("mersenne_and_fermat", check_numtheory, 5.0),
]


def run_check(name: str, fn: Callable, limit: float, **kwargs) -> CheckResult:
    start = time.perf_counter()
    try:
        passed, detail = fn(**kwargs)
    except Exception as exc:  # a crash is a failed check, not a crashed suite
        passed, detail = False, f"{type(exc).__name__}: {exc}"
    return CheckResult(name, bool(passed), detail, time.perf_counter() - start, limit)


def run_suite(seed: int = 0) -> list[CheckResult]:
    out = []
    for name, fn, limit in SUITE:
        kwargs = {"seed": seed} if fn is check_odd_order else {}
        out.append(run_check(name, fn, limit, **kwargs))
    return out
