from itertools import combinations

import pytest

from oracles import brute_idempotents, brute_roots, conv_mod2, is_s_witness
from smarandache.constructions import (
    BasicSpec,
    ConstructionError,
    basic_pair,
    basic_spec,
    constructed_family,
    cross_terms,
    enumerate_basic_pairs,
    s_count_formula,
    sum_pair,
    theorem_1_3_pair,
    verify_census,
)
from smarandache.gf2_ring import make, mul
from smarandache.numtheory import is_prime, mersenne_exponent
from smarandache.s_classify import Law, check_witness

MERSENNE = [3, 7, 31, 127]


def E(n, *exps):
    return make(n, exps)


def test_basic_pair_p31_l1():
    alpha, beta, spec = basic_pair(31, 1)
    assert alpha == E(62, 2, 4, 8, 16, 32)
    assert beta == E(62, 1, 33, 35, 39, 47)
    assert spec == BasicSpec(p=31, k=5, l=1, m=6, x=(4, 8, 16, 32), t=(1, 33, 35, 39, 47))


def test_basic_pair_p3():
    alpha, beta, spec = basic_pair(3, 1)
    assert (alpha, beta) == (E(6, 2, 4), E(6, 1, 5))
    assert spec.x == (4,) and spec.t == (1, 5)
    assert conv_mod2({1, 5}, {1, 5}, 6) == {2, 4}
    assert conv_mod2({2, 4}, {1, 5}, 6) == {1, 5}


def test_basic_pair_p7_l3():
    alpha, beta, spec = basic_pair(7, 3)
    assert (alpha, beta) == (E(14, 6, 10, 12), E(14, 3, 5, 13))
    assert spec.x == (12, 10) and spec.t == (3, 13, 5)
    assert conv_mod2({3, 5, 13}, {3, 5, 13}, 14) == {6, 10, 12}
    assert conv_mod2({6, 10, 12}, {3, 5, 13}, 14) == {3, 5, 13}


def test_basic_pair_errors():
    with pytest.raises(ConstructionError):
        basic_pair(5, 1)
    with pytest.raises(ConstructionError):
        basic_pair(31, 2)
    with pytest.raises(ConstructionError):
        basic_pair(31, 33)


def test_basic_pair_accepts_non_leader():
    # l = 3 and l = 5 generate the same orbit mod 14
    assert basic_pair(7, 5).alpha == basic_pair(7, 3).alpha


@pytest.mark.parametrize("p", MERSENNE)
def test_basic_spec_invariants(p):
    k = mersenne_exponent(p).k
    for l in range(1, p, 2):
        spec = basic_spec(p, l)
        n = 2 * p
        for i, x in enumerate(spec.x, start=2):
            assert x == (2**i * l) % n and 0 < x < n
        assert spec.t[0] == l
        assert all(t % 2 == 1 for t in spec.t)
        assert len(set(spec.t)) == k
        orbit = [(2**j * l) % n for j in range(1, k + 1)]
        assert len(set(orbit)) == k
        assert (2 ** (k + 1) * l) % n == (2 * l) % n


@pytest.mark.parametrize("p", MERSENNE)
def test_basic_pairs_all_canonical_l(p):
    pairs = enumerate_basic_pairs(p)
    assert len(pairs) == (p - 1) // mersenne_exponent(p).k
    for alpha, beta, _ in pairs:
        w = check_witness(alpha, beta)
        assert w is not None and w.law is Law.ABSORB_WITNESS
        assert all(e % 2 == 0 for e in alpha.support)
        assert all(e % 2 == 1 for e in beta.support)
    for a, b in combinations(pairs, 2):
        assert not a.alpha.support & b.alpha.support
        assert not a.beta.support & b.beta.support
    union = set().union(*(pr.alpha.support for pr in pairs))
    assert union == set(range(2, 2 * p, 2))


def test_enumerate_basic_pairs_p7():
    pairs = enumerate_basic_pairs(7)
    assert [(pr.alpha, pr.beta) for pr in pairs] == [
        (E(14, 2, 4, 8), E(14, 1, 9, 11)),
        (E(14, 6, 10, 12), E(14, 3, 5, 13)),
    ]
    assert len(enumerate_basic_pairs(3)) == 1
    assert len(enumerate_basic_pairs(31)) == 6


def test_sum_pair_p7():
    pairs = enumerate_basic_pairs(7)
    total = sum_pair(pairs)
    assert total.alpha == E(14, 2, 4, 6, 8, 10, 12)
    assert total.beta == E(14, 1, 3, 5, 9, 11, 13)
    assert is_s_witness(total.alpha.support, total.beta.support, 14)
    assert tuple(total) == tuple(theorem_1_3_pair(7))


def test_sum_pair_single():
    pr = enumerate_basic_pairs(31)[2]
    assert tuple(sum_pair([pr])) == (pr.alpha, pr.beta)


def test_cross_terms_p31():
    pairs = enumerate_basic_pairs(31)
    for a, b in combinations(pairs, 2):
        direct = conv_mod2(a.alpha.support, b.beta.support, 62) ^ conv_mod2(
            b.alpha.support, a.beta.support, 62
        )
        assert direct == set()
        assert cross_terms([a, b]).is_zero()


def test_sum_pair_errors():
    pairs = enumerate_basic_pairs(7)
    with pytest.raises(ConstructionError):
        sum_pair([])
    with pytest.raises(ConstructionError):
        sum_pair([pairs[0], pairs[0]])
    with pytest.raises(ConstructionError):
        sum_pair([pairs[0], enumerate_basic_pairs(3)[0]])


def test_theorem_1_3_pair_examples():
    pr = theorem_1_3_pair(5)
    assert pr.alpha == E(10, 2, 4, 6, 8) and pr.beta == E(10, 1, 3, 7, 9)
    assert conv_mod2({1, 3, 7, 9}, {1, 3, 7, 9}, 10) == {2, 4, 6, 8}
    assert conv_mod2({2, 4, 6, 8}, {1, 3, 7, 9}, 10) == {1, 3, 7, 9}
    assert tuple(theorem_1_3_pair(3)) == (E(6, 2, 4), E(6, 1, 5))
    assert tuple(theorem_1_3_pair(3)) == tuple(basic_pair(3, 1)[:2])
    with pytest.raises(ConstructionError):
        theorem_1_3_pair(9)
    with pytest.raises(ConstructionError):
        theorem_1_3_pair(2)


@pytest.mark.parametrize("q", [q for q in range(3, 102) if is_prime(q)])
def test_theorem_1_3_pair_all_odd_primes(q):
    pr = theorem_1_3_pair(q)
    assert check_witness(pr.alpha, pr.beta).law is Law.ABSORB_WITNESS


def test_s_count_formula():
    assert s_count_formula(3) == 2
    assert s_count_formula(7) == 6
    assert s_count_formula(31) == 126
    assert s_count_formula(127) == 524286
    from math import comb

    for p in (3, 7, 31, 127):
        m = (p - 1) // mersenne_exponent(p).k
        assert s_count_formula(p) == 2 * sum(comb(m, j) for j in range(1, m + 1))
    with pytest.raises(ConstructionError):
        s_count_formula(15)


@pytest.mark.parametrize("p", [3, 7])
def test_verify_census_against_brute_force(p):
    n = 2 * p
    report = verify_census(p)
    assert report.ok and report.found == report.expected == s_count_formula(p)
    nontriv = [x for x in brute_idempotents(n) if x and x != {0}]
    assert len(nontriv) == s_count_formula(p)
    for x in nontriv:
        roots = brute_roots(set(x), n)
        assert any(is_s_witness(set(x), r, n) for r in roots)
    assert set(nontriv) == {frozenset(x.support) for x in constructed_family(p)}


def test_verify_census_p31():
    report = verify_census(31)
    assert report.ok
    assert (report.expected, report.found) == (126, 126)


def test_mul_of_distinct_basic_pair_is_not_individually_zero():
    # only the symmetric sum cancels
    a, b = enumerate_basic_pairs(7)
    assert not mul(a.alpha, b.beta).is_zero()
