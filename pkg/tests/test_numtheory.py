import pytest

from oracles import orbit_closure, trial_prime
from smarandache.numtheory import (
    MersenneWitness,
    cyclotomic_cosets,
    fermat_divisibility,
    is_prime,
    lucas_lehmer,
    mersenne_exponent,
    mult_order,
    odd_part,
)


def test_is_prime_examples():
    assert is_prime(31)
    assert not is_prime(1)
    assert not is_prime(2047) and 2047 == 23 * 89


def test_is_prime_matches_trial_division():
    for u in range(3000):
        assert is_prime(u) == trial_prime(u)
    for u in [2**31 - 1, 2**32 + 1, 3215031751]:
        assert is_prime(u) == trial_prime(u)
    assert is_prime(2**61 - 1)
    assert not is_prime(341550071728321)  # strong pseudoprime to bases 2..17


def test_is_prime_rejects_huge():
    with pytest.raises(ValueError):
        is_prime(1 << 64)


@pytest.mark.parametrize("k, expected", [(5, True), (11, False), (2, True), (4, False)])
def test_lucas_lehmer_examples(k, expected):
    assert lucas_lehmer(k) is expected
    assert trial_prime(2**k - 1) is expected


def test_lucas_lehmer_agrees_up_to_31():
    for k in range(2, 32):
        assert lucas_lehmer(k) == trial_prime(2**k - 1), k


def test_mersenne_exponent():
    assert mersenne_exponent(31) == MersenneWitness(k=5, p=31)
    assert mersenne_exponent(5) is None
    assert mersenne_exponent(7) == MersenneWitness(k=3, p=7)
    assert mersenne_exponent(2047) is None
    assert mersenne_exponent(127) == MersenneWitness(k=7, p=127)
    assert mersenne_exponent(8191).k == 13
    assert mersenne_exponent(3) == MersenneWitness(k=2, p=3)


def test_mersenne_witness_invariants():
    for p in (3, 7, 31, 127, 8191):
        w = mersenne_exponent(p)
        assert (p - 1) % w.k == 0
        with pytest.raises(ValueError):
            MersenneWitness(k=w.k, p=p + 2)


def test_fermat_divisibility():
    assert fermat_divisibility(3) and (8 - 2) == 2 * 3
    assert fermat_divisibility(5) and (2**5 - 2) // 5 == 6
    assert fermat_divisibility(2)
    with pytest.raises(ValueError):
        fermat_divisibility(9)


def test_mult_order():
    assert mult_order(2, 7) == 3
    assert mult_order(2, 31) == 5
    assert mult_order(1, 17) == 1
    with pytest.raises(ValueError):
        mult_order(2, 6)


def test_cosets_mod_7():
    got = [c.sorted_members() for c in cyclotomic_cosets(7)]
    assert got == [sorted(orbit_closure(x, 7)) for x in (0, 1, 3)]
    assert got == [[0], [1, 2, 4], [3, 5, 6]]


def test_cosets_mod_1():
    assert [c.sorted_members() for c in cyclotomic_cosets(1)] == [[0]]


def test_odd_only_mod_62():
    classes = cyclotomic_cosets(62, odd_only=True)
    assert [c.leader for c in classes] == [1, 3, 5, 7, 11, 15]
    # oracle: group odd l by their even orbit sets
    groups = {}
    for l in range(1, 62, 2):
        orbit = frozenset(orbit_closure(2 * l, 62))
        if orbit != {0}:
            groups.setdefault(orbit, []).append(l)
    assert len(groups) == 6 == (31 - 1) // 5
    assert {c.members for c in classes} == set(groups)
    assert all(len(c.members) == 5 for c in classes)


@pytest.mark.parametrize("m", list(range(1, 40)))
def test_cosets_partition(m):
    cosets = cyclotomic_cosets(m)
    seen = set()
    for c in cosets:
        assert not seen & c.members
        seen |= c.members
        assert all(2 * x % m in c.members for x in c.members)
        assert c.leader == min(c.members)
    assert seen == set(range(m))
    if m % 2:
        for c in cosets:
            assert c.members == orbit_closure(c.leader, m)


@pytest.mark.parametrize("p", [3, 7, 31, 127, 8191])
def test_orbit_size_is_k_for_mersenne(p):
    k = mersenne_exponent(p).k
    assert mult_order(2, p) == k
    nonzero = [c for c in cyclotomic_cosets(p) if c.leader != 0]
    assert all(len(c) == k for c in nonzero)
    assert len(nonzero) == (p - 1) // k


def test_odd_part():
    assert odd_part(12) == (2, 3)
    assert odd_part(7) == (0, 7)
    assert odd_part(16) == (4, 1)
