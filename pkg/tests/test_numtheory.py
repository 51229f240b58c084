from math import gcd, prod

import pytest
from hypothesis import given, strategies as st

from theta3.errors import NotCoprime
from theta3.numtheory import (
    divisors,
    euler_phi,
    factorize,
    is_prime,
    odd_divisors_gt1,
    ord_mod,
    two_adic_valuation,
)


def prime_by_trial(m):
    return m > 1 and all(m % p for p in range(2, int(m ** 0.5) + 1))


def phi_by_count(d):
    return sum(1 for k in range(1, d + 1) if gcd(k, d) == 1)


def order_by_powering(a, d):
    k, x = 1, a % d
    while x != 1 % d:
        x = x * a % d
        k += 1
    return k


def _check_factorization(m):
    f = factorize(m)
    assert prod(p ** e for p, e in f.items()) == m
    assert list(f) == sorted(f)
    assert all(is_prime(p) for p in f)


def test_factorize_examples():
    assert factorize(26) == {2: 1, 13: 1}
    assert factorize(80) == {2: 4, 5: 1}
    assert factorize(1) == {}


def test_is_prime_matches_trial_division():
    assert [m for m in range(2000) if is_prime(m)] == [m for m in range(2000) if prime_by_trial(m)]
    # strong pseudoprimes to several small bases
    for m in (3215031751, 2152302898747, 3474749660383, 341550071728321):
        assert not is_prime(m)


def test_factorize_round_trip_small():
    for m in range(1, 10 ** 5):
        _check_factorization(m)


@pytest.mark.slow
def test_factorize_round_trip_to_million():
    for m in range(1, 10 ** 6 + 1):
        _check_factorization(m)


@pytest.mark.parametrize("n", range(1, 41))
def test_factorize_group_orders(n):
    _check_factorization(3 ** n - 1)


@given(st.integers(1, 10 ** 18))
def test_factorize_random(m):
    _check_factorization(m)


def test_factorize_semiprimes_needing_rho():
    p, q = 1000003, 998244353
    assert factorize(p * q) == {p: 1, q: 1}
    assert factorize(p ** 2 * 7) == {7: 1, p: 2}


def test_odd_divisors_examples():
    assert odd_divisors_gt1(factorize(26)) == [13]
    assert odd_divisors_gt1(factorize(8)) == []
    assert odd_divisors_gt1(factorize(242)) == [11, 121]


def test_divisors_match_brute_force():
    for m in range(1, 3000):
        assert divisors(factorize(m)) == [d for d in range(1, m + 1) if m % d == 0]


def test_euler_phi_examples():
    assert euler_phi(13) == 12
    assert euler_phi(1) == 1
    assert euler_phi(121) == 110
    assert all(euler_phi(d) == phi_by_count(d) for d in range(1, 500))


def test_ord_mod_examples():
    assert ord_mod(-2, 13) == 12
    assert ord_mod(-2, 5) == 4
    assert ord_mod(-2, 11) == 5
    assert ord_mod(-2, 121) == 55
    with pytest.raises(NotCoprime):
        ord_mod(4, 6)


def test_ord_mod_matches_powering_and_divides_phi():
    for d in range(3, 10 ** 4, 2):
        k = ord_mod(-2, d)
        assert euler_phi(d) % k == 0
        if d < 2000:
            assert k == order_by_powering(-2, d)
        else:
            assert pow(-2, k, d) == 1


def test_odd_totient_sum_is_odd_part():
    for m in range(1, 10 ** 4):
        odd = m >> two_adic_valuation(m)
        assert sum(euler_phi(d) for d in divisors(factorize(m)) if d % 2) == odd


def test_order_of_minus_two_exceeds_two():
    for d in range(5, 10 ** 4, 2):
        if d % 3:
            assert ord_mod(-2, d) > 2
    assert ord_mod(-2, 3) == 1  # -2 = 1 mod 3


def test_two_adic_valuation():
    assert two_adic_valuation(26) == 1
    assert two_adic_valuation(80) == 4
    assert two_adic_valuation(7) == 0
    for m in range(1, 5000):
        e = two_adic_valuation(m)
        assert m % 2 ** e == 0 and m % 2 ** (e + 1)
