"""Arithmetic helper functions: divisors, Moebius, Jordan, totient, gcd convention."""

import math

import pytest

from wfact.numtheory import divisors, euler_phi, gcd_all, jordan_j2, moebius


def test_divisors_examples():
    assert divisors(1) == [1]
    assert divisors(6) == [1, 2, 3, 6]
    assert divisors(12) == [1, 2, 3, 4, 6, 12]


def test_divisors_rejects_nonpositive():
    with pytest.raises(ValueError):
        divisors(0)
    with pytest.raises(ValueError):
        divisors(-3)


def test_moebius_examples():
    assert moebius(1) == 1
    assert moebius(4) == 0
    assert moebius(6) == 1


def test_moebius_rejects_zero():
    with pytest.raises(ValueError):
        moebius(0)


def test_jordan_j2_examples():
    assert jordan_j2(1) == 1
    assert jordan_j2(2) == 3
    assert jordan_j2(6) == 24


def test_euler_phi_examples():
    assert euler_phi(1) == 1
    assert euler_phi(2) == 1
    assert euler_phi(12) == 4


def test_moebius_divisor_sums():
    for n in range(2, 400):
        assert sum(moebius(d) for d in divisors(n)) == 0
    assert sum(moebius(d) for d in divisors(1)) == 1


def _is_prime(p):
    return p >= 2 and all(p % q for q in range(2, math.isqrt(p) + 1))


def test_jordan_j2_product_form():
    for n in range(1, 1001):
        primes = {p for p in range(2, n + 1) if n % p == 0 and _is_prime(p)}
        expected = n * n
        for p in primes:
            expected = expected * (p * p - 1) // (p * p)
        assert jordan_j2(n) == expected


def test_euler_phi_divisor_sum():
    for n in range(1, 1001):
        assert sum(euler_phi(d) for d in divisors(n)) == n


def test_moebius_multiplicative_on_coprime_pairs():
    for a in range(1, 101):
        for b in range(1, 101):
            if math.gcd(a, b) == 1:
                assert moebius(a * b) == moebius(a) * moebius(b)


def test_jordan_j2_multiplicative_on_coprime_pairs():
    for a in range(1, 101):
        for b in range(1, 101):
            if math.gcd(a, b) == 1:
                assert jordan_j2(a * b) == jordan_j2(a) * jordan_j2(b)


def test_gcd_all_zero_convention():
    # empty or all-zero value lists fall back to the modulus itself
    assert gcd_all([], 5) == 5
    assert gcd_all([0, 0], 4) == 4
    assert gcd_all([2, 4], 6) == 2
    assert gcd_all([3], 6) == 3
