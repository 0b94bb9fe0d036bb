import math
import random

import numpy as np
import pytest

from coprime_count import (
    euler_phi,
    factorize,
    gcd,
    lcm,
    omega,
    sieve_primes,
    squarefree_divisors,
    triple_lcm,
)


def trial_division_primes(limit):
    """Independent oracle: primality by trial division."""
    out = []
    for m in range(2, limit + 1):
        if all(m % d for d in range(2, math.isqrt(m) + 1)):
            out.append(m)
    return out


def test_sieve_first_primes():
    assert list(sieve_primes(10).primes) == [2, 3, 5, 7]
    assert list(sieve_primes(2).primes) == [2]


def test_sieve_matches_trial_division():
    table = sieve_primes(1000)
    assert list(table.primes) == trial_division_primes(1000)
    assert len(sieve_primes(100).primes) == 25


def test_sieve_rejects_small_limit():
    with pytest.raises(ValueError):
        sieve_primes(1)


def test_spf_invariants():
    table = sieve_primes(500)
    for m in range(2, 501):
        p = int(table.spf[m])
        assert m % p == 0
        assert all(m % q for q in range(2, p))


def test_factorize_examples(table_100):
    assert factorize(1).factors == ()
    assert factorize(12, table_100).factors == ((2, 2), (3, 1))
    assert factorize(30030).factors == (
        (2, 1), (3, 1), (5, 1), (7, 1), (11, 1), (13, 1),
    )
    with pytest.raises(ValueError):
        factorize(0)


def test_factorize_reconstructs_everything():
    table = sieve_primes(10**5)
    for n in range(1, 10**5 + 1):
        f = factorize(n, table)  # __post_init__ checks the product
        assert f.value == n


def test_omega_examples():
    assert omega(1) == 0
    assert omega(12) == 2
    assert omega(30030) == 6


def test_squarefree_divisors_examples():
    assert squarefree_divisors(1) == [1]
    assert squarefree_divisors(12) == [1, 2, 3, 6]
    assert squarefree_divisors(30) == [1, 2, 3, 5, 6, 10, 15, 30]


def test_squarefree_divisor_count_is_power_of_two():
    table = sieve_primes(10**4)
    for n in range(1, 10**4 + 1):
        assert len(squarefree_divisors(n, table)) == 2 ** omega(n, table)


def test_euler_phi_examples():
    assert euler_phi(1) == 1
    assert euler_phi(7) == 6
    assert euler_phi(12) == 4


def test_euler_phi_against_gcd_count():
    table = sieve_primes(10**4)
    for n in range(1, 10**4 + 1):
        direct = int(np.count_nonzero(np.gcd(np.arange(1, n + 1), n) == 1))
        assert euler_phi(n, table) == direct


def test_euler_phi_multiplicative():
    rng = random.Random(7)
    checked = 0
    while checked < 1000:
        a = rng.randint(1, 1000)
        b = rng.randint(1, 1000)
        if math.gcd(a, b) != 1:
            continue
        assert euler_phi(a * b) == euler_phi(a) * euler_phi(b)
        checked += 1


def test_gcd_lcm_conventions():
    assert gcd(6, 10) == 2
    assert gcd(0, 5) == 5
    assert gcd(0, 0) == 0
    assert lcm(0, 5) == 0
    assert triple_lcm((2, 2, 1), (1, 3, 3)) == (2, 6, 3)
