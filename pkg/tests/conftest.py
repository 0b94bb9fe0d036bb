import pytest

from coprime_count import sieve_primes


@pytest.fixture(scope="session")
def table_2000():
    return sieve_primes(2000)


@pytest.fixture(scope="session")
def table_100():
    return sieve_primes(100)
