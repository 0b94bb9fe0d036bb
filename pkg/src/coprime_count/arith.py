"""Prime sieving, factorization, and multiplicative-function utilities.

Everything here is exact integer arithmetic. The sieve stores smallest
prime factors so that factoring any m <= limit costs O(log m) divisions;
the counting code factors millions of small integers through it.
"""

import math
from dataclasses import dataclass, field

import numpy as np


class ResourceLimitError(RuntimeError):
    """An operation would exceed its configured enumeration budget."""


@dataclass(frozen=True)
class PrimeTable:
    """Primes up to `limit` plus smallest-prime-factor data.

    Immutable after construction; safe for concurrent reads.
    spf[m] is the smallest prime factor of m for 2 <= m <= limit
    (spf[p] = p for primes; spf[0] = 0, spf[1] = 1).
    """

    limit: int
    primes: np.ndarray = field(repr=False)
    spf: np.ndarray = field(repr=False)

    def is_prime(self, m: int) -> bool:
        if not 2 <= m <= self.limit:
            raise ValueError(f"{m} outside sieve range [2, {self.limit}]")
        return int(self.spf[m]) == m


def sieve_primes(limit: int) -> PrimeTable:
    """Build a PrimeTable for [2, limit] with a smallest-prime-factor sieve."""
    if limit < 2:
        raise ValueError(f"sieve limit must be >= 2, got {limit}")
    spf = np.zeros(limit + 1, dtype=np.int64)
    for p in range(2, math.isqrt(limit) + 1):
        if spf[p] == 0:
            block = spf[p * p :: p]
            block[block == 0] = p
    # everything still unmarked (>= 2) has no factor <= sqrt(limit): prime
    idx = np.arange(limit + 1, dtype=np.int64)
    unmarked = spf == 0
    spf[unmarked] = idx[unmarked]
    spf[1] = 1
    primes = np.flatnonzero(spf[2:] == idx[2:]) + 2
    return PrimeTable(limit=limit, primes=primes, spf=spf)


def primes_upto(limit: int) -> np.ndarray:
    """Just the primes <= limit (boolean sieve; cheaper than a PrimeTable
    when factorization data is not needed, e.g. truncated Euler products)."""
    if limit < 2:
        raise ValueError(f"sieve limit must be >= 2, got {limit}")
    composite = np.zeros(limit + 1, dtype=bool)
    composite[:2] = True
    for p in range(2, math.isqrt(limit) + 1):
        if not composite[p]:
            composite[p * p :: p] = True
    return np.flatnonzero(~composite)


@dataclass(frozen=True)
class Factorization:
    value: int
    factors: tuple  # ((prime, exponent), ...) with primes ascending

    def __post_init__(self):
        prod = 1
        for p, e in self.factors:
            prod *= p**e
        if prod != self.value:
            raise ValueError(f"factors {self.factors} do not multiply to {self.value}")


def factorize(n: int, table: PrimeTable | None = None) -> Factorization:
    """Factor n. Uses the spf table when n <= table.limit, otherwise plain
    trial division (adequate here; nothing in this package factors large n)."""
    if n < 1:
        raise ValueError(f"cannot factorize {n}; need n >= 1")
    factors = []
    if table is not None and n <= table.limit:
        spf = table.spf
        m = n
        while m > 1:
            p = int(spf[m])
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            factors.append((p, e))
    else:
        m = n
        d = 2
        while d * d <= m:
            if m % d == 0:
                e = 0
                while m % d == 0:
                    m //= d
                    e += 1
                factors.append((d, e))
            d += 1 if d == 2 else 2
        if m > 1:
            factors.append((m, 1))
    return Factorization(value=n, factors=tuple(factors))


def omega(n: int, table: PrimeTable | None = None) -> int:
    """Number of distinct prime factors of n."""
    return len(factorize(n, table).factors)


def is_squarefree(n: int, table: PrimeTable | None = None) -> bool:
    return all(e == 1 for _, e in factorize(n, table).factors)


def squarefree_divisors(n: int, table: PrimeTable | None = None) -> list:
    """All divisors of the radical of n, ascending (2^omega(n) of them)."""
    divisors = [1]
    for p, _ in factorize(n, table).factors:
        divisors += [d * p for d in divisors]
    return sorted(divisors)


def euler_phi(n: int, table: PrimeTable | None = None) -> int:
    """Euler totient, exactly: multiply by (p-1)/p per distinct prime."""
    result = n
    for p, _ in factorize(n, table).factors:
        result = result // p * (p - 1)
    return result


def gcd(a: int, b: int) -> int:
    return math.gcd(a, b)


def lcm(a: int, b: int) -> int:
    return math.lcm(a, b)


def triple_lcm(a, b):
    """Componentwise lcm of two integer triples."""
    return (math.lcm(a[0], b[0]), math.lcm(a[1], b[1]), math.lcm(a[2], b[2]))


def omega_and_squarefree_arrays(table: PrimeTable):
    """Vectorized omega(m) and squarefree(m) for all m <= table.limit.

    Returns (omega, squarefree) as numpy arrays indexed by m. Used by the
    counting loop, which needs both for every candidate cofactor.
    """
    limit = table.limit
    w = np.zeros(limit + 1, dtype=np.int8)
    sf = np.ones(limit + 1, dtype=bool)
    for p in table.primes:
        p = int(p)
        w[p::p] += 1
        sf[p * p :: p * p] = False
    return w, sf
