"""Singular-series constant, finite main term, and error-scaling reports.

The count of pairwise-coprime 3-compositions behaves like f(n) * n^2 / 2
where f(n) multiplies (1 - 1/p^2) over primes dividing n and (1 - 3/q^2)
over the remaining primes. The infinite product is truncated at P; the
omitted tail multiplier lies in [1 - 3.1/P, 1] for P >= 11, so the default
P = 1e6 contributes error far below the n^{3/2} scale under study.
"""

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .arith import PrimeTable, factorize, primes_upto, sieve_primes
from .counter import count_T3_mobius

DEFAULT_TRUNCATION = 10**6


@dataclass(frozen=True)
class ErrorRow:
    """One row of an error scan: exact count vs. main-term approximations."""

    n: int
    T: int
    M: float
    fn_half_nsq: float
    abs_err_M: float
    abs_err_f: float
    normalized_err: float  # abs_err_f / n^{3/2}


@lru_cache(maxsize=16)
def singular_constant(truncation: int) -> float:
    """Product of (1 - 3/q^2) over all primes q <= truncation.

    Computed as a log1p sum to keep rounding error at the
    number-of-primes * eps level.
    """
    if truncation < 2:
        raise ValueError(f"truncation must be >= 2, got {truncation}")
    q = primes_upto(truncation).astype(np.float64)
    return float(np.exp(np.sum(np.log1p(-3.0 / (q * q)))))


def f_of_n(n: int, truncation: int | None = None) -> float:
    """Density constant for n: (1 - 1/p^2) over p | n times (1 - 3/q^2)
    over the other primes q <= truncation."""
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    if truncation is None:
        truncation = max(n, DEFAULT_TRUNCATION)
    if truncation < n:
        raise ValueError(
            f"truncation {truncation} < n={n}; primes dividing n would be misclassified"
        )
    result = singular_constant(truncation)
    for p, _ in factorize(n).factors:
        result *= (1.0 - 1.0 / p**2) / (1.0 - 3.0 / p**2)
    return result


def main_term_finite(n: int, table: PrimeTable | None = None) -> float:
    """The finite main term: (n^2/2) * prod_{p <= n, p not| n} (1 - 3/p^2)
    * prod_{p | n} (1 - 1/p^2)."""
    if n < 3:
        raise ValueError(f"need n >= 3, got {n}")
    if table is None:
        table = sieve_primes(n)
    if table.limit < n:
        raise ValueError(f"sieve limit {table.limit} < n={n}")
    p = table.primes[table.primes <= n].astype(np.float64)
    divides = np.asarray(n) % table.primes[table.primes <= n] == 0
    factors = np.where(divides, 1.0 - 1.0 / (p * p), 1.0 - 3.0 / (p * p))
    return n * n / 2.0 * float(np.exp(np.sum(np.log(factors))))


def error_report(
    n_from: int,
    n_to: int,
    stride: int = 1,
    truncation: int | None = None,
    table: PrimeTable | None = None,
) -> list:
    """One ErrorRow per n: exact T, finite main term M, truncated
    f(n)*n^2/2, and the absolute/normalized errors."""
    if not 3 <= n_from <= n_to:
        raise ValueError(f"need 3 <= n_from <= n_to, got [{n_from}, {n_to}]")
    if stride < 1:
        raise ValueError(f"stride must be >= 1, got {stride}")
    if truncation is None:
        truncation = max(n_to, DEFAULT_TRUNCATION)
    if table is None or table.limit < n_to:
        table = sieve_primes(n_to)
    rows = []
    for n in range(n_from, n_to + 1, stride):
        T = count_T3_mobius(n, table).T
        M = main_term_finite(n, table)
        fn_half_nsq = f_of_n(n, truncation) * n * n / 2.0
        abs_err_f = abs(T - fn_half_nsq)
        rows.append(
            ErrorRow(
                n=n,
                T=T,
                M=M,
                fn_half_nsq=fn_half_nsq,
                abs_err_M=abs(T - M),
                abs_err_f=abs_err_f,
                normalized_err=abs_err_f / n**1.5,
            )
        )
    return rows
