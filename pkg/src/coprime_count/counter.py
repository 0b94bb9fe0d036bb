"""Exact counts of 3-part compositions of n with pairwise-coprime parts.

Two independent routes: a brute-force scan over all compositions, and the
signed sum over squarefree triples a = (d*g2*g3, d*g1*g3, d*g1*g2) of
coefficient(d, g) * S(a), where S(a) is the exact Diophantine solution
count from the `diophantine` module and the coefficient is the poset
Mobius value 2^omega(d) * (-1)^(omega(g1)+omega(g2)+omega(g3)). Terms with
a1 + a2 + a3 > n are pruned (their equation has no positive solution), so
only O(n^{3/2}) terms survive.
"""

import math
from dataclasses import dataclass

import numpy as np

from .arith import (
    PrimeTable,
    ResourceLimitError,
    omega,
    omega_and_squarefree_arrays,
    sieve_primes,
    squarefree_divisors,
)

DEFAULT_ORACLE_BUDGET = 5000


@dataclass(frozen=True)
class CountResult:
    n: int
    T: int
    terms_evaluated: int
    method: str  # "oracle" | "mobius"


def count_T3_oracle(n: int, budget: int = DEFAULT_ORACLE_BUDGET) -> CountResult:
    """Count pairwise-coprime 3-compositions of n by direct enumeration."""
    if n > budget:
        raise ResourceLimitError(f"n={n} exceeds oracle budget {budget}")
    if n < 3:
        return CountResult(n=n, T=0, terms_evaluated=0, method="oracle")
    total = 0
    pairs = 0
    for t1 in range(1, n - 1):
        t2 = np.arange(1, n - t1, dtype=np.int64)
        t3 = n - t1 - t2
        ok = (np.gcd(t1, t2) == 1) & (np.gcd(t1, t3) == 1) & (np.gcd(t2, t3) == 1)
        total += int(np.count_nonzero(ok))
        pairs += len(t2)
    return CountResult(n=n, T=total, terms_evaluated=pairs, method="oracle")


def count_T2_oracle(n: int) -> int:
    """Count pairwise-coprime 2-compositions of n (equals the totient)."""
    if n < 2:
        return 0
    return int(np.count_nonzero(np.gcd(np.arange(1, n, dtype=np.int64), n) == 1))


def term_coefficient(d: int, g, table: PrimeTable | None = None) -> int:
    """Mobius coefficient of the (d, g) term: primes dividing d contribute
    a factor 2 (all three components), primes dividing some g_i a factor -1
    (exactly two components)."""
    g1, g2, g3 = g
    if (
        math.gcd(g1, g2) != 1
        or math.gcd(g1, g3) != 1
        or math.gcd(g2, g3) != 1
        or math.gcd(d, g1 * g2 * g3) != 1
    ):
        raise ValueError(f"d={d}, g={g} violate pairwise coprimality")
    sign = -1 if (omega(g1, table) + omega(g2, table) + omega(g3, table)) % 2 else 1
    return sign * 2 ** omega(d, table)


def count_T3_mobius(n: int, table: PrimeTable | None = None) -> CountResult:
    """Count pairwise-coprime 3-compositions of n by the signed triple sum.

    Enumerates d over squarefree divisors of n and ordered pairwise-coprime
    squarefree (g1, g2, g3) coprime to d with
    d*(g2*g3 + g1*g3 + g1*g2) <= n (necessary for a positive solution to
    exist). The per-term solution count is inlined integer arithmetic: a
    particular solution via modular inverses, reduction of the projected
    translate into (0,1]^2 scaled by L = g1*g2*g3, then a triangular number.
    """
    if n < 3:
        raise ValueError(f"need n >= 3, got {n}")
    if table is None or table.limit < n:
        table = sieve_primes(n)
    w, sf = omega_and_squarefree_arrays(table)
    gcd = math.gcd
    total = 0
    terms = 0
    for d in squarefree_divisors(n, table):
        m = n // d
        coeff_d = 2 ** int(w[d])
        for g1 in range(1, (m - 1) // 2 + 1):
            if not sf[g1] or gcd(g1, d) != 1:
                continue
            w1 = int(w[g1])
            for g2 in range(1, (m - g1) // (g1 + 1) + 1):
                if not sf[g2] or gcd(g2, g1) != 1 or gcd(g2, d) != 1:
                    continue
                C = g1 * g2
                s12 = g1 + g2
                w12 = w1 + int(w[g2])
                B0 = g1  # B = g1*g3
                for g3 in range(1, (m - C) // s12 + 1):
                    if not sf[g3] or gcd(g3, C) != 1 or gcd(g3, d) != 1:
                        continue
                    terms += 1
                    A = g2 * g3
                    L = A * g1
                    v1 = m * pow(A, -1, g1) % g1 if g1 > 1 else 0
                    m1 = (m - A * v1) // g1
                    v2 = m1 * pow(g3, -1, g2) % g2 if g2 > 1 else 0
                    gap = m - (v1 * A - 1) % L - (v2 * B0 * g3 - 1) % L - 2
                    if gap <= 0:
                        continue
                    t = (gap - 1) // L + 2
                    count = t * (t - 1) // 2
                    if (w12 + int(w[g3])) % 2:
                        total -= coeff_d * count
                    else:
                        total += coeff_d * count
    return CountResult(n=n, T=total, terms_evaluated=terms, method="mobius")


def scan(
    n_from: int,
    n_to: int,
    stride: int = 1,
    oracle_limit: int = 0,
    table: PrimeTable | None = None,
) -> list:
    """count_T3_mobius over a range, cross-checked against the brute-force
    oracle for n <= oracle_limit. A disagreement aborts the scan."""
    if not 3 <= n_from <= n_to:
        raise ValueError(f"need 3 <= n_from <= n_to, got [{n_from}, {n_to}]")
    if stride < 1:
        raise ValueError(f"stride must be >= 1, got {stride}")
    if table is None or table.limit < n_to:
        table = sieve_primes(n_to)
    results = []
    for n in range(n_from, n_to + 1, stride):
        result = count_T3_mobius(n, table)
        if n <= oracle_limit:
            reference = count_T3_oracle(n, budget=oracle_limit)
            if reference.T != result.T:
                raise RuntimeError(
                    f"oracle disagreement at n={n}: "
                    f"mobius={result.T}, oracle={reference.T}"
                )
        results.append(result)
    return results
