"""Exact counting of positive solutions of a1*x1 + a2*x2 + a3*x3 = n.

For squarefree triples a the equation factors through the decomposition
a_i = d*g_j*g_k with d = gcd(a1,a2,a3) and g pairwise coprime, turning it
into g2*g3*x1 + g1*g3*x2 + g1*g2*x3 = m with m = n/d. The integer solutions
form a translated lattice; projecting by (x1/g1, x2/g2) maps them onto a
translate of Z^2 and the positive solutions onto the lattice points of an
open triangle. Counting those is a one-line triangular-number formula once
the translate q in (0,1]^2 is known. All boundary comparisons are exact
(integers scaled by g1*g2*g3); no floating point is involved.
"""

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .arith import PrimeTable, ResourceLimitError, is_squarefree


@dataclass(frozen=True)
class TripleDecomposition:
    """a_i = d * g_j * g_k with d, g squarefree and g pairwise coprime,
    each g_i coprime to d."""

    d: int
    g: tuple

    def reconstruct(self) -> tuple:
        g1, g2, g3 = self.g
        return (self.d * g2 * g3, self.d * g1 * g3, self.d * g1 * g2)


@dataclass(frozen=True)
class SolutionCount:
    """Exact count together with the lattice parameters.

    count = C(t, 2); r = t - m/(g1*g2*g3) satisfies |r| <= 2 whenever the
    equation is solvable (t is 0 only in the divisibility-failure case).
    """

    count: int
    t: int
    r: Fraction


def _check_pairwise_coprime(g):
    g1, g2, g3 = g
    if min(g1, g2, g3) < 1:
        raise ValueError(f"g must be positive, got {g}")
    if math.gcd(g1, g2) != 1 or math.gcd(g1, g3) != 1 or math.gcd(g2, g3) != 1:
        raise ValueError(f"g must be pairwise coprime, got {g}")


def decompose(a, table: PrimeTable | None = None) -> TripleDecomposition:
    """Split a squarefree triple into its common part d and cofactors g."""
    a1, a2, a3 = a
    for component in a:
        if component < 1 or not is_squarefree(component, table):
            raise ValueError(f"components must be positive squarefree, got {a}")
    d = math.gcd(a1, math.gcd(a2, a3))
    g = (
        math.gcd(a2 // d, a3 // d),
        math.gcd(a1 // d, a3 // d),
        math.gcd(a1 // d, a2 // d),
    )
    dec = TripleDecomposition(d=d, g=g)
    assert dec.reconstruct() == tuple(a)
    return dec


def particular_solution(m: int, g) -> tuple:
    """Some integer solution of g2*g3*v1 + g1*g3*v2 + g1*g2*v3 = m.

    v1 is solved modulo g1 (the coefficient g2*g3 is invertible there),
    then (v2, v3) from the remaining two-variable equation on the coprime
    pair (g3, g2). Components may be negative.
    """
    _check_pairwise_coprime(g)
    g1, g2, g3 = g
    A = g2 * g3
    v1 = m * pow(A, -1, g1) % g1 if g1 > 1 else 0
    m1 = (m - A * v1) // g1
    v2 = m1 * pow(g3, -1, g2) % g2 if g2 > 1 else 0
    v3 = (m1 - g3 * v2) // g2
    return (v1, v2, v3)


def count_positive_closed(m: int, g, particular=None) -> SolutionCount:
    """Exact number of positive solutions of g2*g3*x1 + g1*g3*x2 + g1*g2*x3 = m.

    With L = g1*g2*g3 and lam = m/L, the projected solutions with positive
    first two coordinates are q + N^2 where q lies in the half-open square
    (0,1]^2 (an integer v_i/g_i maps to 1, not 0). Counting points below
    the line z1 + z2 = lam gives C(t,2) with t = s+2, s the largest
    integer >= 0 with q1 + q2 + s < lam; the empty case reports t = 1.

    `particular` optionally supplies a precomputed solution of the equation;
    the result is independent of which one (q is a coset invariant).
    """
    _check_pairwise_coprime(g)
    if m < 1:
        raise ValueError(f"m must be positive, got {m}")
    g1, g2, g3 = g
    L = g1 * g2 * g3
    if particular is None:
        v1, v2, v3 = particular_solution(m, g)
    else:
        v1, v2, v3 = particular
        if g2 * g3 * v1 + g1 * g3 * v2 + g1 * g2 * v3 != m:
            raise ValueError(f"{particular} does not solve the equation for m={m}")
    # q_i = v_i/g_i reduced into (0,1], scaled by L: v1/g1 = v1*g2*g3 / L
    q1 = (v1 * g2 * g3 - 1) % L + 1
    q2 = (v2 * g1 * g3 - 1) % L + 1
    gap = m - q1 - q2  # L * (lam - q1 - q2)
    if gap <= 0:
        t = 1
        count = 0
    else:
        t = (gap - 1) // L + 2
        count = t * (t - 1) // 2
    r = Fraction(t * L - m, L)
    assert abs(r) <= 2, f"lattice shift bound violated: r={r} for m={m}, g={g}"
    return SolutionCount(count=count, t=t, r=r)


def count_positive_bruteforce(m: int, g, budget: int = 200_000_000) -> int:
    """Oracle: nested scan over x1, x2 with a divisibility check for x3."""
    _check_pairwise_coprime(g)
    g1, g2, g3 = g
    A, B, C = g2 * g3, g1 * g3, g1 * g2
    estimated = (m // A) * (m // B)
    if estimated > budget:
        raise ResourceLimitError(
            f"~{estimated} iterations exceed brute-force budget {budget}"
        )
    total = 0
    for x1 in range(1, (m - B - C) // A + 1):
        rest = m - A * x1
        hi = (rest - C) // B
        if hi < 1:
            continue
        remainder = rest - B * np.arange(1, hi + 1, dtype=np.int64)
        total += int(np.count_nonzero((remainder % C == 0) & (remainder >= C)))
    return total


def coprime_squarefree_triples(product_limit: int) -> list:
    """All ordered pairwise-coprime squarefree triples with g1*g2*g3 <= limit.

    Instance pool for randomized closed-vs-bruteforce comparisons.
    """
    from .arith import omega_and_squarefree_arrays, sieve_primes

    _, sf = omega_and_squarefree_arrays(sieve_primes(max(product_limit, 2)))
    triples = []
    for g1 in range(1, product_limit + 1):
        if not sf[g1]:
            continue
        for g2 in range(1, product_limit // g1 + 1):
            if not sf[g2] or math.gcd(g1, g2) != 1:
                continue
            for g3 in range(1, product_limit // (g1 * g2) + 1):
                if sf[g3] and math.gcd(g3, g1 * g2) == 1:
                    triples.append((g1, g2, g3))
    return triples


def count_S(a, n: int, table: PrimeTable | None = None) -> SolutionCount:
    """Number of positive solutions of a1*x1 + a2*x2 + a3*x3 = n for a
    squarefree triple a. Zero (t = 0, r = 0) when gcd(a1,a2,a3) does not
    divide n; otherwise the closed-form count on the reduced equation."""
    dec = decompose(a, table)
    if n % dec.d != 0:
        return SolutionCount(count=0, t=0, r=Fraction(0))
    return count_positive_closed(n // dec.d, dec.g)
