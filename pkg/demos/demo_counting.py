#!/usr/bin/env python3
"""Walkthrough: the three routes to T3(n) agree.

T3(n) counts ordered triples of positive integers summing to n with all
three pairwise gcds equal to 1. We compute it by brute force, by the
signed triple sum, and (approximately) by the density main term, and show
how the individual Diophantine terms come together for one small n.
"""

import math

from coprime_count import (
    count_S,
    count_T3_mobius,
    count_T3_oracle,
    main_term_finite,
    squarefree_divisors,
    term_coefficient,
)
from coprime_count.diophantine import coprime_squarefree_triples

N = 30

print(f"== exact counts for n = {N} ==")
oracle = count_T3_oracle(N)
mobius = count_T3_mobius(N)
print(f"brute force : T3({N}) = {oracle.T}  ({oracle.terms_evaluated} pairs scanned)")
print(f"signed sum  : T3({N}) = {mobius.T}  ({mobius.terms_evaluated} terms)")
print(f"main term   : {main_term_finite(N):.3f}")

print(f"\n== the signed sum, term by term (n = 12) ==")
n = 12
total = 0
for d in squarefree_divisors(n):
    m = n // d
    for g in coprime_squarefree_triples(m):
        g1, g2, g3 = g
        if d * (g2 * g3 + g1 * g3 + g1 * g2) > n:
            continue
        if math.gcd(d, g1 * g2 * g3) != 1:
            continue
        a = (d * g2 * g3, d * g1 * g3, d * g1 * g2)
        coeff = term_coefficient(d, g)
        S = count_S(a, n).count
        if S:
            total += coeff * S
            print(f"  a = {str(a):>12}  coeff = {coeff:+d}  S(a) = {S:3d}  -> {coeff * S:+d}")
print(f"total = {total}   (oracle: {count_T3_oracle(n).T})")

print("\n== small table ==")
print(" n  T3(n)")
for n in range(3, 21):
    print(f"{n:2d}  {count_T3_mobius(n).T:5d}")
