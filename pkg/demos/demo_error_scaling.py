#!/usr/bin/env python3
"""Walkthrough: how far the exact count sits from its main term.

The exact T3(n) tracks f(n) * n^2 / 2, where f(n) multiplies (1 - 1/p^2)
over primes dividing n and (1 - 3/q^2) over the rest. The gap should grow
no faster than about n^{3/2}; this scan prints the normalized gap
|T - M| / n^{3/2} so the flat trend is visible directly.
"""

from coprime_count import error_report, f_of_n, singular_constant

print("singular constant (all primes up to 10^6):", f"{singular_constant(10**6):.10f}")
print("f(30) =", f"{f_of_n(30):.10f}", " (30 = 2*3*5 boosts the density)")
print("f(31) =", f"{f_of_n(31):.10f}")

print("\n   n        T            M      |T-M|   |T-M|/n^1.5")
rows = error_report(100, 1500, 100)
for r in rows:
    print(
        f"{r.n:5d} {r.T:10d} {r.M:12.1f} {r.abs_err_M:10.1f}"
        f"   {r.abs_err_M / r.n**1.5:10.5f}"
    )

worst = max(r.abs_err_M / r.n**1.5 for r in rows)
print(f"\nmax normalized gap over the scan: {worst:.5f}")
