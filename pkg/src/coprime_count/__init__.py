"""Exact and asymptotic counting of pairwise-coprime 3-part compositions."""

from .arith import (
    Factorization,
    PrimeTable,
    ResourceLimitError,
    euler_phi,
    factorize,
    gcd,
    is_squarefree,
    lcm,
    omega,
    primes_upto,
    sieve_primes,
    squarefree_divisors,
    triple_lcm,
)
from .asymptotic import ErrorRow, error_report, f_of_n, main_term_finite, singular_constant
from .counter import (
    CountResult,
    count_T2_oracle,
    count_T3_mobius,
    count_T3_oracle,
    scan,
    term_coefficient,
)
from .diophantine import (
    SolutionCount,
    TripleDecomposition,
    count_positive_bruteforce,
    count_positive_closed,
    count_S,
    decompose,
    particular_solution,
)
from .poset import (
    BOTTOM,
    PosetElement,
    element_from_triple,
    enumerate_poset,
    join,
    leq,
    mobius_closed,
    mobius_recursive,
)

__all__ = [
    "BOTTOM",
    "CountResult",
    "ErrorRow",
    "Factorization",
    "PosetElement",
    "PrimeTable",
    "ResourceLimitError",
    "SolutionCount",
    "TripleDecomposition",
    "count_positive_bruteforce",
    "count_positive_closed",
    "count_S",
    "count_T2_oracle",
    "count_T3_mobius",
    "count_T3_oracle",
    "decompose",
    "element_from_triple",
    "enumerate_poset",
    "error_report",
    "euler_phi",
    "f_of_n",
    "factorize",
    "gcd",
    "is_squarefree",
    "join",
    "lcm",
    "leq",
    "main_term_finite",
    "mobius_closed",
    "mobius_recursive",
    "omega",
    "particular_solution",
    "primes_upto",
    "scan",
    "sieve_primes",
    "singular_constant",
    "squarefree_divisors",
    "term_coefficient",
    "triple_lcm",
]

__version__ = "0.1.0"
