"""The lattice of squarefree triples generated by (p,p,1), (p,1,p), (1,p,p)
under componentwise lcm, and its Mobius function.

Elements are stored sparsely as prime -> 3-bit mask, bit i set iff the prime
divides component i. Each prime's local poset has five elements
(masks 000, 011, 101, 110, 111); a mask with exactly one bit set never
occurs because the generators touch two or three components and bitwise OR
preserves that.

The Mobius function from the bottom element is computed two ways: by the
generic recursion over intervals, and by the closed-form product
(-1)^(kappa-1) * (kappa-1) over primes, where kappa is the mask popcount.
"""

import itertools
from dataclasses import dataclass

from .arith import PrimeTable, ResourceLimitError, factorize

# masks with popcount 2 or 3; popcount 1 is unreachable from the generators
VALID_MASKS = (0b011, 0b101, 0b110, 0b111)
LOCAL_MASKS = (0b000,) + VALID_MASKS  # the five local elements at one prime


@dataclass(frozen=True)
class PosetElement:
    """A triple of squarefree integers, as sparse prime -> mask pairs.

    assignment is a tuple of (prime, mask) sorted by prime, mask != 0.
    """

    assignment: tuple

    def __post_init__(self):
        seen = 0
        for p, mask in self.assignment:
            if mask not in VALID_MASKS:
                raise ValueError(f"invalid local mask {mask:03b} at prime {p}")
            if p <= seen:
                raise ValueError("primes must be strictly ascending and distinct")
            seen = p

    @classmethod
    def from_masks(cls, masks: dict) -> "PosetElement":
        items = tuple(sorted((p, m) for p, m in masks.items() if m != 0))
        return cls(items)

    def mask(self, p: int) -> int:
        for q, m in self.assignment:
            if q == p:
                return m
        return 0

    @property
    def primes(self) -> tuple:
        return tuple(p for p, _ in self.assignment)

    def kappa(self) -> dict:
        """kappa_p = number of components divisible by p, per stored prime."""
        return {p: bin(m).count("1") for p, m in self.assignment}

    def to_triple(self) -> tuple:
        a = [1, 1, 1]
        for p, m in self.assignment:
            for i in range(3):
                if m >> i & 1:
                    a[i] *= p
        return tuple(a)


BOTTOM = PosetElement(())


def element_from_triple(a, table: PrimeTable | None = None) -> PosetElement:
    """Inverse of to_triple for squarefree triples with kappa_p in {0,2,3}."""
    masks = {}
    for i, component in enumerate(a):
        for p, e in factorize(component, table).factors:
            if e > 1:
                raise ValueError(f"component {component} is not squarefree")
            masks[p] = masks.get(p, 0) | (1 << i)
    return PosetElement.from_masks(masks)


def leq(x: PosetElement, y: PosetElement) -> bool:
    """Componentwise divisibility: every mask of x is a submask of y's."""
    ymask = dict(y.assignment)
    for p, m in x.assignment:
        if m & ~ymask.get(p, 0):
            return False
    return True


def join(x: PosetElement, y: PosetElement) -> PosetElement:
    """Componentwise lcm = per-prime bitwise OR."""
    masks = dict(x.assignment)
    for p, m in y.assignment:
        masks[p] = masks.get(p, 0) | m
    return PosetElement.from_masks(masks)


def enumerate_poset(primes) -> list:
    """All elements over the given prime set: 5^|primes| of them."""
    primes = tuple(sorted(primes))
    if len(primes) > 8:
        raise ResourceLimitError(
            f"{len(primes)} primes would give 5^{len(primes)} elements; cap is 8"
        )
    elements = []
    for masks in itertools.product(LOCAL_MASKS, repeat=len(primes)):
        elements.append(
            PosetElement(tuple((p, m) for p, m in zip(primes, masks) if m))
        )
    return elements


def mobius_recursive(x: PosetElement, y: PosetElement, poset) -> int:
    """mu(x, y) by the defining recursion, memoized over the interval [x, y].

    mu(x, x) = 1 and mu(x, c) = -sum of mu(x, b) over x <= b < c.
    `poset` must contain every element of the interval (e.g. the output of
    enumerate_poset over a prime set covering x and y).
    """
    if not leq(x, y):
        raise ValueError("mobius_recursive requires x <= y")
    interval = [b for b in poset if leq(x, b) and leq(b, y)]
    # rank = total popcount; b < c implies rank(b) < rank(c)
    interval.sort(key=lambda e: sum(bin(m).count("1") for _, m in e.assignment))
    mu = {}
    for c in interval:
        if c == x:
            mu[c] = 1
        else:
            mu[c] = -sum(mu[b] for b in interval if b in mu and b != c and leq(b, c))
    return mu[y]


def mobius_closed(x: PosetElement) -> int:
    """mu(bottom, x) in closed form: product over stored primes of
    (-1)^(kappa-1) * (kappa-1), i.e. -1 per kappa=2 prime, 2 per kappa=3."""
    result = 1
    for _, m in x.assignment:
        k = bin(m).count("1")
        result *= (-1) ** (k - 1) * (k - 1)
    return result
