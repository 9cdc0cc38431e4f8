"""Seeded random unimodular coefficient vectors for property checks."""

import random
from math import gcd
from typing import List

from .solution import Coefficients

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13)


def _smooth(rng: random.Random, max_coeff: int) -> int:
    # products of small primes share factors often, which exercises the
    # nontrivial branches (non-unit d-chains, long gcd chains)
    x = 1
    for _ in range(rng.randint(0, 8)):
        p = rng.choice(_SMALL_PRIMES)
        if x * p > max_coeff:
            break
        x *= p
    return x


def random_coefficients(rng: random.Random, n: int, max_coeff: int = 10 ** 6) -> Coefficients:
    """A random unimodular vector of length ``n`` with ``|a_i| <= max_coeff``.

    Entries come from a mix of uniform draws, smooth numbers and zeros;
    draws are repeated until the gcd is 1.
    """
    if n < 2:
        raise ValueError("n must be at least 2")
    while True:
        mode = rng.random()
        a = []
        for _ in range(n):
            r = rng.random()
            if r < 0.05:
                x = 0
            elif mode < 0.4 and r < 0.6:
                x = rng.randint(1, max_coeff)
            else:
                x = _smooth(rng, max_coeff)
            if rng.random() < 0.3:
                x = -x
            a.append(x)
        g = 0
        for x in a:
            g = gcd(g, x)
        if g == 1:
            return Coefficients(tuple(a))


def corpus(seed: int, count: int, min_n: int = 2, max_n: int = 6, max_coeff: int = 10 ** 6) -> List[Coefficients]:
    rng = random.Random(seed)
    return [random_coefficients(rng, rng.randint(min_n, max_n), max_coeff) for _ in range(count)]
