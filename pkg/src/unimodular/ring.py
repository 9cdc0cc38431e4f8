"""Euclidean-domain primitives over the integers.

Python integers are arbitrary precision, so nothing here can overflow.
All gcds are normalized nonnegative and ``gcd(0, 0) == 0``.
"""

from math import gcd
from typing import List, Sequence, Tuple

from sympy import factorint, isprime

from .errors import Unsolvable


def xgcd(a: int, b: int) -> Tuple[int, int, int]:
    """Return ``(g, x, y)`` with ``x*a + y*b == g == gcd(a, b) >= 0``."""
    x, next_x = 1, 0
    y, next_y = 0, 1
    g, next_g = a, b
    while next_g:
        q = g // next_g
        x, next_x = next_x, x - q * next_x
        y, next_y = next_y, y - q * next_y
        g, next_g = next_g, g - q * next_g
    if g < 0:
        g, x, y = -g, -x, -y
    return g, x, y


def gcd_prefixes(a: Sequence[int]) -> Tuple[int, ...]:
    """Running gcds: entry ``i`` is ``gcd(a[0], ..., a[i])``.

    >>> gcd_prefixes((12, 4, 2, 3))
    (12, 4, 2, 1)
    """
    if not a:
        raise ValueError("gcd_prefixes needs at least one entry")
    out = []
    g = 0
    for x in a:
        g = gcd(g, x)
        out.append(g)
    return tuple(out)


def xgcd_multi(a: Sequence[int]) -> Tuple[int, List[int]]:
    """Bezout witness for a list: ``(g, c)`` with ``sum(c[i]*a[i]) == g``.

    ``g`` is the nonnegative gcd of all entries.  For an all-zero input the
    witness is the zero vector.
    """
    if not a:
        raise ValueError("xgcd_multi needs at least one entry")
    g = 0
    coeffs: List[int] = []
    for x in a:
        g, s, t = xgcd(g, x)
        coeffs = [s * c for c in coeffs]
        coeffs.append(t)
    if g == 0:
        coeffs = [0] * len(a)
    return g, coeffs


def solve_linear_congruence(coeffs: Sequence[int], target: int, modulus: int) -> List[int]:
    """Find ``t`` with ``sum(coeffs[i]*t[i]) == target (mod modulus)``.

    Entries of the answer lie in ``[0, |modulus|)``.  Raises
    :class:`Unsolvable` when ``gcd(coeffs, modulus)`` does not divide
    ``target``.
    """
    if modulus == 0:
        raise ValueError("modulus must be nonzero")
    m = abs(modulus)
    g, c = xgcd_multi(list(coeffs) + [m])
    if target % g:
        raise Unsolvable(
            f"gcd({', '.join(map(str, coeffs))}, {m}) = {g} does not divide {target}"
        )
    k = target // g
    return [(ci * k) % m for ci in c[:-1]]


def p_part(x: int, p: int) -> int:
    """Largest power of ``p`` dividing ``x``; ``p_part(720, 3) == 9``."""
    if x == 0:
        raise ValueError("p-part of 0 is undefined")
    if p < 2:
        raise ValueError(f"{p} is not a prime")
    q = 1
    x = abs(x)
    while x % p == 0:
        x //= p
        q *= p
    return q


def valuation(x: int, p: int) -> int:
    """Exponent of ``p`` in ``x``; ``x`` must be nonzero."""
    if x == 0:
        raise ValueError("valuation of 0 is undefined")
    k = 0
    x = abs(x)
    while x % p == 0:
        x //= p
        k += 1
    return k


def factorize(x: int) -> dict:
    """Prime factorization of ``|x|`` as ``{prime: exponent}`` (empty for units)."""
    if x == 0:
        raise ValueError("cannot factor 0")
    return {int(p): int(e) for p, e in factorint(abs(x)).items()}


def prime_divisors(x: int) -> List[int]:
    return sorted(factorize(x))


def is_prime(p: int) -> bool:
    return bool(isprime(p))
