"""The solution module S of ``a_1 X_1 + ... + a_n X_n = 0`` and its generators.

Indices in this module's public API are 1-based, matching the usual
notation ``v(i, j)``, ``u(i, j)``, ``w(p, j)``.  Solution vectors are plain
tuples of ints.
"""

from dataclasses import dataclass
from itertools import combinations
from math import gcd
from typing import List, Sequence, Tuple

from .errors import NotUnimodular, TooShort
from .ring import gcd_prefixes

Vector = Tuple[int, ...]


@dataclass(frozen=True)
class Coefficients:
    """A validated unimodular coefficient vector (gcd of entries is 1)."""

    a: Tuple[int, ...]

    def __post_init__(self):
        a = tuple(int(x) for x in self.a)
        object.__setattr__(self, "a", a)
        if len(a) < 2:
            raise TooShort(f"need at least 2 coefficients, got {len(a)}")
        g = gcd_prefixes(a)[-1]
        if g != 1:
            raise NotUnimodular(f"gcd{a} = {g}, not 1")

    @property
    def n(self) -> int:
        return len(self.a)

    def __getitem__(self, i: int) -> int:
        """1-based access: ``c[1]`` is the first coefficient."""
        if not 1 <= i <= len(self.a):
            raise IndexError(i)
        return self.a[i - 1]

    def __iter__(self):
        return iter(self.a)

    def __len__(self):
        return len(self.a)

    def permuted(self, order: Sequence[int]) -> "Coefficients":
        """Coefficients in the order ``order`` (a permutation of 1..n)."""
        return Coefficients(tuple(self[i] for i in order))


def validate_coefficients(a: Sequence[int]) -> Coefficients:
    """Raise :class:`TooShort` or :class:`NotUnimodular`, else wrap ``a``."""
    return a if isinstance(a, Coefficients) else Coefficients(tuple(a))


def dot(c: Coefficients, x: Sequence[int]) -> int:
    return sum(ai * xi for ai, xi in zip(c.a, x))


def is_solution(c: Coefficients, x: Sequence[int]) -> bool:
    return len(x) == c.n and dot(c, x) == 0


def _check_pair(c: Coefficients, i: int, j: int):
    if i == j:
        raise ValueError("v(i, j) needs distinct indices")
    for k in (i, j):
        if not 1 <= k <= c.n:
            raise IndexError(k)


def v_vector(c: Coefficients, i: int, j: int) -> Vector:
    """``-a_j`` in slot ``i``, ``a_i`` in slot ``j``, zero elsewhere."""
    _check_pair(c, i, j)
    x = [0] * c.n
    x[i - 1] = -c[j]
    x[j - 1] = c[i]
    return tuple(x)


def u_vector(c: Coefficients, i: int, j: int) -> Vector:
    """``v(i, j) / gcd(a_i, a_j)``; equal to ``v(i, j)`` (the zero vector)
    when ``a_i = a_j = 0``."""
    v = v_vector(c, i, j)
    g = gcd(c[i], c[j])
    if g == 0:
        return v
    return tuple(x // g for x in v)


def w_coords(c: Coefficients, s: Sequence[int], pivot: int) -> Vector:
    """Coordinates of ``s`` relative to ``w(pivot, j)``, ``j != pivot``.

    Since ``w(p, j)`` has a 1 in slot ``j`` and zeros in every other
    non-pivot slot, these are just the entries of ``s`` with the pivot
    entry removed.
    """
    if c[pivot] == 0:
        raise ValueError(f"pivot coefficient a_{pivot} is zero")
    if len(s) != c.n:
        raise ValueError("vector length mismatch")
    return tuple(x for k, x in enumerate(s, 1) if k != pivot)


def from_w_coords(c: Coefficients, alpha: Sequence[int], pivot: int) -> Vector:
    """Inverse of :func:`w_coords` on S.

    Raises ``ValueError`` if the combination is not an integral vector,
    i.e. ``sum(a_j alpha_j)`` is not divisible by ``a_pivot``.
    """
    ap = c[pivot]
    if ap == 0:
        raise ValueError(f"pivot coefficient a_{pivot} is zero")
    if len(alpha) != c.n - 1:
        raise ValueError("expected n - 1 coordinates")
    others = [k for k in range(1, c.n + 1) if k != pivot]
    total = sum(c[k] * al for k, al in zip(others, alpha))
    head, rem = divmod(-total, ap)
    if rem:
        raise ValueError("w-combination is not integral, so not in S")
    x = [0] * c.n
    x[pivot - 1] = head
    for k, al in zip(others, alpha):
        x[k - 1] = al
    return tuple(x)


def choose_M(c: Coefficients, strategy: str = "greedy-minimal") -> Tuple[int, ...]:
    """A sorted index set M whose coefficients are coprime.

    ``"all"`` returns every index.  ``"greedy-minimal"`` scans left to right
    keeping each index that lowers the running gcd, stops at 1, then drops
    any index whose removal still leaves gcd 1.  The result always contains
    an index with nonzero coefficient.
    """
    n = c.n
    if strategy == "all":
        return tuple(range(1, n + 1))
    if strategy != "greedy-minimal":
        raise ValueError(f"unknown strategy {strategy!r}")
    chosen = []
    g = 0
    for i in range(1, n + 1):
        h = gcd(g, c[i])
        if h != g:
            chosen.append(i)
            g = h
        if g == 1:
            break
    for i in list(chosen):
        rest = [k for k in chosen if k != i]
        if rest and gcd_prefixes([c[k] for k in rest])[-1] == 1:
            chosen = rest
    return tuple(sorted(chosen))


def spanning_set(c: Coefficients, M: Sequence[int]) -> List[Vector]:
    """``B_M``: all ``v(i, j)`` with ``i < j`` and ``{i, j}`` meeting ``M``,
    in lexicographic order of ``(i, j)``."""
    Ms = set(M)
    return [
        v_vector(c, i, j)
        for i, j in combinations(range(1, c.n + 1), 2)
        if i in Ms or j in Ms
    ]


def pivot_of(c: Coefficients, M: Sequence[int]) -> int:
    """Smallest index of ``M`` with a nonzero coefficient."""
    for i in sorted(M):
        if c[i] != 0:
            return i
    raise ValueError("M has no index with nonzero coefficient")
