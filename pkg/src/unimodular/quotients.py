"""Structure of the quotients W/S, S/S_i and S/U_i.

``S_i`` is spanned by the ``v(i, j)`` and ``U_i`` by the ``u(i, j)``,
``j != i``; ``W`` is the lattice spanned by the rational vectors
``w(p, j)``.  Each quotient is available in closed form and, independently,
as the cokernel of a coordinate matrix computed through a certified basis
of S.  By default the closed forms are cross-checked against the latter.
"""

from collections import Counter
from dataclasses import dataclass
from math import gcd, prod
from typing import Dict, Sequence, Tuple

from .basis import BasisMatrix, build_basis
from .errors import InvariantViolation, NonIntegralSolution
from .matrix import IntMatrix, snf, solve_upper_triangular
from .ring import factorize, gcd_prefixes, p_part, prime_divisors, valuation
from .solution import Coefficients, u_vector, v_vector, validate_coefficients, w_coords


@dataclass(frozen=True)
class QuotientStructure:
    """``Z^free_rank + Z/f_1 + ... + Z/f_k`` with ``1 < f_1 | f_2 | ... | f_k``.

    Build instances with :meth:`from_diagonal` or
    :meth:`from_elementary_divisors`, which normalize any input.
    """

    free_rank: int = 0
    invariant_factors: Tuple[int, ...] = ()

    @classmethod
    def from_diagonal(cls, entries: Sequence[int], free_rank: int = 0) -> "QuotientStructure":
        """Structure of ``Z^free_rank + sum Z/e`` for arbitrary ``e``.

        Zeros add to the free rank, units vanish, and non-chain entries such
        as ``(3, 2)`` are regrouped (here into ``Z/6``).
        """
        ed: Dict[int, list] = {}
        for e in entries:
            if e == 0:
                free_rank += 1
                continue
            for p, k in factorize(e).items():
                ed.setdefault(p, []).append(p ** k)
        return cls.from_elementary_divisors(ed, free_rank)

    @classmethod
    def from_elementary_divisors(cls, ed: Dict[int, Sequence[int]], free_rank: int = 0) -> "QuotientStructure":
        columns = [sorted((q for q in qs if q != 1), reverse=True) for qs in ed.values()]
        length = max((len(col) for col in columns), default=0)
        factors = []
        for t in range(length):
            factors.append(prod(col[t] for col in columns if t < len(col)))
        return cls(free_rank, tuple(sorted(factors)))

    @property
    def elementary_divisors(self) -> Dict[int, Tuple[int, ...]]:
        """``{p: (p^k1, p^k2, ...)}`` sorted ascending per prime."""
        out: Dict[int, list] = {}
        for f in self.invariant_factors:
            for p, k in factorize(f).items():
                out.setdefault(p, []).append(p ** k)
        return {p: tuple(sorted(v)) for p, v in sorted(out.items())}

    @property
    def torsion_order(self) -> int:
        return prod(self.invariant_factors)

    @property
    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.invariant_factors

    def __str__(self) -> str:
        parts = [f"Z/{f}" for f in self.invariant_factors]
        if self.free_rank:
            parts.insert(0, "Z" if self.free_rank == 1 else f"Z^{self.free_rank}")
        return " + ".join(parts) if parts else "0"


def cokernel_structure(coords: IntMatrix) -> QuotientStructure:
    """Structure of ``Z^rows`` modulo the span of the columns of ``coords``."""
    res = snf(coords)
    return QuotientStructure.from_diagonal(res.invariant_factors, coords.rows - res.rank)


def _rotate(c: Coefficients, i: int) -> Coefficients:
    return c.permuted((i,) + tuple(k for k in range(1, c.n + 1) if k != i))


def _basis(c: Coefficients, basis: BasisMatrix = None) -> BasisMatrix:
    if basis is None:
        return build_basis(c)
    if basis.coefficients != c:
        raise ValueError("basis belongs to different coefficients")
    return basis


def _agree(name: str, closed: QuotientStructure, smith: QuotientStructure) -> QuotientStructure:
    if closed != smith:
        raise InvariantViolation(f"{name}: closed form {closed} but Smith form gives {smith}")
    return closed


# -- S / S_i ---------------------------------------------------------------

def S_mod_Si_closed(c, i: int) -> QuotientStructure:
    c = validate_coefficients(c)
    if c[i] == 0:
        return QuotientStructure(free_rank=c.n - 2)
    return QuotientStructure.from_diagonal([abs(c[i])] * (c.n - 2))


def S_mod_Si_smith(c, i: int, basis: BasisMatrix = None) -> QuotientStructure:
    c = validate_coefficients(c)
    bm = _basis(c, basis)
    gens = [v_vector(c, i, j) for j in range(1, c.n + 1) if j != i]
    return cokernel_structure(bm.coordinates(gens))


def quotient_S_mod_Si(c, i: int, check: bool = True) -> QuotientStructure:
    """``S / S_i``: ``(Z/|a_i|)^(n-2)``, or free of rank ``n - 2`` if ``a_i = 0``."""
    closed = S_mod_Si_closed(c, i)
    if check:
        _agree(f"S/S_{i}", closed, S_mod_Si_smith(c, i))
    return closed


# -- W / S -----------------------------------------------------------------

def W_mod_S_smith(c, pivot: int, basis: BasisMatrix = None) -> QuotientStructure:
    """Cokernel of the w-coordinate matrix of a basis of S, relative to ``pivot``."""
    c = validate_coefficients(c)
    bm = _basis(c, basis)
    W = IntMatrix.from_columns([w_coords(c, z, pivot) for z in bm.basis], c.n - 1)
    return cokernel_structure(W)


def quotient_W_mod_S(c, pivot: int = 1, check: bool = True) -> QuotientStructure:
    """``W / S``, cyclic of order ``|a_pivot|``."""
    c = validate_coefficients(c)
    if c[pivot] == 0:
        raise ValueError(f"pivot coefficient a_{pivot} is zero")
    closed = QuotientStructure.from_diagonal([abs(c[pivot])])
    if check:
        _agree("W/S", closed, W_mod_S_smith(c, pivot))
    return closed


# -- d-chain and S / U_i ---------------------------------------------------

def d_chain(c) -> Tuple[int, ...]:
    """``(d_2, ..., d_{n-1})`` with
    ``d_i = |a_1| (a_1..a_{i+1}) / ((a_1, a_{i+1}) (a_1..a_i))``.

    Depends on the order of ``a_2, ..., a_n``; every ``d_i`` divides ``a_1``.

    >>> d_chain((12, 4, 2, 3))
    (3, 2)
    """
    c = validate_coefficients(c)
    a = c.a
    if a[0] == 0:
        raise ValueError("d-chain needs a_1 != 0")
    if c.n <= 2:
        raise ValueError("d-chain needs n > 2")
    g = gcd_prefixes(a)
    a1 = abs(a[0])
    # i is 1-based: d_i uses prefixes g[i-1] = (a_1..a_i), g[i] = (a_1..a_{i+1})
    return tuple(a1 * g[i] // (gcd(a1, a[i]) * g[i - 1]) for i in range(2, c.n))


def p_elementary_divisors(c, p: int) -> Tuple[int, ...]:
    """``p``-elementary divisors of ``S/U_1`` via a ``p``-adapted ordering.

    Reorders ``a_2, ..., a_n`` by increasing ``p``-adic valuation (zero
    entries last), so that they form a divisibility chain locally at ``p``,
    and returns the nontrivial ``p``-parts of the resulting d-chain.
    """
    c = validate_coefficients(c)
    rest = sorted(
        c.a[1:], key=lambda x: (x == 0, valuation(x, p) if x else 0)
    )
    chain = d_chain(Coefficients((c.a[0],) + tuple(rest)))
    return tuple(sorted(q for q in (p_part(d, p) for d in chain) if q != 1))


def S_mod_Ui_closed(c, i: int) -> QuotientStructure:
    c = validate_coefficients(c)
    if c.n == 2:
        return QuotientStructure()
    if c[i] == 0:
        return QuotientStructure(free_rank=c.n - 2)
    return QuotientStructure.from_diagonal(d_chain(_rotate(c, i)))


def S_mod_Ui_localized(c, i: int) -> QuotientStructure:
    """Same structure assembled prime by prime from :func:`p_elementary_divisors`."""
    c = validate_coefficients(c)
    if c.n == 2:
        return QuotientStructure()
    if c[i] == 0:
        return QuotientStructure(free_rank=c.n - 2)
    r = _rotate(c, i)
    ed = {p: p_elementary_divisors(r, p) for p in prime_divisors(r.a[0])}
    return QuotientStructure.from_elementary_divisors(ed)


def S_mod_Ui_smith(c, i: int, basis: BasisMatrix = None) -> QuotientStructure:
    c = validate_coefficients(c)
    bm = _basis(c, basis)
    gens = [u_vector(c, i, j) for j in range(1, c.n + 1) if j != i]
    return cokernel_structure(bm.coordinates(gens))


def quotient_S_mod_Ui(c, i: int, check: bool = True) -> QuotientStructure:
    """``S / U_i``: elementary divisors are the prime-power parts of the
    d-chain of the coefficients with ``a_i`` moved to the front."""
    closed = S_mod_Ui_closed(c, i)
    if check:
        _agree(f"S/U_{i}", closed, S_mod_Ui_smith(c, i))
    return closed


def U_quotient_order(c, i: int = 1) -> int:
    """``|a_i|^(n-2) / prod_{j != i} (a_i, a_j)``, the order of ``S/U_i``."""
    c = validate_coefficients(c)
    ai = abs(c[i])
    den = prod(gcd(ai, c[j]) for j in range(1, c.n + 1) if j != i)
    q, r = divmod(ai ** (c.n - 2), den)
    if r:
        raise InvariantViolation("order of S/U_i is not an integer")
    return q


def S_equals_U_criterion(c, i: int = 1) -> bool:
    """``|a_i|^(n-2) == prod_{j != i} (a_i, a_j)``, equivalent to ``S == U_i``."""
    c = validate_coefficients(c)
    ai = abs(c[i])
    return ai ** (c.n - 2) == prod(gcd(ai, c[j]) for j in range(1, c.n + 1) if j != i)


# -- C = A^{-1} D ----------------------------------------------------------

def u_diagonal(c) -> IntMatrix:
    """w-coordinates of ``u(1, j)``: ``diag(a_1/(a_1,a_2), ..., a_1/(a_1,a_n))``."""
    c = validate_coefficients(c)
    a1 = c.a[0]
    return IntMatrix.diag([a1 // gcd(a1, aj) for aj in c.a[1:]])


def compute_C(c, A: IntMatrix = None) -> IntMatrix:
    """Coordinates of ``u(1, 2), ..., u(1, n)`` in the basis of S with
    coordinate matrix ``A`` (default: the one built with ``M = {1..n}``).

    ``C = A^{-1} D`` is upper triangular with diagonal
    ``(1, d_2, ..., d_{n-1})`` up to the sign of ``a_1``.
    """
    c = validate_coefficients(c)
    if c.a[0] == 0 or c.n <= 2:
        raise ValueError("C needs a_1 != 0 and n > 2")
    if A is None:
        A = build_basis(c, M=tuple(range(1, c.n + 1))).A
    try:
        return solve_upper_triangular(A, u_diagonal(c))
    except NonIntegralSolution as exc:
        raise InvariantViolation(f"A^-1 D is not integral: {exc}") from exc


def check_C_divisibility(C: IntMatrix) -> bool:
    """True iff ``gcd(C_ii, C_jj)`` divides ``C_ij`` for every ``i < j``."""
    if not C.is_upper_triangular():
        raise ValueError("C must be upper triangular")
    n = C.rows
    for i in range(n):
        for j in range(i + 1, n):
            g = gcd(C[i, i], C[j, j])
            if (C[i, j] != 0) if g == 0 else (C[i, j] % g != 0):
                return False
    return True


def p_part_permutation_check(c, perm: Sequence[int], p: int) -> bool:
    """Compare p-parts of the d-chain before and after reordering ``a_2..a_n``.

    ``perm`` lists the indices ``2..n`` in their new order.
    """
    c = validate_coefficients(c)
    if sorted(perm) != list(range(2, c.n + 1)):
        raise ValueError(f"{perm} is not a permutation of 2..{c.n}")
    other = c.permuted((1,) + tuple(perm))
    before = Counter(p_part(d, p) for d in d_chain(c))
    after = Counter(p_part(d, p) for d in d_chain(other))
    return before == after
