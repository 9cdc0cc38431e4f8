"""Independent verification routes.

Nothing here uses the direct basis construction: the oracle basis comes
from an extended-gcd sweep, module equality from Hermite forms, quotient
structure from rational coordinate solves plus Smith forms, and
:func:`enumerate_box` scans the box directly.
"""

from itertools import combinations, product
from typing import List, Sequence, Tuple

from .errors import BudgetExceeded, ContainmentViolation, NonIntegralSolution
from .matrix import HnfResult, IntMatrix, det_exact, hnf, solve_exact
from .quotients import QuotientStructure, cokernel_structure
from .ring import xgcd
from .solution import Vector, validate_coefficients

DEFAULT_BUDGET = 10 ** 6


def gcd_transform(a: Sequence[int]) -> IntMatrix:
    """Unimodular ``E`` with ``E @ a == (gcd(a), 0, ..., 0)``.

    Sweeps bottom-up, folding each entry into its upper neighbour with a
    2x2 Bezout block of determinant 1.
    """
    n = len(a)
    E = IntMatrix.identity(n).tolist()
    col = list(a)
    for k in range(n - 1, 0, -1):
        x, y = col[k - 1], col[k]
        if y == 0:
            continue
        g, s, t = xgcd(x, y)
        xg, yg = x // g, y // g
        top = [s * p + t * q for p, q in zip(E[k - 1], E[k])]
        bottom = [xg * q - yg * p for p, q in zip(E[k - 1], E[k])]
        E[k - 1], E[k] = top, bottom
        col[k - 1], col[k] = g, 0
    if col[0] < 0:
        E[0] = [-v for v in E[0]]
    return IntMatrix(E, n)


def oracle_basis(c) -> List[Vector]:
    """Rows ``2..n`` of the gcd transform of ``a``: a basis of S."""
    c = validate_coefficients(c)
    E = gcd_transform(c.a)
    return [E.row(i) for i in range(1, c.n)]


class ModuleSpan:
    """Integer span of a list of vectors in ``Z^ambient_dim``."""

    __slots__ = ("ambient_dim", "generators", "_canonical")

    def __init__(self, generators: Sequence[Sequence[int]], ambient_dim: int = None):
        gens = tuple(tuple(int(x) for x in g) for g in generators)
        if ambient_dim is None:
            if not gens:
                raise ValueError("ambient_dim needed for an empty generator list")
            ambient_dim = len(gens[0])
        if any(len(g) != ambient_dim for g in gens):
            raise ValueError("generator length mismatch")
        self.ambient_dim = ambient_dim
        self.generators = gens
        self._canonical = None

    @property
    def canonical_form(self) -> HnfResult:
        if self._canonical is None:
            self._canonical = hnf(IntMatrix.from_columns(self.generators, self.ambient_dim))
        return self._canonical

    @property
    def rank(self) -> int:
        return self.canonical_form.rank

    def __contains__(self, vec) -> bool:
        return self == ModuleSpan(self.generators + (tuple(vec),), self.ambient_dim)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ModuleSpan):
            return NotImplemented
        return modules_equal(self, other)

    def __repr__(self) -> str:
        return f"ModuleSpan({list(self.generators)!r}, ambient_dim={self.ambient_dim})"


def modules_equal(x: ModuleSpan, y: ModuleSpan) -> bool:
    if x.ambient_dim != y.ambient_dim:
        raise ValueError(f"ambient dimensions differ: {x.ambient_dim} vs {y.ambient_dim}")
    return x.canonical_form.lattice_basis == y.canonical_form.lattice_basis


def quotient_from_generators(
    basis_of_big: Sequence[Sequence[int]], gens_of_small: Sequence[Sequence[int]]
) -> QuotientStructure:
    """Structure of ``big / small`` from a basis of ``big`` and generators of ``small``.

    Raises :class:`ContainmentViolation` if some generator of ``small`` has
    no integral coordinates in the basis of ``big``.
    """
    if not basis_of_big:
        if any(any(g) for g in gens_of_small):
            raise ContainmentViolation("nonzero generator in the zero module")
        return QuotientStructure()
    dim = len(basis_of_big[0])
    B = IntMatrix.from_columns(basis_of_big, dim)
    k = len(basis_of_big)
    if not gens_of_small:
        return QuotientStructure(free_rank=k)
    G = IntMatrix.from_columns(gens_of_small, dim)
    try:
        coords = solve_exact(B, G)
    except NonIntegralSolution as exc:
        raise ContainmentViolation(str(exc)) from exc
    return cokernel_structure(coords)


def enumerate_box(c, bound: int, budget: int = DEFAULT_BUDGET) -> List[Vector]:
    """All solutions with every ``|x_i| <= bound``, sorted.

    Scans all values of the coordinates other than a pivot (a nonzero
    coefficient) and solves for the pivot entry.
    """
    c = validate_coefficients(c)
    if bound < 0:
        raise ValueError("bound must be nonnegative")
    n = c.n
    cost = n * (2 * bound + 1) ** (n - 1)
    if cost > budget:
        raise BudgetExceeded(f"{cost} candidate operations exceed budget {budget}")
    p = next(k for k in range(n) if c.a[k] != 0)
    ap = c.a[p]
    others = [k for k in range(n) if k != p]
    rng = range(-bound, bound + 1)
    out = []
    for free in product(rng, repeat=n - 1):
        s = sum(c.a[k] * v for k, v in zip(others, free))
        head, rem = divmod(-s, ap)
        if rem or abs(head) > bound:
            continue
        x = [0] * n
        x[p] = head
        for k, v in zip(others, free):
            x[k] = v
        out.append(tuple(x))
    return sorted(out)


def box_restriction(basis: Sequence[Sequence[int]], bound: int) -> List[Vector]:
    """Points of the integer span of ``basis`` inside ``[-bound, bound]^n``, sorted.

    ``basis`` must be linearly independent.  Picks ``k = len(basis)`` rows
    on which the basis is invertible, runs those coordinates over the box,
    recovers the combination coefficients with the integer adjugate, and
    keeps the integral combinations whose other entries also fit.
    """
    basis = [tuple(b) for b in basis]
    n, k = len(basis[0]), len(basis)
    B = IntMatrix.from_columns(basis, n)
    cols = range(k)
    rows = next((r for r in combinations(range(n), k) if det_exact(B.submatrix(r, cols))), None)
    if rows is None:
        raise ValueError("basis vectors are linearly dependent")
    sub = B.submatrix(rows, cols)
    det = det_exact(sub)
    adj = _adjugate(sub)
    out = []
    for y in product(range(-bound, bound + 1), repeat=k):
        lam = []
        for arow in adj:
            q, r = divmod(sum(s * t for s, t in zip(arow, y)), det)
            if r:
                break
            lam.append(q)
        else:
            x = B.apply(lam)
            if all(abs(v) <= bound for v in x):
                out.append(x)
    return sorted(out)


def _adjugate(M: IntMatrix) -> List[List[int]]:
    k = M.rows
    if k == 1:
        return [[1]]
    return [
        [
            (-1) ** (i + j) * det_exact(
                M.submatrix([r for r in range(k) if r != j], [s for s in range(k) if s != i])
            )
            for j in range(k)
        ]
        for i in range(k)
    ]


def is_in_span(basis: Sequence[Sequence[int]], x: Sequence[int]) -> bool:
    B = IntMatrix.from_columns(basis, len(x))
    try:
        solve_exact(B, IntMatrix([[v] for v in x], 1))
    except NonIntegralSolution:
        return False
    return True
