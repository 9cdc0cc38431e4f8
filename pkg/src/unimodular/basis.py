"""Direct construction of a basis of S from the coefficients.

After reordering so that the chosen coprime index set M comes first (with
a nonzero pivot coefficient ``a_1`` at the front), the basis vectors
``z_2, ..., z_n`` are given by the columns of an upper triangular matrix

    A = [[X, Y],
         [0, I]]

of coordinates relative to ``w(1, 2), ..., w(1, n)``, where
``w(1, j) = e_j - (a_j / a_1) e_1``.  The diagonal of ``X`` telescopes to
``a_1``, which together with membership in S certifies the basis.
"""

from dataclasses import dataclass
from typing import List, Sequence, Tuple

from .errors import BasisRejected, InvariantViolation, Unsolvable
from .matrix import IntMatrix, det_exact, solve_upper_triangular
from .ring import gcd_prefixes, solve_linear_congruence
from .solution import (
    Coefficients,
    Vector,
    choose_M,
    is_solution,
    pivot_of,
    v_vector,
    validate_coefficients,
    w_coords,
)


@dataclass(frozen=True)
class BasisMatrix:
    """A basis of S together with its coordinate matrix.

    ``order`` is the index permutation used internally: ``order[0]`` is the
    pivot, followed by the rest of ``M`` and then the complement of ``M``.
    ``A`` (and its blocks ``X``, ``Y``) is expressed in that order, i.e.
    column ``k`` of ``A`` holds the coordinates of ``basis[k]`` relative to
    ``w(order[0], order[1]), ..., w(order[0], order[n-1])``.  ``basis``
    itself is in the caller's original coordinates.
    """

    coefficients: Coefficients
    M: Tuple[int, ...]
    order: Tuple[int, ...]
    A: IntMatrix
    X: IntMatrix
    Y: IntMatrix
    basis: Tuple[Vector, ...]

    @property
    def pivot(self) -> int:
        return self.order[0]

    @property
    def m(self) -> int:
        return len(self.M)

    def permuted_coefficients(self) -> Tuple[int, ...]:
        return tuple(self.coefficients[i] for i in self.order)

    def w_coordinates(self, x: Sequence[int]) -> Vector:
        """w-coordinates of ``x`` in this basis' internal order."""
        return tuple(x[i - 1] for i in self.order[1:])

    def coordinates(self, vectors: Sequence[Sequence[int]]) -> IntMatrix:
        """Columns of the result are the coordinates of ``vectors`` in the basis.

        Raises :class:`~unimodular.errors.NonIntegralSolution` if some vector
        is not in S.
        """
        n = self.coefficients.n
        if not vectors:
            return IntMatrix.zeros(n - 1, 0)
        for x in vectors:
            if not is_solution(self.coefficients, x):
                raise ValueError(f"{tuple(x)} is not a solution")
        W = IntMatrix.from_columns([self.w_coordinates(x) for x in vectors], n - 1)
        return solve_upper_triangular(self.A, W)


@dataclass(frozen=True)
class CertifiedBasis:
    """Output of :func:`verify_basis`; ``det`` is the signed determinant of
    the w-coordinate matrix (whose absolute value equals ``|a_pivot|``)."""

    vectors: Tuple[Vector, ...]
    pivot: int
    det: int


def validate_M(c: Coefficients, M: Sequence[int]) -> Tuple[int, ...]:
    M = tuple(sorted(set(M)))
    if not M or not all(1 <= i <= c.n for i in M):
        raise ValueError(f"bad index set {M}")
    if gcd_prefixes([c[i] for i in M])[-1] != 1:
        raise ValueError(f"coefficients indexed by {M} are not coprime")
    return M


def _diagonal(b: Sequence[int], m: int) -> List[int]:
    # g_1 keeps the sign of a_1 so that the product telescopes to a_1 exactly
    g = list(gcd_prefixes(b[:m]))
    g[0] = b[0]
    return [g[k] // g[k + 1] for k in range(m - 1)]


def _solve_column(b: Sequence[int], last: int, target: int) -> List[int]:
    """Solve ``b[1]*t_1 + ... + b[last]*t_last == target (mod b[0])``.

    Tries the last slot alone first and only spreads across earlier slots
    when that single congruence is unsolvable.
    """
    a1 = b[0]
    try:
        t = solve_linear_congruence([b[last]], target, a1)
        return [0] * (last - 1) + t
    except Unsolvable:
        pass
    try:
        return solve_linear_congruence(b[1:last + 1], target, a1)
    except Unsolvable as exc:
        raise InvariantViolation(f"basis congruence unsolvable: {exc}") from exc


def _general_blocks(b: Sequence[int], m: int):
    """``X`` and ``Y`` for coefficients already in pivot-first order, ``m >= 2``."""
    n = len(b)
    diag = _diagonal(b, m)
    X = [[0] * (m - 1) for _ in range(m - 1)]
    for i in range(m - 1):
        X[i][i] = diag[i]
        if i:
            # column i covers w-slots 2..i+2; slot i+2 is pinned to diag[i]
            col = _solve_column(b, i, -b[i + 1] * diag[i])
            for k, t in enumerate(col):
                X[k][i] = t
    Y = [[0] * (n - m) for _ in range(m - 1)]
    for j in range(n - m):
        col = _solve_column(b, m - 1, -b[m + j])
        for k, t in enumerate(col):
            Y[k][j] = t
    return X, Y


def _two_index_blocks(b: Sequence[int]):
    """Closed formula for ``m == 2``: ``z_2 = a_1 w(1,2)``,
    ``z_j = c_j w(1,2) + w(1,j)`` with ``c_j = -a_j * a_2^{-1} mod a_1``."""
    a1, a2 = b[0], b[1]
    inv = solve_linear_congruence([a2], 1, a1)[0]
    X = [[a1]]
    Y = [[(-aj * inv) % abs(a1) for aj in b[2:]]]
    return X, Y


def _assemble(b, m, X, Y) -> List[List[int]]:
    n = len(b)
    A = [[0] * (n - 1) for _ in range(n - 1)]
    for i in range(m - 1):
        for j in range(m - 1):
            A[i][j] = X[i][j]
        for j in range(n - m):
            A[i][m - 1 + j] = Y[i][j]
    for k in range(m - 1, n - 1):
        A[k][k] = 1
    return A


def build_basis(
    c, M: Sequence[int] = None, strategy: str = "greedy-minimal", pivot: int = None
) -> BasisMatrix:
    """Basis ``z_2, ..., z_n`` of S built directly from the coefficients.

    ``M`` defaults to ``choose_M(c, strategy)``.  The pivot is the smallest
    index of ``M`` with a nonzero coefficient unless ``pivot`` is given, in
    which case it is added to ``M`` if missing.

    >>> bm = build_basis((12, 4, 2, 3), M=(1, 2, 3, 4))
    >>> bm.X.diagonal()
    (3, 2, 2)
    """
    c = validate_coefficients(c)
    n = c.n
    M = choose_M(c, strategy) if M is None else validate_M(c, M)
    if pivot is None:
        p = pivot_of(c, M)
    else:
        if c[pivot] == 0:
            raise ValueError(f"pivot coefficient a_{pivot} is zero")
        p = pivot
        M = tuple(sorted(set(M) | {p}))
    order = (p,) + tuple(i for i in M if i != p) + tuple(i for i in range(1, n + 1) if i not in M)
    b = [c[i] for i in order]
    m = len(M)
    a1 = b[0]

    if m == 1:
        # a_1 is a unit and v(1, j) = a_1 w(1, j) already form a basis
        X, Y = [], [[]]
        A = [[a1 if i == j else 0 for j in range(n - 1)] for i in range(n - 1)]
    else:
        X, Y = _two_index_blocks(b) if m == 2 else _general_blocks(b, m)
        A = _assemble(b, m, X, Y)

    if m == 1:
        basis = tuple(v_vector(c, p, j) for j in order[1:])
    else:
        basis = []
        for col in zip(*A):
            head, rem = divmod(-sum(bk * al for bk, al in zip(b[1:], col)), a1)
            if rem:
                raise InvariantViolation(f"column {col} is not in S")
            x = [0] * n
            x[p - 1] = head
            for idx, al in zip(order[1:], col):
                x[idx - 1] = al
            basis.append(tuple(x))
        basis = tuple(basis)

    return BasisMatrix(
        coefficients=c,
        M=M,
        order=order,
        A=IntMatrix(A, n - 1),
        X=IntMatrix(X, m - 1) if m > 1 else IntMatrix.zeros(0, 0),
        Y=IntMatrix(Y, n - m) if m > 1 else IntMatrix.zeros(0, n - 1),
        basis=basis,
    )


def verify_basis(c, candidate: Sequence[Sequence[int]], pivot: int) -> CertifiedBasis:
    """Certify that ``candidate`` is a basis of S.

    Accepts iff there are ``n - 1`` vectors, each solves the equation, and
    the determinant of their w-coordinates (relative to ``pivot``) equals
    ``a_pivot`` up to sign.  Otherwise raises :class:`BasisRejected`.
    """
    c = validate_coefficients(c)
    candidate = [tuple(x) for x in candidate]
    if len(candidate) != c.n - 1:
        raise BasisRejected("count", f"expected {c.n - 1} vectors, got {len(candidate)}")
    for x in candidate:
        if not is_solution(c, x):
            raise BasisRejected("membership", f"{x} does not solve the equation")
    W = IntMatrix.from_columns([w_coords(c, x, pivot) for x in candidate], c.n - 1)
    d = det_exact(W)
    if abs(d) != abs(c[pivot]):
        raise BasisRejected(
            "determinant", f"|det| = {abs(d)} but |a_{pivot}| = {abs(c[pivot])}"
        )
    return CertifiedBasis(tuple(candidate), pivot, d)


def is_basis(c, candidate, pivot: int) -> bool:
    try:
        verify_basis(c, candidate, pivot)
    except BasisRejected:
        return False
    return True
