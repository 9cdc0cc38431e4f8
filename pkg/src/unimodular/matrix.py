"""Dense exact integer matrices.

Entries are Python ints.  The normal forms here carry their unimodular
transforms so every result can be recomposed and checked:

* :func:`snf` -- Smith normal form, ``U @ A @ V == D``.
* :func:`hnf` -- column-style Hermite normal form, ``A @ U == H``.
* :func:`det_exact` -- fraction-free (Bareiss) determinant.
* :func:`gcd_minors` -- determinantal divisors by brute-force enumeration,
  meant as an oracle for small matrices.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import gcd
from typing import Iterable, List, Sequence, Tuple

from .errors import NonIntegralSolution
from .ring import xgcd


class IntMatrix:
    """Immutable dense integer matrix stored row-major.

    >>> A = IntMatrix([[1, 2], [3, 4]])
    >>> A.shape
    (2, 2)
    >>> (A @ IntMatrix.identity(2)) == A
    True
    """

    __slots__ = ("rows", "cols", "_data")

    def __init__(self, data: Iterable[Iterable[int]], cols: int = None):
        data = tuple(tuple(int(x) for x in row) for row in data)
        if cols is None:
            cols = len(data[0]) if data else 0
        for row in data:
            if len(row) != cols:
                raise ValueError("ragged matrix rows")
        self.rows = len(data)
        self.cols = cols
        self._data = data

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls([[int(i == j) for j in range(n)] for i in range(n)], n)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "IntMatrix":
        return cls([[0] * cols for _ in range(rows)], cols)

    @classmethod
    def diag(cls, entries: Sequence[int]) -> "IntMatrix":
        n = len(entries)
        return cls([[entries[i] if i == j else 0 for j in range(n)] for i in range(n)], n)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[int]], rows: int = None) -> "IntMatrix":
        """Build a matrix whose ``j``-th column is ``columns[j]``."""
        if rows is None:
            if not columns:
                raise ValueError("row count needed for an empty column list")
            rows = len(columns[0])
        return cls([[col[i] for col in columns] for i in range(rows)], len(columns))

    @property
    def shape(self) -> Tuple[int, int]:
        return self.rows, self.cols

    @property
    def entries(self) -> Tuple[int, ...]:
        return tuple(x for row in self._data for x in row)

    def __getitem__(self, ij):
        i, j = ij
        return self._data[i][j]

    def row(self, i: int) -> Tuple[int, ...]:
        return self._data[i]

    def column(self, j: int) -> Tuple[int, ...]:
        return tuple(row[j] for row in self._data)

    def columns(self) -> List[Tuple[int, ...]]:
        return [self.column(j) for j in range(self.cols)]

    def tolist(self) -> List[List[int]]:
        return [list(row) for row in self._data]

    @property
    def T(self) -> "IntMatrix":
        return IntMatrix(self.columns(), self.rows)

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "IntMatrix":
        return IntMatrix([[self._data[i][j] for j in cols] for i in rows], len(cols))

    def diagonal(self) -> Tuple[int, ...]:
        return tuple(self._data[i][i] for i in range(min(self.rows, self.cols)))

    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_upper_triangular(self) -> bool:
        return all(self._data[i][j] == 0 for i in range(self.rows) for j in range(min(i, self.cols)))

    def is_diagonal(self) -> bool:
        return all(
            self._data[i][j] == 0 for i in range(self.rows) for j in range(self.cols) if i != j
        )

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        ocols = other.columns()
        return IntMatrix(
            [[sum(a * b for a, b in zip(row, col)) for col in ocols] for row in self._data],
            other.cols,
        )

    def apply(self, vec: Sequence[int]) -> Tuple[int, ...]:
        """Matrix-vector product."""
        if len(vec) != self.cols:
            raise ValueError("vector length mismatch")
        return tuple(sum(a * b for a, b in zip(row, vec)) for row in self._data)

    def __neg__(self) -> "IntMatrix":
        return IntMatrix([[-x for x in row] for row in self._data], self.cols)

    def __eq__(self, other) -> bool:
        if not isinstance(other, IntMatrix):
            return NotImplemented
        return self.shape == other.shape and self._data == other._data

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, self._data))

    def __repr__(self) -> str:
        return f"IntMatrix({self.tolist()!r})"

    def __str__(self) -> str:
        if not self.rows or not self.cols:
            return f"[{self.rows}x{self.cols} matrix]"
        width = max(len(str(x)) for x in self.entries)
        return "\n".join(
            "[" + " ".join(str(x).rjust(width) for x in row) + "]" for row in self._data
        )


def _as_matrix(A) -> IntMatrix:
    return A if isinstance(A, IntMatrix) else IntMatrix(A)


def det_exact(A) -> int:
    """Determinant by Bareiss fraction-free elimination."""
    A = _as_matrix(A)
    if not A.is_square():
        raise ValueError(f"determinant of a non-square {A.shape} matrix")
    n = A.rows
    if n == 0:
        return 1
    M = A.tolist()
    sign = 1
    prev = 1
    for k in range(n - 1):
        if M[k][k] == 0:
            for i in range(k + 1, n):
                if M[i][k] != 0:
                    M[k], M[i] = M[i], M[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = M[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                # exact by Sylvester's identity
                M[i][j] = (M[i][j] * pivot - M[i][k] * M[k][j]) // prev
        prev = pivot
    return sign * M[n - 1][n - 1]


@dataclass(frozen=True)
class SnfResult:
    """Smith decomposition ``U @ A @ V == D``."""

    U: IntMatrix
    D: IntMatrix
    V: IntMatrix
    rank: int
    invariant_factors: Tuple[int, ...]


def _swap_rows(M, i, j):
    M[i], M[j] = M[j], M[i]


def _swap_cols(M, i, j):
    for row in M:
        row[i], row[j] = row[j], row[i]


def snf(A) -> SnfResult:
    """Smith normal form with unimodular transforms.

    Pivots on the smallest nonzero entry (in absolute value) of the
    remaining block, clears its row and column by division with remainder,
    and folds in any row whose entries the pivot fails to divide.

    >>> snf([[4, 2, -3], [0, 6, -3], [0, 0, 6]]).invariant_factors
    (1, 12, 12)
    """
    A = _as_matrix(A)
    m, n = A.shape
    D = A.tolist()
    U = IntMatrix.identity(m).tolist()
    V = IntMatrix.identity(n).tolist()
    rank = 0

    for t in range(min(m, n)):
        while True:
            best = None
            for i in range(t, m):
                row = D[i]
                for j in range(t, n):
                    x = row[j]
                    if x and (best is None or abs(x) < best[0]):
                        best = (abs(x), i, j)
            if best is None:
                break
            _, pi, pj = best
            if pi != t:
                _swap_rows(D, t, pi)
                _swap_rows(U, t, pi)
            if pj != t:
                _swap_cols(D, t, pj)
                _swap_cols(V, t, pj)
            p = D[t][t]
            clean = True
            for i in range(t + 1, m):
                if D[i][t]:
                    q = D[i][t] // p
                    Di, Dt, Ui, Ut = D[i], D[t], U[i], U[t]
                    for j in range(t, n):
                        Di[j] -= q * Dt[j]
                    for j in range(m):
                        Ui[j] -= q * Ut[j]
                    if Di[t]:
                        clean = False
            for j in range(t + 1, n):
                if D[t][j]:
                    q = D[t][j] // p
                    for row in D:
                        row[j] -= q * row[t]
                    for row in V:
                        row[j] -= q * row[t]
                    if D[t][j]:
                        clean = False
            if not clean:
                continue
            bad = None
            for i in range(t + 1, m):
                if any(x % p for x in D[i][t + 1:]):
                    bad = i
                    break
            if bad is None:
                break
            # pull the offending row up; the next pass reduces it mod p
            Dt, Db, Ut, Ub = D[t], D[bad], U[t], U[bad]
            for j in range(t, n):
                Dt[j] += Db[j]
            for j in range(m):
                Ut[j] += Ub[j]
        if best is None:
            break
        if D[t][t] < 0:
            D[t] = [-x for x in D[t]]
            U[t] = [-x for x in U[t]]
        rank += 1

    factors = tuple(D[i][i] for i in range(rank))
    return SnfResult(IntMatrix(U, m), IntMatrix(D, n), IntMatrix(V, n), rank, factors)


def gcd_minors(A, i: int) -> int:
    """gcd of all ``i x i`` minors (0 if they all vanish).

    Exponential in the matrix size; intended for cross-checking :func:`snf`
    on small inputs.
    """
    A = _as_matrix(A)
    if not 1 <= i <= min(A.shape):
        raise ValueError(f"minor size {i} out of range for shape {A.shape}")
    g = 0
    for rows in combinations(range(A.rows), i):
        for cols in combinations(range(A.cols), i):
            g = gcd(g, det_exact(A.submatrix(rows, cols)))
            if g == 1:
                return 1
    return g


@dataclass(frozen=True)
class HnfResult:
    """Column-style Hermite form ``A @ U == H``.

    ``H`` is lower echelon: each nonzero column has a positive pivot lying
    strictly below the previous column's pivot, and entries to the left of
    a pivot are reduced into ``[0, pivot)``.  Zero columns come last.
    """

    H: IntMatrix
    U: IntMatrix

    @property
    def rank(self) -> int:
        return sum(1 for col in self.H.columns() if any(col))

    @property
    def lattice_basis(self) -> Tuple[Tuple[int, ...], ...]:
        """The nonzero columns of ``H``: a canonical basis of the column span."""
        return tuple(col for col in self.H.columns() if any(col))


def hnf(A) -> HnfResult:
    """Column-style Hermite normal form with its unimodular right transform.

    Two matrices with the same number of rows have equal column spans iff
    their ``lattice_basis`` agree.
    """
    A = _as_matrix(A)
    m, n = A.shape
    # work on transposes so that column operations are list-row operations
    H = [list(c) for c in A.columns()]
    U = IntMatrix.identity(n).tolist()
    k = 0
    for r in range(m):
        if k == n:
            break
        for j in range(k + 1, n):
            b = H[j][r]
            if not b:
                continue
            a = H[k][r]
            g, x, y = xgcd(a, b)
            ag, bg = a // g, b // g
            Hk, Hj, Uk, Uj = H[k], H[j], U[k], U[j]
            H[k] = [x * s + y * t for s, t in zip(Hk, Hj)]
            H[j] = [ag * t - bg * s for s, t in zip(Hk, Hj)]
            U[k] = [x * s + y * t for s, t in zip(Uk, Uj)]
            U[j] = [ag * t - bg * s for s, t in zip(Uk, Uj)]
        p = H[k][r]
        if not p:
            continue
        if p < 0:
            H[k] = [-s for s in H[k]]
            U[k] = [-s for s in U[k]]
            p = -p
        for j in range(k):
            q = H[j][r] // p
            if q:
                H[j] = [s - q * t for s, t in zip(H[j], H[k])]
                U[j] = [s - q * t for s, t in zip(U[j], U[k])]
        k += 1
    return HnfResult(IntMatrix.from_columns(H, m) if n else IntMatrix.zeros(m, 0),
                     IntMatrix.from_columns(U, n) if n else IntMatrix.zeros(0, 0))


def solve_upper_triangular(A, B) -> IntMatrix:
    """Exact integral ``X`` with ``A @ X == B`` for upper triangular ``A``.

    Raises :class:`NonIntegralSolution` if some back-substitution step does
    not divide exactly, i.e. ``A^{-1} B`` is not integral.
    """
    A, B = _as_matrix(A), _as_matrix(B)
    if not A.is_square() or not A.is_upper_triangular():
        raise ValueError("A must be square upper triangular")
    n = A.rows
    if B.rows != n:
        raise ValueError(f"shape mismatch {A.shape} vs {B.shape}")
    if any(A[i, i] == 0 for i in range(n)):
        raise ValueError("zero on the diagonal")
    X = [[0] * B.cols for _ in range(n)]
    for col in range(B.cols):
        for i in range(n - 1, -1, -1):
            r = B[i, col] - sum(A[i, k] * X[k][col] for k in range(i + 1, n))
            q, rem = divmod(r, A[i, i])
            if rem:
                raise NonIntegralSolution(
                    f"entry ({i}, {col}) would be {Fraction(r, A[i, i])}"
                )
            X[i][col] = q
    return IntMatrix(X, B.cols)


def solve_exact(A, B) -> IntMatrix:
    """Integral ``X`` with ``A @ X == B`` for ``A`` of full column rank.

    Uses rational Gauss-Jordan elimination.  Raises
    :class:`NonIntegralSolution` if the system is inconsistent or the
    unique solution has a non-integral entry.
    """
    A, B = _as_matrix(A), _as_matrix(B)
    m, n = A.shape
    if B.rows != m:
        raise ValueError(f"shape mismatch {A.shape} vs {B.shape}")
    k = B.cols
    M = [[Fraction(x) for x in A.row(i)] + [Fraction(x) for x in B.row(i)] for i in range(m)]
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, m) if M[i][c] != 0), None)
        if piv is None:
            raise ValueError("A does not have full column rank")
        M[r], M[piv] = M[piv], M[r]
        p = M[r][c]
        M[r] = [x / p for x in M[r]]
        for i in range(m):
            if i != r and M[i][c] != 0:
                f = M[i][c]
                M[i] = [x - f * y for x, y in zip(M[i], M[r])]
        r += 1
    for i in range(n, m):
        if any(M[i][n:]):
            raise NonIntegralSolution("right-hand side is not in the column span")
    X = []
    for i in range(n):
        row = M[i][n:]
        if any(x.denominator != 1 for x in row):
            raise NonIntegralSolution("solution has non-integral entries")
        X.append([int(x) for x in row])
    return IntMatrix(X, k)
