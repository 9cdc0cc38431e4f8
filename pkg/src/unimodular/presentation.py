"""Generators and defining relations for S.

Generators are the ``v(i, j)`` of the spanning set ``B_M``; each triple
``i < j < k`` with at least two indices in ``M`` contributes the relation

    a_k v(i, j) - a_j v(i, k) + a_i v(j, k) = 0.

Over the integers these relations are defining: the ``d x e`` relation
matrix has Smith form ``diag(1, ..., 1, 0, ..., 0)`` with rank
``d - (n - 1)``, so generators modulo relations is free of rank ``n - 1``.
"""

from dataclasses import dataclass, field
from itertools import combinations
from math import comb
from typing import Dict, List, Sequence, Tuple

from .errors import VerificationFailed
from .matrix import IntMatrix, det_exact, snf
from .solution import Coefficients, choose_M, v_vector, validate_coefficients


@dataclass(frozen=True)
class Presentation:
    coefficients: Coefficients
    M: Tuple[int, ...]
    D_pairs: Tuple[Tuple[int, int], ...]
    E_triples: Tuple[Tuple[int, int, int], ...]
    rel: IntMatrix

    @property
    def d(self) -> int:
        return len(self.D_pairs)

    @property
    def e(self) -> int:
        return len(self.E_triples)

    @property
    def generators(self) -> List[Tuple[int, ...]]:
        return [v_vector(self.coefficients, i, j) for i, j in self.D_pairs]


@dataclass(frozen=True)
class VerificationReport:
    relations_ok: bool
    rank: int
    expected_rank: int
    smith_diagonal: Tuple[int, ...]
    smith_ok: bool
    bad_columns: Tuple[int, ...] = field(default=())

    @property
    def ok(self) -> bool:
        return self.relations_ok and self.smith_ok


def expected_counts(n: int, m: int) -> Tuple[int, int]:
    """``(d, e)`` for ``n`` unknowns and ``|M| = m``."""
    d = m * (n - m) + comb(m, 2)
    e = comb(m, 2) * (n - m) + comb(m, 3)
    return d, e


def build_presentation(c, M: Sequence[int] = None, strategy: str = "greedy-minimal") -> Presentation:
    """Generator pairs, relation triples and the relation matrix.

    Rows of ``rel`` are indexed by ``D_pairs`` and columns by ``E_triples``,
    both lexicographic.  Column ``(i, j, k)`` holds ``a_k``, ``-a_j``, ``a_i``
    in rows ``(i, j)``, ``(i, k)``, ``(j, k)``.  When ``m == 1`` or
    ``n == 2`` there are no relations and ``rel`` has zero columns.
    """
    c = validate_coefficients(c)
    if M is None:
        M = choose_M(c, strategy)
    Ms = set(M)
    n = c.n
    pairs = tuple(
        (i, j) for i, j in combinations(range(1, n + 1), 2) if i in Ms or j in Ms
    )
    triples = tuple(
        t for t in combinations(range(1, n + 1), 3) if len(Ms.intersection(t)) >= 2
    )
    row_of: Dict[Tuple[int, int], int] = {p: r for r, p in enumerate(pairs)}
    rel = [[0] * len(triples) for _ in pairs]
    for col, (i, j, k) in enumerate(triples):
        rel[row_of[(i, j)]][col] = c[k]
        rel[row_of[(i, k)]][col] = -c[j]
        rel[row_of[(j, k)]][col] = c[i]
    return Presentation(c, tuple(sorted(Ms)), pairs, triples, IntMatrix(rel, len(triples)))


def relation_residuals(p: Presentation) -> List[Tuple[int, ...]]:
    """``sum_rows rel[(q, r), col] * v(q, r)`` for every column."""
    gens = p.generators
    n = p.coefficients.n
    out = []
    for col in p.rel.columns():
        acc = [0] * n
        for coef, g in zip(col, gens):
            if coef:
                for t in range(n):
                    acc[t] += coef * g[t]
        out.append(tuple(acc))
    return out


def verify_presentation(c, p: Presentation) -> VerificationReport:
    """Check that the relations hold and are defining.

    Raises :class:`VerificationFailed` naming the failed parts; returns the
    report otherwise.
    """
    c = validate_coefficients(c)
    if p.coefficients != c:
        raise ValueError("presentation was built for different coefficients")
    bad = tuple(k for k, r in enumerate(relation_residuals(p)) if any(r))
    expected = p.d - (c.n - 1)
    res = snf(p.rel)
    smith_ok = res.rank == expected and all(f == 1 for f in res.invariant_factors)
    report = VerificationReport(
        relations_ok=not bad,
        rank=res.rank,
        expected_rank=expected,
        smith_diagonal=res.invariant_factors,
        smith_ok=smith_ok,
        bad_columns=bad,
    )
    failed = [name for name, ok in (("relations", not bad), ("smith", smith_ok)) if not ok]
    if failed:
        raise VerificationFailed(
            failed, report,
            f"presentation check failed: {', '.join(failed)} "
            f"(rank {res.rank}, expected {expected}, bad columns {list(bad)})",
        )
    return report


def diagonal_minor(p: Presentation, i: int) -> IntMatrix:
    """The ``z x z`` submatrix of ``rel`` attached to ``i in M``.

    Columns are the triples ``{i, j, k}`` with ``{j, k}`` meeting ``M`` and
    rows the matching pairs ``(j, k)``; the block is diagonal with entries
    ``+-a_i``, so its determinant is ``+-a_i**z`` with ``z = d - (n - 1)``.
    """
    if i not in p.M:
        raise ValueError(f"{i} is not in M")
    Ms = set(p.M)
    row_of = {q: r for r, q in enumerate(p.D_pairs)}
    col_of = {t: k for k, t in enumerate(p.E_triples)}
    rows, cols = [], []
    for jk in p.D_pairs:
        if i in jk or not Ms.intersection(jk):
            continue
        rows.append(row_of[jk])
        cols.append(col_of[tuple(sorted((i,) + jk))])
    return p.rel.submatrix(rows, cols)


def check_diagonal_minors(p: Presentation) -> bool:
    """For each ``i in M``: the attached minor is ``+-a_i**z``."""
    z = p.d - (p.coefficients.n - 1)
    for i in p.M:
        sub = diagonal_minor(p, i)
        if sub.shape != (z, z) or not sub.is_diagonal():
            return False
        if abs(det_exact(sub)) != abs(p.coefficients[i]) ** z:
            return False
    return True
