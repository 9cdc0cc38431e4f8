from collections import Counter
from math import gcd, prod

import pytest
from hypothesis import given, settings, strategies as st

from unimodular.matrix import IntMatrix, det_exact
from unimodular.oracle import oracle_basis, quotient_from_generators
from unimodular.quotients import (
    QuotientStructure,
    S_equals_U_criterion,
    U_quotient_order,
    check_C_divisibility,
    compute_C,
    d_chain,
    p_elementary_divisors,
    p_part_permutation_check,
    quotient_S_mod_Si,
    quotient_S_mod_Ui,
    quotient_W_mod_S,
)
from unimodular.ring import p_part, prime_divisors
from unimodular.solution import Coefficients, u_vector, v_vector

from conftest import unimodular_vectors, with_nonzero_first

C = Coefficients((12, 4, 2, 3))


def test_structure_normal_form():
    q = QuotientStructure.from_diagonal([1, 2, 3, 0, -4])
    assert q.invariant_factors == (2, 12)
    assert q.free_rank == 1
    assert q.elementary_divisors == {2: (2, 4), 3: (3,)}
    assert q.torsion_order == 24
    assert QuotientStructure.from_elementary_divisors({2: [2], 3: [3]}) == \
        QuotientStructure.from_diagonal([6])
    assert QuotientStructure().is_trivial
    assert str(QuotientStructure()) == "0"
    assert str(QuotientStructure.from_diagonal([12, 12])) == "Z/12 + Z/12"


def test_S_mod_Si_examples():
    assert quotient_S_mod_Si(C, 1) == QuotientStructure.from_diagonal([12, 12])
    assert quotient_S_mod_Si(Coefficients((1, 5, 7)), 1).is_trivial
    assert quotient_S_mod_Si(Coefficients((0, 1, 1)), 1) == QuotientStructure(free_rank=1)


def test_W_mod_S_examples():
    assert quotient_W_mod_S(C, 1) == QuotientStructure.from_diagonal([12])
    assert quotient_W_mod_S(Coefficients((1, 2, 3)), 1).is_trivial
    assert quotient_W_mod_S(Coefficients((4, 7, 6)), 1) == QuotientStructure.from_diagonal([4])
    with pytest.raises(ValueError):
        quotient_W_mod_S(Coefficients((0, 1, 2)), 1)


def test_d_chain_examples():
    assert d_chain(C) == (3, 2)
    assert d_chain((12, 15, 10, 20)) == (2, 3)
    # the chain for this ordering evaluates to (3, 2); (1, 6) belongs to (12, 20, 15, 10)
    assert d_chain((12, 20, 10, 15)) == (3, 2)
    assert d_chain((12, 20, 15, 10)) == (1, 6)
    with pytest.raises(ValueError):
        d_chain((0, 1, 2))
    with pytest.raises(ValueError):
        d_chain((2, 3))


def test_S_mod_Ui_examples():
    q = quotient_S_mod_Ui(C, 1)
    assert q.elementary_divisors == {2: (2,), 3: (3,)}
    assert q.invariant_factors == (6,)
    assert quotient_S_mod_Ui(Coefficients((0, 3, 2)), 1) == QuotientStructure(free_rank=1)
    assert quotient_S_mod_Ui(Coefficients((2, 3)), 1).is_trivial
    # one case on each side of the criterion
    c = Coefficients((6, 5, 7, 11))
    assert S_equals_U_criterion(c) == quotient_S_mod_Ui(c, 1).is_trivial
    c = Coefficients((6, 2, 3))
    assert S_equals_U_criterion(c) and quotient_S_mod_Ui(c, 1).is_trivial


def test_C_examples():
    A = IntMatrix([[3, -1, 1], [0, 2, 1], [0, 0, 2]])
    Cm = compute_C(C, A)
    assert Cm == IntMatrix([[1, 1, -1], [0, 3, -1], [0, 0, 2]])
    assert check_C_divisibility(Cm)
    assert abs(det_exact(compute_C(C))) == 6
    assert compute_C((1, 4, 9)).shape == (2, 2)
    assert not check_C_divisibility(IntMatrix([[2, 1], [0, 4]]))
    assert check_C_divisibility(IntMatrix.diag([2, 4, 0]))


def test_permutation_examples():
    c = Coefficients((12, 15, 10, 20))
    perm = (4, 3, 2)  # gives (12, 20, 10, 15)
    assert c.permuted((1,) + perm).a == (12, 20, 10, 15)
    for p in (2, 3):
        assert p_part_permutation_check(c, perm, p)
    assert p_part_permutation_check(c, (2, 3, 4), 5)
    with pytest.raises(ValueError):
        p_part_permutation_check(c, (2, 2, 4), 2)


@settings(max_examples=150)
@given(unimodular_vectors())
def test_quotients_against_raw_generators(c):
    """Closed forms against the oracle route (rational solve + Smith form)."""
    base = oracle_basis(c)
    n = c.n
    for i in range(1, n + 1):
        others = [j for j in range(1, n + 1) if j != i]
        si = quotient_from_generators(base, [v_vector(c, i, j) for j in others])
        assert quotient_S_mod_Si(c, i) == si
        ui = quotient_from_generators(base, [u_vector(c, i, j) for j in others])
        assert quotient_S_mod_Ui(c, i) == ui
        if c[i] and n > 2:
            assert ui.torsion_order == U_quotient_order(c, i)
            assert ui.is_trivial == S_equals_U_criterion(c, i)
            assert ui.free_rank == 0
        if c[i]:
            assert quotient_W_mod_S(c, i).torsion_order == abs(c[i])


@settings(max_examples=150)
@given(with_nonzero_first())
def test_C_invariants(c):
    Cm = compute_C(c)
    assert Cm.is_upper_triangular()
    assert tuple(abs(x) for x in Cm.diagonal()) == (1,) + d_chain(c)
    assert check_C_divisibility(Cm)
    a1 = abs(c[1])
    assert abs(det_exact(Cm)) * prod(gcd(a1, c[j]) for j in range(2, c.n + 1)) == a1 ** (c.n - 2)


@settings(max_examples=150)
@given(with_nonzero_first(), st.randoms())
def test_permutation_invariance(c, rnd):
    perm = list(range(2, c.n + 1))
    rnd.shuffle(perm)
    other = c.permuted([1] + perm)
    for p in prime_divisors(c[1]):
        assert p_part_permutation_check(c, perm, p)
        # the adapted ordering yields the same elementary divisors from either start
        assert p_elementary_divisors(c, p) == p_elementary_divisors(other, p)
        chain = Counter(p_part(d, p) for d in d_chain(c))
        assert sorted(q for q in chain.elements() if q != 1) == list(p_elementary_divisors(c, p))
    assert quotient_S_mod_Ui(c, 1) == quotient_S_mod_Ui(other, 1)
