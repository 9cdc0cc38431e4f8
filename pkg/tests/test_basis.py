import pytest
from hypothesis import given, settings, strategies as st

from unimodular.basis import build_basis, is_basis, verify_basis
from unimodular.errors import BasisRejected
from unimodular.matrix import det_exact
from unimodular.oracle import ModuleSpan, oracle_basis
from unimodular.solution import Coefficients, choose_M, is_solution, v_vector

from conftest import unimodular_vectors

C = Coefficients((12, 4, 2, 3))
LISTED_BASIS = [(-1, 3, 0, 0), (0, -1, 2, 0), (-1, 1, 1, 2)]


def test_worked_example_full_M():
    bm = build_basis(C, M=(1, 2, 3, 4))
    assert bm.X.diagonal() == (3, 2, 2)
    assert bm.A.is_upper_triangular()
    assert ModuleSpan(bm.basis, 4) == ModuleSpan(LISTED_BASIS, 4)
    assert verify_basis(C, bm.basis, 1).det in (12, -12)


def test_worked_example_greedy():
    bm = build_basis(C)
    assert bm.M == (3, 4) and bm.pivot == 3
    assert ModuleSpan(bm.basis, 4) == ModuleSpan(LISTED_BASIS, 4)


def test_listed_basis_certified():
    cert = verify_basis(C, LISTED_BASIS, 1)
    assert abs(cert.det) == 12


def test_unit_pivot():
    c = Coefficients((1, 5, 7))
    bm = build_basis(c, M=(1,))
    assert bm.basis == ((-5, 1, 0), (-7, 0, 1))


def test_two_index_closed_formula():
    c = Coefficients((4, 7, 6))
    bm = build_basis(c, M=(1, 2))
    assert bm.basis == ((-7, 4, 0), (-5, 2, 1))
    assert abs(verify_basis(c, bm.basis, 1).det) == 4


@settings(max_examples=100)
@given(unimodular_vectors(min_n=3).filter(lambda c: c[1] != 0 and c[2] != 0))
def test_two_index_path_matches_general(c):
    from math import gcd
    if gcd(c[1], c[2]) != 1:
        return
    from unimodular.basis import _general_blocks, _two_index_blocks
    b = list(c.a)
    fast = build_basis(c, M=(1, 2))
    X, Y = _general_blocks(b, 2)
    assert X == [[b[0]]]
    # both routes give solutions of the same congruence, equal mod a_1
    Xf, Yf = _two_index_blocks(b)
    assert [(y - z) % abs(b[0]) for y, z in zip(Y[0], Yf[0])] == [0] * len(Y[0])
    assert ModuleSpan(fast.basis, c.n) == ModuleSpan(oracle_basis(c), c.n)


def test_rejections():
    c = Coefficients((6, 10, 15))
    with pytest.raises(BasisRejected) as info:
        verify_basis(c, [v_vector(c, 1, 2), v_vector(c, 1, 3)], 1)
    assert info.value.reason == "determinant"
    with pytest.raises(BasisRejected) as info:
        verify_basis(c, [v_vector(c, 1, 2)], 1)
    assert info.value.reason == "count"
    with pytest.raises(BasisRejected) as info:
        verify_basis(c, [(1, 0, 0), v_vector(c, 1, 3)], 1)
    assert info.value.reason == "membership"
    assert not is_basis(C, [v_vector(C, 1, j) for j in (2, 3, 4)], 1)


def test_oracle_basis_accepted():
    assert is_basis(C, oracle_basis(C), 1)


def test_bad_inputs():
    with pytest.raises(ValueError):
        build_basis(C, M=(2, 3))
    with pytest.raises(ValueError):
        build_basis(Coefficients((0, 1, 2)), pivot=1)


@settings(max_examples=300)
@given(unimodular_vectors(), st.sampled_from(["all", "greedy-minimal"]))
def test_basis_certified_and_spans_S(c, strategy):
    bm = build_basis(c, strategy=strategy)
    assert len(bm.basis) == c.n - 1
    assert all(is_solution(c, z) for z in bm.basis)
    assert abs(det_exact(bm.A)) == abs(c[bm.pivot])
    verify_basis(c, bm.basis, bm.pivot)
    assert ModuleSpan(bm.basis, c.n) == ModuleSpan(oracle_basis(c), c.n)
    # the certificate does not depend on which nonzero pivot is used
    for p in range(1, c.n + 1):
        if c[p]:
            verify_basis(c, bm.basis, p)
    # A is the w-coordinate matrix in the internal order
    for k, z in enumerate(bm.basis):
        assert bm.w_coordinates(z) == bm.A.column(k)


@settings(max_examples=100)
@given(unimodular_vectors(min_n=3), st.data())
def test_explicit_pivot(c, data):
    p = data.draw(st.sampled_from([k for k in range(1, c.n + 1) if c[k]]))
    bm = build_basis(c, M=choose_M(c), pivot=p)
    assert bm.pivot == p and p in bm.M
    verify_basis(c, bm.basis, p)


def test_coordinates_of_u_vectors():
    bm = build_basis(C, M=(1, 2, 3, 4))
    from unimodular.solution import u_vector
    us = [u_vector(C, 1, j) for j in (2, 3, 4)]
    coords = bm.coordinates(us)
    assert (bm.A @ coords).columns() == [bm.w_coordinates(u) for u in us]
    with pytest.raises(ValueError):
        bm.coordinates([(1, 0, 0, 0)])
