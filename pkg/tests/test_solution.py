import pytest
from hypothesis import given, strategies as st

from unimodular.errors import InvalidCoefficients, NotUnimodular, TooShort
from unimodular.ring import gcd_prefixes
from unimodular.solution import (
    Coefficients,
    choose_M,
    dot,
    from_w_coords,
    is_solution,
    pivot_of,
    spanning_set,
    u_vector,
    v_vector,
    validate_coefficients,
    w_coords,
)

from conftest import unimodular_vectors

C = Coefficients((12, 4, 2, 3))


def test_validate():
    assert validate_coefficients((12, 4, 2, 3)).a == (12, 4, 2, 3)
    assert validate_coefficients((0, 1)).n == 2
    assert validate_coefficients(C) is C
    with pytest.raises(NotUnimodular):
        validate_coefficients((2, 4, 6))
    with pytest.raises(NotUnimodular):
        validate_coefficients((0, 0))
    with pytest.raises(TooShort):
        validate_coefficients((1,))
    assert issubclass(NotUnimodular, InvalidCoefficients)
    assert issubclass(NotUnimodular, ValueError)


def test_one_based_access():
    assert C[1] == 12 and C[4] == 3
    with pytest.raises(IndexError):
        C[0]
    assert C.permuted((4, 3, 2, 1)).a == (3, 2, 4, 12)


def test_v_vector_examples():
    assert v_vector(C, 1, 3) == (-2, 0, 12, 0)
    assert v_vector(C, 3, 4) == (0, 0, -3, 2)
    with pytest.raises(ValueError):
        v_vector(C, 2, 2)


def test_u_vector_examples():
    assert u_vector(C, 1, 2) == (-1, 3, 0, 0)
    assert u_vector(C, 1, 4) == (-1, 0, 0, 4)
    assert u_vector(Coefficients((1, 0, 0)), 2, 3) == (0, 0, 0)


@given(unimodular_vectors(), st.data())
def test_generators_solve(c, data):
    i = data.draw(st.integers(1, c.n))
    j = data.draw(st.integers(1, c.n).filter(lambda k: k != i))
    v, u = v_vector(c, i, j), u_vector(c, i, j)
    assert is_solution(c, v) and is_solution(c, u)
    assert v_vector(c, j, i) == tuple(-x for x in v)
    if c[i] or c[j]:
        g = gcd_prefixes((c[i], c[j]))[-1]
        assert tuple(g * x for x in u) == v


def test_w_coords_examples():
    assert w_coords(C, (-1, 3, 0, 0), 1) == (3, 0, 0)
    assert w_coords(C, (-1, 1, 1, 2), 1) == (1, 1, 2)
    assert from_w_coords(C, (1, 1, 2), 1) == (-1, 1, 1, 2)
    with pytest.raises(ValueError):
        from_w_coords(C, (1, 0, 0), 1)
    with pytest.raises(ValueError):
        w_coords(Coefficients((0, 1)), (1, 0), 1)


@given(unimodular_vectors(), st.data())
def test_w_round_trip(c, data):
    pivot = data.draw(st.sampled_from([k for k in range(1, c.n + 1) if c[k]]))
    j = data.draw(st.sampled_from([k for k in range(1, c.n + 1) if k != pivot]))
    mult = data.draw(st.integers(-5, 5))
    s = tuple(mult * x for x in v_vector(c, pivot, j))
    assert from_w_coords(c, w_coords(c, s, pivot), pivot) == s


def test_choose_M_examples():
    assert choose_M(C, "all") == (1, 2, 3, 4)
    assert choose_M(C, "greedy-minimal") == (3, 4)
    assert choose_M(Coefficients((1, 6, 10)), "greedy-minimal") == (1,)
    with pytest.raises(ValueError):
        choose_M(C, "bogus")


@given(unimodular_vectors())
def test_choose_M_coprime_and_minimal(c):
    M = choose_M(c)
    assert gcd_prefixes([c[i] for i in M])[-1] == 1
    for i in M:
        rest = [c[k] for k in M if k != i]
        assert not rest or gcd_prefixes(rest)[-1] != 1
    assert any(c[i] for i in M)
    assert pivot_of(c, M) in M


def test_spanning_set_examples():
    assert spanning_set(C, (3, 4)) == [
        (-2, 0, 12, 0), (-3, 0, 0, 12), (0, -2, 4, 0), (0, -3, 0, 4), (0, 0, -3, 2),
    ]
    assert spanning_set(Coefficients((2, 3)), (1,)) == [(-3, 2)]
    assert len(spanning_set(C, (1, 2, 3, 4))) == 6


def test_dot():
    assert dot(C, (1, 1, 1, 1)) == 21
    assert not is_solution(C, (0, 0, 0))
