from functools import reduce
from math import gcd

from hypothesis import strategies as st

from unimodular import Coefficients


def _gcd_all(xs):
    return reduce(gcd, xs, 0)


small_ints = st.integers(-60, 60)
smooth_ints = st.builds(
    lambda e2, e3, e5, e7, s: s * 2 ** e2 * 3 ** e3 * 5 ** e5 * 7 ** e7,
    st.integers(0, 5), st.integers(0, 3), st.integers(0, 2), st.integers(0, 2),
    st.sampled_from([1, -1]),
)
big_ints = st.integers(-10 ** 6, 10 ** 6)


def unimodular_vectors(min_n=2, max_n=6, elements=None):
    if elements is None:
        elements = st.one_of(small_ints, smooth_ints, big_ints)
    return (
        st.lists(elements, min_size=min_n, max_size=max_n)
        .filter(lambda a: _gcd_all(a) == 1)
        .map(lambda a: Coefficients(tuple(a)))
    )


def with_nonzero_first(min_n=3, max_n=6):
    return unimodular_vectors(min_n, max_n).filter(lambda c: c.a[0] != 0)
