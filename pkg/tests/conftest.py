"""Shared hypothesis strategies for the test suite."""

from hypothesis import strategies as st

from subdiv.poly import normalize


def polys(min_coeff=-9, max_coeff=9, max_len=8):
    """Normalized integer polynomials as coefficient tuples."""
    return st.lists(
        st.integers(min_value=min_coeff, max_value=max_coeff), max_size=max_len
    ).map(lambda cs: normalize(cs))


def nonneg_polys(max_coeff=9, max_len=8):
    return polys(min_coeff=0, max_coeff=max_coeff, max_len=max_len)
