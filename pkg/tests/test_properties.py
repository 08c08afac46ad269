"""Randomized invariants over orders and line indices."""

from hypothesis import given, strategies as st

from knomial import (
    CoefficientQuery,
    check_vandermonde,
    coefficient,
    expand_power_oracle,
    make_params,
    row,
    row_width,
    triangle,
)

orders = st.integers(min_value=2, max_value=8)
lines = st.integers(min_value=0, max_value=18)
small_lines = st.integers(min_value=0, max_value=8)


@given(orders, lines)
def test_width_formula(k, n):
    assert len(row(k, n).coefficients) == row_width(make_params(k), n) == (k - 1) * n + 1


@given(orders, lines)
def test_lines_are_palindromes(k, n):
    coeffs = row(k, n).coefficients
    assert coeffs == coeffs[::-1]


@given(orders, lines)
def test_entries_positive_with_unit_ends(k, n):
    coeffs = row(k, n).coefficients
    assert coeffs[0] == coeffs[-1] == 1
    assert all(c > 0 for c in coeffs)


@given(orders, st.integers(min_value=1, max_value=18))
def test_second_entry_is_line_index(k, n):
    assert row(k, n).coefficients[1] == n


@given(orders, lines, st.integers(min_value=-5, max_value=200))
def test_zero_convention_outside_the_line(k, n, h):
    value = coefficient(CoefficientQuery(k=k, n=n, h=h))
    if 0 <= h <= (k - 1) * n:
        assert value > 0
    else:
        assert value == 0


@given(orders, st.integers(min_value=0, max_value=12))
def test_streaming_matches_direct_rows(k, n_max):
    streamed = list(triangle(k, n_max))
    assert [r.n for r in streamed] == list(range(n_max + 1))
    assert [r.coefficients for r in streamed] == [
        row(k, n).coefficients for n in range(n_max + 1)
    ]


@given(orders, small_lines)
def test_lines_match_naive_expansion(k, n):
    assert row(k, n).coefficients == expand_power_oracle(k, n).coefficients


@given(orders, small_lines, small_lines, st.integers(min_value=-4, max_value=120))
def test_vandermonde_holds_for_any_h(k, n, m, h):
    assert check_vandermonde(k, n, m, h)


@given(orders, small_lines)
def test_line_sum_is_a_power(k, n):
    assert sum(row(k, n).coefficients) == k**n


@given(orders, small_lines)
def test_alternating_sum_matches_minus_one_substitution(k, n):
    coeffs = row(k, n).coefficients
    alternating = sum(c if h % 2 == 0 else -c for h, c in enumerate(coeffs))
    base = sum((-1) ** j for j in range(k))
    assert alternating == base**n
