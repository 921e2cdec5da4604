import math

import pytest
from hypothesis import given, strategies as st

from nonnesting.core import catalan, enumerate_dyck, peak_stats
from nonnesting.polynomials import (
    ONE,
    T,
    U,
    BivariatePoly,
    distribution,
    eulerian,
    eulerian_enumerated,
    eulerian_recurrence,
    narayana,
    narayana_closed,
    narayana_number,
)

terms = st.dictionaries(
    st.tuples(st.integers(0, 5), st.integers(0, 5)), st.integers(-20, 20), max_size=6
)
polys = terms.map(BivariatePoly)


def test_no_zero_terms_stored():
    p = BivariatePoly({(1, 0): 0, (2, 1): 3})
    assert p.terms == {(2, 1): 3}
    assert (p - p).is_zero() and str(p - p) == "0"


def test_text_form():
    assert str(eulerian(4)) == "1 + 11t + 11t^2 + t^3"
    assert str(U**3 + T + 2 * T * U + T * T) == "u^3 + t + 2t*u + t^2"
    assert str(ONE - T) == "1 - t"
    assert str(-T) == "-t"


def test_json_roundtrip():
    p = narayana(4)
    assert BivariatePoly.from_json(p.to_json()) == p
    assert p.to_json()["terms"][0] == [0, 4, 1]


@given(polys, polys, polys)
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) * c == a * c + b * c
    assert (a * b) * c == a * (b * c)
    assert a - a == BivariatePoly()
    assert a * ONE == a


@given(polys, st.integers(-3, 3), st.integers(-3, 3))
def test_evaluate_is_a_ring_map(a, x, y):
    b = a * a + T
    assert b.evaluate(x, y) == a.evaluate(x, y) ** 2 + x


@given(polys)
def test_substitution_then_evaluation(p):
    assert p.substitute(u=(0, 0)).evaluate(2, 7) == p.evaluate(2, 1)
    assert p.substitute(u=(1, 0)).evaluate(3, 7) == p.evaluate(3, 3)


@given(polys)
def test_reversal_is_an_involution(p):
    d = p.deg_t() + p.deg_u() + 1 if p.terms else 0
    assert p.reverse_in_t(d).reverse_in_t(d) == p
    assert p.reverse_in_t(d, scale_u=True).reverse_in_t(d, scale_u=True) == p


def test_reversal_rejects_small_degree():
    with pytest.raises(ValueError):
        (T**3).reverse_in_t(2)
    assert not (T**3).is_palindromic(2)


@pytest.mark.parametrize("n", range(1, 9))
def test_eulerian_recurrence_matches_enumeration(n):
    assert eulerian_recurrence(n) == eulerian_enumerated(n)


@pytest.mark.parametrize("n", range(1, 13))
def test_eulerian_basic(n):
    a = eulerian(n)
    assert a.evaluate(1) == math.factorial(n)
    assert a.is_palindromic(n - 1)


@pytest.mark.parametrize("n", range(1, 11))
def test_narayana_totals_and_diagonal(n):
    nar = narayana(n)
    assert nar.evaluate(1, 1) == catalan(n)
    assert nar.substitute(u=(1, 0)) == narayana_closed(n)
    assert sum(narayana_number(n, r) for r in range(1, n + 1)) == catalan(n)


def test_narayana_small_values():
    assert narayana(1) == U
    assert narayana(2) == U * U + T
    assert narayana(3) == U**3 + T + 2 * T * U + T * T
    assert narayana_number(4, 2) == 6
    with pytest.raises(ValueError):
        narayana_closed(0)


def test_distribution_counts_each_word():
    assert distribution([(1, 1, 2, 2), (2, 1, 1, 2), (2, 1, 2, 1)]) == U * U + T * U + T * T
    assert distribution([]) == BivariatePoly()


def test_narayana_uses_peak_statistics():
    for d in enumerate_dyck(5):
        ps = peak_stats(d)
        assert ps.hpea + ps.lpea >= 1
