from fractions import Fraction
from math import gcd

import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import coprime_weights, inverse_by_scan, l_direct
from plurigenera.basket import (
    Basket,
    BasketSpecError,
    QuotientSingularity,
    basket_correction,
    canonical_singularities,
    canonicalize,
    format_rational,
    local_correction,
    miyaoka_sum,
    mod_inverse,
    parse_rational,
)

CASE_VIII = "2*2/1,2*3/2,1*4/3,1*5/3,1*7/5"


@st.composite
def singularities(draw, r_max=40):
    r = draw(st.integers(2, r_max))
    a = draw(st.sampled_from(coprime_weights(r)))
    return canonicalize(r, a)


@st.composite
def baskets(draw, r_max=30, max_entries=5):
    items = draw(st.lists(st.tuples(singularities(r_max), st.integers(1, 4)), max_size=max_entries))
    return Basket.of(items)


@pytest.mark.parametrize("a,r,expected", [(1, 2, 1), (3, 5, 2), (7, 10, 3)])
def test_mod_inverse_examples(a, r, expected):
    assert mod_inverse(a, r) == expected
    assert inverse_by_scan(a, r) == expected


def test_mod_inverse_matches_scan():
    for r in range(2, 60):
        for a in coprime_weights(r):
            assert mod_inverse(a, r) == inverse_by_scan(a, r)


@pytest.mark.parametrize("a,r", [(2, 4), (0, 5), (5, 5), (6, 5), (1, 1)])
def test_mod_inverse_rejects(a, r):
    with pytest.raises(ValueError):
        mod_inverse(a, r)


@pytest.mark.parametrize(
    "r,a,expected",
    [(5, 2, (5, 3, 2)), (5, 4, (5, 4, 4)), (2, 1, (2, 1, 1))],
)
def test_canonicalize_examples(r, a, expected):
    q = canonicalize(r, a)
    assert (q.r, q.a, q.b) == expected


@pytest.mark.parametrize("r,a", [(4, 2), (6, 3), (5, 0), (5, 5), (1, 0)])
def test_canonicalize_rejects(r, a):
    with pytest.raises(ValueError):
        canonicalize(r, a)


def test_rejects_noncanonical_direct_construction():
    with pytest.raises(ValueError):
        QuotientSingularity(5, 2, 3)
    with pytest.raises(ValueError):
        QuotientSingularity(5, 3, 3)
    with pytest.raises(ValueError):
        QuotientSingularity(1, 0, 0)


def test_canonical_singularities_count_up_to_27():
    assert sum(len(canonical_singularities(r)) for r in range(2, 28)) == 115
    assert [q.a for q in canonical_singularities(27)] == [26, 25, 23, 22, 20, 19, 17, 16, 14]


def test_local_correction_examples():
    assert local_correction(canonicalize(2, 1), 2) == Fraction(1, 4)
    assert local_correction(canonicalize(2, 1), 1) == 0
    assert local_correction(canonicalize(3, 2), 3) == Fraction(2, 3)


def test_local_correction_matches_defining_sum():
    for r in range(2, 30):
        for a in coprime_weights(r):
            q = canonicalize(r, a)
            for m in (1, 2, 3, r - 1, r, r + 1, 2 * r + 3, 41):
                if m >= 1:
                    assert local_correction(q, m) == l_direct(r, a, m), (r, a, m)


def test_basket_correction_examples():
    assert basket_correction(Basket(), 18) == 0
    assert basket_correction(Basket.parse("2*2/1"), 2) == Fraction(1, 2)
    viii = Basket.parse(CASE_VIII)
    assert basket_correction(viii, 2) == Fraction(2519, 840)
    oracle = sum(mult * l_direct(q.r, q.a, 2) for q, mult in viii)
    assert oracle == Fraction(2519, 840)


def test_miyaoka_sum_examples():
    assert miyaoka_sum(Basket()) == 0
    assert miyaoka_sum(Basket.parse("2/1")) == Fraction(3, 2)
    assert miyaoka_sum(Basket.parse(CASE_VIII)) == Fraction(9971, 420)
    assert Fraction(9971, 420) < 24


@given(singularities(), st.integers(1, 60))
def test_local_correction_nonnegative_and_monotone(q, m):
    assert local_correction(q, m) >= 0
    assert local_correction(q, m + 1) >= local_correction(q, m)


@given(st.integers(3, 60), st.data(), st.integers(1, 60))
def test_representative_independence(r, data, m):
    a = data.draw(st.sampled_from(coprime_weights(r)))
    assert l_direct(r, a, m) == l_direct(r, r - a, m) == local_correction(canonicalize(r, a), m)


@given(baskets(), st.integers(1, 40))
def test_results_are_reduced(basket, m):
    for value in (basket_correction(basket, m), miyaoka_sum(basket)):
        assert value.denominator > 0
        assert gcd(value.numerator, value.denominator) == 1
        assert Fraction(value.numerator, value.denominator) == value


def test_basket_merges_and_sorts():
    b = Basket.parse("1*5/2,2*2/1,1*5/3")
    assert b.spec == "2*2/1,2*5/3"
    assert b.size == 4
    assert str(b) == "2 x 1/2(1,-1,1), 2 x 1/5(3,-3,1)"


@given(baskets())
def test_spec_round_trip(basket):
    assert Basket.parse(basket.spec) == basket


@pytest.mark.parametrize("text", ["2*4/2", "x", "3*", "0*2/1", "2/1,,3/2", "1*1/0"])
def test_basket_parse_errors_name_item(text):
    with pytest.raises(BasketSpecError):
        Basket.parse(text)


def test_basket_rejects_bad_entries():
    q = canonicalize(3, 2)
    with pytest.raises(ValueError):
        Basket(((q, 0),))
    with pytest.raises(ValueError):
        Basket(((q, 1), (q, 1)))
    with pytest.raises(ValueError):
        Basket(((q, 1), (canonicalize(2, 1), 1)))


@pytest.mark.parametrize(
    "value,text", [(Fraction(1, 420), "1/420"), (Fraction(6), "6"), (Fraction(-3, 2), "-3/2"), (0, "0")]
)
def test_rational_serialization(value, text):
    assert format_rational(value) == text
    assert parse_rational(text) == value


@given(st.fractions())
def test_rational_round_trip(x):
    assert parse_rational(format_rational(x)) == x


@pytest.mark.parametrize("text", ["", "1/0", "a/b", "1.5"])
def test_parse_rational_rejects(text):
    with pytest.raises(ValueError):
        parse_rational(text)
