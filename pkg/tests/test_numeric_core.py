from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from mhsums.numeric_core import (
    Composition,
    DomainError,
    binomial,
    compositions_up_to,
    format_rational,
    ones_composition,
    parse_rational,
    partial_weight,
    rational_pow,
)

rationals = st.fractions(max_denominator=10**6)


def test_binomial_examples():
    assert binomial(5, 2) == 10
    assert binomial(7, 0) == 1
    assert binomial(0, 0) == 1
    assert binomial(3, 5) == 0


def test_binomial_pascal_rule():
    for n in range(1, 65):
        for k in range(1, n + 1):
            assert binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k)


def test_rational_pow():
    assert rational_pow(Fraction(1, 2), 3) == Fraction(1, 8)
    assert rational_pow(Fraction(2, 3), -2) == Fraction(9, 4)
    assert rational_pow(Fraction(5, 7), 0) == 1
    assert rational_pow(0, 0) == 1
    with pytest.raises(DomainError):
        rational_pow(0, -1)


@given(rationals, rationals)
def test_canonical_form_closure(a, b):
    results = [a + b, a * b]
    if b != 0:
        results.append(a / b)
    for q in results:
        assert q.denominator > 0
        assert __import__("math").gcd(q.numerator, q.denominator) == 1


@given(st.fractions(min_value=-3, max_value=3, max_denominator=50), st.integers(0, 30))
def test_binomial_weights_sum_to_one(p, n):
    total = sum(binomial(n, k) * p**k * (1 - p) ** (n - k) for k in range(n + 1))
    assert total == 1


def test_rational_format_and_parse_roundtrip():
    assert format_rational(Fraction(7, 4)) == "7/4"
    assert format_rational(Fraction(-3, 1)) == "-3"
    assert parse_rational("-12/8") == Fraction(-3, 2)
    assert parse_rational("+5") == 5
    for bad in ("1.5", "1/0", "a/b", "", "1e3"):
        with pytest.raises(ValueError):
            parse_rational(bad)


@given(rationals)
def test_format_parse_inverse(q):
    assert parse_rational(format_rational(q)) == q


def test_composition_basics():
    c = Composition((2, 1, 3))
    assert c.weight == 6 and c.depth == 3
    assert c.admissible
    assert not Composition((1, 2)).admissible
    assert not Composition(()).admissible
    assert Composition.of("2,1") == Composition((2, 1))
    assert c[1:] == Composition((1, 3))
    assert c.reversed() == Composition((3, 1, 2))
    with pytest.raises(ValueError):
        Composition((1, 0))


def test_ones_composition():
    assert ones_composition(3).parts == (1, 1, 1)
    assert ones_composition(0).parts == ()
    assert ones_composition(5).weight == 5


def test_partial_weight():
    k = Composition((2, 1, 3))
    assert partial_weight(k, 2) == 3
    assert partial_weight(k, 0) == 0
    assert partial_weight(k, 3) == 6
    with pytest.raises(IndexError):
        partial_weight(k, 4)


def test_compositions_up_to_counts():
    # 2^w - 1 nonempty compositions of weight <= w
    for w in range(1, 7):
        comps = compositions_up_to(w)
        assert len(comps) == 2**w - 1
        assert len(set(comps)) == len(comps)
