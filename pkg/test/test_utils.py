#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# test/test_utils.py

from fractions import Fraction
from math import isqrt

import pytest
from hypothesis import given
from hypothesis import strategies as st
from sympy import isprime

from densecert import utils


@given(st.integers(min_value=-10_000, max_value=10_000).filter(bool))
def test_squarefree_decomposition(n):
    s, d = utils.squarefree_decomposition(n)
    assert s * s * d == n
    assert utils.is_squarefree(d)


def test_squarefree_decomposition_of_zero():
    with pytest.raises(ValueError):
        utils.squarefree_decomposition(0)


@given(st.integers(min_value=0, max_value=10**6))
def test_is_square(n):
    assert utils.is_square(n) == (isqrt(n) ** 2 == n)


def test_is_square_negative():
    assert not utils.is_square(-4)


@pytest.mark.parametrize(
    "a,p,answer",
    [(-4, 5, 1), (-4, 3, -1), (-7, 2, 1), (5, 2, -1), (8, 2, 0), (-20, 5, 0)],
)
def test_kronecker(a, p, answer):
    assert utils.kronecker(a, p) == answer


def test_kronecker_returns_plain_int():
    assert type(utils.kronecker(-4, 13)) is int
    assert type(utils.kronecker(2, 7)) is int


@given(st.integers(min_value=-200, max_value=200), st.integers(3, 60))
def test_kronecker_matches_euler_criterion(a, p):
    if not isprime(p):
        return
    expected = pow(a % p, (p - 1) // 2, p)
    expected = -1 if expected == p - 1 else expected
    assert utils.kronecker(a, p) == expected


def test_valuation():
    assert utils.valuation(24, 2) == 3
    assert utils.valuation(-75, 5) == 2
    assert utils.valuation(Fraction(3, 8), 2) == -3
    with pytest.raises(ValueError):
        utils.valuation(0, 3)


def test_int_log():
    assert utils.int_log(1, 5) == 0
    assert utils.int_log(125, 5) == 3
    with pytest.raises(ValueError):
        utils.int_log(12, 2)


def test_lcm_and_denominator():
    assert utils.lcm() == 1
    assert utils.lcm(4, 6, 10) == 60
    assert utils.denominator(Fraction(1, 3), Fraction(3, 4), 0) == 12


def test_prime_divisors():
    assert utils.prime_divisors(1) == []
    assert utils.prime_divisors(20) == [2, 5]


def test_powerset():
    assert list(utils.powerset([])) == [()]
    assert list(utils.powerset([1, 2], nonempty=True)) == [(1,), (2,), (1, 2)]
    assert len(list(utils.powerset(range(5)))) == 32


@pytest.mark.parametrize(
    "text,answer",
    [(None, []), ("", []), (" ", []), ("5", [5]), ("3,-7, 11", [3, -7, 11])],
)
def test_parse_int_list(text, answer):
    assert utils.parse_int_list(text) == answer


def test_parse_int_list_rejects_garbage():
    with pytest.raises(ValueError):
        utils.parse_int_list("3,x")
