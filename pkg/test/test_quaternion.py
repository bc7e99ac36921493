#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# test/test_quaternion.py

import pytest
from hypothesis import given
from hypothesis import strategies as st
from sympy import divisor_sigma, primerange

from densecert import config, exceptions, quaternion
from densecert.quaternion import QuatAlgebra, closure_check, local_units, make_bpinf

small = st.integers(min_value=-6, max_value=6)
vectors = st.tuples(small, small, small, small)


def test_algebra_must_be_definite():
    with pytest.raises(ValueError):
        QuatAlgebra(1, -1)
    with pytest.raises(ValueError):
        QuatAlgebra(-1, 0)


@given(vectors, vectors)
def test_reduced_norm_is_multiplicative(x, y):
    A = QuatAlgebra(-2, -5)
    x, y = A(*x), A(*y)
    assert (x * y).nrd() == x.nrd() * y.nrd()
    assert x * x.conjugate() == A(x.nrd())
    assert (x + x.conjugate()) == A(x.trd())
    assert (x * y).conjugate() == y.conjugate() * x.conjugate()


def test_quaternion_units():
    A = QuatAlgebra(-1, -1)
    i, j, k = A(0, 1), A(0, 0, 1), A(0, 0, 0, 1)
    assert i * j == k
    assert j * i == -k
    assert i * i == A(-1)
    assert str(A(1, 0, -2, 0)) == "1 + -2j"


# Orders
# =============================================================================


def test_hurwitz_order(hurwitz):
    assert hurwitz.discriminant == 2
    assert len(hurwitz.units()) == 24
    assert hurwitz.nrd(hurwitz.one) == 1
    assert hurwitz.trd(hurwitz.one) == 2


@pytest.mark.parametrize("n", [1, 3, 5, 9, 15])
def test_hurwitz_norm_counts(hurwitz, n):
    assert len(quaternion.norm_elements(hurwitz, n)) == 24 * divisor_sigma(n)


def test_order_at_three(order3):
    assert order3.discriminant == 3
    assert len(order3.units()) == 12


@pytest.mark.parametrize("p", list(primerange(2, 98)) + [103, 107])
def test_maximal_order_discriminant(p):
    O = make_bpinf(p)
    assert O.discriminant == p
    assert O.algebra.a < 0 and O.algebra.b < 0


@pytest.mark.parametrize(
    "p,key", [(2, "2"), (7, "3 mod 4"), (13, "5 mod 8"), (41, "1 mod 8")]
)
def test_residue_class(p, key):
    assert quaternion.residue_class(p) == key
    assert key in quaternion.PRESENTATIONS


def test_unsupported_primes():
    with pytest.raises(exceptions.UnsupportedPrimeError):
        quaternion.bpinf_presentation(101)
    with config.override(QUATERNION_PRESENTATION_LIMIT=2):
        with pytest.raises(exceptions.UnsupportedPrimeError):
            quaternion.bpinf_presentation(5)
        assert quaternion.bpinf_presentation(7)
    with pytest.raises(ValueError):
        quaternion.bpinf_presentation(9)


@given(vectors, vectors)
def test_structure_constants_match_algebra(u, v):
    O = make_bpinf(5)
    product = O.quaternion(O.mul(u, v))
    assert product == O.quaternion(u) * O.quaternion(v)
    assert O.coordinates(O.quaternion(u)) == u
    assert O.nrd(u) == O.quaternion(u).nrd()
    assert O.quaternion(O.conjugate(u)) == O.quaternion(u).conjugate()


def test_coordinates_reject_non_members(hurwitz):
    A = hurwitz.algebra
    with pytest.raises(ValueError):
        hurwitz.coordinates(A(0, 0, 0, quaternion.QUARTER))


def test_unit_action_is_free(hurwitz, order3):
    assert quaternion.unit_action_is_free(
        hurwitz, quaternion.norm_elements(hurwitz, 5)
    )
    assert quaternion.unit_action_is_free(order3, quaternion.norm_elements(order3, 2))
    assert not quaternion.unit_action_is_free(
        hurwitz, quaternion.norm_elements(hurwitz, 5)[:10]
    )


def test_box_bounds_cover_the_ellipsoid(hurwitz):
    bounds = quaternion.box_bounds(hurwitz, 5)
    for v in quaternion.norm_elements(hurwitz, 5):
        assert all(abs(x) <= b for x, b in zip(v, bounds))


def test_norm_elements_validation(hurwitz):
    with pytest.raises(ValueError):
        quaternion.norm_elements(hurwitz, 0)


# Local unit groups
# =============================================================================


def test_local_units(hurwitz, order3):
    assert local_units(order3, 3, 1).group.order == 72
    L = local_units(hurwitz, 2, 1)
    assert L.group.order == 12
    assert not L.group.is_abelian
    assert L.group.identity == L.scalar(1)


def test_local_units_norm_map(order3):
    L = local_units(order3, 3, 2)
    assert L.group.order == 81 * 72
    for u in list(L.group)[:50]:
        for v in list(L.group)[:5]:
            assert L.norm(L.group.op(u, v)) == L.norm(u) * L.norm(v) % L.modulus


def test_local_units_limits(hurwitz):
    with pytest.raises(ValueError):
        local_units(hurwitz, 2, 5)
    with config.override(ELEMENT_CAP=100):
        with pytest.raises(exceptions.ClosureSizeError):
            local_units(hurwitz, 2, 2)


# Closure certificates
# =============================================================================


def test_closure_check_at_three():
    report = closure_check(3, 2, 2, k_max=2)
    assert report.verdict == "verified"
    assert report.target_order == report.unit_count
    assert report.index == 1
    assert report.stable_k <= 2


def test_closure_check_at_two():
    report = closure_check(2, 5, 3, k_max=2)
    assert report.verdict == "verified"
    assert report.unit_count == 2 * report.target_order
    assert report.norm_counts == [144, 24 * 31]


def test_closure_check_needs_distinct_primes():
    with pytest.raises(ValueError):
        closure_check(3, 3, 1)
    with pytest.raises(ValueError):
        closure_check(3, 4, 1)


def test_closure_report_json():
    data = closure_check(3, 2, 1, k_max=2).to_json()
    assert data["index"] == 1
    assert data["orders"][-1] == data["closure_order"]
    assert len(data["norm_counts"]) == 2


def _uncontained_report():
    return quaternion.ClosureReport(
        3, 2, 1, 1, 48, 24, [12], [3], 4, contained=False
    )


def test_uncontained_closure_fails():
    report = _uncontained_report()
    assert report.index == 2
    assert report.verdict == "failed"
    assert report.to_json()["contained"] is False


def test_closure_check_records_containment():
    assert closure_check(3, 2, 1, k_max=2).to_json()["contained"] is True


@pytest.mark.slow
def test_closure_check_stabilizes():
    report = closure_check(2, 5, 3, k_max=4)
    assert report.verdict == "verified"
    assert report.stabilized
