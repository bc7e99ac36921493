#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# test/test_localunits.py

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from densecert import config, exceptions, fingroup, localunits, quadfield
from densecert.localunits import residue_units, unit_quotient
from densecert.quadfield import make_field

coords = st.integers(min_value=-200, max_value=200)


@pytest.mark.parametrize(
    "d,p,m,size,units",
    [(-1, 5, 2, 25, 20), (2, 2, 2, 4, 2), (-1, 3, 1, 9, 8), (-7, 2, 3, 8, 4)],
)
def test_residue_units(d, p, m, size, units):
    ring = residue_units(make_field(d), p, m)
    assert ring.size == size
    assert ring.unit_count == units
    assert ring.units().order == units


def test_residue_ring_rejects_bad_level(gaussian):
    with pytest.raises(ValueError):
        residue_units(gaussian, 5, 0)


def test_residue_ring_respects_element_cap(gaussian):
    with config.override(ELEMENT_CAP=100):
        with pytest.raises(exceptions.ClosureSizeError):
            residue_units(gaussian, 5, 3)


def test_canonical_representatives_are_unique(minus_five):
    ring = residue_units(minus_five, 5, 3)
    assert len(set(ring.residues())) == ring.size
    for x, y in ring.residues():
        assert ring.canonical(x, y) == (x, y)
        u, v = ring.modulus.basis()[1].integer_coords()
        assert ring.canonical(x + u, y + v) == (x, y)


@given(coords, coords, coords, coords)
def test_reduction_is_a_ring_homomorphism(a, b, c, e):
    F = make_field(-7)
    ring = residue_units(F, 2, 4)
    x, y = F(a, b), F(c, e)
    assert ring.reduce(x * y) == ring.mul(ring.reduce(x), ring.reduce(y))
    assert ring.reduce(x + y) == ring.add(ring.reduce(x), ring.reduce(y))


def test_reduce_clears_denominators_at_split_primes(gaussian):
    ring = residue_units(gaussian, 5, 2)
    x = gaussian(2, 1)
    assert ring.reduce(1 / x) == ring.inverse(ring.reduce(x))
    y = gaussian(2, -1)
    assert ring.mul(ring.reduce(y / 5), ring.reduce(5)) == ring.reduce(y)
    with pytest.raises(exceptions.IdealError):
        ring.reduce(gaussian(Fraction(1, 5)))


def test_reduce_ramified(root_two):
    ring = residue_units(root_two, 2, 3)
    third = ring.reduce(root_two(Fraction(1, 3)))
    assert ring.mul(third, ring.reduce(3)) == ring.one
    with pytest.raises(exceptions.IdealError):
        ring.reduce(root_two(Fraction(1, 2)))


def test_inverse_needs_a_unit(gaussian):
    ring = residue_units(gaussian, 5, 1)
    with pytest.raises(exceptions.IdealError):
        ring.inverse(ring.reduce(gaussian(-2, 1)))


def test_is_one_mod_prime(gaussian):
    ring = residue_units(gaussian, 5, 2)
    assert ring.is_one_mod_prime(ring.reduce(6))
    assert ring.is_one_mod_prime(ring.reduce(gaussian(-1, 1)))
    assert not ring.is_one_mod_prime(ring.reduce(2))


@pytest.mark.parametrize(
    "d,p,degree,mu",
    [(-1, 5, 1, 1), (2, 2, 2, 2), (-3, 3, 2, 3), (-1, 2, 2, 2), (-1, 3, 2, 1)],
)
def test_local_degree_and_mu(d, p, degree, mu):
    F = make_field(d)
    P = localunits.resolve_prime(F, p)
    assert localunits.local_degree(P) == degree
    assert localunits.mu_p_count(F, p) == mu


@pytest.mark.parametrize(
    "d,p,order,invariants",
    [
        (2, 2, 8, [2, 2, 2]),
        (-1, 5, 20, [20]),
        (-5, 5, 100, [5, 20]),
        (-3, 3, 54, [3, 3, 6]),
    ],
)
def test_unit_quotient(d, p, order, invariants):
    Q = unit_quotient(make_field(d), p)
    assert Q.order == order
    assert Q.order == Q.predicted_order
    assert Q.predicted_order == localunits.predicted_order(make_field(d), p)
    assert Q.invariants() == invariants


def test_stable_level_is_the_first_exact_level(minus_five):
    Q = unit_quotient(minus_five, 5)
    P = Q.prime
    for M in range(1, Q.stable_level):
        _, group = localunits.quotient_at_level(minus_five, P, M)
        assert group.order < Q.order


def test_unit_quotient_accepts_ideals(gaussian):
    P, Pbar = quadfield.prime_ideals_above(gaussian, 5)
    Q = unit_quotient(gaussian, Pbar)
    assert Q.prime == Pbar
    assert Q.order == unit_quotient(gaussian, P).order


def test_stabilization_cap(root_two):
    with config.override(MAX_STABLE_LEVEL=1, CACHE_LOCAL_QUOTIENTS=False):
        with pytest.raises(exceptions.StabilizationError):
            unit_quotient(root_two, 2)


def test_reduce_elt(gaussian):
    Q = unit_quotient(gaussian, 5)
    assert localunits.reduce_elt(Q, 1) == Q.group.identity
    # -1 is a 4th root of unity, so it survives in the prime-to-p part.
    assert localunits.reduce_elt(Q, -1) != Q.group.identity
    # The 5th powers of principal units are 1 + 25 Z_5 in the completion.
    assert localunits.reduce_elt(Q, 6) != Q.group.identity
    assert localunits.reduce_elt(Q, 26) == Q.group.identity
    for bad in (0, 5, gaussian(2, -1)):
        with pytest.raises(exceptions.IdealError):
            localunits.reduce_elt(Q, bad)


def test_reduce_is_multiplicative(minus_five):
    Q = unit_quotient(minus_five, 5)
    x, y = minus_five(2, 1), minus_five(3, -1)
    assert Q.reduce(x * y) == Q.group.op(Q.reduce(x), Q.reduce(y))
    assert Q.reduce(1 / x) == Q.group.inverse(Q.reduce(x))


def test_unit_quotient_json(gaussian):
    data = unit_quotient(gaussian, 5).to_json()
    assert data["order"] == data["predicted_order"] == 20
    assert data["mu_p"] == 1
    assert data["invariants"] == [20]


@pytest.mark.slow
@pytest.mark.parametrize("d", [-15, -11, -7, -6, -5, -3, -2, -1, 2, 3, 5, 6, 7, 10])
@pytest.mark.parametrize("p", [2, 3, 5, 7])
def test_unit_quotient_reaches_predicted_order(d, p):
    F = make_field(d)
    for P in quadfield.prime_ideals_above(F, p):
        Q = unit_quotient(F, P)
        assert Q.order == Q.predicted_order
        assert fingroup.min_generators(Q.group) == len(Q.invariants())


def test_reduce_elt_of_i_has_order_four(gaussian):
    Q = unit_quotient(gaussian, 5)
    assert Q.group.element_order(localunits.reduce_elt(Q, gaussian.w)) == 4


def test_reduce_elt_of_totally_positive_unit(root_two):
    Q = unit_quotient(root_two, 2)
    eps = root_two(1, 1)
    # The residue field is F_2, so eps is already a principal unit.
    assert eps - 1 in Q.prime
    assert localunits.reduce_elt(Q, eps) != Q.group.identity
    assert localunits.reduce_elt(Q, eps * eps) == Q.group.identity
    assert Q.order == 8
