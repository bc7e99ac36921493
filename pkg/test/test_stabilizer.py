#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# test/test_stabilizer.py

from fractions import Fraction

import pytest
from sympy import n_order, primerange

from densecert import config, exceptions, localunits, quadfield, stabilizer
from densecert.quadfield import make_field
from densecert.stabilizer import TorusFiber

# Topological generators
# =============================================================================


def test_topgen_two_mod_five():
    cert = stabilizer.is_topological_generator(2, 5)
    assert cert.accepted
    assert cert.checks == [(2, 24), (5, 16)]
    assert cert.p2_rule is None


def test_topgen_seven_mod_three():
    cert = stabilizer.is_topological_generator(7, 3)
    assert not cert.accepted
    assert (2, 1) in cert.checks


@pytest.mark.parametrize("l,accepted", [(3, True), (5, True), (7, False), (17, False)])
def test_topgen_at_two(l, accepted):
    cert = stabilizer.is_topological_generator(l, 2)
    assert cert.accepted is accepted
    assert cert.p2_rule == l % 8
    assert cert.checks == []


@pytest.mark.parametrize("p", [3, 5, 7, 11, 13])
def test_topgen_agrees_with_order_mod_p_squared(p):
    for l in primerange(2, 100):
        if l == p:
            continue
        cert = stabilizer.is_topological_generator(l, p)
        assert cert.accepted is (n_order(l, p * p) == p * (p - 1))


def test_topgen_validation():
    with pytest.raises(ValueError):
        stabilizer.is_topological_generator(5, 5)
    with pytest.raises(ValueError):
        stabilizer.is_topological_generator(4, 5)


@pytest.mark.parametrize("p,l", [(5, 2), (2, 3), (7, 3), (3, 2)])
def test_find_topgen(p, l):
    assert stabilizer.find_topgen(p).l == l


def test_find_topgen_exclusions():
    assert stabilizer.find_topgen(5, exclude=[2]).l == 3
    assert stabilizer.find_topgen(2, exclude=[3]).l == 5


def test_find_topgen_exhaustion():
    with config.override(TOPGEN_SEARCH_CAP=2):
        with pytest.raises(exceptions.SearchExhaustedError):
            stabilizer.find_topgen(7)


def test_topgen_density():
    assert stabilizer.topgen_density(5) == Fraction(2, 5)
    assert stabilizer.topgen_density(7) == Fraction(2, 7)
    assert stabilizer.topgen_density(2) == Fraction(1, 2)
    assert stabilizer.find_topgen(5).to_json()["density"] == Fraction(2, 5)


@pytest.mark.parametrize("p", [3, 5, 7, 11, 13])
def test_topgen_density_counts_generators_mod_p_squared(p):
    # Units mod p^2 generating the whole group, over all units mod p^2.
    modulus, units = p * p, p * (p - 1)
    generators = sum(
        1 for a in range(1, modulus) if a % p and n_order(a, modulus) == units
    )
    assert Fraction(generators, units) == stabilizer.topgen_density(p)


# Stabilizer density
# =============================================================================


def test_modular1_certificate():
    cert = stabilizer.modular1_certificate(3, 3, 2, m_max=5)
    assert cert.accepted
    assert cert.full_levels == [1, 2, 3, 4, 5]
    assert cert.weil.field == make_field(-11)
    assert [total for _, _, total in cert.levels] == [2, 6, 18, 54, 162]


def test_modular1_at_two():
    cert = stabilizer.modular1_certificate(2, 3, 5)
    assert cert.accepted
    assert cert.l == 5
    assert cert.generators == [-1, 5]


def test_modular1_rejects_bad_l():
    cert = stabilizer.modular1_certificate(3, 3, 7)
    assert not cert.topgen.accepted
    assert not cert.accepted


def test_modular1_finds_l():
    cert = stabilizer.modular1_certificate(5, 3)
    assert cert.l == 2
    assert cert.accepted


@pytest.mark.parametrize("p", [2, 3, 5, 7])
@pytest.mark.parametrize("n", [3, 4])
def test_modular1_family(p, n):
    cert = stabilizer.modular1_certificate(p, n, m_max=3)
    assert cert.accepted
    assert len(cert.levels) == 3


def test_modular1_validation():
    with pytest.raises(ValueError):
        stabilizer.modular1_certificate(3, 2)
    with pytest.raises(ValueError):
        stabilizer.modular1_certificate(3, 3, m_max=0)


def test_split_image_needs_split_ring(gaussian):
    ring = localunits.residue_units(gaussian, 3, 1)
    with pytest.raises(exceptions.IdealError):
        stabilizer.split_image(ring, gaussian.w)
    ring = localunits.residue_units(gaussian, 5, 2)
    assert stabilizer.split_image(ring, gaussian.w) in (7, 18)


# Norm-one tori
# =============================================================================


@pytest.mark.parametrize(
    "p,kind",
    [
        (5, TorusFiber.Multiplicative),
        (3, TorusFiber.NormOneTorus),
        (2, TorusFiber.AdditiveTimesMu2),
    ],
)
def test_torus_fiber(gaussian, p, kind):
    assert stabilizer.torus_fiber(gaussian, p) is kind


def test_torus_fiber_depends_only_on_splitting():
    for d in (-23, -7, -5, -1, 2, 3, 5):
        F = make_field(d)
        for p in primerange(2, 30):
            kind = quadfield.splitting_type(F, p).kind
            assert stabilizer.torus_fiber(F, p) is stabilizer._FIBERS[kind]


def test_torus_element(gaussian):
    pi, beta = stabilizer.torus_element(gaussian, 13)
    assert pi.norm() == 13
    assert beta * beta.conjugate() == 1
    assert beta == pi / pi.conjugate()
    assert stabilizer.torus_element(gaussian, 7) is None


@pytest.mark.parametrize("d,p,l", [(-1, 5, 13), (-7, 2, 11)])
def test_approxtorus_search(d, p, l):
    F = make_field(d)
    cert = stabilizer.approxtorus_search(F, p)
    assert cert.found
    assert cert.l == l
    assert cert.scanned == [l]
    assert cert.pi.norm() == l
    assert cert.beta * cert.beta.conjugate() == 1


def test_approxtorus_search_exhaustion(gaussian):
    with pytest.raises(exceptions.SearchExhaustedError):
        stabilizer.approxtorus_search(gaussian, 5, bound=12)


def test_approxtorus_search_validation(gaussian, root_two):
    with pytest.raises(exceptions.FieldError):
        stabilizer.approxtorus_search(root_two, 7)
    with pytest.raises(ValueError):
        stabilizer.approxtorus_search(gaussian, 3)


def test_torus_certificate_json(gaussian):
    data = stabilizer.approxtorus_search(gaussian, 5).to_json()
    assert data["l"] == 13
    assert data["quotient_order"] == 20
    assert data["scanned"] == [13]


@pytest.mark.parametrize("d,p,l,m,index", [(-1, 5, 13, 2, 1), (-7, 2, 11, 3, 2)])
def test_unitary_index(d, p, l, m, index):
    result = stabilizer.unitary_index(make_field(d), p, l, m)
    assert result.index == index
    assert result.within_bound


def test_unitary_index_validation(gaussian):
    with pytest.raises(ValueError):
        stabilizer.unitary_index(gaussian, 5, 7, 2)
    with pytest.raises(ValueError):
        stabilizer.unitary_index(gaussian, 3, 13, 1)
    with pytest.raises(ValueError):
        stabilizer.unitary_index(gaussian, 5, 13, 0)
