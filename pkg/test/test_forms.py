#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# test/test_forms.py

import pytest
from hypothesis import given
from hypothesis import strategies as st

from densecert import forms


@pytest.mark.parametrize(
    "D,h",
    [(-3, 1), (-4, 1), (-7, 1), (-20, 2), (-23, 3), (-56, 4), (-84, 4), (-47, 5)],
)
def test_class_numbers(D, h):
    assert len(forms.reduced_forms(D)) == h


def test_reduced_forms_rejects_bad_discriminant():
    with pytest.raises(ValueError):
        forms.reduced_forms(-6)
    with pytest.raises(ValueError):
        forms.reduced_forms(5)


def test_reduce_form_is_reduced():
    f = forms.reduce_form(forms.Form(6, 5, 2))
    assert f.is_reduced()
    assert f.discriminant == forms.Form(6, 5, 2).discriminant


def test_reduce_form_rejects_indefinite():
    with pytest.raises(ValueError):
        forms.reduce_form(forms.Form(1, 3, 1))


def test_principal_form_is_identity():
    D = -23
    identity = forms.principal_form(D)
    for f in forms.reduced_forms(D):
        assert forms.compose(identity, f) == f
        assert forms.is_principal_form(f) == (f == identity)


def test_class_order():
    # The class group of discriminant -23 is cyclic of order 3.
    f = forms.Form(2, 1, 3)
    assert forms.class_order(f, 10) == 3
    assert forms.compose(forms.compose(f, f), f) == forms.principal_form(-23)
    assert forms.class_order(f, 2) is None


@given(st.sampled_from([-20, -23, -47, -56, -84, -104]))
def test_composition_is_closed_and_abelian(D):
    reduced = forms.reduced_forms(D)
    for f in reduced:
        for g in reduced:
            assert forms.compose(f, g) in reduced
            assert forms.compose(f, g) == forms.compose(g, f)


def test_form_evaluation():
    f = forms.Form(1, 1, 2)
    assert f(1, 1) == 4
    assert str(f) == "(1, 1, 2)"
    assert f.to_json() == ["1", "1", "2"]


def test_ideal_form():
    # (2, 1 + w) in Q(sqrt(-5)) has w^2 = -5.
    assert forms.ideal_form(2, 1, 0, 5) == forms.Form(2, 2, 3)
    with pytest.raises(ValueError):
        forms.ideal_form(4, 1, 0, 5)
