#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# test/test_fmt.py

from fractions import Fraction

from densecert import config, quadfield
from densecert.models import Report, fmt


def test_fmt_quadratic():
    assert fmt.fmt_quadratic(3, 2) == "3 + 2ω"
    assert fmt.fmt_quadratic(0, -1) == "-ω"
    assert fmt.fmt_quadratic(Fraction(-1, 2), 0) == "-1/2"


def test_fmt_value():
    assert fmt.fmt_value({"a": ["1", None]}) == "{a: [1, ∅]}"


def test_fmt_report():
    report = Report("fiber", {"d": -1, "p": 2}, "found", {"kind": "Multiplicative"})
    text = str(report)
    assert text.splitlines()[0].strip() == "fiber  [found]"
    assert "kind: Multiplicative" in text
    assert "d: -1" in text
    assert fmt.TOP_LEFT_CORNER in text


@config.override(REPR_VERBOSITY=fmt.LOW)
def test_low_verbosity_repr():
    F = quadfield.make_field(-7)
    assert repr(F) == "QuadField(d=-7)"
    assert repr(F(1, 2)).startswith("QuadElt(field=QuadField(d=-7)")


@config.override(REPR_VERBOSITY=fmt.HIGH)
def test_high_verbosity_repr():
    F = quadfield.make_field(-7)
    assert repr(F) == str(F) == "Q(sqrt(-7))"
    assert repr(F(1, 2)) == "1 + 2ω"
