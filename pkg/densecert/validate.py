#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# validate.py

"""
Methods for validating arguments.

Every validator returns ``True`` or raises a ``ValueError`` subclass; the
command-line surface maps these to the usage exit status.
"""

from sympy import isprime

from . import exceptions, utils

# pylint: disable=redefined-outer-name


def prime(p, name="p"):
    """Validate that ``p`` is a rational prime."""
    if isinstance(p, bool) or not isinstance(p, int) or p < 2 or not isprime(p):
        raise ValueError("`{}` must be a prime; got {!r}".format(name, p))
    return True


def field_discriminant(d):
    """Validate the squarefree integer ``d`` defining Q(sqrt(d))."""
    if isinstance(d, bool) or not isinstance(d, int):
        raise exceptions.FieldError("d must be an integer; got {!r}".format(d))
    if d in (0, 1):
        raise exceptions.FieldError(
            "d = {} does not define a quadratic field".format(d)
        )
    if not utils.is_squarefree(d):
        raise exceptions.FieldError("d = {} is not squarefree".format(d))
    return True


def imaginary(field):
    """Validate that ``field`` is imaginary quadratic."""
    if field.is_real:
        raise exceptions.FieldError(
            "{} is real; an imaginary quadratic field is required".format(field)
        )
    return True


def level(m, name="m"):
    """Validate a prime-power level ``m >= 1``."""
    if isinstance(m, bool) or not isinstance(m, int) or m < 1:
        raise ValueError("`{}` must be a positive integer; got {!r}".format(name, m))
    return True


def positive(n, name):
    """Validate a positive integer argument."""
    return level(n, name=name)


def sigma(field, places):
    """Validate a set of real places of ``field``."""
    places = tuple(places)
    if places and not field.is_real:
        raise exceptions.FieldError("{} has no real places".format(field))
    if any(place not in (0, 1) for place in places):
        raise ValueError("real places are 0 and 1; got {}".format(places))
    if len(set(places)) != len(places):
        raise ValueError("repeated real place in {}".format(places))
    return True


def disjoint(primes, excluded, name="S"):
    """Validate that the distinguished prime does not lie in ``primes``."""
    if excluded in primes:
        raise ValueError(
            "the distinguished prime {} may not belong to {}".format(excluded, name)
        )
    return True
