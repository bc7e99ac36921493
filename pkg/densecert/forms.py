#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# forms.py

"""
Positive definite binary quadratic forms ``a x^2 + b xy + c y^2``.

Forms of a negative fundamental discriminant ``D = b^2 - 4ac`` model the ideal
classes of the imaginary quadratic field of discriminant ``D``. Reduction
picks the unique reduced form in a proper equivalence class, so two ideals
are in the same class exactly when their forms reduce to the same triple.
"""

import collections
from math import gcd, isqrt

from sympy.core.numbers import igcdex


class Form(collections.namedtuple("Form", ["a", "b", "c"])):
    """A binary quadratic form ``(a, b, c)``.

    Attributes:
        a (int): Coefficient of ``x^2``.
        b (int): Coefficient of ``xy``.
        c (int): Coefficient of ``y^2``.
    """

    __slots__ = ()

    @property
    def discriminant(self):
        """int: ``b^2 - 4ac``."""
        return self.b * self.b - 4 * self.a * self.c

    @property
    def is_primitive(self):
        return gcd(gcd(self.a, self.b), self.c) == 1

    def is_reduced(self):
        """Whether ``|b| <= a <= c``, with ``b >= 0`` when either bound is
        attained.
        """
        a, b, c = self
        if not abs(b) <= a <= c:
            return False
        if (abs(b) == a or a == c) and b < 0:
            return False
        return True

    def __call__(self, x, y):
        return self.a * x * x + self.b * x * y + self.c * y * y

    def __str__(self):
        return "({}, {}, {})".format(*self)

    def to_json(self):
        return [str(self.a), str(self.b), str(self.c)]


def reduce_form(form):
    """Return the reduced form properly equivalent to a positive definite
    ``form``.

    >>> reduce_form(Form(6, 5, 2))
    Form(a=2, b=-1, c=3)
    """
    a, b, c = form
    if a <= 0 or form.discriminant >= 0:
        raise ValueError("{} is not positive definite".format(tuple(form)))
    while True:
        if a > c:
            a, c = c, a
            b = -b
            continue
        if abs(b) > a:
            r = b % (2 * a)
            if r > a:
                r -= 2 * a
            q = (b - r) // (2 * a)
            c = c - q * b + q * q * a
            b = r
            continue
        if (abs(b) == a or a == c) and b < 0:
            b = -b
            continue
        return Form(a, b, c)


def principal_form(D):
    """The identity form of discriminant ``D``.

    >>> principal_form(-20), principal_form(-7)
    (Form(a=1, b=0, c=5), Form(a=1, b=1, c=2))
    """
    b = D % 2
    return Form(1, b, (b * b - D) // 4)


def is_principal_form(form):
    """Whether ``form`` lies in the identity class."""
    return reduce_form(form) == principal_form(form.discriminant)


def reduced_forms(D):
    """All primitive reduced forms of the negative discriminant ``D``, sorted.

    >>> reduced_forms(-20)
    [Form(a=1, b=0, c=5), Form(a=2, b=2, c=3)]
    """
    if D >= 0 or D % 4 not in (0, 1):
        raise ValueError("{} is not a negative discriminant".format(D))
    forms = []
    # A reduced form has 3a^2 <= |D|.
    for a in range(1, isqrt(-D // 3) + 1):
        for b in range(-a + 1, a + 1):
            if (b - D) % 2:
                continue
            numerator = b * b - D
            if numerator % (4 * a):
                continue
            f = Form(a, b, numerator // (4 * a))
            if f.is_reduced() and f.is_primitive:
                forms.append(f)
    return sorted(forms)


def compose(f1, f2):
    """Compose two primitive forms of the same discriminant; return the
    reduced product.
    """
    D = f1.discriminant
    if f2.discriminant != D:
        raise ValueError("forms {} and {} have different discriminants".format(f1, f2))
    a1, b1, _ = f1
    a2, b2, _ = f2
    s = (b1 + b2) // 2
    u1, v1, d1 = igcdex(a1, a2)
    u2, v2, d = igcdex(d1, s)
    a3 = (a1 * a2) // (d * d)
    b3 = (u2 * u1 * a1 * b2 + u2 * v1 * a2 * b1 + v2 * (b1 * b2 + D) // 2) // d
    b3 %= 2 * a3
    c3 = (b3 * b3 - D) // (4 * a3)
    return reduce_form(Form(a3, b3, c3))


def class_order(form, cap):
    """Order of the class of ``form``, or ``None`` if it exceeds ``cap``."""
    identity = principal_form(form.discriminant)
    current = reduce_form(form)
    for k in range(1, cap + 1):
        if current == identity:
            return k
        current = compose(current, form)
    return None


def ideal_form(A, B, T, N):
    """The form ``N(xA + y(B + w)) / A`` of the primitive ideal
    ``(A, B + w)``, where ``w^2 = T w - N``.
    """
    c, rem = divmod(B * B + B * T + N, A)
    if rem:
        raise ValueError("({}, {} + w) is not an ideal".format(A, B))
    return Form(A, 2 * B + T, c)
