#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# hondatate.py

"""
Invariants of quadratic Weil numbers.

A root ``pi`` of ``x^2 - t x + n0`` with ``n0 = p^a`` determines an isogeny
class of abelian varieties over the field with ``p^a`` elements. The center
of its endomorphism algebra is ``K = Q(pi)``; the algebra is determined by
local invariants at the primes of ``K`` above ``p`` and at the real places of
``K``. The order ``e`` of the algebra in the Brauer group of ``K`` gives the
dimension ``e [K:Q] / 2``.
"""

import logging
from fractions import Fraction

from . import constants, exceptions, quadfield, utils, validate
from .models import fmt

log = logging.getLogger(__name__)

#: Degree of the center field over Q.
DEGREE = 2


def newton_slopes(t, n0, p):
    """Slopes of the Newton polygon of ``x^2 - t x + n0`` at ``p``,
    normalized so that they sum to 1.

    >>> newton_slopes(2, 8, 2)
    (Fraction(1, 3), Fraction(2, 3))
    >>> newton_slopes(0, 5, 5)
    (Fraction(1, 2), Fraction(1, 2))
    """
    vq = utils.valuation(n0, p)
    if t and 2 * utils.valuation(t, p) < vq:
        vt = utils.valuation(t, p)
        return (Fraction(vt, vq), Fraction(vq - vt, vq))
    return (Fraction(1, 2), Fraction(1, 2))


class WeilClass:
    """The invariants of a quadratic Weil number ``pi``.

    Attributes:
        p (int): The characteristic.
        a (int): The exponent, so that ``q = p^a``.
        t (int): The trace of ``pi``.
        n0 (int): The norm of ``pi``.
        field (QuadField): ``K = Q(pi)``.
        pi (QuadElt): The Weil number.
        finite_invariants (list[tuple[Ideal, Fraction]]): Local invariants at
            the primes above ``p``, in HNF order.
        real_invariants (list[tuple[int, Fraction]]): Local invariants at the
            real places.
        slopes (tuple[Fraction]): The normalized Newton slopes.
        geom_simple (bool): Whether no power of ``pi`` is rational.
    """

    def __init__(self, p, a, t, n0, field, pi, finite_invariants, real_invariants):
        self.p = p
        self.a = a
        self.t = t
        self.n0 = n0
        self.field = field
        self.pi = pi
        self.finite_invariants = finite_invariants
        self.real_invariants = real_invariants
        self.slopes = newton_slopes(t, n0, p)
        self.geom_simple = is_geom_simple(self)

    @property
    def invariants(self):
        return [inv for _, inv in self.finite_invariants + self.real_invariants]

    @property
    def e(self):
        """The order of the endomorphism algebra in the Brauer group."""
        return utils.denominator(*self.invariants)

    @property
    def dim(self):
        return self.e * DEGREE // 2

    @property
    def invariant_sum(self):
        return sum(self.invariants, Fraction(0)) % 1

    @property
    def reciprocity_holds(self):
        """Whether the local invariants sum to 0 in ``Q/Z``."""
        return self.invariant_sum == 0

    @property
    def polynomial(self):
        return (self.t, self.n0)

    def __str__(self):
        return "WeilClass(x^2 - {}x + {} over {}, dim {})".format(
            self.t, self.n0, self.field, self.dim
        )

    def __repr__(self):
        return fmt.make_repr(self, ["t", "p", "a", "field"])

    def to_json(self):
        return {
            "p": self.p,
            "a": self.a,
            "poly": list(self.polynomial),
            "field": self.field,
            "pi": self.pi,
            "finite_invariants": [
                {"prime": P, "inv": inv} for P, inv in self.finite_invariants
            ],
            "real_invariants": [
                {"place": v, "inv": inv} for v, inv in self.real_invariants
            ],
            "slopes": list(self.slopes),
            "e": self.e,
            "dim": self.dim,
            "geom_simple": self.geom_simple,
        }


def weil_number(t, n0):
    """Return ``(K, pi)`` for a root of ``x^2 - t x + n0``.

    Raises:
        WeilPolynomialError: If the polynomial has rational roots.

    >>> K, pi = weil_number(4, 5)
    >>> print(K, pi)
    Q(sqrt(-1)) 2 + ω
    """
    disc = t * t - 4 * n0
    if utils.is_square(disc):
        raise exceptions.WeilPolynomialError(
            "x^2 - {}x + {} has rational roots; not a quadratic Weil class".format(
                t, n0
            )
        )
    s, d = utils.squarefree_decomposition(disc)
    K = quadfield.make_field(d)
    pi = (K(t) + K.sqrt_d * s) / 2
    return K, pi


def local_invariant(P, pi, q):
    """``(v_P(pi) / v_P(q)) [K_P:Q_p]`` modulo 1."""
    e = quadfield.ramification_index(P)
    f = quadfield.residue_degree(P)
    ratio = Fraction(quadfield.valuation(P, pi), quadfield.valuation(P, q))
    return (ratio * e * f) % 1


def weil_class(t, p, a, real=False):
    """Analyze the Weil polynomial ``x^2 - t x + p^a``.

    With ``real=True`` the polynomial is ``x^2 - p^a`` instead, whose roots
    are the real Weil numbers ``+-sqrt(p^a)``; ``t`` must then be 0.

    Raises:
        WeilPolynomialError: If the Weil bound fails, the polynomial has
            rational roots, or ``real`` is combined with a nonzero trace.
    """
    validate.prime(p)
    validate.positive(a, "a")
    q = p ** a
    if real:
        if t != 0:
            raise exceptions.WeilPolynomialError(
                "the real Weil number has trace 0; got {}".format(t)
            )
        n0 = -q
    else:
        if t * t > 4 * q:
            raise exceptions.WeilPolynomialError(
                "Weil bound fails: {}^2 > 4 * {}".format(t, q)
            )
        n0 = q
    K, pi = weil_number(t, n0)
    if pi.norm() != n0:
        raise exceptions.WeilPolynomialError(
            "{} has norm {}, not {}".format(pi, pi.norm(), n0)
        )

    finite = [
        (P, local_invariant(P, pi, q)) for P in quadfield.prime_ideals_above(K, p)
    ]
    # A real Weil number is real at both places of a real field.
    half = Fraction(1, 2)
    real_invs = [(v, half) for v in constants.REAL_PLACES] if K.is_real else []
    W = WeilClass(p, a, t, n0, K, pi, finite, real_invs)
    if not W.reciprocity_holds:
        raise exceptions.WeilPolynomialError(
            "local invariants of {} sum to {}".format(W, W.invariant_sum)
        )
    log.debug("Analyzed %s with invariants %s", W, W.invariants)
    return W


def is_geom_simple(W):
    """Whether ``pi^k`` is irrational for every ``k >= 1``.

    Distinct valuations of ``pi`` and its conjugate at a prime above ``p``
    decide it; otherwise ``pi^k`` is rational exactly when the root of unity
    test on ``pi / conj(pi)`` succeeds.
    """
    K, pi = W.field, W.pi
    conj = pi.conjugate()
    for P in quadfield.prime_ideals_above(K, W.p):
        if quadfield.valuation(P, pi) != quadfield.valuation(P, conj):
            return True
    w = quadfield.unit_group(K).w
    return (pi / conj) ** w != 1


def _require(condition, message, *args):
    if not condition:
        raise exceptions.IsogClassError(message.format(*args))


def isogclass(p, n):
    """The class of ``x^2 - p x + p^n``, an ``n``-dimensional, geometrically
    simple class whose center is imaginary quadratic with ``p`` split.

    Raises:
        IsogClassError: If one of the guaranteed properties fails.

    >>> W = isogclass(2, 3)
    >>> print(W.field, W.dim, sorted(inv for _, inv in W.finite_invariants))
    Q(sqrt(-7)) 3 [Fraction(1, 3), Fraction(2, 3)]
    """
    validate.prime(p)
    if n < 3:
        raise ValueError("n must be at least 3; got {}".format(n))
    W = weil_class(p, p, n)
    _require(p * p - 4 * p ** n < 0, "discriminant of {} is not negative", W)
    splitting = quadfield.splitting_type(W.field, p)
    _require(
        splitting.kind is quadfield.SplittingKind.SPLIT,
        "{} is not split in {}",
        p,
        W.field,
    )
    expected = [Fraction(1, n), Fraction(n - 1, n)]
    found = sorted(inv for _, inv in W.finite_invariants)
    _require(found == expected, "invariants {} differ from {}", found, expected)
    _require(W.slopes == tuple(expected), "Newton slopes are {}", W.slopes)
    _require(W.dim == n, "dimension {} is not {}", W.dim, n)
    _require(W.geom_simple, "{} is not geometrically simple", W)
    return W
