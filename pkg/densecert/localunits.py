#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# localunits.py

"""
Finite quotients of local unit groups of quadratic fields.

``ResidueRing`` realizes ``O/P^m`` on canonical representatives read off the
Hermite normal form ``(A, B + C w)`` of ``P^m``; every residue class has a
unique representative ``x + y w`` with ``0 <= x < A`` and ``0 <= y < C``.

``unit_quotient`` realizes ``U_P / (U_P^(1))^p`` inside ``(O/P^M)^*``. Each
level gives a quotient of the true group, so the first level whose quotient
reaches the predicted order ``(q - 1) p^[k_P:Q_p] |mu_p(k_P)|`` is exact.
"""

import logging
from itertools import product

from . import config, exceptions, fingroup, quadfield, utils, validate
from .cache import cache
from .models import fmt

log = logging.getLogger(__name__)


def resolve_prime(F, prime):
    """Return the prime ideal meant by ``prime``: an ``Ideal`` is returned
    as is, a rational prime selects its distinguished prime ideal.
    """
    if isinstance(prime, quadfield.Ideal):
        return prime
    return quadfield.splitting_type(F, prime).ideal


class ResidueRing:
    """The finite ring ``O/P^m``.

    Attributes:
        field (QuadField): The field.
        prime (Ideal): The prime ideal ``P``.
        level (int): The exponent ``m``.
        p (int): The rational prime below ``P``.
        e (int): Ramification index of ``P``.
        f (int): Residue degree of ``P``.
        modulus (Ideal): ``P^m``.
    """

    def __init__(self, field, prime, level):
        validate.level(level)
        self.field = field
        self.prime = prime
        self.level = level
        self.p = quadfield.ideal_prime(prime)
        self.e = quadfield.ramification_index(prime)
        self.f = quadfield.residue_degree(prime)
        self.modulus = prime ** level
        A, C = self.modulus.a, self.modulus.c
        if A * C > config.ELEMENT_CAP:
            raise exceptions.ClosureSizeError(
                "O/P^{} has {} elements; the cap is {}".format(
                    level, A * C, config.ELEMENT_CAP
                )
            )
        self._cofactor = self._find_cofactor()
        self._units = None

    def _find_cofactor(self):
        # An element of the conjugate prime outside P, to clear powers of p
        # from denominators of P-integral elements in the split case.
        conj = self.prime.conjugate()
        if conj == self.prime:
            return None
        t = self.field(conj.b, conj.c)
        if t in self.prime:
            t = t + conj.a
        return t

    @property
    def size(self):
        """``|O/P^m| = N(P)^m``."""
        return self.modulus.norm

    @property
    def unit_count(self):
        """``|(O/P^m)^*| = N(P)^(m-1) (N(P) - 1)``."""
        q = self.prime.norm
        return q ** (self.level - 1) * (q - 1)

    def canonical(self, u, v):
        """Canonical representative of the integral element ``u + v w``."""
        A, B, C = self.modulus.a, self.modulus.b, self.modulus.c
        k, y = divmod(v, C)
        return ((u - k * B) % A, y)

    def element(self, rep):
        """The integral element ``x + y w`` of a representative."""
        return self.field(*rep)

    def residues(self):
        """All representatives, in sorted order."""
        return list(product(range(self.modulus.a), range(self.modulus.c)))

    def mul(self, r, s):
        (x1, y1), (x2, y2) = r, s
        T, N = self.field.T, self.field.N
        return self.canonical(
            x1 * x2 - y1 * y2 * N, x1 * y2 + y1 * x2 + y1 * y2 * T
        )

    def add(self, r, s):
        return self.canonical(r[0] + s[0], r[1] + s[1])

    def power(self, r, k):
        result = self.one
        while k:
            if k & 1:
                result = self.mul(result, r)
            r = self.mul(r, r)
            k >>= 1
        return result

    @property
    def one(self):
        return self.canonical(1, 0)

    def is_unit(self, r):
        return not self.prime.contains_coords(*r)

    def inverse(self, r):
        if not self.is_unit(r):
            raise exceptions.IdealError(
                "{} is not a unit mod {}".format(r, self.modulus)
            )
        return self.power(r, self.unit_count - 1)

    def reduce(self, x):
        """Image of a ``P``-integral element in ``O/P^m``.

        Raises:
            IdealError: If ``x`` is not ``P``-integral.
        """
        x = quadfield.coerce(self.field, x)
        if x.is_integral():
            return self.canonical(*x.integer_coords())
        if x and quadfield.valuation(self.prime, x) < 0:
            raise exceptions.IdealError("{} is not {}-integral".format(x, self.prime))
        n = utils.lcm(x.a.denominator, x.b.denominator)
        k = utils.valuation(n, self.p)
        scale = self.field(n // self.p ** k)
        if k:
            # Only split primes admit p in the denominator of a P-integral
            # element; multiplying by cofactor^k clears it.
            scale = scale * self._cofactor ** k
        numerator = self.canonical(*(x * scale).integer_coords())
        denominator = self.canonical(*scale.integer_coords())
        return self.mul(numerator, self.inverse(denominator))

    def is_one_mod_prime(self, r):
        """Whether the residue is congruent to 1 modulo ``P``."""
        return self.prime.contains_coords(r[0] - 1, r[1])

    def units(self):
        """The unit group ``(O/P^m)^*`` as a ``FiniteGroup``."""
        if self._units is None:
            elements = [r for r in self.residues() if self.is_unit(r)]
            self._units = fingroup.FiniteGroup(
                elements,
                self.mul,
                self.one,
                self.inverse,
                name="(O/{}^{})^*".format(self.prime, self.level),
                abelian=True,
            )
        return self._units

    def __str__(self):
        return "O/{}^{} in {}".format(self.prime, self.level, self.field)

    def __repr__(self):
        return fmt.make_repr(self, ["field", "prime", "level"])


def residue_units(F, p, m):
    """Return the ``ResidueRing`` ``O/P^m`` for the prime ``P`` meant by
    ``p``; its unit group is ``ring.units()``.
    """
    ring = ResidueRing(F, resolve_prime(F, p), m)
    log.debug("Built %s with %s units", ring, ring.unit_count)
    return ring


def local_degree(P):
    """``[k_P : Q_p] = e f``."""
    return quadfield.ramification_index(P) * quadfield.residue_degree(P)


def mu_level(P):
    """Level at which solutions of ``x^p = 1`` in ``(O/P^M)^*`` number
    exactly ``|mu_p(k_P)| q^e``.
    """
    p = quadfield.ideal_prime(P)
    e = quadfield.ramification_index(P)
    return e + e // (p - 1) + 1


def mu_p_count(F, prime):
    """``|mu_p(k_P)|``, by counting solutions of ``x^p = 1``.

    >>> mu_p_count(quadfield.make_field(-3), 3)
    3
    """
    P = resolve_prime(F, prime)
    p = quadfield.ideal_prime(P)
    e = quadfield.ramification_index(P)
    ring = ResidueRing(F, P, mu_level(P))
    solutions = sum(
        1 for r in ring.residues() if ring.is_unit(r) and ring.power(r, p) == ring.one
    )
    count, rem = divmod(solutions, P.norm ** e)
    if rem:
        raise exceptions.StabilizationError(
            "{} solutions of x^{} = 1 is not a multiple of q^e".format(solutions, p)
        )
    return count


def predicted_order(F, prime):
    """``(q - 1) p^[k_P:Q_p] |mu_p(k_P)|``."""
    P = resolve_prime(F, prime)
    p = quadfield.ideal_prime(P)
    return (P.norm - 1) * p ** local_degree(P) * mu_p_count(F, P)


class LocalUnitQuotient:
    """``U_P / (U_P^(1))^p`` realized at a stable level.

    Attributes:
        field (QuadField): The field.
        prime (Ideal): The prime ideal ``P``.
        p (int): The rational prime below ``P``.
        stable_level (int): The level ``M``.
        ring (ResidueRing): ``O/P^M``.
        group (QuotientGroup): The quotient of ``(O/P^M)^*``.
        predicted_order (int): The closed-form order.
        mu_p (int): ``|mu_p(k_P)|``.
    """

    def __init__(self, field, prime, ring, group, predicted, mu_p):
        self.field = field
        self.prime = prime
        self.p = ring.p
        self.stable_level = ring.level
        self.ring = ring
        self.group = group
        self.predicted_order = predicted
        self.mu_p = mu_p

    @property
    def order(self):
        return self.group.order

    def reduce(self, x):
        """Image of a ``P``-unit in the quotient.

        Raises:
            IdealError: If the ``P``-valuation of ``x`` is not 0.
        """
        x = quadfield.coerce(self.field, x)
        if not x or quadfield.valuation(self.prime, x) != 0:
            raise exceptions.IdealError(
                "{} is not a unit at {}".format(x, self.prime)
            )
        return self.group.project(self.ring.reduce(x))

    def invariants(self):
        return fingroup.abelian_invariants(self.group)

    def __str__(self):
        return "U/U1^{} at {} in {} (order {}, level {})".format(
            self.p, self.prime, self.field, self.order, self.stable_level
        )

    def __repr__(self):
        return fmt.make_repr(self, ["field", "prime", "stable_level"])

    def to_json(self):
        return {
            "prime": self.prime,
            "stable_level": self.stable_level,
            "order": self.order,
            "predicted_order": self.predicted_order,
            "mu_p": self.mu_p,
            "invariants": self.invariants(),
        }


def quotient_at_level(F, P, M):
    """The quotient ``(O/P^M)^* / {x^p : x = 1 mod P}``."""
    ring = ResidueRing(F, P, M)
    units = ring.units()
    p = ring.p
    principal = [r for r in units if ring.is_one_mod_prime(r)]
    kernel = fingroup.Subgroup(units, {ring.power(r, p) for r in principal})
    return ring, fingroup.quotient(units, kernel)


@cache(enabled_option="CACHE_LOCAL_QUOTIENTS")
def unit_quotient(F, prime):
    """Return the ``LocalUnitQuotient`` at the prime meant by ``prime``.

    Raises:
        StabilizationError: If the order is not reached by
            ``config.MAX_STABLE_LEVEL``.
    """
    P = resolve_prime(F, prime)
    mu_p = mu_p_count(F, P)
    p = quadfield.ideal_prime(P)
    predicted = (P.norm - 1) * p ** local_degree(P) * mu_p
    for M in range(1, config.MAX_STABLE_LEVEL + 1):
        ring, group = quotient_at_level(F, P, M)
        log.debug(
            "Level %s at %s: quotient order %s of %s", M, P, group.order, predicted
        )
        if group.order == predicted:
            log.info("Unit quotient at %s in %s stable at level %s", P, F, M)
            return LocalUnitQuotient(F, P, ring, group, predicted, mu_p)
        if group.order > predicted:
            break
    raise exceptions.StabilizationError(
        "unit quotient at {} in {} did not reach order {} by level {}".format(
            P, F, predicted, config.MAX_STABLE_LEVEL
        )
    )


def reduce_elt(Q, x):
    """Image of the ``P``-unit ``x`` in the ``LocalUnitQuotient`` ``Q``."""
    return Q.reduce(x)
