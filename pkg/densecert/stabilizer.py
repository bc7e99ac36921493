#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# stabilizer.py

"""
Density certificates for stabilizer groups and norm-one tori.

The group of units of ``O_K[1/l]`` is dense in the ``p``-adic units once
``l`` is a topological generator of ``Z_p^*`` (up to roots of unity). For a
split prime ``p = P conj(P)`` every computation happens in the
``P``-coordinate, so ``O/P^m`` is identified with ``Z/p^m``.
"""

import logging
from enum import Enum
from fractions import Fraction

from sympy import primerange, totient

from . import config, exceptions, fingroup, hondatate, quadfield, utils, validate
from .compute.parallel import CandidateSearch
from .localunits import ResidueRing, unit_quotient
from .models import fmt

log = logging.getLogger(__name__)


# Topological generators
# =============================================================================


class TopGenCertificate:
    """The outcome of the topological-generator test for ``l`` at ``p``.

    Attributes:
        l (int): The candidate.
        p (int): The prime.
        checks (list[tuple[int, int]]): For odd ``p``, pairs
            ``(k, l^(p(p-1)/k) mod p^2)`` over the primes ``k | p(p-1)``.
        accepted (bool): Whether ``l`` generates ``Z_p^*`` topologically
            (together with ``-1`` when ``p = 2``).
        p2_rule (int): ``l mod 8`` when ``p = 2``, else ``None``.
    """

    def __init__(self, l, p, checks, accepted, p2_rule=None):
        self.l = l
        self.p = p
        self.checks = checks
        self.accepted = accepted
        self.p2_rule = p2_rule

    @property
    def density(self):
        """Dirichlet density of the accepted primes."""
        return topgen_density(self.p)

    def __str__(self):
        return "TopGenCertificate(l={}, p={}, accepted={})".format(
            self.l, self.p, self.accepted
        )

    def __repr__(self):
        return fmt.make_repr(self, ["l", "p", "accepted"])

    def to_json(self):
        return {
            "l": self.l,
            "p": self.p,
            "checks": [{"k": k, "alpha": alpha} for k, alpha in self.checks],
            "accepted": self.accepted,
            "p2_rule": self.p2_rule,
            "density": self.density,
        }


def topgen_density(p):
    """``phi(p - 1) / p`` for odd ``p``, and ``1/2`` for ``p = 2``.

    >>> topgen_density(5)
    Fraction(2, 5)
    """
    if p == 2:
        return Fraction(1, 2)
    return Fraction(int(totient(p - 1)), p)


def is_topological_generator(l, p):
    """Decide whether ``l`` is a topological generator of ``Z_p^*``.

    For odd ``p`` this holds iff ``l`` generates ``(Z/p^2)^*``, i.e. no
    ``l^(p(p-1)/k)`` with ``k`` a prime divisor of ``p(p-1)`` is 1 modulo
    ``p^2``. For ``p = 2`` the group ``<-1, l>`` is dense iff
    ``l = 3, 5 mod 8``.

    >>> is_topological_generator(2, 5).checks
    [(2, 24), (5, 16)]
    >>> is_topological_generator(7, 3).accepted
    False
    """
    validate.prime(l, name="l")
    validate.prime(p)
    if l == p:
        raise ValueError("l and p must differ; both are {}".format(p))
    if p == 2:
        residue = l % 8
        return TopGenCertificate(l, p, [], residue in (3, 5), p2_rule=residue)
    order = p * (p - 1)
    checks = [(k, pow(l, order // k, p * p)) for k in utils.prime_divisors(order)]
    accepted = all(alpha != 1 for _, alpha in checks)
    return TopGenCertificate(l, p, checks, accepted)


def find_topgen(p, exclude=()):
    """The certificate of the smallest accepted prime ``l`` outside
    ``exclude`` and different from ``p``.

    Raises:
        SearchExhaustedError: If none is found below
            ``config.TOPGEN_SEARCH_CAP``.

    >>> find_topgen(7).l
    3
    """
    validate.prime(p)
    exclude = set(exclude) | {p}
    for l in primerange(2, config.TOPGEN_SEARCH_CAP + 1):
        if l in exclude:
            continue
        certificate = is_topological_generator(l, p)
        if certificate.accepted:
            return certificate
    raise exceptions.SearchExhaustedError(
        "no topological generator of Z_{}^* below {}".format(
            p, config.TOPGEN_SEARCH_CAP
        )
    )


# Split completions
# =============================================================================


def _require_split(F, p):
    splitting = quadfield.splitting_type(F, p)
    if splitting.kind is not quadfield.SplittingKind.SPLIT:
        raise ValueError("{} is not split in {}".format(p, F))
    return splitting.ideal


def split_image(ring, x):
    """Image of a ``P``-unit in ``Z/p^m`` under the split identification."""
    u, v = ring.reduce(x)
    if v:
        raise exceptions.IdealError("{} is not a split residue ring".format(ring))
    return u


def _level_closure(F, P, m, elements):
    ring = ResidueRing(F, P, m)
    G = fingroup.units_mod(ring.p ** m)
    images = [split_image(ring, x) for x in elements]
    return G, fingroup.closure(G, images)


# Stabilizer density
# =============================================================================


class Modular1Certificate:
    """Finite-level density certificate for the units of ``End(A)[1/l]``.

    Attributes:
        weil (WeilClass): The class of ``x^2 - p x + p^n``.
        prime (Ideal): The prime above ``p`` whose coordinate is used.
        topgen (TopGenCertificate): The test of ``l``.
        generators (list[QuadElt]): The roots of unity generator and ``l``.
        levels (list[tuple[int, int, int]]): Triples ``(m, |closure|,
            |(Z/p^m)^*|)``.
    """

    def __init__(self, weil, prime, topgen, generators, levels):
        self.weil = weil
        self.prime = prime
        self.topgen = topgen
        self.generators = generators
        self.levels = levels

    @property
    def l(self):
        return self.topgen.l

    @property
    def full_levels(self):
        return [m for m, order, total in self.levels if order == total]

    @property
    def accepted(self):
        return self.topgen.accepted and len(self.full_levels) == len(self.levels)

    def __str__(self):
        return "Modular1Certificate(p={}, n={}, l={}, accepted={})".format(
            self.weil.p, self.weil.a, self.l, self.accepted
        )

    def __repr__(self):
        return fmt.make_repr(self, ["weil", "prime", "topgen"])

    def to_json(self):
        return {
            "weil": self.weil,
            "prime": self.prime,
            "topgen": self.topgen,
            "generators": self.generators,
            "levels": [
                {"m": m, "order": order, "group_order": total}
                for m, order, total in self.levels
            ],
            "full_levels": self.full_levels,
            "accepted": self.accepted,
        }


def modular1_certificate(p, n, l=None, m_max=4):
    """Certify that the units of ``End(A)[1/l]`` are dense in the stabilizer
    group of the class ``isogclass(p, n)``.

    The check is reduced to the ``P``-coordinate: the images of the roots of
    unity of ``K`` and of ``l`` must generate ``(Z/p^m)^*`` for each
    ``m <= m_max``.
    """
    validate.level(m_max, name="m_max")
    W = hondatate.isogclass(p, n)
    K = W.field
    P = _require_split(K, p)
    if l is None:
        topgen = find_topgen(p)
    else:
        topgen = is_topological_generator(l, p)
    zeta, _ = quadfield.roots_of_unity_generator(K)
    generators = [zeta, K(topgen.l)]
    levels = []
    for m in range(1, m_max + 1):
        G, H = _level_closure(K, P, m, generators)
        levels.append((m, H.order, G.order))
        log.debug("Level %s: closure of order %s in %s", m, H.order, G)
    certificate = Modular1Certificate(W, P, topgen, generators, levels)
    log.info("%s", certificate)
    return certificate


# Norm-one tori
# =============================================================================


class TorusFiber(Enum):
    """Special fiber of the norm-one torus at ``p``."""

    Multiplicative = "Multiplicative"
    NormOneTorus = "NormOneTorus"
    AdditiveTimesMu2 = "AdditiveTimesMu2"

    def __str__(self):
        return self.value

    def to_json(self):
        return self.value

    @classmethod
    def from_json(cls, value):
        return cls(value)


_FIBERS = {
    quadfield.SplittingKind.SPLIT: TorusFiber.Multiplicative,
    quadfield.SplittingKind.INERT: TorusFiber.NormOneTorus,
    quadfield.SplittingKind.RAMIFIED: TorusFiber.AdditiveTimesMu2,
}


def torus_fiber(F, p):
    """Classify the fiber at ``p`` by the splitting of ``p``.

    >>> torus_fiber(quadfield.make_field(-1), 2)
    <TorusFiber.AdditiveTimesMu2: 'AdditiveTimesMu2'>
    """
    return _FIBERS[quadfield.splitting_type(F, p).kind]


def torus_element(F, l):
    """Return ``(pi, beta)`` with ``N(pi) = l`` and ``beta = pi / conj(pi)``,
    or ``None`` if ``l`` is not a norm.
    """
    pi = quadfield.cornacchia(F, l)
    if pi is None:
        return None
    beta = pi * pi / l
    if beta * beta.conjugate() != 1:
        raise exceptions.FieldError("{} is not in the norm-one torus".format(beta))
    return pi, beta


class TorusCertificate:
    """An accepted norm-one element ``beta = pi / conj(pi)``.

    Attributes:
        field (QuadField): The field.
        prime (Ideal): The split prime above ``p``.
        l (int): The accepted prime.
        pi (QuadElt): An element of norm ``l``.
        beta (QuadElt): ``pi / conj(pi)``.
        beta_image (tuple): Image of ``beta`` in the unit quotient.
        quotient_order (int): Order of the unit quotient at ``prime``.
        scanned (list[int]): The split primes examined, in order.
    """

    def __init__(self, field, prime, quotient_order):
        self.field = field
        self.prime = prime
        self.quotient_order = quotient_order
        self.l = None
        self.pi = None
        self.beta = None
        self.beta_image = None
        self.scanned = []

    @property
    def found(self):
        return self.l is not None

    def __str__(self):
        return "TorusCertificate({}, l={}, beta={})".format(
            self.prime, self.l, self.beta
        )

    def __repr__(self):
        return fmt.make_repr(self, ["field", "prime", "l"])

    def to_json(self):
        return {
            "field": self.field,
            "prime": self.prime,
            "l": self.l,
            "pi": self.pi,
            "beta": self.beta,
            "beta_image": None if self.beta_image is None else list(self.beta_image),
            "quotient_order": self.quotient_order,
            "scanned": self.scanned,
        }


class TorusSearch(CandidateSearch):
    """Scan split primes ``l`` for a ``beta`` that, with the roots of unity,
    generates the unit quotient.
    """

    description = "Torus primes"

    @staticmethod
    def evaluate(l, F, Q, mu_images):  # pylint: disable=arguments-differ
        found = torus_element(F, l)
        if found is None:
            return (l, None, None, None, False)
        pi, beta = found
        image = Q.reduce(beta)
        whole = fingroup.closure(Q.group, mu_images + [image]).is_whole()
        return (l, pi, beta, image, whole)

    def __init__(self, candidates, F, Q, mu_images, certificate):
        self.certificate = certificate
        super().__init__(candidates, F, Q, mu_images)

    def initial(self):
        return self.certificate

    def accept(self, value, result):
        l, pi, beta, image, whole = value
        result.scanned.append(l)
        if whole:
            result.l, result.pi, result.beta, result.beta_image = l, pi, beta, image
            self.done = True
        return result


def approxtorus_search(F, p, bound=None):
    """The smallest split prime ``l <= bound`` whose ``beta`` generates the
    unit quotient at the distinguished prime above ``p`` together with the
    roots of unity.

    Raises:
        SearchExhaustedError: If no prime up to ``bound`` is accepted.
    """
    validate.imaginary(F)
    bound = config.TORUS_SEARCH_BOUND if bound is None else bound
    P = _require_split(F, p)
    Q = unit_quotient(F, P)
    zeta, _ = quadfield.roots_of_unity_generator(F)
    mu_images = [Q.reduce(zeta)]
    candidates = (l for l in quadfield.split_primes(F, 2, bound + 1) if l != p)
    certificate = TorusCertificate(F, P, Q.order)
    certificate = TorusSearch(candidates, F, Q, mu_images, certificate).run()
    if not certificate.found:
        raise exceptions.SearchExhaustedError(
            "no split prime up to {} gives a dense torus at {} in {}".format(
                bound, P, F
            )
        )
    log.info("Torus search at %s accepted l = %s", P, certificate.l)
    return certificate


class UnitaryIndex:
    """The index of ``<beta mod p^m>`` in ``(Z/p^m)^*``.

    Attributes:
        index (int): The index.
        mu (int): ``|mu(F)|``, the bound on the index of the closure.
        beta (QuadElt): The norm-one element.
        image (int): Its residue modulo ``p^m``.
    """

    def __init__(self, index, mu, beta, image, m):
        self.index = index
        self.mu = mu
        self.beta = beta
        self.image = image
        self.m = m

    @property
    def within_bound(self):
        return self.index <= self.mu

    def __str__(self):
        return "UnitaryIndex(index={}, bound={})".format(self.index, self.mu)

    def __repr__(self):
        return fmt.make_repr(self, ["index", "mu", "m"])

    def to_json(self):
        return {
            "index": self.index,
            "mu": self.mu,
            "beta": self.beta,
            "image": self.image,
            "m": self.m,
            "within_bound": self.within_bound,
        }


def unitary_index(F, p, l, m):
    """Index of the closure of ``<beta>`` in the level-``m`` truncation of
    the split torus, with ``beta`` built from a norm-``l`` element.
    """
    validate.imaginary(F)
    validate.level(m)
    P = _require_split(F, p)
    found = torus_element(F, l)
    if found is None:
        raise ValueError("{} is not a norm from {}".format(l, F))
    _, beta = found
    ring = ResidueRing(F, P, m)
    G = fingroup.units_mod(p ** m)
    image = split_image(ring, beta)
    H = fingroup.closure(G, [image])
    _, mu = quadfield.roots_of_unity_generator(F)
    return UnitaryIndex(fingroup.index(G, H), mu, beta, image, m)
