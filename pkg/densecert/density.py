#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# density.py

"""
Density of sign-restricted S-unit groups in local unit groups.

For a prime ``P`` of a quadratic field and a set ``Sigma`` of real places,
``X_S`` is the group of ``S``-units positive at every place of ``Sigma``.
Its closure in ``U_P`` is everything exactly when its image generates the
finite quotient ``U_P / (U_P^(1))^p``. The invariant ``g(P, Sigma)`` is the
minimal number of generators of that quotient modulo the image of the
sign-restricted units ``E+``; it is the least possible size of ``S``.
"""

import collections
import logging

from sympy import primerange

from . import config, constants, exceptions, fingroup, quadfield, utils, validate
from .compute.parallel import CandidateSearch
from .localunits import local_degree, resolve_prime, unit_quotient
from .models import fmt

log = logging.getLogger(__name__)


class SUnitBasis(
    collections.namedtuple(
        "SUnitBasis", ["sigma", "torsion", "free", "primes", "powers", "realized_full"]
    )
):
    """Generators of the realized subgroup of ``X_S``.

    Attributes:
        sigma (tuple[int]): The real places.
        torsion (list[QuadElt]): Sign-compatible roots of unity.
        free (list[QuadElt]): The unit generator, then one generator per
            prime of ``S``.
        primes (list[Ideal]): The primes of ``S``.
        powers (list[int]): For each prime of ``S``, the exponent ``k`` of
            the smallest power with a sign-compatible generator.
        realized_full (bool): Whether every ``k`` is 1, so that the
            generated group is all of ``X_S``.
    """

    __slots__ = ()

    @property
    def elements(self):
        return list(self.torsion) + list(self.free)

    def to_json(self):
        return {
            "sigma": list(self.sigma),
            "torsion": list(self.torsion),
            "free": list(self.free),
            "primes": list(self.primes),
            "powers": list(self.powers),
            "realized_full": self.realized_full,
        }


def e_plus(F, sigma=()):
    """Generators of ``E+``, the units positive at every place of ``sigma``.

    >>> basis = e_plus(quadfield.make_field(2), (0, 1))
    >>> print(basis.free[0])
    3 + 2ω
    """
    sigma = tuple(sorted(sigma))
    validate.sigma(F, sigma)
    units = quadfield.unit_group(F)
    if units.fundamental is None:
        return SUnitBasis(sigma, [units.torsion_generator], [], [], [], True)
    eps = units.fundamental
    torsion = [] if sigma else [-F.one]
    # The sign-restricted units form a cyclic group when sigma is nonempty;
    # eps^2 is totally positive, so the search ends there.
    for candidate in (eps, -eps, eps ** 2):
        if candidate.is_positive_at(sigma):
            return SUnitBasis(sigma, torsion, [candidate], [], [], True)
    raise exceptions.FieldError("no sign-compatible unit found")  # pragma: no cover


def s_unit_basis(F, S, sigma=()):
    """Extend ``e_plus`` by a generator of the smallest sign-compatible
    principal power of each prime of ``S``.

    Args:
        S (Iterable): Rational primes (expanded to every prime above them) or
            ``Ideal`` objects.

    Raises:
        GeneratorSearchBoundError: If principality of a power cannot be
            decided within the search bound.
    """
    base = e_plus(F, sigma)
    primes = sorted(set(quadfield.flatten_primes(F, S)))
    free, powers = list(base.free), []
    for Q in primes:
        generator, k = _smallest_principal_power(F, Q, base.sigma)
        if generator is not None:
            free.append(generator)
        powers.append(k)
    realized_full = all(k == 1 for k in powers)
    return SUnitBasis(base.sigma, base.torsion, free, primes, powers, realized_full)


def _smallest_principal_power(F, Q, sigma):
    power = quadfield.Ideal.unit(F)
    for k in range(1, config.PRINCIPAL_POWER_CAP + 1):
        power = power * Q
        g = quadfield.principal_generator(F, power, sigma)
        if g is not None:
            log.debug("%s^%s has sign-compatible generator %s", Q, k, g)
            return g, k
    log.warning(
        "No sign-compatible generator of a power of %s up to exponent %s",
        Q,
        config.PRINCIPAL_POWER_CAP,
    )
    return None, None


class DensityReport:
    """Outcome of a density decision.

    Attributes:
        verdict (str): ``'dense'``, ``'not-dense'`` or ``'inconclusive'``.
        g (int): Minimal number of generators of the quotient modulo the
            image of the basis; ``None`` when inconclusive.
        quotient_order (int): Order of ``U_P / (U_P^(1))^p``.
        generator_images (list): Images of the basis elements.
        basis (SUnitBasis): The generators used.
        prime (Ideal): The target prime.
        reason (str): Why the verdict is inconclusive, if it is.
    """

    def __init__(
        self, verdict, g, quotient_order, generator_images, basis, prime, reason=None
    ):
        self.verdict = verdict
        self.g = g
        self.quotient_order = quotient_order
        self.generator_images = generator_images
        self.basis = basis
        self.prime = prime
        self.reason = reason

    @property
    def dense(self):
        """``True``, ``False``, or ``None`` when inconclusive."""
        if self.verdict == constants.INCONCLUSIVE:
            return None
        return self.verdict == "dense"

    def __str__(self):
        return "DensityReport({}, g={}, quotient order {})".format(
            self.verdict, self.g, self.quotient_order
        )

    def __repr__(self):
        return fmt.make_repr(self, ["verdict", "g", "quotient_order"])

    def to_json(self):
        return {
            "verdict": self.verdict,
            "dense": self.dense,
            "g": self.g,
            "prime": self.prime,
            "quotient_order": self.quotient_order,
            "generator_images": [list(x) for x in self.generator_images],
            "basis": self.basis,
            "reason": self.reason,
        }


def residual_quotient(Q, elements):
    """The quotient of ``Q.group`` by the closure of the images of
    ``elements``, with the images themselves.
    """
    images = [Q.reduce(x) for x in elements]
    H = fingroup.closure(Q.group, images)
    return fingroup.quotient(Q.group, H), images


def _decide(F, P, basis):
    Q = unit_quotient(F, P)
    R, images = residual_quotient(Q, basis.elements)
    g = fingroup.min_generators(R)
    if g == 0:
        verdict = "dense"
    elif basis.realized_full:
        verdict = "not-dense"
    else:
        verdict = constants.INCONCLUSIVE
    reason = None
    if verdict == constants.INCONCLUSIVE:
        reason = "S-unit group only realized up to finite index"
    return DensityReport(verdict, g, Q.order, images, basis, P, reason)


def g_invariant(F, prime, sigma=()):
    """Compute ``g(P, sigma)``; the report's ``g`` is the invariant.

    >>> F = quadfield.make_field(2)
    >>> g_invariant(F, 2, (0, 1)).g
    3
    """
    P = resolve_prime(F, prime)
    return _decide(F, P, e_plus(F, sigma))


def is_dense(F, S, sigma, prime):
    """Decide whether ``X_S`` is dense in ``U_P``.

    A search-bound failure while building the basis yields an
    ``'inconclusive'`` report instead of an exception.
    """
    P = resolve_prime(F, prime)
    validate.disjoint(quadfield.flatten_primes(F, S), P, name="S")
    try:
        basis = s_unit_basis(F, S, sigma)
    except exceptions.GeneratorSearchBoundError as e:
        log.info("Density of S-units at %s is inconclusive: %s", P, e)
        Q = unit_quotient(F, P)
        return DensityReport(constants.INCONCLUSIVE, None, Q.order, [], None, P, str(e))
    return _decide(F, P, basis)


def local_bound(F, prime, g):
    """Check ``g <= [k_P:Q_p] + (1 if mu_p(k_P) is nontrivial else 0)``."""
    P = resolve_prime(F, prime)
    Q = unit_quotient(F, P)
    return g <= local_degree(P) + (1 if Q.mu_p > 1 else 0)


def minimal_witness_check(F, S, sigma, prime):
    """Check that no proper subset of ``S`` gives a dense group."""
    S = list(S)
    for subset in utils.powerset(S):
        if len(subset) == len(S):
            continue
        if is_dense(F, list(subset), sigma, prime).dense:
            return False
    return True


# Witness search
# =============================================================================


class WitnessResult:
    """Outcome of a witness-prime search.

    Attributes:
        found (bool): Whether every target was matched.
        g (int): The invariant ``g(P, sigma)``.
        S (list[Ideal]): Matched primes, in target order (``None`` for
            unmatched targets).
        generators (list[QuadElt]): Their sign-compatible generators.
        targets (tuple): The generating tuple of the residual quotient.
        unmatched (list[int]): Indices of unmatched targets.
        bound (int): The search bound.
        scanned (int): Number of candidate primes examined.
        skipped (list[Ideal]): Candidates skipped because principality could
            not be decided.
    """

    def __init__(self, g, targets, bound):
        self.g = g
        self.targets = targets
        self.bound = bound
        self.S = [None] * g
        self.generators = [None] * g
        self.scanned = 0
        self.skipped = []

    @property
    def unmatched(self):
        return [i for i, Q in enumerate(self.S) if Q is None]

    @property
    def found(self):
        return not self.unmatched

    def match(self, ideal, generator, image):
        """Assign the candidate to the first unmatched target equal to its
        image. Return whether it was used.
        """
        for i in self.unmatched:
            if self.targets[i] == image:
                self.S[i] = ideal
                self.generators[i] = generator
                return True
        return False

    def __str__(self):
        return "WitnessResult(found={}, S={})".format(
            self.found, [str(Q) for Q in self.S]
        )

    def __repr__(self):
        return fmt.make_repr(self, ["g", "S", "bound"])

    def to_json(self):
        return {
            "found": self.found,
            "g": self.g,
            "S": self.S,
            "generators": self.generators,
            "targets": [list(x) for x in self.targets],
            "unmatched": self.unmatched,
            "bound": self.bound,
            "scanned": self.scanned,
            "skipped": self.skipped,
        }


def candidate_primes(F, bound, exclude):
    """Degree-one primes above rational primes ``l <= bound`` not in
    ``exclude``, ordered by ``l`` and then by HNF.
    """
    for l in primerange(2, bound + 1):
        if l in exclude:
            continue
        for Q in sorted(quadfield.prime_ideals_above(F, l)):
            if quadfield.residue_degree(Q) == 1:
                yield Q


class WitnessSearch(CandidateSearch):
    """Scan candidate primes for generators hitting the target elements.

    Context: ``(Q, R, sigma, result)`` where ``Q`` is the unit quotient and
    ``R`` the residual quotient.
    """

    description = "Witness primes"

    @staticmethod
    def evaluate(ideal, F, Q, R, sigma):  # pylint: disable=arguments-differ
        try:
            g = quadfield.principal_generator(F, ideal, sigma)
        except exceptions.GeneratorSearchBoundError:
            return (ideal, None, None, True)
        if g is None:
            return (ideal, None, None, False)
        return (ideal, g, R.project(Q.reduce(g)), False)

    def __init__(self, candidates, F, Q, R, sigma, result):
        self.result = result
        super().__init__(candidates, F, Q, R, sigma)

    def initial(self):
        return self.result

    def accept(self, value, result):
        ideal, generator, image, undecided = value
        result.scanned += 1
        if undecided:
            log.debug("Skipping %s: principality undecided", ideal)
            result.skipped.append(ideal)
        elif generator is not None and result.match(ideal, generator, image):
            log.debug("Matched %s with generator %s", ideal, generator)
            if result.found:
                self.done = True
        return result


def witness_primes(F, prime, sigma=(), bound=None, exclude=()):
    """Search for ``S`` with ``|S| = g(P, sigma)`` and ``X_S`` dense.

    Returns:
        WitnessResult: ``found`` is ``False`` on exhaustion, with the
        unmatched targets listed.
    """
    bound = config.WITNESS_SEARCH_BOUND if bound is None else bound
    if bound < 2:
        raise ValueError("search bound must be at least 2; got {}".format(bound))
    P = resolve_prime(F, prime)
    sigma = tuple(sorted(sigma))
    Q = unit_quotient(F, P)
    R, _ = residual_quotient(Q, e_plus(F, sigma).elements)
    targets = fingroup.minimal_generating_tuple(R)
    result = WitnessResult(len(targets), targets, bound)
    if not targets:
        return result
    exclude = set(exclude) | {quadfield.ideal_prime(P)}
    candidates = candidate_primes(F, bound, exclude)
    result = WitnessSearch(candidates, F, Q, R, sigma, result).run()
    if result.found:
        log.info("Witness primes for %s: %s", P, [str(x) for x in result.S])
    else:
        log.info(
            "Witness search for %s exhausted below %s; unmatched %s",
            P,
            bound,
            result.unmatched,
        )
    return result
