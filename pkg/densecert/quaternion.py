#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# quaternion.py

"""
Maximal orders in definite quaternion algebras over Q and the finite-level
closure of their ``S``-unit groups.

The algebra ``(a, b)`` has basis ``1, i, j, k`` with ``i^2 = a``,
``j^2 = b`` and ``k = ij = -ji``. An order is stored by a basis of four
quaternions; elements of the order are integer coordinate vectors in that
basis, multiplied through an integral table of structure constants.
"""

import collections
import logging
from fractions import Fraction
from math import isqrt

import numpy as np
from sympy import Matrix, nextprime, sqrt_mod

from . import config, constants, exceptions, fingroup, utils, validate
from .cache import cache
from .models import fmt
from .registry import Registry

log = logging.getLogger(__name__)


class QuatAlgebra(collections.namedtuple("QuatAlgebra", ["a", "b"])):
    """The definite algebra ``(a, b)`` over Q, with ``a, b < 0``."""

    __slots__ = ()

    def __new__(cls, a, b):
        if a >= 0 or b >= 0:
            raise ValueError(
                "a definite algebra needs a, b < 0; got ({}, {})".format(a, b)
            )
        return super().__new__(cls, a, b)

    def __call__(self, *coords):
        return Quaternion(self, *coords)

    def mul(self, x, y):
        """Product of coordinate 4-tuples over ``1, i, j, k``."""
        a, b = self.a, self.b
        x0, x1, x2, x3 = x
        y0, y1, y2, y3 = y
        return (
            x0 * y0 + a * x1 * y1 + b * x2 * y2 - a * b * x3 * y3,
            x0 * y1 + x1 * y0 - b * x2 * y3 + b * x3 * y2,
            x0 * y2 + x2 * y0 + a * x1 * y3 - a * x3 * y1,
            x0 * y3 + x3 * y0 + x1 * y2 - x2 * y1,
        )

    def __str__(self):
        return "({}, {})_Q".format(self.a, self.b)


class Quaternion:
    """An element of a quaternion algebra with rational coordinates."""

    __slots__ = ("algebra", "coords")

    def __init__(self, algebra, x0=0, x1=0, x2=0, x3=0):
        self.algebra = algebra
        self.coords = tuple(Fraction(x) for x in (x0, x1, x2, x3))

    def __add__(self, other):
        coords = (x + y for x, y in zip(self.coords, other.coords))
        return Quaternion(self.algebra, *coords)

    def __sub__(self, other):
        return self + -other

    def __neg__(self):
        return Quaternion(self.algebra, *(-x for x in self.coords))

    def __mul__(self, other):
        if isinstance(other, Quaternion):
            coords = self.algebra.mul(self.coords, other.coords)
            return Quaternion(self.algebra, *coords)
        return Quaternion(self.algebra, *(x * other for x in self.coords))

    __rmul__ = __mul__

    def conjugate(self):
        x0, x1, x2, x3 = self.coords
        return Quaternion(self.algebra, x0, -x1, -x2, -x3)

    def nrd(self):
        """Reduced norm ``x conj(x)``.

        >>> A = QuatAlgebra(-1, -1)
        >>> A(1, 1, 1, 1).nrd()
        Fraction(4, 1)
        """
        a, b = self.algebra.a, self.algebra.b
        x0, x1, x2, x3 = self.coords
        return x0 * x0 - a * x1 * x1 - b * x2 * x2 + a * b * x3 * x3

    def trd(self):
        return 2 * self.coords[0]

    def __eq__(self, other):
        return (
            isinstance(other, Quaternion)
            and self.algebra == other.algebra
            and self.coords == other.coords
        )

    def __hash__(self):
        return hash((self.algebra, self.coords))

    def __str__(self):
        terms = [
            "{}{}".format(x, unit)
            for x, unit in zip(self.coords, ("", "i", "j", "k"))
            if x
        ]
        return " + ".join(terms) if terms else "0"

    def __repr__(self):
        return "Quaternion({}, {})".format(self.algebra, self.coords)

    def to_json(self):
        return {"algebra": list(self.algebra), "coords": list(self.coords)}


# Orders
# =============================================================================


def _coordinates(inverse, x):
    return tuple(sum(x[r] * inverse[r][c] for r in range(4)) for c in range(4))


class QuatOrder:
    """A Z-order with basis ``e_0, ..., e_3`` in a definite algebra.

    Attributes:
        algebra (QuatAlgebra): The algebra.
        basis (list[Quaternion]): The basis.
        table (tuple): ``table[r][s]`` is the coordinate vector of
            ``e_r e_s``.
        one (tuple[int]): Coordinates of ``1``.
        traces (tuple[int]): ``Trd(e_r)``.
        gram (np.ndarray): ``Trd(e_r conj(e_s))``; ``Nrd(v) = v G v / 2``.
        discriminant (int): ``sqrt(det G)``.

    Raises:
        ValueError: If the basis does not span a ring containing 1.
    """

    def __init__(self, algebra, basis):
        self.algebra = algebra
        self.basis = [
            e if isinstance(e, Quaternion) else algebra(*e) for e in basis
        ]
        rows = [list(e.coords) for e in self.basis]
        inverse = Matrix(rows).inv()
        self._inverse = [
            [Fraction(int(inverse[r, c].p), int(inverse[r, c].q)) for c in range(4)]
            for r in range(4)
        ]
        self.table = tuple(
            tuple(self._integral(e * f) for f in self.basis) for e in self.basis
        )
        self.one = self._integral(algebra(1))
        self.traces = tuple(int(e.trd()) for e in self.basis)
        self.gram = np.array(
            [[int((e * f.conjugate()).trd()) for f in self.basis] for e in self.basis],
            dtype=np.int64,
        )
        det = int(Matrix(self.gram.tolist()).det())
        self.discriminant = isqrt(det)
        if self.discriminant ** 2 != det:
            raise ValueError("Gram determinant {} is not a square".format(det))

    def _integral(self, x):
        coords = _coordinates(self._inverse, x.coords)
        if any(c.denominator != 1 for c in coords):
            raise ValueError("{} is not in the span of the basis".format(x))
        return tuple(int(c) for c in coords)

    def coordinates(self, x):
        """Coordinates of the quaternion ``x``, which must lie in the order."""
        return self._integral(x)

    def quaternion(self, v):
        """The quaternion with coordinate vector ``v``."""
        result = self.algebra(0)
        for c, e in zip(v, self.basis):
            result = result + e * c
        return result

    def mul(self, u, v, modulus=None):
        w = [0, 0, 0, 0]
        table = self.table
        for r, ur in enumerate(u):
            if not ur:
                continue
            row = table[r]
            for s, vs in enumerate(v):
                if not vs:
                    continue
                c = ur * vs
                e = row[s]
                for t in range(4):
                    w[t] += c * e[t]
        if modulus is not None:
            return tuple(x % modulus for x in w)
        return tuple(w)

    def trd(self, v):
        return sum(x * t for x, t in zip(v, self.traces))

    def nrd(self, v):
        v = np.asarray(v, dtype=np.int64)
        return int(v @ self.gram @ v) // 2

    def conjugate(self, v, modulus=None):
        t = self.trd(v)
        w = tuple(t * o - x for o, x in zip(self.one, v))
        if modulus is not None:
            return tuple(x % modulus for x in w)
        return w

    def units(self):
        """The unit group ``O^*``, as coordinate vectors."""
        return norm_elements(self, 1)

    def __str__(self):
        return "Order of discriminant {} in {}".format(self.discriminant, self.algebra)

    def __repr__(self):
        return fmt.make_repr(self, ["algebra", "basis"])

    def to_json(self):
        return {
            "algebra": list(self.algebra),
            "basis": self.basis,
            "gram": self.gram.tolist(),
            "discriminant": self.discriminant,
            "one": list(self.one),
        }


def _auxiliary_prime(p):
    # q = 3 mod 4 with (p | q) = -1, and c with q | c^2 p + 1.
    q = 3
    while True:
        if q % 4 == 3 and utils.kronecker(p, q) == -1:
            c = min(sqrt_mod(-pow(p, -1, q) % q, q, all_roots=True))
            return q, c
        q = nextprime(q)


class PresentationRegistry(Registry):
    """Storage for maximal-order presentations, keyed by the residue class
    of ``p`` they cover.

    Each entry takes ``p`` and returns ``(algebra, basis)``; its ``covers``
    attribute tells whether it applies to ``p``.
    """

    desc = "presentations"


PRESENTATIONS = PresentationRegistry()

HALF, QUARTER = Fraction(1, 2), Fraction(1, 4)


@PRESENTATIONS.register("2", covers=lambda p: p == 2)
def _hurwitz(p):
    return QuatAlgebra(-1, -1), [
        (1, 0, 0, 0),
        (0, 1, 0, 0),
        (0, 0, 1, 0),
        (HALF, HALF, HALF, HALF),
    ]


@PRESENTATIONS.register("3 mod 4", covers=lambda p: p % 4 == 3)
def _three_mod_four(p):
    return QuatAlgebra(-1, -p), [
        (1, 0, 0, 0),
        (0, 1, 0, 0),
        (HALF, 0, HALF, 0),
        (0, HALF, 0, HALF),
    ]


@PRESENTATIONS.register("5 mod 8", covers=lambda p: p % 8 == 5)
def _five_mod_eight(p):
    return QuatAlgebra(-2, -p), [
        (HALF, 0, HALF, HALF),
        (0, QUARTER, HALF, QUARTER),
        (0, 0, 1, 0),
        (0, 0, 0, 1),
    ]


@PRESENTATIONS.register("1 mod 8", covers=lambda p: p % 8 == 1)
def _one_mod_eight(p):
    q, c = _auxiliary_prime(p)
    return QuatAlgebra(-p, -q), [
        (HALF, 0, HALF, 0),
        (0, HALF, 0, HALF),
        (0, 0, Fraction(1, q), Fraction(c, q)),
        (0, 0, 0, 1),
    ]


def residue_class(p):
    """The key of ``PRESENTATIONS`` covering ``p``.

    >>> [residue_class(p) for p in (2, 7, 13, 17)]
    ['2', '3 mod 4', '5 mod 8', '1 mod 8']
    """
    return PRESENTATIONS.first(lambda presentation: presentation.covers(p))


def bpinf_presentation(p):
    """Return ``(algebra, basis)`` of a maximal order of the algebra ramified
    exactly at ``p`` and infinity.

    Raises:
        UnsupportedPrimeError: For ``p = 1 mod 4`` above
            ``config.QUATERNION_PRESENTATION_LIMIT``.
    """
    validate.prime(p)
    if p % 4 == 1 and p > config.QUATERNION_PRESENTATION_LIMIT:
        raise exceptions.UnsupportedPrimeError(
            "no maximal order presentation for p = {} above {}".format(
                p, config.QUATERNION_PRESENTATION_LIMIT
            )
        )
    return PRESENTATIONS[residue_class(p)](p)


@cache(enabled_option="CACHE_LOCAL_QUOTIENTS")
def make_bpinf(p):
    """A maximal order of the quaternion algebra ramified at ``{p, oo}``.

    Raises:
        UnsupportedPrimeError: If no presentation is available, or the
            presentation fails its discriminant check.

    >>> make_bpinf(5).discriminant
    5
    """
    A, basis = bpinf_presentation(p)
    O = QuatOrder(A, basis)
    if O.discriminant != p:
        raise exceptions.UnsupportedPrimeError(
            "presentation for p = {} has discriminant {}".format(p, O.discriminant)
        )
    log.debug("Built %s", O)
    return O


# Norm forms
# =============================================================================


def box_bounds(O, n):
    """Coordinate bounds of the ellipsoid ``Nrd(v) <= n``."""
    inverse = np.linalg.inv(O.gram.astype(float))
    return [isqrt(int(2 * n * inverse[r, r]) + 1) + 1 for r in range(4)]


def norm_elements(O, n):
    """All ``v`` in ``O`` with ``Nrd(v) = n``, sorted.

    The box around the ellipsoid is scanned one slab of the first coordinate
    at a time.

    >>> len(norm_elements(make_bpinf(2), 1))
    24
    """
    validate.positive(n, "n")
    bounds = box_bounds(O, n)
    rest = [np.arange(-b, b + 1, dtype=np.int64) for b in bounds[1:]]
    grid = np.stack(np.meshgrid(*rest, indexing="ij"), axis=-1).reshape(-1, 3)
    if len(grid) > config.ELEMENT_CAP:
        raise exceptions.ClosureSizeError(
            "norm-{} box slab has {} points; the cap is {}".format(
                n, len(grid), config.ELEMENT_CAP
            )
        )
    G = O.gram
    found = []
    for x0 in range(-bounds[0], bounds[0] + 1):
        vectors = np.concatenate(
            [np.full((len(grid), 1), x0, dtype=np.int64), grid], axis=1
        )
        norms = np.einsum("ni,ij,nj->n", vectors, G, vectors) // 2
        found.extend(tuple(int(x) for x in v) for v in vectors[norms == n])
    return sorted(found)


def unit_action_is_free(O, elements):
    """Whether ``O^*`` acts freely by left multiplication on ``elements``,
    a union of orbits.
    """
    units = O.units()
    elements = set(elements)
    for x in elements:
        orbit = {O.mul(u, x) for u in units}
        if len(orbit) != len(units) or not orbit <= elements:
            return False
    return True


# Local unit groups
# =============================================================================


class LocalQuotientGroup:
    """The unit group of ``O/p^m O`` with its reduced norm map.

    Attributes:
        order (QuatOrder): The quaternion order.
        p (int): The prime.
        m (int): The level.
        modulus (int): ``p^m``.
        group (FiniteGroup): The (generally nonabelian) unit group.
    """

    def __init__(self, order, p, m, group):
        self.order = order
        self.p = p
        self.m = m
        self.modulus = p ** m
        self.group = group

    def reduce(self, v):
        return tuple(x % self.modulus for x in v)

    def norm(self, v):
        """Reduced norm of a residue, modulo ``p^m``."""
        return self.order.nrd(v) % self.modulus

    def scalar(self, c):
        """The residue of the integer ``c``."""
        return self.reduce(tuple(c * o for o in self.order.one))

    def __str__(self):
        return "(O/{}^{} O)^* of order {}".format(self.p, self.m, self.group.order)

    def __repr__(self):
        return fmt.make_repr(self, ["p", "m"])

    def to_json(self):
        return {"p": self.p, "m": self.m, "unit_count": self.group.order}


def _residue_array(modulus):
    r = np.arange(modulus, dtype=np.int64)
    return np.stack(np.meshgrid(r, r, r, r, indexing="ij"), axis=-1).reshape(-1, 4)


def local_units(O, p, m):
    """The unit group of ``O/p^m O``.

    A residue is a unit iff its reduced norm is prime to ``p``.

    Raises:
        ClosureSizeError: If ``p^(4m)`` exceeds ``config.ELEMENT_CAP``.
    """
    validate.prime(p)
    validate.level(m)
    if m > config.QUATERNION_MAX_LEVEL:
        raise ValueError(
            "level {} exceeds QUATERNION_MAX_LEVEL = {}".format(
                m, config.QUATERNION_MAX_LEVEL
            )
        )
    modulus = p ** m
    if modulus ** 4 > config.ELEMENT_CAP:
        raise exceptions.ClosureSizeError(
            "O/{}^{} O has {} elements; the cap is {}".format(
                p, m, modulus ** 4, config.ELEMENT_CAP
            )
        )
    residues = _residue_array(modulus)
    norms = np.einsum("ni,ij,nj->n", residues, O.gram, residues) // 2
    units = [tuple(int(x) for x in v) for v in residues[norms % p != 0]]

    def op(u, v):
        return O.mul(u, v, modulus)

    def inverse(v):
        return tuple(
            x * pow(O.nrd(v), -1, modulus) % modulus
            for x in O.conjugate(v, modulus)
        )

    identity = tuple(x % modulus for x in O.one)
    group = fingroup.FiniteGroup(
        units, op, identity, inverse, name="(O/{}^{} O)^*".format(p, m), abelian=False
    )
    return LocalQuotientGroup(O, p, m, group)


class ClosureReport:
    """Outcome of ``closure_check``.

    Attributes:
        p, l, m, k_max (int): The inputs.
        unit_count (int): ``|(O/p^m O)^*|``.
        target_order (int): Order of ``{u : Nrd(u) in <l> mod p^m}``.
        orders (list[int]): Order of the closure after adding the
            norm-``l^k`` elements, for ``k = 1, ..., k_max``.
        norm_counts (list[int]): Number of elements of norm ``l^k``.
        generator_count (int): Number of distinct generator images.
        contained (bool): Whether the closure lies inside the target group.
    """

    def __init__(
        self,
        p,
        l,
        m,
        k_max,
        unit_count,
        target_order,
        orders,
        norm_counts,
        generator_count,
        contained=True,
    ):
        self.p = p
        self.l = l
        self.m = m
        self.k_max = k_max
        self.unit_count = unit_count
        self.target_order = target_order
        self.orders = orders
        self.norm_counts = norm_counts
        self.generator_count = generator_count
        self.contained = contained

    @property
    def closure_order(self):
        return self.orders[-1]

    @property
    def index(self):
        return self.target_order // self.closure_order

    @property
    def stabilized(self):
        return len(self.orders) > 1 and self.orders[-1] == self.orders[-2]

    @property
    def stable_k(self):
        """The least ``k`` at which the closure reached its final order."""
        return self.orders.index(self.closure_order) + 1

    @property
    def verdict(self):
        if not self.contained:
            return "failed"
        if self.index == 1:
            return "verified"
        if not self.stabilized:
            return constants.INCONCLUSIVE
        return "failed"

    def __str__(self):
        return "ClosureReport(p={}, l={}, m={}, index {})".format(
            self.p, self.l, self.m, self.index
        )

    def __repr__(self):
        return fmt.make_repr(self, ["p", "l", "m", "k_max"])

    def to_json(self):
        return {
            "p": self.p,
            "l": self.l,
            "m": self.m,
            "k_max": self.k_max,
            "unit_count": self.unit_count,
            "target_order": self.target_order,
            "closure_order": self.closure_order,
            "index": self.index,
            "orders": self.orders,
            "norm_counts": self.norm_counts,
            "generator_count": self.generator_count,
            "contained": self.contained,
            "stabilized": self.stabilized,
            "stable_k": self.stable_k,
        }


def closure_check(p, l, m, k_max=3):
    """Compare the closure of the ``S``-unit images in ``(O/p^m O)^*`` with
    the group of residues whose norm lies in the closure of ``<l>``.

    The generators are the units of ``O``, the elements of norm ``l^k`` for
    ``k <= k_max`` and the scalar ``1/l``. Positivity at infinity removes
    ``-1`` from the norm group, so the target is cut out by ``<l>`` alone.
    A closure leaving the target group yields a ``'failed'`` report.
    """
    validate.prime(l, name="l")
    validate.positive(k_max, "k_max")
    if l == p:
        raise ValueError("l and p must differ; both are {}".format(p))
    O = make_bpinf(p)
    L = local_units(O, p, m)
    G = L.group

    norm_group = fingroup.units_mod(L.modulus)
    X = fingroup.closure(norm_group, [l % L.modulus])
    target = {u for u in G if L.norm(u) in X}

    gens = [L.reduce(u) for u in O.units()]
    gens.append(L.scalar(pow(l, -1, L.modulus)))
    orders, norm_counts = [], []
    H = None
    for k in range(1, k_max + 1):
        elements = norm_elements(O, l ** k)
        norm_counts.append(len(elements))
        gens.extend(L.reduce(v) for v in elements)
        gens = list(dict.fromkeys(gens))
        H = fingroup.closure(G, gens)
        orders.append(H.order)
        log.debug("k = %s: closure of order %s, target %s", k, H.order, len(target))
    contained = H.members <= target
    if not contained:
        log.warning("closure of S-unit images leaves the norm target group")
    report = ClosureReport(
        p,
        l,
        m,
        k_max,
        G.order,
        len(target),
        orders,
        norm_counts,
        len(gens),
        contained,
    )
    log.info("%s", report)
    return report

